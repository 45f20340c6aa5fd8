#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "biqlat/matrix.hpp"

namespace biqlat {

// Rational LDL-style decomposition of a symmetric matrix:
//   x^T G x = sum_i d_i (x_i + sum_{j>i} mu_ij x_j)^2.
// positive_definite is false (and d/mu are partial) when a pivot <= 0 shows up.
struct LdlResult {
    bool positive_definite = false;
    std::vector<Rat> d;
    RatMat mu;
};

LdlResult ldl_decompose(const GramMatrix& g);

struct ShortVectorSet {
    GramMatrix gram;                       // the form that was enumerated
    Rat min_norm;                          // minimal value of x^T G x over nonzero x
    std::vector<std::vector<Int>> vectors; // one representative per +-pair, first
                                           // nonzero coordinate positive, sorted
    std::size_t kissing = 0;               // count including both signs
};

// Exhaustive lattice-point enumeration inside the ellipsoid of squared
// radius seeded by the smallest Gram diagonal entry; exact rational
// arithmetic throughout.  Throws NotPositiveDefiniteError / EnumerationLimitError.
ShortVectorSet shortest_vectors(const GramMatrix& g, std::uint64_t node_limit = 200000000);

// All (representative, norm) pairs with 0 < norm <= bound, sorted by norm
// then lexicographically by coordinates.
std::vector<std::pair<std::vector<Int>, Rat>> enumerate_up_to(
    const GramMatrix& g, const Rat& bound, std::uint64_t node_limit = 200000000);

}  // namespace biqlat
