#pragma once

#include <cstdint>
#include <optional>

#include "biqlat/matrix.hpp"

namespace biqlat {

// Unimodular change of basis witnessing a scaled isometry:
//   target = (1/scale) * u * source * u^T   entrywise, |det u| = 1.
struct IsometryWitness {
    IntMat u;
    Rat scale;
};

enum class IsometryOutcome {
    Found,
    NotIsometric,  // certified: invariants differ or the search tree is exhausted
    Inconclusive,  // node limit hit before the tree was exhausted
};

struct IsometryResult {
    IsometryOutcome outcome;
    std::optional<IsometryWitness> witness;
};

bool isometry_witness_valid(const GramMatrix& source, const GramMatrix& target,
                            const IsometryWitness& w);

// Backtracking search mapping the target basis onto source vectors of equal
// (rescaled) norm, preserving all pairwise inner products.  The rescaling
// ratio is fixed as target minimum / source minimum; only rational ratios are
// considered.  Candidates are tried in order of norm, then lexicographically.
IsometryResult find_isometry(const GramMatrix& source, const GramMatrix& target,
                             std::uint64_t node_limit = 50000000);

}  // namespace biqlat
