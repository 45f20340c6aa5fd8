#pragma once

#include <string>
#include <vector>

#include "biqlat/field.hpp"
#include "biqlat/matrix.hpp"
#include "biqlat/numtheory.hpp"

namespace biqlat {

// Ordered basis of a rank-n Z-module inside K (degree 4) or L (degree 8).
struct ModuleBasis {
    Int q;
    int degree = 4;
    std::vector<FieldElement> elements;
    std::string label;
};

// Gram matrix: entry (i, j) = trace_to_q(e_i * conj(e_j), degree) / 2.
GramMatrix gram(const ModuleBasis& basis);

// Basis {z1, z2, z3, z4} of the index-q submodule M_{j,q}:
//   z1 = a1 - 2 a3,  z2 = a2 + 2j a3,  z3 = q a3,  z4 = j a3 + a4.
ModuleBasis mjq_basis(const AdmissibleQ& aq);

// Membership test x3 = -2 x1 + j (2 x2 + x4)  (mod q).
bool mjq_contains(const IntegralCoords& x, const AdmissibleQ& aq);

// |det| of the integer matrix expressing a degree-4 basis over the integral
// basis a1..a4.  Throws when an element has non-integer alpha coordinates.
Int index_in_ring(const ModuleBasis& basis);

// {z1..z4, i z1..i z4}, a rank-8 module over L.
ModuleBasis doubled_basis(const ModuleBasis& b);

// Exact value coeff / sqrt(radicand); radicand = 1 when the discriminant is
// a perfect square (the only case the constructions produce).
struct CenterDensity {
    Rat coeff;
    Int radicand = 1;

    bool exact() const { return radicand == 1; }
    bool operator==(const CenterDensity&) const = default;
};

// Center density (min_trace)^(n/2) / (2^n sqrt(disc) * index) for a rank-n
// submodule of the ring of integers with the given minimum trace.
CenterDensity center_density(const Rat& min_trace, const Int& disc, const Int& index, int n);

}  // namespace biqlat
