#pragma once

#include <array>
#include <vector>

#include "biqlat/ints.hpp"

namespace biqlat {

// An element of L = Q(sqrt2, sqrtq, i) with exact rational coordinates over
// the fixed basis
//
//   index:  0    1      2      3        4    5       6       7
//   value:  1   sqrt2  sqrtq  sqrt2q    i   i*sqrt2 i*sqrtq i*sqrt2q
//
// The subfield K = Q(sqrt2, sqrt(-q)) is the span of indices {0, 1, 6, 7}.
// Elements carry the field parameter q; combining elements with different q
// is an error, not a coercion.
class FieldElement {
public:
    explicit FieldElement(Int q) : q_(std::move(q)) {}
    FieldElement(Int q, std::array<Rat, 8> coords) : q_(std::move(q)), c_(std::move(coords)) {}

    static FieldElement basis_vector(const Int& q, int index);
    static FieldElement one(const Int& q) { return basis_vector(q, 0); }
    static FieldElement imaginary_unit(const Int& q) { return basis_vector(q, 4); }

    const Int& q() const { return q_; }
    const Rat& coord(int i) const { return c_[static_cast<std::size_t>(i)]; }
    const std::array<Rat, 8>& coords() const { return c_; }
    void set_coord(int i, Rat v) { c_[static_cast<std::size_t>(i)] = std::move(v); }

    bool is_zero() const;
    // True when the element lies in K, i.e. coordinates 2..5 vanish.
    bool in_subfield_k() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement scaled(const Rat& c) const;

    // Complex conjugation: fixes coordinates 0..3, negates 4..7.
    FieldElement conj() const;

    bool operator==(const FieldElement& o) const { return q_ == o.q_ && c_ == o.c_; }

private:
    void require_same_field(const FieldElement& o) const;

    Int q_;
    std::array<Rat, 8> c_{};
};

// Field trace down to Q.  Every basis vector other than 1 is killed by the
// sign-flip Galois action, so the trace is degree * coord(0).  degree must be
// 4 (trace over K; the element must lie in K) or 8 (trace over L).
Rat trace_to_q(const FieldElement& x, int degree);

// Integer coordinates over the integral basis a1..a4 of the ring of
// integers of K.
using IntegralCoords = std::array<Int, 4>;

// Integral basis of K for q = 3 (mod 8):
//   a1 = 1, a2 = sqrt2, a3 = (1 + i sqrtq)/2, a4 = (sqrt2 + i sqrt2q)/2.
std::vector<FieldElement> alpha_basis(const Int& q);

FieldElement assemble(const IntegralCoords& x, const Int& q);

// Closed form for Tr_{K/Q}(x * conj(x)) of x = sum x_i a_i:
//   (2x1 + x3)^2 + 2(2x2 + x4)^2 + q(x3^2 + 2 x4^2).
Int trace_form(const IntegralCoords& x, const Int& q);

// Rational coordinates of a K-element over the alpha basis; nullopt when the
// element has components outside K.
std::optional<std::array<Rat, 4>> alpha_coords(const FieldElement& x);

// Floating-point image under the canonical embedding, real and imaginary
// parts of the complex embeddings interleaved.  Approximate cross-checks
// only; |embed(x)|^2 = trace_to_q(x * conj(x), degree) / 2.
std::vector<double> embed_canonical(const FieldElement& x, int degree);

}  // namespace biqlat
