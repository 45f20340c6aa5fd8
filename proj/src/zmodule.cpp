#include "biqlat/zmodule.hpp"

#include <stdexcept>

#include "biqlat/errors.hpp"

namespace biqlat {

GramMatrix gram(const ModuleBasis& basis) {
    const int n = static_cast<int>(basis.elements.size());
    if (n != basis.degree) throw std::invalid_argument("gram: element count does not match degree");
    GramMatrix g(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            FieldElement prod = basis.elements[static_cast<std::size_t>(i)] *
                                basis.elements[static_cast<std::size_t>(j)].conj();
            Rat entry = trace_to_q(prod, basis.degree) / 2;
            g.at(i, j) = entry;
            g.at(j, i) = entry;
        }
    }
    return g;
}

ModuleBasis mjq_basis(const AdmissibleQ& aq) {
    auto a = alpha_basis(aq.q);
    Rat j(aq.j);
    FieldElement z1 = a[0] - a[2].scaled(2);
    FieldElement z2 = a[1] + a[2].scaled(2 * j);
    FieldElement z3 = a[2].scaled(Rat(aq.q));
    FieldElement z4 = a[2].scaled(j) + a[3];
    return ModuleBasis{aq.q, 4, {z1, z2, z3, z4},
                       "M(q=" + aq.q.str() + ",j=" + aq.j.str() + ")"};
}

bool mjq_contains(const IntegralCoords& x, const AdmissibleQ& aq) {
    Int lhs = x[2] + 2 * x[0] - aq.j * (2 * x[1] + x[3]);
    return mod_floor(lhs, aq.q) == 0;
}

Int index_in_ring(const ModuleBasis& basis) {
    if (basis.degree != 4)
        throw std::invalid_argument("index_in_ring: defined for degree-4 bases only");
    IntMat coeff(4, 4);
    for (int i = 0; i < 4; ++i) {
        auto coords = alpha_coords(basis.elements[static_cast<std::size_t>(i)]);
        if (!coords)
            throw DomainError("outside-ring", "basis element " + std::to_string(i + 1) +
                                                  " is not in K");
        for (int j = 0; j < 4; ++j) {
            const Rat& c = (*coords)[static_cast<std::size_t>(j)];
            if (denominator(c) != 1)
                throw DomainError("outside-ring",
                                  "basis element " + std::to_string(i + 1) +
                                      " is not in the ring of integers (coordinate " +
                                      rat_str(c) + ")");
            coeff.at(i, j) = numerator(c);
        }
    }
    Int d = det_bareiss(std::move(coeff));
    if (d == 0) throw DomainError("singular-basis", "elements are not linearly independent");
    return d < 0 ? Int(-d) : d;
}

ModuleBasis doubled_basis(const ModuleBasis& b) {
    if (b.degree != 4)
        throw std::invalid_argument("doubled_basis: input must have degree 4");
    FieldElement i_unit = FieldElement::imaginary_unit(b.q);
    ModuleBasis out{b.q, 8, b.elements, b.label + " + i*" + b.label};
    for (const FieldElement& z : b.elements) out.elements.push_back(i_unit * z);
    return out;
}

CenterDensity center_density(const Rat& min_trace, const Int& disc, const Int& index, int n) {
    if (n != 4 && n != 8) throw std::invalid_argument("center_density: n must be 4 or 8");
    if (min_trace <= 0) throw DomainError("degenerate", "center_density: minimum trace must be positive");
    if (disc <= 0 || index <= 0)
        throw DomainError("degenerate", "center_density: disc and index must be positive");

    Rat num = min_trace * min_trace;
    if (n == 8) num *= num;

    // Pull the largest square s^2 out of disc; disc = s^2 * radicand.
    Int s = isqrt(disc);
    Int radicand = 1;
    if (s * s != disc) {
        s = 1;
        Int rest = disc;
        for (Int d = 2; d * d <= rest && d <= 1000000; ++d) {
            while (rest % (d * d) == 0) {
                rest /= d * d;
                s *= d;
            }
        }
        radicand = rest;
    }
    Int denom = (Int(1) << n) * s * index;
    return CenterDensity{num / Rat(denom), radicand};
}

}  // namespace biqlat
