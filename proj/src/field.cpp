#include "biqlat/field.hpp"

#include <cmath>
#include <stdexcept>

#include "biqlat/errors.hpp"

namespace biqlat {

FieldElement FieldElement::basis_vector(const Int& q, int index) {
    if (index < 0 || index > 7) throw std::invalid_argument("basis_vector: index out of range");
    FieldElement x(q);
    x.c_[static_cast<std::size_t>(index)] = 1;
    return x;
}

bool FieldElement::is_zero() const {
    for (const Rat& v : c_)
        if (v != 0) return false;
    return true;
}

bool FieldElement::in_subfield_k() const {
    return c_[2] == 0 && c_[3] == 0 && c_[4] == 0 && c_[5] == 0;
}

void FieldElement::require_same_field(const FieldElement& o) const {
    if (q_ != o.q_)
        throw FieldMismatchError("operands live in different fields (q = " + q_.str() +
                                 " vs q = " + o.q_.str() + ")");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    require_same_field(o);
    FieldElement out(q_);
    for (int i = 0; i < 8; ++i) out.c_[i] = c_[i] + o.c_[i];
    return out;
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    require_same_field(o);
    FieldElement out(q_);
    for (int i = 0; i < 8; ++i) out.c_[i] = c_[i] - o.c_[i];
    return out;
}

FieldElement FieldElement::operator-() const {
    FieldElement out(q_);
    for (int i = 0; i < 8; ++i) out.c_[i] = -c_[i];
    return out;
}

FieldElement FieldElement::scaled(const Rat& c) const {
    FieldElement out(q_);
    for (int i = 0; i < 8; ++i) out.c_[i] = c * c_[i];
    return out;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    require_same_field(o);
    // Basis index encodes exponents: index = a + 2b + 4c for sqrt2^a sqrtq^b i^c.
    // Products fold back with sqrt2^2 = 2, sqrtq^2 = q, i^2 = -1.
    FieldElement out(q_);
    for (int i = 0; i < 8; ++i) {
        if (c_[i] == 0) continue;
        int a1 = i & 1, b1 = (i >> 1) & 1, c1 = (i >> 2) & 1;
        for (int j = 0; j < 8; ++j) {
            if (o.c_[j] == 0) continue;
            int a2 = j & 1, b2 = (j >> 1) & 1, c2 = (j >> 2) & 1;
            Rat coef = c_[i] * o.c_[j];
            if (a1 + a2 == 2) coef *= 2;
            if (b1 + b2 == 2) coef *= Rat(q_);
            if (c1 + c2 == 2) coef = -coef;
            int k = ((a1 + a2) & 1) + 2 * ((b1 + b2) & 1) + 4 * ((c1 + c2) & 1);
            out.c_[k] += coef;
        }
    }
    return out;
}

FieldElement FieldElement::conj() const {
    FieldElement out(q_, c_);
    for (int i = 4; i < 8; ++i) out.c_[i] = -out.c_[i];
    return out;
}

Rat trace_to_q(const FieldElement& x, int degree) {
    if (degree != 4 && degree != 8)
        throw std::invalid_argument("trace_to_q: degree must be 4 or 8");
    if (degree == 4 && !x.in_subfield_k())
        throw SubfieldError("degree-4 trace requested for an element outside K");
    return Rat(degree) * x.coord(0);
}

std::vector<FieldElement> alpha_basis(const Int& q) {
    if (q < 3 || q % 8 != 3)
        throw InvalidQError("residue-class",
                            "alpha_basis: q = " + q.str() + " is not 3 (mod 8)");
    FieldElement a1 = FieldElement::one(q);
    FieldElement a2 = FieldElement::basis_vector(q, 1);
    FieldElement a3(q);
    a3.set_coord(0, Rat(1, 2));
    a3.set_coord(6, Rat(1, 2));
    FieldElement a4(q);
    a4.set_coord(1, Rat(1, 2));
    a4.set_coord(7, Rat(1, 2));
    return {a1, a2, a3, a4};
}

FieldElement assemble(const IntegralCoords& x, const Int& q) {
    auto alphas = alpha_basis(q);
    FieldElement out(q);
    for (int i = 0; i < 4; ++i) out = out + alphas[static_cast<std::size_t>(i)].scaled(Rat(x[static_cast<std::size_t>(i)]));
    return out;
}

Int trace_form(const IntegralCoords& x, const Int& q) {
    if (q < 3 || q % 8 != 3)
        throw InvalidQError("residue-class",
                            "trace_form: q = " + q.str() + " is not 3 (mod 8)");
    Int u = 2 * x[0] + x[2];
    Int v = 2 * x[1] + x[3];
    return u * u + 2 * v * v + q * (x[2] * x[2] + 2 * x[3] * x[3]);
}

std::optional<std::array<Rat, 4>> alpha_coords(const FieldElement& x) {
    if (!x.in_subfield_k()) return std::nullopt;
    Rat x3 = 2 * x.coord(6);
    Rat x4 = 2 * x.coord(7);
    Rat x1 = x.coord(0) - x.coord(6);
    Rat x2 = x.coord(1) - x.coord(7);
    return std::array<Rat, 4>{x1, x2, x3, x4};
}

std::vector<double> embed_canonical(const FieldElement& x, int degree) {
    if (degree != 4 && degree != 8)
        throw std::invalid_argument("embed_canonical: degree must be 4 or 8");
    if (degree == 4 && !x.in_subfield_k())
        throw SubfieldError("degree-4 embedding requested for an element outside K");

    double s2 = std::sqrt(2.0);
    double sq = std::sqrt(x.q().convert_to<double>());
    double s2q = s2 * sq;
    auto d = [&](int i) { return x.coord(i).convert_to<double>(); };

    std::vector<double> out;
    if (degree == 4) {
        // Embeddings of K indexed by the sign of sqrt2; i*sqrtq keeps sign +.
        for (double e2 : {1.0, -1.0}) {
            out.push_back(d(0) + d(1) * e2 * s2);
            out.push_back(d(6) * sq + d(7) * e2 * s2q);
        }
    } else {
        // Embeddings of L with i fixed, signs of sqrt2 and sqrtq free.
        for (auto [e2, eq] : {std::pair{1.0, 1.0}, {1.0, -1.0}, {-1.0, 1.0}, {-1.0, -1.0}}) {
            out.push_back(d(0) + d(1) * e2 * s2 + d(2) * eq * sq + d(3) * e2 * eq * s2q);
            out.push_back(d(4) + d(5) * e2 * s2 + d(6) * eq * sq + d(7) * e2 * eq * s2q);
        }
    }
    return out;
}

}  // namespace biqlat
