#include "biqlat/numtheory.hpp"

#include <cstdint>
#include <stdexcept>

namespace biqlat {

Factorization factor(const Int& n) {
    if (n < 1) throw std::invalid_argument("factor: n must be >= 1");
    if (n > 1000000000) throw std::invalid_argument("factor: n exceeds the 10^9 trial-division cap");

    Factorization out;
    out.n = n;
    std::uint64_t m = n.convert_to<std::uint64_t>();
    auto push = [&](std::uint64_t p, int e) {
        out.factors.emplace_back(Int(p), e);
        if (e > 1) out.squarefree = false;
    };
    int e2 = 0;
    while (m % 2 == 0) { m /= 2; ++e2; }
    if (e2 > 0) push(2, e2);
    for (std::uint64_t d = 3; d * d <= m; d += 2) {
        if (m % d != 0) continue;
        int e = 0;
        while (m % d == 0) { m /= d; ++e; }
        push(d, e);
    }
    if (m > 1) push(m, 1);
    return out;
}

Int pow_mod(const Int& b, const Int& e, const Int& m) {
    return boost::multiprecision::powm(mod_floor(b, m), e, m);
}

std::optional<Int> sqrt_mod_prime(const Int& a, const Int& p) {
    if (p < 3 || p % 2 == 0) throw std::invalid_argument("sqrt_mod_prime: p must be an odd prime");
    Int r = mod_floor(a, p);
    if (r == 0) throw std::invalid_argument("sqrt_mod_prime: a is divisible by p");
    if (pow_mod(r, (p - 1) / 2, p) != 1) return std::nullopt;

    Int root;
    if (p % 4 == 3) {
        root = pow_mod(r, (p + 1) / 4, p);
    } else {
        // Tonelli-Shanks.  Write p-1 = s * 2^e with s odd.
        Int s = p - 1;
        int e = 0;
        while (s % 2 == 0) { s /= 2; ++e; }
        Int nonres = 2;
        while (pow_mod(nonres, (p - 1) / 2, p) != p - 1) ++nonres;
        Int x = pow_mod(r, (s + 1) / 2, p);
        Int b = pow_mod(r, s, p);
        Int g = pow_mod(nonres, s, p);
        int k = e;
        while (b != 1) {
            Int t = b;
            int m = 0;
            while (t != 1 && m < k) { t = t * t % p; ++m; }
            if (m == k) return std::nullopt;  // p was not prime
            Int gs = pow_mod(g, Int(1) << (k - m - 1), p);
            g = gs * gs % p;
            x = x * gs % p;
            b = b * g % p;
            k = m;
        }
        root = x;
    }
    if (root > (p - 1) / 2) root = p - root;
    return root;
}

namespace {

// a^-1 (mod m) by the extended Euclidean algorithm; a and m must be coprime.
Int inverse_mod(const Int& a, const Int& m) {
    Int old_r = mod_floor(a, m), r = m;
    Int old_s = 1, s = 0;
    while (r != 0) {
        Int qt = old_r / r;
        Int tmp = old_r - qt * r; old_r = r; r = tmp;
        tmp = old_s - qt * s; old_s = s; s = tmp;
    }
    if (old_r != 1) throw std::invalid_argument("inverse_mod: arguments not coprime");
    return mod_floor(old_s, m);
}

}  // namespace

Int crt_pair(const Int& r1, const Int& m1, const Int& r2, const Int& m2) {
    // x = r1 + m1 * t with t = (r2 - r1) / m1 (mod m2)
    Int t = mod_floor((r2 - r1) * inverse_mod(m1, m2), m2);
    return mod_floor(r1 + m1 * t, m1 * m2);
}

std::string_view qreject_kind(QReject r) {
    switch (r) {
        case QReject::ResidueClass: return "residue-class";
        case QReject::NotSquarefree: return "not-squarefree";
        case QReject::FactorResidue: return "factor-residue";
    }
    return "unknown";
}

std::variant<AdmissibleQ, QReject> find_j(const Int& q) {
    if (q < 3 || q % 8 != 3) return QReject::ResidueClass;
    Factorization f = factor(q);
    if (!f.squarefree) return QReject::NotSquarefree;
    for (const auto& [p, e] : f.factors) {
        (void)e;
        Int res = p % 8;
        if (res != 1 && res != 3) return QReject::FactorResidue;
    }

    // Per-prime roots of -2 exist by the residue conditions; combine every
    // sign choice so the smallest nonnegative solution mod q is returned
    // regardless of prime order.
    std::vector<Int> residues{0};
    Int modulus = 1;
    for (const auto& [p, e] : f.factors) {
        (void)e;
        auto root = sqrt_mod_prime(-2, p);
        if (!root) return QReject::FactorResidue;  // unreachable for valid inputs
        std::vector<Int> next;
        next.reserve(residues.size() * 2);
        for (const Int& r : residues) {
            next.push_back(crt_pair(r, modulus, *root, p));
            if (*root != 0 && p - *root != *root)
                next.push_back(crt_pair(r, modulus, p - *root, p));
        }
        residues = std::move(next);
        modulus *= p;
    }
    Int j = residues.front();
    for (const Int& r : residues)
        if (r < j) j = r;
    return AdmissibleQ{q, j, std::move(f)};
}

}  // namespace biqlat
