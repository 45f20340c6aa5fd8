#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "biqlat/ints.hpp"

namespace biqlat {

struct Factorization {
    Int n;
    std::vector<std::pair<Int, int>> factors;  // (prime, exponent), primes ascending
    bool squarefree = true;

    bool operator==(const Factorization&) const = default;
};

// Complete factorization by trial division.  Inputs are capped at 10^9;
// anything larger throws std::invalid_argument.
Factorization factor(const Int& n);

// Smallest nonnegative r with r^2 = a (mod p), for odd prime p, canonicalized
// to r <= (p-1)/2.  nullopt when a is a quadratic non-residue.  a = 0 (mod p)
// violates the gcd(a, p) = 1 precondition and throws.
std::optional<Int> sqrt_mod_prime(const Int& a, const Int& p);

// b^e mod m for e >= 0, m >= 1.
Int pow_mod(const Int& b, const Int& e, const Int& m);

// Solves x = r1 (mod m1), x = r2 (mod m2) for coprime moduli; result in
// [0, m1*m2).
Int crt_pair(const Int& r1, const Int& m1, const Int& r2, const Int& m2);

enum class QReject {
    ResidueClass,   // q != 3 (mod 8)
    NotSquarefree,  // q has a square factor
    FactorResidue,  // some prime factor != 1, 3 (mod 8)
};

std::string_view qreject_kind(QReject r);  // stable machine-readable name

struct AdmissibleQ {
    Int q;
    Int j;  // smallest nonnegative solution of j^2 = -2 (mod q)
    Factorization factorization;
};

// Validates the admissibility conditions on q (checked in the order
// residue class, squarefree, factor residues; the first violation is
// reported) and computes the canonical j by combining per-prime square
// roots of -2 over all sign choices via CRT.
std::variant<AdmissibleQ, QReject> find_j(const Int& q);

}  // namespace biqlat
