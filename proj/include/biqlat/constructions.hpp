#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "biqlat/isometry.hpp"
#include "biqlat/targets.hpp"
#include "biqlat/zmodule.hpp"

namespace biqlat {

// Member of the explicit one-parameter family q = 4k^2 + 4k + 3, j = 2k + 1,
// together with the unimodular matrix carrying the z-basis of M_{j,q} to a
// basis with Gram exactly q * G(D4).
struct ExplicitFamilyMember {
    Int k, q, j;
    IntMat u;
};

// Rejects k whose q picks up a square factor (the integral basis needs
// squarefree q).
std::variant<ExplicitFamilyMember, QReject> explicit_family(const Int& k);

// k with q = 4k^2 + 4k + 3, when q belongs to the explicit family.
std::optional<Int> family_k_for_q(const Int& q);

// All admissible q <= q_max with canonical j, ascending.
std::vector<AdmissibleQ> family_scan(const Int& q_max);

// Closed form of the Gram matrix of the z-basis of M_{j,q}; equals
// gram(mjq_basis(q, j)) entrywise.  Requires j^2 = -2 (mod q).
GramMatrix gjq_closed_form(const Int& q, const Int& j);

// w-basis of M_{j,q} with Gram exactly q * G(D4); the carrier U comes either
// from the explicit family or from an isometry witness against G(D4).
ModuleBasis w_basis(const ExplicitFamilyMember& member);
ModuleBasis w_basis(const AdmissibleQ& aq, const IsometryWitness& witness);

// Rank-8 bases over L whose Grams, divided by 2q, equal the classical D8 and
// E8 Gram matrices exactly.  Throw ScaleMismatchError naming the offending
// entry otherwise.
ModuleBasis d8_basis(const ModuleBasis& w);
ModuleBasis e8_basis(const ModuleBasis& w);

enum class Verdict { D4, D4D4, D8, E8, Unknown };
std::string_view verdict_name(Verdict v);
Verdict verdict_for(TargetLattice t);

struct LatticeReport {
    Int q, j;
    std::optional<Int> k;  // set when the explicit family supplied U
    TargetLattice target = TargetLattice::D4;
    Verdict verdict = Verdict::Unknown;
    int degree = 4;
    std::string label;
    GramMatrix gram_matrix;
    std::optional<GramMatrix> normalized_gram;  // degree-8 targets: gram / 2q
    std::optional<Int> index;                   // [O_K : M], degree-4 only
    std::optional<Int> disc;                    // 64 q^2, degree-4 only
    Rat min_trace;                              // min Tr(x conj(x)) = 2 * Gram minimum
    Rat packing_radius_sq;                      // min_trace / 8
    std::optional<CenterDensity> density;       // degree-4 only
    std::size_t kissing = 0;
    std::vector<std::vector<Int>> shortest;     // minimal vectors, one per +-pair
    std::optional<IsometryWitness> isometry;    // against the target Gram
    std::vector<std::string> notes;             // failed certification steps
};

struct VerifyRequest {
    std::optional<Int> q;
    std::optional<Int> k;
    TargetLattice target = TargetLattice::D4;
    bool search_u = false;  // allow isometry search for d8/e8 outside the family
};

// Resolved construction for a request: the admissible parameters, the basis
// for the requested target, and its exact Gram matrix.
struct Construction {
    AdmissibleQ aq;
    std::optional<ExplicitFamilyMember> member;
    ModuleBasis basis;
    GramMatrix gram_matrix;
    std::optional<GramMatrix> normalized_gram;  // degree-8 targets: gram / 2q
};

Construction construct_basis(const VerifyRequest& req);

// Full pipeline: construct, Gram, shortest-vector enumeration, center
// density (degree-4 targets), exact comparison / isometry against the target.
LatticeReport verify_target(const VerifyRequest& req);

// Batch verification over every admissible q <= q_max; reports ascend in q
// regardless of the parallel schedule.
std::vector<LatticeReport> verify_family(const Int& q_max, TargetLattice target, bool search_u);

}  // namespace biqlat
