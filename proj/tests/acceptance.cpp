// Acceptance suite: runs every certification criterion end to end and prints
// one PASS/FAIL line per criterion.  Exits nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <variant>

#include "biqlat/boxenum.hpp"
#include "biqlat/constructions.hpp"
#include "biqlat/enumerate.hpp"
#include "biqlat/errors.hpp"
#include "biqlat/isometry.hpp"
#include "biqlat/targets.hpp"

using namespace biqlat;

namespace {

int g_failures = 0;

struct Outcome {
    bool pass = false;
    std::string detail;
};

void run_criterion(int num, const char* name, double budget_s, const std::function<Outcome()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = fn();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_budget = dt < budget_s;
    bool pass = o.pass && in_budget;
    std::printf("[%s] %d. %s: %s (%.2f s, budget %.0f s)%s\n", pass ? "PASS" : "FAIL", num, name,
                o.detail.c_str(), dt, budget_s, in_budget ? "" : " [over budget]");
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

AdmissibleQ adm(const Int& q) { return std::get<AdmissibleQ>(find_j(q)); }

bool in_box(const std::vector<Int>& v, int radius) {
    for (const Int& x : v)
        if (x > radius || x < -radius) return false;
    return true;
}

// criterion 1: Eq-style closed form against first-principles trace arithmetic
Outcome trace_form_equivalence() {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<int> coord(-50, 50);
    int checked = 0;
    for (Int q : {Int(3), Int(11), Int(19), Int(51)}) {
        for (int t = 0; t < 1000; ++t) {
            IntegralCoords x{coord(rng), coord(rng), coord(rng), coord(rng)};
            FieldElement el = assemble(x, q);
            if (Rat(trace_form(x, q)) != trace_to_q(el * el.conj(), 4))
                return {false, "mismatch at q = " + q.str()};
            ++checked;
        }
    }
    return {true, std::to_string(checked) + " random coordinates exact"};
}

// criterion 2: the D4 certification across all admissible q <= 200
Outcome d4_family() {
    const std::vector<int> expected{3, 11, 19, 43, 51, 59, 67, 83, 107, 123, 131, 139, 163, 179, 187};
    auto family = family_scan(200);
    if (family.size() != expected.size()) return {false, "family size " + std::to_string(family.size())};
    for (std::size_t i = 0; i < family.size(); ++i)
        if (family[i].q != expected[i]) return {false, "unexpected member " + family[i].q.str()};

    for (const AdmissibleQ& aq : family) {
        VerifyRequest req;
        req.q = aq.q;
        req.target = TargetLattice::D4;
        LatticeReport rep = verify_target(req);
        std::string at = " at q = " + aq.q.str();
        if (rep.verdict != Verdict::D4) return {false, "verdict " + std::string(verdict_name(rep.verdict)) + at};
        if (rep.min_trace != Rat(4 * aq.q)) return {false, "min trace" + at};
        if (!rep.index || *rep.index != aq.q) return {false, "index" + at};
        if (!rep.disc || *rep.disc != 64 * aq.q * aq.q) return {false, "disc" + at};
        if (!rep.density || !rep.density->exact() || rep.density->coeff != Rat(1, 8))
            return {false, "center density" + at};
        if (!rep.isometry || rep.isometry->scale != Rat(aq.q) ||
            !isometry_witness_valid(rep.gram_matrix, target_gram(TargetLattice::D4), *rep.isometry))
            return {false, "isometry witness" + at};
    }
    return {true, std::to_string(family.size()) + " admissible q certified D4, density 1/8"};
}

// criterion 3: closed-form Gram and the family carrier, k <= 20
Outcome closed_form_family() {
    int checked = 0;
    for (int k = 0; k <= 20; ++k) {
        auto res = explicit_family(k);
        if (std::holds_alternative<QReject>(res)) continue;
        const auto& m = std::get<ExplicitFamilyMember>(res);
        AdmissibleQ aq = adm(m.q);
        if (aq.j != m.j) return {false, "canonical j differs at k = " + std::to_string(k)};
        GramMatrix closed = gjq_closed_form(m.q, m.j);
        if (closed != gram(mjq_basis(aq))) return {false, "closed form at k = " + std::to_string(k)};
        RatMat u = to_rat(m.u);
        RatMat conj = mat_scale(Rat(1, m.q), mat_mul(mat_mul(u, closed), transpose(u)));
        if (conj != target_gram(TargetLattice::D4))
            return {false, "carrier identity at k = " + std::to_string(k)};
        ++checked;
    }
    return {true, std::to_string(checked) + " squarefree members verified entrywise"};
}

// criterion 4: doubled-module block identity, admissible q <= 100
Outcome doubled_block_identity() {
    int checked = 0;
    for (const AdmissibleQ& aq : family_scan(100)) {
        ModuleBasis zb = mjq_basis(aq);
        GramMatrix inner = gram(zb);
        if (gram(doubled_basis(zb)) != mat_scale(Rat(2), block_diag(inner, inner)))
            return {false, "block identity at q = " + aq.q.str()};
        ++checked;
    }
    return {true, std::to_string(checked) + " doubled Grams equal 2*blockdiag(G',G')"};
}

// criterion 5: D8/E8 bases for k in {0,1,3,4,5} plus independent target certification
Outcome degree8_targets() {
    for (int k : {0, 1, 3, 4, 5}) {
        auto m = std::get<ExplicitFamilyMember>(explicit_family(k));
        ModuleBasis w = w_basis(m);
        GramMatrix b1 = gram(d8_basis(w));
        GramMatrix b2 = gram(e8_basis(w));
        Rat scale(1, 2 * m.q);
        if (mat_scale(scale, b1) != target_gram(TargetLattice::D8))
            return {false, "B1 normalization at k = " + std::to_string(k)};
        if (mat_scale(scale, b2) != target_gram(TargetLattice::E8))
            return {false, "B2 normalization at k = " + std::to_string(k)};
    }
    ShortVectorSet e8 = shortest_vectors(target_gram(TargetLattice::E8));
    if (det_exact(target_gram(TargetLattice::E8)) != 1 || e8.min_norm != 2 || e8.kissing != 240)
        return {false, "E8 target certification"};
    ShortVectorSet d8 = shortest_vectors(target_gram(TargetLattice::D8));
    if (det_exact(target_gram(TargetLattice::D8)) != 4 || d8.min_norm != 2 || d8.kissing != 112)
        return {false, "D8 target certification"};
    return {true, "5 family members; E8 det 1 min 2 kissing 240, D8 det 4 min 2 kissing 112"};
}

// criterion 6: Fincke-Pohst against the naive box oracle
Outcome svp_oracle_equivalence() {
    std::vector<std::pair<std::string, GramMatrix>> corpus;
    for (int q : {3, 11, 19, 43, 51, 59}) {
        AdmissibleQ aq = adm(q);
        corpus.emplace_back("M(q=" + std::to_string(q) + ")", gram(mjq_basis(aq)));
    }
    for (int q : {3, 11, 19, 51}) {
        ModuleBasis alphas{q, 4, alpha_basis(q), "alpha"};
        corpus.emplace_back("O_K(q=" + std::to_string(q) + ")", gram(alphas));
    }
    for (int k : {0, 1, 3}) {
        auto m = std::get<ExplicitFamilyMember>(explicit_family(k));
        corpus.emplace_back("G(k=" + std::to_string(k) + ")", gjq_closed_form(m.q, m.j));
        corpus.emplace_back("w(k=" + std::to_string(k) + ")",
                            mat_scale(Rat(m.q), target_gram(TargetLattice::D4)));
    }
    corpus.emplace_back("D4", target_gram(TargetLattice::D4));
    corpus.emplace_back("D4+D4", target_gram(TargetLattice::D4D4));
    corpus.emplace_back("D8", target_gram(TargetLattice::D8));
    corpus.emplace_back("E8", target_gram(TargetLattice::E8));

    const int radius = 4;
    for (const auto& [name, g] : corpus) {
        ShortVectorSet fp = shortest_vectors(g);
        BoxResult box = box_enumerate(g, radius);
        if (box.min_norm != fp.min_norm) return {false, "minimum mismatch on " + name};
        std::vector<std::vector<Int>> restricted;
        for (const auto& v : fp.vectors)
            if (in_box(v, radius)) restricted.push_back(v);
        std::sort(restricted.begin(), restricted.end());
        if (box.vectors != restricted) return {false, "vector set mismatch on " + name};
    }
    // the serial reference and the OpenMP kernel must agree bit for bit
    BoxResult s = box_enumerate_serial(target_gram(TargetLattice::E8), radius);
    BoxResult p = box_enumerate_parallel(target_gram(TargetLattice::E8), radius);
    if (s.min_norm != p.min_norm || s.vectors != p.vectors)
        return {false, "serial/OpenMP kernel disagreement"};
    return {true, std::to_string(corpus.size()) + " Gram matrices agree with the box oracle"};
}

// criterion 7: no module element below 4q in the |x_i| <= 6 box
Outcome module_minimum_spot_check() {
    for (int q : {3, 11, 19, 51}) {
        AdmissibleQ aq = adm(q);
        Int best = -1;
        for (int x1 = -6; x1 <= 6; ++x1)
            for (int x2 = -6; x2 <= 6; ++x2)
                for (int x3 = -6; x3 <= 6; ++x3)
                    for (int x4 = -6; x4 <= 6; ++x4) {
                        if (x1 == 0 && x2 == 0 && x3 == 0 && x4 == 0) continue;
                        IntegralCoords x{x1, x2, x3, x4};
                        if (!mjq_contains(x, aq)) continue;
                        Int t = trace_form(x, aq.q);
                        if (best < 0 || t < best) best = t;
                    }
        if (best < 4 * aq.q) return {false, "element below 4q at q = " + std::to_string(q)};
        if (best != 4 * aq.q) return {false, "bound not attained at q = " + std::to_string(q)};
    }
    return {true, "minimum trace over the box is exactly 4q for q in {3,11,19,51}"};
}

// criterion 8: rejection gates with the right reason
Outcome negative_gates() {
    auto expect = [](const Int& q, QReject want) {
        auto res = find_j(q);
        return std::holds_alternative<QReject>(res) && std::get<QReject>(res) == want;
    };
    if (!expect(33, QReject::ResidueClass)) return {false, "q = 33"};
    if (!expect(35, QReject::FactorResidue)) return {false, "q = 35"};
    if (!expect(27, QReject::NotSquarefree)) return {false, "q = 27"};
    if (!std::holds_alternative<QReject>(explicit_family(2))) return {false, "k = 2"};

    try {
        VerifyRequest req;
        req.q = 33;
        req.target = TargetLattice::D4;
        verify_target(req);
        return {false, "verify accepted q = 33"};
    } catch (const InvalidQError& e) {
        if (e.kind() != "residue-class") return {false, "wrong reason for q = 33"};
    }
    try {
        VerifyRequest req;
        req.k = 2;
        req.target = TargetLattice::E8;
        verify_target(req);
        return {false, "verify accepted k = 2"};
    } catch (const NotSquarefreeError&) {
    }
    return {true, "33/35/27 and k = 2 rejected with the stated reasons"};
}

}  // namespace

int main() {
    std::printf("acceptance suite\n================\n");
    run_criterion(1, "trace form vs first-principles arithmetic", 5, trace_form_equivalence);
    run_criterion(2, "D4 certification for admissible q <= 200", 60, d4_family);
    run_criterion(3, "closed-form Gram and carrier, k <= 20", 10, closed_form_family);
    run_criterion(4, "doubled-module block identity, q <= 100", 30, doubled_block_identity);
    run_criterion(5, "D8/E8 bases and independent target certification", 60, degree8_targets);
    run_criterion(6, "shortest-vector oracle equivalence", 120, svp_oracle_equivalence);
    run_criterion(7, "module minimum spot check, |x| <= 6", 30, module_minimum_spot_check);
    run_criterion(8, "negative admissibility gates", 10, negative_gates);

    if (g_failures == 0)
        std::printf("================\nall 8 criteria passed\n");
    else
        std::printf("================\n%d criteria FAILED\n", g_failures);
    return g_failures;
}
