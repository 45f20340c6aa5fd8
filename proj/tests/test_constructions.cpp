#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <variant>

#include "biqlat/constructions.hpp"
#include "biqlat/enumerate.hpp"
#include "biqlat/errors.hpp"

using namespace biqlat;

namespace {

AdmissibleQ adm(const Int& q) { return std::get<AdmissibleQ>(find_j(q)); }

ExplicitFamilyMember member(const Int& k) {
    auto res = explicit_family(k);
    REQUIRE(std::holds_alternative<ExplicitFamilyMember>(res));
    return std::get<ExplicitFamilyMember>(res);
}

}  // namespace

TEST_CASE("explicit family members") {
    ExplicitFamilyMember m0 = member(0);
    CHECK(m0.q == 3);
    CHECK(m0.j == 1);
    CHECK(m0.u == int_from_rows({{1, 0, 0, 0}, {1, 1, 0, 0}, {0, -1, 1, 0}, {-1, 0, -1, 1}}));

    ExplicitFamilyMember m1 = member(1);
    CHECK(m1.q == 11);
    CHECK(m1.j == 3);

    CHECK(std::holds_alternative<QReject>(explicit_family(2)));  // q = 27 = 3^3
    CHECK_THROWS_AS(explicit_family(-1), std::invalid_argument);

    SUBCASE("q = 3 (mod 8), j^2 = -2 (mod q), |det U| = 1 for k <= 20") {
        for (int k = 0; k <= 20; ++k) {
            auto res = explicit_family(k);
            if (std::holds_alternative<QReject>(res)) {
                CHECK((k == 2 || k == 6 || k == 9 || k == 11 || k == 15 || k == 20));
                continue;
            }
            const auto& m = std::get<ExplicitFamilyMember>(res);
            CHECK(m.q % 8 == 3);
            CHECK(mod_floor(m.j * m.j + 2, m.q) == 0);
            Int d = det_bareiss(m.u);
            CHECK((d == 1 || d == -1));
            CHECK(family_k_for_q(m.q) == Int(k));
        }
    }
    CHECK_FALSE(family_k_for_q(19).has_value());
    CHECK(family_k_for_q(51) == Int(3));
}

TEST_CASE("family scan") {
    auto small = family_scan(20);
    REQUIRE(small.size() == 3);
    CHECK(small[0].q == 3);
    CHECK(small[0].j == 1);
    CHECK(small[1].q == 11);
    CHECK(small[1].j == 3);
    CHECK(small[2].q == 19);
    CHECK(small[2].j == 6);

    auto sixty = family_scan(60);
    bool has51 = false;
    for (const auto& aq : sixty)
        if (aq.q == 51) has51 = aq.j == 7;
    CHECK(has51);

    CHECK(family_scan(2).empty());
}

TEST_CASE("closed-form Gram matrix") {
    GramMatrix g = gjq_closed_form(3, 1);
    CHECK(g == from_int_rows({{6, -6, -9, -3}, {-6, 12, 12, 6}, {-9, 12, 18, 6}, {-3, 6, 6, 6}}));
    CHECK(gjq_closed_form(11, 3).at(0, 0) == 22);
    CHECK(gjq_closed_form(11, 3).at(2, 2) == Rat(11 * 11 * 12, 2));  // q^2 (q+1) / 2
    CHECK_THROWS_AS(gjq_closed_form(11, 4), DomainError);  // 18 not divisible by 11

    SUBCASE("matches the first-principles Gram for every admissible q <= 200") {
        for (const AdmissibleQ& aq : family_scan(200))
            CHECK(gjq_closed_form(aq.q, aq.j) == gram(mjq_basis(aq)));
    }
}

TEST_CASE("family carrier conjugates the closed form onto the D4 target") {
    for (int k = 0; k <= 20; ++k) {
        auto res = explicit_family(k);
        if (!std::holds_alternative<ExplicitFamilyMember>(res)) continue;
        const auto& m = std::get<ExplicitFamilyMember>(res);
        GramMatrix g = gjq_closed_form(m.q, m.j);
        RatMat u = to_rat(m.u);
        RatMat conj = mat_scale(Rat(1, m.q), mat_mul(mat_mul(u, g), transpose(u)));
        CHECK(conj == target_gram(TargetLattice::D4));
    }
}

TEST_CASE("w basis") {
    ModuleBasis w = w_basis(member(0));
    // w1 = z1 = -i sqrt3
    CHECK(w.elements[0].coord(6) == Rat(-1));
    // w2 = z1 + z2 = 1 + sqrt2
    CHECK(w.elements[1].coord(0) == 1);
    CHECK(w.elements[1].coord(1) == 1);
    CHECK(w.elements[1].coord(6) == 0);
    CHECK(gram(w) == mat_scale(Rat(3), target_gram(TargetLattice::D4)));

    SUBCASE("isometry-derived carrier for q outside the family") {
        AdmissibleQ aq = adm(19);
        IsometryResult iso = find_isometry(gram(mjq_basis(aq)), target_gram(TargetLattice::D4));
        REQUIRE(iso.outcome == IsometryOutcome::Found);
        ModuleBasis w19 = w_basis(aq, *iso.witness);
        CHECK(gram(w19) == mat_scale(Rat(19), target_gram(TargetLattice::D4)));
    }

    SUBCASE("a broken witness is rejected") {
        AdmissibleQ aq = adm(3);
        IsometryWitness wrong{IntMat::identity(4), Rat(3)};
        CHECK_THROWS_AS(w_basis(aq, wrong), ScaleMismatchError);
    }
}

TEST_CASE("rank-8 bases hit the classical D8 and E8 Grams") {
    for (Int k : {Int(0), Int(1), Int(3)}) {
        ModuleBasis w = w_basis(member(k));
        Int q = w.q;

        ModuleBasis b1 = d8_basis(w);
        GramMatrix g1 = gram(b1);
        CHECK(mat_scale(Rat(1, 2 * q), g1) == target_gram(TargetLattice::D8));
        CHECK(g1.at(4, 4) == Rat(4 * q));   // normalized (5,5) = 2
        CHECK(g1.at(3, 4) == Rat(-2 * q));  // normalized (4,5) = -1

        ModuleBasis b2 = e8_basis(w);
        GramMatrix g2 = gram(b2);
        CHECK(mat_scale(Rat(1, 2 * q), g2) == target_gram(TargetLattice::E8));
        CHECK(g2.at(0, 0) == Rat(8 * q));  // normalized (1,1) = 4
        CHECK(g2.at(0, 7) == Rat(2 * q));  // normalized (1,8) = 1
    }

    CHECK_THROWS_AS(d8_basis(mjq_basis(adm(3))), ScaleMismatchError);
    CHECK_THROWS_AS(e8_basis(mjq_basis(adm(3))), ScaleMismatchError);
}

TEST_CASE("verify: d4 report for q = 3") {
    VerifyRequest req;
    req.q = 3;
    req.target = TargetLattice::D4;
    LatticeReport rep = verify_target(req);
    CHECK(rep.verdict == Verdict::D4);
    CHECK(rep.min_trace == 12);
    CHECK(rep.index == Int(3));
    CHECK(rep.disc == Int(576));
    REQUIRE(rep.density.has_value());
    CHECK(rep.density->exact());
    CHECK(rep.density->coeff == Rat(1, 8));
    CHECK(rep.kissing == 24);
    CHECK(rep.packing_radius_sq == Rat(3, 2));
    REQUIRE(rep.isometry.has_value());
    CHECK(isometry_witness_valid(rep.gram_matrix, target_gram(TargetLattice::D4), *rep.isometry));
    CHECK(rep.notes.empty());
}

TEST_CASE("verify: error propagation") {
    VerifyRequest bad;
    bad.q = 33;
    bad.target = TargetLattice::D4;
    CHECK_THROWS_AS(verify_target(bad), InvalidQError);

    VerifyRequest k2;
    k2.k = 2;
    k2.target = TargetLattice::E8;
    CHECK_THROWS_AS(verify_target(k2), NotSquarefreeError);

    VerifyRequest nosearch;
    nosearch.q = 19;
    nosearch.target = TargetLattice::D8;
    CHECK_THROWS_AS(verify_target(nosearch), DomainError);
    nosearch.search_u = true;
    CHECK(verify_target(nosearch).verdict == Verdict::D8);

    VerifyRequest both;
    both.q = 3;
    both.k = 0;
    CHECK_THROWS_AS(verify_target(both), std::invalid_argument);
}

TEST_CASE("verify: d4d4 and degree-8 targets") {
    VerifyRequest dd;
    dd.q = 11;
    dd.target = TargetLattice::D4D4;
    LatticeReport rep = verify_target(dd);
    CHECK(rep.verdict == Verdict::D4D4);
    CHECK(rep.min_trace == 88);  // 8q
    CHECK(rep.kissing == 48);
    CHECK_FALSE(rep.density.has_value());

    VerifyRequest e8req;
    e8req.k = 1;
    e8req.target = TargetLattice::E8;
    LatticeReport e8rep = verify_target(e8req);
    CHECK(e8rep.verdict == Verdict::E8);
    CHECK(e8rep.kissing == 240);
    CHECK(e8rep.min_trace == 88);
    REQUIRE(e8rep.normalized_gram.has_value());
    CHECK(*e8rep.normalized_gram == target_gram(TargetLattice::E8));
    CHECK(e8rep.k == Int(1));

    // d8/e8 accept --q when q is in the family (k is inferred).
    VerifyRequest via_q;
    via_q.q = 51;
    via_q.target = TargetLattice::D8;
    LatticeReport d8rep = verify_target(via_q);
    CHECK(d8rep.verdict == Verdict::D8);
    CHECK(d8rep.k == Int(3));
    CHECK(d8rep.kissing == 112);
}

TEST_CASE("verify_family: all admissible q <= 100 certify as D4") {
    auto reports = verify_family(100, TargetLattice::D4, false);
    REQUIRE(reports.size() == 8);
    Int prev = 0;
    for (const auto& rep : reports) {
        CHECK(rep.q > prev);
        prev = rep.q;
        CHECK(rep.verdict == Verdict::D4);
        CHECK(rep.min_trace == Rat(4 * rep.q));
        CHECK(rep.density->coeff == Rat(1, 8));
    }
}

TEST_CASE("verify_family: doubled modules up to 200 certify as D4+D4") {
    auto reports = verify_family(200, TargetLattice::D4D4, false);
    REQUIRE(reports.size() == 15);
    for (const auto& rep : reports) {
        CHECK(rep.verdict == Verdict::D4D4);
        CHECK(rep.min_trace == Rat(8 * rep.q));
        CHECK(rep.kissing == 48);
        REQUIRE(rep.isometry.has_value());
        CHECK(isometry_witness_valid(rep.gram_matrix, target_gram(TargetLattice::D4D4),
                                     *rep.isometry));
    }
}

TEST_CASE("B1 and B2 hit the targets for every squarefree k <= 20") {
    int checked = 0;
    for (int k = 0; k <= 20; ++k) {
        auto res = explicit_family(k);
        if (!std::holds_alternative<ExplicitFamilyMember>(res)) continue;
        const auto& m = std::get<ExplicitFamilyMember>(res);
        ModuleBasis w = w_basis(m);
        Rat scale(1, 2 * m.q);
        CHECK(mat_scale(scale, gram(d8_basis(w))) == target_gram(TargetLattice::D8));
        CHECK(mat_scale(scale, gram(e8_basis(w))) == target_gram(TargetLattice::E8));
        ++checked;
    }
    CHECK(checked == 15);
}

TEST_CASE("degree-8 targets hold for every admissible q <= 200 via the searched carrier") {
    for (TargetLattice t : {TargetLattice::D8, TargetLattice::E8}) {
        auto reports = verify_family(200, t, /*search_u=*/true);
        REQUIRE(reports.size() == 15);
        for (const auto& rep : reports) {
            CHECK(rep.verdict == verdict_for(t));
            CHECK(rep.min_trace == Rat(8 * rep.q));
            CHECK(rep.kissing == target_kissing(t));
            REQUIRE(rep.normalized_gram.has_value());
            CHECK(*rep.normalized_gram == target_gram(t));
        }
    }
}

TEST_CASE("every prime factor of family q is 1 or 3 mod 8 for k <= 50") {
    for (int k = 0; k <= 50; ++k) {
        Int q = 4 * Int(k) * k + 4 * k + 3;
        for (const auto& factor_power : factor(q).factors) {
            const Int& prime = factor_power.first;
            Int r = prime % 8;
            CHECK_MESSAGE((r == 1 || r == 3), "k = ", k, " prime ", prime.str());
        }
    }
}
