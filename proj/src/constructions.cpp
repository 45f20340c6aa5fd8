#include "biqlat/constructions.hpp"

#include <exception>
#include <stdexcept>

#include "biqlat/enumerate.hpp"
#include "biqlat/errors.hpp"

namespace biqlat {

std::variant<ExplicitFamilyMember, QReject> explicit_family(const Int& k) {
    if (k < 0) throw std::invalid_argument("explicit_family: k must be >= 0");
    Int q = 4 * k * k + 4 * k + 3;
    Int j = 2 * k + 1;
    if (!factor(q).squarefree) return QReject::NotSquarefree;
    IntMat u(4, 4);
    u.at(0, 0) = 1;
    u.at(1, 0) = j;  u.at(1, 1) = 1;
    u.at(2, 0) = -k; u.at(2, 1) = -k - 1; u.at(2, 2) = 1;
    u.at(3, 0) = -1; u.at(3, 1) = k;      u.at(3, 2) = -1; u.at(3, 3) = 1;
    return ExplicitFamilyMember{k, std::move(q), std::move(j), std::move(u)};
}

std::optional<Int> family_k_for_q(const Int& q) {
    if (q < 3) return std::nullopt;
    Int s = isqrt(q - 2);
    if (s * s != q - 2 || s % 2 == 0) return std::nullopt;
    return (s - 1) / 2;
}

std::vector<AdmissibleQ> family_scan(const Int& q_max) {
    std::vector<AdmissibleQ> out;
    for (Int q = 3; q <= q_max; q += 8) {
        auto res = find_j(q);
        if (auto* aq = std::get_if<AdmissibleQ>(&res)) out.push_back(std::move(*aq));
    }
    return out;
}

GramMatrix gjq_closed_form(const Int& q, const Int& j) {
    if (q < 3 || q % 2 == 0)
        throw DomainError("precondition", "gjq_closed_form: q must be an odd integer >= 3");
    if (mod_floor(j * j + 2, q) != 0)
        throw DomainError("precondition", "gjq_closed_form: j^2 + 2 is not divisible by q");
    Int jj = j * j;
    GramMatrix g(4, 4);
    g.at(0, 0) = 2 * q;
    g.at(0, 1) = -2 * j * q;
    g.at(0, 2) = -q * q;
    g.at(0, 3) = -j * q;
    g.at(1, 1) = 2 * jj * q + 2 * jj + 4;
    g.at(1, 2) = j * q * (q + 1);
    g.at(1, 3) = jj * q + jj + 2;
    g.at(2, 2) = Rat(q * q * (q + 1), 2);
    g.at(2, 3) = Rat(j * q * (q + 1), 2);
    g.at(3, 3) = Rat((jj + 2) * (q + 1), 2);
    for (int i = 0; i < 4; ++i)
        for (int c = 0; c < i; ++c) g.at(i, c) = g.at(c, i);
    return g;
}

namespace {

AdmissibleQ require_admissible(const Int& q) {
    auto res = find_j(q);
    if (auto* rej = std::get_if<QReject>(&res)) {
        std::string msg = "q = " + q.str() + " rejected: " + std::string(qreject_kind(*rej));
        if (*rej == QReject::NotSquarefree) throw NotSquarefreeError(msg);
        throw InvalidQError(std::string(qreject_kind(*rej)), msg);
    }
    return std::get<AdmissibleQ>(std::move(res));
}

ModuleBasis w_basis_from_u(const AdmissibleQ& aq, const IntMat& u, const Rat& expected_scale) {
    ModuleBasis z = mjq_basis(aq);
    ModuleBasis w{aq.q, 4, {}, "w(q=" + aq.q.str() + ")"};
    for (int i = 0; i < 4; ++i) {
        FieldElement acc(aq.q);
        for (int c = 0; c < 4; ++c)
            acc = acc + z.elements[static_cast<std::size_t>(c)].scaled(Rat(u.at(i, c)));
        w.elements.push_back(std::move(acc));
    }
    GramMatrix gw = gram(w);
    GramMatrix want = mat_scale(expected_scale, target_gram(TargetLattice::D4));
    if (gw != want)
        throw ScaleMismatchError("w basis Gram is not " + rat_str(expected_scale) + " * G(D4)");
    return w;
}

}  // namespace

ModuleBasis w_basis(const ExplicitFamilyMember& member) {
    AdmissibleQ aq = require_admissible(member.q);
    return w_basis_from_u(aq, member.u, Rat(member.q));
}

ModuleBasis w_basis(const AdmissibleQ& aq, const IsometryWitness& witness) {
    return w_basis_from_u(aq, witness.u, witness.scale);
}

namespace {

// v = (i-1)/2 w1 + (-i-1)/2 w2 - w3 - w4, the vector shared by both rank-8
// extensions.
FieldElement bridge_vector(const ModuleBasis& w) {
    const Int& q = w.q;
    FieldElement i_unit = FieldElement::imaginary_unit(q);
    FieldElement one = FieldElement::one(q);
    FieldElement c1 = (i_unit - one).scaled(Rat(1, 2));
    FieldElement c2 = (-i_unit - one).scaled(Rat(1, 2));
    return c1 * w.elements[0] + c2 * w.elements[1] - w.elements[2] - w.elements[3];
}

void require_w_basis(const ModuleBasis& w) {
    if (w.degree != 4 || w.elements.size() != 4)
        throw std::invalid_argument("expected a degree-4 w basis");
    GramMatrix gw = gram(w);
    if (gw != mat_scale(Rat(w.q), target_gram(TargetLattice::D4)))
        throw ScaleMismatchError("input basis Gram is not q * G(D4)");
}

ModuleBasis checked_degree8(std::vector<FieldElement> elements, const Int& q, std::string label,
                            TargetLattice t) {
    ModuleBasis b{q, 8, std::move(elements), std::move(label)};
    GramMatrix g = gram(b);
    const GramMatrix& want = target_gram(t);
    Rat scale = Rat(2 * q);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            Rat got = g.at(i, j) / scale;
            if (got != want.at(i, j))
                throw ScaleMismatchError("normalized Gram entry (" + std::to_string(i + 1) + "," +
                                         std::to_string(j + 1) + ") is " + rat_str(got) +
                                         ", expected " + rat_str(want.at(i, j)));
        }
    return b;
}

}  // namespace

ModuleBasis d8_basis(const ModuleBasis& w) {
    require_w_basis(w);
    FieldElement i_unit = FieldElement::imaginary_unit(w.q);
    FieldElement v = bridge_vector(w);
    std::vector<FieldElement> els{w.elements[0], w.elements[1], w.elements[2], w.elements[3],
                                  v, i_unit * w.elements[1], i_unit * w.elements[2],
                                  i_unit * w.elements[3]};
    return checked_degree8(std::move(els), w.q, "B1(q=" + w.q.str() + ")", TargetLattice::D8);
}

ModuleBasis e8_basis(const ModuleBasis& w) {
    require_w_basis(w);
    const Int& q = w.q;
    FieldElement i_unit = FieldElement::imaginary_unit(q);
    FieldElement one = FieldElement::one(q);
    FieldElement v1 = w.elements[0] - w.elements[1];
    FieldElement v2 = bridge_vector(w);
    FieldElement ip1 = i_unit + one;
    FieldElement v3 = ip1 * (w.elements[0] + w.elements[2]) +
                      ip1.scaled(Rat(1, 2)) * (w.elements[1] + w.elements[3]);
    std::vector<FieldElement> els{v1, w.elements[1], w.elements[2], w.elements[3],
                                  v2, i_unit * w.elements[1], i_unit * w.elements[2], v3};
    return checked_degree8(std::move(els), q, "B2(q=" + q.str() + ")", TargetLattice::E8);
}

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::D4: return "D4";
        case Verdict::D4D4: return "D4+D4";
        case Verdict::D8: return "D8";
        case Verdict::E8: return "E8";
        case Verdict::Unknown: return "UNKNOWN";
    }
    return "?";
}

Verdict verdict_for(TargetLattice t) {
    switch (t) {
        case TargetLattice::D4: return Verdict::D4;
        case TargetLattice::D4D4: return Verdict::D4D4;
        case TargetLattice::D8: return Verdict::D8;
        case TargetLattice::E8: return Verdict::E8;
    }
    return Verdict::Unknown;
}

namespace {

void attach_enumeration(LatticeReport& rep, const GramMatrix& g) {
    ShortVectorSet sv = shortest_vectors(g);
    rep.min_trace = 2 * sv.min_norm;
    rep.packing_radius_sq = rep.min_trace / 8;
    rep.kissing = sv.kissing;
    rep.shortest = std::move(sv.vectors);
}

LatticeReport verify_d4(const Construction& c) {
    const AdmissibleQ& aq = c.aq;
    LatticeReport rep;
    rep.q = aq.q;
    rep.j = aq.j;
    rep.target = TargetLattice::D4;
    rep.degree = 4;

    const ModuleBasis& basis = c.basis;
    rep.label = basis.label;
    rep.gram_matrix = c.gram_matrix;
    attach_enumeration(rep, rep.gram_matrix);

    bool ok = true;
    if (rep.min_trace != Rat(4 * aq.q)) {
        ok = false;
        rep.notes.push_back("minimum trace is " + rat_str(rep.min_trace) + ", expected 4q");
    }
    rep.index = index_in_ring(basis);
    if (*rep.index != aq.q) {
        ok = false;
        rep.notes.push_back("index is " + rep.index->str() + ", expected q");
    }
    rep.disc = 64 * aq.q * aq.q;
    rep.density = center_density(rep.min_trace, *rep.disc, *rep.index, 4);
    if (!(rep.density->exact() && rep.density->coeff == Rat(1, 8))) {
        ok = false;
        rep.notes.push_back("center density is not 1/8");
    }
    IsometryResult iso = find_isometry(rep.gram_matrix, target_gram(TargetLattice::D4));
    if (iso.outcome == IsometryOutcome::Found) {
        rep.isometry = std::move(iso.witness);
        if (rep.isometry->scale != Rat(aq.q)) {
            ok = false;
            rep.notes.push_back("isometry scale is " + rat_str(rep.isometry->scale) +
                                ", expected q");
        }
    } else {
        ok = false;
        rep.notes.push_back(iso.outcome == IsometryOutcome::NotIsometric
                                ? "Gram is not isometric to G(D4)"
                                : "isometry search inconclusive");
    }
    rep.verdict = ok ? Verdict::D4 : Verdict::Unknown;
    return rep;
}

LatticeReport verify_d4d4(const Construction& c) {
    const AdmissibleQ& aq = c.aq;
    LatticeReport rep;
    rep.q = aq.q;
    rep.j = aq.j;
    rep.target = TargetLattice::D4D4;
    rep.degree = 8;

    rep.label = c.basis.label;
    GramMatrix inner = gram(mjq_basis(aq));
    rep.gram_matrix = c.gram_matrix;
    attach_enumeration(rep, rep.gram_matrix);

    bool ok = true;
    GramMatrix expect = mat_scale(Rat(2), block_diag(inner, inner));
    if (rep.gram_matrix != expect) {
        ok = false;
        rep.notes.push_back("doubled Gram is not 2 * blockdiag(G', G')");
    }
    if (rep.min_trace != Rat(8 * aq.q)) {
        ok = false;
        rep.notes.push_back("minimum trace is " + rat_str(rep.min_trace) + ", expected 8q");
    }
    IsometryResult iso = find_isometry(rep.gram_matrix, target_gram(TargetLattice::D4D4));
    if (iso.outcome == IsometryOutcome::Found) {
        rep.isometry = std::move(iso.witness);
    } else {
        ok = false;
        rep.notes.push_back(iso.outcome == IsometryOutcome::NotIsometric
                                ? "Gram is not isometric to G(D4+D4)"
                                : "isometry search inconclusive");
    }
    rep.verdict = ok ? Verdict::D4D4 : Verdict::Unknown;
    return rep;
}

LatticeReport verify_degree8(const Construction& c, TargetLattice target) {
    const AdmissibleQ& aq = c.aq;
    LatticeReport rep;
    rep.q = aq.q;
    rep.j = aq.j;
    if (c.member) rep.k = c.member->k;
    rep.target = target;
    rep.degree = 8;

    rep.label = c.basis.label;
    rep.gram_matrix = c.gram_matrix;
    rep.normalized_gram = c.normalized_gram;
    attach_enumeration(rep, rep.gram_matrix);

    bool ok = (*rep.normalized_gram == target_gram(target));
    if (!ok) rep.notes.push_back("normalized Gram differs from the target");
    if (rep.min_trace != Rat(8 * aq.q)) {
        ok = false;
        rep.notes.push_back("minimum trace is " + rat_str(rep.min_trace) + ", expected 8q");
    }
    if (rep.kissing != target_kissing(target)) {
        ok = false;
        rep.notes.push_back("kissing number is " + std::to_string(rep.kissing));
    }
    if (ok) {
        // Exact equality after rescaling: the identity is a witness.
        rep.isometry = IsometryWitness{IntMat::identity(8), Rat(2 * aq.q)};
        rep.verdict = verdict_for(target);
    }
    return rep;
}

}  // namespace

Construction construct_basis(const VerifyRequest& req) {
    if (req.q.has_value() == req.k.has_value())
        throw std::invalid_argument("construct_basis: exactly one of q, k must be given");

    Construction c;
    if (req.k) {
        auto fam = explicit_family(*req.k);
        if (std::holds_alternative<QReject>(fam))
            throw NotSquarefreeError("k = " + req.k->str() + " gives a non-squarefree q");
        c.member = std::get<ExplicitFamilyMember>(std::move(fam));
        c.aq = require_admissible(c.member->q);
    } else {
        c.aq = require_admissible(*req.q);
    }

    switch (req.target) {
        case TargetLattice::D4:
            c.basis = mjq_basis(c.aq);
            c.gram_matrix = gram(c.basis);
            return c;
        case TargetLattice::D4D4:
            c.basis = doubled_basis(mjq_basis(c.aq));
            c.gram_matrix = gram(c.basis);
            return c;
        case TargetLattice::D8:
        case TargetLattice::E8: {
            if (!c.member) {
                if (auto k = family_k_for_q(c.aq.q))
                    c.member = std::get<ExplicitFamilyMember>(explicit_family(*k));
            }
            ModuleBasis w{c.aq.q, 4, {}, ""};
            if (c.member) {
                w = w_basis(*c.member);
            } else if (req.search_u) {
                IsometryResult iso =
                    find_isometry(gram(mjq_basis(c.aq)), target_gram(TargetLattice::D4));
                if (iso.outcome != IsometryOutcome::Found)
                    throw DomainError("no-isometry",
                                      "no unimodular carrier to G(D4) found for q = " + c.aq.q.str());
                w = w_basis(c.aq, *iso.witness);
            } else {
                throw DomainError("search-required",
                                  "q = " + c.aq.q.str() +
                                      " is outside the explicit family; enable the isometry "
                                      "search (--search-u) to build d8/e8 bases");
            }
            c.basis = (req.target == TargetLattice::D8) ? d8_basis(w) : e8_basis(w);
            c.gram_matrix = gram(c.basis);
            c.normalized_gram = mat_scale(Rat(1, 2 * c.aq.q), c.gram_matrix);
            return c;
        }
    }
    throw std::logic_error("construct_basis: unreachable");
}

LatticeReport verify_target(const VerifyRequest& req) {
    Construction c = construct_basis(req);
    switch (req.target) {
        case TargetLattice::D4: {
            LatticeReport rep = verify_d4(c);
            if (c.member) rep.k = c.member->k;
            return rep;
        }
        case TargetLattice::D4D4: {
            LatticeReport rep = verify_d4d4(c);
            if (c.member) rep.k = c.member->k;
            return rep;
        }
        case TargetLattice::D8:
        case TargetLattice::E8:
            return verify_degree8(c, req.target);
    }
    throw std::logic_error("verify_target: unreachable");
}

std::vector<LatticeReport> verify_family(const Int& q_max, TargetLattice target, bool search_u) {
    std::vector<AdmissibleQ> family = family_scan(q_max);
    std::vector<LatticeReport> out(family.size());
    std::vector<std::exception_ptr> errors(family.size());

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::size_t i = 0; i < family.size(); ++i) {
        try {
            VerifyRequest req;
            req.q = family[i].q;
            req.target = target;
            req.search_u = search_u;
            out[i] = verify_target(req);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace biqlat
