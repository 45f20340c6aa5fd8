#include "biqlat/isometry.hpp"

#include <algorithm>
#include <stdexcept>

#include "biqlat/enumerate.hpp"

namespace biqlat {

bool isometry_witness_valid(const GramMatrix& source, const GramMatrix& target,
                            const IsometryWitness& w) {
    if (w.scale <= 0) return false;
    IntMat u = w.u;
    Int d = det_bareiss(u);
    if (d != 1 && d != -1) return false;
    RatMat lhs = mat_scale(w.scale, target);
    RatMat rhs = mat_mul(mat_mul(to_rat(w.u), source), transpose(to_rat(w.u)));
    return lhs == rhs;
}

namespace {

struct Candidate {
    std::vector<Int> coords;   // both signs appear as separate candidates
    Rat norm;                  // rescaled source norm
    std::vector<Rat> gram_row; // ratio * (source * coords), so inner products
                               // against chosen vectors cost O(n)
};

Rat inner_with(const Candidate& c, const std::vector<Int>& w) {
    Rat s = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == 0) continue;
        s += c.gram_row[i] * Rat(w[i]);
    }
    return s;
}

struct Search {
    const GramMatrix& target;
    const std::vector<Candidate>& candidates;
    std::uint64_t node_limit;
    std::uint64_t nodes = 0;
    bool exhausted = true;
    std::vector<const Candidate*> chosen;

    bool extend(int row) {
        const int n = target.rows;
        if (row == n) {
            // A Gram-matching tuple can still span a proper sublattice
            // (|det| > 1); only unimodular assignments are isometries.
            IntMat u(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    u.at(i, j) = chosen[static_cast<std::size_t>(i)]->coords[static_cast<std::size_t>(j)];
            Int d = det_bareiss(std::move(u));
            return d == 1 || d == -1;
        }
        const Rat& want_norm = target.at(row, row);
        for (const Candidate& c : candidates) {
            if (c.norm != want_norm) continue;
            if (++nodes > node_limit) {
                exhausted = false;
                return false;
            }
            bool ok = true;
            for (int k = 0; k < row && ok; ++k) {
                if (inner_with(c, chosen[static_cast<std::size_t>(k)]->coords) != target.at(row, k))
                    ok = false;
            }
            if (!ok) continue;
            chosen.push_back(&c);
            if (extend(row + 1)) return true;
            if (!exhausted) return false;
            chosen.pop_back();
        }
        return false;
    }
};

}  // namespace

IsometryResult find_isometry(const GramMatrix& source, const GramMatrix& target,
                             std::uint64_t node_limit) {
    if (source.rows != target.rows || source.cols != target.cols)
        throw std::invalid_argument("find_isometry: dimension mismatch");
    const int n = source.rows;

    ShortVectorSet src_min = shortest_vectors(source);
    ShortVectorSet tgt_min = shortest_vectors(target);

    Rat ratio = tgt_min.min_norm / src_min.min_norm;
    Rat scale = src_min.min_norm / tgt_min.min_norm;

    if (mat_scale(ratio, source) == target)
        return {IsometryOutcome::Found, IsometryWitness{IntMat::identity(n), scale}};

    // Candidate images: all source vectors short enough to reach the largest
    // target diagonal entry, both signs, ordered by norm then coordinates.
    Rat max_diag = target.at(0, 0);
    for (int i = 1; i < n; ++i) max_diag = std::max(max_diag, target.at(i, i));
    auto reps = enumerate_up_to(source, max_diag / ratio);

    std::vector<Candidate> candidates;
    candidates.reserve(2 * reps.size());
    for (auto& [v, norm] : reps) {
        std::vector<Int> neg(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
        candidates.push_back({std::move(v), ratio * norm, {}});
        candidates.push_back({std::move(neg), candidates.back().norm, {}});
    }
    std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
        if (a.norm != b.norm) return a.norm < b.norm;
        return a.coords < b.coords;
    });
    for (Candidate& c : candidates) {
        c.gram_row.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            Rat s = 0;
            for (int j = 0; j < n; ++j) {
                if (c.coords[static_cast<std::size_t>(j)] == 0) continue;
                s += source.at(i, j) * Rat(c.coords[static_cast<std::size_t>(j)]);
            }
            c.gram_row[static_cast<std::size_t>(i)] = ratio * s;
        }
    }

    Search s{target, candidates, node_limit, 0, true, {}};
    s.chosen.reserve(static_cast<std::size_t>(n));
    if (s.extend(0)) {
        IntMat u(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) u.at(i, j) = s.chosen[static_cast<std::size_t>(i)]->coords[static_cast<std::size_t>(j)];
        IsometryWitness w{std::move(u), scale};
        if (!isometry_witness_valid(source, target, w))
            throw std::logic_error("find_isometry: produced witness failed validation");
        return {IsometryOutcome::Found, std::move(w)};
    }
    if (!s.exhausted) return {IsometryOutcome::Inconclusive, std::nullopt};
    return {IsometryOutcome::NotIsometric, std::nullopt};
}

}  // namespace biqlat
