#include "biqlat/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "biqlat/errors.hpp"

namespace biqlat {

LdlResult ldl_decompose(const GramMatrix& g) {
    if (!is_symmetric(g)) throw std::invalid_argument("ldl_decompose: matrix not symmetric");
    const int n = g.rows;
    RatMat a = g;
    LdlResult out;
    out.d.resize(static_cast<std::size_t>(n));
    out.mu = RatMat(n, n);
    for (int i = 0; i < n; ++i) {
        if (a.at(i, i) <= 0) return out;  // positive_definite stays false
        out.d[static_cast<std::size_t>(i)] = a.at(i, i);
        for (int j = i + 1; j < n; ++j) out.mu.at(i, j) = a.at(i, j) / a.at(i, i);
        for (int j = i + 1; j < n; ++j)
            for (int k = j; k < n; ++k) {
                Rat upd = a.at(j, k) - out.d[static_cast<std::size_t>(i)] * out.mu.at(i, j) * out.mu.at(i, k);
                a.at(j, k) = upd;
                a.at(k, j) = upd;
            }
    }
    out.positive_definite = true;
    return out;
}

namespace {

// Canonical representative of a +-pair: first nonzero coordinate positive.
void canonicalize(std::vector<Int>& v) {
    for (const Int& c : v) {
        if (c > 0) return;
        if (c < 0) {
            for (Int& x : v) x = -x;
            return;
        }
    }
}

// Depth-first enumeration over levels n-1 .. 0.  The admissible range for
// x_i is walked outward from the rounded center, so no square roots are
// needed: the valid integers form an interval around -c_i and the nearest
// integer to -c_i is tested first.
struct Enumerator {
    const LdlResult& ldl;
    int n;
    Rat bound;
    bool shrink;  // tighten bound to the best norm seen (shortest-vector mode)
    std::uint64_t node_limit;
    std::uint64_t nodes = 0;

    std::vector<Int> x;
    std::vector<std::pair<std::vector<Int>, Rat>> found;
    Rat best;  // only meaningful in shrink mode
    bool have_best = false;

    Enumerator(const LdlResult& l, const Rat& b, bool s, std::uint64_t limit)
        : ldl(l), n(static_cast<int>(l.d.size())), bound(b), shrink(s), node_limit(limit),
          x(static_cast<std::size_t>(n)) {}

    void record(const Rat& norm) {
        if (norm == 0) return;
        if (shrink) {
            if (!have_best || norm < best) {
                best = norm;
                have_best = true;
                bound = norm;
                found.clear();
            } else if (norm > best) {
                return;
            }
        }
        found.emplace_back(x, norm);
    }

    void level(int i, const Rat& used) {
        Rat center = 0;
        for (int j = i + 1; j < n; ++j)
            center += ldl.mu.at(i, j) * Rat(x[static_cast<std::size_t>(j)]);
        const Rat& di = ldl.d[static_cast<std::size_t>(i)];
        Rat budget = bound - used;

        Int rc = round_nearest(-center);
        for (int dir = 0; dir < 2; ++dir) {
            Int t = (dir == 0) ? rc : rc + 1;
            Int step = (dir == 0) ? -1 : 1;
            while (true) {
                if (++nodes > node_limit)
                    throw EnumerationLimitError("enumeration node limit exceeded");
                Rat offset = Rat(t) + center;
                Rat term = di * offset * offset;
                if (term > budget) break;
                x[static_cast<std::size_t>(i)] = t;
                if (i == 0)
                    record(used + term);
                else
                    level(i - 1, used + term);
                // In shrink mode the budget may have tightened mid-walk.
                budget = bound - used;
                t += step;
            }
        }
        x[static_cast<std::size_t>(i)] = 0;
    }

    void run() { level(n - 1, Rat(0)); }
};

std::vector<std::pair<std::vector<Int>, Rat>> dedupe_sorted(
    std::vector<std::pair<std::vector<Int>, Rat>> items) {
    for (auto& [v, norm] : items) canonicalize(v);
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second < b.second;
        return a.first < b.first;
    });
    items.erase(std::unique(items.begin(), items.end()), items.end());
    return items;
}

LdlResult require_pd(const GramMatrix& g) {
    LdlResult ldl = ldl_decompose(g);
    if (!ldl.positive_definite)
        throw NotPositiveDefiniteError("enumeration requires a positive-definite Gram matrix");
    return ldl;
}

}  // namespace

ShortVectorSet shortest_vectors(const GramMatrix& g, std::uint64_t node_limit) {
    LdlResult ldl = require_pd(g);
    Rat seed = g.at(0, 0);
    for (int i = 1; i < g.rows; ++i) seed = std::min(seed, g.at(i, i));

    Enumerator e(ldl, seed, /*shrink=*/true, node_limit);
    e.run();
    auto items = dedupe_sorted(std::move(e.found));

    ShortVectorSet out;
    out.gram = g;
    out.min_norm = e.best;
    for (auto& [v, norm] : items) {
        if (norm == e.best) out.vectors.push_back(std::move(v));
    }
    out.kissing = 2 * out.vectors.size();
    return out;
}

std::vector<std::pair<std::vector<Int>, Rat>> enumerate_up_to(const GramMatrix& g,
                                                              const Rat& bound,
                                                              std::uint64_t node_limit) {
    LdlResult ldl = require_pd(g);
    if (bound <= 0) return {};
    Enumerator e(ldl, bound, /*shrink=*/false, node_limit);
    e.run();
    return dedupe_sorted(std::move(e.found));
}

}  // namespace biqlat
