#include "biqlat/boxenum.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace biqlat {

namespace {

template <typename T>
struct BoxState {
    T best{};
    bool have = false;
    std::vector<std::vector<int>> vecs;

    void offer(T v, const std::vector<int>& x) {
        if (v <= 0) return;
        if (!have || v < best) {
            best = v;
            have = true;
            vecs.assign(1, x);
        } else if (v == best) {
            vecs.push_back(x);
        }
    }

    void merge(BoxState&& o) {
        if (!o.have) return;
        if (!have || o.best < best) {
            best = std::move(o.best);
            have = true;
            vecs = std::move(o.vecs);
        } else if (o.best == best) {
            vecs.insert(vecs.end(), o.vecs.begin(), o.vecs.end());
        }
    }
};

// Canonical enumeration of [-B, B]^n: the first nonzero coordinate is kept
// positive, so each +-pair shows up exactly once.  The quadratic value is
// maintained incrementally; the innermost loop is two additions per point.
template <typename T>
class BoxKernel {
public:
    BoxKernel(const Matrix<T>& g, int radius) : g_(g), n_(g.rows), b_(radius) {}

    void subtree(std::vector<int>& x, int depth, const T& s, bool leading, BoxState<T>& st) const {
        if (depth == n_ - 1) {
            innermost(x, s, leading, st);
            return;
        }
        T lin{};
        for (int j = 0; j < depth; ++j) lin += g_.at(depth, j) * T(x[static_cast<std::size_t>(j)]);
        const T& gd = g_.at(depth, depth);
        for (int v = leading ? 0 : -b_; v <= b_; ++v) {
            x[static_cast<std::size_t>(depth)] = v;
            T sv = s + T(2 * v) * lin + T(v) * T(v) * gd;
            subtree(x, depth + 1, sv, leading && v == 0, st);
        }
        x[static_cast<std::size_t>(depth)] = 0;
    }

    int dim() const { return n_; }
    int radius() const { return b_; }

private:
    void innermost(std::vector<int>& x, const T& s, bool leading, BoxState<T>& st) const {
        const int d = n_ - 1;
        T lin{};
        for (int j = 0; j < d; ++j) lin += g_.at(d, j) * T(x[static_cast<std::size_t>(j)]);
        const T& gd = g_.at(d, d);
        int start = leading ? 1 : -b_;
        T val = s + T(2 * start) * lin + T(start) * T(start) * gd;
        for (int v = start; v <= b_; ++v) {
            if (!(leading && v == 0)) {
                x[static_cast<std::size_t>(d)] = v;
                st.offer(val, x);
            }
            val += T(2) * lin + gd * T(2 * v + 1);
        }
        x[static_cast<std::size_t>(d)] = 0;
    }

    const Matrix<T>& g_;
    int n_, b_;
};

template <typename T>
BoxState<T> run_serial(const Matrix<T>& g, int radius) {
    BoxKernel<T> kernel(g, radius);
    BoxState<T> st;
    std::vector<int> x(static_cast<std::size_t>(g.rows), 0);
    kernel.subtree(x, 0, T{}, true, st);
    return st;
}

template <typename T>
BoxState<T> run_parallel(const Matrix<T>& g, int radius) {
    const int n = g.rows;
    if (n < 3) return run_serial(g, radius);

    // Flatten the two outermost levels into independent tasks; results are
    // merged in task order, so scheduling cannot affect the output.
    struct Task {
        int x0, x1;
        bool leading;
    };
    std::vector<Task> tasks;
    for (int x0 = 0; x0 <= radius; ++x0) {
        int lo = (x0 == 0) ? 0 : -radius;
        for (int x1 = lo; x1 <= radius; ++x1)
            tasks.push_back({x0, x1, x0 == 0 && x1 == 0});
    }

    std::vector<BoxState<T>> partial(tasks.size());
    BoxKernel<T> kernel(g, radius);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::size_t t = 0; t < tasks.size(); ++t) {
        const Task& tk = tasks[t];
        std::vector<int> x(static_cast<std::size_t>(n), 0);
        x[0] = tk.x0;
        x[1] = tk.x1;
        T s = T(tk.x0) * T(tk.x0) * g.at(0, 0) + T(2 * tk.x0) * T(tk.x1) * g.at(1, 0) +
              T(tk.x1) * T(tk.x1) * g.at(1, 1);
        kernel.subtree(x, 2, s, tk.leading, partial[t]);
    }

    BoxState<T> st;
    for (auto& p : partial) st.merge(std::move(p));
    return st;
}

struct ScaledGram {
    IntMat g;
    Int denom;  // original = g / denom entrywise
};

ScaledGram scale_to_int(const GramMatrix& g) {
    Int lcm = 1;
    for (const Rat& v : g.a) lcm = boost::multiprecision::lcm(lcm, denominator(v));
    IntMat out(g.rows, g.cols);
    for (std::size_t i = 0; i < g.a.size(); ++i) out.a[i] = numerator(g.a[i] * Rat(lcm));
    return {std::move(out), lcm};
}

template <typename T>
BoxResult finish(const BoxState<T>& st, const Int& denom) {
    BoxResult out;
    if (!st.have) {
        out.min_norm = 0;
        return out;
    }
    out.min_norm = Rat(Int(st.best), denom);
    out.vectors.reserve(st.vecs.size());
    for (const auto& v : st.vecs) {
        std::vector<Int> w(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i];
        out.vectors.push_back(std::move(w));
    }
    std::sort(out.vectors.begin(), out.vectors.end());
    return out;
}

bool fits_int64(const IntMat& g, int radius) {
    Int maxabs = 0;
    for (const Int& v : g.a) maxabs = std::max(maxabs, Int(abs(v)));
    Int span = Int(g.rows) * radius;
    Int worst = 16 * maxabs * span * span;
    return worst < (Int(1) << 62);
}

Matrix<std::int64_t> to_i64(const IntMat& g) {
    Matrix<std::int64_t> out(g.rows, g.cols);
    for (std::size_t i = 0; i < g.a.size(); ++i) out.a[i] = g.a[i].convert_to<std::int64_t>();
    return out;
}

BoxResult box_run(const GramMatrix& g, int radius, bool parallel) {
    if (g.rows != g.cols || !is_symmetric(g))
        throw std::invalid_argument("box_enumerate: matrix must be square and symmetric");
    if (radius < 1) throw std::invalid_argument("box_enumerate: radius must be >= 1");
    ScaledGram sg = scale_to_int(g);
    if (fits_int64(sg.g, radius)) {
        auto gi = to_i64(sg.g);
        auto st = parallel ? run_parallel(gi, radius) : run_serial(gi, radius);
        return finish(st, sg.denom);
    }
    auto st = parallel ? run_parallel(sg.g, radius) : run_serial(sg.g, radius);
    return finish(st, sg.denom);
}

}  // namespace

BoxResult box_enumerate_serial(const GramMatrix& g, int radius) {
    return box_run(g, radius, false);
}

BoxResult box_enumerate_parallel(const GramMatrix& g, int radius) {
    return box_run(g, radius, true);
}

BoxResult box_enumerate(const GramMatrix& g, int radius) {
    double cells = 1;
    for (int i = 0; i < g.rows; ++i) cells *= 2 * radius + 1;
#ifdef _OPENMP
    if (cells > 100000.0) return box_run(g, radius, true);
#endif
    return box_run(g, radius, false);
}

}  // namespace biqlat
