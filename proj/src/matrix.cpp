#include "biqlat/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace biqlat {

RatMat to_rat(const IntMat& m) {
    RatMat out(m.rows, m.cols);
    for (std::size_t i = 0; i < m.a.size(); ++i) out.a[i] = Rat(m.a[i]);
    return out;
}

RatMat from_int_rows(const std::vector<std::vector<int>>& rows) {
    RatMat out(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (int i = 0; i < out.rows; ++i)
        for (int j = 0; j < out.cols; ++j) out.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return out;
}

IntMat int_from_rows(const std::vector<std::vector<int>>& rows) {
    IntMat out(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (int i = 0; i < out.rows; ++i)
        for (int j = 0; j < out.cols; ++j) out.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return out;
}

template <typename T>
static Matrix<T> transpose_impl(const Matrix<T>& m) {
    Matrix<T> out(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) out.at(j, i) = m.at(i, j);
    return out;
}

IntMat transpose(const IntMat& m) { return transpose_impl(m); }
RatMat transpose(const RatMat& m) { return transpose_impl(m); }

template <typename T>
static Matrix<T> mul_impl(const Matrix<T>& x, const Matrix<T>& y) {
    if (x.cols != y.rows) throw std::invalid_argument("mat_mul: shape mismatch");
    Matrix<T> out(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const T& v = x.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < y.cols; ++j) out.at(i, j) += v * y.at(k, j);
        }
    return out;
}

IntMat mat_mul(const IntMat& x, const IntMat& y) { return mul_impl(x, y); }
RatMat mat_mul(const RatMat& x, const RatMat& y) { return mul_impl(x, y); }

RatMat mat_scale(const Rat& c, const RatMat& m) {
    RatMat out = m;
    for (Rat& v : out.a) v *= c;
    return out;
}

RatMat block_diag(const RatMat& x, const RatMat& y) {
    RatMat out(x.rows + y.rows, x.cols + y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) out.at(i, j) = x.at(i, j);
    for (int i = 0; i < y.rows; ++i)
        for (int j = 0; j < y.cols; ++j) out.at(x.rows + i, x.cols + j) = y.at(i, j);
    return out;
}

bool is_symmetric(const RatMat& m) {
    if (m.rows != m.cols) return false;
    for (int i = 0; i < m.rows; ++i)
        for (int j = i + 1; j < m.cols; ++j)
            if (m.at(i, j) != m.at(j, i)) return false;
    return true;
}

Int det_bareiss(IntMat m) {
    if (m.rows != m.cols) throw std::invalid_argument("det_bareiss: matrix not square");
    const int n = m.rows;
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) { piv = i; break; }
            if (piv < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

Rat det_exact(const RatMat& m) {
    if (m.rows != m.cols) throw std::invalid_argument("det_exact: matrix not square");
    IntMat z(m.rows, m.cols);
    Rat scale = 1;
    for (int j = 0; j < m.cols; ++j) {
        Int lcm = 1;
        for (int i = 0; i < m.rows; ++i)
            lcm = boost::multiprecision::lcm(lcm, denominator(m.at(i, j)));
        for (int i = 0; i < m.rows; ++i) {
            Rat v = m.at(i, j) * Rat(lcm);
            z.at(i, j) = numerator(v);
        }
        scale *= Rat(1, lcm);
    }
    return Rat(det_bareiss(std::move(z))) * scale;
}

std::optional<std::vector<Rat>> solve_linear(RatMat a, std::vector<Rat> b) {
    if (a.rows != a.cols || static_cast<int>(b.size()) != a.rows)
        throw std::invalid_argument("solve_linear: shape mismatch");
    const int n = a.rows;
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (a.at(i, k) != 0) { piv = i; break; }
        if (piv < 0) return std::nullopt;
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(piv, j));
            std::swap(b[static_cast<std::size_t>(k)], b[static_cast<std::size_t>(piv)]);
        }
        for (int i = k + 1; i < n; ++i) {
            if (a.at(i, k) == 0) continue;
            Rat f = a.at(i, k) / a.at(k, k);
            for (int j = k; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
            b[static_cast<std::size_t>(i)] -= f * b[static_cast<std::size_t>(k)];
        }
    }
    std::vector<Rat> x(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        Rat s = b[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j) s -= a.at(i, j) * x[static_cast<std::size_t>(j)];
        x[static_cast<std::size_t>(i)] = s / a.at(i, i);
    }
    return x;
}

bool is_positive_definite(const RatMat& m) {
    if (!is_symmetric(m)) return false;
    // Rational symmetric elimination; all pivots positive iff PD.
    RatMat a = m;
    const int n = a.rows;
    for (int k = 0; k < n; ++k) {
        if (a.at(k, k) <= 0) return false;
        for (int i = k + 1; i < n; ++i) {
            if (a.at(i, k) == 0) continue;
            Rat f = a.at(i, k) / a.at(k, k);
            for (int j = k; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
        }
    }
    return true;
}

}  // namespace biqlat
