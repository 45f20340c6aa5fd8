#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "biqlat/ints.hpp"

namespace biqlat {

template <typename T>
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<T> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * static_cast<std::size_t>(c)) {}

    T& at(int i, int j) { return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(j)]; }
    const T& at(int i, int j) const { return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(j)]; }

    bool operator==(const Matrix&) const = default;

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
        return m;
    }
};

using IntMat = Matrix<Int>;
using RatMat = Matrix<Rat>;

// Gram matrices are exact symmetric rational matrices.
using GramMatrix = RatMat;

RatMat to_rat(const IntMat& m);
RatMat from_int_rows(const std::vector<std::vector<int>>& rows);
IntMat int_from_rows(const std::vector<std::vector<int>>& rows);

IntMat transpose(const IntMat& m);
RatMat transpose(const RatMat& m);
IntMat mat_mul(const IntMat& x, const IntMat& y);
RatMat mat_mul(const RatMat& x, const RatMat& y);
RatMat mat_scale(const Rat& c, const RatMat& m);
RatMat block_diag(const RatMat& x, const RatMat& y);
bool is_symmetric(const RatMat& m);

// Exact determinant by fraction-free (Bareiss) elimination.
Int det_bareiss(IntMat m);

// Exact determinant of a rational matrix: denominators are cleared
// column-wise, then Bareiss runs on the integer matrix.
Rat det_exact(const RatMat& m);

// Exact solve A x = b by rational Gaussian elimination; nullopt when A is
// singular.
std::optional<std::vector<Rat>> solve_linear(RatMat a, std::vector<Rat> b);

// All leading principal minors positive (checked via the rational LDL
// pivots); requires a symmetric matrix.
bool is_positive_definite(const RatMat& m);

}  // namespace biqlat
