#pragma once

#include <cassert>
#include <optional>
#include <utility>

#include "stringy/arith.hpp"

namespace stringy {

inline IMat identity_matrix(size_t n) {
    IMat I(n, IVec(n, 0));
    for (size_t i = 0; i < n; ++i) I[i][i] = 1;
    return I;
}

inline IMat transpose(const IMat& A) {
    if (A.empty()) return {};
    IMat T(A[0].size(), IVec(A.size()));
    for (size_t i = 0; i < A.size(); ++i)
        for (size_t j = 0; j < A[i].size(); ++j) T[j][i] = A[i][j];
    return T;
}

inline QMat transposeq(const QMat& A) {
    if (A.empty()) return {};
    QMat T(A[0].size(), QVec(A.size()));
    for (size_t i = 0; i < A.size(); ++i)
        for (size_t j = 0; j < A[i].size(); ++j) T[j][i] = A[i][j];
    return T;
}

inline QMat to_qmat(const IMat& A) {
    QMat Q(A.size());
    for (size_t i = 0; i < A.size(); ++i) Q[i] = to_qvec(A[i]);
    return Q;
}

// Reduced row echelon form in place; returns pivot columns.
inline std::vector<size_t> rref(QMat& A) {
    std::vector<size_t> pivots;
    if (A.empty()) return pivots;
    size_t rows = A.size(), cols = A[0].size(), r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && A[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(A[p], A[r]);
        Rat inv = 1 / A[r][c];
        for (size_t j = c; j < cols; ++j) A[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || A[i][c] == 0) continue;
            Rat f = A[i][c];
            for (size_t j = c; j < cols; ++j) A[i][j] -= f * A[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline size_t rank(QMat A) { return rref(A).size(); }

inline size_t rank(const IMat& A) { return rank(to_qmat(A)); }

// Rank of the differences p_i - p_0.
inline size_t affine_rank(const QMat& points) {
    if (points.size() <= 1) return 0;
    QMat D;
    for (size_t i = 1; i < points.size(); ++i) D.push_back(subq(points[i], points[0]));
    return rank(std::move(D));
}

// One solution of A x = b (free variables zero), or nullopt if inconsistent.
inline std::optional<QVec> solve(const QMat& A, const QVec& b) {
    size_t rows = A.size();
    size_t cols = rows ? A[0].size() : 0;
    QMat M(rows, QVec(cols + 1));
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j) M[i][j] = A[i][j];
        M[i][cols] = b[i];
    }
    std::vector<size_t> pivots = rref(M);
    for (size_t i = pivots.size(); i < rows; ++i)
        if (M[i][cols] != 0) return std::nullopt;
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    QVec x(cols, Rat(0));
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = M[i][cols];
    return x;
}

// Exact determinant of a square rational matrix.
inline Rat det(QMat A) {
    size_t n = A.size();
    Rat d = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && A[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(A[p], A[c]);
            d = -d;
        }
        d *= A[c][c];
        Rat inv = 1 / A[c][c];
        for (size_t i = c + 1; i < n; ++i) {
            if (A[i][c] == 0) continue;
            Rat f = A[i][c] * inv;
            for (size_t j = c; j < n; ++j) A[i][j] -= f * A[c][j];
        }
    }
    return d;
}

// Bareiss fraction-free determinant for integer matrices.
inline Int det(const IMat& A0) {
    IMat A = A0;
    size_t n = A.size();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (A[k][k] == 0) {
            size_t p = k + 1;
            while (p < n && A[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(A[p], A[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) / prev;
            }
            A[i][k] = 0;
        }
        prev = A[k][k];
    }
    return sign * A[n - 1][n - 1];
}

// Adjugate: adj(A) * A = det(A) * I.
inline IMat adjugate(const IMat& A) {
    size_t n = A.size();
    IMat C(n, IVec(n));
    if (n == 1) {
        C[0][0] = 1;
        return C;
    }
    IMat minor(n - 1, IVec(n - 1));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            for (size_t r = 0, mr = 0; r < n; ++r) {
                if (r == i) continue;
                for (size_t c = 0, mc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor[mr][mc++] = A[r][c];
                }
                ++mr;
            }
            Int m = det(minor);
            C[j][i] = ((i + j) % 2 == 0) ? m : -m;
        }
    }
    return C;
}

struct HermiteResult {
    IMat H; // row echelon, positive pivots, entries above a pivot reduced into [0, pivot)
    IMat U; // unimodular, H = U * A
};

inline HermiteResult hermite_normal_form(const IMat& A) {
    size_t rows = A.size();
    size_t cols = rows ? A[0].size() : 0;
    HermiteResult res{A, identity_matrix(rows)};
    IMat& H = res.H;
    IMat& U = res.U;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        while (true) {
            size_t best = rows;
            for (size_t i = r; i < rows; ++i) {
                if (H[i][c] == 0) continue;
                if (best == rows || abs(H[i][c]) < abs(H[best][c])) best = i;
            }
            if (best == rows) break;
            std::swap(H[best], H[r]);
            std::swap(U[best], U[r]);
            bool clean = true;
            for (size_t i = r + 1; i < rows; ++i) {
                if (H[i][c] == 0) continue;
                Int q = floor_div(H[i][c], H[r][c]);
                if (q != 0) {
                    for (size_t j = 0; j < cols; ++j) H[i][j] -= q * H[r][j];
                    for (size_t j = 0; j < rows; ++j) U[i][j] -= q * U[r][j];
                }
                if (H[i][c] != 0) clean = false;
            }
            if (clean) break;
        }
        if (H[r][c] == 0) continue;
        if (H[r][c] < 0) {
            for (size_t j = 0; j < cols; ++j) H[r][j] = -H[r][j];
            for (size_t j = 0; j < rows; ++j) U[r][j] = -U[r][j];
        }
        for (size_t i = 0; i < r; ++i) {
            Int q = floor_div(H[i][c], H[r][c]);
            if (q != 0) {
                for (size_t j = 0; j < cols; ++j) H[i][j] -= q * H[r][j];
                for (size_t j = 0; j < rows; ++j) U[i][j] -= q * U[r][j];
            }
        }
        ++r;
    }
    return res;
}

// Basis of the saturated lattice {x in Z^n : A x = 0}.
inline IMat integer_kernel(const IMat& A, size_t ncols) {
    if (A.empty()) return identity_matrix(ncols);
    IMat B = transpose(A); // ncols x m
    HermiteResult hr = hermite_normal_form(B);
    IMat basis;
    for (size_t i = 0; i < hr.H.size(); ++i) {
        if (is_zero(hr.H[i])) basis.push_back(hr.U[i]);
    }
    return basis;
}

// Basis of span_Q(rows) ∩ Z^n: integer points of the rational span, as a saturated lattice.
inline IMat lattice_basis_of_span(const IMat& spanning, size_t ncols) {
    IMat K = integer_kernel(spanning, ncols);
    return integer_kernel(K, ncols);
}

// Coordinates c with c * B = x, for B a basis of a lattice/space containing x.
inline QVec coordinates_in_basis(const IMat& B, const QVec& x) {
    QMat A = transposeq(to_qmat(B)); // ambient x k
    std::optional<QVec> c = solve(A, x);
    if (!c) throw InternalCheck("vector not in claimed span");
    return *c;
}

inline IVec integer_coordinates_in_basis(const IMat& B, const IVec& x) {
    return to_ivec(coordinates_in_basis(B, to_qvec(x)));
}

inline IVec matvec(const IMat& A, const IVec& x) {
    IVec y(A.size());
    for (size_t i = 0; i < A.size(); ++i) y[i] = dot(A[i], x);
    return y;
}

} // namespace stringy
