// Internal exact integer linear algebra helpers shared by the toric and cone code.
#pragma once

#include "canonfan/rational.hpp"

#include <algorithm>
#include <vector>

namespace canonfan::detail {

using IntRow = std::vector<Integer>;

/// Basis of the left-kernel lattice {u : Σ u_i · rows_i = 0}, via row reduction
/// with a unimodular transform. The basis generates the full (saturated) kernel.
inline std::vector<IntRow> kernel_lattice(const std::vector<IntRow>& rows) {
    const std::size_t s = rows.size();
    if (s == 0) return {};
    const std::size_t n = rows.front().size();
    std::vector<IntRow> A(rows);
    std::vector<IntRow> U(s, IntRow(s, 0));
    for (std::size_t i = 0; i < s; ++i) U[i][i] = 1;

    std::size_t pivot = 0;
    for (std::size_t col = 0; col < n && pivot < s; ++col) {
        for (;;) {
            std::size_t best = s;
            for (std::size_t i = pivot; i < s; ++i)
                if (A[i][col] != 0 && (best == s || abs(A[i][col]) < abs(A[best][col])))
                    best = i;
            if (best == s) break;
            std::swap(A[pivot], A[best]);
            std::swap(U[pivot], U[best]);
            bool clean = true;
            for (std::size_t i = pivot + 1; i < s; ++i) {
                if (A[i][col] == 0) continue;
                Integer q = A[i][col] / A[pivot][col];
                if (q != 0) {
                    for (std::size_t j = 0; j < n; ++j) A[i][j] -= q * A[pivot][j];
                    for (std::size_t j = 0; j < s; ++j) U[i][j] -= q * U[pivot][j];
                }
                if (A[i][col] != 0) clean = false;
            }
            if (clean) {
                ++pivot;
                break;
            }
        }
    }

    std::vector<IntRow> kernel;
    for (std::size_t i = 0; i < s; ++i)
        if (std::all_of(A[i].begin(), A[i].end(), [](const Integer& x) { return x == 0; }))
            kernel.push_back(U[i]);
    return kernel;
}

inline int rank(std::vector<IntRow> A) {
    if (A.empty()) return 0;
    const std::size_t n = A.front().size();
    std::size_t pivot = 0;
    for (std::size_t col = 0; col < n && pivot < A.size(); ++col) {
        std::size_t best = A.size();
        for (std::size_t i = pivot; i < A.size(); ++i)
            if (A[i][col] != 0) {
                best = i;
                break;
            }
        if (best == A.size()) continue;
        std::swap(A[pivot], A[best]);
        for (std::size_t i = pivot + 1; i < A.size(); ++i) {
            if (A[i][col] == 0) continue;
            Integer a = A[pivot][col], b = A[i][col];
            for (std::size_t j = 0; j < n; ++j) A[i][j] = A[i][j] * a - A[pivot][j] * b;
        }
        ++pivot;
    }
    return static_cast<int>(pivot);
}

/// Row-style Hermite normal form (canonical representative of the row lattice):
/// pivots positive, entries above pivots reduced into [0, pivot).
inline std::vector<IntRow> hermite_normal_form(std::vector<IntRow> A) {
    if (A.empty()) return A;
    const std::size_t n = A.front().size();
    std::size_t pivot_row = 0;
    std::vector<std::size_t> pivot_cols;
    for (std::size_t col = 0; col < n && pivot_row < A.size(); ++col) {
        for (;;) {
            std::size_t best = A.size();
            for (std::size_t i = pivot_row; i < A.size(); ++i)
                if (A[i][col] != 0 && (best == A.size() || abs(A[i][col]) < abs(A[best][col])))
                    best = i;
            if (best == A.size()) break;
            std::swap(A[pivot_row], A[best]);
            bool clean = true;
            for (std::size_t i = pivot_row + 1; i < A.size(); ++i) {
                if (A[i][col] == 0) continue;
                Integer q = A[i][col] / A[pivot_row][col];
                if (q != 0)
                    for (std::size_t j = 0; j < n; ++j) A[i][j] -= q * A[pivot_row][j];
                if (A[i][col] != 0) clean = false;
            }
            if (clean) {
                if (A[pivot_row][col] < 0)
                    for (std::size_t j = 0; j < n; ++j) A[pivot_row][j] = -A[pivot_row][j];
                // Reduce the entries above the pivot into [0, pivot).
                for (std::size_t i = 0; i < pivot_row; ++i) {
                    Integer q = A[i][col] / A[pivot_row][col];
                    if (A[i][col] - q * A[pivot_row][col] < 0) q -= 1;
                    if (q != 0)
                        for (std::size_t j = 0; j < n; ++j) A[i][j] -= q * A[pivot_row][j];
                }
                pivot_cols.push_back(col);
                ++pivot_row;
                break;
            }
        }
    }
    A.resize(pivot_row);
    return A;
}

}  // namespace canonfan::detail
