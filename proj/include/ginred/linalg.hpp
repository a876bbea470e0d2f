/**
 * @file linalg.hpp
 * @brief Dense exact linear algebra: reduced row echelon form, rank, determinant,
 *        inverse. Everything is over an explicit field context.
 */
#pragma once

#include <optional>
#include <vector>

#include "ginred/fields.hpp"

namespace ginred {

template <FieldContext K>
class Matrix {
public:
    using Elem = typename K::Elem;

    Matrix(int rows, int cols, Elem fill = Elem{})
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * static_cast<size_t>(cols), fill) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Elem& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Elem& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

private:
    int rows_, cols_;
    std::vector<Elem> a_;
};

struct EchelonInfo {
    int rank = 0;
    std::vector<int> pivot_cols;
};

/// In-place reduced row echelon form; pivots scan columns left to right.
template <FieldContext K>
EchelonInfo reduced_row_echelon(Matrix<K>& m, const K& F) {
    EchelonInfo info;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int pivot = -1;
        for (int r = row; r < m.rows(); ++r) {
            if (!F.is_zero(m.at(r, col))) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int c = col; c < m.cols(); ++c) std::swap(m.at(pivot, c), m.at(row, c));
        typename K::Elem inv = F.inv(m.at(row, col));
        for (int c = col; c < m.cols(); ++c) m.at(row, c) = F.mul(m.at(row, c), inv);
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row || F.is_zero(m.at(r, col))) continue;
            typename K::Elem factor = m.at(r, col);
            for (int c = col; c < m.cols(); ++c)
                m.at(r, c) = F.sub(m.at(r, c), F.mul(factor, m.at(row, c)));
        }
        info.pivot_cols.push_back(col);
        ++row;
    }
    info.rank = row;
    return info;
}

template <FieldContext K>
int rank_of(Matrix<K> m, const K& F) {
    return reduced_row_echelon(m, F).rank;
}

template <FieldContext K>
typename K::Elem determinant(Matrix<K> m, const K& F) {
    if (m.rows() != m.cols()) throw Error("determinant of a non-square matrix");
    typename K::Elem det = F.one();
    for (int col = 0; col < m.cols(); ++col) {
        int pivot = -1;
        for (int r = col; r < m.rows(); ++r) {
            if (!F.is_zero(m.at(r, col))) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return F.zero();
        if (pivot != col) {
            for (int c = 0; c < m.cols(); ++c) std::swap(m.at(pivot, c), m.at(col, c));
            det = F.neg(det);
        }
        det = F.mul(det, m.at(col, col));
        typename K::Elem inv = F.inv(m.at(col, col));
        for (int r = col + 1; r < m.rows(); ++r) {
            if (F.is_zero(m.at(r, col))) continue;
            typename K::Elem factor = F.mul(m.at(r, col), inv);
            for (int c = col; c < m.cols(); ++c)
                m.at(r, c) = F.sub(m.at(r, c), F.mul(factor, m.at(col, c)));
        }
    }
    return det;
}

template <FieldContext K>
std::optional<Matrix<K>> inverse(const Matrix<K>& m, const K& F) {
    if (m.rows() != m.cols()) throw Error("inverse of a non-square matrix");
    int n = m.rows();
    Matrix<K> aug(n, 2 * n, F.zero());
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, n + r) = F.one();
    }
    if (reduced_row_echelon(aug, F).rank < n) return std::nullopt;
    Matrix<K> inv(n, n, F.zero());
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) inv.at(r, c) = aug.at(r, n + c);
    return inv;
}

template <FieldContext K>
Matrix<K> matmul(const Matrix<K>& a, const Matrix<K>& b, const K& F) {
    if (a.cols() != b.rows()) throw Error("matrix shape mismatch");
    Matrix<K> r(a.rows(), b.cols(), F.zero());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (F.is_zero(a.at(i, k))) continue;
            for (int j = 0; j < b.cols(); ++j)
                r.at(i, j) = F.add(r.at(i, j), F.mul(a.at(i, k), b.at(k, j)));
        }
    return r;
}

}  // namespace ginred
