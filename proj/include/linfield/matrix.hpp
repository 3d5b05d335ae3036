/*
   Copyright 2026 The linfield authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/// @file matrix.hpp
/// Dense exact linear algebra over any field supplied as an ops object
/// (Gaussian elimination with exact pivoting; no fraction-free or blocked
/// variants). Used with GF(q) and GF(q^n) scalars.

#ifndef LINFIELD_MATRIX_HPP
#define LINFIELD_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "field.hpp"

namespace linfield {

/// Field-ops adapter for GF(q) entries.
struct FqOps {
    FieldTower tw;
    using Elem = FqElem;
    Elem zero() const { return tw.q_zero(); }
    Elem one() const { return tw.q_one(); }
    bool is_zero(const Elem& a) const { return tw.q_is_zero(a); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    Elem add(const Elem& a, const Elem& b) const { return tw.q_add(a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return tw.q_sub(a, b); }
    Elem neg(const Elem& a) const { return tw.q_neg(a); }
    Elem mul(const Elem& a, const Elem& b) const { return tw.q_mul(a, b); }
    Elem inv(const Elem& a) const { return tw.q_inv(a); }
    std::uint64_t size() const { return tw.q(); }
    Elem from_index(std::uint64_t i) const { return tw.q_from_index(i); }
};

/// Field-ops adapter for GF(q^n) entries.
struct FqnOps {
    FieldTower tw;
    using Elem = FqnElem;
    Elem zero() const { return tw.zero(); }
    Elem one() const { return tw.one(); }
    bool is_zero(const Elem& a) const { return tw.is_zero(a); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    Elem add(const Elem& a, const Elem& b) const { return tw.add(a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return tw.sub(a, b); }
    Elem neg(const Elem& a) const { return tw.neg(a); }
    Elem mul(const Elem& a, const Elem& b) const { return tw.mul(a, b); }
    Elem inv(const Elem& a) const { return tw.inv(a); }
    std::uint64_t size() const { return tw.cardinality(); }
    Elem from_index(std::uint64_t i) const { return tw.from_index(i); }
};

template <class Ops>
class Mat {
   public:
    using E = typename Ops::Elem;

    Mat(Ops ops, std::size_t rows, std::size_t cols)
        : ops_(std::move(ops)), rows_(rows), cols_(cols), a_(rows * cols, ops_.zero()) {}

    static Mat identity(Ops ops, std::size_t m) {
        Mat r(std::move(ops), m, m);
        for (std::size_t i = 0; i < m; ++i) r.at(i, i) = r.ops_.one();
        return r;
    }
    static Mat from_rows(Ops ops, const std::vector<std::vector<E>>& rows) {
        Mat r(std::move(ops), rows.size(), rows.empty() ? 0 : rows[0].size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < r.cols_; ++j) r.at(i, j) = rows[i].at(j);
        return r;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Ops& ops() const { return ops_; }
    E& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const E& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat mul(const Mat& o) const {
        Mat r(ops_, rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                if (ops_.is_zero(at(i, k))) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    r.at(i, j) = ops_.add(r.at(i, j), ops_.mul(at(i, k), o.at(k, j)));
            }
        return r;
    }
    Mat transpose() const {
        Mat r(ops_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }
    std::vector<E> apply(const std::vector<E>& x) const {
        std::vector<E> r(rows_, ops_.zero());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r[i] = ops_.add(r[i], ops_.mul(at(i, j), x[j]));
        return r;
    }

    /// Reduced row echelon form; pivot column indices appended in increasing
    /// row order when requested.
    Mat rref(std::vector<std::size_t>* pivots = nullptr) const {
        Mat m = *this;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t sel = r;
            while (sel < rows_ && ops_.is_zero(m.at(sel, c))) ++sel;
            if (sel == rows_) continue;
            m.swap_rows(sel, r);
            E piv = ops_.inv(m.at(r, c));
            for (std::size_t j = c; j < cols_; ++j) m.at(r, j) = ops_.mul(piv, m.at(r, j));
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r || ops_.is_zero(m.at(i, c))) continue;
                E factor = m.at(i, c);
                for (std::size_t j = c; j < cols_; ++j)
                    m.at(i, j) = ops_.sub(m.at(i, j), ops_.mul(factor, m.at(r, j)));
            }
            if (pivots) pivots->push_back(c);
            ++r;
        }
        return m;
    }

    std::size_t rank() const {
        std::vector<std::size_t> piv;
        rref(&piv);
        return piv.size();
    }

    /// Determinant by elimination; row swaps contribute a factor of −1.
    E determinant() const {
        Mat m = *this;
        E det = ops_.one();
        for (std::size_t c = 0; c < cols_; ++c) {
            std::size_t sel = c;
            while (sel < rows_ && ops_.is_zero(m.at(sel, c))) ++sel;
            if (sel == rows_) return ops_.zero();
            if (sel != c) {
                m.swap_rows(sel, c);
                det = ops_.neg(det);
            }
            det = ops_.mul(det, m.at(c, c));
            E piv = ops_.inv(m.at(c, c));
            for (std::size_t i = c + 1; i < rows_; ++i) {
                if (ops_.is_zero(m.at(i, c))) continue;
                E factor = ops_.mul(piv, m.at(i, c));
                for (std::size_t j = c; j < cols_; ++j)
                    m.at(i, j) = ops_.sub(m.at(i, j), ops_.mul(factor, m.at(c, j)));
            }
        }
        return det;
    }

    Mat minor_matrix(std::size_t row, std::size_t col) const {
        Mat r(ops_, rows_ - 1, cols_ - 1);
        for (std::size_t i = 0, ii = 0; i < rows_; ++i) {
            if (i == row) continue;
            for (std::size_t j = 0, jj = 0; j < cols_; ++j) {
                if (j == col) continue;
                r.at(ii, jj) = at(i, j);
                ++jj;
            }
            ++ii;
        }
        return r;
    }

    /// (i,j)-th cofactor: (−1)^{i+j} times the minor determinant.
    E cofactor(std::size_t i, std::size_t j) const {
        E d = rows_ == 1 ? ops_.one() : minor_matrix(i, j).determinant();
        return (i + j) % 2 == 0 ? d : ops_.neg(d);
    }

    /// Classical adjugate via cofactors. Well-defined for singular input,
    /// which the determinant-and-inverse shortcut is not.
    Mat adjugate() const {
        Mat r(ops_, rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = cofactor(i, j);
        return r;
    }

    std::optional<Mat> inverse() const {
        Mat aug(ops_, rows_, 2 * cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
            aug.at(i, cols_ + i) = ops_.one();
        }
        std::vector<std::size_t> piv;
        Mat red = aug.rref(&piv);
        if (piv.size() != rows_ || piv.back() >= cols_) return std::nullopt;
        Mat r(ops_, rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = red.at(i, cols_ + j);
        return r;
    }

    /// Canonical nullspace basis: RREF back-substitution, one vector per free
    /// column in increasing column order.
    std::vector<std::vector<E>> nullspace() const {
        std::vector<std::size_t> piv;
        Mat red = rref(&piv);
        std::vector<bool> is_pivot(cols_, false);
        for (auto c : piv) is_pivot[c] = true;
        std::vector<std::vector<E>> basis;
        for (std::size_t fc = 0; fc < cols_; ++fc) {
            if (is_pivot[fc]) continue;
            std::vector<E> v(cols_, ops_.zero());
            v[fc] = ops_.one();
            for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = ops_.neg(red.at(r, fc));
            basis.push_back(std::move(v));
        }
        return basis;
    }

    /// Solves A x = b; empty optional when inconsistent. For underdetermined
    /// systems returns the solution with zero free coordinates.
    std::optional<std::vector<E>> solve(const std::vector<E>& b) const {
        Mat aug(ops_, rows_, cols_ + 1);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
            aug.at(i, cols_) = b[i];
        }
        std::vector<std::size_t> piv;
        Mat red = aug.rref(&piv);
        if (!piv.empty() && piv.back() == cols_) return std::nullopt;
        std::vector<E> x(cols_, ops_.zero());
        for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = red.at(r, cols_);
        return x;
    }

   private:
    Ops ops_;
    std::size_t rows_, cols_;
    std::vector<E> a_;

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
    }
};

using MatFq = Mat<FqOps>;
using MatFqn = Mat<FqnOps>;

}  // namespace linfield

#endif
