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

/**
 * @file dickson.hpp
 * @brief σ-circulant (Dickson) matrices attached to linearized polynomials.
 *
 * The matrix of L(x) = Σ a_i x^{q^i} has (i,j) entry a_{(j−i) mod n}^{q^i};
 * it is stored by its first row only, so the σ-circulant structure cannot be
 * violated by construction. Mapping L ↦ D_L turns composition into matrix
 * multiplication, rank into matrix rank and the compositional inverse into
 * the adjugate divided by the determinant.
 */

#ifndef LINFIELD_DICKSON_HPP
#define LINFIELD_DICKSON_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "linpoly.hpp"

namespace linfield {

class DicksonMatrix {
   public:
    DicksonMatrix(FieldTower tower, std::vector<FqnElem> first_row) : tw_(std::move(tower)), row_(std::move(first_row)) {
        if (row_.size() != tw_.n()) throw std::invalid_argument("Dickson first row must have n entries");
    }

    static DicksonMatrix from_poly(const LinPoly& L) { return DicksonMatrix(L.tower(), L.coeffs()); }

    /// Rebuilds from a full n×n matrix, verifying the σ-circulant structure
    /// entry by entry.
    static DicksonMatrix from_full(const MatFqn& m) {
        const FieldTower& t = m.ops().tw;
        if (m.rows() != t.n() || m.cols() != t.n()) throw Error(Errc::NotDickson, "matrix is not n x n");
        std::vector<FqnElem> row;
        for (std::size_t j = 0; j < t.n(); ++j) row.push_back(m.at(0, j));
        DicksonMatrix d(t, row);
        if (d.full() != m) throw Error(Errc::NotDickson, "matrix violates the sigma-circulant structure");
        return d;
    }

    const FieldTower& tower() const { return tw_; }
    const std::vector<FqnElem>& first_row() const { return row_; }
    LinPoly to_poly() const { return LinPoly(tw_, row_); }

    /// entry(i, j) = a_{(j−i) mod n}^{q^i}
    FqnElem entry(std::uint32_t i, std::uint32_t j) const {
        const std::uint32_t n = tw_.n();
        const std::uint32_t ii = i % n;
        return tw_.frobenius(row_[(j % n + n - ii) % n], ii);
    }

    MatFqn full() const {
        const std::uint32_t n = tw_.n();
        MatFqn m(FqnOps{tw_}, n, n);
        for (std::uint32_t i = 0; i < n; ++i)
            for (std::uint32_t j = 0; j < n; ++j) m.at(i, j) = entry(i, j);
        return m;
    }

    bool operator==(const DicksonMatrix& o) const { return tw_ == o.tw_ && row_ == o.row_; }
    bool operator!=(const DicksonMatrix& o) const { return !(*this == o); }

    /// Product via the first-row convolution c_i = Σ_k a_k b_{(i−k) mod n}^{q^k};
    /// equals the full n×n matrix product.
    DicksonMatrix mul(const DicksonMatrix& o) const {
        require_same_tower(tw_, o.tw_);
        return from_poly(to_poly().compose(o.to_poly()));
    }

    std::size_t rank() const { return full().rank(); }

    /// Determinant over GF(q^n); always lands in GF(q).
    FqnElem determinant() const {
        FqnElem d = full().determinant();
        if (!tw_.in_base_field(d)) throw std::logic_error("Dickson determinant left GF(q)");
        return d;
    }

    /// Classical adjugate; the result is again σ-circulant and satisfies
    /// D·D* = D*·D = det(D)·I.
    DicksonMatrix adjugate() const { return from_full(full().adjugate()); }

   private:
    FieldTower tw_;
    std::vector<FqnElem> row_;
};

/// The (i,0) cofactors ā_i of D_L, i.e. the coefficients of the adjugate
/// polynomial.
inline std::vector<FqnElem> first_column_cofactors(const LinPoly& L) {
    MatFqn d = DicksonMatrix::from_poly(L).full();
    std::vector<FqnElem> cof;
    for (std::uint32_t i = 0; i < L.tower().n(); ++i) cof.push_back(d.cofactor(i, 0));
    return cof;
}

/// det L by Laplace expansion along the first column: Σ_i a_{(n−i) mod n}^{q^i} ā_i.
inline FqnElem det_laplace(const LinPoly& L) {
    const auto& t = L.tower();
    const std::uint32_t n = t.n();
    auto cof = first_column_cofactors(L);
    FqnElem det = t.zero();
    for (std::uint32_t i = 0; i < n; ++i)
        det = t.add(det, t.mul(t.frobenius(L.coeff((n - i) % n), i), cof[i]));
    return det;
}

/// Polynomial attached to the adjugate of D_L. Identically zero when
/// rk L ≤ n−2; satisfies L ∘ L* = L* ∘ L = det(L)·x in all cases.
inline LinPoly adjugate_poly(const LinPoly& L) {
    return DicksonMatrix::from_poly(L).adjugate().to_poly();
}

/// Dickson's criterion, generalized: L permutes GF(q^n) iff rk D_L = n.
inline bool is_permutation(const LinPoly& L) {
    return DicksonMatrix::from_poly(L).rank() == L.tower().n();
}

/// Compositional inverse of a linearized permutation polynomial:
/// (1/det L) Σ ā_i x^{q^i}. The expansion determinant is cross-checked
/// against the elimination determinant.
inline LinPoly inverse_poly(const LinPoly& L) {
    const auto& t = L.tower();
    DicksonMatrix d = DicksonMatrix::from_poly(L);
    FqnElem det = d.determinant();
    if (t.is_zero(det)) throw Error(Errc::NotAPermutation, "det D_L = 0");
    if (det_laplace(L) != det) throw std::logic_error("cofactor determinant disagrees with elimination");
    FqnElem dinv = t.inv(det);
    auto cof = first_column_cofactors(L);
    std::vector<FqnElem> coeffs;
    for (const auto& c : cof) coeffs.push_back(t.mul(dinv, c));
    return LinPoly(t, std::move(coeffs));
}

}  // namespace linfield

#endif
