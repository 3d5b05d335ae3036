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
 * @file linpoly.hpp
 * @brief Reduced linearized polynomials Σ a_i x^{q^i}, i = 0..n−1.
 *
 * A LinPoly always carries exactly n coefficients over GF(q^n); the induced
 * map of GF(q^n) is GF(q)-linear. Composition is the ring multiplication;
 * the brute-force rank/kernel/image routines here serve as oracles for the
 * structured backends.
 */

#ifndef LINFIELD_LINPOLY_HPP
#define LINFIELD_LINPOLY_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "field.hpp"
#include "matrix.hpp"

namespace linfield {

class LinPoly {
   public:
    /// coeffs must have exactly n entries (a_0, …, a_{n−1}).
    LinPoly(FieldTower tower, std::vector<FqnElem> coeffs) : tw_(std::move(tower)), a_(std::move(coeffs)) {
        if (a_.size() != tw_.n()) throw std::invalid_argument("LinPoly requires exactly n coefficients");
    }

    static LinPoly zero(const FieldTower& t) { return LinPoly(t, std::vector<FqnElem>(t.n(), t.zero())); }
    static LinPoly identity(const FieldTower& t) { return monomial(t, 0, t.one()); }
    /// c·x^{q^i}
    static LinPoly monomial(const FieldTower& t, std::uint32_t i, const FqnElem& c) {
        std::vector<FqnElem> a(t.n(), t.zero());
        a.at(i) = c;
        return LinPoly(t, std::move(a));
    }

    const FieldTower& tower() const { return tw_; }
    const std::vector<FqnElem>& coeffs() const { return a_; }
    const FqnElem& coeff(std::size_t i) const { return a_.at(i); }
    bool is_zero() const {
        for (const auto& c : a_)
            if (!tw_.is_zero(c)) return false;
        return true;
    }
    bool operator==(const LinPoly& o) const { return tw_ == o.tw_ && a_ == o.a_; }
    bool operator!=(const LinPoly& o) const { return !(*this == o); }

    /// Σ a_i x^{q^i} at the point x.
    FqnElem evaluate(const FqnElem& x) const {
        FqnElem acc = tw_.zero();
        FqnElem xqi = x;
        for (std::uint32_t i = 0; i < tw_.n(); ++i) {
            if (!tw_.is_zero(a_[i])) acc = tw_.add(acc, tw_.mul(a_[i], xqi));
            if (i + 1 < tw_.n()) xqi = tw_.frobenius(xqi, 1);
        }
        return acc;
    }

    LinPoly add(const LinPoly& o) const {
        require_same_tower(tw_, o.tw_);
        std::vector<FqnElem> c(tw_.n());
        for (std::uint32_t i = 0; i < tw_.n(); ++i) c[i] = tw_.add(a_[i], o.a_[i]);
        return LinPoly(tw_, std::move(c));
    }
    LinPoly sub(const LinPoly& o) const {
        require_same_tower(tw_, o.tw_);
        std::vector<FqnElem> c(tw_.n());
        for (std::uint32_t i = 0; i < tw_.n(); ++i) c[i] = tw_.sub(a_[i], o.a_[i]);
        return LinPoly(tw_, std::move(c));
    }
    /// Scalar multiple by c ∈ GF(q); rejects scalars outside the base field.
    LinPoly scale(const FqnElem& c) const {
        if (!tw_.in_base_field(c)) throw Error(Errc::ScalarNotInBaseField, "scalar is not fixed by x -> x^q");
        const FqElem s = c[0];
        std::vector<FqnElem> r(tw_.n());
        for (std::uint32_t i = 0; i < tw_.n(); ++i) r[i] = tw_.scalar_mul(s, a_[i]);
        return LinPoly(tw_, std::move(r));
    }

    /// Composition (this ∘ o): c_i = Σ_k a_k · o_{(i−k) mod n}^{q^k}.
    LinPoly compose(const LinPoly& o) const {
        require_same_tower(tw_, o.tw_);
        const std::uint32_t n = tw_.n();
        std::vector<FqnElem> c(n, tw_.zero());
        for (std::uint32_t k = 0; k < n; ++k) {
            if (tw_.is_zero(a_[k])) continue;
            for (std::uint32_t j = 0; j < n; ++j) {
                if (tw_.is_zero(o.a_[j])) continue;
                std::uint32_t i = (k + j) % n;
                c[i] = tw_.add(c[i], tw_.mul(a_[k], tw_.frobenius(o.a_[j], k)));
            }
        }
        return LinPoly(tw_, std::move(c));
    }

   private:
    FieldTower tw_;
    std::vector<FqnElem> a_;
};

/// GF(q)-coordinate matrix whose rows are the coordinate vectors of the
/// given elements in the monomial basis.
inline MatFq coordinate_rows(const FieldTower& t, const std::vector<FqnElem>& elems) {
    MatFq m(FqOps{t}, elems.size(), t.n());
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::uint32_t j = 0; j < t.n(); ++j) m.at(i, j) = elems[i][j];
    return m;
}

/// GF(q)-rank of a set of GF(q^n) elements by coordinate elimination.
inline std::size_t coordinate_rank(const FieldTower& t, const std::vector<FqnElem>& elems) {
    return coordinate_rows(t, elems).rank();
}

/// Canonical basis of the GF(q)-span of a set of elements: nonzero RREF rows
/// converted back to field elements. Deterministic, so two spans are equal
/// iff their canonical bases are equal.
inline std::vector<FqnElem> canonical_span(const FieldTower& t, const std::vector<FqnElem>& elems) {
    std::vector<std::size_t> piv;
    MatFq red = coordinate_rows(t, elems).rref(&piv);
    std::vector<FqnElem> basis;
    for (std::size_t r = 0; r < piv.size(); ++r) {
        FqnElem v = t.zero();
        for (std::uint32_t j = 0; j < t.n(); ++j) v[j] = red.at(r, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// GF(q)-dimension of the image, from the images of the monomial basis.
inline std::size_t rank_bruteforce(const LinPoly& L) {
    const auto& t = L.tower();
    std::vector<FqnElem> images;
    for (std::uint32_t i = 0; i < t.n(); ++i) images.push_back(L.evaluate(t.monomial(i)));
    return coordinate_rank(t, images);
}

/// Canonical echelon basis of the image.
inline std::vector<FqnElem> image_basis(const LinPoly& L) {
    const auto& t = L.tower();
    std::vector<FqnElem> images;
    for (std::uint32_t i = 0; i < t.n(); ++i) images.push_back(L.evaluate(t.monomial(i)));
    return canonical_span(t, images);
}

/// Canonical basis of {x : L(x) = 0}, from the nullspace of the coordinate
/// matrix of L. Always satisfies |kernel| + rank = n.
inline std::vector<FqnElem> kernel_basis(const LinPoly& L) {
    const auto& t = L.tower();
    MatFq m(FqOps{t}, t.n(), t.n());
    for (std::uint32_t j = 0; j < t.n(); ++j) {
        FqnElem img = L.evaluate(t.monomial(j));
        for (std::uint32_t i = 0; i < t.n(); ++i) m.at(i, j) = img[i];
    }
    std::vector<FqnElem> basis;
    for (const auto& v : m.nullspace()) {
        FqnElem x = t.zero();
        for (std::uint32_t j = 0; j < t.n(); ++j) x[j] = v[j];
        basis.push_back(std::move(x));
    }
    return basis;
}

/// Enumeration oracle for the kernel; only usable within the enumeration
/// bound.
inline std::vector<FqnElem> kernel_bruteforce(const LinPoly& L, std::uint64_t bound = kDefaultEnumBound) {
    const auto& t = L.tower();
    std::vector<FqnElem> ker;
    for (const auto& x : t.enumerate(bound))
        if (t.is_zero(L.evaluate(x))) ker.push_back(x);
    return ker;
}

}  // namespace linfield

#endif
