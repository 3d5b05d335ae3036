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
 * @file skew.hpp
 * @brief The skew-polynomial ring GF(q^n)[x;σ] with xb = b^q x.
 *
 * Multiplication follows (ax^i)(bx^j) = a·b^{q^i}·x^{i+j}; the ring is right
 * Euclidean, so right division and the greatest common right divisor exist.
 * Reducing exponents modulo n identifies skew polynomials with linearized
 * polynomials: x^i ↔ x^{q^i} (composition ↔ skew multiplication), which
 * yields the rank-via-gcd computation and the factorization of rank-(n−1)
 * polynomials into a permutation composed with kernel factors.
 */

#ifndef LINFIELD_SKEW_HPP
#define LINFIELD_SKEW_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "dickson.hpp"
#include "linpoly.hpp"

namespace linfield {

class SkewPoly {
   public:
    /// Trailing zero coefficients are trimmed; the zero polynomial is empty.
    SkewPoly(FieldTower tower, std::vector<FqnElem> coeffs) : tw_(std::move(tower)), c_(std::move(coeffs)) { trim(); }

    static SkewPoly zero(const FieldTower& t) { return SkewPoly(t, {}); }
    static SkewPoly constant(const FieldTower& t, const FqnElem& c) { return SkewPoly(t, {c}); }
    static SkewPoly one(const FieldTower& t) { return constant(t, t.one()); }
    /// x^n − 1, the modulus identifying GF(q^n)[x;σ] with reduced linearized
    /// polynomials.
    static SkewPoly cyclic_modulus(const FieldTower& t) {
        std::vector<FqnElem> c(t.n() + 1, t.zero());
        c[0] = t.neg(t.one());
        c[t.n()] = t.one();
        return SkewPoly(t, std::move(c));
    }

    const FieldTower& tower() const { return tw_; }
    const std::vector<FqnElem>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    /// Degree as a usual polynomial; −1 for the zero polynomial.
    int degree() const { return int(c_.size()) - 1; }
    const FqnElem& leading() const { return c_.back(); }

    bool operator==(const SkewPoly& o) const { return tw_ == o.tw_ && c_ == o.c_; }
    bool operator!=(const SkewPoly& o) const { return !(*this == o); }

    SkewPoly add(const SkewPoly& o) const {
        require_same_tower(tw_, o.tw_);
        std::vector<FqnElem> r(std::max(c_.size(), o.c_.size()), tw_.zero());
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = tw_.add(r[i], o.c_[i]);
        return SkewPoly(tw_, std::move(r));
    }
    SkewPoly sub(const SkewPoly& o) const {
        require_same_tower(tw_, o.tw_);
        std::vector<FqnElem> r(std::max(c_.size(), o.c_.size()), tw_.zero());
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = tw_.sub(r[i], o.c_[i]);
        return SkewPoly(tw_, std::move(r));
    }

    /// (Σ a_i x^i)(Σ b_j x^j) with the twist x^i b = b^{q^i} x^i.
    SkewPoly mul(const SkewPoly& o) const {
        require_same_tower(tw_, o.tw_);
        if (is_zero() || o.is_zero()) return zero(tw_);
        std::vector<FqnElem> r(c_.size() + o.c_.size() - 1, tw_.zero());
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (tw_.is_zero(c_[i])) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                r[i + j] = tw_.add(r[i + j], tw_.mul(c_[i], tw_.frobenius(o.c_[j], std::int64_t(i))));
        }
        return SkewPoly(tw_, std::move(r));
    }

    /// Left multiplication by a scalar (plain coefficient scaling).
    SkewPoly left_scale(const FqnElem& c) const {
        std::vector<FqnElem> r = c_;
        for (auto& x : r) x = tw_.mul(c, x);
        return SkewPoly(tw_, std::move(r));
    }

    SkewPoly monic() const {
        if (is_zero()) return *this;
        return left_scale(tw_.inv(leading()));
    }

   private:
    FieldTower tw_;
    std::vector<FqnElem> c_;

    void trim() {
        while (!c_.empty() && tw_.is_zero(c_.back())) c_.pop_back();
    }
};

/// f = quotient·g + remainder with deg remainder < deg g; unique.
inline std::pair<SkewPoly, SkewPoly> right_divide(const SkewPoly& f, const SkewPoly& g) {
    const auto& t = f.tower();
    require_same_tower(t, g.tower());
    if (g.is_zero()) throw Error(Errc::DivisionByZeroPoly, "right division by the zero polynomial");
    std::vector<FqnElem> rem = f.coeffs();
    const int dg = g.degree();
    std::vector<FqnElem> quo;
    auto deg_of = [&](const std::vector<FqnElem>& v) {
        int d = int(v.size()) - 1;
        while (d >= 0 && t.is_zero(v[std::size_t(d)])) --d;
        return d;
    };
    int dr = deg_of(rem);
    if (dr >= dg) quo.assign(std::size_t(dr - dg) + 1, t.zero());
    while (dr >= dg) {
        const int shift = dr - dg;
        // (c x^shift)(lead(g) x^dg) = c·lead(g)^{q^shift}·x^dr
        FqnElem c = t.mul(rem[std::size_t(dr)], t.inv(t.frobenius(g.leading(), shift)));
        quo[std::size_t(shift)] = t.add(quo[std::size_t(shift)], c);
        for (int j = 0; j <= dg; ++j)
            rem[std::size_t(shift + j)] = t.sub(rem[std::size_t(shift + j)], t.mul(c, t.frobenius(g.coeffs()[std::size_t(j)], shift)));
        dr = deg_of(rem);
    }
    return {SkewPoly(t, std::move(quo)), SkewPoly(t, std::move(rem))};
}

/// Monic greatest common right divisor via the right Euclidean chain.
inline SkewPoly rgcd(SkewPoly f, SkewPoly g) {
    require_same_tower(f.tower(), g.tower());
    if (f.is_zero() && g.is_zero()) throw Error(Errc::BothZero, "gcd of two zero polynomials");
    while (!g.is_zero()) {
        SkewPoly r = right_divide(f, g).second;
        f = g;
        g = r;
    }
    return f.monic();
}

/// x^i ↦ x^{q^i}, exponents reduced modulo n with coefficients adding.
inline LinPoly phi(const SkewPoly& s) {
    const auto& t = s.tower();
    std::vector<FqnElem> a(t.n(), t.zero());
    for (std::size_t i = 0; i < s.coeffs().size(); ++i) {
        std::size_t r = i % t.n();
        a[r] = t.add(a[r], s.coeffs()[i]);
    }
    return LinPoly(t, std::move(a));
}

inline SkewPoly phi_inv(const LinPoly& L) { return SkewPoly(L.tower(), L.coeffs()); }

/// rk L = n − deg rgcd(φ^{-1}(L), x^n − 1).
inline std::size_t rank_via_gcd(const LinPoly& L) {
    const auto& t = L.tower();
    SkewPoly g = rgcd(phi_inv(L), SkewPoly::cyclic_modulus(t));
    return t.n() - std::size_t(g.degree());
}

struct FactorChain {
    LinPoly permutation;          // L_r, a linearized permutation polynomial
    std::vector<FqnElem> gammas;  // kernel generators, innermost first
};

/// Recompose L_r ∘ (x^q − γ_{r−1}^{q−1}x) ∘ … ∘ (x^q − γ_0^{q−1}x).
inline LinPoly recompose(const FactorChain& fc) {
    const auto& t = fc.permutation.tower();
    LinPoly acc = fc.permutation;
    for (auto it = fc.gammas.rbegin(); it != fc.gammas.rend(); ++it) {
        LinPoly k = LinPoly::monomial(t, 1, t.one()).sub(LinPoly::monomial(t, 0, t.pow(*it, t.q() - 1)));
        acc = acc.compose(k);
    }
    return acc;
}

/// Peels kernel factors off a rank-(n−1) polynomial: at every step the
/// kernel is one-dimensional with generator γ, the factor x^q − γ^{q−1}x
/// right-divides exactly on the skew side, and the quotient's rank stays
/// ≥ n−1; the loop stops at a permutation. Termination: the skew degree
/// strictly drops each step.
inline FactorChain factor_chain(const LinPoly& L) {
    const auto& t = L.tower();
    if (L.is_zero() || DicksonMatrix::from_poly(L).rank() != t.n() - 1)
        throw Error(Errc::WrongRank, "factor chain requires rank exactly n - 1");
    FactorChain out{L, {}};
    LinPoly current = L;
    while (!is_permutation(current)) {
        auto ker = kernel_basis(current);
        if (ker.size() != 1) throw std::logic_error("kernel dimension is not 1 along the chain");
        const FqnElem gamma = ker[0];
        SkewPoly divisor(t, {t.neg(t.pow(gamma, t.q() - 1)), t.one()});
        auto [quo, rem] = right_divide(phi_inv(current), divisor);
        if (!rem.is_zero()) throw std::logic_error("kernel factor does not divide exactly");
        out.gammas.push_back(gamma);
        current = phi(quo);
    }
    out.permutation = current;
    // the side condition tr(γ_i / γ_{i−1}^q) ≠ 0 holds on every successful run
    for (std::size_t i = 1; i < out.gammas.size(); ++i) {
        FqnElem ratio = t.mul(out.gammas[i], t.inv(t.frobenius(out.gammas[i - 1], 1)));
        if (t.is_zero(t.trace(ratio))) throw std::logic_error("kernel generator landed on the forbidden hyperplane");
    }
    return out;
}

}  // namespace linfield

#endif
