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
 * @file moore.hpp
 * @brief Moore matrices, dual bases and trace-form representations.
 *
 * The Moore matrix of generators (α_0, …, α_{k−1}) has (i,j) entry
 * α_j^{q^i}; its rank equals the GF(q)-rank of the generators, which makes
 * it the workhorse behind dual bases and the three trace-form
 * representations of a linearized polynomial:
 *
 *   (1)  L(x) = Σ tr(α'_i x) β_i          (n pairs, dual side)
 *   (2)  L(x) = Σ tr(β_i x) α_i           (n pairs, α_i = L(β_i*))
 *   (3)  L(x) = Σ tr(ω_i x) θ_i           (exactly rk L pairs)
 *
 * A TraceForm stores (ω_i, θ_i) pairs with evaluation Σ tr(ω_i x)·θ_i.
 */

#ifndef LINFIELD_MOORE_HPP
#define LINFIELD_MOORE_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dickson.hpp"
#include "linpoly.hpp"

namespace linfield {

/// k×k matrix with (i,j) entry α_j^{q^i}.
inline MatFqn moore_matrix(const FieldTower& t, const std::vector<FqnElem>& gens) {
    MatFqn m(FqnOps{t}, gens.size(), gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j) {
        FqnElem cur = gens[j];
        for (std::size_t i = 0; i < gens.size(); ++i) {
            m.at(i, j) = cur;
            if (i + 1 < gens.size()) cur = t.frobenius(cur, 1);
        }
    }
    return m;
}

/// Rank of the Moore matrix. Always recomputed through the independent
/// coordinate-elimination path as a built-in cross-check.
inline std::size_t moore_rank(const FieldTower& t, const std::vector<FqnElem>& gens) {
    std::size_t r = moore_matrix(t, gens).rank();
    if (r != coordinate_rank(t, gens)) throw std::logic_error("Moore rank disagrees with coordinate rank");
    return r;
}

/// Dual basis {β_i*} with tr(β_i β_j*) = δ_ij, read off the inverse of the
/// Moore matrix of the basis.
inline std::vector<FqnElem> dual_basis(const FieldTower& t, const std::vector<FqnElem>& basis) {
    if (basis.size() != t.n() || moore_rank(t, basis) != t.n())
        throw Error(Errc::NotABasis, "generators do not form a basis of GF(q^n) over GF(q)");
    auto inv = moore_matrix(t, basis).inverse();
    if (!inv) throw Error(Errc::NotABasis, "Moore matrix is singular");
    std::vector<FqnElem> dual;
    for (std::uint32_t i = 0; i < t.n(); ++i) dual.push_back(inv->at(i, 0));
    for (std::uint32_t i = 0; i < t.n(); ++i)
        for (std::uint32_t j = 0; j < t.n(); ++j) {
            FqnElem tr = t.trace(t.mul(basis[i], dual[j]));
            if (tr != (i == j ? t.one() : t.zero())) throw std::logic_error("dual basis violates tr(b_i b_j*) = delta_ij");
        }
    return dual;
}

class TraceForm {
   public:
    using Pair = std::pair<FqnElem, FqnElem>;  // (ω, θ)

    TraceForm(FieldTower tower, std::vector<Pair> pairs) : tw_(std::move(tower)), pairs_(std::move(pairs)) {}

    static TraceForm empty(const FieldTower& t) { return TraceForm(t, {}); }

    const FieldTower& tower() const { return tw_; }
    const std::vector<Pair>& pairs() const { return pairs_; }
    std::size_t size() const { return pairs_.size(); }

    /// Σ tr(ω_i x)·θ_i
    FqnElem evaluate(const FqnElem& x) const {
        FqnElem acc = tw_.zero();
        for (const auto& [w, th] : pairs_)
            acc = tw_.add(acc, tw_.scalar_mul(tw_.to_base_field(tw_.trace(tw_.mul(w, x))), th));
        return acc;
    }

    std::vector<FqnElem> omegas() const {
        std::vector<FqnElem> r;
        for (const auto& pr : pairs_) r.push_back(pr.first);
        return r;
    }
    std::vector<FqnElem> thetas() const {
        std::vector<FqnElem> r;
        for (const auto& pr : pairs_) r.push_back(pr.second);
        return r;
    }

    bool operator==(const TraceForm& o) const { return tw_ == o.tw_ && pairs_ == o.pairs_; }
    bool operator!=(const TraceForm& o) const { return !(*this == o); }

   private:
    FieldTower tw_;
    std::vector<Pair> pairs_;
};

/// Coefficient expansion of a trace form: tr(ωx)θ = Σ_i θ ω^{q^i} x^{q^i},
/// so a_i = Σ_l θ_l ω_l^{q^i}.
inline LinPoly from_trace_form(const TraceForm& tf) {
    const auto& t = tf.tower();
    std::vector<FqnElem> a(t.n(), t.zero());
    for (const auto& [w, th] : tf.pairs()) {
        FqnElem wqi = w;
        for (std::uint32_t i = 0; i < t.n(); ++i) {
            a[i] = t.add(a[i], t.mul(th, wqi));
            if (i + 1 < t.n()) wqi = t.frobenius(wqi, 1);
        }
    }
    return LinPoly(t, std::move(a));
}

/// Representation (2): pairs (β_i, α_i) with α_i = L(β_i*).
inline TraceForm to_trace_form_full(const LinPoly& L, const std::vector<FqnElem>& basis) {
    const auto& t = L.tower();
    auto dual = dual_basis(t, basis);
    std::vector<TraceForm::Pair> pairs;
    for (std::uint32_t i = 0; i < t.n(); ++i) pairs.emplace_back(basis[i], L.evaluate(dual[i]));
    return TraceForm(t, std::move(pairs));
}

/// Representation (1): pairs (α'_i, β_i), the α'_i solved from the Moore
/// system D_L = (β_j^{q^i})·(α'_i^{q^j}).
inline TraceForm to_trace_form_dualside(const LinPoly& L, const std::vector<FqnElem>& basis) {
    const auto& t = L.tower();
    if (basis.size() != t.n() || moore_rank(t, basis) != t.n())
        throw Error(Errc::NotABasis, "generators do not form a basis of GF(q^n) over GF(q)");
    auto binv = moore_matrix(t, basis).inverse();
    if (!binv) throw Error(Errc::NotABasis, "Moore matrix is singular");
    MatFqn ap = binv->mul(DicksonMatrix::from_poly(L).full());
    std::vector<TraceForm::Pair> pairs;
    for (std::uint32_t i = 0; i < t.n(); ++i) {
        FqnElem alpha = ap.at(i, 0);
        for (std::uint32_t j = 0; j < t.n(); ++j)
            if (ap.at(i, j) != t.frobenius(alpha, j)) throw std::logic_error("solved matrix is not of Moore-transpose shape");
        pairs.emplace_back(alpha, basis[i]);
    }
    return TraceForm(t, std::move(pairs));
}

/// Representation (3): exactly rk L pairs, with the canonical echelon image
/// basis on the θ side.
inline TraceForm compact_form(const LinPoly& L) {
    const auto& t = L.tower();
    const std::uint32_t n = t.n();
    auto thetas = image_basis(L);
    const std::size_t k = thetas.size();
    if (k == 0) return TraceForm::empty(t);

    MatFq theta_cols(FqOps{t}, n, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::uint32_t r = 0; r < n; ++r) theta_cols.at(r, i) = thetas[i][r];

    auto dual = dual_basis(t, t.monomial_basis());
    // coordinates of L(v^j) in the θ basis give the j-th value of each
    // coordinate functional; assembling against the dual basis yields ω_i.
    std::vector<FqnElem> omegas(k, t.zero());
    for (std::uint32_t j = 0; j < n; ++j) {
        FqnElem img = L.evaluate(t.monomial(j));
        std::vector<FqElem> rhs(n);
        for (std::uint32_t r = 0; r < n; ++r) rhs[r] = img[r];
        auto c = theta_cols.solve(rhs);
        if (!c) throw std::logic_error("image vector left the image span");
        for (std::size_t i = 0; i < k; ++i)
            omegas[i] = t.add(omegas[i], t.scalar_mul((*c)[i], dual[j]));
    }
    std::vector<TraceForm::Pair> pairs;
    for (std::size_t i = 0; i < k; ++i) pairs.emplace_back(omegas[i], thetas[i]);
    TraceForm tf(t, std::move(pairs));
    if (coordinate_rank(t, tf.omegas()) != k) throw std::logic_error("compact form omega side is rank-deficient");
    return tf;
}

/// Inverse of a permutation given in representation (2) over a basis:
/// L = Σ tr(β_i x) α_i with {α_i} a basis has L^{-1} = Σ tr(α_i* x) β_i*.
inline TraceForm inverse_via_dual(const TraceForm& tf, const std::vector<FqnElem>& basis) {
    const auto& t = tf.tower();
    if (tf.size() != t.n()) throw std::invalid_argument("trace form is not in full n-pair form");
    for (std::uint32_t i = 0; i < t.n(); ++i)
        if (tf.pairs()[i].first != basis[i]) throw std::invalid_argument("trace form is not over the given basis");
    auto alphas = tf.thetas();
    if (moore_rank(t, alphas) != t.n()) throw Error(Errc::NotABasis, "alpha side is not a basis");
    auto alpha_dual = dual_basis(t, alphas);
    auto beta_dual = dual_basis(t, basis);
    std::vector<TraceForm::Pair> pairs;
    for (std::uint32_t i = 0; i < t.n(); ++i) pairs.emplace_back(alpha_dual[i], beta_dual[i]);
    return TraceForm(t, std::move(pairs));
}

struct MooreAdjugate {
    std::vector<FqnElem> cofactors;  // α̃_i = (0,i)-th cofactor
    bool identity_holds;             // adj(A) == (α̃_i^{q^j})·S entry-wise
};

/// Adjugate structure of a square Moore matrix: the whole adjugate is
/// determined by the first-row cofactors up to the alternating sign matrix
/// S = diag((−1)^{j(n+1)}) (identity for odd n).
inline MooreAdjugate moore_adjugate(const FieldTower& t, const std::vector<FqnElem>& gens) {
    const std::size_t n = gens.size();
    MatFqn a = moore_matrix(t, gens);
    MatFqn adj = a.adjugate();
    MooreAdjugate out;
    for (std::size_t i = 0; i < n; ++i) out.cofactors.push_back(a.cofactor(0, i));
    out.identity_holds = true;
    for (std::size_t i = 0; i < n && out.identity_holds; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            FqnElem expect = t.frobenius(out.cofactors[i], std::int64_t(j));
            if ((j * (n + 1)) % 2 == 1) expect = t.neg(expect);
            if (adj.at(i, j) != expect) {
                out.identity_holds = false;
                break;
            }
        }
    return out;
}

/// Matrix of the transformation induced by L under the given basis
/// (columns hold images): computed directly as m_ij = tr(β_i* L(β_j)) and
/// through the Moore-conjugation of D_L; the two must agree entry-wise and
/// the conjugated matrix must land in GF(q).
inline MatFq matrix_rep(const LinPoly& L, const std::vector<FqnElem>& basis) {
    const auto& t = L.tower();
    const std::uint32_t n = t.n();
    if (basis.size() != n || moore_rank(t, basis) != n)
        throw Error(Errc::NotABasis, "generators do not form a basis of GF(q^n) over GF(q)");
    auto dual = dual_basis(t, basis);

    MatFq direct(FqOps{t}, n, n);
    for (std::uint32_t j = 0; j < n; ++j) {
        FqnElem img = L.evaluate(basis[j]);
        for (std::uint32_t i = 0; i < n; ++i)
            direct.at(i, j) = t.to_base_field(t.trace(t.mul(dual[i], img)));
    }

    MatFqn b = moore_matrix(t, basis);
    auto binv = b.inverse();
    if (!binv) throw Error(Errc::NotABasis, "Moore matrix is singular");
    MatFqn conj = binv->mul(DicksonMatrix::from_poly(L).full()).mul(b);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) {
            if (!t.in_base_field(conj.at(i, j))) throw std::logic_error("conjugated matrix entry left GF(q)");
            if (conj.at(i, j)[0] != direct.at(i, j)) throw std::logic_error("conjugation path disagrees with coordinate path");
        }
    return direct;
}

// ---- elementary linearized polynomials and the rank-normal decomposition ----

/// Swap factor: x − (tr(β_i x) − tr(β_j x))(β_i* − β_j*).
inline LinPoly elementary_swap(const FieldTower& t, const std::vector<FqnElem>& basis, const std::vector<FqnElem>& dual, std::size_t i, std::size_t j) {
    TraceForm tf(t, {{basis[i], t.sub(dual[j], dual[i])}, {basis[j], t.sub(dual[i], dual[j])}});
    return LinPoly::identity(t).add(from_trace_form(tf));
}

/// Dilation factor: x + a·tr(β_i x)·β_i* with 1 + a ≠ 0.
inline LinPoly elementary_scale(const FieldTower& t, const std::vector<FqnElem>& basis, const std::vector<FqnElem>& dual, std::size_t i, const FqElem& a) {
    TraceForm tf(t, {{basis[i], t.scalar_mul(a, dual[i])}});
    return LinPoly::identity(t).add(from_trace_form(tf));
}

/// Transvection factor: x + c·tr(β_i x)·β_j*.
inline LinPoly elementary_add(const FieldTower& t, const std::vector<FqnElem>& basis, const std::vector<FqnElem>& dual, std::size_t i, std::size_t j, const FqElem& c) {
    TraceForm tf(t, {{basis[i], t.scalar_mul(c, dual[j])}});
    return LinPoly::identity(t).add(from_trace_form(tf));
}

struct ElementaryFactor {
    enum class Kind { Swap, Scale, Add };
    Kind kind;
    std::size_t i, j;  // Scale uses i only; Add reads tr(β_i x), writes β_j*
    FqElem c;          // Scale: the a in x + a tr(β_i x)β_i*; Add: the multiplier
    LinPoly poly;
};

struct ElementaryDecomposition {
    std::vector<ElementaryFactor> left;   // applied outermost-first
    std::size_t k = 0;                    // rank of L
    LinPoly core;                         // Σ_{i<k} tr(β_i x) β_i*
    std::vector<ElementaryFactor> right;  // applied innermost-last
};

inline LinPoly recompose(const ElementaryDecomposition& d) {
    LinPoly acc = d.core;
    for (auto it = d.left.rbegin(); it != d.left.rend(); ++it) acc = it->poly.compose(acc);
    for (const auto& f : d.right) acc = acc.compose(f.poly);
    return acc;
}

/// Writes L as (elementary factors) ∘ core ∘ (elementary factors), where the
/// core is the canonical rank-k polynomial Σ_{i<k} tr(β_i x)β_i*. Produced by
/// recording the row and column operations that bring the matrix of L under
/// the basis {β_i*} to rank normal form.
inline ElementaryDecomposition elementary_decompose(const LinPoly& L, const std::vector<FqnElem>& basis) {
    const auto& t = L.tower();
    const std::uint32_t n = t.n();
    if (basis.size() != n || moore_rank(t, basis) != n)
        throw Error(Errc::NotABasis, "generators do not form a basis of GF(q^n) over GF(q)");
    auto dual = dual_basis(t, basis);
    MatFq b = matrix_rep(L, dual);
    FqOps ops{t};

    std::vector<ElementaryFactor> left, right_rev;
    std::size_t r = 0;
    for (; r < n; ++r) {
        std::size_t pi = n, pj = n;
        for (std::size_t i = r; i < n && pi == n; ++i)
            for (std::size_t j = r; j < n; ++j)
                if (!ops.is_zero(b.at(i, j))) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == n) break;
        if (pi != r) {
            for (std::size_t j = 0; j < n; ++j) std::swap(b.at(pi, j), b.at(r, j));
            left.push_back({ElementaryFactor::Kind::Swap, pi, r, ops.zero(), elementary_swap(t, basis, dual, pi, r)});
        }
        if (pj != r) {
            for (std::size_t i = 0; i < n; ++i) std::swap(b.at(i, pj), b.at(i, r));
            right_rev.push_back({ElementaryFactor::Kind::Swap, pj, r, ops.zero(), elementary_swap(t, basis, dual, pj, r)});
        }
        FqElem piv = b.at(r, r);
        if (!ops.eq(piv, ops.one())) {
            FqElem pinv = ops.inv(piv);
            for (std::size_t j = 0; j < n; ++j) b.at(r, j) = ops.mul(pinv, b.at(r, j));
            // inverse of scaling row r by piv^{-1} is the dilation by piv, i.e. a = piv − 1
            left.push_back({ElementaryFactor::Kind::Scale, r, r, ops.sub(piv, ops.one()), elementary_scale(t, basis, dual, r, ops.sub(piv, ops.one()))});
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r || ops.is_zero(b.at(i, r))) continue;
            FqElem c = b.at(i, r);
            for (std::size_t j = 0; j < n; ++j) b.at(i, j) = ops.sub(b.at(i, j), ops.mul(c, b.at(r, j)));
            // inverse of (row i −= c·row r) is +c at matrix entry (i, r): reads β_r, writes β_i*
            left.push_back({ElementaryFactor::Kind::Add, r, i, c, elementary_add(t, basis, dual, r, i, c)});
        }
        for (std::size_t j = r + 1; j < n; ++j) {
            if (ops.is_zero(b.at(r, j))) continue;
            FqElem c = b.at(r, j);
            for (std::size_t i = 0; i < n; ++i) b.at(i, j) = ops.sub(b.at(i, j), ops.mul(c, b.at(i, r)));
            // inverse of (col j −= c·col r) is +c at matrix entry (r, j): reads β_j, writes β_r*
            right_rev.push_back({ElementaryFactor::Kind::Add, j, r, c, elementary_add(t, basis, dual, j, r, c)});
        }
    }

    ElementaryDecomposition out{std::move(left), r, LinPoly::zero(t), {}};
    std::vector<TraceForm::Pair> core_pairs;
    for (std::size_t i = 0; i < r; ++i) core_pairs.emplace_back(basis[i], dual[i]);
    out.core = from_trace_form(TraceForm(t, std::move(core_pairs)));
    out.right.assign(right_rev.rbegin(), right_rev.rend());
    return out;
}

}  // namespace linfield

#endif
