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
 * @file subfield.hpp
 * @brief Structure of linearized polynomials with coefficients in GF(q^m),
 *        m | n, viewed under a normal basis.
 *
 * Three equivalent descriptions are implemented and cross-checked: the
 * coefficient condition a_i^{q^m} = a_i, the α-pattern α_{jm+k} = α_k^{q^{jm}}
 * of the full trace form, and the block-circulant shape of the matrix of L
 * under the dual of the normal basis. For m = 1 the associated conventional
 * polynomial over GF(q) links the rank of {α^{q^i}} to a gcd with x^n − 1.
 */

#ifndef LINFIELD_SUBFIELD_HPP
#define LINFIELD_SUBFIELD_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "moore.hpp"

namespace linfield {

/// First element (in enumeration order) generating a normal basis
/// {β, β^q, …, β^{q^{n−1}}}.
inline FqnElem find_normal_basis_generator(const FieldTower& t) {
    for (std::uint64_t idx = 1; idx < t.cardinality(); ++idx) {
        FqnElem beta = t.from_index(idx);
        std::vector<FqnElem> orbit;
        for (std::uint32_t i = 0; i < t.n(); ++i) orbit.push_back(t.frobenius(beta, i));
        if (moore_rank(t, orbit) == t.n()) return beta;
    }
    throw std::logic_error("no normal basis generator found");
}

/// A divisor m of n together with a normal basis fixed for the whole
/// analysis; t = n/m.
struct SubfieldContext {
    FieldTower tower;
    std::uint32_t m = 1;
    std::uint32_t t = 1;  // n / m
    FqnElem beta;
    std::vector<FqnElem> normal_basis;  // β^{q^i}, i = 0..n−1

    static SubfieldContext make(const FieldTower& tw, std::uint32_t m, std::optional<FqnElem> beta = std::nullopt) {
        if (m == 0 || tw.n() % m != 0) throw Error(Errc::NotADivisor, "m does not divide n");
        SubfieldContext ctx{tw, m, tw.n() / m, tw.zero(), {}};
        ctx.beta = beta ? *beta : find_normal_basis_generator(tw);
        for (std::uint32_t i = 0; i < tw.n(); ++i) ctx.normal_basis.push_back(tw.frobenius(ctx.beta, i));
        if (moore_rank(tw, ctx.normal_basis) != tw.n())
            throw Error(Errc::NotNormalBasis, "beta does not generate a normal basis");
        return ctx;
    }
};

/// True iff every coefficient lies in GF(q^m), i.e. is fixed by x ↦ x^{q^m}.
inline bool is_subfield_poly(const LinPoly& L, std::uint32_t m) {
    const auto& t = L.tower();
    if (m == 0 || t.n() % m != 0) throw Error(Errc::NotADivisor, "m does not divide n");
    for (const auto& a : L.coeffs())
        if (t.frobenius(a, m) != a) return false;
    return true;
}

/// Raw α-pattern evaluation: compute the full trace form under the normal
/// basis and test α_{jm+k} = α_k^{q^{jm}} for all j, k.
inline bool alpha_pattern_holds(const LinPoly& L, const SubfieldContext& ctx) {
    const auto& t = ctx.tower;
    TraceForm tf = to_trace_form_full(L, ctx.normal_basis);
    auto alphas = tf.thetas();
    for (std::uint32_t j = 1; j < ctx.t; ++j)
        for (std::uint32_t k = 0; k < ctx.m; ++k)
            if (alphas[std::size_t(j) * ctx.m + k] != t.frobenius(alphas[k], std::int64_t(j) * ctx.m)) return false;
    return true;
}

/// The α-pattern law for subfield polynomials; rejects input whose
/// coefficients leave GF(q^m).
inline bool alpha_pattern_check(const LinPoly& L, const SubfieldContext& ctx) {
    if (!is_subfield_poly(L, ctx.m)) throw Error(Errc::NotSubfieldPoly, "coefficients leave GF(q^m)");
    return alpha_pattern_holds(L, ctx);
}

/// Block-circulant structure test: block(i,j) must equal block(i+1,j+1),
/// block indices mod t, on a t×t grid of m×m blocks.
inline bool is_block_circulant(const MatFq& b, std::uint32_t t_blocks, std::uint32_t m) {
    for (std::uint32_t bi = 0; bi < t_blocks; ++bi)
        for (std::uint32_t bj = 0; bj < t_blocks; ++bj) {
            std::uint32_t bi1 = (bi + 1) % t_blocks, bj1 = (bj + 1) % t_blocks;
            for (std::uint32_t r = 0; r < m; ++r)
                for (std::uint32_t c = 0; c < m; ++c)
                    if (b.at(std::size_t(bi) * m + r, std::size_t(bj) * m + c) != b.at(std::size_t(bi1) * m + r, std::size_t(bj1) * m + c)) return false;
        }
    return true;
}

struct BlockCirculantResult {
    MatFq b;  // matrix of L under the dual of the normal basis
    bool block_circulant;
};

/// Computes B_L under the dual of the normal basis and verifies the
/// (t, m) block-circulant shape.
inline BlockCirculantResult block_circulant_check(const LinPoly& L, const SubfieldContext& ctx) {
    if (!is_subfield_poly(L, ctx.m)) throw Error(Errc::NotSubfieldPoly, "coefficients leave GF(q^m)");
    MatFq b = matrix_rep(L, dual_basis(ctx.tower, ctx.normal_basis));
    return {b, is_block_circulant(b, ctx.t, ctx.m)};
}

/// Raw B_L computation without the subfield precondition (for converse
/// testing).
inline MatFq b_matrix(const LinPoly& L, const SubfieldContext& ctx) {
    return matrix_rep(L, dual_basis(ctx.tower, ctx.normal_basis));
}

struct RankGcdResult {
    std::size_t lhs;  // rk of {α^{q^i}} over GF(q)
    std::size_t rhs;  // n − deg gcd(Σ tr(α β^{q^i}) x^i, x^n − 1)
};

/// The m = 1 rank identity: the Frobenius orbit rank of α equals
/// n − deg gcd(A, x^n − 1) for the conventional polynomial
/// A(x) = Σ tr(α β^{q^i}) x^i over GF(q).
inline RankGcdResult rank_gcd_check(const FieldTower& t, const FqnElem& beta, const FqnElem& alpha) {
    std::vector<FqnElem> orbit;
    for (std::uint32_t i = 0; i < t.n(); ++i) orbit.push_back(t.frobenius(beta, i));
    if (moore_rank(t, orbit) != t.n()) throw Error(Errc::NotNormalBasis, "beta does not generate a normal basis");

    std::vector<FqnElem> alpha_orbit;
    for (std::uint32_t i = 0; i < t.n(); ++i) alpha_orbit.push_back(t.frobenius(alpha, i));
    RankGcdResult out{moore_rank(t, alpha_orbit), 0};

    using PR = detail::polyring<detail::FqScalar>;
    const auto& k = t.base_scalar();
    std::vector<FqElem> a(t.n());
    for (std::uint32_t i = 0; i < t.n(); ++i) a[i] = t.to_base_field(t.trace(t.mul(alpha, orbit[i])));
    std::vector<FqElem> modulus(t.n() + 1, k.zero());
    modulus[0] = k.neg(k.one());
    modulus[t.n()] = k.one();
    PR::trim(k, a);
    std::vector<FqElem> g = PR::gcd_monic(k, a, modulus);
    out.rhs = t.n() - std::size_t(PR::deg(g));
    return out;
}

inline RankGcdResult rank_gcd_check(const SubfieldContext& ctx, const FqnElem& alpha) {
    return rank_gcd_check(ctx.tower, ctx.beta, alpha);
}

}  // namespace linfield

#endif
