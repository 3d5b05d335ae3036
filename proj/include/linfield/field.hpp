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
 * @file field.hpp
 * @brief Exact arithmetic in a two-level field tower GF(p) ⊂ GF(q) ⊂ GF(q^n).
 *
 * A FieldTower is built from a prime p, a monic irreducible f over GF(p) of
 * degree e (so q = p^e), and a monic irreducible g over GF(q) of degree n.
 * Elements of GF(q) are little-endian length-e coefficient vectors over
 * GF(p); elements of GF(q^n) are little-endian length-n vectors of GF(q)
 * elements. All arithmetic is exact schoolbook arithmetic; the map x ↦ x^q
 * is applied through tables precomputed at construction.
 *
 * Towers are immutable after construction and cheap to copy (shared state);
 * every operation is a pure function of its inputs.
 */

#ifndef LINFIELD_FIELD_HPP
#define LINFIELD_FIELD_HPP

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace linfield {

/// Element of GF(q): little-endian coefficients over GF(p), fixed length e.
using FqElem = std::vector<std::uint32_t>;

/// Element of GF(q^n): little-endian coefficients over GF(q), fixed length n.
using FqnElem = std::vector<FqElem>;

/// Default cap on materializing a full field enumeration.
inline constexpr std::uint64_t kDefaultEnumBound = 1u << 16;

namespace detail {

inline bool is_prime_u32(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

/// Arithmetic in GF(p) on raw residues.
struct FpScalar {
    std::uint32_t p;
    using Elem = std::uint32_t;

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }
    Elem add(Elem a, Elem b) const {
        std::uint64_t s = std::uint64_t(a) + b;
        return Elem(s >= p ? s - p : s);
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : Elem(a + p - b); }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem mul(Elem a, Elem b) const { return Elem(std::uint64_t(a) * b % p); }
    Elem inv(Elem a) const {
        if (a == 0) throw Error(Errc::DivisionByZero, "inverse of 0 in GF(p)");
        // extended Euclid on (p, a)
        std::int64_t t0 = 0, t1 = 1, r0 = p, r1 = a;
        while (r1 != 0) {
            std::int64_t k = r0 / r1;
            std::int64_t r2 = r0 - k * r1, t2 = t0 - k * t1;
            r0 = r1; r1 = r2; t0 = t1; t1 = t2;
        }
        if (t0 < 0) t0 += p;
        return Elem(t0);
    }
    std::uint64_t size() const { return p; }
    Elem from_index(std::uint64_t i) const { return Elem(i); }
    std::uint64_t index_of(Elem a) const { return a; }
};

/// Dense polynomial arithmetic over a scalar field K, on trimmed
/// little-endian coefficient vectors (deg(0) = -1, zero = empty vector).
template <class K>
struct polyring {
    using E = typename K::Elem;
    using Poly = std::vector<E>;

    static void trim(const K& k, Poly& a) {
        while (!a.empty() && k.is_zero(a.back())) a.pop_back();
    }
    static int deg(const Poly& a) { return int(a.size()) - 1; }
    static bool is_zero(const Poly& a) { return a.empty(); }
    static bool eq(const K& k, const Poly& a, const Poly& b) {
        if (a.size() != b.size()) return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (!k.eq(a[i], b[i])) return false;
        return true;
    }
    static Poly add(const K& k, const Poly& a, const Poly& b) {
        Poly r(std::max(a.size(), b.size()), k.zero());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
        for (std::size_t i = 0; i < b.size(); ++i) r[i] = k.add(r[i], b[i]);
        trim(k, r);
        return r;
    }
    static Poly sub(const K& k, const Poly& a, const Poly& b) {
        Poly r(std::max(a.size(), b.size()), k.zero());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
        for (std::size_t i = 0; i < b.size(); ++i) r[i] = k.sub(r[i], b[i]);
        trim(k, r);
        return r;
    }
    static Poly mul(const K& k, const Poly& a, const Poly& b) {
        if (a.empty() || b.empty()) return {};
        Poly r(a.size() + b.size() - 1, k.zero());
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (k.is_zero(a[i])) continue;
            for (std::size_t j = 0; j < b.size(); ++j)
                r[i + j] = k.add(r[i + j], k.mul(a[i], b[j]));
        }
        trim(k, r);
        return r;
    }
    static Poly scalar_mul(const K& k, const E& c, const Poly& a) {
        Poly r = a;
        for (auto& x : r) x = k.mul(c, x);
        trim(k, r);
        return r;
    }
    // divisor b must be nonzero
    static std::pair<Poly, Poly> divmod(const K& k, Poly a, const Poly& b) {
        trim(k, a);
        const int db = deg(b);
        if (db < 0) throw Error(Errc::DivisionByZeroPoly, "polynomial division by zero");
        E linv = k.inv(b.back());
        Poly quo;
        while (deg(a) >= db) {
            int shift = deg(a) - db;
            E c = k.mul(a.back(), linv);
            if (int(quo.size()) < shift + 1) quo.resize(shift + 1, k.zero());
            quo[shift] = k.add(quo[shift], c);
            for (int j = 0; j <= db; ++j)
                a[shift + j] = k.sub(a[shift + j], k.mul(c, b[j]));
            trim(k, a);
        }
        trim(k, quo);
        return {quo, a};
    }
    static Poly monic(const K& k, Poly a) {
        trim(k, a);
        if (a.empty()) return a;
        return scalar_mul(k, k.inv(a.back()), a);
    }
    static Poly gcd_monic(const K& k, Poly a, Poly b) {
        trim(k, a);
        trim(k, b);
        while (!b.empty()) {
            Poly r = divmod(k, a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return monic(k, a);
    }
    static E eval(const K& k, const Poly& a, const E& x) {
        E v = k.zero();
        for (auto it = a.rbegin(); it != a.rend(); ++it) v = k.add(k.mul(v, x), *it);
        return v;
    }
    /// Inverse of a modulo an irreducible modulus, via the extended Euclid chain.
    static Poly inverse_mod(const K& k, Poly a, const Poly& modulus) {
        trim(k, a);
        if (a.empty()) throw Error(Errc::DivisionByZero, "inverse of 0");
        Poly r0 = modulus, r1 = a, s0 = {}, s1 = {k.one()};
        while (!r1.empty()) {
            auto [quo, rem] = divmod(k, r0, r1);
            Poly s2 = sub(k, s0, mul(k, quo, s1));
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        // r0 = gcd, a nonzero constant when the modulus is irreducible
        if (deg(r0) != 0) throw Error(Errc::ReduciblePolynomial, "modulus is not irreducible");
        return scalar_mul(k, k.inv(r0[0]), s0);
    }
    static Poly from_index(const K& k, std::uint64_t idx, std::size_t len) {
        Poly r(len, k.zero());
        for (std::size_t i = 0; i < len; ++i) {
            r[i] = k.from_index(idx % k.size());
            idx /= k.size();
        }
        return r;
    }
    /// Exhaustive irreducibility check: root search for degree ≤ 3, full monic
    /// divisor enumeration otherwise. work_limit caps the number of divisor
    /// candidates tried.
    static bool is_irreducible(const K& k, const Poly& a, std::uint64_t work_limit = (1u << 22)) {
        const int d = deg(a);
        if (d < 1) return false;
        if (d == 1) return true;
        if (d <= 3) {
            for (std::uint64_t i = 0; i < k.size(); ++i)
                if (k.is_zero(eval(k, a, k.from_index(i)))) return false;
            return true;
        }
        for (int dd = 1; dd <= d / 2; ++dd) {
            std::uint64_t count = 1;
            for (int t = 0; t < dd; ++t) {
                if (count > work_limit / k.size() + 1) throw Error(Errc::FieldTooLarge, "irreducibility check exceeds work limit");
                count *= k.size();
            }
            if (count > work_limit) throw Error(Errc::FieldTooLarge, "irreducibility check exceeds work limit");
            for (std::uint64_t idx = 0; idx < count; ++idx) {
                Poly div = from_index(k, idx, dd);
                div.push_back(k.one());  // monic of degree dd
                if (is_zero(divmod(k, a, div).second)) return false;
            }
        }
        return true;
    }
};

/// Arithmetic in GF(q) = GF(p)[u]/(f) on fixed-length coefficient vectors.
struct FqScalar {
    FpScalar fp;
    std::vector<std::uint32_t> f;  // monic, degree e
    std::uint32_t e = 0;
    std::uint64_t q = 0;  // p^e

    using Elem = FqElem;
    using PR = polyring<FpScalar>;

    Elem zero() const { return Elem(e, 0); }
    Elem one() const {
        Elem r(e, 0);
        r[0] = 1;
        return r;
    }
    bool is_zero(const Elem& a) const {
        for (auto c : a)
            if (c) return false;
        return true;
    }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    Elem add(const Elem& a, const Elem& b) const {
        Elem r(e);
        for (std::uint32_t i = 0; i < e; ++i) r[i] = fp.add(a[i], b[i]);
        return r;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        Elem r(e);
        for (std::uint32_t i = 0; i < e; ++i) r[i] = fp.sub(a[i], b[i]);
        return r;
    }
    Elem neg(const Elem& a) const {
        Elem r(e);
        for (std::uint32_t i = 0; i < e; ++i) r[i] = fp.neg(a[i]);
        return r;
    }
    Elem mul(const Elem& a, const Elem& b) const {
        if (a.size() != e || b.size() != e) throw Error(Errc::TowerMismatch, "GF(q) element has wrong length");
        std::vector<std::uint32_t> tmp(2 * e - 1 > 0 ? 2 * e - 1 : 1, 0);
        for (std::uint32_t i = 0; i < e; ++i) {
            if (!a[i]) continue;
            for (std::uint32_t j = 0; j < e; ++j)
                tmp[i + j] = fp.add(tmp[i + j], fp.mul(a[i], b[j]));
        }
        // reduce modulo monic f
        for (std::uint32_t k = std::uint32_t(tmp.size()); k-- > e;) {
            std::uint32_t c = tmp[k];
            if (!c) continue;
            tmp[k] = 0;
            for (std::uint32_t j = 0; j < e; ++j)
                tmp[k - e + j] = fp.sub(tmp[k - e + j], fp.mul(c, f[j]));
        }
        tmp.resize(e);
        return tmp;
    }
    Elem inv(const Elem& a) const {
        if (is_zero(a)) throw Error(Errc::DivisionByZero, "inverse of 0 in GF(q)");
        auto s = PR::inverse_mod(fp, a, f);
        s.resize(e, 0);
        return s;
    }
    std::uint64_t size() const { return q; }
    Elem from_index(std::uint64_t idx) const {
        Elem r(e);
        for (std::uint32_t i = 0; i < e; ++i) {
            r[i] = std::uint32_t(idx % fp.p);
            idx /= fp.p;
        }
        return r;
    }
    std::uint64_t index_of(const Elem& a) const {
        std::uint64_t idx = 0;
        for (std::uint32_t i = e; i-- > 0;) idx = idx * fp.p + a[i];
        return idx;
    }
};

inline std::uint64_t pow_saturating(std::uint64_t base, std::uint32_t exp) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < exp; ++i) {
        if (base != 0 && r > UINT64_MAX / base) return UINT64_MAX;
        r *= base;
    }
    return r;
}

}  // namespace detail

/**
 * The tower GF(p) ⊂ GF(q = p^e) ⊂ GF(q^n), with precomputed tables for the
 * map x ↦ x^q. Construction validates primality of p and irreducibility of
 * both defining polynomials by exhaustive search.
 */
class FieldTower {
   public:
    /// p: prime. f: monic coefficients over GF(p), degree e ≥ 1.
    /// g: monic coefficients over GF(q), degree n ≥ 1.
    FieldTower(std::uint32_t p, std::vector<std::uint32_t> f, std::vector<FqElem> g) {
        if (!detail::is_prime_u32(p)) throw Error(Errc::NotPrime, "p = " + std::to_string(p) + " is not prime");
        auto d = std::make_shared<Data>();
        d->base.fp.p = p;

        for (auto& c : f) c %= p;
        while (!f.empty() && f.back() == 0) f.pop_back();
        if (f.size() < 2) throw Error(Errc::DegreeZero, "f must have degree at least 1");
        if (f.back() != 1) throw Error(Errc::NotMonic, "f is not monic");
        d->base.f = f;
        d->base.e = std::uint32_t(f.size() - 1);
        d->base.q = detail::pow_saturating(p, d->base.e);
        if (d->base.q == UINT64_MAX || d->base.q > (std::uint64_t(1) << 62))
            throw Error(Errc::FieldTooLarge, "q = p^e exceeds the supported range");
        if (d->base.e > 1 && !detail::polyring<detail::FpScalar>::is_irreducible(d->base.fp, f))
            throw Error(Errc::ReduciblePolynomial, "f is reducible over GF(p)");

        const auto& base = d->base;
        for (auto& c : g) {
            if (c.size() > base.e) throw Error(Errc::NotMonic, "coefficient of g longer than e");
            c.resize(base.e, 0);
            for (auto& x : c) x %= p;
        }
        while (!g.empty() && base.is_zero(g.back())) g.pop_back();
        if (g.size() < 2) throw Error(Errc::DegreeZero, "g must have degree at least 1");
        if (!base.eq(g.back(), base.one())) throw Error(Errc::NotMonic, "g is not monic");
        if (g.size() > 2 && !detail::polyring<detail::FqScalar>::is_irreducible(base, g))
            throw Error(Errc::ReduciblePolynomial, "g is reducible over GF(q)");
        d->g = g;
        d->n = std::uint32_t(g.size() - 1);
        d->card = detail::pow_saturating(base.q, d->n);

        d_ = std::move(d);
        build_frobenius_tables();
    }

    std::uint32_t p() const { return d_->base.fp.p; }
    std::uint32_t e() const { return d_->base.e; }
    std::uint32_t n() const { return d_->n; }
    std::uint64_t q() const { return d_->base.q; }
    /// q^n, saturating at UINT64_MAX.
    std::uint64_t cardinality() const { return d_->card; }
    const std::vector<std::uint32_t>& f() const { return d_->base.f; }
    const std::vector<FqElem>& g() const { return d_->g; }

    /// Structural identity: same p, f and g.
    bool operator==(const FieldTower& o) const {
        return d_ == o.d_ || (p() == o.p() && f() == o.f() && g() == o.g());
    }
    bool operator!=(const FieldTower& o) const { return !(*this == o); }

    // ---- GF(q) layer ----

    FqElem q_zero() const { return d_->base.zero(); }
    FqElem q_one() const { return d_->base.one(); }
    bool q_is_zero(const FqElem& a) const { return d_->base.is_zero(a); }
    FqElem q_add(const FqElem& a, const FqElem& b) const { return d_->base.add(a, b); }
    FqElem q_sub(const FqElem& a, const FqElem& b) const { return d_->base.sub(a, b); }
    FqElem q_neg(const FqElem& a) const { return d_->base.neg(a); }
    FqElem q_mul(const FqElem& a, const FqElem& b) const { return d_->base.mul(a, b); }
    FqElem q_inv(const FqElem& a) const { return d_->base.inv(a); }
    FqElem q_from_index(std::uint64_t i) const { return d_->base.from_index(i); }
    std::uint64_t q_index_of(const FqElem& a) const { return d_->base.index_of(a); }

    std::vector<FqElem> enumerate_base(std::uint64_t bound = kDefaultEnumBound) const {
        if (q() > bound) throw Error(Errc::FieldTooLarge, "GF(q) enumeration exceeds bound");
        std::vector<FqElem> r;
        r.reserve(std::size_t(q()));
        for (std::uint64_t i = 0; i < q(); ++i) r.push_back(q_from_index(i));
        return r;
    }

    // ---- GF(q^n) layer ----

    FqnElem zero() const { return FqnElem(n(), q_zero()); }
    FqnElem one() const {
        FqnElem r = zero();
        r[0] = q_one();
        return r;
    }
    /// Basis monomial v^i, 0 ≤ i < n.
    FqnElem monomial(std::uint32_t i) const {
        FqnElem r = zero();
        r.at(i) = q_one();
        return r;
    }
    /// The fixed ordered basis {1, v, v², …} used throughout.
    std::vector<FqnElem> monomial_basis() const {
        std::vector<FqnElem> b;
        for (std::uint32_t i = 0; i < n(); ++i) b.push_back(monomial(i));
        return b;
    }
    FqnElem embed(const FqElem& c) const {
        FqnElem r = zero();
        r[0] = c;
        return r;
    }
    bool is_zero(const FqnElem& a) const {
        for (const auto& c : a)
            if (!q_is_zero(c)) return false;
        return true;
    }
    /// True iff a lies in the middle field GF(q), i.e. is fixed by x ↦ x^q.
    bool in_base_field(const FqnElem& a) const {
        for (std::size_t i = 1; i < a.size(); ++i)
            if (!q_is_zero(a[i])) return false;
        return true;
    }
    FqElem to_base_field(const FqnElem& a) const {
        if (!in_base_field(a)) throw Error(Errc::ScalarNotInBaseField, "element does not lie in GF(q)");
        return a[0];
    }
    /// Shape guard: an element must carry exactly n coefficients of length e.
    void require_element(const FqnElem& a) const {
        if (a.size() != n() || (n() > 0 && a[0].size() != e()))
            throw Error(Errc::TowerMismatch, "element does not have the shape of this tower");
    }
    FqnElem add(const FqnElem& a, const FqnElem& b) const {
        require_element(a);
        require_element(b);
        FqnElem r(n());
        for (std::uint32_t i = 0; i < n(); ++i) r[i] = q_add(a[i], b[i]);
        return r;
    }
    FqnElem sub(const FqnElem& a, const FqnElem& b) const {
        require_element(a);
        require_element(b);
        FqnElem r(n());
        for (std::uint32_t i = 0; i < n(); ++i) r[i] = q_sub(a[i], b[i]);
        return r;
    }
    FqnElem neg(const FqnElem& a) const {
        FqnElem r(n());
        for (std::uint32_t i = 0; i < n(); ++i) r[i] = q_neg(a[i]);
        return r;
    }
    /// Multiplication by a GF(q) scalar, coordinate-wise.
    FqnElem scalar_mul(const FqElem& c, const FqnElem& a) const {
        FqnElem r(n());
        for (std::uint32_t i = 0; i < n(); ++i) r[i] = q_mul(c, a[i]);
        return r;
    }
    FqnElem mul(const FqnElem& a, const FqnElem& b) const {
        require_element(a);
        require_element(b);
        const auto& base = d_->base;
        const std::uint32_t nn = n();
        FqnElem tmp(2 * nn - 1 > 0 ? 2 * nn - 1 : 1, q_zero());
        for (std::uint32_t i = 0; i < nn; ++i) {
            if (q_is_zero(a[i])) continue;
            for (std::uint32_t j = 0; j < nn; ++j)
                tmp[i + j] = base.add(tmp[i + j], base.mul(a[i], b[j]));
        }
        for (std::uint32_t k = std::uint32_t(tmp.size()); k-- > nn;) {
            FqElem c = tmp[k];
            if (q_is_zero(c)) continue;
            tmp[k] = q_zero();
            for (std::uint32_t j = 0; j < nn; ++j)
                tmp[k - nn + j] = base.sub(tmp[k - nn + j], base.mul(c, d_->g[j]));
        }
        tmp.resize(nn);
        return tmp;
    }
    FqnElem inv(const FqnElem& a) const {
        if (is_zero(a)) throw Error(Errc::DivisionByZero, "inverse of 0 in GF(q^n)");
        auto s = detail::polyring<detail::FqScalar>::inverse_mod(d_->base, a, d_->g);
        s.resize(n(), q_zero());
        return s;
    }
    FqnElem pow(FqnElem a, std::uint64_t k) const {
        FqnElem r = one();
        while (k) {
            if (k & 1) r = mul(r, a);
            a = mul(a, a);
            k >>= 1;
        }
        return r;
    }

    /// a^{q^i}; i is reduced modulo n (negative i allowed).
    FqnElem frobenius(const FqnElem& a, std::int64_t i) const {
        require_element(a);
        std::int64_t m = i % std::int64_t(n());
        if (m < 0) m += n();
        if (m == 0) return a;
        const auto& t = d_->frob[std::size_t(m)];
        FqnElem r(n(), q_zero());
        for (std::uint32_t row = 0; row < n(); ++row)
            for (std::uint32_t col = 0; col < n(); ++col)
                if (!q_is_zero(a[col])) r[row] = q_add(r[row], q_mul(t[row][col], a[col]));
        return r;
    }

    /// Trace onto GF(q): Σ a^{q^i}, i = 0..n−1. The result is always fixed
    /// by x ↦ x^q.
    FqnElem trace(const FqnElem& a) const {
        FqnElem s = a;
        FqnElem cur = a;
        for (std::uint32_t i = 1; i < n(); ++i) {
            cur = frobenius(cur, 1);
            s = add(s, cur);
        }
        if (!in_base_field(s)) throw std::logic_error("trace left GF(q)");
        return s;
    }

    /// Relative trace onto GF(q^m), m | n: Σ_{j<t} a^{q^{jm}} with n = mt.
    FqnElem rel_trace(const FqnElem& a, std::uint32_t m) const {
        if (m == 0 || n() % m != 0) throw Error(Errc::NotADivisor, "m does not divide n");
        const std::uint32_t t = n() / m;
        FqnElem s = a;
        FqnElem cur = a;
        for (std::uint32_t j = 1; j < t; ++j) {
            cur = frobenius(cur, m);
            s = add(s, cur);
        }
        return s;
    }

    /// Norm onto GF(q): Π a^{q^i}.
    FqnElem norm(const FqnElem& a) const {
        FqnElem r = a;
        FqnElem cur = a;
        for (std::uint32_t i = 1; i < n(); ++i) {
            cur = frobenius(cur, 1);
            r = mul(r, cur);
        }
        if (!in_base_field(r)) throw std::logic_error("norm left GF(q)");
        return r;
    }

    // ---- enumeration ----

    FqnElem from_index(std::uint64_t idx) const {
        FqnElem r(n());
        for (std::uint32_t i = 0; i < n(); ++i) {
            r[i] = q_from_index(idx % q());
            idx /= q();
        }
        return r;
    }
    std::uint64_t index_of(const FqnElem& a) const {
        std::uint64_t idx = 0;
        for (std::uint32_t i = n(); i-- > 0;) idx = idx * q() + q_index_of(a[i]);
        return idx;
    }
    /// All q^n elements exactly once, in counting order on little-endian
    /// coefficient digits.
    std::vector<FqnElem> enumerate(std::uint64_t bound = kDefaultEnumBound) const {
        if (cardinality() > bound) throw Error(Errc::FieldTooLarge, "q^n = " + std::to_string(cardinality()) + " exceeds enumeration bound " + std::to_string(bound));
        std::vector<FqnElem> r;
        r.reserve(std::size_t(cardinality()));
        for (std::uint64_t i = 0; i < cardinality(); ++i) r.push_back(from_index(i));
        return r;
    }

    /// The raw table of x ↦ x^{q^i} as an n×n matrix over GF(q)
    /// (row-major; column j holds the coordinates of (v^j)^{q^i}).
    const std::vector<std::vector<FqElem>>& frobenius_table(std::uint32_t i = 1) const { return d_->frob.at(i % n()); }

    /// Access to GF(q) as a scalar field for the generic polynomial/matrix
    /// machinery.
    const detail::FqScalar& base_scalar() const { return d_->base; }

   private:
    struct Data {
        detail::FqScalar base;
        std::vector<FqElem> g;
        std::uint32_t n = 0;
        std::uint64_t card = 0;
        std::vector<std::vector<std::vector<FqElem>>> frob;  // frob[i][row][col]
    };
    std::shared_ptr<const Data> d_;

    // Called once at the end of construction, before the tower escapes.
    void build_frobenius_tables() {
        auto d = std::const_pointer_cast<Data>(d_);
        const std::uint32_t nn = d->n;
        std::vector<std::vector<FqElem>> ident(nn, std::vector<FqElem>(nn, q_zero()));
        for (std::uint32_t i = 0; i < nn; ++i) ident[i][i] = q_one();
        d->frob.push_back(ident);
        if (nn == 1) return;

        FqnElem vq = pow(monomial(1), q());
        std::vector<std::vector<FqElem>> t1(nn, std::vector<FqElem>(nn, q_zero()));
        FqnElem w = one();
        for (std::uint32_t j = 0; j < nn; ++j) {
            for (std::uint32_t r = 0; r < nn; ++r) t1[r][j] = w[r];
            if (j + 1 < nn) w = mul(w, vq);
        }
        d->frob.push_back(t1);
        for (std::uint32_t i = 2; i < nn; ++i) d->frob.push_back(table_mul(t1, d->frob.back()));
        if (!(table_mul(t1, d->frob.back()) == ident)) throw std::logic_error("Frobenius table has order != n");
    }

    std::vector<std::vector<FqElem>> table_mul(const std::vector<std::vector<FqElem>>& a, const std::vector<std::vector<FqElem>>& b) const {
        const std::uint32_t nn = n();
        std::vector<std::vector<FqElem>> r(nn, std::vector<FqElem>(nn, q_zero()));
        for (std::uint32_t i = 0; i < nn; ++i)
            for (std::uint32_t k = 0; k < nn; ++k) {
                if (q_is_zero(a[i][k])) continue;
                for (std::uint32_t j = 0; j < nn; ++j)
                    r[i][j] = q_add(r[i][j], q_mul(a[i][k], b[k][j]));
            }
        return r;
    }
};

inline void require_same_tower(const FieldTower& a, const FieldTower& b) {
    if (a != b) throw Error(Errc::TowerMismatch, "operands live in different towers");
}

}  // namespace linfield

#endif
