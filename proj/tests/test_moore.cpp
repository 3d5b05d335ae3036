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

#include <catch2/catch_amalgamated.hpp>
#include <functional>
#include <random>

#include "linfield/moore.hpp"

using namespace linfield;

namespace {
FieldTower gf4() { return FieldTower(2, {1, 1}, {{1}, {1}, {1}}); }
FieldTower gf8() { return FieldTower(2, {1, 1}, {{1}, {1}, {0}, {1}}); }
FieldTower gf9() { return FieldTower(3, {1, 1}, {{1}, {0}, {1}}); }

LinPoly random_poly(const FieldTower& t, std::mt19937_64& rng) {
    std::vector<FqnElem> c;
    for (std::uint32_t i = 0; i < t.n(); ++i) c.push_back(t.from_index(rng() % t.cardinality()));
    return LinPoly(t, std::move(c));
}

std::vector<std::vector<FqnElem>> ordered_bases_gf4(const FieldTower& t) {
    std::vector<std::vector<FqnElem>> out;
    for (std::uint64_t i = 0; i < 4; ++i)
        for (std::uint64_t j = 0; j < 4; ++j) {
            std::vector<FqnElem> b = {t.from_index(i), t.from_index(j)};
            if (coordinate_rank(t, b) == 2) out.push_back(b);
        }
    return out;
}
}  // namespace

TEST_CASE("moore rank equals the generator rank") {
    FieldTower t = gf4();
    FqnElem w = t.monomial(1);
    CHECK(moore_rank(t, {t.one(), w}) == 2);
    CHECK(moore_rank(t, {t.one(), t.one()}) == 1);
    CHECK(moore_rank(t, {t.zero()}) == 0);
    // exhaustive generator pairs over GF(4)
    for (std::uint64_t i = 0; i < 16; ++i) {
        std::vector<FqnElem> gens = {t.from_index(i / 4), t.from_index(i % 4)};
        CHECK(moore_rank(t, gens) == coordinate_rank(t, gens));
    }
}

TEST_CASE("dual basis of the worked examples") {
    FieldTower t = gf4();
    FqnElem w = t.monomial(1);
    FqnElem wp1 = t.add(w, t.one());
    auto d = dual_basis(t, {t.one(), w});
    CHECK(d == std::vector<FqnElem>{wp1, t.one()});
    // the normal basis {w, w^q} is self-dual
    CHECK(dual_basis(t, {w, wp1}) == std::vector<FqnElem>{w, wp1});
    CHECK_THROWS_MATCHES(dual_basis(t, {t.one(), t.one()}), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) { return e.code() == Errc::NotABasis; }));
}

TEST_CASE("dual basis involution and Moore-inverse identity") {
    FieldTower t = gf4();
    for (const auto& basis : ordered_bases_gf4(t)) {
        auto dual = dual_basis(t, basis);
        CHECK(dual_basis(t, dual) == basis);
        // (beta_i^{* q^j}) (beta_j^{q^i}) = I, i.e. Moore(dual)^T · Moore(basis) = I
        MatFqn prod = moore_matrix(t, dual).transpose().mul(moore_matrix(t, basis));
        CHECK(prod == MatFqn::identity(FqnOps{t}, 2));
    }
    std::mt19937_64 rng(41);
    FieldTower t8 = gf8();
    for (int i = 0; i < 30; ++i) {
        std::vector<FqnElem> basis;
        do {
            basis.clear();
            for (int k = 0; k < 3; ++k) basis.push_back(t8.from_index(rng() % 8));
        } while (moore_rank(t8, basis) != 3);
        auto dual = dual_basis(t8, basis);
        CHECK(dual_basis(t8, dual) == basis);
        CHECK(moore_matrix(t8, dual).transpose().mul(moore_matrix(t8, basis)) == MatFqn::identity(FqnOps{t8}, 3));
    }
}

TEST_CASE("full trace form of the worked example") {
    FieldTower t = gf4();
    FqnElem w = t.monomial(1);
    FqnElem wp1 = t.add(w, t.one());
    LinPoly La(t, {w, t.one()});
    TraceForm tf = to_trace_form_full(La, {t.one(), w});
    REQUIRE(tf.size() == 2);
    CHECK(tf.pairs()[0] == TraceForm::Pair{t.one(), wp1});
    CHECK(tf.pairs()[1] == TraceForm::Pair{w, wp1});
    for (const auto& x : t.enumerate()) CHECK(tf.evaluate(x) == La.evaluate(x));
    // identity maps to the dual pairs
    TraceForm ti = to_trace_form_full(LinPoly::identity(t), {t.one(), w});
    auto dual = dual_basis(t, {t.one(), w});
    for (std::uint32_t i = 0; i < 2; ++i) CHECK(ti.pairs()[i].second == dual[i]);
}

TEST_CASE("dual-side trace form evaluates pointwise equal") {
    FieldTower t = gf4();
    FqnElem w = t.monomial(1);
    LinPoly La(t, {w, t.one()});
    TraceForm tf = to_trace_form_dualside(La, {t.one(), w});
    for (const auto& x : t.enumerate()) CHECK(tf.evaluate(x) == La.evaluate(x));
    TraceForm ti = to_trace_form_dualside(LinPoly::identity(t), {t.one(), w});
    auto dual = dual_basis(t, {t.one(), w});
    for (std::uint32_t i = 0; i < 2; ++i) {
        CHECK(ti.pairs()[i].first == dual[i]);
        CHECK(ti.pairs()[i].second == (i == 0 ? t.one() : w));
    }
}

TEST_CASE("from_trace_form expands the coefficients") {
    FieldTower t = gf4();
    FqnElem w = t.monomial(1);
    FqnElem wp1 = t.add(w, t.one());
    TraceForm tf(t, {{t.one(), wp1}, {w, wp1}});
    CHECK(from_trace_form(tf) == LinPoly(t, {w, t.one()}));
    CHECK(from_trace_form(TraceForm::empty(t)) == LinPoly::zero(t));

    std::mt19937_64 rng(42);
    FieldTower t9 = gf9();
    for (int i = 0; i < 200; ++i) {
        LinPoly L = random_poly(t9, rng);
        CHECK(from_trace_form(to_trace_form_full(L, t9.monomial_basis())) == L);
        CHECK(from_trace_form(to_trace_form_dualside(L, t9.monomial_basis())) == L);
        CHECK(coordinate_rank(t9, to_trace_form_full(L, t9.monomial_basis()).thetas()) == rank_bruteforce(L));
    }
}

TEST_CASE("compact form of the worked examples") {
    FieldTower t = gf4();
    FqnElem w = t.monomial(1);
    FqnElem wp1 = t.add(w, t.one());
    TraceForm cf = compact_form(LinPoly(t, {w, t.one()}));
    REQUIRE(cf.size() == 1);
    CHECK(cf.pairs()[0] == TraceForm::Pair{wp1, wp1});
    for (const auto& x : t.enumerate()) CHECK(cf.evaluate(x) == LinPoly(t, {w, t.one()}).evaluate(x));
    CHECK(compact_form(LinPoly::zero(t)).size() == 0);
    TraceForm ci = compact_form(LinPoly::identity(t));
    CHECK(ci.size() == 2);
    CHECK(coordinate_rank(t, ci.omegas()) == 2);
    CHECK(coordinate_rank(t, ci.thetas()) == 2);
}

TEST_CASE("no representation with fewer than rank pairs exists over GF(4)") {
    FieldTower t = gf4();
    auto all = t.enumerate();
    for (std::uint64_t idx = 0; idx < 16; ++idx) {
        LinPoly L(t, {t.from_index(idx % 4), t.from_index(idx / 4)});
        std::size_t k = rank_bruteforce(L);
        if (k == 0) continue;
        // try every representation with k−1 pairs
        std::size_t pairs = k - 1;
        bool reachable = false;
        std::function<void(std::size_t, TraceForm)> rec = [&](std::size_t left, TraceForm acc) {
            if (reachable) return;
            if (left == 0) {
                bool equal = true;
                for (const auto& x : all)
                    if (acc.evaluate(x) != L.evaluate(x)) {
                        equal = false;
                        break;
                    }
                reachable = equal;
                return;
            }
            for (const auto& wv : all)
                for (const auto& th : all) {
                    auto p = acc.pairs();
                    p.emplace_back(wv, th);
                    rec(left - 1, TraceForm(t, p));
                }
        };
        rec(pairs, TraceForm::empty(t));
        CHECK(!reachable);
    }
}

TEST_CASE("inverse via dual bases") {
    FieldTower t = gf4();
    FqnElem w = t.monomial(1);
    std::vector<FqnElem> basis = {t.one(), w};
    TraceForm ti = to_trace_form_full(LinPoly::identity(t), basis);
    TraceForm inv = inverse_via_dual(ti, basis);
    for (const auto& x : t.enumerate()) CHECK(inv.evaluate(ti.evaluate(x)) == x);
    // L = wx in full form: the inverse must evaluate as (w+1)x
    TraceForm tw = to_trace_form_full(LinPoly::monomial(t, 0, w), basis);
    TraceForm tinv = inverse_via_dual(tw, basis);
    CHECK(from_trace_form(tinv) == LinPoly::monomial(t, 0, t.add(w, t.one())));
    // alpha side of rank < n is rejected
    TraceForm bad = to_trace_form_full(LinPoly(t, {w, t.one()}), basis);
    CHECK_THROWS_MATCHES(inverse_via_dual(bad, basis), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) { return e.code() == Errc::NotABasis; }));

    std::mt19937_64 rng(43);
    FieldTower t8 = gf8();
    int found = 0;
    while (found < 100) {
        LinPoly L = random_poly(t8, rng);
        if (!is_permutation(L)) continue;
        ++found;
        TraceForm full = to_trace_form_full(L, t8.monomial_basis());
        CHECK(from_trace_form(inverse_via_dual(full, t8.monomial_basis())) == inverse_poly(L));
    }
}

TEST_CASE("Moore adjugate cofactors") {
    FieldTower t = gf4();
    FqnElem w = t.monomial(1);
    FqnElem wp1 = t.add(w, t.one());
    auto ma = moore_adjugate(t, {t.one(), w});
    CHECK(ma.identity_holds);
    REQUIRE(ma.cofactors.size() == 2);
    CHECK(ma.cofactors[0] == wp1);
    CHECK(ma.cofactors[1] == t.one());
    // n = 3 (odd): the sign matrix is the identity
    FieldTower t8 = gf8();
    std::mt19937_64 rng(44);
    for (int i = 0; i < 50; ++i) {
        std::vector<FqnElem> gens;
        for (int k = 0; k < 3; ++k) gens.push_back(t8.from_index(rng() % 8));
        auto m8 = moore_adjugate(t8, gens);
        CHECK(m8.identity_holds);
        MatFqn adj = moore_matrix(t8, gens).adjugate();
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 3; ++c) CHECK(adj.at(r, c) == t8.frobenius(m8.cofactors[r], std::int64_t(c)));
    }
}

TEST_CASE("dropping the sign matrix is detected in odd characteristic") {
    // for n even over q = 3 the alternating signs are essential: pretending
    // S = I must break the adjugate identity for some generator pair
    FieldTower t = gf9();
    bool mismatch_found = false;
    for (std::uint64_t i = 0; i < 81 && !mismatch_found; ++i) {
        std::vector<FqnElem> gens = {t.from_index(i / 9), t.from_index(i % 9)};
        auto ma = moore_adjugate(t, gens);
        REQUIRE(ma.identity_holds);
        MatFqn adj = moore_matrix(t, gens).adjugate();
        for (std::size_t r = 0; r < 2 && !mismatch_found; ++r)
            for (std::size_t c = 0; c < 2; ++c)
                if (adj.at(r, c) != t.frobenius(ma.cofactors[r], std::int64_t(c))) {
                    mismatch_found = true;
                    break;
                }
    }
    CHECK(mismatch_found);
}

TEST_CASE("cofactors of a basis form a basis") {
    FieldTower t = gf4();
    for (const auto& basis : ordered_bases_gf4(t)) {
        auto ma = moore_adjugate(t, basis);
        CHECK(moore_rank(t, ma.cofactors) == 2);
    }
}

TEST_CASE("elementary decomposition") {
    FieldTower t = gf4();
    FqnElem w = t.monomial(1);
    std::vector<FqnElem> basis = {t.one(), w};
    auto did = elementary_decompose(LinPoly::identity(t), basis);
    CHECK(did.left.empty());
    CHECK(did.right.empty());
    CHECK(did.k == 2);
    CHECK(did.core == LinPoly::identity(t));

    LinPoly La(t, {w, t.one()});
    auto dla = elementary_decompose(La, basis);
    CHECK(dla.k == 1);
    CHECK(recompose(dla) == La);

    // every factor is one of the three displayed shapes
    auto dual = dual_basis(t, basis);
    auto check_factor = [&](const ElementaryFactor& f) {
        switch (f.kind) {
            case ElementaryFactor::Kind::Swap:
                CHECK(f.poly == elementary_swap(t, basis, dual, f.i, f.j));
                break;
            case ElementaryFactor::Kind::Scale:
                CHECK(f.poly == elementary_scale(t, basis, dual, f.i, f.c));
                break;
            case ElementaryFactor::Kind::Add:
                CHECK(f.poly == elementary_add(t, basis, dual, f.i, f.j, f.c));
                break;
        }
        CHECK(is_permutation(f.poly));
    };
    for (const auto& f : dla.left) check_factor(f);
    for (const auto& f : dla.right) check_factor(f);

    std::mt19937_64 rng(45);
    FieldTower t8 = gf8();
    for (int i = 0; i < 100; ++i) {
        LinPoly L = random_poly(t8, rng);
        auto d = elementary_decompose(L, t8.monomial_basis());
        CHECK(recompose(d) == L);
        CHECK(d.k == rank_bruteforce(L));
    }
}

TEST_CASE("swap factors act as transpositions on the dual basis") {
    FieldTower t = gf8();
    auto basis = t.monomial_basis();
    auto dual = dual_basis(t, basis);
    LinPoly sw = elementary_swap(t, basis, dual, 0, 2);
    CHECK(sw.evaluate(dual[0]) == dual[2]);
    CHECK(sw.evaluate(dual[2]) == dual[0]);
    CHECK(sw.evaluate(dual[1]) == dual[1]);
}
