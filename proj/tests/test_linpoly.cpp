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
#include <random>

#include "linfield/linpoly.hpp"

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
}  // namespace

TEST_CASE("evaluation of the worked GF(4) examples") {
    FieldTower t = gf4();
    FqnElem w = t.monomial(1);
    LinPoly La(t, {w, t.one()});  // wx + x^2
    CHECK(t.is_zero(La.evaluate(w)));
    CHECK(La.evaluate(t.one()) == t.add(w, t.one()));
    LinPoly id = LinPoly::identity(t);
    for (const auto& x : t.enumerate()) CHECK(id.evaluate(x) == x);
}

TEST_CASE("add and scale") {
    FieldTower t = gf4();
    FqnElem w = t.monomial(1);
    LinPoly La(t, {w, t.one()});
    CHECK(La.add(LinPoly::zero(t)) == La);
    CHECK(La.scale(t.one()) == La);
    // char 2: L + L = 0 pointwise
    for (const auto& x : t.enumerate()) CHECK(t.is_zero(La.add(La).evaluate(x)));
    CHECK_THROWS_MATCHES(La.scale(w), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) { return e.code() == Errc::ScalarNotInBaseField; }));
    CHECK_THROWS_MATCHES(La.add(LinPoly::zero(gf8())), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) { return e.code() == Errc::TowerMismatch; }));
}

TEST_CASE("composition of the worked GF(4) examples") {
    FieldTower t = gf4();
    FqnElem w = t.monomial(1);
    LinPoly frob = LinPoly::monomial(t, 1, t.one());
    LinPoly wx = LinPoly::monomial(t, 0, w);
    CHECK(frob.compose(wx) == LinPoly::monomial(t, 1, t.add(w, t.one())));
    CHECK(frob.compose(frob) == LinPoly::identity(t));
    LinPoly La(t, {w, t.one()});
    CHECK(La.compose(LinPoly::identity(t)) == La);
}

TEST_CASE("composition agrees with pointwise composition") {
    std::mt19937_64 rng(11);
    for (const FieldTower& t : {gf4(), gf8(), gf9()}) {
        for (int i = 0; i < 50; ++i) {
            LinPoly a = random_poly(t, rng), b = random_poly(t, rng);
            LinPoly c = a.compose(b);
            for (const auto& x : t.enumerate()) CHECK(c.evaluate(x) == a.evaluate(b.evaluate(x)));
        }
    }
}

TEST_CASE("induced maps are GF(q)-linear") {
    std::mt19937_64 rng(12);
    for (const FieldTower& t : {gf4(), gf9()}) {
        for (int i = 0; i < 30; ++i) {
            LinPoly L = random_poly(t, rng);
            for (const auto& x : t.enumerate())
                for (const auto& y : t.enumerate())
                    for (std::uint64_t ci = 0; ci < t.q(); ++ci) {
                        FqElem c = t.q_from_index(ci);
                        CHECK(L.evaluate(t.add(t.scalar_mul(c, x), y)) ==
                              t.add(t.scalar_mul(c, L.evaluate(x)), L.evaluate(y)));
                    }
        }
    }
}

TEST_CASE("rank, kernel and image of the worked examples") {
    FieldTower t = gf4();
    FqnElem w = t.monomial(1);
    LinPoly La(t, {w, t.one()});
    CHECK(rank_bruteforce(La) == 1);
    auto ker = kernel_basis(La);
    REQUIRE(ker.size() == 1);
    CHECK(ker[0] == w);
    CHECK(rank_bruteforce(LinPoly::identity(t)) == 2);
    auto img = image_basis(La);
    REQUIRE(img.size() == 1);
    CHECK(img[0] == t.add(w, t.one()));
}

TEST_CASE("kernel from elimination agrees with the enumeration oracle") {
    std::mt19937_64 rng(13);
    for (const FieldTower& t : {gf4(), gf8(), gf9()}) {
        for (int i = 0; i < 40; ++i) {
            LinPoly L = random_poly(t, rng);
            auto span = canonical_span(t, kernel_basis(L));
            auto oracle = canonical_span(t, kernel_bruteforce(L));
            CHECK(span == oracle);
            CHECK(kernel_basis(L).size() + rank_bruteforce(L) == t.n());
        }
    }
}

TEST_CASE("composition is associative and distributes over addition") {
    std::mt19937_64 rng(14);
    for (const FieldTower& t : {gf4(), gf8()}) {
        for (int i = 0; i < 40; ++i) {
            LinPoly a = random_poly(t, rng), b = random_poly(t, rng), c = random_poly(t, rng);
            CHECK(a.compose(b).compose(c) == a.compose(b.compose(c)));
            CHECK(a.compose(b.add(c)) == a.compose(b).add(a.compose(c)));
            CHECK(a.add(b).compose(c) == a.compose(c).add(b.compose(c)));
        }
    }
}

TEST_CASE("rank of a composition never exceeds either factor") {
    std::mt19937_64 rng(15);
    for (const FieldTower& t : {gf4(), gf8(), gf9()}) {
        for (int i = 0; i < 60; ++i) {
            LinPoly a = random_poly(t, rng), b = random_poly(t, rng);
            std::size_t r = rank_bruteforce(a.compose(b));
            CHECK(r <= rank_bruteforce(a));
            CHECK(r <= rank_bruteforce(b));
        }
    }
}
