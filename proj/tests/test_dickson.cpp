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

#include "linfield/dickson.hpp"
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
}  // namespace

TEST_CASE("from_poly lays out the sigma-circulant structure") {
    FieldTower t = gf4();
    FqnElem w = t.monomial(1);
    FqnElem wp1 = t.add(w, t.one());
    LinPoly La(t, {w, t.one()});
    MatFqn full = DicksonMatrix::from_poly(La).full();
    CHECK(full.at(0, 0) == w);
    CHECK(full.at(0, 1) == t.one());
    CHECK(full.at(1, 0) == t.one());
    CHECK(full.at(1, 1) == wp1);
    CHECK(DicksonMatrix::from_poly(LinPoly::identity(t)).full() == MatFqn::identity(FqnOps{t}, 2));
    CHECK(DicksonMatrix::from_poly(LinPoly::zero(t)).full() == MatFqn(FqnOps{t}, 2, 2));
}

TEST_CASE("to_poly round trips and rejects non-Dickson matrices") {
    std::mt19937_64 rng(21);
    FieldTower t = gf8();
    for (int i = 0; i < 100; ++i) {
        LinPoly L = random_poly(t, rng);
        CHECK(DicksonMatrix::from_full(DicksonMatrix::from_poly(L).full()).to_poly() == L);
    }
    MatFqn bad = MatFqn::identity(FqnOps{t}, 3);
    bad.at(1, 1) = t.monomial(1);  // breaks entry(1,1) = entry(0,0)^q
    CHECK_THROWS_MATCHES(DicksonMatrix::from_full(bad), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) { return e.code() == Errc::NotDickson; }));
}

TEST_CASE("first-row convolution equals the full matrix product") {
    FieldTower t = gf4();
    FqnElem w = t.monomial(1);
    LinPoly frob = LinPoly::monomial(t, 1, t.one());
    LinPoly wx = LinPoly::monomial(t, 0, w);
    DicksonMatrix prod = DicksonMatrix::from_poly(frob).mul(DicksonMatrix::from_poly(wx));
    CHECK(prod == DicksonMatrix::from_poly(LinPoly::monomial(t, 1, t.add(w, t.one()))));
    CHECK(DicksonMatrix::from_poly(frob).mul(DicksonMatrix(t, {t.one(), t.zero()})) == DicksonMatrix::from_poly(frob));

    // independent cubic-time oracle over GF(8)
    std::mt19937_64 rng(22);
    FieldTower t8 = gf8();
    for (int i = 0; i < 100; ++i) {
        DicksonMatrix a = DicksonMatrix::from_poly(random_poly(t8, rng));
        DicksonMatrix b = DicksonMatrix::from_poly(random_poly(t8, rng));
        CHECK(a.mul(b).full() == a.full().mul(b.full()));
    }
}

TEST_CASE("rank and determinant of the worked examples") {
    FieldTower t = gf4();
    FqnElem w = t.monomial(1);
    DicksonMatrix d = DicksonMatrix::from_poly(LinPoly(t, {w, t.one()}));
    CHECK(t.is_zero(d.determinant()));
    CHECK(d.rank() == 1);
    DicksonMatrix df = DicksonMatrix::from_poly(LinPoly::monomial(t, 1, t.one()));
    CHECK(df.determinant() == t.one());
    DicksonMatrix di = DicksonMatrix::from_poly(LinPoly::identity(t));
    CHECK(di.rank() == 2);
    CHECK(di.determinant() == t.one());
}

TEST_CASE("adjugate of the worked examples") {
    FieldTower t = gf4();
    FqnElem w = t.monomial(1);
    FqnElem wp1 = t.add(w, t.one());
    MatFqn adj = DicksonMatrix::from_poly(LinPoly(t, {w, t.one()})).adjugate().full();
    CHECK(adj.at(0, 0) == wp1);
    CHECK(adj.at(0, 1) == t.one());
    CHECK(adj.at(1, 0) == t.one());
    CHECK(adj.at(1, 1) == w);
    CHECK(DicksonMatrix::from_poly(LinPoly::identity(t)).adjugate().full() == MatFqn::identity(FqnOps{t}, 2));

    std::mt19937_64 rng(23);
    FieldTower t8 = gf8();
    for (int i = 0; i < 100; ++i) {
        DicksonMatrix d = DicksonMatrix::from_poly(random_poly(t8, rng));
        MatFqn prod = d.adjugate().full().mul(d.full());
        MatFqn expect(FqnOps{t8}, 3, 3);
        for (std::uint32_t k = 0; k < 3; ++k) expect.at(k, k) = d.determinant();
        CHECK(prod == expect);
    }
}

TEST_CASE("adjugate polynomial") {
    FieldTower t = gf4();
    FqnElem w = t.monomial(1);
    // x^q - gamma^{q-1} x with gamma = w is x^2 + wx
    LinPoly L(t, {w, t.one()});
    CHECK(adjugate_poly(L) == LinPoly(t, {t.add(w, t.one()), t.one()}));
    CHECK(adjugate_poly(LinPoly::identity(t)) == LinPoly::identity(t));

    // L o L* = det(L) x as an oracle over GF(9)
    std::mt19937_64 rng(24);
    FieldTower t9 = gf9();
    for (int i = 0; i < 200; ++i) {
        LinPoly L9 = random_poly(t9, rng);
        LinPoly adj = adjugate_poly(L9);
        LinPoly detx = LinPoly::monomial(t9, 0, DicksonMatrix::from_poly(L9).determinant());
        CHECK(L9.compose(adj) == detx);
        CHECK(adj.compose(L9) == detx);
    }
}

TEST_CASE("inverse polynomial") {
    FieldTower t = gf4();
    FqnElem w = t.monomial(1);
    LinPoly frob = LinPoly::monomial(t, 1, t.one());
    CHECK(inverse_poly(frob) == frob);
    CHECK(inverse_poly(LinPoly::monomial(t, 0, w)) == LinPoly::monomial(t, 0, t.add(w, t.one())));
    CHECK_THROWS_MATCHES(inverse_poly(LinPoly(t, {w, t.one()})), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) { return e.code() == Errc::NotAPermutation; }));

    std::mt19937_64 rng(25);
    FieldTower t8 = gf8();
    int found = 0;
    while (found < 60) {
        LinPoly L = random_poly(t8, rng);
        if (!is_permutation(L)) continue;
        ++found;
        CHECK(L.compose(inverse_poly(L)) == LinPoly::identity(t8));
        CHECK(inverse_poly(L).compose(L) == LinPoly::identity(t8));
    }
}

TEST_CASE("is_permutation matches the brute-force rank") {
    FieldTower t = gf4();
    FqnElem w = t.monomial(1);
    CHECK(is_permutation(LinPoly::monomial(t, 1, t.one())));
    CHECK(is_permutation(LinPoly::monomial(t, 0, w)));
    CHECK(!is_permutation(LinPoly(t, {w, t.one()})));
    std::mt19937_64 rng(26);
    FieldTower t9 = gf9();
    for (int i = 0; i < 200; ++i) {
        LinPoly L = random_poly(t9, rng);
        CHECK(is_permutation(L) == (rank_bruteforce(L) == t9.n()));
    }
}

TEST_CASE("matrix representation under a basis") {
    FieldTower t = gf4();
    FqnElem w = t.monomial(1);
    std::vector<FqnElem> basis = {t.one(), w};
    MatFq m = matrix_rep(LinPoly::monomial(t, 0, w), basis);
    CHECK(m.at(0, 0)[0] == 0);
    CHECK(m.at(0, 1)[0] == 1);
    CHECK(m.at(1, 0)[0] == 1);
    CHECK(m.at(1, 1)[0] == 1);
    CHECK(matrix_rep(LinPoly::identity(t), basis) == MatFq::identity(FqOps{t}, 2));
    MatFq ml = matrix_rep(LinPoly(t, {w, t.one()}), basis);
    CHECK(ml.rank() == 1);
    CHECK_THROWS_MATCHES(matrix_rep(LinPoly::identity(t), {t.one(), t.one()}), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) { return e.code() == Errc::NotABasis; }));
}
