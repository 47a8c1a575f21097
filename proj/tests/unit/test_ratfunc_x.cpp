/*
   Copyright 2026 The ore-diamond Authors

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

#include <doctest.h>

#include <algorithm>

#include "ore/ratx.hpp"
#include "random.hpp"

using namespace ore;

namespace {

const Field& Qq() { return Field::rational_functions(Field::rationals()); }

Poly P(const Field& f, std::initializer_list<long> c) {
    std::vector<Scalar> v;
    for (long x : c) v.push_back(f.from_int(x));
    return Poly(f, std::move(v));
}

}  // namespace

TEST_CASE("rational function arithmetic") {
    const Field& Q = Field::rationals();
    CHECK(RatX(P(Q, {1, 0, -1})) + RatX(P(Q, {0, 0, 1})) == RatX::constant(Q.one()));

    Scalar q = Qq().generator();
    RatX one_qx(Poly(Qq(), {Qq().one(), q}));
    CHECK((one_qx.inverse() * one_qx).is_one());

    // 1/(1−X) − 1 = X/(1−X): cross-multiplied, (1 − (1−X)) = X
    RatX lhs = RatX(P(Q, {1}), P(Q, {1, -1})) - RatX::constant(Q.one());
    CHECK(lhs.num() * P(Q, {1, -1}) == P(Q, {0, 1}) * lhs.den());
    CHECK(lhs == RatX(P(Q, {0, 1}), P(Q, {1, -1})));
    CHECK_THROWS(RatX(Q).inverse());
    CHECK_THROWS(RatX(P(Q, {1}), Poly(Q)));
}

TEST_CASE("local ring predicates") {
    Scalar q = Qq().generator();
    RatX a = RatX(Poly(Qq(), {Qq().one(), q})).inverse();
    CHECK(a.in_local_ring());
    CHECK(a.is_local_unit());
    CHECK(a.x_valuation() == 0);

    const Field& Q = Field::rationals();
    RatX b(P(Q, {0, 1}), P(Q, {1, -1}));
    CHECK(b.in_local_ring());
    CHECK_FALSE(b.is_local_unit());
    CHECK(b.x_valuation() == 1);

    RatX c = RatX::x(Q).inverse();
    CHECK_FALSE(c.in_local_ring());
    CHECK(c.x_valuation() == -1);
    CHECK_THROWS(RatX(Q).x_valuation());
}

TEST_CASE("q-shift") {
    const Field& f = Qq();
    Scalar q = f.generator();
    RatX g(Poly(f, {f.one(), -f.one(), f.one()}));
    CHECK(alpha(g, q) == RatX(Poly(f, {f.one(), -q, q * q})));
    CHECK(alpha(RatX(Poly(f, {f.zero(), q})), q, -1) == RatX::x(f));
    CHECK(alpha(g, q, 0) == g);

    // monic g of degree n+1: α²(g) = q^{2n+2} times a monic polynomial whose roots are q⁻² times those of g
    const Field& F = Field::finite(13);
    Scalar q13 = F.from_int(2);
    for (int n = 0; n < 4; ++n) {
        std::vector<Scalar> roots;
        for (int i = 0; i <= n; ++i) roots.push_back(F.from_int(3 * i + 1));
        Poly gg = Poly::from_roots(F, roots);
        Poly shifted = alpha(gg, q13, 2);
        std::vector<Scalar> moved;
        for (const auto& r : roots) moved.push_back(r / (q13 * q13));
        CHECK(shifted == q13.pow(2 * n + 2) * Poly::from_roots(F, moved));
    }
}

TEST_CASE("roots in the working field") {
    const Field& Q = Field::rationals();
    RootSplit s = roots_in_field(P(Q, {-1, 3, -3, 1}));
    CHECK(s.roots.size() == 3);
    CHECK(std::all_of(s.roots.begin(), s.roots.end(), [](const Scalar& r) { return r.is_one(); }));
    CHECK(s.remainder == P(Q, {1}));

    s = roots_in_field(P(Q, {1, 0, 1}));
    CHECK(s.roots.empty());
    CHECK(s.remainder == P(Q, {1, 0, 1}));

    const Field& F5 = Field::finite(5);
    s = roots_in_field(P(F5, {-1, 0, 1}));
    // oracle: evaluate at every residue
    std::vector<Scalar> brute;
    for (const auto& x : F5.elements())
        if (P(F5, {-1, 0, 1}).eval(x).is_zero()) brute.push_back(x);
    CHECK(s.roots == brute);
    CHECK(s.roots == std::vector<Scalar>{F5.from_int(1), F5.from_int(4)});
    CHECK(s.remainder == P(F5, {1}));

    // rational roots with nontrivial denominators
    s = roots_in_field(P(Q, {-2, 3}) * P(Q, {5, 4}) * P(Q, {1, 0, 1}));
    CHECK(s.roots.size() == 2);
    CHECK(s.remainder.degree() == 2);
}

TEST_CASE("automorphism and valuation laws on random pairs") {
    testing::Gen gen(1234);
    for (const Field* f : {&Field::rationals(), &Field::finite(7), &Field::finite(13), &Qq()}) {
        CAPTURE(f->name());
        Scalar q = f->kind() == FieldKind::rational_functions ? f->generator() : f->from_int(2);
        const bool symbolic = f->kind() == FieldKind::rational_functions;
        const int trials = symbolic ? 60 : 340, deg = symbolic ? 2 : 3;
        for (int t = 0; t < trials; ++t) {
            RatX a = gen.ratx(*f, deg), b = gen.ratx(*f, deg);
            CHECK(alpha(a * b, q) == alpha(a, q) * alpha(b, q));
            CHECK(alpha(a + b, q) == alpha(a, q) + alpha(b, q));
            int m = gen.uniform(-3, 3), n = gen.uniform(-3, 3);
            CHECK(alpha(alpha(a, q, m), q, n) == alpha(a, q, m + n));
            if (!a.is_zero() && !b.is_zero()) {
                CHECK((a * b).x_valuation() == a.x_valuation() + b.x_valuation());
                CHECK(alpha(a, q).x_valuation() == a.x_valuation());
            }
            CHECK(alpha(a, q).in_local_ring() == a.in_local_ring());
            RatX la = gen.ratx(*f, deg, true), lb = gen.ratx(*f, deg, true);
            CHECK((la + lb).in_local_ring());
            CHECK((la * lb).in_local_ring());
            if (la.is_local_unit()) CHECK(la.inverse().in_local_ring());
        }
    }
}

TEST_CASE("reduction to a prime field") {
    const Field& Q = Field::rationals();
    RatX a(P(Q, {1, 1}), P(Q, {3, 1}));
    RatX r = reduce(a, Field::finite(5));
    CHECK(r.to_string() == "(1 + X)/(3 + X)");
    CHECK_THROWS(reduce(RatX(P(Q, {1}), P(Q, {0, 5})), Field::finite(5)));
}
