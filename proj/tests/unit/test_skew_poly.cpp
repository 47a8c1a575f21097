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

#include "ore/skew_poly.hpp"
#include "random.hpp"

using namespace ore;

namespace {

struct Ring {
    const Field& f;
    Scalar q;
    RatX X() const { return RatX::x(f); }
    RatX c(long v) const { return RatX::constant(f.from_int(v)); }
    RatX s(const Scalar& v) const { return RatX::constant(v); }
    SkewPoly theta() const { return SkewPoly::theta(q); }
    SkewPoly k(const RatX& r) const { return SkewPoly::constant(q, r); }
    SkewPoly sp(std::vector<RatX> c) const { return SkewPoly(q, std::move(c)); }
};

Ring symbolic(const Field& base) {
    const Field& f = Field::rational_functions(base);
    return {f, f.generator()};
}

}  // namespace

TEST_CASE("commutation rule") {
    Ring r = symbolic(Field::rationals());
    SkewPoly lhs = r.theta() * r.k(r.X());
    CHECK(lhs == r.sp({r.c(0), r.s(r.q) * r.X()}));
    CHECK(lhs.to_string() == "(q*X)*theta^1");
    SkewPoly a = r.theta() + r.k(r.X());
    CHECK(a * SkewPoly::one(r.q) == a);
}

TEST_CASE("product of the two degree-one-in-X factors") {
    Ring r = symbolic(Field::rationals());
    RatX X = r.X(), one = r.c(1), q = r.s(r.q);
    SkewPoly v = r.sp({one + X, one, X});
    SkewPoly w = r.sp({one - X, X});
    SkewPoly h = v * w;
    REQUIRE(h.degree() == 3);
    CHECK(h.coeff(0) == one - X * X);
    CHECK(h.coeff(1) == one - q * X + X + X * X);
    CHECK(h.coeff(2) == q * X + (one - q * q * X) * X);
    CHECK(h.coeff(3) == q * q * X * X);
}

TEST_CASE("right division") {
    Ring r = symbolic(Field::rationals());
    SkewPoly th = r.theta();
    auto [quot, rem] = right_divide(th * th, th - r.k(r.X()));
    CHECK(quot == th + r.k(r.s(r.q) * r.X()));
    CHECK(rem == r.k(r.s(r.q) * r.X() * r.X()));

    SkewPoly a = th * th + r.k(r.X()) * th + r.k(r.c(3));
    auto self = right_divide(a, a);
    CHECK(self.quot == SkewPoly::one(r.q));
    CHECK(self.rem.is_zero());
    CHECK_THROWS(right_divide(a, SkewPoly(r.q)));
}

TEST_CASE("characteristic two identities") {
    Ring r = symbolic(Field::finite(2));
    RatX X = r.X(), one = r.c(1), q = r.s(r.q);
    SkewPoly h = r.sp({one + X, one, X}) * r.sp({one - X, X});

    SkewPoly right_factor = r.sp({one, one});
    auto rd = right_divide(h, right_factor);
    CHECK(rd.rem.is_zero());
    CHECK(rd.quot == r.sp({one + X * X, (one + q) * X, q * q * X * X}));

    SkewPoly left_factor = r.sp({one, X / (one + q * X)});
    CHECK(left_factor.in_S());
    auto ld = left_divide(h, left_factor);
    CHECK(ld.rem.is_zero());
    CHECK(ld.quot == r.sp({one + X * X, one + q * X + (one + q) * X * X, q * X * (X + one)}));
    CHECK(left_factor * ld.quot == h);
}

TEST_CASE("left division") {
    Ring r = symbolic(Field::rationals());
    SkewPoly th = r.theta();
    SkewPoly a = th * th + r.k(r.X());
    auto by_one = left_divide(a, SkewPoly::one(r.q));
    CHECK(by_one.quot == a);
    CHECK(by_one.rem.is_zero());

    auto deg_eq = left_divide(th * th, th * th + SkewPoly::one(r.q));
    CHECK(deg_eq.quot == SkewPoly::one(r.q));
    CHECK(deg_eq.rem == r.k(r.c(-1)));
    CHECK((th * th + SkewPoly::one(r.q)) * deg_eq.quot + deg_eq.rem == th * th);
}

TEST_CASE("gcrd and lclm examples") {
    Ring r = symbolic(Field::rationals());
    SkewPoly th = r.theta(), one = SkewPoly::one(r.q);
    SkewPoly common = th - one;
    SkewPoly a = (th - r.k(r.X())) * common;
    SkewPoly b = (th + one) * common;
    CHECK(gcrd(a, b) == common);
    CHECK(gcrd(a, a) == a.monic());
    SkewPoly l = lclm(a, b);
    CHECK(l.degree() == 3);
    CHECK(right_divide(l, a).rem.is_zero());
    CHECK(right_divide(l, b).rem.is_zero());
    CHECK_THROWS(gcrd(SkewPoly(r.q), SkewPoly(r.q)));
    CHECK_THROWS(lclm(a, SkewPoly(r.q)));
}

TEST_CASE("membership in S") {
    Ring r = symbolic(Field::rationals());
    RatX X = r.X(), one = r.c(1), q = r.s(r.q);
    CHECK(r.sp({one, X / (one + q * X)}).in_S());
    CHECK_FALSE(r.sp({r.c(0), X.inverse()}).in_S());
    CHECK(SkewPoly(r.q).in_S());
}

TEST_CASE("ring laws on random elements") {
    testing::Gen gen(42);
    for (auto [field, trials] : {std::pair{&Field::finite(7), 150}, {&Field::finite(13), 100},
                                 {&Field::rationals(), 60}, {&Field::finite(3, 2), 60}}) {
        CAPTURE(field->name());
        Scalar q = field->extension_degree() > 1 ? field->generator() : field->from_int(3);
        for (int t = 0; t < trials; ++t) {
            SkewPoly a = gen.skew(q, 4, 2), b = gen.skew(q, 4, 2), c = gen.skew(q, 2, 2);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a + b) * c == a * c + b * c);
            if (!a.is_zero() && !b.is_zero()) CHECK((a * b).degree() == a.degree() + b.degree());
            RatX x = gen.ratx(*field, 2);
            SkewPoly th_i = SkewPoly::one(q);
            for (int i = 0; i <= 5; ++i) {
                CHECK(th_i * SkewPoly::constant(q, x) == SkewPoly::constant(q, alpha(x, q, i)) * th_i);
                th_i = th_i * SkewPoly::theta(q);
            }
        }
    }
}

TEST_CASE("ring laws over Q(q)") {
    testing::Gen gen(43);
    Ring r = symbolic(Field::rationals());
    for (int t = 0; t < 15; ++t) {
        SkewPoly a = gen.skew(r.q, 2, 1), b = gen.skew(r.q, 2, 1), c = gen.skew(r.q, 1, 1);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("division round trip and Euclidean degree identity") {
    testing::Gen gen(2026);
    for (auto [field, trials] : {std::pair{&Field::finite(7), 300}, {&Field::rationals(), 100}}) {
        CAPTURE(field->name());
        Scalar q = field->from_int(field->is_finite() ? 3 : 2);
        for (int t = 0; t < trials; ++t) {
            const int xd = field->is_finite() ? 2 : 1;
            SkewPoly a = gen.skew(q, 4, xd), b = gen.nonzero_skew(q, 3, xd);
            auto rd = right_divide(a, b);
            CHECK(rd.quot * b + rd.rem == a);
            CHECK(rd.rem.degree() < b.degree());
            auto ld = left_divide(a, b);
            CHECK(b * ld.quot + ld.rem == a);
            CHECK(ld.rem.degree() < b.degree());
            if (a.is_zero()) continue;
            SkewPoly g = gcrd(a, b), l = lclm(a, b);
            CHECK(right_divide(a, g).rem.is_zero());
            CHECK(right_divide(b, g).rem.is_zero());
            CHECK(right_divide(l, a).rem.is_zero());
            CHECK(right_divide(l, b).rem.is_zero());
            CHECK(l.degree() == a.degree() + b.degree() - g.degree());
        }
    }
}

TEST_CASE("planted common right factor is recovered") {
    testing::Gen gen(5);
    Scalar q = Field::finite(11).from_int(2);
    for (int t = 0; t < 100; ++t) {
        SkewPoly d = gen.nonzero_skew(q, 2, 2);
        SkewPoly a = gen.nonzero_skew(q, 2, 2) * d, b = gen.nonzero_skew(q, 2, 2) * d;
        SkewPoly g = gcrd(a, b);
        CHECK(right_divide(g, d).rem.is_zero());
    }
}

TEST_CASE("reduction and printing") {
    const Field& Q = Field::rationals();
    Scalar q = Q.from_int(2);
    SkewPoly a(q, {RatX::constant(Q.from_rational(mpq_class(1, 3))), RatX(Q), RatX::x(Q)});
    CHECK(a.to_string() == "(1/3) + (X)*theta^2");
    CHECK(SkewPoly(q).to_string() == "0");
    SkewPoly r = reduce(a, Field::finite(5));
    CHECK(r.to_string() == "(2) + (X)*theta^2");
    CHECK(SkewPoly(q, {RatX(Q), RatX::x(Q)}).to_right_form_string() == "theta^1*(1/2*X)");
    CHECK(irreducibility_in_T(SkewPoly::theta(q)) == TIrreducibility::irreducible);
    CHECK(irreducibility_in_T(a) == TIrreducibility::unknown);
}
