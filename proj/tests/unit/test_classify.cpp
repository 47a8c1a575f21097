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

#include "ore/classify.hpp"
#include "random.hpp"

using namespace ore;

namespace {

const Field& Qq() { return Field::rational_functions(Field::rationals()); }

struct Env {
    const Field& f = Qq();
    Scalar q = f.generator();
    RatX X = RatX::x(f);
    RatX c(long v) const { return RatX::constant(f.from_int(v)); }
    SkewPoly sp(std::vector<RatX> v) const { return SkewPoly(q, std::move(v)); }
};

// Independent shape check read straight off the definition list.
TypeTag shape_oracle(const SkewPoly& zn) {
    const Field& f = zn.field();
    const Scalar& q = zn.q();
    RatX X = RatX::x(f);
    if (zn == SkewPoly::theta(q) || zn == SkewPoly::constant(q, X)) return TypeTag::A;
    if (zn == SkewPoly::one(q)) return TypeTag::Unit;
    SkewPoly rest = zn - SkewPoly::one(q);
    bool rest_div_x = true;
    for (const auto& c : rest.coefficients()) rest_div_x = rest_div_x && (c.is_zero() || c.x_valuation() >= 1);
    if (rest_div_x && zn.degree() >= 1) return TypeTag::B;
    // f monic nonconstant: top nonzero coefficient at X = 0 equals 1
    int top = -1;
    for (std::size_t i = 0; i < zn.coefficients().size(); ++i)
        if (!zn.coeff(i).value_at_zero().is_zero()) top = static_cast<int>(i);
    if (top >= 1 && zn.coeff(static_cast<std::size_t>(top)).value_at_zero().is_one()) return TypeTag::C;
    return TypeTag::Unnormalized;
}

}  // namespace

TEST_CASE("decomposition z = f + X s") {
    Env e;
    auto d = decompose(e.sp({e.c(1) - e.X, e.X}));
    CHECK(d.f == Poly(e.f, {e.f.one()}));
    CHECK(d.s == e.sp({e.c(-1), e.c(1)}));

    d = decompose(e.sp({e.c(1) + e.X, e.c(1), e.X}));
    CHECK(d.f == Poly(e.f, {e.f.one(), e.f.one()}));
    CHECK(d.s == e.sp({e.c(1), e.c(0), e.c(1)}));

    d = decompose(e.sp({e.X}));
    CHECK(d.f.is_zero());
    CHECK(d.s == SkewPoly::one(e.q));

    CHECK_THROWS(decompose(e.sp({e.X.inverse()})));
}

TEST_CASE("classification examples") {
    Env e;
    CHECK(normalize_and_classify(SkewPoly::theta(e.q)).tag == TypeTag::A);
    CHECK(normalize_and_classify(e.sp({e.X})).tag == TypeTag::A);

    auto b = normalize_and_classify(e.sp({e.c(1) - e.X, e.X}));
    CHECK(b.tag == TypeTag::B);
    // unit is the θ⁰ coefficient; see the header for why
    CHECK(b.unit == e.c(1) - e.X);

    SkewPoly planted = e.sp({e.c(1) + e.X}) * e.sp({e.c(1), e.X});
    auto pb = normalize_and_classify(planted);
    CHECK(pb.tag == TypeTag::B);
    CHECK(pb.unit == e.c(1) + e.X);
    CHECK(pb.z_norm == e.sp({e.c(1), e.X}));

    auto u = normalize_and_classify(e.sp({e.c(2) + e.X}));
    CHECK(u.tag == TypeTag::Unit);

    auto c = normalize_and_classify(e.sp({e.c(1) + e.X, e.c(1), e.X}));
    CHECK(c.tag == TypeTag::C);
    CHECK(c.unit == e.c(1));

    CHECK(normalize_and_classify(e.sp({e.c(0), e.X})).tag == TypeTag::Unnormalized);
    CHECK(shape_of(SkewPoly(e.q)) == TypeTag::Zero);
    CHECK_THROWS(normalize_and_classify(SkewPoly(e.q)));
    CHECK(to_string(TypeTag::C) == "C");
}

TEST_CASE("char 2: unit 2 + X is no longer a unit") {
    const Field& f = Field::finite(2);
    Scalar q = f.one();
    SkewPoly z(q, {RatX::constant(f.from_int(2)) + RatX::x(f)});
    CHECK(normalize_and_classify(z).tag == TypeTag::A);
}

TEST_CASE("round trip, unit invariance and the shape oracle on random elements of S") {
    testing::Gen gen(77);
    for (const Field* f : {&Field::finite(7), &Field::finite(13), &Field::rationals()}) {
        Scalar q = f->from_int(3);
        for (int t = 0; t < 200; ++t) {
            SkewPoly z = gen.nonzero_skew(q, 3, 2, true);
            // mix in elements with f = 0 and with constant f
            if (t % 5 == 1) z = RatX::x(*f) * z;
            if (t % 5 == 2) z = SkewPoly::one(q) + RatX::x(*f) * z;
            if (z.is_zero()) continue;
            auto r = normalize_and_classify(z);
            CHECK(r.unit * r.z_norm == z);
            CHECK(r.unit.is_local_unit());
            CHECK(r.z_norm.in_S());
            CHECK(r.tag == shape_oracle(r.z_norm));

            RatX u(*f);
            do u = gen.ratx(*f, 2, true); while (!u.is_local_unit());
            auto r2 = normalize_and_classify(u * z);
            CHECK(r2.tag == r.tag);
            CHECK(r2.z_norm == r.z_norm);
        }
    }
}
