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

#include "ore/scalar.hpp"
#include "random.hpp"

using namespace ore;

namespace {

const Field& Qq() { return Field::rational_functions(Field::rationals()); }

std::vector<const Field*> towers() {
    return {&Field::rationals(), &Field::finite(7), &Field::finite(2, 4), &Field::finite(3, 2), &Qq(),
            &Field::rational_functions(Field::finite(2)), &Field::rational_functions(Field::finite(5))};
}

}  // namespace

TEST_CASE("inverse law in Q(q)") {
    Scalar q = Qq().generator();
    CHECK((q * q.inverse()).is_one());
    CHECK(q.inverse().to_string() == "(1)/(q)");
}

TEST_CASE("leading-coefficient cubic factors over Q(q) at sample lambdas") {
    const Field& f = Qq();
    Scalar q = f.generator();
    for (long lam_v : {-3L, -1L, 0L, 2L, 7L}) {
        Scalar lam = f.from_int(lam_v);
        Scalar q2 = q * q, q4 = q2 * q2;
        Scalar lhs = f.one() + q2 * lam + q2 * lam * lam + q4 * lam.pow(3);
        Scalar rhs = (lam + q2.inverse()) * (q4 * lam * lam + q2);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("multiplicative order") {
    FieldConfig f5 = FieldConfig::prime(5, 2);
    CHECK(f5.q.pow(4).is_one());
    // oracle: smallest k with 2^k = 1 by repeated multiplication
    Scalar acc = f5.q;
    int k = 1;
    while (!acc.is_one()) acc *= f5.q, ++k;
    CHECK(q_order(f5).kind == QOrder::Kind::finite);
    CHECK(q_order(f5).order == static_cast<std::uint64_t>(k));
    CHECK(k == 4);

    CHECK(q_order(FieldConfig::rationals(2)).kind == QOrder::Kind::infinite);
    CHECK(q_order(FieldConfig::rationals(-1)).order == 2);
    CHECK(q_order(FieldConfig::rationals(1)).order == 1);
    CHECK(q_order(FieldConfig::symbolic(0)).kind == QOrder::Kind::symbolic);

    for (std::uint32_t p : {7u, 11u, 13u, 19u, 23u}) {
        const Field& f = Field::finite(p);
        for (std::uint32_t c = 1; c < p; ++c) {
            Scalar x = f.element(c);
            std::uint64_t brute = 1;
            for (Scalar y = x; !y.is_one(); y *= x) ++brute;
            CHECK(multiplicative_order(x) == brute);
        }
    }
}

TEST_CASE("extension fields have a primitive generator") {
    for (auto [p, m] : {std::pair{2u, 3u}, {2u, 4u}, {3u, 2u}, {5u, 2u}, {2u, 6u}}) {
        const Field& f = Field::finite(p, m);
        CHECK(f.size() == static_cast<std::uint64_t>(std::pow(p, m)));
        CHECK(multiplicative_order(f.generator()) == f.size() - 1);
    }
}

TEST_CASE("field axioms on random elements") {
    testing::Gen gen(20261019);
    for (const Field* f : towers()) {
        CAPTURE(f->name());
        for (int trial = 0; trial < 60; ++trial) {
            Scalar a = gen.scalar(*f), b = gen.scalar(*f), c = gen.scalar(*f);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a - a).is_zero());
            CHECK(a + f->zero() == a);
            CHECK(a * f->one() == a);
            if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
            if (!b.is_zero()) CHECK((a / b) * b == a);
        }
    }
}

TEST_CASE("canonical forms are stable") {
    testing::Gen gen(7);
    for (const Field* f : towers()) {
        for (int trial = 0; trial < 30; ++trial) {
            Scalar a = gen.scalar(*f);
            Scalar b = a * f->one() + f->zero();
            CHECK(a == b);
            CHECK(a.to_string() == b.to_string());
            CHECK((a <=> b) == std::strong_ordering::equal);
        }
    }
    Scalar q = Qq().generator();
    Scalar x = (q * q - Qq().one()) / (q * Qq().from_int(2) - Qq().from_int(2));
    CHECK(x.to_string() == "1/2 + 1/2*q");
}

TEST_CASE("scalar printing") {
    CHECK(Field::rationals().from_rational(mpq_class(-3, 4)).to_string() == "-3/4");
    CHECK(Field::finite(5).from_int(-1).to_string() == "4 mod 5");
    CHECK(Field::finite(2, 2).generator().to_string() == "(w) mod 2^2");
}

TEST_CASE("specialization is a ring homomorphism") {
    testing::Gen gen(99);
    const Field& Q = Field::rationals();
    for (const mpq_class& v : {mpq_class(2), mpq_class(3), mpq_class(1, 5)}) {
        Scalar qv = Q.from_rational(v);
        for (int trial = 0; trial < 40; ++trial) {
            Scalar a = gen.scalar(Qq()), b = gen.scalar(Qq());
            try {
                Scalar sa = specialize(a, qv), sb = specialize(b, qv);
                CHECK(specialize(a + b, qv) == sa + sb);
                CHECK(specialize(a * b, qv) == sa * sb);
                Scalar lhs = (a + b) * (a + b), rhs = a * a + Qq().from_int(2) * a * b + b * b;
                CHECK(specialize(lhs, qv) == specialize(rhs, qv));
            } catch (const std::domain_error&) {
                // pole at the sample point; nothing to compare
            }
        }
    }
}

TEST_CASE("errors") {
    CHECK_THROWS(Field::rationals().zero().inverse());
    CHECK_THROWS(Field::finite(5).one() + Field::finite(7).one());
    CHECK_THROWS(Field::finite(6));
    CHECK_THROWS(FieldConfig::prime(5, 0));
}
