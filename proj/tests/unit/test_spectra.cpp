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

#include <numeric>

#include "ore/spectra.hpp"
#include "random.hpp"

using namespace ore;

namespace {

/// Degree of the minimal polynomial of a over 𝔽_2: first d with 1, a, ..., a^d dependent.
unsigned min_poly_degree_gf2(const Field& f, const Scalar& a) {
    std::vector<std::uint32_t> basis;  // reduced bit vectors, leading bit distinct
    Scalar pw = f.one();
    for (unsigned d = 0;; ++d) {
        std::uint32_t v = 0;
        auto dg = f.digits(pw.code());
        for (std::size_t i = 0; i < dg.size(); ++i) v |= dg[i] << i;
        for (auto b : basis)
            if ((v ^ b) < v) v ^= b;
        if (v == 0) return d;
        basis.push_back(v);
        std::sort(basis.rbegin(), basis.rend());
        pw = pw * a;
    }
}

unsigned mult_order(const Scalar& q) {
    Scalar x = q;
    unsigned n = 1;
    while (!x.is_one()) x = x * q, ++n;
    return n;
}

/// Number of Frobenius orbits on 𝔽_{p^m}: Burnside over the cyclic group of order m.
std::size_t burnside_orbits(std::uint64_t p, unsigned m) {
    std::uint64_t total = 0;
    for (unsigned k = 0; k < m; ++k) {
        std::uint64_t fixed = 1;
        for (unsigned i = 0, g = std::gcd(k, m); i < g; ++i) fixed *= p;
        total += fixed;
    }
    return total / m;
}

}  // namespace

TEST_CASE("orbit examples") {
    const Field& f8 = Field::finite(2, 3);
    REQUIRE(f8.modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});
    auto r = orbit(MaxIdeal::from_root(f8.generator(), Automorphism::frobenius()), 10);
    CHECK(r.status() == "finite(3)");
    CHECK(r.elements.size() == 3);

    const Field& Q = Field::rationals();
    auto shift = Automorphism::shift(Q.from_int(2));
    auto e = orbit(MaxIdeal::from_root(Q.one(), shift), 50);
    CHECK(e.status() == "exceeded(50)");
    CHECK(e.elements[1].generator == Poly(Q, {Q.from_rational(mpq_class(-1, 2)), Q.one()}));
    CHECK(orbit(MaxIdeal::from_root(Q.zero(), shift), 50).status() == "finite(1)");
    CHECK_THROWS(orbit(MaxIdeal::from_root(Q.one(), shift), 0));
}

TEST_CASE("max ideal preconditions") {
    const Field& f = Field::finite(5);
    auto a = Automorphism::shift(f.from_int(2));
    CHECK_THROWS(MaxIdeal::from_generator(Poly(f, {f.from_int(4), f.zero(), f.one()}), a));  // X²−1
    CHECK_THROWS(MaxIdeal::from_generator(Poly(f, {f.from_int(2), f.from_int(2)}), a));      // not monic
    CHECK_NOTHROW(MaxIdeal::from_generator(Poly(f, {f.from_int(2), f.zero(), f.one()}), a)); // X²+2
    CHECK_THROWS(Automorphism::frobenius().apply(Poly::variable(Field::rationals())));
}

TEST_CASE("Frobenius orbit sizes equal minimal polynomial degrees") {
    for (unsigned m = 1; m <= 6; ++m) {
        const Field& f = Field::finite(2, m);
        for (const auto& a : f.elements()) {
            auto r = orbit(MaxIdeal::from_root(a, Automorphism::frobenius()), 64);
            REQUIRE(r.finite);
            CHECK(r.size == min_poly_degree_gf2(f, a));
        }
    }
}

TEST_CASE("q-shift orbit sizes over prime fields") {
    for (std::uint32_t p : {5u, 7u, 11u, 13u}) {
        const Field& f = Field::finite(p);
        for (const auto& q : f.elements()) {
            if (q.is_zero()) continue;
            auto al = Automorphism::shift(q);
            for (const auto& a : f.elements()) {
                auto r = orbit(MaxIdeal::from_root(a, al), 100);
                REQUIRE(r.finite);
                CHECK(r.size == (a.is_zero() ? 1u : mult_order(q)));
                // α^s fixes the generator, and every listed element is distinct
                Poly g = r.representative.generator;
                for (std::size_t i = 0; i < r.size; ++i) g = al.apply(g).monic();
                CHECK(g == r.representative.generator);
                for (std::size_t i = 1; i < r.elements.size(); ++i) CHECK(!(r.elements[i] == r.elements[0]));
            }
            // X² − c with c a non-square: ⟨X² − c⟩ ↦ ⟨X² − c/q²⟩, orbit size ord(q²)
            for (const auto& c : f.elements()) {
                Poly g(f, {-c, f.zero(), f.one()});
                if (c.is_zero() || !is_irreducible(g)) continue;
                CHECK(orbit(MaxIdeal::from_generator(g, al), 100).size == mult_order(q * q));
            }
        }
    }
}

TEST_CASE("special products") {
    const Field& Q = Field::rationals();
    Scalar q = Q.from_int(3);
    RatX X = RatX::x(Q);
    CHECK(special_product(X, q, 3) == RatX::constant(Q.from_int(27)) * X * X * X);
    CHECK(special_product(X, q, 1) == X);
    RatX c = RatX::constant(Q.from_int(-2));
    CHECK(special_product(c, q, 5) == RatX::constant(Q.from_int(-32)));
    CHECK(special_product(Poly::variable(Q), q, 2) == Poly::monomial(q, 2));
    CHECK_THROWS(special_product(RatX(Poly(Q, {})), q, 2));
    CHECK_THROWS(special_product(X, q, 0));

    testing::Gen gen(4242);
    for (int i = 0; i < 100; ++i) {
        RatX a = gen.nonzero_ratx(Q, 3, true);
        unsigned n = static_cast<unsigned>(gen.uniform(1, 5));
        RatX pr = special_product(a, q, n);
        CHECK(pr.x_valuation() == static_cast<int>(n) * a.x_valuation());
        RatX direct = a;  // independent expansion by substitution X ↦ qⁱX
        for (unsigned j = 1; j < n; ++j) {
            Scalar s = q.pow(j);
            direct *= RatX(a.num().scale_variable(s), a.den().scale_variable(s));
        }
        CHECK(pr == direct);
    }
}

TEST_CASE("is_special_for") {
    const Field& Q = Field::rationals();
    Scalar q = Q.from_int(2);
    RatX X = RatX::x(Q);
    CHECK(is_special_for(X, 5, 20, q).to_string() == "yes(5)");
    CHECK(is_special_for(X * X, 5, 20, q).to_string() == "yes(3)");
    CHECK(is_special_for(RatX::constant(Q.one()) + X, 3, 20, q).to_string() == "no_up_to(20)");
    CHECK(is_special_for(X, 0, 20, q).to_string() == "yes(1)");
    CHECK_THROWS(is_special_for(X, -1, 20, q));
    for (int m = 1; m <= 12; ++m) CHECK(is_special_for(X, m, 20, q).to_string() == "yes(" + std::to_string(m) + ")");

    testing::Gen gen(99);
    for (int i = 0; i < 200; ++i) {
        RatX a = gen.nonzero_ratx(Q, 3, true);
        if (gen.coin(0.5)) a *= pow(Poly::variable(Q), static_cast<unsigned>(gen.uniform(1, 3)));
        int m = gen.uniform(1, 8);
        auto r = is_special_for(a, m, 10, q);
        CHECK(r.special == (a.x_valuation() >= 1));
        if (r.special) CHECK(r.n == static_cast<unsigned>((m + a.x_valuation() - 1) / a.x_valuation()));
    }
}

TEST_CASE("Frobenius non-speciality witness") {
    const Field& f16 = Field::finite(2, 4);
    testing::Gen gen(16);
    for (int i = 0; i < 20; ++i) {
        Poly c = gen.nonzero_poly(f16, 3);
        auto ev = frobenius_nonspecial_witness(2, 4, c, 100);
        CHECK(ev.refuted);
        CHECK(ev.orbits == static_cast<std::size_t>(c.degree()) + 1);
        CHECK(ev.orbit_lines.size() == ev.orbits);
    }
    Poly cubic = pow(Poly::variable(f16), 3) + Poly::constant(f16.one());
    auto ev = frobenius_nonspecial_witness(2, 4, cubic, 100);
    CHECK(ev.refuted);
    CHECK(ev.orbits >= 4);

    CHECK_THROWS(frobenius_nonspecial_witness(2, 4, Poly(f16, {}), 100));
    CHECK_THROWS(frobenius_nonspecial_witness(2, 4, cubic, 2));  // budget exhausted first
    CHECK_THROWS(frobenius_nonspecial_witness(2, 3, cubic, 100));  // wrong field

    // x − w with w ∈ 𝔽_p: for m ≥ 2 at least two orbits avoid its only root
    for (unsigned m = 2; m <= 5; ++m) {
        const Field& f = Field::finite(3, m);
        Poly lin(f, {-f.one(), f.one()});
        auto e = frobenius_nonspecial_witness(3, m, lin, 1000);
        CHECK(e.refuted);
        CHECK(e.orbits_without_root >= 1);
        CHECK(e.orbits == 2);
    }

    // a candidate vanishing on all but one orbit: degree Burnside − 1, refuted only at the last orbit
    for (unsigned m : {2u, 3u, 4u}) {
        const Field& f = Field::finite(2, m);
        std::vector<Scalar> reps;
        std::vector<char> seen(f.size(), 0);
        for (const auto& a : f.elements()) {
            if (seen[a.code()]) continue;
            reps.push_back(a);
            for (Scalar c = a; !seen[c.code()]; c = c * c) seen[c.code()] = 1;
        }
        REQUIRE(reps.size() == burnside_orbits(2, m));
        std::vector<Scalar> roots(reps.begin(), reps.end() - 1);
        auto e = frobenius_nonspecial_witness(2, m, Poly::from_roots(f, roots), 1000);
        CHECK(e.orbits == burnside_orbits(2, m));
        CHECK(e.orbits_without_root == 1);
        CHECK_THROWS(frobenius_nonspecial_witness(2, m, Poly::from_roots(f, reps), 1000));
    }
}
