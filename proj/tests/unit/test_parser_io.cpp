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

#include "json.hpp"
#include "ore/parser_io.hpp"
#include "random.hpp"

using namespace ore;

namespace {

std::size_t error_position(std::string_view text, const FieldConfig& cfg, const EvalOptions& opts = {}) {
    try {
        parse_skew(text, cfg, opts);
    } catch (const ParseError& e) {
        return e.position();
    }
    return std::string::npos;
}

}  // namespace

TEST_CASE("reference product parses to the expanded coefficients") {
    auto cfg = FieldConfig::symbolic(0);
    const Field& f = *cfg.field;
    Scalar q = cfg.q, one = f.one();
    Poly X = Poly::variable(f);
    auto C = [&](const Scalar& s) { return Poly::constant(s); };
    auto h = parse_skew("(1+X+theta+X*theta^2)*(1-X+X*theta)", cfg);
    REQUIRE(h.degree() == 3);
    CHECK(h.coeff(0) == RatX(C(one) - X * X));
    CHECK(h.coeff(1) == RatX(C(one) - C(q) * X + X + X * X));
    CHECK(h.coeff(2) == RatX(C(q) * X + (C(one) - C(q * q) * X) * X));
    CHECK(h.coeff(3) == RatX(C(q * q) * X * X));
}

TEST_CASE("noncommutativity") {
    auto cfg = FieldConfig::symbolic(0);
    const Field& f = *cfg.field;
    RatX X = RatX::x(f);
    auto tx = parse_skew("theta*X", cfg);
    CHECK(tx == SkewPoly(cfg.q, {RatX(Poly(f)), RatX::constant(cfg.q) * X}));
    CHECK(print_canonical(tx) == "(q*X)*theta^1");
    auto diff = parse_skew("X*theta - theta*X", cfg);
    CHECK(diff == SkewPoly(cfg.q, {RatX(Poly(f)), RatX::constant(f.one() - cfg.q) * X}));
    CHECK(!(parse_skew("X*theta", cfg) == tx));
    CHECK(parse_skew("X*θ", cfg) == parse_skew("X * theta", cfg));
    // q = 1 makes the ring commutative
    auto one = FieldConfig::rationals(1);
    CHECK(parse_skew("X*theta", one) == parse_skew("theta*X", one));
}

TEST_CASE("precedence and division") {
    auto cfg = FieldConfig::rationals(2);
    CHECK(parse_skew("-X^2", cfg) == parse_skew("-(X*X)", cfg));
    CHECK(parse_skew("1/2*X", cfg) == parse_skew("X/2", cfg));
    CHECK(parse_skew("X/(1+X)^2", cfg) == parse_skew("(X/(1+X))*(X/(1+X))", cfg));
    CHECK(parse_skew("X^2/X", cfg) == parse_skew("X", cfg));
    CHECK(parse_skew("theta*X/X", cfg) == parse_skew("theta", cfg));
    CHECK(parse_skew("q", cfg) == parse_skew("2", cfg));
    CHECK(parse_skew("2 - 3 - 4", cfg) == parse_skew("-5", cfg));
    CHECK(print_canonical(parse_skew("0*theta", cfg)) == "0");
    CHECK(parse_ratx("1/(1+q*X)", cfg) == RatX(Poly::constant(cfg.field->one()), Poly(*cfg.field, {cfg.field->one(), cfg.q})));
    CHECK(parse_scalar("3/4", *cfg.field) == cfg.field->from_rational(mpq_class(3, 4)));
    const Field& f16 = Field::finite(2, 4);
    CHECK(parse_scalar("w^4", f16) == f16.generator().pow(4));
    auto sym = FieldConfig::symbolic(3);
    CHECK(parse_scalar("q^2+1", *sym.field) == sym.q * sym.q + sym.field->one());
}

TEST_CASE("parse errors carry positions") {
    auto cfg = FieldConfig::rationals(2);
    CHECK(error_position("2X", cfg) == 1);
    CHECK(error_position("X (1+X)", cfg) == 2);
    CHECK(error_position("X +", cfg) == 3);
    CHECK(error_position("X^-1", cfg) == 2);
    CHECK(error_position("(1+X", cfg) == 4);
    CHECK(error_position("1 + foo", cfg) == 4);
    CHECK(error_position("1 $ 2", cfg) == 2);
    CHECK(error_position("", cfg) == 0);
    CHECK(error_position("X/theta", cfg) == 2);
    CHECK(error_position("X/(X-X)", cfg) == 2);
    CHECK(error_position("X^5000", cfg) == 1);
    CHECK(error_position("X^99999999999", cfg) == 2);
    CHECK(error_position("X^2^2", cfg) == 3);
    CHECK(error_position("w", cfg) == 0);
    CHECK(error_position("1/X", cfg) == std::string::npos);
    CHECK(error_position("1/X", cfg, EvalOptions{true}) == 2);
    CHECK(error_position("1/(1+X)", cfg, EvalOptions{true}) == std::string::npos);
    CHECK_THROWS_AS(parse_scalar("X", *cfg.field), ParseError);
    CHECK_THROWS_AS(parse_scalar("q", *cfg.field), ParseError);
    CHECK_THROWS_AS(parse_ratx("theta", cfg), ParseError);
    CHECK_THROWS_AS(parse_skew("1/5", FieldConfig::prime(5, 2)), ParseError);
}

TEST_CASE("print/parse round trip on random elements") {
    std::vector<FieldConfig> cfgs = {FieldConfig::rationals(mpq_class(-3, 2)), FieldConfig::prime(7, 3),
                                     FieldConfig::finite(2, 3), FieldConfig::finite(3, 2),
                                     FieldConfig::symbolic(0), FieldConfig::symbolic(2)};
    testing::Gen gen(2026);
    int checked = 0;
    for (const auto& cfg : cfgs) {
        for (int i = 0; i < 200; ++i) {
            SkewPoly p = gen.skew(cfg.q, 3, 3);
            std::string text = print_canonical(p);
            SkewPoly back = parse_skew(text, cfg);
            CHECK_MESSAGE(back == p, text);
            CHECK(print_canonical(back) == text);
            ++checked;
        }
    }
    CHECK(checked >= 1000);
}

TEST_CASE("JSON encoding") {
    const Field& f = Field::finite(2, 2);
    auto cfg = FieldConfig::finite(2, 2);
    auto h = parse_skew("(1+X+theta+X*theta^2)*(1-X+X*theta)", cfg);
    CheckConfig cc;
    cc.degree_bound = 2;
    auto rep = solve_master(eliminate_left_B1(h).master, cc);
    REQUIRE(rep.witness);
    auto j = nlohmann::json::parse(encode_json(rep));
    CHECK(j["schema_version"] == json_schema_version);
    CHECK(j["kind"] == "factor_report");
    CHECK(j["report"]["status"] == "witness_found");
    auto w = j["report"]["witness"];
    CHECK(parse_ratx(w["t"].get<std::string>(), cfg) == rep.witness->t);
    CHECK(parse_skew(w["b_prime"].get<std::string>(), cfg) * parse_skew(w["c_prime"].get<std::string>(), cfg) == h);
    CHECK(encode_json(rep) == encode_json(rep));
    (void)f;

    auto q2 = FieldConfig::rationals(2);
    auto s = nlohmann::json::parse(encode_json(parse_skew("theta*X + 1/3", q2)));
    CHECK(s["value"]["text"] == "(1/3) + (2*X)*theta^1");
    CHECK(s["value"]["coefficients"][0] == "1/3");

    auto o = nlohmann::json::parse(encode_json(orbit(MaxIdeal::from_root(Field::rationals().one(), Automorphism::shift(q2.q)), 5)));
    CHECK(o["status"] == "exceeded(5)");
    auto sp = nlohmann::json::parse(encode_json(is_special_for(RatX::x(Field::rationals()), 4, 10, q2.q)));
    CHECK(sp["result"] == "yes(4)");
}
