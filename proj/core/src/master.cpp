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

#include "ore/master.hpp"

#include <stdexcept>

namespace ore {

std::string to_string(Shape s) { return s == Shape::left_B1 ? "left_B1" : "right_deg1"; }

namespace {

void require_cubic(const SkewPoly& h) {
    if (h.degree() != 3) throw std::invalid_argument("expected theta-degree 3, got " + std::to_string(h.degree()));
    if (!h.in_S()) throw std::invalid_argument("element is not in S");
    if (!h.coeff(0).is_local_unit())
        throw std::invalid_argument("constant coefficient " + h.coeff(0).to_string() + " is not a unit of R");
}

RatX cst(const Field&, const Scalar& s) { return RatX::constant(s); }

RatX xpow(const Field& f, std::size_t k) { return RatX(Poly::monomial(f.one(), k)); }

// Value of r / X^v at 0 for r ∈ X^v·R.
Scalar normalized_value(const RatX& r, int v) {
    return r.num().shift_down(static_cast<std::size_t>(v)).coeff(0) / r.den().coeff(0);
}

}  // namespace

RatX MasterEquation::evaluate(const RatX& y) const {
    const Scalar& qq = q();
    RatX y1 = alpha(y, qq, 1), y2 = alpha(y, qq, 2);
    RatX m1 = y, m2 = y * y1, m3 = m2 * y2;
    return c[0] + c[1] * m1 + c[2] * m2 + c[3] * m3;
}

std::string MasterEquation::to_string() const {
    const std::string y = shape == Shape::left_B1 ? "t" : "u";
    const std::array<std::string, 4> mono = {"", y, y + "*a(" + y + ")", y + "*a(" + y + ")*a2(" + y + ")"};
    std::string out;
    for (std::size_t i = 0; i < 4; ++i) {
        if (c[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + c[i].to_string() + ")";
        if (i > 0) out += "*" + mono[i];
    }
    return (out.empty() ? "0" : out) + " = 0";
}

RatX LeftElimination::b(const RatX& t) const { return b0 + b1 * t; }

RatX LeftElimination::c(const RatX& t) const {
    return c0 + c1 * t + c2 * t * alpha(t, master.q(), 1);
}

SkewPoly LeftElimination::left_factor(const RatX& t) const {
    const Field& f = t.field();
    return SkewPoly(master.q(), {RatX::constant(f.one()), RatX::x(f) * t});
}

SkewPoly LeftElimination::cofactor(const RatX& t) const { return SkewPoly(master.q(), {a, b(t), c(t)}); }

RatX RightElimination::b(const RatX& t) const { return master.h.coeff(1) - a * t; }

RatX RightElimination::c(const RatX& t) const { return master.h.coeff(2) - b(t) * alpha(t, master.q(), 1); }

SkewPoly RightElimination::right_factor(const RatX& t) const {
    return SkewPoly(master.q(), {RatX::constant(t.field().one()), t});
}

SkewPoly RightElimination::cofactor(const RatX& t) const { return SkewPoly(master.q(), {a, b(t), c(t)}); }

LeftElimination eliminate_left_B1(const SkewPoly& h) {
    require_cubic(h);
    const Field& f = h.field();
    const Scalar& q = h.q();
    const RatX X = RatX::x(f);
    const RatX h0 = h.coeff(0), h1 = h.coeff(1), h2 = h.coeff(2), h3 = h.coeff(3);

    const RatX zero(f);
    LeftElimination e{h0,
                      h1,
                      -(X * alpha(h0, q, 1)),
                      h2,
                      -(X * alpha(h1, q, 1)),
                      cst(f, q) * xpow(f, 2) * alpha(h0, q, 2),
                      MasterEquation{Shape::left_B1, h, {zero, zero, zero, zero}, zero}};

    // θ³: h₃ = X·t·α(c)
    std::array<RatX, 4> raw = {h3, -(X * alpha(h2, q, 1)), cst(f, q) * xpow(f, 2) * alpha(h1, q, 2),
                               -(cst(f, q.pow(3)) * xpow(f, 3) * alpha(h0, q, 3))};

    // Remove the common power of X, then fix the sign and scale by the first nonzero X⁰ value
    // among the quadratic, linear, cubic and constant coefficients.
    int v = -1;
    for (const auto& r : raw)
        if (!r.is_zero()) v = v < 0 ? r.x_valuation() : std::min(v, r.x_valuation());
    Scalar kappa = f.one();
    for (std::size_t i : {2u, 1u, 3u, 0u}) {
        if (raw[i].is_zero() || raw[i].x_valuation() != v) continue;
        kappa = normalized_value(raw[i], v);
        break;
    }
    RatX scale = cst(f, -kappa) * xpow(f, static_cast<std::size_t>(v));
    RatX inv = scale.inverse();
    for (std::size_t i = 0; i < 4; ++i) e.master.c[i] = raw[i] * inv;
    e.master.scale = scale;
    return e;
}

RightElimination eliminate_right_deg1(const SkewPoly& h) {
    require_cubic(h);
    const Field& f = h.field();
    // residual h₃ − c·α²(t), multiplied through by u·α(u)·α²(u) with u = t⁻¹
    RightElimination e{h.coeff(0),
                       MasterEquation{Shape::right_deg1,
                                      h,
                                      {-h.coeff(0), h.coeff(1), -h.coeff(2), h.coeff(3)},
                                      RatX::constant(f.one())}};
    return e;
}

RatX residual(const MasterEquation& m, const RatX& t) {
    if (m.shape == Shape::left_B1) return m.evaluate(t);
    if (t.is_zero()) throw std::domain_error("right_deg1 residual needs t != 0");
    return m.evaluate(t.inverse());
}

Poly cleared_identity(const MasterEquation& m, const Scalar& lambda, const Poly& f, const Poly& g) {
    const Scalar& q = m.q();
    Poly D = Poly::constant(q.field().one());
    for (const auto& c : m.c) D = divmod(D * c.den(), gcd(D, c.den())).quot;
    const Poly f1 = alpha(f, q, 1), f2 = alpha(f, q, 2), g1 = alpha(g, q, 1), g2 = alpha(g, q, 2);
    const std::array<Poly, 4> F = {g * g1 * g2, f * g1 * g2, f * f1 * g2, f * f1 * f2};
    Poly out(q.field());
    Scalar lp = q.field().one();
    for (std::size_t i = 0; i < 4; ++i) {
        Poly Dc = divmod(D * m.c[i].num(), m.c[i].den()).quot;
        out = out + lp * (Dc * F[i]);
        lp *= lambda;
    }
    return out;
}

Poly constant_term_polynomial(const MasterEquation& m) {
    int v = -1;
    for (const auto& c : m.c)
        if (!c.is_zero()) v = v < 0 ? c.x_valuation() : std::min(v, c.x_valuation());
    const Field& f = m.q().field();
    std::vector<Scalar> out(4, f.zero());
    if (v < 0) return Poly(f);
    for (std::size_t i = 0; i < 4; ++i)
        if (!m.c[i].is_zero() && m.c[i].x_valuation() == v) out[i] = normalized_value(m.c[i], v);
    return Poly(f, std::move(out));
}

Poly leading_branch_polynomial(const MasterEquation& m) {
    // With n = deg f, each Fᵢ has degree 3n + offᵢ and leading coefficient q^{3n + expᵢ}.
    const bool left = m.shape == Shape::left_B1;
    const std::array<int, 4> off = left ? std::array<int, 4>{3, 2, 1, 0} : std::array<int, 4>{0, 0, 0, 0};
    const std::array<int, 4> ex = left ? std::array<int, 4>{3, 3, 2, 0} : std::array<int, 4>{0, 0, 0, 0};
    const Field& f = m.q().field();
    int top = 0;
    bool any = false;
    std::array<int, 4> deg{};
    for (std::size_t i = 0; i < 4; ++i) {
        if (m.c[i].is_zero()) continue;
        deg[i] = m.c[i].num().degree() - m.c[i].den().degree() + off[i];
        top = any ? std::max(top, deg[i]) : deg[i];
        any = true;
    }
    std::vector<Scalar> out(4, f.zero());
    if (!any) return Poly(f);
    for (std::size_t i = 0; i < 4; ++i) {
        if (m.c[i].is_zero() || deg[i] != top) continue;
        out[i] = m.c[i].num().lead() / m.c[i].den().lead() * m.q().pow(ex[i]);
    }
    return Poly(f, std::move(out));
}

}  // namespace ore
