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

#include "ore/skew_poly.hpp"

#include <stdexcept>

namespace ore {

SkewPoly::SkewPoly(const Scalar& q, std::vector<RatX> coeffs) : q_(q), c_(std::move(coeffs)) {
    for (const auto& c : c_)
        if (&c.field() != &q_.field()) throw std::invalid_argument("skew coefficient from " + c.field().name());
    trim();
}

SkewPoly SkewPoly::theta(const Scalar& q) {
    const Field& f = q.field();
    return SkewPoly(q, {RatX(f), RatX::constant(f.one())});
}

void SkewPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

RatX SkewPoly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : RatX(field()); }

const RatX& SkewPoly::lead() const {
    if (c_.empty()) throw std::domain_error("zero skew polynomial has no leading coefficient");
    return c_.back();
}

SkewPoly SkewPoly::monic() const {
    if (c_.empty()) return *this;
    return lead().inverse() * *this;
}

bool SkewPoly::in_S() const {
    for (const auto& c : c_)
        if (!c.in_local_ring()) return false;
    return true;
}

SkewPoly SkewPoly::operator-() const {
    std::vector<RatX> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(-c);
    return SkewPoly(q_, std::move(out));
}

namespace {

void require_same(const SkewPoly& a, const SkewPoly& b) {
    if (!(a.q() == b.q())) throw std::invalid_argument("skew polynomials over different rings");
}

}  // namespace

SkewPoly operator+(const SkewPoly& a, const SkewPoly& b) {
    require_same(a, b);
    std::vector<RatX> out(std::max(a.c_.size(), b.c_.size()), RatX(a.field()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
    return SkewPoly(a.q_, std::move(out));
}

SkewPoly operator-(const SkewPoly& a, const SkewPoly& b) { return a + (-b); }

SkewPoly operator*(const SkewPoly& a, const SkewPoly& b) {
    require_same(a, b);
    if (a.is_zero() || b.is_zero()) return SkewPoly(a.q_);
    std::vector<RatX> out(a.c_.size() + b.c_.size() - 1, RatX(a.field()));
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (b.c_[j].is_zero()) continue;
        RatX shifted = b.c_[j];  // α^i(b_j), built incrementally
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (i > 0) shifted = alpha(shifted, a.q_);
            if (!a.c_[i].is_zero()) out[i + j] += a.c_[i] * shifted;
        }
    }
    return SkewPoly(a.q_, std::move(out));
}

SkewPoly operator*(const RatX& r, const SkewPoly& a) {
    if (&r.field() != &a.field()) throw std::invalid_argument("coefficient from " + r.field().name());
    std::vector<RatX> out;
    out.reserve(a.c_.size());
    for (const auto& c : a.c_) out.push_back(r * c);
    return SkewPoly(a.q_, std::move(out));
}

SkewPoly skew_mul(const SkewPoly& a, const SkewPoly& b) { return a * b; }

std::string SkewPoly::to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + c_[i].to_string() + ")";
        if (i > 0) out += "*theta^" + std::to_string(i);
    }
    return out;
}

std::string SkewPoly::to_right_form_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        if (i > 0) out += "theta^" + std::to_string(i) + "*";
        out += "(" + alpha(c_[i], q_, -static_cast<int>(i)).to_string() + ")";
    }
    return out;
}

// ---------------------------------------------------------------------------------------------

SkewDivMod right_divide(const SkewPoly& a, const SkewPoly& b) {
    require_same(a, b);
    if (b.is_zero()) throw std::domain_error("right division by zero");
    const Scalar& q = a.q();
    SkewPoly quot(q);
    SkewPoly rem = a;
    const int db = b.degree();
    const RatX& lb = b.lead();
    while (!rem.is_zero() && rem.degree() >= db) {
        const int shift = rem.degree() - db;
        // c θ^shift · b has leading coefficient c·α^shift(lb)
        RatX c = rem.lead() / alpha(lb, q, shift);
        std::vector<RatX> mono(static_cast<std::size_t>(shift) + 1, RatX(a.field()));
        mono.back() = c;
        SkewPoly term(q, std::move(mono));
        quot += term;
        rem -= term * b;
    }
    return {std::move(quot), std::move(rem)};
}

SkewDivMod left_divide(const SkewPoly& a, const SkewPoly& b) {
    require_same(a, b);
    if (b.is_zero()) throw std::domain_error("left division by zero");
    const Scalar& q = a.q();
    SkewPoly quot(q);
    SkewPoly rem = a;
    const int db = b.degree();
    const RatX& lb = b.lead();
    while (!rem.is_zero() && rem.degree() >= db) {
        const int shift = rem.degree() - db;
        // b · c θ^shift has leading coefficient lb·α^db(c)
        RatX c = alpha(rem.lead() / lb, q, -db);
        std::vector<RatX> mono(static_cast<std::size_t>(shift) + 1, RatX(a.field()));
        mono.back() = c;
        SkewPoly term(q, std::move(mono));
        quot += term;
        rem -= b * term;
    }
    return {std::move(quot), std::move(rem)};
}

SkewPoly gcrd(const SkewPoly& a, const SkewPoly& b) {
    require_same(a, b);
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcrd(0, 0) is undefined");
    SkewPoly x = a.monic(), y = b.monic();
    while (!y.is_zero()) {
        SkewPoly r = right_divide(x, y).rem.monic();
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

SkewPoly lclm(const SkewPoly& a, const SkewPoly& b) {
    require_same(a, b);
    if (a.is_zero() || b.is_zero()) throw std::domain_error("lclm needs nonzero operands");
    // Extended Euclid keeping r_i = s_i·a + t_i·b; the first vanishing remainder gives s·a = −t·b.
    // Remainders are made monic (and s scaled alongside) to curb coefficient growth.
    const Scalar& q = a.q();
    SkewPoly r0 = a, r1 = b;
    SkewPoly s0 = SkewPoly::one(q), s1(q);
    while (!r1.is_zero()) {
        auto [qt, rm] = right_divide(r0, r1);
        SkewPoly s2 = s0 - qt * s1;
        if (!rm.is_zero()) {
            RatX u = rm.lead().inverse();
            rm = u * rm;
            s2 = u * s2;
        }
        r0 = std::move(r1);
        r1 = std::move(rm);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    return (s1 * a).monic();
}

TIrreducibility irreducibility_in_T(const SkewPoly& a) {
    if (a.is_zero()) throw std::domain_error("zero is neither unit nor irreducible");
    if (a.degree() == 0) return TIrreducibility::unit;
    if (a.degree() == 1) return TIrreducibility::irreducible;
    return TIrreducibility::unknown;
}

SkewPoly reduce(const SkewPoly& a, const Field& target) {
    Scalar q = reduce(a.q(), target);
    std::vector<RatX> out;
    out.reserve(a.coefficients().size());
    for (const auto& c : a.coefficients()) out.push_back(reduce(c, target));
    return SkewPoly(q, std::move(out));
}

}  // namespace ore
