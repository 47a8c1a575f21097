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

#include "ore/ratx.hpp"

#include <stdexcept>

namespace ore {

RatX::RatX(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (&num_.field() != &den_.field()) throw std::invalid_argument("numerator and denominator over different fields");
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    canonicalize();
}

RatX::RatX(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.field().one())) {}

namespace {

// Over ℚ the gcd is almost always trivial. A degree-preserving image modulo a large prime
// bounds the degree of the true gcd from above, so a constant image gcd settles coprimality
// without the rational Euclid run.
bool coprime_by_modular_image(const Poly& a, const Poly& b) {
    if (a.field().kind() != FieldKind::rationals) return false;
    static const Field& big = Field::finite(2147483647u);
    try {
        auto image = [&](const Poly& p) { return p.map(big, [&](const Scalar& c) { return reduce(c, big); }); };
        Poly ra = image(a), rb = image(b);
        if (ra.degree() != a.degree() || rb.degree() != b.degree()) return false;
        return gcd(ra, rb).degree() == 0;
    } catch (const std::domain_error&) {
        return false;
    }
}

// gcd behind the cheap coprimality screen.
Poly fast_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.degree() == 0 || b.degree() == 0 || coprime_by_modular_image(a, b))
        return Poly::constant(a.field().one());
    return gcd(a, b);
}

}  // namespace

RatX::RatX(Poly num, Poly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.is_zero()) {
        den_ = Poly::constant(num_.field().one());
    } else if (!den_.lead().is_one()) {
        Scalar inv = den_.lead().inverse();
        num_ = inv * num_;
        den_ = inv * den_;
    }
}

void RatX::canonicalize() {
    const Field& f = num_.field();
    if (num_.is_zero()) {
        den_ = Poly::constant(f.one());
        return;
    }
    if (den_.degree() > 0 && num_.degree() > 0) {
        Poly g = fast_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = divmod(num_, g).quot;
            den_ = divmod(den_, g).quot;
        }
    }
    if (!den_.lead().is_one()) {
        Scalar inv = den_.lead().inverse();
        num_ = inv * num_;
        den_ = inv * den_;
    }
}

bool RatX::is_one() const { return num_.degree() == 0 && den_.degree() == 0 && num_.lead().is_one(); }

Scalar RatX::as_scalar() const {
    if (!is_constant()) throw std::domain_error("rational function " + to_string() + " is not constant");
    return num_.coeff(0);
}

bool RatX::in_local_ring() const { return !den_.coeff(0).is_zero(); }

bool RatX::is_local_unit() const { return in_local_ring() && !num_.coeff(0).is_zero(); }

int RatX::x_valuation() const {
    if (num_.is_zero()) throw std::domain_error("valuation of zero");
    return num_.valuation() - den_.valuation();
}

Scalar RatX::value_at_zero() const {
    if (!in_local_ring()) throw std::domain_error(to_string() + " has a pole at X = 0");
    return num_.coeff(0) / den_.coeff(0);
}

RatX RatX::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero rational function");
    return RatX(den_, num_);
}

RatX RatX::operator-() const {
    RatX out(*this);
    out.num_ = -num_;
    return out;
}

RatX operator+(const RatX& a, const RatX& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatX(a.num_ + b.num_, a.den_);
    // Henrici: with g = gcd(den a, den b) only g can share factors with the new numerator.
    Poly g = fast_gcd(a.den_, b.den_);
    if (g.degree() == 0) return RatX(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, RatX::reduced);
    Poly ad = divmod(a.den_, g).quot, bd = divmod(b.den_, g).quot;
    Poly num = a.num_ * bd + b.num_ * ad;
    Poly den = a.den_ * bd;
    if (num.is_zero()) return RatX(a.field());
    Poly g2 = fast_gcd(num, g);
    if (g2.degree() > 0) {
        num = divmod(num, g2).quot;
        den = divmod(den, g2).quot;
    }
    return RatX(std::move(num), std::move(den), RatX::reduced);
}

RatX operator-(const RatX& a, const RatX& b) { return a + (-b); }

RatX operator*(const RatX& a, const RatX& b) {
    if (a.is_zero() || b.is_zero()) return RatX(a.field());
    if (a.den_.degree() == 0 && b.den_.degree() == 0) return RatX(a.num_ * b.num_);
    // cross-cancel; the product of the reduced pieces is already in lowest terms
    Poly g1 = fast_gcd(a.num_, b.den_), g2 = fast_gcd(b.num_, a.den_);
    Poly an = a.num_, bn = b.num_, ad = a.den_, bd = b.den_;
    if (g1.degree() > 0) an = divmod(an, g1).quot, bd = divmod(bd, g1).quot;
    if (g2.degree() > 0) bn = divmod(bn, g2).quot, ad = divmod(ad, g2).quot;
    return RatX(an * bn, ad * bd, RatX::reduced);
}

RatX operator/(const RatX& a, const RatX& b) { return a * b.inverse(); }

RatX operator*(const Scalar& s, const RatX& a) {
    if (s.is_zero()) return RatX(a.field());
    RatX out(a);
    out.num_ = s * a.num_;
    return out;
}

std::strong_ordering operator<=>(const RatX& a, const RatX& b) {
    if (auto c = a.num_ <=> b.num_; c != 0) return c;
    return a.den_ <=> b.den_;
}

std::string RatX::to_string() const {
    if (den_.degree() == 0) return num_.to_string("X");
    return "(" + num_.to_string("X") + ")/(" + den_.to_string("X") + ")";
}

PolyX alpha(const PolyX& a, const Scalar& q, int n) {
    if (n == 0) return a;
    return a.scale_variable(q.pow(n));
}

RatX alpha(const RatX& a, const Scalar& q, int n) {
    if (n == 0 || a.is_constant()) return a;
    Scalar c = q.pow(n);
    // both parts scale to the same degree-wise factors; the result stays coprime
    return RatX(a.num().scale_variable(c), a.den().scale_variable(c));
}

RatX reduce(const RatX& a, const Field& target) {
    auto map = [&](const Scalar& c) { return reduce(c, target); };
    Poly num = a.num().map(target, map);
    Poly den = a.den().map(target, map);
    if (den.is_zero()) throw std::domain_error("denominator of " + a.to_string() + " vanishes in " + target.name());
    return RatX(std::move(num), std::move(den));
}

}  // namespace ore
