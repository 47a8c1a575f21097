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

#include "ore/poly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "qfrac.hpp"

namespace ore {

Poly::Poly(const Field& f, std::vector<Scalar> coeffs) : field_(&f), c_(std::move(coeffs)) {
    for (const auto& c : c_)
        if (&c.field() != field_) throw std::invalid_argument("polynomial coefficient from " + c.field().name());
    trim();
}

Poly Poly::constant(const Scalar& c) { return Poly(c.field(), {c}); }

Poly Poly::monomial(const Scalar& c, std::size_t degree) {
    std::vector<Scalar> v(degree + 1, c.field().zero());
    v[degree] = c;
    return Poly(c.field(), std::move(v));
}

Poly Poly::variable(const Field& f) { return monomial(f.one(), 1); }

Poly Poly::from_roots(const Field& f, std::span<const Scalar> roots) {
    Poly out = constant(f.one());
    for (const auto& r : roots) out *= Poly(f, {-r, f.one()});
    return out;
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar Poly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_->zero(); }

const Scalar& Poly::lead() const {
    if (c_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
    return c_.back();
}

int Poly::valuation() const {
    if (c_.empty()) throw std::domain_error("valuation of the zero polynomial");
    int i = 0;
    while (c_[static_cast<std::size_t>(i)].is_zero()) ++i;
    return i;
}

bool Poly::is_monic() const { return !c_.empty() && c_.back().is_one(); }

Scalar Poly::eval(const Scalar& x) const {
    Scalar acc = field_->zero();
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

Poly Poly::scale_variable(const Scalar& c) const {
    std::vector<Scalar> out;
    out.reserve(c_.size());
    Scalar pw = field_->one();
    for (const auto& a : c_) {
        out.push_back(a * pw);
        pw *= c;
    }
    return Poly(*field_, std::move(out));
}

Poly Poly::monic() const {
    if (c_.empty()) return *this;
    return lead().inverse() * *this;
}

Poly Poly::shift_down(std::size_t k) const {
    if (k == 0 || c_.empty()) return *this;
    for (std::size_t i = 0; i < k && i < c_.size(); ++i)
        if (!c_[i].is_zero()) throw std::domain_error("shift_down would drop a nonzero coefficient");
    if (k >= c_.size()) return Poly(*field_);
    return Poly(*field_, std::vector<Scalar>(c_.begin() + static_cast<long>(k), c_.end()));
}

Poly Poly::shift_up(std::size_t k) const {
    if (k == 0 || c_.empty()) return *this;
    std::vector<Scalar> out(k, field_->zero());
    out.insert(out.end(), c_.begin(), c_.end());
    return Poly(*field_, std::move(out));
}

Poly Poly::truncate(std::size_t n) const {
    if (n >= c_.size()) return *this;
    return Poly(*field_, std::vector<Scalar>(c_.begin(), c_.begin() + static_cast<long>(n)));
}

Poly Poly::operator-() const {
    std::vector<Scalar> out;
    out.reserve(c_.size());
    for (const auto& a : c_) out.push_back(-a);
    return Poly(*field_, std::move(out));
}

namespace {

void require_same(const Poly& a, const Poly& b) {
    if (&a.field() != &b.field())
        throw std::invalid_argument("mixed-field polynomials: " + a.field().name() + " and " + b.field().name());
}

}  // namespace

Poly operator+(const Poly& a, const Poly& b) {
    require_same(a, b);
    const auto& x = a.c_;
    const auto& y = b.c_;
    std::vector<Scalar> out(std::max(x.size(), y.size()), a.field().zero());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i];
    for (std::size_t i = 0; i < y.size(); ++i) out[i] = out[i] + y[i];
    return Poly(a.field(), std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    require_same(a, b);
    if (a.is_zero() || b.is_zero()) return Poly(a.field());
    std::vector<Scalar> out(a.c_.size() + b.c_.size() - 1, a.field().zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(a.field(), std::move(out));
}

Poly operator*(const Scalar& s, const Poly& a) {
    if (&s.field() != &a.field()) throw std::invalid_argument("scalar from " + s.field().name());
    if (s.is_zero()) return Poly(a.field());
    std::vector<Scalar> out;
    out.reserve(a.c_.size());
    for (const auto& c : a.c_) out.push_back(s * c);
    return Poly(a.field(), std::move(out));
}

bool operator==(const Poly& a, const Poly& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
    if (auto c = a.c_.size() <=> b.c_.size(); c != 0) return c;
    for (std::size_t i = a.c_.size(); i-- > 0;)
        if (auto c = a.c_[i] <=> b.c_[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

namespace {

/// Sign used for printing: negative rationals, and q-fractions whose numerator starts with one.
bool is_negative(const Scalar& s) {
    switch (s.field().kind()) {
        case FieldKind::rationals:
            return sgn(s.rational()) < 0;
        case FieldKind::rational_functions: {
            // q-polynomials print in ascending order, so the lowest term carries the visible sign
            const Poly& num = s.qfrac().num;
            if (num.is_zero() || num.field().kind() != FieldKind::rationals) return false;
            return sgn(num.coeff(static_cast<std::size_t>(num.valuation())).rational()) < 0;
        }
        case FieldKind::finite:
            return false;
    }
    return false;
}

}  // namespace

std::string Poly::to_string(std::string_view var) const {
    if (c_.empty()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        Scalar c = c_[i];
        bool neg = is_negative(c);
        if (neg) c = -c;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        std::string mono;
        if (i >= 1) {
            mono = std::string(var);
            if (i > 1) mono += "^" + std::to_string(i);
        }
        if (i == 0) {
            out += c.is_atomic_expr() ? c.expr_string() : "(" + c.expr_string() + ")";
        } else if (c.is_one()) {
            out += mono;
        } else {
            out += (c.is_atomic_expr() ? c.expr_string() : "(" + c.expr_string() + ")") + "*" + mono;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------------------------

PolyDivMod divmod(const Poly& a, const Poly& b) {
    require_same(a, b);
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    const Field& f = a.field();
    if (a.degree() < b.degree()) return {Poly(f), a};
    std::vector<Scalar> rem(a.coefficients().begin(), a.coefficients().end());
    std::size_t db = static_cast<std::size_t>(b.degree());
    std::vector<Scalar> quot(rem.size() - db, f.zero());
    Scalar inv = b.lead().inverse();
    for (std::size_t k = rem.size(); k-- > db;) {
        if (rem[k].is_zero()) continue;
        Scalar c = rem[k] * inv;
        quot[k - db] = c;
        for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= c * b.coefficients()[j];
    }
    rem.resize(db);
    return {Poly(f, std::move(quot)), Poly(f, std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        // monic remainders keep coefficient growth down over ℚ and k(q)
        Poly r = divmod(x, y).rem;
        x = std::move(y);
        y = r.is_zero() ? std::move(r) : r.monic();
    }
    return x.monic();
}

Poly pow(const Poly& a, unsigned e) {
    Poly acc = Poly::constant(a.field().one());
    Poly base = a;
    while (e) {
        if (e & 1) acc *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return acc;
}

Poly powmod(const Poly& a, std::uint64_t e, const Poly& m) {
    Poly acc = divmod(Poly::constant(a.field().one()), m).rem;
    Poly base = divmod(a, m).rem;
    while (e) {
        if (e & 1) acc = divmod(acc * base, m).rem;
        e >>= 1;
        if (e) base = divmod(base * base, m).rem;
    }
    return acc;
}

bool divides(const Poly& d, const Poly& a) { return divmod(a, d).rem.is_zero(); }

bool is_irreducible(const Poly& f) {
    if (f.degree() <= 0) return false;
    if (f.degree() == 1) return true;
    const Field& fld = f.field();
    if (fld.is_finite()) {
        // Ben-Or: no factor of degree i divides f for i <= deg/2.
        Poly x = Poly::variable(fld);
        Poly xp = x;
        for (int i = 1; 2 * i <= f.degree(); ++i) {
            xp = powmod(xp, fld.size(), f);
            if (gcd(xp - x, f).degree() > 0) return false;
        }
        return true;
    }
    if (f.degree() <= 3) return roots_in_field(f).roots.empty();
    throw std::invalid_argument("irreducibility over " + fld.name() + " decided only up to degree 3");
}

// ---------------------------------------------------------------------------------------------

namespace {

std::vector<mpz_class> divisors(mpz_class n) {
    if (n < 0) n = -n;
    std::vector<mpz_class> small, large;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

// Candidate rational roots of a polynomial with rational coefficients and nonzero constant term.
std::vector<Scalar> rational_root_candidates(const Poly& f) {
    const Field& q = f.field();
    mpz_class lcm_den = 1;
    for (const auto& c : f.coefficients()) lcm_den = lcm(lcm_den, mpz_class(c.rational().get_den()));
    mpz_class a0 = mpz_class(f.coefficients().front().rational() * lcm_den);
    mpz_class an = mpz_class(f.lead().rational() * lcm_den);
    std::vector<Scalar> out;
    for (const auto& num : divisors(a0))
        for (const auto& den : divisors(an)) {
            mpq_class r(num, den);
            r.canonicalize();
            out.push_back(q.from_rational(r));
            out.push_back(q.from_rational(-r));
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

RootSplit roots_in_field(const Poly& f) {
    if (f.is_zero()) throw std::domain_error("roots of the zero polynomial");
    const Field& fld = f.field();
    if (fld.kind() == FieldKind::rational_functions)
        throw std::invalid_argument("root finding over " + fld.name() + " is not supported");
    RootSplit out{{}, f};
    // roots at zero first
    while (out.remainder.degree() > 0 && out.remainder.coefficients().front().is_zero()) {
        out.roots.push_back(fld.zero());
        out.remainder = out.remainder.shift_down(1);
    }
    if (out.remainder.degree() > 0) {
        std::vector<Scalar> candidates =
            fld.is_finite() ? fld.elements() : rational_root_candidates(out.remainder);
        for (const auto& r : candidates) {
            if (r.is_zero()) continue;
            Poly lin(fld, {-r, fld.one()});
            for (;;) {
                if (out.remainder.degree() < 1) break;
                auto [qt, rm] = divmod(out.remainder, lin);
                if (!rm.is_zero()) break;
                out.roots.push_back(r);
                out.remainder = std::move(qt);
            }
        }
    }
    std::sort(out.roots.begin(), out.roots.end());
    return out;
}

}  // namespace ore
