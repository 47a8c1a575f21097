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

#include "ore/scalar.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "ore/poly.hpp"
#include "qfrac.hpp"

namespace ore {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// ---------------------------------------------------------------------------------------------
// Field registry

struct FieldRegistry {
    std::mutex mutex;
    std::unique_ptr<Field> rationals;
    std::map<std::pair<std::uint32_t, unsigned>, std::unique_ptr<Field>> finite;
    std::map<const Field*, std::unique_ptr<Field>> rational_functions;

    static FieldRegistry& instance() {
        static FieldRegistry registry;
        return registry;
    }

    static std::unique_ptr<Field> make() { return std::unique_ptr<Field>(new Field()); }
};

const Field& Field::rationals() {
    auto& reg = FieldRegistry::instance();
    std::lock_guard lock(reg.mutex);
    if (!reg.rationals) {
        reg.rationals = FieldRegistry::make();
        reg.rationals->kind_ = FieldKind::rationals;
    }
    return *reg.rationals;
}

const Field& Field::finite(std::uint32_t p, unsigned m) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
    if (m == 0) throw std::invalid_argument("extension degree must be positive");
    if (m == 1 && p >= (1u << 31)) throw std::invalid_argument("prime too large for the residue representation");
    std::uint64_t size = 1;
    for (unsigned i = 0; i < m; ++i) {
        size *= p;
        if (m > 1 && size > (1u << 20)) throw std::invalid_argument("extension field larger than 2^20 elements");
    }
    auto& reg = FieldRegistry::instance();
    std::lock_guard lock(reg.mutex);
    auto& slot = reg.finite[{p, m}];
    if (!slot) {
        auto f = FieldRegistry::make();
        f->kind_ = FieldKind::finite;
        f->p_ = p;
        f->m_ = m;
        f->size_ = size;
        if (m > 1) f->build_extension_tables();
        slot = std::move(f);
    }
    return *slot;
}

const Field& Field::rational_functions(const Field& base) {
    if (base.kind() == FieldKind::rational_functions)
        throw std::invalid_argument("nested rational function fields are not supported");
    auto& reg = FieldRegistry::instance();
    std::lock_guard lock(reg.mutex);
    auto& slot = reg.rational_functions[&base];
    if (!slot) {
        auto f = FieldRegistry::make();
        f->kind_ = FieldKind::rational_functions;
        f->p_ = base.characteristic();
        f->base_ = &base;
        slot = std::move(f);
    }
    return *slot;
}

// Searches monic degree-m moduli in lexicographic order for the first one whose root
// generates the multiplicative group.
void Field::build_extension_tables() {
    const std::uint32_t order = static_cast<std::uint32_t>(size_ - 1);
    std::vector<std::uint32_t> low(m_, 0);
    std::vector<std::uint32_t> pw(m_);
    auto encode = [&](const std::vector<std::uint32_t>& d) {
        std::uint32_t code = 0;
        for (unsigned i = m_; i-- > 0;) code = code * p_ + d[i];
        return code;
    };
    for (;;) {
        // advance the candidate low coefficients (odometer)
        unsigned i = 0;
        while (i < m_) {
            if (++low[i] < p_) break;
            low[i++] = 0;
        }
        if (i == m_) throw std::logic_error("no primitive modulus found");
        if (low[0] == 0) continue;

        exp_.assign(order, 0);
        log_.assign(size_, 0);
        std::vector<char> seen(size_, 0);
        std::vector<std::uint32_t> cur(m_, 0);
        cur[0] = 1;
        bool primitive = true;
        for (std::uint32_t k = 0; k < order; ++k) {
            std::uint32_t code = encode(cur);
            if (seen[code]) {
                primitive = false;
                break;
            }
            seen[code] = 1;
            exp_[k] = code;
            log_[code] = k;
            // cur *= w, with w^m = -sum low[i] w^i
            std::uint32_t top = cur[m_ - 1];
            for (unsigned j = m_ - 1; j > 0; --j) cur[j] = cur[j - 1];
            cur[0] = 0;
            if (top != 0) {
                for (unsigned j = 0; j < m_; ++j) {
                    std::uint64_t sub = static_cast<std::uint64_t>(top) * low[j] % p_;
                    cur[j] = static_cast<std::uint32_t>((cur[j] + p_ - sub) % p_);
                }
            }
        }
        if (primitive && cur[0] == 1 && std::all_of(cur.begin() + 1, cur.end(), [](auto d) { return d == 0; })) {
            modulus_ = low;
            modulus_.push_back(1);
            return;
        }
    }
}

std::string Field::name() const {
    switch (kind_) {
        case FieldKind::rationals:
            return "QQ";
        case FieldKind::finite:
            return m_ == 1 ? "GF(" + std::to_string(p_) + ")"
                           : "GF(" + std::to_string(p_) + "^" + std::to_string(m_) + ")";
        case FieldKind::rational_functions:
            return base_->name() + "(q)";
    }
    return "?";
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }
Scalar Field::from_int(long v) const { return from_rational(mpq_class(v)); }

Scalar Field::from_rational(const mpq_class& v) const {
    switch (kind_) {
        case FieldKind::rationals: {
            mpq_class c(v);
            c.canonicalize();
            return Scalar(*this, std::move(c));
        }
        case FieldKind::finite: {
            mpz_class num = v.get_num() % p_;
            mpz_class den = v.get_den() % p_;
            if (num < 0) num += p_;
            if (den == 0)
                throw std::domain_error("denominator of " + v.get_str() + " vanishes modulo " + std::to_string(p_));
            std::uint32_t n = static_cast<std::uint32_t>(num.get_ui());
            std::uint32_t d = static_cast<std::uint32_t>(den.get_ui());
            return Scalar(*this, mul_code(n, inv_code(d)));
        }
        case FieldKind::rational_functions: {
            Scalar c = base_->from_rational(v);
            return make_qfrac(*this, Poly::constant(c), Poly::constant(base_->one()));
        }
    }
    throw std::logic_error("unreachable");
}

Scalar Field::element(std::uint32_t code) const {
    if (!is_finite() || code >= size_) throw std::out_of_range("field element code out of range");
    return Scalar(*this, code);
}

std::vector<Scalar> Field::elements() const {
    if (!is_finite()) throw std::invalid_argument(name() + " is infinite");
    std::vector<Scalar> out;
    out.reserve(size_);
    for (std::uint64_t c = 0; c < size_; ++c) out.emplace_back(*this, static_cast<std::uint32_t>(c));
    return out;
}

Scalar Field::generator() const {
    if (kind_ == FieldKind::finite && m_ > 1) return Scalar(*this, p_);  // digits (0, 1, 0, ...)
    if (kind_ == FieldKind::rational_functions)
        return make_qfrac(*this, Poly::variable(*base_), Poly::constant(base_->one()));
    throw std::invalid_argument(name() + " has no distinguished generator");
}

std::uint32_t Field::add_code(std::uint32_t a, std::uint32_t b) const noexcept {
    if (m_ == 1) {
        std::uint64_t s = static_cast<std::uint64_t>(a) + b;
        return static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
    }
    std::uint32_t out = 0, scale = 1;
    for (unsigned i = 0; i < m_; ++i) {
        std::uint32_t d = (a % p_ + b % p_) % p_;
        out += d * scale;
        scale *= p_;
        a /= p_;
        b /= p_;
    }
    return out;
}

std::uint32_t Field::neg_code(std::uint32_t a) const noexcept {
    if (m_ == 1) return a == 0 ? 0 : p_ - a;
    std::uint32_t out = 0, scale = 1;
    for (unsigned i = 0; i < m_; ++i) {
        std::uint32_t d = a % p_;
        out += (d == 0 ? 0 : p_ - d) * scale;
        scale *= p_;
        a /= p_;
    }
    return out;
}

std::uint32_t Field::mul_code(std::uint32_t a, std::uint32_t b) const noexcept {
    if (m_ == 1) return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
    if (a == 0 || b == 0) return 0;
    std::uint64_t k = static_cast<std::uint64_t>(log_[a]) + log_[b];
    return exp_[k % (size_ - 1)];
}

std::uint32_t Field::inv_code(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("division by zero in " + name());
    if (m_ > 1) return exp_[(size_ - 1 - log_[a]) % (size_ - 1)];
    // extended Euclid on (a, p)
    std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
    while (new_r != 0) {
        std::int64_t quotient = r / new_r;
        std::tie(t, new_t) = std::pair(new_t, t - quotient * new_t);
        std::tie(r, new_r) = std::pair(new_r, r - quotient * new_r);
    }
    if (t < 0) t += p_;
    return static_cast<std::uint32_t>(t);
}

std::vector<std::uint32_t> Field::digits(std::uint32_t code) const {
    std::vector<std::uint32_t> d(m_);
    for (unsigned i = 0; i < m_; ++i) {
        d[i] = code % p_;
        code /= p_;
    }
    return d;
}

// ---------------------------------------------------------------------------------------------
// Rational functions in q

Scalar make_qfrac(const Field& f, Poly num, Poly den) {
    if (den.is_zero()) throw std::domain_error("zero denominator in " + f.name());
    if (num.is_zero()) {
        den = Poly::constant(f.base()->one());
    } else {
        Poly g = gcd(num, den);
        if (g.degree() > 0) {
            num = divmod(num, g).quot;
            den = divmod(den, g).quot;
        }
        Scalar inv = den.lead().inverse();
        num = inv * num;
        den = inv * den;
    }
    return Scalar(f, std::make_shared<const QFrac>(QFrac{std::move(num), std::move(den)}));
}

namespace {

const QFrac& qf(const Scalar& s) { return s.qfrac(); }

void require_same(const Scalar& a, const Scalar& b) {
    if (!a.valid() || !b.valid()) throw std::invalid_argument("uninitialised scalar");
    if (&a.field() != &b.field())
        throw std::invalid_argument("mixed-field operands: " + a.field().name() + " and " + b.field().name());
}

}  // namespace

// ---------------------------------------------------------------------------------------------
// Scalar

const Field& Scalar::field() const {
    if (!field_) throw std::logic_error("uninitialised scalar");
    return *field_;
}

std::uint32_t Scalar::code() const { return std::get<std::uint32_t>(value_); }
const mpq_class& Scalar::rational() const { return std::get<mpq_class>(value_); }
const QFrac& Scalar::qfrac() const { return *std::get<std::shared_ptr<const QFrac>>(value_); }

bool Scalar::is_zero() const {
    switch (field().kind()) {
        case FieldKind::finite:
            return code() == 0;
        case FieldKind::rationals:
            return sgn(rational()) == 0;
        case FieldKind::rational_functions:
            return qfrac().num.is_zero();
    }
    return false;
}

bool Scalar::is_one() const {
    switch (field().kind()) {
        case FieldKind::finite:
            return code() == 1;
        case FieldKind::rationals:
            return rational() == 1;
        case FieldKind::rational_functions:
            return qfrac().den.degree() == 0 && qfrac().num.degree() == 0 && qfrac().num.lead().is_one();
    }
    return false;
}

Scalar Scalar::operator-() const {
    const Field& f = field();
    switch (f.kind()) {
        case FieldKind::finite:
            return Scalar(f, f.neg_code(code()));
        case FieldKind::rationals:
            return Scalar(f, mpq_class(-rational()));
        case FieldKind::rational_functions:
            return Scalar(f, std::make_shared<const QFrac>(QFrac{-qf(*this).num, qf(*this).den}));
    }
    throw std::logic_error("unreachable");
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    const Field& f = field();
    switch (f.kind()) {
        case FieldKind::finite:
            return Scalar(f, f.inv_code(code()));
        case FieldKind::rationals:
            return Scalar(f, mpq_class(1 / rational()));
        case FieldKind::rational_functions:
            return make_qfrac(f, qf(*this).den, qf(*this).num);
    }
    throw std::logic_error("unreachable");
}

Scalar Scalar::pow(long long e) const {
    Scalar base = e < 0 ? inverse() : *this;
    unsigned long long n = e < 0 ? -static_cast<unsigned long long>(e) : static_cast<unsigned long long>(e);
    Scalar acc = field().one();
    while (n) {
        if (n & 1) acc *= base;
        n >>= 1;
        if (n) base *= base;
    }
    return acc;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    require_same(a, b);
    const Field& f = a.field();
    switch (f.kind()) {
        case FieldKind::finite:
            return Scalar(f, f.add_code(a.code(), b.code()));
        case FieldKind::rationals:
            return Scalar(f, mpq_class(a.rational() + b.rational()));
        case FieldKind::rational_functions: {
            const QFrac& x = qf(a);
            const QFrac& y = qf(b);
            if (x.den == y.den) return make_qfrac(f, x.num + y.num, x.den);
            return make_qfrac(f, x.num * y.den + y.num * x.den, x.den * y.den);
        }
    }
    throw std::logic_error("unreachable");
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    require_same(a, b);
    const Field& f = a.field();
    switch (f.kind()) {
        case FieldKind::finite:
            return Scalar(f, f.mul_code(a.code(), b.code()));
        case FieldKind::rationals:
            return Scalar(f, mpq_class(a.rational() * b.rational()));
        case FieldKind::rational_functions:
            return make_qfrac(f, qf(a).num * qf(b).num, qf(a).den * qf(b).den);
    }
    throw std::logic_error("unreachable");
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    require_same(a, b);
    return a * b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.field_ != b.field_) return false;
    if (!a.field_) return true;
    switch (a.field_->kind()) {
        case FieldKind::finite:
            return a.code() == b.code();
        case FieldKind::rationals:
            return a.rational() == b.rational();
        case FieldKind::rational_functions:
            return qf(a).num == qf(b).num && qf(a).den == qf(b).den;
    }
    return false;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    require_same(a, b);
    switch (a.field().kind()) {
        case FieldKind::finite:
            return a.code() <=> b.code();
        case FieldKind::rationals: {
            int c = cmp(a.rational(), b.rational());
            return c < 0 ? std::strong_ordering::less
                         : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
        }
        case FieldKind::rational_functions:
            if (auto c = qf(a).num <=> qf(b).num; c != 0) return c;
            return qf(a).den <=> qf(b).den;
    }
    return std::strong_ordering::equal;
}

namespace {

std::string extension_poly_string(const Field& f, std::uint32_t code) {
    std::vector<Scalar> coeffs;
    const Field& prime = Field::finite(f.characteristic());
    for (auto d : f.digits(code)) coeffs.push_back(prime.element(d));
    return Poly(prime, std::move(coeffs)).to_string("w");
}

}  // namespace

std::string Scalar::expr_string() const {
    const Field& f = field();
    switch (f.kind()) {
        case FieldKind::finite:
            if (f.extension_degree() == 1) return std::to_string(code());
            return extension_poly_string(f, code());
        case FieldKind::rationals:
            return rational().get_str();
        case FieldKind::rational_functions: {
            const QFrac& x = qf(*this);
            if (x.den.degree() == 0) return x.num.to_string("q");
            return "(" + x.num.to_string("q") + ")/(" + x.den.to_string("q") + ")";
        }
    }
    return "?";
}

bool Scalar::is_atomic_expr() const {
    const Field& f = field();
    auto single_term = [](const Poly& p) {
        int nonzero = 0;
        for (const auto& c : p.coefficients())
            if (!c.is_zero()) ++nonzero;
        return nonzero <= 1 && (p.is_zero() || p.lead().is_one() || p.degree() == 0);
    };
    switch (f.kind()) {
        case FieldKind::finite:
            if (f.extension_degree() == 1) return true;
            {
                auto d = f.digits(code());
                int nonzero = 0;
                bool unit_coeff = true;
                for (std::size_t i = 0; i < d.size(); ++i)
                    if (d[i] != 0) {
                        ++nonzero;
                        if (i > 0 && d[i] != 1) unit_coeff = false;
                    }
                return nonzero <= 1 && unit_coeff;
            }
        case FieldKind::rationals:
            return true;
        case FieldKind::rational_functions: {
            const QFrac& x = qf(*this);
            return x.den.degree() == 0 && single_term(x.num) && (x.num.degree() <= 0 || x.num.lead().is_one());
        }
    }
    return false;
}

std::string Scalar::to_string() const {
    const Field& f = field();
    switch (f.kind()) {
        case FieldKind::finite:
            if (f.extension_degree() == 1) return std::to_string(code()) + " mod " + std::to_string(f.characteristic());
            return "(" + extension_poly_string(f, code()) + ") mod " + std::to_string(f.characteristic()) + "^" +
                   std::to_string(f.extension_degree());
        case FieldKind::rationals:
            return rational().get_str();
        case FieldKind::rational_functions: {
            const QFrac& x = qf(*this);
            if (x.den.degree() == 0) return x.num.to_string("q");
            return "(" + x.num.to_string("q") + ")/(" + x.den.to_string("q") + ")";
        }
    }
    return "?";
}

// ---------------------------------------------------------------------------------------------

Scalar reduce(const Scalar& s, const Field& target) {
    const Field& src = s.field();
    if (&src == &target) return s;
    if (src.kind() == FieldKind::rationals) return target.from_rational(s.rational());
    if (src.kind() == FieldKind::finite && src.extension_degree() == 1 && target.kind() == FieldKind::finite &&
        target.characteristic() == src.characteristic())
        return target.element(s.code());
    if (target.kind() == FieldKind::rational_functions) {
        if (src.kind() == FieldKind::rational_functions) {
            const QFrac& x = s.qfrac();
            auto map = [&](const Scalar& c) { return reduce(c, *target.base()); };
            Poly num = x.num.map(*target.base(), map);
            Poly den = x.den.map(*target.base(), map);
            if (den.is_zero()) throw std::domain_error("denominator vanishes under reduction to " + target.name());
            return make_qfrac(target, std::move(num), std::move(den));
        }
        Scalar c = reduce(s, *target.base());
        return make_qfrac(target, Poly::constant(c), Poly::constant(target.base()->one()));
    }
    throw std::invalid_argument("cannot map " + src.name() + " into " + target.name());
}

Scalar specialize(const Scalar& s, const Scalar& q_value) {
    const Field& src = s.field();
    const Field& dst = q_value.field();
    if (src.kind() != FieldKind::rational_functions) return reduce(s, dst);
    const QFrac& x = s.qfrac();
    auto map = [&](const Scalar& c) { return reduce(c, dst); };
    Scalar den = x.den.map(dst, map).eval(q_value);
    if (den.is_zero()) throw std::domain_error("q = " + q_value.to_string() + " is a pole");
    return x.num.map(dst, map).eval(q_value) / den;
}

// ---------------------------------------------------------------------------------------------

FieldConfig FieldConfig::rationals(const mpq_class& q) {
    if (sgn(q) == 0) throw std::invalid_argument("q must be nonzero");
    return FieldConfig{&Field::rationals(), Field::rationals().from_rational(q), QMode::explicit_value};
}

FieldConfig FieldConfig::prime(std::uint32_t p, long q) {
    const Field& f = Field::finite(p);
    Scalar qs = f.from_int(q);
    if (qs.is_zero()) throw std::invalid_argument("q must be nonzero in " + f.name());
    return FieldConfig{&f, qs, QMode::explicit_value};
}

FieldConfig FieldConfig::finite(std::uint32_t p, unsigned m, Scalar q) {
    const Field& f = Field::finite(p, m);
    if (!q.valid()) q = m > 1 ? f.generator() : f.from_int(2 % p == 0 ? 1 : 2);
    if (&q.field() != &f) q = reduce(q, f);
    if (q.is_zero()) throw std::invalid_argument("q must be nonzero in " + f.name());
    return FieldConfig{&f, q, QMode::explicit_value};
}

FieldConfig FieldConfig::symbolic(std::uint32_t characteristic) {
    const Field& base = characteristic == 0 ? Field::rationals() : Field::finite(characteristic);
    const Field& f = Field::rational_functions(base);
    return FieldConfig{&f, f.generator(), QMode::symbolic};
}

std::string FieldConfig::describe() const {
    if (q_mode == QMode::symbolic) return field->name() + ", q symbolic";
    return field->name() + ", q = " + q.expr_string();
}

std::string QOrder::to_string() const {
    switch (kind) {
        case Kind::finite:
            return std::to_string(order);
        case Kind::infinite:
            return "infinite";
        case Kind::symbolic:
            return "symbolic";
    }
    return "?";
}

std::uint64_t multiplicative_order(const Scalar& s) {
    const Field& f = s.field();
    if (!f.is_finite()) throw std::invalid_argument("multiplicative order needs a finite field");
    if (s.is_zero()) throw std::domain_error("zero has no multiplicative order");
    std::uint64_t n = f.size() - 1;
    std::uint64_t order = n;
    std::uint64_t rest = n;
    for (std::uint64_t r = 2; r * r <= rest || rest > 1; ++r) {
        if (r * r > rest) r = rest;
        if (rest % r != 0) continue;
        while (rest % r == 0) rest /= r;
        while (order % r == 0 && s.pow(static_cast<long long>(order / r)).is_one()) order /= r;
    }
    return order;
}

QOrder q_order(const FieldConfig& cfg) {
    if (cfg.q_mode == QMode::symbolic) return {QOrder::Kind::symbolic, 0};
    const Field& f = *cfg.field;
    if (f.is_finite()) return {QOrder::Kind::finite, multiplicative_order(cfg.q)};
    if (f.kind() == FieldKind::rationals) {
        if (cfg.q.rational() == 1) return {QOrder::Kind::finite, 1};
        if (cfg.q.rational() == -1) return {QOrder::Kind::finite, 2};
        return {QOrder::Kind::infinite, 0};
    }
    // explicit q inside k(q'): a non-constant is transcendental, constants defer to the base
    const QFrac& x = cfg.q.qfrac();
    if (x.num.degree() > 0 || x.den.degree() > 0) return {QOrder::Kind::infinite, 0};
    FieldConfig base{f.base(), x.num.lead(), QMode::explicit_value};
    return q_order(base);
}

}  // namespace ore
