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

#include "ore/series.hpp"

#include <stdexcept>

namespace ore {

Series::Series(const Field& f, std::size_t prec) : field_(&f), c_(prec, f.zero()) {}

Series::Series(const Field& f, std::vector<Scalar> coeffs) : field_(&f), c_(std::move(coeffs)) {}

Series Series::from_poly(const Poly& a, std::size_t prec) {
    Series s(a.field(), prec);
    for (std::size_t i = 0; i < prec; ++i) s.c_[i] = a.coeff(i);
    return s;
}

Series Series::from_ratx(const RatX& a, std::size_t prec) {
    if (!a.in_local_ring()) throw std::domain_error(a.to_string() + " has no power series expansion at 0");
    return from_poly(a.num(), prec) * from_poly(a.den(), prec).inverse();
}

bool Series::is_zero() const { return valuation() == c_.size(); }

std::size_t Series::valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return i;
    return c_.size();
}

Series Series::operator-() const {
    Series out(*field_, c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = -c_[i];
    return out;
}

namespace {

void same_shape(const Series& a, const Series& b) {
    if (&a.field() != &b.field() || a.prec() != b.prec())
        throw std::invalid_argument("series with different field or precision");
}

}  // namespace

Series operator+(const Series& a, const Series& b) {
    same_shape(a, b);
    Series out = a;
    for (std::size_t i = 0; i < a.prec(); ++i) out.c_[i] += b.c_[i];
    return out;
}

Series operator-(const Series& a, const Series& b) { return a + (-b); }

Series operator*(const Series& a, const Series& b) {
    same_shape(a, b);
    const std::size_t n = a.prec();
    Series out(a.field(), n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < n; ++j)
            if (!b.c_[j].is_zero()) out.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return out;
}

Series operator*(const Scalar& s, const Series& a) {
    Series out = a;
    for (auto& x : out.c_) x = s * x;
    return out;
}

Series Series::inverse() const {
    if (c_.empty()) return *this;
    if (c_[0].is_zero()) throw std::domain_error("series with zero constant term is not invertible");
    const std::size_t n = c_.size();
    Series out(*field_, n);
    Scalar inv0 = c_[0].inverse();
    out.c_[0] = inv0;
    for (std::size_t k = 1; k < n; ++k) {
        Scalar acc = field_->zero();
        for (std::size_t j = 1; j <= k; ++j) acc += c_[j] * out.c_[k - j];
        out.c_[k] = -acc * inv0;
    }
    return out;
}

Series Series::alpha(const Scalar& q, int n) const {
    Series out = *this;
    Scalar step = q.pow(n), acc = field_->one();
    for (auto& x : out.c_) {
        x *= acc;
        acc *= step;
    }
    return out;
}

Series Series::shift_up(std::size_t k) const {
    Series out(*field_, c_.size());
    for (std::size_t i = 0; i + k < c_.size(); ++i) out.c_[i + k] = c_[i];
    return out;
}

Poly Series::to_poly() const { return Poly(*field_, c_); }

std::string Series::to_string() const { return to_poly().to_string() + " + O(X^" + std::to_string(c_.size()) + ")"; }

// ---------------------------------------------------------------------------------------------

TruncatedSkew::TruncatedSkew(const Scalar& q, std::vector<Series> coeffs)
    : q_(q), prec_(coeffs.empty() ? 0 : coeffs.front().prec()), c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

TruncatedSkew TruncatedSkew::from_skew(const SkewPoly& a, std::size_t prec) {
    std::vector<Series> c;
    for (const auto& r : a.coefficients()) c.push_back(Series::from_ratx(r, prec));
    TruncatedSkew out(a.q(), std::move(c));
    out.prec_ = prec;
    return out;
}

Series TruncatedSkew::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Series(q_.field(), prec_); }

TruncatedSkew operator+(const TruncatedSkew& a, const TruncatedSkew& b) {
    std::vector<Series> out;
    for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) out.push_back(a.coeff(i) + b.coeff(i));
    TruncatedSkew r(a.q_, std::move(out));
    r.prec_ = a.prec_;
    return r;
}

TruncatedSkew operator-(const TruncatedSkew& a, const TruncatedSkew& b) {
    std::vector<Series> out;
    for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) out.push_back(a.coeff(i) - b.coeff(i));
    TruncatedSkew r(a.q_, std::move(out));
    r.prec_ = a.prec_;
    return r;
}

TruncatedSkew operator*(const TruncatedSkew& a, const TruncatedSkew& b) {
    if (a.prec_ != b.prec_) throw std::invalid_argument("truncated skew polynomials with different precision");
    TruncatedSkew r(a.q_, a.prec_);
    if (a.c_.empty() || b.c_.empty()) return r;
    std::vector<Series> out(a.size() + b.size() - 1, Series(a.q_.field(), a.prec_));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = out[i + j] + a.c_[i] * b.c_[j].alpha(a.q_, static_cast<int>(i));
    TruncatedSkew res(a.q_, std::move(out));
    res.prec_ = a.prec_;
    return res;
}

bool operator==(const TruncatedSkew& a, const TruncatedSkew& b) {
    return a.prec_ == b.prec_ && a.q_ == b.q_ && a.c_ == b.c_;
}

}  // namespace ore
