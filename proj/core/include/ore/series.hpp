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

/**
 * @file series.hpp
 * @brief Power series modulo X^N (R embedded in k[[X]]) and skew polynomials over them.
 */

#ifndef ORE_SERIES_HPP
#define ORE_SERIES_HPP

#include <string>
#include <vector>

#include "ore/skew_poly.hpp"

namespace ore {

/// Σ_{i<N} cᵢ Xⁱ, always exactly N stored coefficients.
class Series {
   public:
    Series(const Field& f, std::size_t prec);
    Series(const Field& f, std::vector<Scalar> coeffs);
    /// Expansion of an element of R; throws if a has a pole at 0.
    static Series from_ratx(const RatX& a, std::size_t prec);
    static Series from_poly(const Poly& a, std::size_t prec);

    const Field& field() const noexcept { return *field_; }
    std::size_t prec() const noexcept { return c_.size(); }
    const Scalar& operator[](std::size_t i) const { return c_[i]; }
    Scalar& operator[](std::size_t i) { return c_[i]; }
    const std::vector<Scalar>& coefficients() const noexcept { return c_; }
    bool is_zero() const;
    /// Index of the first nonzero coefficient, prec() when zero.
    std::size_t valuation() const;

    Series operator-() const;
    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a, const Series& b);
    friend Series operator*(const Series& a, const Series& b);
    friend Series operator*(const Scalar& s, const Series& a);
    friend bool operator==(const Series&, const Series&) = default;

    /// Multiplicative inverse; requires a nonzero constant term.
    Series inverse() const;
    /// X ↦ qⁿX.
    Series alpha(const Scalar& q, int n = 1) const;
    /// Multiplication by X^k, dropping what falls off the end.
    Series shift_up(std::size_t k) const;
    Poly to_poly() const;
    std::string to_string() const;

   private:
    const Field* field_;
    std::vector<Scalar> c_;
};

/// Σ cᵢ θⁱ with series coefficients; ring laws hold modulo X^N.
class TruncatedSkew {
   public:
    TruncatedSkew(const Scalar& q, std::size_t prec) : q_(q), prec_(prec) {}
    TruncatedSkew(const Scalar& q, std::vector<Series> coeffs);
    static TruncatedSkew from_skew(const SkewPoly& a, std::size_t prec);

    const Scalar& q() const noexcept { return q_; }
    std::size_t prec() const noexcept { return prec_; }
    std::size_t size() const noexcept { return c_.size(); }
    Series coeff(std::size_t i) const;
    const std::vector<Series>& coefficients() const noexcept { return c_; }

    friend TruncatedSkew operator+(const TruncatedSkew& a, const TruncatedSkew& b);
    friend TruncatedSkew operator-(const TruncatedSkew& a, const TruncatedSkew& b);
    friend TruncatedSkew operator*(const TruncatedSkew& a, const TruncatedSkew& b);
    friend bool operator==(const TruncatedSkew& a, const TruncatedSkew& b);

   private:
    Scalar q_;
    std::size_t prec_;
    std::vector<Series> c_;
};

}  // namespace ore

#endif  // ORE_SERIES_HPP
