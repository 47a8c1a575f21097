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
 * @file ratx.hpp
 * @brief Rational functions k(X), the local ring R = k[X]_{⟨X⟩} as a predicate, and the
 *        q-shift automorphism α(X) = qX.
 */

#ifndef ORE_RATX_HPP
#define ORE_RATX_HPP

#include <string>

#include "ore/poly.hpp"

namespace ore {

using PolyX = Poly;

/// num/den with coprime parts and monic denominator.
class RatX {
   public:
    explicit RatX(const Field& f) : num_(f), den_(Poly::constant(f.one())) {}
    RatX(Poly num, Poly den);
    /// Polynomials embed as num/1.
    RatX(Poly num);  // NOLINT(google-explicit-constructor)
    static RatX constant(const Scalar& c) { return RatX(Poly::constant(c)); }
    static RatX x(const Field& f) { return RatX(Poly::variable(f)); }

    const Field& field() const noexcept { return num_.field(); }
    const Poly& num() const noexcept { return num_; }
    const Poly& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const;
    bool is_polynomial() const { return den_.degree() == 0; }
    /// Constant in X (degree 0 numerator and denominator).
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
    /// Value as a scalar; requires is_constant().
    Scalar as_scalar() const;

    /// Denominator does not vanish at X = 0.
    bool in_local_ring() const;
    /// Element of R with nonzero value at X = 0.
    bool is_local_unit() const;
    /// Order of vanishing at X = 0; throws on zero.
    int x_valuation() const;
    /// Value at X = 0; requires in_local_ring().
    Scalar value_at_zero() const;

    RatX inverse() const;
    RatX operator-() const;
    friend RatX operator+(const RatX& a, const RatX& b);
    friend RatX operator-(const RatX& a, const RatX& b);
    friend RatX operator*(const RatX& a, const RatX& b);
    friend RatX operator/(const RatX& a, const RatX& b);
    friend RatX operator*(const Scalar& s, const RatX& a);
    RatX& operator+=(const RatX& b) { return *this = *this + b; }
    RatX& operator-=(const RatX& b) { return *this = *this - b; }
    RatX& operator*=(const RatX& b) { return *this = *this * b; }

    friend bool operator==(const RatX& a, const RatX& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend std::strong_ordering operator<=>(const RatX& a, const RatX& b);

    /// `num` or `(num)/(den)`.
    std::string to_string() const;

   private:
    struct Reduced {};
    static constexpr Reduced reduced{};
    /// Trusts that num and den are coprime; only makes den monic.
    RatX(Poly num, Poly den, Reduced);
    void canonicalize();

    Poly num_;
    Poly den_;
};

/// αⁿ: substitutes X ↦ qⁿX. n may be negative.
RatX alpha(const RatX& a, const Scalar& q, int n = 1);
PolyX alpha(const PolyX& a, const Scalar& q, int n = 1);

/// Coefficient-wise image in another field (ℚ → 𝔽_p); fails when a denominator vanishes.
RatX reduce(const RatX& a, const Field& target);

}  // namespace ore

#endif  // ORE_RATX_HPP
