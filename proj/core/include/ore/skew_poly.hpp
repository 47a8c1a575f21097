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
 * @file skew_poly.hpp
 * @brief The skew polynomial rings S = R[θ; α] ⊂ T = k(X)[θ; α] with θ·r = α(r)·θ.
 *
 * Elements are stored as Σ cᵢ θⁱ with coefficients on the left. Arithmetic always takes place
 * in T (coefficients in k(X)); membership in S is the separate predicate in_S().
 *
 * Division conventions:
 *   right_divide(a, b): a = quot·b + rem
 *   left_divide(a, b):  a = b·quot + rem
 * gcrd(a, b) generates the left ideal Ta + Tb; lclm(a, b) generates Ta ∩ Tb.
 */

#ifndef ORE_SKEW_POLY_HPP
#define ORE_SKEW_POLY_HPP

#include <string>
#include <vector>

#include "ore/ratx.hpp"

namespace ore {

class SkewPoly {
   public:
    /// Zero element of the ring twisted by q.
    explicit SkewPoly(const Scalar& q) : q_(q) {}
    SkewPoly(const Scalar& q, std::vector<RatX> coeffs);
    static SkewPoly constant(const Scalar& q, const RatX& r) { return SkewPoly(q, {r}); }
    static SkewPoly theta(const Scalar& q);
    static SkewPoly one(const Scalar& q) { return constant(q, RatX::constant(q.field().one())); }

    const Scalar& q() const noexcept { return q_; }
    const Field& field() const { return q_.field(); }
    bool is_zero() const noexcept { return c_.empty(); }
    /// θ-degree; −1 for zero.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const std::vector<RatX>& coefficients() const noexcept { return c_; }
    RatX coeff(std::size_t i) const;
    const RatX& lead() const;

    /// Left-normalized: leading coefficient 1.
    SkewPoly monic() const;
    /// Every coefficient lies in R = k[X]_{⟨X⟩}.
    bool in_S() const;

    SkewPoly operator-() const;
    friend SkewPoly operator+(const SkewPoly& a, const SkewPoly& b);
    friend SkewPoly operator-(const SkewPoly& a, const SkewPoly& b);
    /// Noncommutative product using θⁱ·r = αⁱ(r)·θⁱ.
    friend SkewPoly operator*(const SkewPoly& a, const SkewPoly& b);
    /// Left multiplication by a coefficient.
    friend SkewPoly operator*(const RatX& r, const SkewPoly& a);
    SkewPoly& operator+=(const SkewPoly& b) { return *this = *this + b; }
    SkewPoly& operator-=(const SkewPoly& b) { return *this = *this - b; }

    friend bool operator==(const SkewPoly& a, const SkewPoly& b) { return a.q_ == b.q_ && a.c_ == b.c_; }

    /// `(c0) + (c1)*theta^1 + …`, ascending powers, zero terms omitted; "0" for zero.
    std::string to_string() const;
    /// The same element with coefficients moved to the right: Σ θⁱ·α^{−i}(cᵢ).
    std::string to_right_form_string() const;

   private:
    void trim();

    Scalar q_;
    std::vector<RatX> c_;
};

SkewPoly skew_mul(const SkewPoly& a, const SkewPoly& b);

struct SkewDivMod {
    SkewPoly quot;
    SkewPoly rem;
};

/// a = quot·b + rem with deg rem < deg b.
SkewDivMod right_divide(const SkewPoly& a, const SkewPoly& b);
/// a = b·quot + rem with deg rem < deg b.
SkewDivMod left_divide(const SkewPoly& a, const SkewPoly& b);

/// Monic greatest common right divisor. Not both zero.
SkewPoly gcrd(const SkewPoly& a, const SkewPoly& b);
/// Monic least common left multiple (generator of Ta ∩ Tb). Both nonzero.
SkewPoly lclm(const SkewPoly& a, const SkewPoly& b);

enum class TIrreducibility { irreducible, unit, unknown };
/// Degree-1 elements of T are irreducible by degree; higher degrees are not decided here.
TIrreducibility irreducibility_in_T(const SkewPoly& a);

/// Coefficient-wise reduction (e.g. ℚ → 𝔽_p) together with q.
SkewPoly reduce(const SkewPoly& a, const Field& target);

}  // namespace ore

#endif  // ORE_SKEW_POLY_HPP
