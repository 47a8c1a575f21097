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
 * @file master.hpp
 * @brief Triangular elimination of the two degree-3 factorization ansätze and the resulting
 *        functional equation ("master equation") in one unknown series y.
 *
 *   left_B1:    h = (1 + X·t·θ)(a + bθ + cθ²),  unknown y = t
 *   right_deg1: h = (a + bθ + cθ²)(1 + t·θ),    unknown y = t⁻¹
 *
 * Either way the remaining constraint reads
 *   c₀ + c₁·y + c₂·y·α(y) + c₃·y·α(y)·α²(y) = 0.
 */

#ifndef ORE_MASTER_HPP
#define ORE_MASTER_HPP

#include <array>
#include <string>

#include "ore/skew_poly.hpp"

namespace ore {

enum class Shape { left_B1, right_deg1 };

std::string to_string(Shape s);

struct MasterEquation {
    Shape shape;
    /// The element being factored.
    SkewPoly h;
    /// Coefficients on the monomials 1, y, y·α(y), y·α(y)·α²(y).
    std::array<RatX, 4> c;
    /// The raw coefficients from the elimination equal scale·c.
    RatX scale;

    const Scalar& q() const { return h.q(); }
    /// Value of the left side at y.
    RatX evaluate(const RatX& y) const;
    /// "c0 + (c1)*y + (c2)*y*a(y) + (c3)*y*a(y)*a2(y) = 0" with y named t or u.
    std::string to_string() const;
};

struct LeftElimination {
    /// a = h₀, b = b0 + b1·t, c = c0 + c1·t + c2·t·α(t).
    RatX a, b0, b1, c0, c1, c2;
    MasterEquation master;

    RatX b(const RatX& t) const;
    RatX c(const RatX& t) const;
    /// 1 + X·t·θ.
    SkewPoly left_factor(const RatX& t) const;
    /// a + b(t)θ + c(t)θ².
    SkewPoly cofactor(const RatX& t) const;
};

struct RightElimination {
    /// a = h₀, b = h₁ − h₀·t, c = h₂ − b·α(t).
    RatX a;
    MasterEquation master;

    RatX b(const RatX& t) const;
    RatX c(const RatX& t) const;
    /// 1 + t·θ.
    SkewPoly right_factor(const RatX& t) const;
    /// a + b(t)θ + c(t)θ².
    SkewPoly cofactor(const RatX& t) const;
};

/// Requires h ∈ S, θ-degree 3 and h₀ a unit of R.
LeftElimination eliminate_left_B1(const SkewPoly& h);
RightElimination eliminate_right_deg1(const SkewPoly& h);

/// Master evaluated at t (left_B1) or at t⁻¹ (right_deg1; t ≠ 0).
RatX residual(const MasterEquation& m, const RatX& t);

/// The master with y = λ·f/g multiplied by g·α(g)·α²(g) and by the lcm D of the coefficient
/// denominators: Σ D·cᵢ·λⁱ·Fᵢ with F₀ = gα(g)α²(g), F₁ = fα(g)α²(g), F₂ = fα(f)α²(g),
/// F₃ = fα(f)α²(f).
Poly cleared_identity(const MasterEquation& m, const Scalar& lambda, const Poly& f, const Poly& g);

/// The X⁰ part of the master after removing the common power of X: a polynomial in y₀ = y(0).
Poly constant_term_polynomial(const MasterEquation& m);

/// Top-degree part of the cleared identity as a polynomial in λ, for monic f, g with
/// deg g = deg f + 1 (left_B1) or deg g = deg f (right_deg1); common powers of q removed.
Poly leading_branch_polynomial(const MasterEquation& m);

}  // namespace ore

#endif  // ORE_MASTER_HPP
