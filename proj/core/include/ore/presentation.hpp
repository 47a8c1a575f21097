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
 * @file presentation.hpp
 * @brief (g, ξ)-presentations f = f_A·f_B with roots(f_A) = ξA and roots(f_B) = ξ²B, where A and B
 *        are drawn from the enumerated roots z_1, …, z_s of g.
 *
 * The roots of g are labelled, so a repeated root value contributes several distinct elements.
 * A presentation therefore records, for every root value z of multiplicity m, how many of its
 * m copies fall into A₀ = A∖C, B₀ = B∖C, C = A∩B and D = Z_g∖(A∪B). All multisets below are
 * sorted by the canonical Scalar order.
 */

#ifndef ORE_PRESENTATION_HPP
#define ORE_PRESENTATION_HPP

#include <string>
#include <vector>

#include "ore/poly.hpp"

namespace ore {

struct Presentation {
    Scalar xi;
    std::vector<Scalar> Zg;
    std::vector<Scalar> A, B;
    std::vector<Scalar> A0, B0, C, D;
    Poly f_A, f_B;

    std::string to_string() const;
    friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// Assembles a presentation from its four blocks (A = A₀ ⊔ C, B = B₀ ⊔ C, Z_g = A₀ ⊔ B₀ ⊔ C ⊔ D).
Presentation make_presentation(const Scalar& xi, std::vector<Scalar> A0, std::vector<Scalar> B0,
                               std::vector<Scalar> C, std::vector<Scalar> D);

/// Every presentation of f relative to g, in canonical order; empty when some root of f lies
/// outside ξZ_g ∪ ξ²Z_g or the multiplicities of g cannot accommodate the roots.
/// Requires f, g monic, g split over the working field, ξ ≠ 0.
std::vector<Presentation> find_presentations(const Poly& f, const Poly& g, const Scalar& xi);

/// A presentation with the least |C|; ties go to the lexicographically smallest A, then B.
Presentation irreducible_presentation(const Poly& f, const Poly& g, const Scalar& xi);

/// No element of C equals an element of D as a field element.
bool check_irrepresentation(const Presentation& p);

}  // namespace ore

#endif  // ORE_PRESENTATION_HPP
