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

#include "ore/classify.hpp"

#include <stdexcept>

namespace ore {

std::string to_string(TypeTag t) {
    switch (t) {
        case TypeTag::A: return "A";
        case TypeTag::B: return "B";
        case TypeTag::C: return "C";
        case TypeTag::Unit: return "Unit";
        case TypeTag::Zero: return "Zero";
        case TypeTag::Unnormalized: return "Unnormalized";
    }
    return "?";
}

Decomposition decompose(const SkewPoly& z) {
    if (!z.in_S()) throw std::domain_error(z.to_string() + " is not in S");
    const Field& f = z.field();
    RatX x = RatX::x(f);
    std::vector<Scalar> fc;
    std::vector<RatX> sc;
    for (const auto& c : z.coefficients()) {
        Scalar c0 = c.value_at_zero();
        fc.push_back(c0);
        sc.push_back((c - RatX::constant(c0)) / x);
    }
    return {Poly(f, std::move(fc)), SkewPoly(z.q(), std::move(sc))};
}

Classification normalize_and_classify(const SkewPoly& z) {
    if (z.is_zero()) throw std::domain_error("cannot classify 0");
    Poly f = decompose(z).f;
    const Scalar& q = z.q();
    const Field& fld = z.field();

    if (f.is_zero()) {
        // z ∈ XS. Normalize by c_i / X^v for the first coefficient of least valuation v;
        // only X itself has a listed shape.
        int v = -1;
        std::size_t at = 0;
        for (std::size_t i = 0; i < z.coefficients().size(); ++i) {
            const RatX& c = z.coefficients()[i];
            if (c.is_zero()) continue;
            if (v < 0 || c.x_valuation() < v) v = c.x_valuation(), at = i;
        }
        RatX unit = z.coeff(at) / RatX(Poly::monomial(fld.one(), static_cast<std::size_t>(v)));
        SkewPoly norm = unit.inverse() * z;
        TypeTag tag = norm == SkewPoly::constant(q, RatX::x(fld)) ? TypeTag::A : TypeTag::Unnormalized;
        return {std::move(unit), std::move(norm), tag};
    }
    if (f.degree() == 0) {
        RatX unit = z.coeff(0);
        if (z.degree() == 0) return {unit, SkewPoly::one(q), TypeTag::Unit};
        return {unit, unit.inverse() * z, TypeTag::B};
    }
    RatX unit = z.coeff(static_cast<std::size_t>(f.degree()));
    SkewPoly norm = unit.inverse() * z;
    TypeTag tag = norm == SkewPoly::theta(q) ? TypeTag::A : TypeTag::C;
    return {unit, std::move(norm), tag};
}

TypeTag shape_of(const SkewPoly& z) {
    if (z.is_zero()) return TypeTag::Zero;
    return normalize_and_classify(z).tag;
}

}  // namespace ore
