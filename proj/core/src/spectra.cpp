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

#include "ore/spectra.hpp"

#include <stdexcept>

namespace ore {

Poly Automorphism::apply(const Poly& p) const {
    if (kind == Kind::q_shift) return alpha(p, q, 1);
    const std::uint32_t ch = p.field().characteristic();
    if (!p.field().is_finite()) throw std::invalid_argument("Frobenius needs a finite field");
    return p.map(p.field(), [&](const Scalar& c) { return c.pow(ch); });
}

std::string Automorphism::to_string() const {
    return kind == Kind::q_shift ? "q-shift X -> (" + q.to_string() + ")*X" : "Frobenius c -> c^p, X fixed";
}

MaxIdeal MaxIdeal::from_root(const Scalar& a, const Automorphism& alpha) {
    return {Poly(a.field(), {-a, a.field().one()}), alpha};
}

MaxIdeal MaxIdeal::from_generator(const Poly& g, const Automorphism& alpha) {
    if (g.degree() < 1 || !g.is_monic()) throw std::invalid_argument("generator must be monic of positive degree");
    if (g.degree() > 1 && !is_irreducible(g)) throw std::invalid_argument(g.to_string() + " is not irreducible");
    return {g, alpha};
}

MaxIdeal MaxIdeal::image() const { return {alpha.apply(generator).monic(), alpha}; }

std::string MaxIdeal::to_string() const { return "<" + generator.to_string() + ">"; }

std::string OrbitReport::status() const {
    return (finite ? "finite(" : "exceeded(") + std::to_string(size) + ")";
}

OrbitReport orbit(const MaxIdeal& m, std::size_t bound) {
    if (bound < 1) throw std::invalid_argument("orbit bound must be positive");
    OrbitReport r{m, {m}, false, bound};
    MaxIdeal cur = m;
    for (std::size_t i = 1; i <= bound; ++i) {
        cur = cur.image();
        if (cur == m) {
            r.finite = true;
            r.size = i;
            return r;
        }
        r.elements.push_back(cur);
    }
    return r;
}

RatX special_product(const RatX& a, const Scalar& q, unsigned n) {
    if (a.is_zero()) throw std::invalid_argument("special product of zero");
    if (n < 1) throw std::invalid_argument("special product needs n >= 1");
    RatX out = a;
    for (unsigned i = 1; i < n; ++i) out *= alpha(a, q, static_cast<int>(i));
    return out;
}

Poly special_product(const Poly& a, const Scalar& q, unsigned n) {
    if (a.is_zero()) throw std::invalid_argument("special product of zero");
    if (n < 1) throw std::invalid_argument("special product needs n >= 1");
    Poly out = a;
    for (unsigned i = 1; i < n; ++i) out = out * alpha(a, q, static_cast<int>(i));
    return out;
}

std::string SpecialResult::to_string() const {
    return (special ? "yes(" : "no_up_to(") + std::to_string(n) + ")";
}

SpecialResult is_special_for(const RatX& a, int m, unsigned n_max, const Scalar& q) {
    if (m < 0) throw std::invalid_argument("ideal exponent must be nonnegative");
    if (a.is_zero()) throw std::invalid_argument("zero is never special");
    RatX prod = a;
    for (unsigned n = 1; n <= n_max; ++n) {
        if (n > 1) prod *= alpha(a, q, static_cast<int>(n - 1));
        if (prod.in_local_ring() && prod.x_valuation() >= m) return {true, n};
    }
    return {false, n_max};
}

FrobeniusEvidence frobenius_nonspecial_witness(std::uint32_t p, unsigned m, const Poly& candidate,
                                               std::size_t orbit_budget) {
    if (candidate.is_zero()) throw std::invalid_argument("zero is never special");
    const Field& f = Field::finite(p, m);
    if (&candidate.field() != &f) throw std::invalid_argument("candidate must live over " + f.name());
    FrobeniusEvidence ev;
    ev.degree = candidate.degree();
    std::vector<char> seen(f.size(), 0);
    for (const auto& w : f.elements()) {
        if (seen[w.code()]) continue;
        if (ev.orbits == orbit_budget)
            throw std::runtime_error("orbit budget " + std::to_string(orbit_budget) + " exhausted before refutation");
        std::string line = "{";
        bool root = false;
        Scalar cur = w;
        do {
            seen[cur.code()] = 1;
            root = root || candidate.eval(cur).is_zero();
            line += (line.size() > 1 ? ", " : "") + cur.expr_string();
            cur = cur.pow(p);
        } while (!(cur == w));
        line += root ? "} contains a root" : "} contains no root";
        ev.orbit_lines.push_back(std::move(line));
        ++ev.orbits;
        if (!root) ++ev.orbits_without_root;
        if (ev.orbits > static_cast<std::size_t>(ev.degree)) {
            ev.refuted = true;
            break;
        }
    }
    if (!ev.refuted) throw std::runtime_error("all orbits enumerated without exceeding the degree; no refutation");
    ev.summary = std::to_string(ev.orbits) + " finite orbits each need a distinct linear divisor, degree is " +
                 std::to_string(ev.degree);
    return ev;
}

}  // namespace ore
