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

#include "ore/oracle.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "ore/series.hpp"

namespace ore {

namespace {

int val_or(const RatX& r, int fallback) { return r.is_zero() ? fallback : r.x_valuation(); }

// Works on raw element codes of the finite field; the boxed Scalar path is far too slow for the
// number of nodes visited.
class Enumerator {
   public:
    using Codes = std::vector<std::uint32_t>;
    using Skew = std::vector<Codes>;

    Enumerator(const SkewPoly& h, Shape shape, std::size_t prec, std::size_t max_nodes)
        : shape_(shape), f_(h.field()), prec_(prec), max_nodes_(max_nodes) {
        constexpr int inf = std::numeric_limits<int>::max() / 4;
        const int v0 = val_or(h.coeff(0), inf), v1 = val_or(h.coeff(1), inf), v2 = val_or(h.coeff(2), inf);
        // the first X-power of the last equation that can depend on t
        delay_ = shape == Shape::left_B1 ? std::min({1 + v2, 2 + v1, 3 + v0}) : std::min({v0, v1, v2});
        E_ = prec + static_cast<std::size_t>(delay_);
        zero_ = f_.zero().code();
        one_ = f_.one().code();
        for (std::size_t i = 0; i < 4; ++i) {
            Series hs = Series::from_ratx(h.coeff(i), E_);
            Codes c;
            for (const auto& x : hs.coefficients()) c.push_back(x.code());
            H_.push_back(std::move(c));
            Codes qp;
            Scalar step = h.q().pow(static_cast<long long>(i)), acc = f_.one();
            for (std::size_t e = 0; e < E_; ++e, acc *= step) qp.push_back(acc.code());
            qpow_.push_back(std::move(qp));
        }
    }

    int delay() const { return delay_; }

    std::vector<Series> run() {
        Codes t(E_, zero_);
        dfs(0, t);
        return out_;
    }

    bool exhausted() const { return nodes_ > max_nodes_; }

   private:
    Codes mul(const Codes& a, const Codes& b, std::size_t n) const {
        Codes out(n, zero_);
        for (std::size_t i = 0; i < n; ++i) {
            if (a[i] == zero_) continue;
            for (std::size_t j = 0; i + j < n; ++j)
                if (b[j] != zero_) out[i + j] = f_.add_code(out[i + j], f_.mul_code(a[i], b[j]));
        }
        return out;
    }

    Codes alpha(const Codes& a, std::size_t power, std::size_t n) const {
        Codes out(n);
        for (std::size_t e = 0; e < n; ++e) out[e] = f_.mul_code(a[e], qpow_[power][e]);
        return out;
    }

    // θ^k coefficient of A·B in k[[X]][θ; α] modulo X^n
    Codes skew_coeff(const Skew& A, const Skew& B, std::size_t k, std::size_t n) const {
        Codes out(n, zero_);
        for (std::size_t i = 0; i < A.size() && i <= k; ++i) {
            std::size_t j = k - i;
            if (j >= B.size()) continue;
            Codes term = mul(A[i], alpha(B[j], i, n), n);
            for (std::size_t e = 0; e < n; ++e) out[e] = f_.add_code(out[e], term[e]);
        }
        return out;
    }

    Codes sub(const Codes& a, const Codes& b, std::size_t n) const {
        Codes out(n);
        for (std::size_t e = 0; e < n; ++e) out[e] = f_.add_code(a[e], f_.neg_code(b[e]));
        return out;
    }

    // h₃ minus the θ³ coefficient of the ansatz, with the quadratic factor solved from θ⁰..θ².
    // Only the first n coefficients are formed.
    Codes residual(const Codes& t_full, std::size_t n) const {
        Codes one(n, zero_), t(n, zero_);
        one[0] = one_;
        const bool left = shape_ == Shape::left_B1;
        for (std::size_t e = 0; e < n; ++e) {
            // left factor carries X·t
            if (left && e >= 1) t[e] = t_full[e - 1];
            if (!left) t[e] = t_full[e];
        }
        Skew known = {one, t};
        Skew cof;
        for (std::size_t i = 0; i < 3; ++i) {
            cof.push_back(Codes(n, zero_));
            Codes P = left ? skew_coeff(known, cof, i, n) : skew_coeff(cof, known, i, n);
            cof[i] = sub(Codes(H_[i].begin(), H_[i].begin() + static_cast<long>(n)), P, n);
        }
        Codes P = left ? skew_coeff(known, cof, 3, n) : skew_coeff(cof, known, 3, n);
        return sub(Codes(H_[3].begin(), H_[3].begin() + static_cast<long>(n)), P, n);
    }

    void dfs(std::size_t j, Codes& t) {
        if (++nodes_ > max_nodes_) return;
        if (j == prec_) {
            Series s(f_, prec_);
            for (std::size_t i = 0; i < prec_; ++i) s[i] = f_.element(t[i]);
            out_.push_back(std::move(s));
            return;
        }
        for (std::uint32_t x = 0; x < f_.size(); ++x) {
            t[j] = x;
            // coefficients up to X^(j + delay) no longer depend on later choices
            const std::size_t settled = std::min(E_, j + static_cast<std::size_t>(delay_) + 1);
            Codes r = residual(t, settled);
            bool ok = std::all_of(r.begin(), r.end(), [&](std::uint32_t c) { return c == zero_; });
            if (ok) dfs(j + 1, t);
            if (nodes_ > max_nodes_) break;
        }
        t[j] = zero_;
    }

    Shape shape_;
    const Field& f_;
    std::size_t prec_;
    std::size_t max_nodes_;
    int delay_ = 0;
    std::size_t E_ = 0;
    std::uint32_t zero_ = 0, one_ = 1;
    std::vector<Codes> H_;
    std::vector<Codes> qpow_;
    std::size_t nodes_ = 0;
    std::vector<Series> out_;
};

// Every g = 1 + g₁X + … + g_d X^d such that s·g mod X^prec is a polynomial of degree ≤ d.
std::vector<RatX> consistent_rationals(const Series& s, int d) {
    const Field& f = s.field();
    const std::size_t n = s.prec();
    const std::size_t d_sz = static_cast<std::size_t>(d);
    const std::uint32_t zero = f.zero().code(), size = static_cast<std::uint32_t>(f.size());
    std::vector<std::uint32_t> sc;
    for (const auto& x : s.coefficients()) sc.push_back(x.code());
    std::vector<RatX> out;
    std::vector<std::uint32_t> g(d_sz + 1, zero);
    g[0] = f.one().code();
    auto coeff = [&](std::size_t e) {
        std::uint32_t acc = zero;
        for (std::size_t j = 0; j <= d_sz && j <= e; ++j) acc = f.add_code(acc, f.mul_code(g[j], sc[e - j]));
        return acc;
    };
    while (true) {
        // coefficients of s·g above X^d must vanish below X^n; stop at the first that does not
        bool ok = true;
        for (std::size_t e = d_sz + 1; e < n && ok; ++e) ok = coeff(e) == zero;
        if (ok) {
            std::vector<Scalar> num, den;
            for (std::size_t e = 0; e < std::min(n, d_sz + 1); ++e) num.push_back(f.element(coeff(e)));
            for (auto c : g) den.push_back(f.element(c));
            RatX r(Poly(f, std::move(num)), Poly(f, std::move(den)));
            if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(std::move(r));
        }
        std::size_t k = 1;
        while (k <= d_sz && ++g[k] == size) g[k++] = 0;
        if (k > d_sz) break;
    }
    return out;
}

// Solves the θ⁰..θ² equations for the quadratic factor and checks the product exactly.
std::optional<Witness> reconstruct(const SkewPoly& h, Shape shape, const RatX& t) {
    const Scalar& q = h.q();
    const Field& f = h.field();
    const RatX one = RatX::constant(f.one());
    SkewPoly known = shape == Shape::left_B1 ? SkewPoly(q, {one, RatX::x(f) * t}) : SkewPoly(q, {one, t});
    std::vector<RatX> cof;
    for (std::size_t i = 0; i < 3; ++i) {
        cof.push_back(RatX(f));
        SkewPoly C(q, cof);
        SkewPoly P = shape == Shape::left_B1 ? known * C : C * known;
        cof[i] = h.coeff(i) - P.coeff(i);
    }
    SkewPoly C(q, cof);
    Witness w{t, cof[0], cof[1], cof[2], SkewPoly(q), SkewPoly(q), TypeTag::Zero, TypeTag::Zero};
    w.b_prime = shape == Shape::left_B1 ? known : C;
    w.c_prime = shape == Shape::left_B1 ? C : known;
    if (!w.b_prime.in_S() || !w.c_prime.in_S() || !(w.b_prime * w.c_prime == h)) return std::nullopt;
    w.b_tag = shape_of(w.b_prime);
    w.c_tag = shape_of(w.c_prime);
    return w;
}

}  // namespace

FactorReport truncated_oracle(const SkewPoly& h, Shape shape, std::size_t prec, int coeff_bound,
                              const OracleConfig& cfg) {
    const Field& f = h.field();
    if (!f.is_finite()) throw std::invalid_argument("truncated_oracle needs a finite field with numeric q");
    if (prec < 1) throw std::invalid_argument("precision must be at least 1");
    if (coeff_bound < 0) throw std::invalid_argument("coefficient bound must be nonnegative");
    if (h.degree() != 3 || !h.in_S() || !h.coeff(0).is_local_unit())
        throw std::invalid_argument("oracle needs h in S of theta-degree 3 with unit constant term");
    double size = 1;
    for (int i = 0; i <= coeff_bound; ++i) size *= static_cast<double>(f.size());
    if (size > static_cast<double>(cfg.cap))
        throw std::length_error("oracle search size " + std::to_string(f.size()) + "^" + std::to_string(coeff_bound + 1) +
                                " exceeds cap " + std::to_string(cfg.cap));

    FactorReport r;
    r.shape = shape;
    r.bound = coeff_bound;
    r.field = f.name() + ", q = " + h.q().to_string();
    if (f.characteristic() == 2) r.regime_flags.push_back("characteristic 2");
    r.regime_flags.push_back("root-of-unity regime (ord q = " + std::to_string(multiplicative_order(h.q())) +
                             "): nonexistence argument inapplicable");

    Enumerator en(h, shape, prec, cfg.max_nodes);
    auto sols = en.run();
    if (en.exhausted()) throw std::length_error("oracle node cap exceeded");
    r.truncated_solutions = sols.size();
    r.transcript.push_back("precision X^" + std::to_string(prec) + ", equations checked modulo X^" +
                           std::to_string(prec + static_cast<std::size_t>(en.delay())) + ", " +
                           std::to_string(sols.size()) + " truncated solutions");

    std::size_t zero_t = 0;
    std::vector<RatX> non_unit;
    for (const auto& s : sols) {
        if (s.is_zero()) {
            ++zero_t;
            continue;
        }
        const bool admissible = shape == Shape::left_B1 || !s[0].is_zero();
        auto& into = admissible ? r.consistent : non_unit;
        for (auto& t : consistent_rationals(s, coeff_bound))
            if (std::find(into.begin(), into.end(), t) == into.end()) into.push_back(std::move(t));
    }
    if (zero_t > 0) r.transcript.push_back("t = 0 satisfies the truncated equations; rejected since 1 is a unit");
    std::size_t non_unit_series = 0;
    for (const auto& s : sols) non_unit_series += (shape == Shape::right_deg1 && !s.is_zero() && s[0].is_zero()) ? 1 : 0;
    if (non_unit_series > 0)
        r.regime_flags.push_back("non-invertible t: " + std::to_string(non_unit_series) + " truncated solutions and " +
                                 std::to_string(non_unit.size()) +
                                 " consistent rational t with t(0) = 0 (1 + t*theta is not of type C)");
    for (const auto& t : non_unit) {
        auto w = reconstruct(h, shape, t);
        r.transcript.push_back("non-invertible regime: t = " + t.to_string() +
                               (w ? ", exact, tags (" + to_string(w->b_tag) + ", " + to_string(w->c_tag) + ")"
                                  : ", not exact"));
    }
    bool all_exact = true;
    for (const auto& t : r.consistent) {
        auto w = reconstruct(h, shape, t);
        r.transcript.push_back("consistent truncation t = " + t.to_string() + (w ? ", verified exactly" : ", not exact"));
        if (w) {
            r.solutions.push_back(*w);
            if (!r.witness && w->is_BC()) r.witness = *w;
        }
        all_exact = all_exact && w.has_value();
    }
    if (r.witness)
        r.status = Status::witness_found;
    else if (all_exact)
        r.status = Status::no_solution_up_to_bound;
    else
        r.status = Status::inconclusive;
    return r;
}

}  // namespace ore
