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

#include "ore/diamond.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

#include "ore/linalg.hpp"
#include "ore/series.hpp"

namespace ore {

std::string to_string(Status s) {
    switch (s) {
        case Status::witness_found: return "witness_found";
        case Status::no_solution_up_to_bound: return "no_solution_up_to_bound";
        case Status::identity_verified: return "identity_verified";
        case Status::inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

bool is_symbolic(const Field& f) { return f.kind() == FieldKind::rational_functions; }

// Series solutions of the master modulo X^K followed by Padé reconstruction.
class SeriesSearch {
   public:
    SeriesSearch(const MasterEquation& m, int num_deg, int den_deg, std::size_t max_branches)
        : m_(m),
          f_(m.q().field()),
          dn_(num_deg),
          dd_(den_deg),
          K_(static_cast<std::size_t>(num_deg + den_deg + 3)),
          max_branches_(max_branches) {
        Poly D = Poly::constant(f_.one());
        for (const auto& c : m.c) D = divmod(D * c.den(), gcd(D, c.den())).quot;
        v_ = -1;
        for (const auto& c : m.c)
            if (!c.is_zero()) v_ = v_ < 0 ? c.x_valuation() : std::min(v_, c.x_valuation());
        if (v_ < 0) throw std::invalid_argument("master equation is identically zero");
        prec_ = static_cast<std::size_t>(v_) + K_;
        for (std::size_t i = 0; i < 4; ++i)
            P_[i] = Series::from_poly(divmod(D * m.c[i].num(), m.c[i].den()).quot, prec_);
    }

    /// Candidate rational y, in canonical branch order.
    std::vector<RatX> run() {
        Series y(f_, prec_);
        dfs(0, y);
        return candidates_;
    }

    bool truncated() const { return truncated_; }
    std::size_t indeterminate() const { return indeterminate_; }
    std::size_t branches() const { return branches_; }

   private:
    Scalar level_coeff(const Series& y, std::size_t k) const {
        Series y1 = y.alpha(m_.q(), 1), y2 = y.alpha(m_.q(), 2);
        Series m1 = y * y1;
        Series M = P_[0] + P_[1] * y + P_[2] * m1 + P_[3] * (m1 * y2);
        return M[static_cast<std::size_t>(v_) + k];
    }

    void dfs(std::size_t k, Series& y) {
        if (truncated_) return;
        if (k == K_) {
            if (++branches_ > max_branches_) {
                truncated_ = true;
                return;
            }
            pade(y);
            return;
        }
        const bool right = m_.shape == Shape::right_deg1;
        std::vector<Scalar> choices;
        if (k == 0) {
            if (f_.is_finite()) {
                for (const auto& s : f_.elements()) {
                    if (right && s.is_zero()) continue;
                    y[0] = s;
                    if (level_coeff(y, 0).is_zero()) choices.push_back(s);
                }
            } else {
                for (const auto& r : roots_in_field(constant_term_polynomial(m_)).roots)
                    if (!(right && r.is_zero()) && std::find(choices.begin(), choices.end(), r) == choices.end())
                        choices.push_back(r);
            }
        } else {
            y[k] = f_.zero();
            Scalar c0 = level_coeff(y, k);
            y[k] = f_.one();
            Scalar slope = level_coeff(y, k) - c0;
            if (!slope.is_zero()) {
                choices.push_back(-c0 / slope);
            } else if (c0.is_zero()) {
                if (!f_.is_finite()) {
                    ++indeterminate_;
                    y[k] = f_.zero();
                    return;
                }
                choices = f_.elements();
            }
        }
        for (const auto& s : choices) {
            y[k] = s;
            dfs(k + 1, y);
        }
        y[k] = f_.zero();
    }

    void pade(const Series& y) {
        const std::size_t na = static_cast<std::size_t>(dn_) + 1, nb = static_cast<std::size_t>(dd_) + 1;
        Matrix rows;
        for (std::size_t e = 0; e < K_; ++e) {
            std::vector<Scalar> row(na + nb, f_.zero());
            if (e < na) row[e] = f_.one();
            for (std::size_t j = 0; j < nb && j <= e; ++j) row[na + j] = -y[e - j];
            rows.push_back(std::move(row));
        }
        auto basis = nullspace(std::move(rows), na + nb, f_);
        if (basis.empty()) return;
        const auto& v = basis.front();
        Poly A(f_, std::vector<Scalar>(v.begin(), v.begin() + static_cast<long>(na)));
        Poly B(f_, std::vector<Scalar>(v.begin() + static_cast<long>(na), v.end()));
        if (B.is_zero()) return;
        RatX cand(A, B);
        if (!cand.in_local_ring()) return;
        if (std::find(candidates_.begin(), candidates_.end(), cand) == candidates_.end())
            candidates_.push_back(std::move(cand));
    }

    const MasterEquation& m_;
    const Field& f_;
    int dn_, dd_;
    std::size_t K_;
    std::size_t max_branches_;
    int v_ = 0;
    std::size_t prec_ = 0;
    std::array<Series, 4> P_ = {Series(f_, 0), Series(f_, 0), Series(f_, 0), Series(f_, 0)};
    std::vector<RatX> candidates_;
    bool truncated_ = false;
    std::size_t indeterminate_ = 0;
    std::size_t branches_ = 0;
};

MasterEquation rebuild(const MasterEquation& m, const SkewPoly& h) {
    return m.shape == Shape::left_B1 ? eliminate_left_B1(h).master : eliminate_right_deg1(h).master;
}

void lambda_metadata(const MasterEquation& m, FactorReport& r) {
    Poly L = leading_branch_polynomial(m);
    const std::string var = "lambda";
    r.transcript.push_back("leading-coefficient constraint: " + L.to_string(var) + " = 0");
    if (is_symbolic(m.q().field())) {
        r.lambda_branches.push_back(L.to_string(var) + " = 0");
        return;
    }
    RootSplit rs = roots_in_field(L);
    std::vector<Scalar> seen;
    for (const auto& x : rs.roots) {
        if (x.is_zero() || std::find(seen.begin(), seen.end(), x) != seen.end()) continue;
        seen.push_back(x);
        r.lambda_branches.push_back("lambda = " + x.to_string());
    }
    if (rs.remainder.degree() > 0)
        r.skipped_branches.push_back(rs.remainder.to_string(var) + " = 0 has no root in " + m.q().field().name() +
                                     ", so no lambda from this factor exists here");
}

struct FieldSearch {
    std::vector<Witness> solutions;
    std::size_t raw_candidates = 0;
    bool truncated = false;
    std::size_t indeterminate = 0;
    std::size_t branches = 0;
};

FieldSearch search_field(const MasterEquation& m, int N, std::size_t max_branches) {
    SeriesSearch s(m, N, N + 1, max_branches);
    FieldSearch out;
    auto cands = s.run();
    out.truncated = s.truncated();
    out.indeterminate = s.indeterminate();
    out.branches = s.branches();
    for (const auto& y : cands) {
        if (y.is_zero()) continue;
        if (m.shape == Shape::right_deg1 && !y.is_local_unit()) continue;
        RatX t = m.shape == Shape::left_B1 ? y : y.inverse();
        if (auto w = verify_candidate(m, t)) {
            ++out.raw_candidates;
            out.solutions.push_back(std::move(*w));
        }
    }
    return out;
}

void finalize_finite(const MasterEquation& m, const FieldSearch& fs, FactorReport& r) {
    r.solutions = fs.solutions;
    for (const auto& w : fs.solutions) {
        if (w.is_BC()) {
            r.witness = w;
            break;
        }
    }
    r.transcript.push_back("series branches examined: " + std::to_string(fs.branches) +
                           ", verified solutions: " + std::to_string(fs.solutions.size()));
    for (const auto& w : fs.solutions)
        if (!w.is_BC())
            r.transcript.push_back("solution t = " + w.t.to_string() + " has tags (" + to_string(w.b_tag) + ", " +
                                   to_string(w.c_tag) + "), not (B, C)");
    if (r.witness)
        r.status = Status::witness_found;
    else if (fs.truncated)
        r.status = Status::inconclusive;
    else
        r.status = Status::no_solution_up_to_bound;
    if (fs.truncated) r.transcript.push_back("branch cap reached; search incomplete");
    (void)m;
}

}  // namespace

std::optional<Witness> verify_candidate(const MasterEquation& m, const RatX& t) {
    if (t.is_zero() || !t.in_local_ring()) return std::nullopt;
    if (!residual(m, t).is_zero()) return std::nullopt;
    Witness w{t, RatX(t.field()), RatX(t.field()), RatX(t.field()), SkewPoly(m.q()), SkewPoly(m.q()),
              TypeTag::Zero, TypeTag::Zero};
    if (m.shape == Shape::left_B1) {
        auto e = eliminate_left_B1(m.h);
        w.a = e.a;
        w.b = e.b(t);
        w.c = e.c(t);
        w.b_prime = e.left_factor(t);
        w.c_prime = e.cofactor(t);
    } else {
        if (!t.is_local_unit()) return std::nullopt;
        auto e = eliminate_right_deg1(m.h);
        w.a = e.a;
        w.b = e.b(t);
        w.c = e.c(t);
        w.b_prime = e.cofactor(t);
        w.c_prime = e.right_factor(t);
    }
    if (!w.b_prime.in_S() || !w.c_prime.in_S()) return std::nullopt;
    if (!(w.b_prime * w.c_prime == m.h)) return std::nullopt;
    w.b_tag = shape_of(w.b_prime);
    w.c_tag = shape_of(w.c_prime);
    return w;
}

FactorReport solve_master(const MasterEquation& m, const CheckConfig& cfg) {
    const Field& f = m.q().field();
    if (is_symbolic(f)) throw std::invalid_argument("solve_master needs a numeric q; symbolic q supports residual checks only");
    if (cfg.degree_bound < 0) throw std::invalid_argument("degree bound must be nonnegative");
    const int N = cfg.degree_bound;

    FactorReport r;
    r.shape = m.shape;
    r.bound = N;
    r.field = f.name() + ", q = " + m.q().to_string();
    r.master = m.to_string();
    lambda_metadata(m, r);
    r.transcript.push_back("search: y = " + std::string(m.shape == Shape::left_B1 ? "t" : "1/t") +
                           " with numerator degree <= " + std::to_string(N) + " and denominator degree <= " +
                           std::to_string(N + 1) + ", every lambda and degree pair");
    if (m.shape == Shape::right_deg1)
        r.regime_flags.push_back("non-invertible t not searched: 1 + t*theta with t(0) = 0 is not of type C");

    if (f.is_finite()) {
        if (f.characteristic() == 2) r.regime_flags.push_back("characteristic 2");
        r.regime_flags.push_back("root-of-unity regime (ord q = " + std::to_string(multiplicative_order(m.q())) +
                                 "): nonexistence argument inapplicable");
        finalize_finite(m, search_field(m, N, cfg.max_branches), r);
        return r;
    }

    // ℚ: refutation modulo primes plus a direct search on determinate branches.
    const std::uint64_t need = 2ull * static_cast<std::uint64_t>(N) + 2;
    struct Job {
        std::uint32_t p;
        MasterEquation mm;
    };
    std::vector<Job> jobs;
    for (auto p : cfg.primes) {
        const std::string tag = "prime " + std::to_string(p) + ": ";
        if (!is_prime(p)) {
            r.transcript.push_back(tag + "skipped, not prime");
            continue;
        }
        const Field& fp = Field::finite(p);
        try {
            Scalar qp = reduce(m.q(), fp);
            if (qp.is_zero()) throw std::domain_error("q vanishes");
            std::uint64_t ord = multiplicative_order(qp);
            if (cfg.filter_primes && ord <= need) {
                r.transcript.push_back(tag + "skipped, ord(q) = " + std::to_string(ord) + " <= " + std::to_string(need));
                continue;
            }
            SkewPoly hp = reduce(m.h, fp);
            jobs.push_back({p, rebuild(m, hp)});
        } catch (const std::exception& e) {
            r.transcript.push_back(tag + "skipped, " + e.what());
        }
    }
    if (jobs.empty()) throw std::invalid_argument("no usable primes for modular certification");

    auto run = [&](const Job& j) { return search_field(j.mm, N, cfg.max_branches); };
    std::vector<FieldSearch> results(jobs.size());
    if (cfg.threads > 1) {
        std::vector<std::future<FieldSearch>> fut;
        for (const auto& j : jobs) fut.push_back(std::async(std::launch::async, run, std::cref(j)));
        for (std::size_t i = 0; i < fut.size(); ++i) results[i] = fut[i].get();
    } else {
        for (std::size_t i = 0; i < jobs.size(); ++i) results[i] = run(jobs[i]);
    }
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        const auto& fs = results[i];
        const bool refuted = fs.solutions.empty() && !fs.truncated;
        if (refuted) r.primes.push_back(jobs[i].p);
        r.transcript.push_back("prime " + std::to_string(jobs[i].p) + ": " + std::to_string(fs.branches) +
                               " branches, " + std::to_string(fs.solutions.size()) + " modular solutions" +
                               (fs.truncated ? ", branch cap reached" : "") + (refuted ? ", refuted" : ""));
        if (!fs.solutions.empty())
            r.regime_flags.push_back("prime " + std::to_string(jobs[i].p) + ": modular solutions within bound (ord q = " +
                                     std::to_string(multiplicative_order(jobs[i].mm.q())) +
                                     "), not used for certification");
    }
    const bool certified = !r.primes.empty() && r.primes.size() >= cfg.min_certifying_primes;

    FieldSearch direct = search_field(m, N, cfg.max_branches);
    r.solutions = direct.solutions;
    for (const auto& w : direct.solutions)
        if (w.is_BC()) {
            r.witness = w;
            break;
        }
    r.transcript.push_back("direct search over Q: " + std::to_string(direct.solutions.size()) + " solutions, " +
                           std::to_string(direct.indeterminate) + " branches with a free coefficient left open");
    if (r.witness)
        r.status = Status::witness_found;
    else if (certified)
        r.status = Status::no_solution_up_to_bound;
    else
        r.status = Status::inconclusive;
    return r;
}

CommutativityReport check_monoid_commutativity(const SkewPoly& c, const SkewPoly& b, const CheckConfig& cfg) {
    if (shape_of(c) != TypeTag::C) throw std::invalid_argument("c must be of type C, got " + to_string(shape_of(c)));
    if (shape_of(b) != TypeTag::B) throw std::invalid_argument("b must be of type B, got " + to_string(shape_of(b)));
    SkewPoly h = c * b;
    if (h.degree() != 3)
        throw std::invalid_argument("only theta-degree 3 products are supported, got " + std::to_string(h.degree()));
    CommutativityReport out{h, {}, {}, Status::inconclusive};
    auto left = eliminate_left_B1(h).master;
    auto right = eliminate_right_deg1(h).master;
    const Field& f = h.field();

    if (is_symbolic(f)) {
        const Scalar q = h.q();
        const RatX X = RatX::x(f);
        auto identity = [&](const MasterEquation& m, const RatX& t) {
            FactorReport r;
            r.shape = m.shape;
            r.bound = cfg.degree_bound;
            r.field = f.name() + ", q = " + q.to_string();
            r.master = m.to_string();
            lambda_metadata(m, r);
            r.transcript.push_back("symbolic q: checking the identity candidate t = " + t.to_string());
            if (f.characteristic() == 2) r.regime_flags.push_back("characteristic 2");
            if (auto w = verify_candidate(m, t)) {
                r.solutions.push_back(*w);
                if (w->is_BC()) r.witness = *w;
            }
            r.status = r.witness ? Status::identity_verified : Status::inconclusive;
            return r;
        };
        out.left = identity(left, (RatX::constant(f.one()) + RatX::constant(q) * X).inverse());
        out.right = identity(right, RatX::constant(f.one()));
        out.overall = out.left.status == Status::identity_verified && out.right.status == Status::identity_verified
                          ? Status::identity_verified
                          : Status::inconclusive;
        return out;
    }

    out.left = solve_master(left, cfg);
    out.right = solve_master(right, cfg);
    if (out.left.status == Status::witness_found || out.right.status == Status::witness_found)
        out.overall = Status::witness_found;
    else if (out.left.status == Status::no_solution_up_to_bound && out.right.status == Status::no_solution_up_to_bound)
        out.overall = Status::no_solution_up_to_bound;
    else
        out.overall = Status::inconclusive;
    return out;
}

}  // namespace ore
