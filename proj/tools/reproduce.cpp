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

#include "reproduce.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <set>

#include "json.hpp"
#include "ore/diamond.hpp"
#include "ore/oracle.hpp"
#include "ore/parser_io.hpp"
#include "ore/presentation.hpp"
#include "ore/spectra.hpp"
#include "plant.hpp"
#include "presentation_oracle.hpp"
#include "random.hpp"

namespace ore::reproduce {

namespace {

constexpr std::size_t max_failures = 10;

/// Collects failed checks for one criterion.
class Checker {
   public:
    explicit Checker(CriterionResult& r) : r_(r) {}

    bool operator()(bool ok, const std::string& what) {
        ++checks_;
        if (!ok) {
            ++failed_;
            if (r_.failures.size() < max_failures) r_.failures.push_back(what);
        }
        return ok;
    }
    void note(std::string s) { r_.notes.push_back(std::move(s)); }
    std::size_t checks() const { return checks_; }
    std::size_t failed() const { return failed_; }

   private:
    CriterionResult& r_;
    std::size_t checks_ = 0;
    std::size_t failed_ = 0;
};

struct Ring {
    const Field& f;
    Scalar q;
    RatX X;
    explicit Ring(const FieldConfig& cfg) : f(*cfg.field), q(cfg.q), X(RatX::x(*cfg.field)) {}
    RatX c(long v) const { return RatX::constant(f.from_int(v)); }
    RatX s(const Scalar& v) const { return RatX::constant(v); }
    SkewPoly sp(std::vector<RatX> cs) const { return SkewPoly(q, std::move(cs)); }
    /// 1 + X + θ + Xθ²
    SkewPoly v() const { return sp({c(1) + X, c(1), X}); }
    /// 1 − X + Xθ
    SkewPoly w() const { return sp({c(1) - X, X}); }
};

std::string plural(std::size_t n, const char* what) { return std::to_string(n) + " " + what; }

// 1. expansion of v·w over ℚ(q)
void expansion(Checker& check, const Options&) {
    Ring r(FieldConfig::symbolic(0));
    RatX q = r.s(r.q), X = r.X, one = r.c(1);
    SkewPoly h = skew_mul(r.v(), r.w());
    check(h.degree() == 3, "degree of the product is 3");
    check(h.coeff(0) == one - X * X, "theta^0 coefficient 1 - X^2");
    check(h.coeff(1) == one - q * X + X + X * X, "theta^1 coefficient 1 - qX + X + X^2");
    check(h.coeff(2) == q * X + (one - q * q * X) * X, "theta^2 coefficient qX + (1 - q^2 X)X");
    check(h.coeff(3) == q * q * X * X, "theta^3 coefficient q^2 X^2");
    check(parse_skew("(1+X+theta+X*theta^2)*(1-X+X*theta)", FieldConfig::symbolic(0)) == h,
          "parsed expression equals the product");
}

// 2. the two characteristic-2 identities over 𝔽₂(q)
void char2(Checker& check, const Options&) {
    Ring r(FieldConfig::symbolic(2));
    RatX q = r.s(r.q), X = r.X, one = r.c(1);
    SkewPoly h = r.v() * r.w();

    SkewPoly right_factor = r.sp({one, one});
    SkewPoly right_cofactor = r.sp({one + X * X, (one + q) * X, q * q * X * X});
    check(right_cofactor * right_factor == h, "(1+X^2)+(1+q)X theta+q^2X^2 theta^2 times (1+theta) equals h");
    auto rd = right_divide(h, right_factor);
    check(rd.rem.is_zero(), "right division by 1+theta leaves no remainder");
    check(rd.quot == right_cofactor, "right quotient is the stated cofactor");

    SkewPoly left_factor = r.sp({one, X / (one + q * X)});
    SkewPoly left_cofactor = r.sp({one + X * X, one + q * X + (one + q) * X * X, q * X * (X + one)});
    check(left_factor.in_S(), "1 + X(1+qX)^-1 theta lies in S");
    check(left_factor * left_cofactor == h, "left factor times stated cofactor equals h");
    auto ld = left_divide(h, left_factor);
    check(ld.rem.is_zero(), "left division by 1 + X(1+qX)^-1 theta leaves no remainder");
    check(ld.quot == left_cofactor, "left quotient is the stated cofactor");
}

// 3. master equations of both ansätze for v·w over ℚ(q)
void masters(Checker& check, const Options& opts) {
    Ring r(FieldConfig::symbolic(0));
    const Field& f = r.f;
    const Scalar& qs = r.q;
    RatX q = r.s(qs), X = r.X, one = r.c(1);
    SkewPoly h = r.v() * r.w();

    auto el = eliminate_left_B1(h);
    const auto& m = el.master;
    check(m.c[0] == -q, "reduced equation: constant -q");
    check(m.c[1] == one + q - q * q * q * X, "reduced equation: coefficient of t is 1+q-q^3X");
    check(m.c[2] == -(one + (one - q) * q * q * X + q * q * q * q * X * X),
          "reduced equation: coefficient of t alpha(t) is -(1+(1-q)q^2X+q^4X^2)");
    check(m.c[3] == q * q * X * (one - q * q * q * q * q * q * X * X),
          "reduced equation: coefficient of t alpha(t) alpha^2(t) is q^2X(1-q^6X^2)");

    // t = λ f/g cleared of denominators, against the hand-expanded polynomial
    testing::Gen gen(opts.seed);
    auto a1 = [&](const Poly& p) { return alpha(p, qs, 1); };
    auto a2 = [&](const Poly& p) { return alpha(p, qs, 2); };
    auto cst = [&](const Scalar& s) { return Poly::constant(s); };
    Poly Xp = Poly::variable(f);
    for (int i = 0; i < 8; ++i) {
        Scalar lambda = gen.nonzero(f);
        Poly fp = gen.nonzero_poly(f, 2), g = gen.nonzero_poly(f, 3);
        Poly expected =
            cst(-qs) * g * a1(g) * a2(g) +
            cst(lambda) * (cst(f.one() + qs) - cst(qs.pow(3)) * Xp) * fp * a1(g) * a2(g) -
            cst(lambda * lambda) * (cst(f.one()) + cst((f.one() - qs) * qs.pow(2)) * Xp + cst(qs.pow(4)) * Xp * Xp) *
                fp * a1(fp) * a2(g) +
            cst(lambda.pow(3)) * cst(qs.pow(2)) * Xp * (cst(f.one()) - cst(qs.pow(6)) * Xp * Xp) * fp * a1(fp) * a2(fp);
        check(cleared_identity(m, lambda, fp, g) == expected, "cleared identity for sample " + std::to_string(i));
    }

    Poly t0 = constant_term_polynomial(m);
    check(t0 == Poly(f, {-qs, f.one() + qs, -f.one()}), "X^0 specialization is -q + (1+q)y - y^2");
    check(t0.eval(f.one()).is_zero() && t0.eval(qs).is_zero() && t0.degree() == 2,
          "X^0 specialization has solution set {1, q}");

    auto er = eliminate_right_deg1(h);
    const auto& mr = er.master;
    check(mr.c[3] == q * q * X * X && mr.c[2] == -(X * (one + q - q * q * X)) &&
              mr.c[1] == one - q * X + X + X * X && mr.c[0] == -(one - X * X),
          "right ansatz reproduces q^2X^2 u alpha(u) alpha^2(u) = (1-X^2) + X(1+q-q^2X) u alpha(u) - (1-qX+X+X^2) u");
    Poly lb = leading_branch_polynomial(mr);
    Poly lb_expected = Poly(f, {f.one(), f.one()}) * Poly(f, {f.one(), f.zero(), qs.pow(2)});
    check(lb.monic() == lb_expected.monic(), "right leading branch constraint is (lambda+1)(q^2 lambda^2+1) up to a unit");
    check(constant_term_polynomial(mr) == Poly(f, {-f.one(), f.one()}), "right X^0 constraint forces u(0) = 1");
}

// 4. 1 + q²λ + q²λ² + q⁴λ³ = (λ + q⁻²)(q⁴λ² + q²)
void leading_identity(Checker& check, const Options&) {
    Ring r(FieldConfig::symbolic(0));
    const Field& f = r.f;
    const Scalar& q = r.q;
    Poly lhs(f, {f.one(), q.pow(2), q.pow(2), q.pow(4)});
    Poly rhs = Poly(f, {q.pow(-2), f.one()}) * Poly(f, {q.pow(2), f.zero(), q.pow(4)});
    check(lhs == rhs, "identity holds in Q(q)[lambda]");
    const Field& Q = Field::rationals();
    for (long k : {-3L, -1L, 2L, 5L, 7L}) {
        // λ numeric, q numeric: exact rational arithmetic
        for (long qv : {2L, 3L}) {
            mpq_class lv(k, 3);
            lv.canonicalize();
            Scalar lam = Q.from_rational(lv), qq = Q.from_int(qv);
            Scalar a = Q.one() + qq.pow(2) * lam + qq.pow(2) * lam * lam + qq.pow(4) * lam.pow(3);
            Scalar b = (lam + qq.pow(-2)) * (qq.pow(4) * lam * lam + qq.pow(2));
            check(a == b, "sample lambda = " + std::to_string(k) + "/3, q = " + std::to_string(qv));
        }
    }
    Poly l = leading_branch_polynomial(eliminate_left_B1(r.v() * r.w()).master);
    check(l.monic() == lhs.monic(), "left leading branch polynomial is proportional to the identity's left side");
}

// 5. bounded, certified refutation for q = 2 over ℚ
void refutation(Checker& check, const Options& opts) {
    Ring r(FieldConfig::rationals(2));
    const std::uint32_t qv = 2;
    auto ord = [&](std::uint32_t p) { return multiplicative_order(Field::finite(p).from_int(qv)); };

    struct Run {
        int bound;
        std::vector<std::uint32_t> primes;
    };
    std::vector<Run> runs = {{2, {11, 13, 19, 23}}};
    if (opts.extended) runs.push_back({4, {11, 13, 19, 23, 29, 37}});
    for (const auto& run : runs) {
        const std::string tag = "N=" + std::to_string(run.bound) + ": ";
        CheckConfig cfg;
        cfg.degree_bound = run.bound;
        cfg.primes = run.primes;
        cfg.threads = opts.threads;
        auto rep = check_monoid_commutativity(r.v(), r.w(), cfg);
        check(rep.overall == Status::no_solution_up_to_bound, tag + "overall status " + to_string(rep.overall));
        std::vector<std::uint32_t> certified;
        for (const auto* fr : {&rep.left, &rep.right}) {
            const std::string side = tag + to_string(fr->shape) + ": ";
            check(fr->status == Status::no_solution_up_to_bound, side + "status " + to_string(fr->status));
            check(fr->primes.size() >= 3, side + plural(fr->primes.size(), "certifying primes"));
            for (auto p : fr->primes)
                check(ord(p) > static_cast<std::uint64_t>(run.bound) + 4,
                      side + "ord(2 mod " + std::to_string(p) + ") = " + std::to_string(ord(p)));
            std::string ps;
            for (auto p : fr->primes) ps += (ps.empty() ? "" : ",") + std::to_string(p);
            check.note(side + to_string(fr->status) + " certified by {" + ps + "}");
        }
        for (auto p : rep.left.primes)
            if (std::find(rep.right.primes.begin(), rep.right.primes.end(), p) != rep.right.primes.end())
                certified.push_back(p);
        check(certified.size() >= 3, tag + "fewer than 3 primes certify both ansaetze");

        // truncated oracle at precision 12 over the certifying primes
        for (auto p : certified) {
            SkewPoly hp = reduce(r.v() * r.w(), Field::finite(p));
            for (Shape s : {Shape::left_B1, Shape::right_deg1}) {
                auto o = truncated_oracle(hp, s, 12, 3);
                const std::string where = tag + "oracle " + to_string(s) + " mod " + std::to_string(p) + ": ";
                check(o.status == Status::no_solution_up_to_bound, where + to_string(o.status));
                check(o.consistent.empty(), where + plural(o.consistent.size(), "consistent truncations"));
                if (run.bound == 2)
                    check.note(where + plural(o.truncated_solutions, "truncated series") + ", " +
                               plural(o.consistent.size(), "admissible consistent"));
            }
        }
    }
}

// 6. planted factorizations are recovered
void plant_recover(Checker& check, const Options& opts) {
    testing::Gen gen(opts.seed);
    CheckConfig cfg;
    cfg.degree_bound = 1;
    cfg.threads = opts.threads;
    std::size_t left = 0, right = 0;
    for (unsigned p : {11u, 13u}) {
        Scalar q = Field::finite(p).from_int(2);
        for (int i = 0; i < 25; ++i) {
            auto pl = testing::plant_left(gen, q, 1);
            auto rl = solve_master(eliminate_left_B1(pl.h).master, cfg);
            bool ok = rl.witness && rl.witness->b_prime * rl.witness->c_prime == pl.h &&
                      std::any_of(rl.solutions.begin(), rl.solutions.end(), [&](const Witness& w) { return w.t == pl.t; });
            left += check(ok, "left plant over F" + std::to_string(p) + " #" + std::to_string(i) + ": h = " + pl.h.to_string());
            auto pr = testing::plant_right(gen, q, 1);
            auto rr = solve_master(eliminate_right_deg1(pr.h).master, cfg);
            ok = rr.witness && rr.witness->b_prime * rr.witness->c_prime == pr.h &&
                 std::any_of(rr.solutions.begin(), rr.solutions.end(), [&](const Witness& w) { return w.t == pr.t; });
            right += check(ok, "right plant over F" + std::to_string(p) + " #" + std::to_string(i) + ": h = " + pr.h.to_string());
        }
    }
    check.note("recovered " + std::to_string(left) + "/50 left and " + std::to_string(right) + "/50 right");
}

// 7. Euclidean property suite
void euclid(Checker& check, const Options& opts) {
    testing::Gen gen(opts.seed);
    std::size_t trials = 0;
    for (auto [field, count] : {std::pair{&Field::finite(7), 700}, {&Field::rationals(), 300}}) {
        Scalar q = field->from_int(field->is_finite() ? 3 : 2);
        const int xd = field->is_finite() ? 2 : 1;
        for (int t = 0; t < count; ++t, ++trials) {
            SkewPoly a = gen.nonzero_skew(q, 4, xd), b = gen.nonzero_skew(q, 3, xd);
            const std::string tag = field->name() + " trial " + std::to_string(t) + ": ";
            auto rd = right_divide(a, b);
            check(rd.quot * b + rd.rem == a, tag + "right division round trip");
            check(rd.rem.degree() < b.degree(), tag + "right remainder degree");
            auto ld = left_divide(a, b);
            check(b * ld.quot + ld.rem == a, tag + "left division round trip");
            check(ld.rem.degree() < b.degree(), tag + "left remainder degree");
            SkewPoly g = gcrd(a, b), l = lclm(a, b);
            check(right_divide(a, g).rem.is_zero() && right_divide(b, g).rem.is_zero(), tag + "gcrd divides both");
            check(right_divide(l, a).rem.is_zero() && right_divide(l, b).rem.is_zero(), tag + "lclm is a common multiple");
            check(l.degree() == a.degree() + b.degree() - g.degree(), tag + "deg lclm = deg a + deg b - deg gcrd");
        }
    }
    check.note(plural(trials, "random pairs"));
}

// 8. presentations over 𝔽₁₃ with ξ = q = 2
void presentations(Checker& check, const Options& opts) {
    const Field& f = Field::finite(13);
    Scalar xi = f.from_int(2);
    testing::Gen gen(opts.seed);
    for (int t = 0; t < 100; ++t) {
        const std::string tag = "construction " + std::to_string(t) + ": ";
        int s = gen.uniform(1, 5);
        std::vector<Scalar> zg;
        for (int i = 0; i < s; ++i)
            zg.push_back(i > 0 && gen.coin(0.3) ? zg[static_cast<std::size_t>(gen.uniform(0, i - 1))] : gen.nonzero(f));
        std::vector<Scalar> froots, A0, B0, C, D;
        for (const auto& z : zg) {
            int pick = gen.uniform(0, 3);
            if (pick & 1) froots.push_back(xi * z);
            if (pick & 2) froots.push_back(xi * xi * z);
            (pick == 3 ? C : pick == 1 ? A0 : pick == 2 ? B0 : D).push_back(z);
        }
        for (auto* v : {&A0, &B0, &C, &D}) std::sort(v->begin(), v->end());
        Poly fp = Poly::from_roots(f, froots), g = Poly::from_roots(f, zg);
        auto got = find_presentations(fp, g, xi);
        testing::Blocks planted{A0, B0, C, D};
        check(std::any_of(got.begin(), got.end(), [&](const Presentation& p) { return testing::blocks_of(p) == planted; }),
              tag + "planted assignment not recovered");
        auto expected = testing::brute_presentations(zg, froots, xi);
        std::set<testing::Blocks> got_set;
        for (const auto& p : got) got_set.insert(testing::blocks_of(p));
        check(got_set == expected, tag + "enumeration differs from exhaustive search");
        auto best = irreducible_presentation(fp, g, xi);
        std::size_t min_c = SIZE_MAX;
        for (const auto& b : expected) min_c = std::min(min_c, std::get<2>(b).size());
        check(best.C.size() == min_c, tag + "irreducible presentation does not minimize |C|");
        check(check_irrepresentation(best), tag + "irrepresentation fails on the minimizer");
    }
    // degenerate example: g = (X−1)³, f = (X−ξ)(X−ξ²)
    Scalar one = f.one();
    auto all = find_presentations(Poly::from_roots(f, std::vector<Scalar>{xi, xi * xi}),
                                  Poly::from_roots(f, std::vector<Scalar>{one, one, one}), xi);
    check(all.size() >= 2, "degenerate example has several (A, B)");
    bool same = !all.empty();
    for (const auto& p : all) same = same && p.f_A == all.front().f_A && p.f_B == all.front().f_B;
    check(same, "degenerate example: f_A and f_B agree across presentations");
    check.note("degenerate example: " + plural(all.size(), "presentations"));
}

/// Minimal polynomial degree over 𝔽₂ by linear dependence of powers.
unsigned min_poly_degree_gf2(const Field& f, const Scalar& a) {
    std::vector<std::uint32_t> basis;
    Scalar pw = f.one();
    for (unsigned d = 0;; ++d) {
        std::uint32_t v = 0;
        auto dg = f.digits(pw.code());
        for (std::size_t i = 0; i < dg.size(); ++i) v |= dg[i] << i;
        for (auto b : basis)
            if ((v ^ b) < v) v ^= b;
        if (v == 0) return d;
        basis.push_back(v);
        std::sort(basis.rbegin(), basis.rend());
        pw = pw * a;
    }
}

// 9. spectra
void spectra(Checker& check, const Options& opts) {
    std::size_t elems = 0;
    for (unsigned m = 1; m <= 6; ++m) {
        const Field& f = Field::finite(2, m);
        for (const auto& a : f.elements()) {
            auto r = orbit(MaxIdeal::from_root(a, Automorphism::frobenius()), 64);
            check(r.finite && r.size == min_poly_degree_gf2(f, a),
                  "orbit of " + a.to_string() + " has status " + r.status());
            ++elems;
        }
    }
    check.note(plural(elems, "field elements checked against minimal-polynomial degrees"));

    const Field& f16 = Field::finite(2, 4);
    testing::Gen gen(opts.seed);
    for (int i = 0; i < 20; ++i) {
        Poly c = gen.nonzero_poly(f16, 3);
        auto ev = frobenius_nonspecial_witness(2, 4, c, 100);
        check(ev.refuted && ev.orbits > static_cast<std::size_t>(c.degree()), "candidate " + c.to_string() + " not refuted");
    }

    const Field& Q = Field::rationals();
    auto shift = Automorphism::shift(Q.from_int(2));
    check(orbit(MaxIdeal::from_root(Q.one(), shift), 50).status() == "exceeded(50)", "<X-1> must exceed bound 50");
    check(orbit(MaxIdeal::from_root(Q.zero(), shift), 50).status() == "finite(1)", "<X> must be finite(1)");
    for (int m = 1; m <= 10; ++m)
        check(is_special_for(RatX::x(Q), m, 50, Q.from_int(2)).to_string() == "yes(" + std::to_string(m) + ")",
              "is_special_for(X, " + std::to_string(m) + ")");
}

struct Entry {
    const char* title;
    double budget;
    void (*fn)(Checker&, const Options&);
};

const Entry entries[criterion_count] = {
    {"product expansion over Q(q)", 1, expansion},
    {"characteristic-2 identities over F2(q)", 1, char2},
    {"master equations of both ansaetze", 0, masters},
    {"leading-coefficient identity", 0, leading_identity},
    {"bounded certified refutation for q = 2 over Q", 60, refutation},
    {"plant and recover over F11 and F13", 0, plant_recover},
    {"Euclidean property suite", 0, euclid},
    {"presentation suite over F13", 0, presentations},
    {"spectra", 10, spectra},
};

}  // namespace

std::string CriterionResult::line() const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", seconds);
    std::string s = "criterion " + std::to_string(id) + ": " + (pass ? "PASS " : "FAIL ") + title + " (" + buf + " s)";
    if (!summary.empty()) s += " " + summary;
    return s;
}

CriterionResult run_criterion(int id, const Options& opts) {
    if (id < 1 || id > criterion_count) throw std::out_of_range("criterion " + std::to_string(id) + " does not exist");
    const Entry& e = entries[id - 1];
    CriterionResult r;
    r.id = id;
    r.title = e.title;
    r.budget = e.budget;
    Checker check(r);
    auto start = std::chrono::steady_clock::now();
    try {
        e.fn(check, opts);
    } catch (const std::exception& ex) {
        check(false, std::string("exception: ") + ex.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = r.budget == 0 || r.seconds < r.budget;
    if (!in_time) r.failures.push_back("runtime exceeds the " + std::to_string(static_cast<int>(r.budget)) + " s budget");
    r.pass = check.failed() == 0 && in_time;
    r.summary = "[" + std::to_string(check.checks() - check.failed()) + "/" + std::to_string(check.checks()) + " checks]";
    return r;
}

std::vector<CriterionResult> run(const Options& opts) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= criterion_count; ++id)
        if (opts.only.empty() || std::find(opts.only.begin(), opts.only.end(), id) != opts.only.end())
            out.push_back(run_criterion(id, opts));
    return out;
}

std::string manifest_json(const std::vector<CriterionResult>& results, const Options& opts) {
    nlohmann::ordered_json j;
    j["schema_version"] = json_schema_version;
    j["kind"] = "reproduce_manifest";
    j["seed"] = opts.seed;
    j["extended"] = opts.extended;
    bool all = true;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : results) {
        all = all && r.pass;
        nlohmann::ordered_json e;
        e["id"] = r.id;
        e["title"] = r.title;
        e["pass"] = r.pass;
        e["failures"] = r.failures;
        e["notes"] = r.notes;
        arr.push_back(e);
    }
    j["all_pass"] = all;
    j["criteria"] = arr;
    return j.dump(2);
}

}  // namespace ore::reproduce
