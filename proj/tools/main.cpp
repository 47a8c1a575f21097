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

// ore-diamond: command-line front end.
// Exit codes: 0 success or verified, 2 refuted as expected (no solution, not special, refuted
// speciality), 1 errors, failed checks and inconclusive verdicts.

#include <cstdio>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ore/diamond.hpp"
#include "ore/oracle.hpp"
#include "ore/parser_io.hpp"
#include "ore/presentation.hpp"
#include "ore/spectra.hpp"
#include "reproduce.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace ore;

constexpr int exit_ok = 0;
constexpr int exit_error = 1;
constexpr int exit_refuted = 2;

class ConfigError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string field = "q";
    std::string q;
    std::uint32_t characteristic = 0;
    int degree_bound = 2;
    std::string primes = "11,13,19,23";
    std::size_t prec = 12;
    int threads = 1;
    bool json = false;
    std::uint32_t seed = 2026;

    FieldConfig fc;
    std::vector<std::uint32_t> prime_list;

    Json to_json() const {
        Json j;
        j["field"] = field;
        j["q"] = q.empty() ? Json(nullptr) : Json(q);
        j["char"] = characteristic;
        j["resolved_field"] = fc.describe();
        j["degree_bound"] = degree_bound;
        j["primes"] = prime_list;
        j["prec"] = prec;
        j["threads"] = threads;
        j["seed"] = seed;
        j["output"] = json ? "json" : "text";
        return j;
    }
};

std::uint32_t parse_uint(const std::string& s, const char* what) {
    try {
        std::size_t used = 0;
        unsigned long v = std::stoul(s, &used);
        if (used != s.size() || v > 0xFFFFFFFFUL) throw std::invalid_argument(s);
        return static_cast<std::uint32_t>(v);
    } catch (const std::exception&) {
        throw ConfigError(std::string("invalid ") + what + ": '" + s + "'");
    }
}

Scalar parse_q(const std::string& text, const Field& f) {
    Scalar q;
    try {
        q = parse_scalar(text, f);
    } catch (const std::exception& e) {
        throw ConfigError("invalid q '" + text + "' for " + f.name() + ": " + e.what());
    }
    if (q.is_zero()) throw ConfigError("q must be nonzero in " + f.name());
    return q;
}

/// Resolves --field, --q and --char into a FieldConfig and validates the prime list.
void resolve(RunConfig& rc) {
    const std::string& fs = rc.field;
    if (rc.characteristic != 0 && !is_prime(rc.characteristic))
        throw ConfigError("--char must be 0 or a prime, got " + std::to_string(rc.characteristic));
    auto base = [&]() -> const Field& {
        return rc.characteristic == 0 ? Field::rationals() : Field::finite(rc.characteristic);
    };
    if (fs == "q") {
        rc.fc = rc.q.empty() ? FieldConfig::symbolic(rc.characteristic)
                             : FieldConfig{&base(), parse_q(rc.q, base()), QMode::explicit_value};
    } else if (fs.rfind("q:", 0) == 0) {
        if (!rc.q.empty()) throw ConfigError("--q conflicts with --field " + fs);
        rc.fc = FieldConfig{&base(), parse_q(fs.substr(2), base()), QMode::explicit_value};
    } else if (fs.rfind("fp:", 0) == 0 || fs.rfind("gf:", 0) == 0) {
        std::string body = fs.substr(3);
        unsigned m = 1;
        if (auto caret = body.find('^'); caret != std::string::npos) {
            m = parse_uint(body.substr(caret + 1), "extension degree");
            body = body.substr(0, caret);
        }
        std::uint32_t p = parse_uint(body, "field characteristic");
        if (!is_prime(p)) throw ConfigError(std::to_string(p) + " is not prime");
        if (rc.characteristic != 0 && rc.characteristic != p)
            throw ConfigError("--char " + std::to_string(rc.characteristic) + " conflicts with --field " + fs);
        if (m < 1 || m > 20) throw ConfigError("extension degree must be in 1..20");
        const Field& f = Field::finite(p, m);
        Scalar q = rc.q.empty() ? Scalar{} : parse_q(rc.q, f);
        rc.fc = FieldConfig::finite(p, m, q);
    } else {
        throw ConfigError("unknown --field '" + fs + "' (expected q, q:<rational>, fp:<p>, fp:<p>^<m>)");
    }

    rc.prime_list.clear();
    std::stringstream ss(rc.primes);
    for (std::string item; std::getline(ss, item, ',');) {
        if (item.empty()) continue;
        std::uint32_t p = parse_uint(item, "prime");
        if (!is_prime(p)) throw ConfigError(item + " in --primes is not prime");
        if (rc.fc.field->kind() == FieldKind::rationals) {
            try {
                if (reduce(rc.fc.q, Field::finite(p)).is_zero()) throw std::domain_error("q vanishes");
            } catch (const std::exception&) {
                throw ConfigError("prime " + item + " divides the numerator or denominator of q");
            }
        }
        rc.prime_list.push_back(p);
    }
    if (rc.prec < 1) throw ConfigError("--prec must be at least 1");
    if (rc.degree_bound < 0) throw ConfigError("--degree-bound must be nonnegative");
    if (rc.threads < 1) throw ConfigError("--threads must be positive");
}

CheckConfig check_config(const RunConfig& rc) {
    CheckConfig c;
    c.degree_bound = rc.degree_bound;
    c.primes = rc.prime_list;
    c.threads = rc.threads;
    return c;
}

void emit(const RunConfig& rc, const std::string& encoded, const std::string& text) {
    if (rc.json) {
        Json j = Json::parse(encoded);
        j["config"] = rc.to_json();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
    }
}

SkewPoly expr(const RunConfig& rc, const std::string& text) { return parse_skew(text, rc.fc); }

int status_exit(Status s) {
    switch (s) {
        case Status::witness_found:
        case Status::identity_verified: return exit_ok;
        case Status::no_solution_up_to_bound: return exit_refuted;
        case Status::inconclusive: return exit_error;
    }
    return exit_error;
}

std::string join(const std::vector<std::string>& v, const char* sep) {
    std::string out;
    for (const auto& s : v) out += (out.empty() ? "" : sep) + s;
    return out;
}

std::string factor_text(const FactorReport& r) {
    std::string s = to_string(r.shape) + ": " + to_string(r.status) + " (degree bound " + std::to_string(r.bound) +
                    ", " + r.field + ")\n";
    if (!r.master.empty()) s += "  master: " + r.master + "\n";
    if (!r.primes.empty()) {
        std::vector<std::string> ps;
        for (auto p : r.primes) ps.push_back(std::to_string(p));
        s += "  certifying primes: " + join(ps, ", ") + "\n";
    }
    if (r.witness) {
        s += "  witness t = " + r.witness->t.to_string() + "\n";
        s += "    b' = " + print_canonical(r.witness->b_prime) + "  [" + to_string(r.witness->b_tag) + "]\n";
        s += "    c' = " + print_canonical(r.witness->c_prime) + "  [" + to_string(r.witness->c_tag) + "]\n";
    }
    if (!r.solutions.empty()) s += "  verified solutions: " + std::to_string(r.solutions.size()) + "\n";
    if (!r.lambda_branches.empty()) s += "  lambda branches: " + join(r.lambda_branches, "; ") + "\n";
    if (!r.skipped_branches.empty()) s += "  skipped branches: " + join(r.skipped_branches, "; ") + "\n";
    for (const auto& f : r.regime_flags) s += "  flag: " + f + "\n";
    for (const auto& t : r.transcript) s += "  " + t + "\n";
    if (r.truncated_solutions) s += "  truncated solutions: " + std::to_string(r.truncated_solutions) + "\n";
    if (!r.consistent.empty()) {
        std::vector<std::string> cs;
        for (const auto& c : r.consistent) cs.push_back(c.to_string());
        s += "  consistent t: " + join(cs, "; ") + "\n";
    }
    return s;
}

Shape parse_shape(const std::string& s) {
    if (s == "left") return Shape::left_B1;
    if (s == "right") return Shape::right_deg1;
    throw ConfigError("--shape must be left, right or both");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact arithmetic and bounded factorization searches in the skew ring R[theta; X -> qX]",
                 "ore-diamond"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", "ore-diamond 0.1.0");

    RunConfig rc;
    app.add_option("--field", rc.field, "q | q:<rational> | fp:<p> | fp:<p>^<m>")
        ->envname("ORE_DIAMOND_FIELD")
        ->capture_default_str();
    app.add_option("--q", rc.q, "value of q (expression; w is the primitive element of fp:<p>^<m>)")
        ->envname("ORE_DIAMOND_Q");
    app.add_option("--char", rc.characteristic, "characteristic for --field q or q:<r> (0 or a prime)")
        ->envname("ORE_DIAMOND_CHAR")
        ->capture_default_str();
    app.add_option("--degree-bound", rc.degree_bound, "degree bound N of the factorization search")
        ->envname("ORE_DIAMOND_DEGREE_BOUND")
        ->capture_default_str();
    app.add_option("--primes", rc.primes, "comma-separated certification primes")
        ->envname("ORE_DIAMOND_PRIMES")
        ->capture_default_str();
    app.add_option("--prec", rc.prec, "X-adic precision of the truncated oracle")
        ->envname("ORE_DIAMOND_PREC")
        ->capture_default_str();
    app.add_option("--threads", rc.threads, "worker threads for modular searches")
        ->envname("ORE_DIAMOND_THREADS")
        ->capture_default_str();
    app.add_flag("--json", rc.json, "emit JSON")->envname("ORE_DIAMOND_JSON");
    app.add_option("--seed", rc.seed, "random seed")->envname("ORE_DIAMOND_SEED")->capture_default_str();

    std::vector<std::string> operands;
    auto* mul = app.add_subcommand("mul", "product of expressions, left to right");
    mul->add_option("exprs", operands, "expressions")->required()->expected(1, -1);

    std::string a_text, b_text;
    auto binary = [&](const char* name, const char* help) {
        auto* s = app.add_subcommand(name, help);
        s->add_option("a", a_text, "first expression")->required();
        s->add_option("b", b_text, "second expression")->required();
        return s;
    };
    auto* divr = binary("divr", "right division a = quot*b + rem");
    auto* divl = binary("divl", "left division a = b*quot + rem");
    auto* gcrd_cmd = binary("gcrd", "monic greatest common right divisor");
    auto* lclm_cmd = binary("lclm", "monic least common left multiple");

    std::string z_text;
    auto* classify = app.add_subcommand("classify", "normalize an element of S and report its type");
    classify->add_option("z", z_text, "expression")->required();

    std::string f_text, g_text, xi_text = "q";
    bool all_presentations = false;
    auto* present = app.add_subcommand("present", "presentations of f relative to g");
    present->add_option("--f", f_text, "polynomial f in X")->required();
    present->add_option("--g", g_text, "polynomial g in X, split over the field")->required();
    present->add_option("--xi", xi_text, "scalar xi")->capture_default_str();
    present->add_flag("--all", all_presentations, "list every presentation");

    std::string c_text, b2_text, h_text, shape_text = "both";
    int coeff_bound = 3;
    auto* check = app.add_subcommand("check", "monoid commutativity check for c*b = b'*c'");
    check->add_option("--c", c_text, "type C element")->required();
    check->add_option("--b", b2_text, "type B element")->required();

    auto* oracle = app.add_subcommand("oracle", "truncated X-adic oracle over a finite field or modulo --primes");
    oracle->add_option("--element", h_text, "degree-3 element h (alternatively --c and --b)");
    oracle->add_option("--c", c_text, "left factor of h");
    oracle->add_option("--b", b2_text, "right factor of h");
    oracle->add_option("--shape", shape_text, "left | right | both")->capture_default_str();
    oracle->add_option("--coeff-bound", coeff_bound, "degree bound for consistent rational t")->capture_default_str();

    std::string root_text, gen_text;
    bool frobenius = false;
    std::size_t orbit_bound = 50;
    auto* orbit_cmd = app.add_subcommand("orbit", "orbit of a maximal ideal of k[X]");
    orbit_cmd->add_option("--root", root_text, "ideal <X - a>");
    orbit_cmd->add_option("--generator", gen_text, "monic irreducible generator");
    orbit_cmd->add_flag("--frobenius", frobenius, "Frobenius on constants instead of the q-shift");
    orbit_cmd->add_option("--bound", orbit_bound, "maximal number of images")->capture_default_str();

    std::string special_a;
    int special_m = 1;
    unsigned n_max = 50;
    auto* special = app.add_subcommand("special", "smallest n with a*alpha(a)*...*alpha^(n-1)(a) in X^m R");
    special->add_option("--a", special_a, "element a of R")->required();
    special->add_option("--m", special_m, "ideal X^m R")->capture_default_str();
    special->add_option("--n-max", n_max, "search bound")->capture_default_str();

    std::uint32_t fw_p = 2;
    unsigned fw_m = 4;
    std::string candidate;
    std::size_t budget = 1000;
    auto* fw = app.add_subcommand("frobenius-witness", "refute speciality under the Frobenius on constants");
    fw->add_option("--p", fw_p, "prime")->capture_default_str();
    fw->add_option("--m", fw_m, "extension degree")->capture_default_str();
    fw->add_option("--candidate", candidate, "candidate polynomial in X (w for the primitive element)")->required();
    fw->add_option("--budget", budget, "maximal number of orbits")->capture_default_str();

    std::vector<int> only;
    bool quick = false;
    auto* repro = app.add_subcommand("reproduce-paper", "run the acceptance suite and print a pass/fail manifest");
    repro->add_option("--only", only, "criteria to run (1..9)")->delimiter(',');
    repro->add_flag("--quick", quick, "skip the degree-bound-4 extension of the refutation");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_error;
    }

    try {
        resolve(rc);

        if (*mul) {
            SkewPoly p = expr(rc, operands.front());
            for (std::size_t i = 1; i < operands.size(); ++i) p = skew_mul(p, expr(rc, operands[i]));
            emit(rc, encode_json(p), print_canonical(p));
            return exit_ok;
        }
        if (*divr || *divl) {
            SkewPoly a = expr(rc, a_text), b = expr(rc, b_text);
            SkewDivMod d = *divr ? right_divide(a, b) : left_divide(a, b);
            emit(rc, encode_json(d), "quot: " + print_canonical(d.quot) + "\nrem:  " + print_canonical(d.rem));
            return exit_ok;
        }
        if (*gcrd_cmd || *lclm_cmd) {
            SkewPoly a = expr(rc, a_text), b = expr(rc, b_text);
            SkewPoly r = *gcrd_cmd ? gcrd(a, b) : lclm(a, b);
            emit(rc, encode_json(r), print_canonical(r));
            return exit_ok;
        }
        if (*classify) {
            auto c = normalize_and_classify(expr(rc, z_text));
            emit(rc, encode_json(c),
                 "type: " + to_string(c.tag) + "\nunit: " + c.unit.to_string() + "\nnormalized: " +
                     print_canonical(c.z_norm));
            return exit_ok;
        }
        if (*present) {
            RatX f = parse_ratx(f_text, rc.fc), g = parse_ratx(g_text, rc.fc);
            if (!f.is_polynomial() || !g.is_polynomial()) throw ConfigError("f and g must be polynomials");
            Scalar xi = parse_scalar(xi_text == "q" ? rc.fc.q.expr_string() : xi_text, *rc.fc.field);
            auto all = find_presentations(f.num().monic(), g.num().monic(), xi);
            std::string text;
            if (all.empty()) {
                text = "no presentation\n";
            } else {
                auto best = irreducible_presentation(f.num().monic(), g.num().monic(), xi);
                text = std::to_string(all.size()) + " presentation(s)\nirreducible: " + best.to_string() +
                       "\nirrepresentation: " + (check_irrepresentation(best) ? "holds" : "fails") + "\n";
                if (all_presentations)
                    for (const auto& p : all) text += "  " + p.to_string() + "\n";
            }
            emit(rc, encode_json(all), text);
            return all.empty() ? exit_refuted : exit_ok;
        }
        if (*check) {
            auto rep = check_monoid_commutativity(expr(rc, c_text), expr(rc, b2_text), check_config(rc));
            emit(rc, encode_json(rep),
                 "h = " + print_canonical(rep.h) + "\noverall: " + to_string(rep.overall) + "\n" +
                     factor_text(rep.left) + factor_text(rep.right));
            return status_exit(rep.overall);
        }
        if (*oracle) {
            SkewPoly h = !h_text.empty() ? expr(rc, h_text)
                         : (!c_text.empty() && !b2_text.empty())
                             ? expr(rc, c_text) * expr(rc, b2_text)
                             : throw ConfigError("oracle needs --element or both --c and --b");
            std::vector<Shape> shapes;
            if (shape_text == "both") shapes = {Shape::left_B1, Shape::right_deg1};
            else shapes = {parse_shape(shape_text)};
            std::vector<std::pair<std::string, SkewPoly>> targets;
            if (rc.fc.field->is_finite()) {
                targets.emplace_back(rc.fc.field->name(), h);
            } else if (rc.fc.q_mode == QMode::explicit_value) {
                for (auto p : rc.prime_list) targets.emplace_back("F" + std::to_string(p), reduce(h, Field::finite(p)));
            } else {
                throw ConfigError("the oracle needs an explicit q");
            }
            Json reports = Json::array();
            std::string text;
            Status worst = Status::no_solution_up_to_bound;
            bool any_witness = false;
            for (const auto& [name, hp] : targets) {
                for (Shape s : shapes) {
                    auto r = truncated_oracle(hp, s, rc.prec, coeff_bound);
                    Json e = Json::parse(encode_json(r))["report"];
                    e["modulus"] = name;
                    reports.push_back(e);
                    text += "[" + name + "] " + factor_text(r);
                    if (r.status == Status::witness_found) any_witness = true;
                    if (r.status == Status::inconclusive) worst = Status::inconclusive;
                }
            }
            Json doc;
            doc["schema_version"] = json_schema_version;
            doc["kind"] = "oracle";
            doc["prec"] = rc.prec;
            doc["coeff_bound"] = coeff_bound;
            doc["reports"] = reports;
            emit(rc, doc.dump(), text);
            if (worst == Status::inconclusive) return exit_error;
            return any_witness ? exit_ok : exit_refuted;
        }
        if (*orbit_cmd) {
            Automorphism al = frobenius ? Automorphism::frobenius() : Automorphism::shift(rc.fc.q);
            if (!root_text.empty() == !gen_text.empty()) throw ConfigError("orbit needs exactly one of --root, --generator");
            auto make = [&] {
                if (!root_text.empty()) return MaxIdeal::from_root(parse_scalar(root_text, *rc.fc.field), al);
                RatX g = parse_ratx(gen_text, rc.fc);
                if (!g.is_polynomial()) throw ConfigError("generator must be a polynomial");
                return MaxIdeal::from_generator(g.num(), al);
            };
            MaxIdeal m = make();
            auto r = orbit(m, orbit_bound);
            std::string text = r.representative.to_string() + " under " + al.to_string() + ": " + r.status() + "\n";
            for (const auto& e : r.elements) text += "  " + e.to_string() + "\n";
            emit(rc, encode_json(r), text);
            return exit_ok;
        }
        if (*special) {
            if (rc.fc.q_mode != QMode::explicit_value && rc.fc.field->kind() != FieldKind::rational_functions)
                throw ConfigError("special needs a q");
            auto r = is_special_for(parse_ratx(special_a, rc.fc), special_m, n_max, rc.fc.q);
            emit(rc, encode_json(r), r.to_string());
            return r.special ? exit_ok : exit_refuted;
        }
        if (*fw) {
            if (!is_prime(fw_p)) throw ConfigError("--p must be prime");
            auto cfg = FieldConfig::finite(fw_p, fw_m);
            RatX c = parse_ratx(candidate, cfg);
            if (!c.is_polynomial()) throw ConfigError("candidate must be a polynomial");
            auto ev = frobenius_nonspecial_witness(fw_p, fw_m, c.num(), budget);
            std::string text = std::string(ev.refuted ? "refuted" : "not refuted") + ": " + ev.summary + "\n";
            for (const auto& l : ev.orbit_lines) text += "  " + l + "\n";
            emit(rc, encode_json(ev), text);
            return ev.refuted ? exit_refuted : exit_ok;
        }
        if (*repro) {
            reproduce::Options opts;
            opts.seed = rc.seed;
            opts.threads = rc.threads;
            opts.extended = !quick;
            opts.only = only;
            // --field q --char 2 asks for the characteristic-2 identities only
            if (opts.only.empty() && rc.characteristic == 2) opts.only = {2};
            auto results = reproduce::run(opts);
            std::string text;
            bool all = true;
            for (const auto& r : results) {
                text += r.line() + "\n";
                for (const auto& f : r.failures) text += "    failure: " + f + "\n";
                for (const auto& n : r.notes) text += "    note: " + n + "\n";
                all = all && r.pass;
            }
            emit(rc, reproduce::manifest_json(results, opts), text);
            return all ? exit_ok : exit_error;
        }
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return exit_error;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_error;
    }
    return exit_error;
}
