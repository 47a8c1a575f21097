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

#include "ore/presentation.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ore {

namespace {

std::vector<Scalar> sorted(std::vector<Scalar> v) {
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<Scalar> concat(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    std::vector<Scalar> out = a;
    out.insert(out.end(), b.begin(), b.end());
    return sorted(std::move(out));
}

std::string join(const std::vector<Scalar>& v) {
    std::string out = "{";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].expr_string();
    return out + "}";
}

using Multiset = std::map<Scalar, int>;

Multiset count(const std::vector<Scalar>& v) {
    Multiset m;
    for (const auto& x : v) ++m[x];
    return m;
}

void require_monic(const Poly& p, const char* name) {
    if (p.is_zero() || !p.is_monic()) throw std::invalid_argument(std::string(name) + " must be monic");
}

}  // namespace

std::string Presentation::to_string() const {
    return "A0=" + join(A0) + " B0=" + join(B0) + " C=" + join(C) + " D=" + join(D) +
           " f_A=" + f_A.to_string() + " f_B=" + f_B.to_string();
}

Presentation make_presentation(const Scalar& xi, std::vector<Scalar> A0, std::vector<Scalar> B0,
                               std::vector<Scalar> C, std::vector<Scalar> D) {
    const Field& f = xi.field();
    if (xi.is_zero()) throw std::invalid_argument("xi must be nonzero");
    Presentation p{xi, {}, {}, {}, sorted(std::move(A0)), sorted(std::move(B0)), sorted(std::move(C)),
                   sorted(std::move(D)), Poly(f), Poly(f)};
    p.A = concat(p.A0, p.C);
    p.B = concat(p.B0, p.C);
    p.Zg = concat(concat(p.A, p.B0), p.D);
    std::vector<Scalar> ra, rb;
    Scalar xi2 = xi * xi;
    for (const auto& z : p.A) ra.push_back(xi * z);
    for (const auto& z : p.B) rb.push_back(xi2 * z);
    p.f_A = Poly::from_roots(f, ra);
    p.f_B = Poly::from_roots(f, rb);
    return p;
}

std::vector<Presentation> find_presentations(const Poly& f, const Poly& g, const Scalar& xi) {
    require_monic(f, "f");
    require_monic(g, "g");
    if (xi.is_zero()) throw std::invalid_argument("xi must be nonzero");
    RootSplit gs = roots_in_field(g);
    if (gs.remainder.degree() > 0) throw std::domain_error("g = " + g.to_string() + " does not split");
    RootSplit fs = roots_in_field(f);
    if (fs.remainder.degree() > 0) return {};

    const Multiset zg = count(gs.roots);
    const Multiset fr = count(fs.roots);
    const Scalar xi2 = xi * xi;

    // Each distinct root r of f with multiplicity k sends j copies to A (value r/ξ) and k − j
    // copies to B (value r/ξ²).
    std::vector<std::pair<Scalar, int>> roots(fr.begin(), fr.end());
    std::vector<Presentation> out;
    Multiset a_cnt, b_cnt;

    auto emit = [&] {
        // distribute each value's copies: n_C between max(0, a + b − m) and min(a, b)
        std::vector<std::pair<Scalar, int>> values(zg.begin(), zg.end());
        std::vector<int> choice(values.size(), 0);
        std::vector<int> lo(values.size()), hi(values.size());
        for (std::size_t i = 0; i < values.size(); ++i) {
            int a = a_cnt.count(values[i].first) ? a_cnt[values[i].first] : 0;
            int b = b_cnt.count(values[i].first) ? b_cnt[values[i].first] : 0;
            lo[i] = std::max(0, a + b - values[i].second);
            hi[i] = std::min(a, b);
            choice[i] = lo[i];
        }
        for (;;) {
            std::vector<Scalar> A0, B0, C, D;
            for (std::size_t i = 0; i < values.size(); ++i) {
                const Scalar& z = values[i].first;
                int m = values[i].second;
                int a = a_cnt.count(z) ? a_cnt[z] : 0;
                int b = b_cnt.count(z) ? b_cnt[z] : 0;
                int c = choice[i];
                for (int k = 0; k < a - c; ++k) A0.push_back(z);
                for (int k = 0; k < b - c; ++k) B0.push_back(z);
                for (int k = 0; k < c; ++k) C.push_back(z);
                for (int k = 0; k < m - (a + b - c); ++k) D.push_back(z);
            }
            out.push_back(make_presentation(xi, std::move(A0), std::move(B0), std::move(C), std::move(D)));
            std::size_t i = 0;
            while (i < values.size() && choice[i] == hi[i]) choice[i] = lo[i], ++i;
            if (i == values.size()) break;
            ++choice[i];
        }
    };

    auto fits = [&](const Multiset& cnt, const Scalar& z) {
        auto it = zg.find(z);
        return it != zg.end() && cnt.at(z) <= it->second;
    };

    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == roots.size()) {
            emit();
            return;
        }
        const auto& [r, k] = roots[idx];
        Scalar za = r / xi, zb = r / xi2;
        for (int j = 0; j <= k; ++j) {
            a_cnt[za] += j;
            b_cnt[zb] += k - j;
            if ((j == 0 || fits(a_cnt, za)) && (j == k || fits(b_cnt, zb))) self(self, idx + 1);
            a_cnt[za] -= j;
            b_cnt[zb] -= k - j;
            if (a_cnt[za] == 0) a_cnt.erase(za);
            if (b_cnt[zb] == 0) b_cnt.erase(zb);
        }
    };
    rec(rec, 0);

    auto key = [](const Presentation& p) { return std::tie(p.A, p.B, p.C); };
    std::sort(out.begin(), out.end(), [&](const Presentation& x, const Presentation& y) { return key(x) < key(y); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Presentation irreducible_presentation(const Poly& f, const Poly& g, const Scalar& xi) {
    auto all = find_presentations(f, g, xi);
    if (all.empty()) throw std::domain_error("f has no (g, xi)-presentation");
    // canonical order already sorts by (A, B, C); keep the first among the least |C|
    auto best = std::min_element(all.begin(), all.end(), [](const Presentation& x, const Presentation& y) {
        return x.C.size() < y.C.size();
    });
    return *best;
}

bool check_irrepresentation(const Presentation& p) {
    for (const auto& c : p.C)
        if (std::binary_search(p.D.begin(), p.D.end(), c)) return false;
    return true;
}

}  // namespace ore
