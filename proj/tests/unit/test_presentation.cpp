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

#include <doctest.h>

#include "ore/presentation.hpp"
#include "presentation_oracle.hpp"
#include "random.hpp"

using namespace ore;

namespace {

const Field& F13() { return Field::finite(13); }
Scalar e(long v) { return F13().from_int(v); }
std::vector<Scalar> es(std::initializer_list<long> v) {
    std::vector<Scalar> out;
    for (long x : v) out.push_back(e(x));
    return out;
}
Poly roots(std::vector<Scalar> r) { return Poly::from_roots(F13(), r); }

}  // namespace

TEST_CASE("unique presentation over F13") {
    // ξ = 2: ξ·1 = 2 and ξ²·3 = 12
    auto all = find_presentations(roots(es({2, 12})), roots(es({1, 3})), e(2));
    REQUIRE(all.size() == 1);
    CHECK(all[0].A == es({1}));
    CHECK(all[0].B == es({3}));
    CHECK(all[0].C.empty());
    CHECK(all[0].D.empty());
    CHECK(all[0].f_A * all[0].f_B == roots(es({2, 12})));
    auto best = irreducible_presentation(roots(es({2, 12})), roots(es({1, 3})), e(2));
    CHECK(best.C.empty());
}

TEST_CASE("repeated root of g") {
    const Field& Q = Field::rationals();
    Scalar xi = Q.from_int(3), one = Q.one();
    Poly g = Poly::from_roots(Q, std::vector<Scalar>{one, one, one});
    Poly f = Poly::from_roots(Q, std::vector<Scalar>{xi, xi * xi});
    auto all = find_presentations(f, g, xi);
    // A and B each take one copy of 1; they may or may not share it
    REQUIRE(all.size() == 2);
    for (const auto& p : all) {
        CHECK(p.f_A == Poly::from_roots(Q, std::vector<Scalar>{xi}));
        CHECK(p.f_B == Poly::from_roots(Q, std::vector<Scalar>{xi * xi}));
        CHECK(p.A == std::vector<Scalar>{one});
        CHECK(p.B == std::vector<Scalar>{one});
    }
    auto best = irreducible_presentation(f, g, xi);
    CHECK(best.C.empty());
    CHECK(best.D.size() == 1);
    CHECK(check_irrepresentation(best));
}

TEST_CASE("single root of g forces C") {
    Poly g = roots(es({5}));
    Scalar xi = e(2);
    Poly f = roots({xi * e(5), xi * xi * e(5)});
    auto best = irreducible_presentation(f, g, xi);
    CHECK(best.C == es({5}));
    CHECK(check_irrepresentation(best));
}

TEST_CASE("empty root set of f") {
    auto all = find_presentations(Poly::constant(e(1)), roots(es({1, 4})), e(2));
    REQUIRE(all.size() == 1);
    CHECK(all[0].A.empty());
    CHECK(all[0].B.empty());
    CHECK(all[0].D == es({1, 4}));
}

TEST_CASE("violations and errors") {
    CHECK(find_presentations(roots(es({7})), roots(es({1})), e(2)).empty());
    CHECK_THROWS(find_presentations(roots(es({2})), Poly(F13(), {e(2), e(0), e(1)}), e(2)));
    CHECK_THROWS(find_presentations(e(2) * roots(es({2})), roots(es({1})), e(2)));
    CHECK_THROWS(find_presentations(roots(es({2})), roots(es({1})), e(0)));
    CHECK_THROWS(irreducible_presentation(roots(es({7})), roots(es({1})), e(2)));
}

TEST_CASE("hand-built presentation with a C value repeated in D") {
    // g = (X−1)², f = (X−ξ)(X−ξ²): taking both into the same copy leaves the other copy in D
    Scalar xi = e(2);
    Presentation bad = make_presentation(xi, {}, {}, es({1}), es({1}));
    CHECK_FALSE(check_irrepresentation(bad));
    auto all = find_presentations(bad.f_A * bad.f_B, roots(es({1, 1})), xi);
    CHECK(std::find(all.begin(), all.end(), bad) != all.end());
    bool smaller = std::any_of(all.begin(), all.end(), [&](const Presentation& p) { return p.C.size() < bad.C.size(); });
    CHECK(smaller);
    CHECK(check_irrepresentation(make_presentation(xi, es({1}), {}, {}, {})));
}

TEST_CASE("enumeration agrees with the labelled-subset oracle") {
    testing::Gen gen(13);
    for (int t = 0; t < 150; ++t) {
        int s = gen.uniform(1, 5);
        std::vector<Scalar> zg;
        for (int i = 0; i < s; ++i) zg.push_back(i > 0 && gen.coin(0.3) ? zg[static_cast<std::size_t>(gen.uniform(0, i - 1))] : gen.nonzero(F13()));
        Scalar xi = gen.nonzero(F13());
        std::vector<Scalar> froots;
        for (const auto& z : zg) {
            int pick = gen.uniform(0, 3);
            if (pick & 1) froots.push_back(xi * z);
            if (pick & 2) froots.push_back(xi * xi * z);
        }
        if (gen.coin(0.1)) froots.push_back(gen.nonzero(F13()));
        auto expected = testing::brute_presentations(zg, froots, xi);
        auto got = find_presentations(Poly::from_roots(F13(), froots), Poly::from_roots(F13(), zg), xi);
        std::set<testing::Blocks> got_set;
        for (const auto& p : got) {
            got_set.insert(testing::blocks_of(p));
            CHECK(p.f_A * p.f_B == Poly::from_roots(F13(), froots));
        }
        CHECK(got_set == expected);
        CHECK(got_set.size() == got.size());
        if (got.empty()) continue;
        auto best = irreducible_presentation(Poly::from_roots(F13(), froots), Poly::from_roots(F13(), zg), xi);
        std::size_t min_c = 99;
        for (const auto& b : expected) min_c = std::min(min_c, std::get<2>(b).size());
        CHECK(best.C.size() == min_c);
        CHECK(check_irrepresentation(best));
    }
}
