/*
   Copyright 2026 The qumbral Authors

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

#include "doctest.h"
#include "qumbral/verify.hpp"

using namespace qumbral;

TEST_CASE("suite registry") {
    const auto& names = verify::suite_names();
    for (const char* n : {"prop1", "thm2", "lemma3", "thm4", "thm5", "thm6", "eq21", "eq24", "eq28", "eq30", "eq31",
                          "sheffer"}) {
        CHECK(std::find(names.begin(), names.end(), n) != names.end());
    }
    CHECK(verify::suite_defaults("prop1").n_max == 25);
    CHECK(verify::suite_defaults("lemma3").r_max == 4);
    BernoulliCache cache;
    CHECK_THROWS_AS(verify::run_suite("nope", cache, {}), InvalidArgs);
    CHECK_THROWS_AS(verify::run("nope", cache, {}), InvalidArgs);
}

TEST_CASE("classical oracle") {
    CHECK(verify::classical_bernoulli(0) == 1);
    CHECK(verify::classical_bernoulli(1) == Rational(-1, 2));
    CHECK(verify::classical_bernoulli(2) == Rational(1, 6));
    CHECK(verify::classical_bernoulli(12) == Rational(-691, 2730));
    CHECK(verify::classical_bernoulli(20) == Rational(-174611, 330));
    for (std::size_t n = 3; n <= 19; n += 2) CHECK(verify::classical_bernoulli(n) == 0);
}

TEST_CASE("seeded polynomials") {
    std::mt19937_64 a(42), b(42);
    for (int i = 0; i < 5; ++i) CHECK(verify::random_xpoly(a, 6) == verify::random_xpoly(b, 6));
    std::mt19937_64 c(1);
    CHECK(verify::random_xpoly(c, 6).degree() <= 6);
}

TEST_CASE("every suite passes at small bounds") {
    BernoulliCache cache;
    verify::Bounds bounds{5, 2, 7};
    for (const auto& name : verify::suite_names()) {
        CAPTURE(name);
        auto report = verify::run_suite(name, cache, bounds);
        CHECK(report.identity == name);
        CHECK_FALSE(report.cases.empty());
        CHECK(report.pass());
        CHECK(report.passed() == report.cases.size());
        for (std::size_t i = 1; i < report.cases.size(); ++i) CHECK(report.cases[i - 1].key != report.cases[i].key);
    }
    auto thm6 = verify::run_suite("thm6", cache, bounds);
    CHECK(thm6.notes.size() >= 4);
}

TEST_CASE("reports are deterministic") {
    BernoulliCache c1, c2;
    verify::Bounds bounds{4, 2, 99};
    auto a = verify::run("all", c1, bounds), b = verify::run("all", c2, bounds);
    REQUIRE(a.size() == b.size());
    CHECK(a.size() == verify::suite_names().size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].identity == b[i].identity);
        REQUIRE(a[i].cases.size() == b[i].cases.size());
        for (std::size_t k = 0; k < a[i].cases.size(); ++k) CHECK(a[i].cases[k].key == b[i].cases[k].key);
    }
}

TEST_CASE("an empty report passes vacuously") {
    verify::VerifyReport r;
    CHECK(r.pass());
    r.cases.push_back({"x", false, "bad"});
    CHECK_FALSE(r.pass());
    CHECK(r.passed() == 0);
}

TEST_CASE("perturbing a single number fails the full run") {
    for (std::size_t n = 0; n <= 5; ++n) {
        CAPTURE(n);
        BernoulliCache cache;
        cache.perturb_number(n, QRat(1));
        auto reports = verify::run("all", cache, {6, 2, 42});
        bool all = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass(); });
        CHECK_FALSE(all);
    }
}
