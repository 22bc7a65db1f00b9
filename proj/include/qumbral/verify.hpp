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

#ifndef QUMBRAL_VERIFY_HPP
#define QUMBRAL_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qumbral/qbernoulli.hpp"

namespace qumbral::verify {

struct Bounds {
    // Unset fields fall back to each suite's own default range.
    std::optional<std::size_t> n_max;
    std::optional<std::size_t> r_max;
    std::uint64_t seed = 42;
};

struct CaseResult {
    std::string key;
    bool pass = false;
    std::string detail;  // empty on pass
};

struct VerifyReport {
    std::string identity;
    std::string ranges;
    std::vector<CaseResult> cases;
    std::vector<std::string> notes;
    double wall_seconds = 0.0;

    // True iff every case passes; an empty range passes vacuously.
    bool pass() const;
    std::size_t passed() const;
};

struct SuiteDefaults {
    std::size_t n_max;
    std::size_t r_max;
};

// Suite names accepted by run_suite, in run order.
const std::vector<std::string>& suite_names();
SuiteDefaults suite_defaults(const std::string& name);

// Throws InvalidArgs for an unknown suite name.
VerifyReport run_suite(const std::string& name, BernoulliCache& cache, const Bounds& bounds);
// "all" expands to every suite.
std::vector<VerifyReport> run(const std::string& name, BernoulliCache& cache, const Bounds& bounds);

// Classical Bernoulli numbers (B_1 = -1/2) from
//   sum_{k<=n} binom(n+1, k) B_k = 0 for n >= 1.
Rational classical_bernoulli(std::size_t n);

// Polynomial of exact degree `degree` whose coefficients are polynomials in
// q of degree <= 2 with integer coefficients in [-height, height]. With
// rational_coeffs, some coefficients get a small denominator in q.
XPoly random_xpoly(std::mt19937_64& rng, std::size_t degree, int height = 3, bool rational_coeffs = false);

}  // namespace qumbral::verify

#endif
