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

#ifndef QUMBRAL_CLI_HPP
#define QUMBRAL_CLI_HPP

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "qumbral/qbernoulli.hpp"
#include "qumbral/verify.hpp"

namespace qumbral::cli {

enum class OutputFormat { human, json, csv, latex };

// Throws InvalidArgs on an unknown name.
OutputFormat parse_format(const std::string& name);

// Degree/index ceiling guarding against expression swell. Raising a bound
// past degree_cap needs force.
struct Limits {
    std::size_t degree_cap = 64;
    bool force = false;

    // Throws CapExceeded when n > degree_cap and !force.
    void check(std::size_t n, const std::string& what) const;
};

enum class TableKind { number, poly, higher_number, higher_poly };

TableKind parse_table_kind(const std::string& name);

std::string cmd_table(TableKind kind, std::size_t n_max, std::optional<std::size_t> r, OutputFormat format,
                      const Limits& limits, BernoulliCache& cache);

// A named quantity such as "bernoulli:3" or "higher_poly:4:2".
using Quantity = std::variant<QRat, XPoly>;
Quantity parse_quantity(const std::string& text, const Limits& limits, BernoulliCache& cache);

// Inline literal [[num_coeffs, den_coeffs], ...] (ascending powers of x),
// a {"coeffs": [...]} JSON document, or a named polynomial quantity.
XPoly parse_poly(const std::string& text, const Limits& limits, BernoulliCache& cache);

struct ExpandOutcome {
    ExpansionResult result;
    bool reconstruction_ok = false;
};

// basis: "bernoulli", "higher:<r>" or "qpoch".
ExpandOutcome expand(const XPoly& p, const std::string& basis, BernoulliCache& cache);
std::string cmd_expand(const XPoly& p, const std::string& basis, OutputFormat format, const Limits& limits,
                       BernoulliCache& cache);

struct VerifyOutcome {
    std::vector<verify::VerifyReport> reports;
    std::string text;
    int exit_code = 0;  // 0 iff every case passes, else 1
};

VerifyOutcome cmd_verify(const std::string& suite, const verify::Bounds& bounds, OutputFormat format,
                         const Limits& limits, BernoulliCache& cache, bool timing = false, bool verbose = false);

// Evaluates a named quantity at q = q0 (or q = 1 with limit_q1) and, for
// polynomials, at x = x0.
std::string cmd_eval(const std::string& expr, std::optional<Rational> q0, std::optional<Rational> x0, bool limit_q1,
                     OutputFormat format, const Limits& limits, BernoulliCache& cache);

// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 computation error (pole, cap).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qumbral::cli

#endif
