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

#include "qumbral/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <mutex>

#include "qumbral/qcombinatorics.hpp"
#include "qumbral/qumbral.hpp"

namespace qumbral::verify {

namespace {

std::int64_t as_signed(std::size_t v) { return static_cast<std::int64_t>(v); }

std::string key(std::initializer_list<std::pair<const char*, std::size_t>> parts) {
    std::string out;
    for (const auto& [name, value] : parts) {
        if (!out.empty()) out += ' ';
        out += name;
        out += '=';
        out += std::to_string(value);
    }
    return out;
}

std::string range(const char* name, std::size_t lo, std::size_t hi) {
    return std::string(name) + "=" + std::to_string(lo) + ".." + std::to_string(hi);
}

void record(VerifyReport& report, std::string case_key, bool pass, const std::function<std::string()>& detail) {
    report.cases.push_back({std::move(case_key), pass, pass ? std::string() : detail()});
}

std::string mismatch(const QRat& got, const QRat& want) { return "got " + to_string(got) + ", expected " + to_string(want); }

std::string mismatch(const XPoly& got, const XPoly& want) {
    return "got " + to_string(got) + ", expected " + to_string(want);
}

std::string mismatch(const std::vector<QRat>& got, const std::vector<QRat>& want) {
    const std::size_t len = std::max(got.size(), want.size());
    for (std::size_t k = 0; k < len; ++k) {
        const QRat g = k < got.size() ? got[k] : QRat();
        const QRat w = k < want.size() ? want[k] : QRat();
        if (g != w) return "coefficient " + std::to_string(k) + ": " + mismatch(g, w);
    }
    return "coefficient vectors differ in length";
}

bool same_coeffs(const std::vector<QRat>& a, const std::vector<QRat>& b) {
    const std::size_t len = std::max(a.size(), b.size());
    for (std::size_t k = 0; k < len; ++k) {
        if ((k < a.size() ? a[k] : QRat()) != (k < b.size() ? b[k] : QRat())) return false;
    }
    return true;
}

struct Params {
    std::size_t n;
    std::size_t r;
    std::uint64_t seed;
};

void suite_prop1(VerifyReport& rep, BernoulliCache& cache, const Params& p) {
    rep.ranges = range("n", 0, p.n);
    for (std::size_t n = 0; n <= p.n; ++n) {
        const QRat series = cache.number(n);
        const QRat rec = cache.number_rec(n);
        record(rep, key({{"n", n}}), series == rec, [&] { return "series inversion " + mismatch(series, rec); });
    }
}

void suite_classical(VerifyReport& rep, BernoulliCache& cache, const Params& p) {
    rep.ranges = range("n", 0, p.n);
    for (std::size_t n = 0; n <= p.n; ++n) {
        const Rational got = cache.number(n).eval(Rational(1));
        const Rational want = classical_bernoulli(n);
        record(rep, key({{"n", n}}), got == want,
               [&] { return "B_n at q=1 is " + got.get_str() + ", classical " + want.get_str(); });
    }
}

void suite_eq21(VerifyReport& rep, BernoulliCache& cache, const Params& p) {
    rep.ranges = range("n", 1, p.n);
    for (std::size_t n = 1; n <= p.n; ++n) {
        const XPoly lhs = dq(cache.poly(n));
        const XPoly via_t = apply(TSeries::t_power(1, n + 1), cache.poly(n));
        const XPoly rhs = cache.poly(n - 1) * qint(n);
        record(rep, key({{"n", n}}), lhs == rhs && via_t == rhs,
               [&] { return lhs == rhs ? "t acting as operator: " + mismatch(via_t, rhs) : mismatch(lhs, rhs); });
    }
}

void suite_eq23(VerifyReport& rep, BernoulliCache&, const Params& p) {
    rep.ranges = range("deg", 0, p.n) + " random, seed=" + std::to_string(p.seed);
    std::mt19937_64 rng(p.seed);
    for (std::size_t d = 0; d <= p.n; ++d) {
        const XPoly poly = random_xpoly(rng, d, 3, true);
        const QRat lhs = pairing(eq_difference_quotient(d + 1), poly);
        const QRat rhs = jackson_integral_01(poly);
        record(rep, key({{"deg", d}}), lhs == rhs, [&] { return mismatch(lhs, rhs); });
    }
}

void suite_eq24(VerifyReport& rep, BernoulliCache& cache, const Params& p) {
    rep.ranges = range("n", 0, p.n);
    for (std::size_t n = 0; n <= p.n; ++n) {
        const QRat got = jackson_integral_01(cache.poly(n));
        const QRat want = n == 0 ? QRat(1) : QRat();
        record(rep, key({{"n", n}}), got == want, [&] { return mismatch(got, want); });
    }
}

void suite_eq28(VerifyReport& rep, BernoulliCache& cache, const Params& p) {
    rep.ranges = range("n", 0, p.n);
    for (std::size_t n = 0; n <= p.n; ++n) {
        const ExpansionResult e = expand_in_qpoch(n, cache);
        const XPoly back = reconstruct(e, cache);
        const ExpansionResult generic = expand_in_qpoch_basis(cache.poly(n));
        const bool ok = back == cache.poly(n) && same_coeffs(e.coeffs, generic.coeffs);
        record(rep, key({{"n", n}}), ok, [&] {
            return back != cache.poly(n) ? "reconstruction " + mismatch(back, cache.poly(n))
                                         : "pairing route " + mismatch(e.coeffs, generic.coeffs);
        });
    }
}

void suite_eq30(VerifyReport& rep, BernoulliCache&, const Params& p) {
    rep.ranges = range("n", 0, p.n) + ", k=0..n";
    for (std::size_t n = 0; n <= p.n; ++n) {
        const XPoly base = qpochhammer_x_minus_1(n);
        for (std::size_t k = 0; k <= n; ++k) {
            const XPoly lhs = dq_iter(base, k);
            const XPoly rhs = qpochhammer_x_minus_1(n - k) * (qfactorial(n) / qfactorial(n - k));
            record(rep, key({{"n", n}, {"k", k}}), lhs == rhs, [&] { return mismatch(lhs, rhs); });
        }
    }
}

void suite_eq31(VerifyReport& rep, BernoulliCache& cache, const Params& p) {
    rep.ranges = range("n", 0, p.n);
    std::vector<std::vector<QRat>> to_qpoch;     // B_n in the (x-1)_q^k basis
    std::vector<std::vector<QRat>> to_bernoulli; // (x-1)_q^n in the B_k basis
    for (std::size_t n = 0; n <= p.n; ++n) {
        const ExpansionResult closed = qpoch_in_bernoulli(n);
        const ExpansionResult paired = expand_in_bernoulli(qpochhammer_x_minus_1(n), cache);
        const XPoly back = reconstruct(closed, cache);
        const bool ok = same_coeffs(closed.coeffs, paired.coeffs) && back == qpochhammer_x_minus_1(n);
        record(rep, key({{"n", n}}), ok, [&] {
            return same_coeffs(closed.coeffs, paired.coeffs) ? "reconstruction " + mismatch(back, qpochhammer_x_minus_1(n))
                                                             : "closed form vs pairing " + mismatch(closed.coeffs, paired.coeffs);
        });
        to_qpoch.push_back(expand_in_qpoch(n, cache).coeffs);
        to_bernoulli.push_back(closed.coeffs);
    }
    // The two basis changes are mutually inverse lower-triangular matrices.
    for (std::size_t n = 0; n <= p.n; ++n) {
        bool ok = true;
        std::string why;
        for (std::size_t l = 0; l <= n; ++l) {
            QRat forward;
            QRat backward;
            for (std::size_t k = l; k <= n; ++k) {
                forward += to_bernoulli[n][k] * to_qpoch[k][l];
                backward += to_qpoch[n][k] * to_bernoulli[k][l];
            }
            const QRat want = l == n ? QRat(1) : QRat();
            if (forward != want || backward != want) {
                ok = false;
                why = "entry (" + std::to_string(n) + "," + std::to_string(l) + ") of the composed change of basis is " +
                      to_string(forward != want ? forward : backward);
                break;
            }
        }
        record(rep, key({{"inverse n", n}}), ok, [&] { return why; });
    }
}

void sheffer_family(VerifyReport& rep, const std::string& family, const TSeries& g, const std::vector<XPoly>& seq) {
    const ShefferReport sr = sheffer_check(g, seq);
    for (const auto& c : sr.cases) {
        record(rep, family + " " + key({{"n", c.n}, {"k", c.k}}), c.pass, [&] {
            return "<g t^k | s_n> = " + to_string(c.value) + ", expected " +
                   to_string(c.n == c.k ? qfactorial(c.n) : QRat());
        });
    }
}

void suite_sheffer(VerifyReport& rep, BernoulliCache& cache, const Params& p) {
    rep.ranges = range("n,k", 0, p.n) + ", " + range("r", 1, p.r);
    const std::size_t cap = p.n + 1;
    std::vector<XPoly> bern;
    std::vector<XPoly> qpoch;
    for (std::size_t n = 0; n <= p.n; ++n) {
        bern.push_back(cache.poly(n));
        qpoch.push_back(qpochhammer_x_minus_1(n));
    }
    const TSeries quotient = eq_difference_quotient(cap);
    sheffer_family(rep, "bernoulli", quotient, bern);
    sheffer_family(rep, "qpoch", eq_series(cap), qpoch);
    for (std::size_t r = 1; r <= p.r; ++r) {
        std::vector<XPoly> higher;
        for (std::size_t n = 0; n <= p.n; ++n) higher.push_back(cache.higher_poly(n, r));
        sheffer_family(rep, "order" + std::to_string(r), series_pow(quotient, r), higher);
    }
}

void suite_thm2(VerifyReport& rep, BernoulliCache& cache, const Params& p) {
    constexpr std::size_t kSamples = 50;
    rep.ranges = std::to_string(kSamples) + " random, deg<=" + std::to_string(p.n) + ", seed=" + std::to_string(p.seed);
    std::mt19937_64 rng(p.seed);
    for (std::size_t i = 0; i < kSamples; ++i) {
        const std::size_t degree = i % (p.n + 1);
        const XPoly poly = random_xpoly(rng, degree);
        const XPoly back = reconstruct(expand_in_bernoulli(poly, cache), cache);
        record(rep, key({{"sample", i}, {"deg", degree}}), back == poly, [&] { return mismatch(back, poly); });
    }
}

void suite_lemma3(VerifyReport& rep, BernoulliCache& cache, const Params& p) {
    rep.ranges = range("n", 0, p.n) + ", " + range("r", 1, p.r);
    for (std::size_t r = 1; r <= p.r; ++r) {
        for (std::size_t n = 0; n <= p.n; ++n) {
            const QRat series = cache.higher_number(n, r);
            const QRat multinomial = cache.higher_number_multinomial(n, r);
            record(rep, key({{"n", n}, {"r", r}}), series == multinomial,
                   [&] { return "series power " + mismatch(series, multinomial); });
        }
    }
}

void suite_thm4(VerifyReport& rep, BernoulliCache& cache, const Params& p) {
    rep.ranges = range("n", 0, p.n) + ", " + range("r", 2, std::max<std::size_t>(p.r, 2));
    for (std::size_t r = 2; r <= p.r; ++r) {
        for (std::size_t n = 0; n <= p.n; ++n) {
            XPoly rhs;
            std::vector<QRat> predicted(n + 1);
            for (std::size_t k = 0; k <= n; ++k) {
                predicted[k] = qbinomial(as_signed(n), as_signed(k)) * cache.higher_number(n - k, r - 1);
                rhs += cache.poly(k) * predicted[k];
            }
            const XPoly lhs = cache.higher_poly(n, r);
            const ExpansionResult e = expand_in_bernoulli(lhs, cache);
            const bool ok = lhs == rhs && same_coeffs(e.coeffs, predicted);
            record(rep, key({{"n", n}, {"r", r}}), ok, [&] {
                return lhs != rhs ? mismatch(lhs, rhs) : "Bernoulli-basis coefficients " + mismatch(e.coeffs, predicted);
            });
        }
    }
}

void suite_thm5(VerifyReport& rep, BernoulliCache& cache, const Params& p) {
    rep.ranges = range("deg", 0, p.n) + ", " + range("r", 1, p.r) + ", seed=" + std::to_string(p.seed);
    std::mt19937_64 rng(p.seed ^ 0x5eedULL);
    for (std::size_t r = 1; r <= p.r; ++r) {
        for (std::size_t d = 0; d <= p.n; ++d) {
            const XPoly poly = random_xpoly(rng, d, 3, true);
            const XPoly back = reconstruct(expand_in_higher_bernoulli(poly, r), cache);
            record(rep, key({{"deg", d}, {"r", r}}), back == poly, [&] { return mismatch(back, poly); });

            // Basis elements expand to unit vectors.
            const ExpansionResult unit = expand_in_higher_bernoulli(cache.higher_poly(d, r), r);
            std::vector<QRat> delta(d + 1);
            delta[d] = QRat(1);
            record(rep, key({{"basis n", d}, {"r", r}}), same_coeffs(unit.coeffs, delta),
                   [&] { return mismatch(unit.coeffs, delta); });
        }
    }
}

void suite_thm6(VerifyReport& rep, BernoulliCache& cache, const Params& p) {
    rep.ranges = range("n", 0, p.n) + ", " + range("r", 1, p.r);
    rep.notes = closed_form_discrepancies();
    for (std::size_t r = 1; r <= p.r; ++r) {
        for (std::size_t n = 0; n <= p.n; ++n) {
            const ExpansionResult closed = bernoulli_in_higher_closed_form(n, r, cache);
            const ExpansionResult paired = expand_in_higher_bernoulli(cache.poly(n), r);
            record(rep, key({{"n", n}, {"r", r}}), same_coeffs(closed.coeffs, paired.coeffs),
                   [&] { return "closed form vs pairing " + mismatch(closed.coeffs, paired.coeffs); });
            for (std::size_t k = 0; k < r; ++k) {
                const QRat simplified = low_regime_prefactor(n, r, k);
                const QRat direct = low_regime_prefactor_unsimplified(n, r, k);
                record(rep, key({{"prefactor n", n}, {"r", r}, {"k", k}}), simplified == direct,
                       [&] { return "simplified prefactor " + mismatch(simplified, direct); });
            }
        }
    }
}

using SuiteFn = void (*)(VerifyReport&, BernoulliCache&, const Params&);

struct SuiteEntry {
    const char* name;
    SuiteFn fn;
    SuiteDefaults defaults;
};

const std::vector<SuiteEntry>& registry() {
    static const std::vector<SuiteEntry> suites = {
        {"prop1", suite_prop1, {25, 0}},    {"classical", suite_classical, {20, 0}},
        {"eq21", suite_eq21, {10, 0}},      {"eq23", suite_eq23, {10, 0}},
        {"eq24", suite_eq24, {10, 0}},      {"eq28", suite_eq28, {10, 0}},
        {"eq30", suite_eq30, {10, 0}},      {"eq31", suite_eq31, {10, 0}},
        {"sheffer", suite_sheffer, {10, 3}}, {"thm2", suite_thm2, {10, 0}},
        {"lemma3", suite_lemma3, {8, 4}},   {"thm4", suite_thm4, {10, 4}},
        {"thm5", suite_thm5, {8, 3}},       {"thm6", suite_thm6, {8, 3}},
    };
    return suites;
}

const SuiteEntry& find_suite(const std::string& name) {
    for (const auto& s : registry()) {
        if (name == s.name) return s;
    }
    throw InvalidArgs("unknown verification suite \"" + name + "\"");
}

}  // namespace

bool VerifyReport::pass() const {
    return std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.pass; });
}

std::size_t VerifyReport::passed() const {
    return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return c.pass; }));
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& s : registry()) out.emplace_back(s.name);
        return out;
    }();
    return names;
}

SuiteDefaults suite_defaults(const std::string& name) { return find_suite(name).defaults; }

VerifyReport run_suite(const std::string& name, BernoulliCache& cache, const Bounds& bounds) {
    const SuiteEntry& suite = find_suite(name);
    const Params params{bounds.n_max.value_or(suite.defaults.n_max), bounds.r_max.value_or(suite.defaults.r_max),
                        bounds.seed};
    VerifyReport report;
    report.identity = suite.name;
    const auto start = std::chrono::steady_clock::now();
    suite.fn(report, cache, params);
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::vector<VerifyReport> run(const std::string& name, BernoulliCache& cache, const Bounds& bounds) {
    std::vector<VerifyReport> out;
    if (name == "all") {
        for (const auto& s : suite_names()) out.push_back(run_suite(s, cache, bounds));
    } else {
        out.push_back(run_suite(name, cache, bounds));
    }
    return out;
}

Rational classical_bernoulli(std::size_t n) {
    static std::mutex mu;
    static std::vector<Rational> table{Rational(1)};
    std::lock_guard lock(mu);
    for (std::size_t m = table.size(); m <= n; ++m) {
        Rational acc = 0;
        for (std::size_t k = 0; k < m; ++k) acc += Rational(binomial(as_signed(m + 1), as_signed(k))) * table[k];
        Rational b = -acc / Rational(static_cast<long>(m + 1));
        b.canonicalize();
        table.push_back(b);
    }
    return table[n];
}

XPoly random_xpoly(std::mt19937_64& rng, std::size_t degree, int height, bool rational_coeffs) {
    const auto uniform = [&rng](int h) { return static_cast<long>(rng() % static_cast<std::uint64_t>(2 * h + 1)) - h; };
    static const std::vector<IntPolyQ> denominators = {
        IntPolyQ(std::vector<Integer>{1, 1}), IntPolyQ(2), IntPolyQ(std::vector<Integer>{1, 0, 1}),
        IntPolyQ(std::vector<Integer>{2, -1}), IntPolyQ(std::vector<Integer>{1, 1, 1})};
    std::vector<QRat> c(degree + 1);
    for (std::size_t k = 0; k <= degree; ++k) {
        IntPolyQ num(std::vector<Integer>{uniform(height), uniform(height), uniform(height)});
        if (k == degree && num.is_zero()) num = IntPolyQ(1);
        if (rational_coeffs && rng() % 3 == 0) {
            c[k] = QRat(std::move(num), denominators[rng() % denominators.size()]);
        } else {
            c[k] = QRat(std::move(num));
        }
    }
    return XPoly(std::move(c));
}

}  // namespace qumbral::verify
