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

#include "qumbral/qumbral.hpp"

#include <algorithm>
#include <string>

#include "qumbral/qcombinatorics.hpp"

namespace qumbral {

namespace {

void require_cap(const TSeries& f, const XPoly& p) {
    if (p.degree() >= static_cast<long>(f.cap())) {
        throw CapTooSmall("polynomial of degree " + std::to_string(p.degree()) + " needs a series cap above " +
                          std::to_string(p.degree()) + ", got " + std::to_string(f.cap()));
    }
}

}  // namespace

TSeries TSeries::constant(const QRat& c, std::size_t cap) {
    TSeries f(cap);
    if (cap > 0) f.c_[0] = c;
    return f;
}

TSeries TSeries::t_power(std::size_t k, std::size_t cap) {
    TSeries f(cap);
    if (k < cap) f.c_[k] = QRat(1);
    return f;
}

TSeries TSeries::from_umbral(const std::vector<QRat>& a) {
    std::vector<QRat> c(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) c[k] = a[k] / qfactorial(k);
    return TSeries(std::move(c));
}

const QRat& TSeries::coeff(std::size_t k) const {
    if (k >= c_.size()) {
        throw CapTooSmall("coefficient of t^" + std::to_string(k) + " is beyond the cap " + std::to_string(c_.size()));
    }
    return c_[k];
}

QRat TSeries::umbral_coeff(std::size_t k) const { return coeff(k) * qfactorial(k); }

TSeries TSeries::truncated(std::size_t cap) const {
    TSeries f(std::min(cap, c_.size()));
    std::copy_n(c_.begin(), f.c_.size(), f.c_.begin());
    return f;
}

TSeries TSeries::operator-() const {
    TSeries f = *this;
    for (auto& c : f.c_) c = -c;
    return f;
}

TSeries& TSeries::operator+=(const TSeries& rhs) {
    c_.resize(std::min(c_.size(), rhs.c_.size()));
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += rhs.c_[k];
    return *this;
}

TSeries& TSeries::operator-=(const TSeries& rhs) {
    c_.resize(std::min(c_.size(), rhs.c_.size()));
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= rhs.c_[k];
    return *this;
}

TSeries& TSeries::operator*=(const QRat& s) {
    for (auto& c : c_) c *= s;
    return *this;
}

TSeries operator*(const TSeries& f, const TSeries& g) {
    const std::size_t cap = std::min(f.cap(), g.cap());
    std::vector<QRat> out(cap);
    for (std::size_t i = 0; i < cap; ++i) {
        if (f.c_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < cap; ++j) {
            if (!g.c_[j].is_zero()) out[i + j] += f.c_[i] * g.c_[j];
        }
    }
    return TSeries(std::move(out));
}

TSeries eq_series(std::size_t n_terms) { return eq_series_scaled(QRat(1), n_terms); }

TSeries eq_series_scaled(const QRat& y, std::size_t n_terms) {
    std::vector<QRat> c(n_terms);
    QRat power(1);
    for (std::size_t k = 0; k < n_terms; ++k) {
        c[k] = power / qfactorial(k);
        power *= y;
    }
    return TSeries(std::move(c));
}

TSeries eq_difference_quotient(std::size_t cap) {
    return shifted_down(eq_series(cap + 1) - TSeries::one(cap + 1), 1);
}

TSeries series_mul(const TSeries& f, const TSeries& g) { return f * g; }

TSeries series_pow(const TSeries& f, std::size_t r) {
    TSeries result = TSeries::one(f.cap());
    TSeries base = f;
    while (r > 0) {
        if (r & 1U) result = result * base;
        r >>= 1U;
        if (r > 0) base = base * base;
    }
    return result;
}

TSeries series_inverse(const TSeries& f) { return series_inverse_extend(f, TSeries(0)); }

TSeries series_inverse_extend(const TSeries& f, const TSeries& known) {
    if (f.cap() == 0) return f;
    if (f.coeffs()[0].is_zero()) throw NotInvertible();
    const QRat inv0 = f.coeffs()[0].inverse();
    std::vector<QRat> g(f.cap());
    const std::size_t start = std::min(known.cap(), f.cap());
    std::copy_n(known.coeffs().begin(), start, g.begin());
    if (start == 0) g[0] = inv0;
    // g_n = -(1/f_0) sum_{j=1..n} f_j g_{n-j}
    for (std::size_t n = std::max<std::size_t>(start, 1); n < f.cap(); ++n) {
        QRat acc;
        for (std::size_t j = 1; j <= n; ++j) {
            if (!f.coeffs()[j].is_zero()) acc += f.coeffs()[j] * g[n - j];
        }
        g[n] = -(acc * inv0);
    }
    return TSeries(std::move(g));
}

TSeries shifted_down(const TSeries& f, std::size_t k) {
    if (k > f.cap()) throw NotDivisible("cannot divide a series with cap " + std::to_string(f.cap()) + " by t^" + std::to_string(k));
    for (std::size_t i = 0; i < k; ++i) {
        if (!f.coeffs()[i].is_zero()) {
            throw NotDivisible("coefficient of t^" + std::to_string(i) + " is nonzero; series is not divisible by t^" +
                               std::to_string(k));
        }
    }
    return TSeries(std::vector<QRat>(f.coeffs().begin() + static_cast<std::ptrdiff_t>(k), f.coeffs().end()));
}

TSeries eq_minus_one_pow_binomial(std::size_t r, std::size_t cap) {
    const TSeries e = eq_series(cap);
    TSeries acc(cap);
    TSeries e_power = TSeries::one(cap);
    for (std::size_t j = 0; j <= r; ++j) {
        QRat c(binomial(static_cast<std::int64_t>(r), static_cast<std::int64_t>(j)));
        acc += e_power * ((r - j) % 2 == 0 ? c : -c);
        e_power = e_power * e;
    }
    return acc;
}

TSeries eq_minus_one_pow_product(std::size_t r, std::size_t cap) {
    return series_pow(eq_series(cap) - TSeries::one(cap), r);
}

QRat pairing(const TSeries& f, const XPoly& p) {
    require_cap(f, p);
    QRat acc;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        if (!p.coeffs()[k].is_zero() && !f.coeffs()[k].is_zero()) acc += f.coeffs()[k] * qfactorial(k) * p.coeffs()[k];
    }
    return acc;
}

XPoly apply(const TSeries& f, const XPoly& p) {
    require_cap(f, p);
    XPoly acc;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        if (!f.coeffs()[k].is_zero()) acc += dq_iter(p, k) * f.coeffs()[k];
    }
    return acc;
}

bool ShefferReport::all_pass() const {
    return std::all_of(cases.begin(), cases.end(), [](const ShefferCase& c) { return c.pass; });
}

ShefferReport sheffer_check(const TSeries& g, std::span<const XPoly> s) {
    ShefferReport report;
    for (std::size_t k = 0; k < s.size(); ++k) {
        const TSeries gk = g * TSeries::t_power(k, g.cap());
        for (std::size_t n = 0; n < s.size(); ++n) {
            QRat value = pairing(gk, s[n]);
            const QRat expected = n == k ? qfactorial(n) : QRat();
            const bool pass = value == expected;
            report.cases.push_back({n, k, std::move(value), pass});
        }
    }
    std::sort(report.cases.begin(), report.cases.end(),
              [](const ShefferCase& a, const ShefferCase& b) { return a.n != b.n ? a.n < b.n : a.k < b.k; });
    return report;
}

QRat pairing_multinomial_sum(std::span<const TSeries> fs, std::size_t n) {
    std::vector<std::vector<QRat>> a(fs.size());
    for (std::size_t i = 0; i < fs.size(); ++i) {
        for (std::size_t k = 0; k <= n; ++k) a[i].push_back(fs[i].umbral_coeff(k));
    }
    QRat acc;
    for (const Composition& comp : compositions(n, fs.size())) {
        QRat term = qmultinomial(n, comp);
        for (std::size_t i = 0; i < fs.size() && !term.is_zero(); ++i) term *= a[i][comp[i]];
        acc += term;
    }
    return acc;
}

bool pairing_multinomial_check(std::span<const TSeries> fs, std::size_t n) {
    std::size_t cap = n + 1;
    for (const auto& f : fs) cap = std::min(cap, f.cap());
    TSeries product = TSeries::one(cap);
    for (const auto& f : fs) product = product * f;
    return pairing(product, XPoly::monomial(n)) == pairing_multinomial_sum(fs, n);
}

nlohmann::json to_json(const TSeries& f) {
    auto arr = nlohmann::json::array();
    for (const auto& c : f.coeffs()) arr.push_back(to_json(c));
    return {{"cap", f.cap()}, {"coeffs", arr}};
}

}  // namespace qumbral
