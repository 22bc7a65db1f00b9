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

#include "qumbral/qbernoulli.hpp"

#include <algorithm>
#include <mutex>

#include "qumbral/qcombinatorics.hpp"

namespace qumbral {

namespace {

constexpr std::size_t kMinGrowth = 8;

std::int64_t as_signed(std::size_t v) { return static_cast<std::int64_t>(v); }

}  // namespace

void BernoulliCache::ensure_numbers(std::size_t count) {
    {
        std::shared_lock lock(mu_);
        if (numbers_.size() >= count) return;
    }
    std::unique_lock lock(mu_);
    if (numbers_.size() >= count) return;
    const std::size_t cap = std::max(count, numbers_.size() + kMinGrowth);
    inverse_ = series_inverse_extend(eq_difference_quotient(cap), inverse_);
    for (std::size_t k = numbers_.size(); k < cap; ++k) numbers_.push_back(inverse_.umbral_coeff(k));
}

QRat BernoulliCache::number(std::size_t n) {
    ensure_numbers(n + 1);
    std::shared_lock lock(mu_);
    return numbers_[n];
}

QRat BernoulliCache::number_rec(std::size_t n) {
    {
        std::shared_lock lock(mu_);
        if (n < rec_numbers_.size()) return rec_numbers_[n];
    }
    std::unique_lock lock(mu_);
    if (rec_numbers_.empty()) rec_numbers_.emplace_back(1);
    // -B_m = sum_{k=1..m} binom(m,k)_q B_{m-k} / [k+1]_q
    for (std::size_t m = rec_numbers_.size(); m <= n; ++m) {
        QRat acc;
        for (std::size_t k = 1; k <= m; ++k) {
            acc += qbinomial(as_signed(m), as_signed(k)) * rec_numbers_[m - k] / qint(k + 1);
        }
        rec_numbers_.push_back(-acc);
    }
    return rec_numbers_[n];
}

XPoly BernoulliCache::poly(std::size_t n) {
    {
        std::shared_lock lock(mu_);
        if (auto it = polys_.find(n); it != polys_.end()) return it->second;
    }
    ensure_numbers(n + 1);
    std::vector<QRat> c(n + 1);
    {
        std::shared_lock lock(mu_);
        // B_n(x) = sum_l binom(n,l)_q B_{n-l} x^l
        for (std::size_t l = 0; l <= n; ++l) c[l] = qbinomial(as_signed(n), as_signed(l)) * numbers_[n - l];
    }
    XPoly p(std::move(c));
    std::unique_lock lock(mu_);
    return polys_.emplace(n, std::move(p)).first->second;
}

TSeries BernoulliCache::inverse_series(std::size_t cap) {
    ensure_numbers(cap);
    std::vector<QRat> c(cap);
    std::shared_lock lock(mu_);
    for (std::size_t k = 0; k < cap; ++k) c[k] = numbers_[k] / qfactorial(k);
    return TSeries(std::move(c));
}

QRat BernoulliCache::higher_number(std::size_t n, std::size_t r) {
    if (r == 0) return n == 0 ? QRat(1) : QRat();
    if (r == 1) return number(n);
    std::size_t have = 0;
    {
        std::shared_lock lock(mu_);
        if (auto it = higher_.find(r); it != higher_.end()) {
            if (n < it->second.size()) return it->second[n];
            have = it->second.size();
        }
    }
    const std::size_t cap = std::max({n + 1, 2 * have, kMinGrowth});
    const TSeries power = series_pow(inverse_series(cap), r);
    std::vector<QRat> row(cap);
    for (std::size_t k = 0; k < cap; ++k) row[k] = power.umbral_coeff(k);
    std::unique_lock lock(mu_);
    auto& slot = higher_[r];
    if (slot.size() < row.size()) slot = std::move(row);
    return slot[n];
}

QRat BernoulliCache::higher_number_multinomial(std::size_t n, std::size_t r) {
    std::vector<QRat> b(n + 1);
    for (std::size_t i = 0; i <= n; ++i) b[i] = number(i);
    QRat acc;
    for (const Composition& comp : compositions(n, r)) {
        QRat term = qmultinomial(n, comp);
        for (std::size_t i : comp.parts()) term *= b[i];
        acc += term;
    }
    return acc;
}

XPoly BernoulliCache::higher_poly(std::size_t n, std::size_t r) {
    if (r == 0) return XPoly::monomial(n);
    {
        std::shared_lock lock(mu_);
        if (auto it = higher_polys_.find({n, r}); it != higher_polys_.end()) return it->second;
    }
    XPoly p = apply(series_pow(inverse_series(n + 1), r), XPoly::monomial(n));
    std::unique_lock lock(mu_);
    return higher_polys_.emplace(std::pair{n, r}, std::move(p)).first->second;
}

void BernoulliCache::perturb_number(std::size_t n, const QRat& delta) {
    ensure_numbers(n + 1);
    std::unique_lock lock(mu_);
    numbers_[n] += delta;
    polys_.clear();
    higher_.clear();
    higher_polys_.clear();
}

BernoulliCache& default_cache() {
    static BernoulliCache cache;
    return cache;
}

std::string to_string(const Basis& b) {
    switch (b.kind) {
        case BasisKind::monomial:
            return "monomial";
        case BasisKind::bernoulli:
            return "bernoulli";
        case BasisKind::bernoulli_order_r:
            return "bernoulli_order_r(" + std::to_string(b.order) + ")";
        case BasisKind::qpoch_x_minus_1:
            return "qpoch_x_minus_1";
    }
    return "unknown";
}

XPoly basis_element(const Basis& b, std::size_t k, BernoulliCache& cache) {
    switch (b.kind) {
        case BasisKind::monomial:
            return XPoly::monomial(k);
        case BasisKind::bernoulli:
            return cache.poly(k);
        case BasisKind::bernoulli_order_r:
            return cache.higher_poly(k, b.order);
        case BasisKind::qpoch_x_minus_1:
            return qpochhammer_x_minus_1(k);
    }
    return {};
}

XPoly reconstruct(const ExpansionResult& e, BernoulliCache& cache) {
    XPoly acc;
    for (std::size_t k = 0; k < e.coeffs.size(); ++k) {
        if (!e.coeffs[k].is_zero()) acc += basis_element(e.basis, k, cache) * e.coeffs[k];
    }
    return acc;
}

ExpansionResult expand_in_bernoulli(const XPoly& p, BernoulliCache&) {
    ExpansionResult out{{BasisKind::bernoulli}, {}};
    for (long k = 0; k <= p.degree(); ++k) {
        const auto uk = static_cast<std::size_t>(k);
        out.coeffs.push_back(jackson_integral_01(dq_iter(p, uk)) / qfactorial(uk));
    }
    return out;
}

ExpansionResult expand_in_qpoch(std::size_t n, BernoulliCache& cache) {
    ExpansionResult out{{BasisKind::qpoch_x_minus_1}, std::vector<QRat>(n + 1)};
    for (std::size_t k = 0; k <= n; ++k) {
        out.coeffs[k] = qbinomial(as_signed(n), as_signed(k)) * eval_x(cache.poly(n - k), QRat(1));
    }
    return out;
}

ExpansionResult expand_in_qpoch_basis(const XPoly& p) {
    ExpansionResult out{{BasisKind::qpoch_x_minus_1}, {}};
    for (long k = 0; k <= p.degree(); ++k) {
        const auto uk = static_cast<std::size_t>(k);
        out.coeffs.push_back(eval_x(dq_iter(p, uk), QRat(1)) / qfactorial(uk));
    }
    return out;
}

ExpansionResult qpoch_in_bernoulli(std::size_t n) {
    ExpansionResult out{{BasisKind::bernoulli}, std::vector<QRat>(n + 1)};
    for (std::size_t k = 0; k <= n; ++k) {
        const std::size_t d = n - k;
        QRat inner;
        for (std::size_t m = 0; m <= d; ++m) {
            const std::size_t e = d - m;
            const std::size_t qexp = e == 0 ? 0 : e * (e - 1) / 2;
            QRat term = qbinomial(as_signed(d), as_signed(m)) * QRat::q_power(qexp) / qint(m + 1);
            inner += e % 2 == 0 ? term : -term;
        }
        out.coeffs[k] = qbinomial(as_signed(n), as_signed(k)) * inner;
    }
    return out;
}

ExpansionResult expand_in_higher_bernoulli(const XPoly& p, std::size_t r) {
    ExpansionResult out{{BasisKind::bernoulli_order_r, r}, {}};
    if (p.is_zero()) return out;
    const auto cap = static_cast<std::size_t>(p.degree()) + 1;
    const TSeries g = series_pow(eq_difference_quotient(cap), r);
    for (std::size_t k = 0; k < cap; ++k) out.coeffs.push_back(pairing(g, dq_iter(p, k)) / qfactorial(k));
    return out;
}

QRat eq_power_pairing_bernoulli(std::size_t j, std::size_t big_n, BernoulliCache& cache) {
    QRat acc;
    for (std::size_t m = 0; m <= big_n; ++m) {
        QRat multinomials;
        for (const Composition& comp : compositions(m, j)) multinomials += qmultinomial(m, comp);
        if (multinomials.is_zero()) continue;
        acc += multinomials * qbinomial(as_signed(big_n), as_signed(m)) * cache.number(big_n - m);
    }
    return acc;
}

QRat low_regime_prefactor(std::size_t n, std::size_t r, std::size_t k) {
    return qbinomial(as_signed(r), as_signed(k)) / (qfactorial(r) * qbinomial(as_signed(n + r - k), as_signed(r - k)));
}

QRat low_regime_prefactor_unsimplified(std::size_t n, std::size_t r, std::size_t k) {
    return qfactorial(r - k) / (qfactorial(k) * qfactorial(r - k) * qfalling(n + r - k, r - k));
}

QRat high_regime_prefactor(std::size_t n, std::size_t r, std::size_t k) {
    return qbinomial(as_signed(n), as_signed(k - r)) / (qfactorial(r) * qbinomial(as_signed(k), as_signed(r)));
}

ExpansionResult bernoulli_in_higher_closed_form(std::size_t n, std::size_t r, BernoulliCache& cache) {
    ExpansionResult out{{BasisKind::bernoulli_order_r, r}, std::vector<QRat>(n + 1)};
    for (std::size_t k = 0; k <= n; ++k) {
        // Below r the index is raised to n+r-k so that t^(r-k) divides; from
        // r on, t^(k-r) acts on B_n directly and lands on index n-k+r. Both
        // are the same integer, the prefactors differ.
        const std::size_t big_n = n + r - k;
        const QRat prefactor = k < r ? low_regime_prefactor(n, r, k) : high_regime_prefactor(n, r, k);
        QRat alternating;
        for (std::size_t j = 0; j <= r; ++j) {
            const QRat c(binomial(as_signed(r), as_signed(j)));
            const QRat term = c * eq_power_pairing_bernoulli(j, big_n, cache);
            alternating += (r - j) % 2 == 0 ? term : -term;
        }
        out.coeffs[k] = prefactor * alternating;
    }
    return out;
}

std::vector<std::string> closed_form_discrepancies() {
    return {
        "k >= r sum: the typeset denominator [r]_q! binom(r,k)_q vanishes for k > r; the derivation gives "
        "binom(n,k-r)_q / ([r]_q! binom(k,r)_q), which is what is implemented",
        "k >= r sum: the inner index is typeset as m_1+...+m_j+m; read as m_1+...+m_j = m",
        "k < r sum: the bound and Bernoulli index mix n-k+r and n+r-k; harmonized to n+r-k (same integer)",
        "k < r prefactor: the simplified (1/[r]_q!) binom(r,k)_q / binom(n+r-k,r-k)_q is checked against the "
        "unsimplified 1/([k]_q! [n+r-k]_q...[n+1]_q) rather than trusted",
    };
}

nlohmann::json to_json(const ExpansionResult& e) {
    nlohmann::json j;
    switch (e.basis.kind) {
        case BasisKind::monomial:
            j["basis"] = "monomial";
            break;
        case BasisKind::bernoulli:
            j["basis"] = "bernoulli";
            break;
        case BasisKind::bernoulli_order_r:
            j["basis"] = "bernoulli_order_r";
            j["order"] = e.basis.order;
            break;
        case BasisKind::qpoch_x_minus_1:
            j["basis"] = "qpoch_x_minus_1";
            break;
    }
    auto arr = nlohmann::json::array();
    for (const auto& c : e.coeffs) arr.push_back(to_json(c));
    j["coeffs"] = arr;
    return j;
}

}  // namespace qumbral
