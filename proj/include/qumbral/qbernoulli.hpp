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

#ifndef QUMBRAL_QBERNOULLI_HPP
#define QUMBRAL_QBERNOULLI_HPP

#include <cstddef>
#include <map>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "qumbral/qfield.hpp"
#include "qumbral/qpolynomial.hpp"
#include "qumbral/qumbral.hpp"

namespace qumbral {

/*
 * Memo for q-Bernoulli numbers and polynomials of every order.
 *
 * number(n) is the umbral coefficient of the inverse of (e_q(t) - 1)/t;
 * every other table is derived from those numbers, so perturbing one of
 * them (perturb_number) propagates to the polynomials and the higher-order
 * values. number_rec(n) uses only the additive recurrence and keeps its own
 * table, which perturb_number never touches.
 *
 * Reads take a shared lock; growing a table takes an exclusive one.
 */
class BernoulliCache {
   public:
    BernoulliCache() = default;
    BernoulliCache(const BernoulliCache&) = delete;
    BernoulliCache& operator=(const BernoulliCache&) = delete;

    QRat number(std::size_t n);
    QRat number_rec(std::size_t n);
    XPoly poly(std::size_t n);
    // r = 0 gives delta_{n,0}.
    QRat higher_number(std::size_t n, std::size_t r);
    QRat higher_number_multinomial(std::size_t n, std::size_t r);
    XPoly higher_poly(std::size_t n, std::size_t r);

    // t / (e_q(t) - 1) with plain coefficients B_k / [k]_q!, k < cap.
    TSeries inverse_series(std::size_t cap);

    // Adds delta to the cached B_n and drops everything derived from it.
    // Exists so the verification suite can be shown to reject wrong values.
    void perturb_number(std::size_t n, const QRat& delta);

   private:
    void ensure_numbers(std::size_t count);

    std::shared_mutex mu_;
    TSeries inverse_{0};  // t/(e_q(t)-1) as computed, never perturbed
    std::vector<QRat> numbers_;
    std::vector<QRat> rec_numbers_;
    std::map<std::size_t, XPoly> polys_;
    std::map<std::size_t, std::vector<QRat>> higher_;  // r -> B^(r)_n for n < size
    std::map<std::pair<std::size_t, std::size_t>, XPoly> higher_polys_;
};

// Process-wide cache used by the free functions below.
BernoulliCache& default_cache();

inline QRat bernoulli_number(std::size_t n, BernoulliCache& cache = default_cache()) { return cache.number(n); }
inline QRat bernoulli_number_rec(std::size_t n, BernoulliCache& cache = default_cache()) { return cache.number_rec(n); }
inline XPoly bernoulli_poly(std::size_t n, BernoulliCache& cache = default_cache()) { return cache.poly(n); }
inline QRat higher_bernoulli_number(std::size_t n, std::size_t r, BernoulliCache& cache = default_cache()) {
    return cache.higher_number(n, r);
}
inline QRat higher_bernoulli_number_multinomial(std::size_t n, std::size_t r,
                                                BernoulliCache& cache = default_cache()) {
    return cache.higher_number_multinomial(n, r);
}
inline XPoly higher_bernoulli_poly(std::size_t n, std::size_t r, BernoulliCache& cache = default_cache()) {
    return cache.higher_poly(n, r);
}

enum class BasisKind { monomial, bernoulli, bernoulli_order_r, qpoch_x_minus_1 };

struct Basis {
    BasisKind kind = BasisKind::monomial;
    std::size_t order = 1;  // only meaningful for bernoulli_order_r

    friend bool operator==(const Basis&, const Basis&) = default;
};

std::string to_string(const Basis& b);

// Coefficients b_k of a polynomial against basis_k(x), k = 0..deg.
struct ExpansionResult {
    Basis basis;
    std::vector<QRat> coeffs;
};

// k-th element of the basis: x^k, B_k(x), B^(r)_k(x) or (x-1)_q^k.
XPoly basis_element(const Basis& b, std::size_t k, BernoulliCache& cache = default_cache());
// sum_k b_k basis_k(x).
XPoly reconstruct(const ExpansionResult& e, BernoulliCache& cache = default_cache());

// b_k = (1/[k]_q!) * Jackson integral over [0,1] of D_q^k p.
ExpansionResult expand_in_bernoulli(const XPoly& p, BernoulliCache& cache = default_cache());
// B_n(x) = sum_k binom(n,k)_q B_{n-k}(1) (x-1)_q^k.
ExpansionResult expand_in_qpoch(std::size_t n, BernoulliCache& cache = default_cache());
// Any p in the (x-1)_q^k basis: c_k = (D_q^k p)(1) / [k]_q!.
ExpansionResult expand_in_qpoch_basis(const XPoly& p);
// (x-1)_q^n in the Bernoulli basis from the closed double sum
//   binom(n,k)_q sum_m binom(n-k,m)_q (-1)^(n-k-m) q^binom(n-k-m,2) / [m+1]_q.
ExpansionResult qpoch_in_bernoulli(std::size_t n);
// b_k = <((e_q(t)-1)/t)^r t^k | p> / [k]_q!.
ExpansionResult expand_in_higher_bernoulli(const XPoly& p, std::size_t r);

// <e_q(t)^j | B_N(x)> expanded as
//   sum_m sum_{m_1+...+m_j=m} binom(m; m_1..m_j)_q binom(N,m)_q B_{N-m}.
QRat eq_power_pairing_bernoulli(std::size_t j, std::size_t big_n, BernoulliCache& cache = default_cache());

// Prefactor of the k < r regime, simplified form
//   (1/[r]_q!) binom(r,k)_q / binom(n+r-k, r-k)_q.
QRat low_regime_prefactor(std::size_t n, std::size_t r, std::size_t k);
// Same prefactor before simplification:
//   (1/([k]_q! [r-k]_q!)) * [r-k]_q! / ([n+r-k]_q ... [n+1]_q).
QRat low_regime_prefactor_unsimplified(std::size_t n, std::size_t r, std::size_t k);
// Prefactor of the k >= r regime: (1/[r]_q!) binom(n,k-r)_q / binom(k,r)_q.
QRat high_regime_prefactor(std::size_t n, std::size_t r, std::size_t k);

// Coefficients of B_n(x) in the order-r basis from the closed two-regime
// sums (ordinary binomials over j, q-multinomials over compositions).
ExpansionResult bernoulli_in_higher_closed_form(std::size_t n, std::size_t r, BernoulliCache& cache = default_cache());

// Places where the typeset closed form disagrees with its own derivation,
// and how the implementation resolves each.
std::vector<std::string> closed_form_discrepancies();

nlohmann::json to_json(const ExpansionResult& e);

}  // namespace qumbral

#endif
