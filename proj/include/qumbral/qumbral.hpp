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

#ifndef QUMBRAL_QUMBRAL_HPP
#define QUMBRAL_QUMBRAL_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "json.hpp"

#include "qumbral/qfield.hpp"
#include "qumbral/qpolynomial.hpp"

namespace qumbral {

/*
 * Truncated formal power series in t over Q(q), standing for an element of
 * the q-umbral algebra. coeff(k) is the plain coefficient of t^k for
 * k < cap(); higher coefficients are unknown, not zero. The umbral
 * coefficient a_k in f(t) = sum a_k t^k / [k]_q! is umbral_coeff(k) =
 * coeff(k) * [k]_q!, which is also the pairing <f(t) | x^k>.
 *
 * Binary arithmetic keeps the smaller of the two caps.
 */
class TSeries {
   public:
    // Zero series known up to t^(cap-1).
    explicit TSeries(std::size_t cap) : c_(cap) {}
    explicit TSeries(std::vector<QRat> coeffs) : c_(std::move(coeffs)) {}

    static TSeries constant(const QRat& c, std::size_t cap);
    static TSeries one(std::size_t cap) { return constant(QRat(1), cap); }
    static TSeries t_power(std::size_t k, std::size_t cap);
    // Series with <f | x^k> = a[k].
    static TSeries from_umbral(const std::vector<QRat>& a);

    std::size_t cap() const noexcept { return c_.size(); }
    const std::vector<QRat>& coeffs() const noexcept { return c_; }
    // Throws CapTooSmall for k >= cap().
    const QRat& coeff(std::size_t k) const;
    QRat umbral_coeff(std::size_t k) const;

    TSeries truncated(std::size_t cap) const;

    TSeries operator-() const;
    TSeries& operator+=(const TSeries& rhs);
    TSeries& operator-=(const TSeries& rhs);
    TSeries& operator*=(const QRat& s);

    friend TSeries operator+(TSeries lhs, const TSeries& rhs) { return lhs += rhs; }
    friend TSeries operator-(TSeries lhs, const TSeries& rhs) { return lhs -= rhs; }
    friend TSeries operator*(TSeries f, const QRat& s) { return f *= s; }
    friend TSeries operator*(const TSeries& f, const TSeries& g);
    friend bool operator==(const TSeries&, const TSeries&) = default;

   private:
    std::vector<QRat> c_;
};

// e_q(t) = sum t^n / [n]_q!, n < n_terms.
TSeries eq_series(std::size_t n_terms);
// e_q(y t).
TSeries eq_series_scaled(const QRat& y, std::size_t n_terms);
// (e_q(t) - 1) / t, known up to t^(cap-1).
TSeries eq_difference_quotient(std::size_t cap);

TSeries series_mul(const TSeries& f, const TSeries& g);
// f^r by repeated squaring; f^0 = 1 with the cap of f.
TSeries series_pow(const TSeries& f, std::size_t r);
// g with f g = 1 up to the cap. Throws NotInvertible on a zero constant term.
TSeries series_inverse(const TSeries& f);
// Continues an inverse whose first known.cap() coefficients are already
// computed; the result has the cap of f.
TSeries series_inverse_extend(const TSeries& f, const TSeries& known);
// f / t^k; the cap shrinks by k. Throws NotDivisible unless the first k
// coefficients vanish.
TSeries shifted_down(const TSeries& f, std::size_t k);

// (e_q(t) - 1)^r via the ordinary binomial expansion
// sum_j binom(r, j) (-1)^(r-j) e_q(t)^j.
TSeries eq_minus_one_pow_binomial(std::size_t r, std::size_t cap);
// (e_q(t) - 1)^r by repeated multiplication.
TSeries eq_minus_one_pow_product(std::size_t r, std::size_t cap);

// <f(t) | p(x)> = sum_k coeff_f(k) [k]_q! p_k. Throws CapTooSmall if
// deg p >= cap(f).
QRat pairing(const TSeries& f, const XPoly& p);
// f(t) p(x) = sum_k coeff_f(k) D_q^k p(x). Throws CapTooSmall as above.
XPoly apply(const TSeries& f, const XPoly& p);

struct ShefferCase {
    std::size_t n;
    std::size_t k;
    QRat value;  // <g t^k | s_n>
    bool pass;
};

struct ShefferReport {
    std::vector<ShefferCase> cases;
    bool all_pass() const;
};

// Checks <g(t) t^k | s_n(x)> = [n]_q! delta_{n,k} for all n, k < s.size().
ShefferReport sheffer_check(const TSeries& g, std::span<const XPoly> s);

// Checks <f_1 ... f_m | x^n> against the q-multinomial expansion
// sum_{i_1+...+i_m=n} binom(n; i_1..i_m)_q <f_1 | x^i_1> ... <f_m | x^i_m>.
bool pairing_multinomial_check(std::span<const TSeries> fs, std::size_t n);
// Right-hand side of the above on its own.
QRat pairing_multinomial_sum(std::span<const TSeries> fs, std::size_t n);

// {"cap": N, "coeffs": [QRat-json, ...]}.
nlohmann::json to_json(const TSeries& f);

}  // namespace qumbral

#endif
