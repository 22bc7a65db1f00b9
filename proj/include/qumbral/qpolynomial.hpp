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

#ifndef QUMBRAL_QPOLYNOMIAL_HPP
#define QUMBRAL_QPOLYNOMIAL_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"

#include "qumbral/qfield.hpp"

namespace qumbral {

/*
 * Polynomial in x over Q(q). coeffs()[k] is the coefficient of x^k; the
 * leading stored coefficient is nonzero, zero is the empty vector.
 */
class XPoly {
   public:
    XPoly() = default;
    XPoly(const QRat& c);
    XPoly(long c) : XPoly(QRat(c)) {}
    explicit XPoly(std::vector<QRat> coeffs);

    static XPoly x() { return monomial(1); }
    static XPoly monomial(std::size_t k, const QRat& c = QRat(1));

    bool is_zero() const noexcept { return c_.empty(); }
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    const std::vector<QRat>& coeffs() const noexcept { return c_; }
    QRat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : QRat(); }

    XPoly operator-() const;
    XPoly& operator+=(const XPoly& rhs);
    XPoly& operator-=(const XPoly& rhs);
    XPoly& operator*=(const QRat& s);

    friend XPoly operator+(XPoly lhs, const XPoly& rhs) { return lhs += rhs; }
    friend XPoly operator-(XPoly lhs, const XPoly& rhs) { return lhs -= rhs; }
    friend XPoly operator*(const XPoly& lhs, const XPoly& rhs);
    friend XPoly operator*(XPoly p, const QRat& s) { return p *= s; }
    friend XPoly operator*(const QRat& s, XPoly p) { return p *= s; }
    friend bool operator==(const XPoly& lhs, const XPoly& rhs) = default;

   private:
    void trim();

    std::vector<QRat> c_;
};

inline XPoly scale(const XPoly& p, const QRat& c) { return p * c; }

// q-derivative: x^n -> [n]_q x^(n-1), extended linearly. At x = 0 this is
// the limit of the difference quotient.
XPoly dq(const XPoly& p);
XPoly dq_iter(const XPoly& p, std::size_t k);

// F with dq(F) = p and F(0) = 0: x^k -> x^(k+1) / [k+1]_q.
XPoly jackson_antiderivative(const XPoly& p);
// Jackson integral over [0, 1], from the exact antiderivative.
QRat jackson_integral_01(const XPoly& p);
QRat jackson_integral(const XPoly& p, const QRat& a, const QRat& b);

// Horner evaluation at x = x0.
QRat eval_x(const XPoly& p, const QRat& x0);
// Numeric substitution of both q and x.
Rational eval_at(const XPoly& p, const Rational& q0, const Rational& x0);

// Descending powers of x, e.g. "x^2 - (1+q)*x + q".
std::string to_string(const XPoly& p);
std::string to_latex(const XPoly& p);
// {"coeffs": [QRat-json, ...]} with ascending powers of x.
nlohmann::json to_json(const XPoly& p);
XPoly xpoly_from_json(const nlohmann::json& j);

}  // namespace qumbral

#endif
