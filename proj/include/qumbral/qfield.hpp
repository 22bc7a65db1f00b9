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

#ifndef QUMBRAL_QFIELD_HPP
#define QUMBRAL_QFIELD_HPP

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "qumbral/errors.hpp"

namespace qumbral {

using Integer = mpz_class;
using Rational = mpq_class;

/*
 * Dense polynomial in q with arbitrary-precision integer coefficients.
 * coeffs()[i] is the coefficient of q^i. The zero polynomial is the empty
 * vector; otherwise the highest stored coefficient is nonzero.
 */
class IntPolyQ {
   public:
    IntPolyQ() = default;
    IntPolyQ(long c);
    IntPolyQ(const Integer& c);
    explicit IntPolyQ(std::vector<Integer> coeffs);

    static IntPolyQ monomial(const Integer& c, std::size_t k);

    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    // -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Integer>& coeffs() const noexcept { return c_; }
    Integer operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }
    // Zero for the zero polynomial.
    Integer leading() const { return c_.empty() ? Integer(0) : c_.back(); }

    // Nonnegative gcd of the coefficients; 0 for the zero polynomial.
    Integer content() const;
    // p / content(p), sign kept.
    IntPolyQ primitive_part() const;
    Integer max_norm() const;

    Integer eval(const Integer& q0) const;
    Rational eval(const Rational& q0) const;

    IntPolyQ operator-() const;
    IntPolyQ& operator+=(const IntPolyQ& rhs);
    IntPolyQ& operator-=(const IntPolyQ& rhs);
    IntPolyQ& operator*=(const Integer& s);

    friend IntPolyQ operator+(IntPolyQ lhs, const IntPolyQ& rhs) { return lhs += rhs; }
    friend IntPolyQ operator-(IntPolyQ lhs, const IntPolyQ& rhs) { return lhs -= rhs; }
    friend IntPolyQ operator*(const IntPolyQ& lhs, const IntPolyQ& rhs);
    friend IntPolyQ operator*(IntPolyQ lhs, const Integer& s) { return lhs *= s; }
    friend bool operator==(const IntPolyQ& lhs, const IntPolyQ& rhs) { return lhs.c_ == rhs.c_; }

   private:
    void trim();

    std::vector<Integer> c_;
};

// Exact quotient a / b in Z[q], or nullopt if b does not divide a.
std::optional<IntPolyQ> divide_exact(const IntPolyQ& a, const IntPolyQ& b);

// Greatest common divisor in Z[q], normalized to a positive leading
// coefficient. gcd(0, 0) = 0.
IntPolyQ gcd(const IntPolyQ& a, const IntPolyQ& b);

std::string to_string(const IntPolyQ& p);
std::string to_latex(const IntPolyQ& p);

/*
 * Element of Q(q). Always stored reduced: gcd(num, den) = 1 in Z[q] and
 * den has a positive leading coefficient, so equality is structural.
 * Zero is 0/1.
 */
class QRat {
   public:
    QRat() : den_(1) {}
    QRat(long c) : num_(c), den_(1) {}
    QRat(const Integer& c) : num_(c), den_(1) {}
    QRat(IntPolyQ num) : num_(std::move(num)), den_(1) {}
    // Throws DivisionByZero if den is the zero polynomial.
    QRat(IntPolyQ num, IntPolyQ den);

    static QRat from_rational(const Rational& r);
    // The indeterminate q raised to k.
    static QRat q_power(std::size_t k);

    const IntPolyQ& num() const noexcept { return num_; }
    const IntPolyQ& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const noexcept { return num_ == den_; }
    // True when den = 1.
    bool is_polynomial() const noexcept { return den_.degree() == 0 && den_.leading() == 1; }

    // Throws PoleAtPoint if den(q0) = 0.
    Rational eval(const Rational& q0) const;

    QRat inverse() const;

    QRat operator-() const;
    QRat& operator+=(const QRat& rhs);
    QRat& operator-=(const QRat& rhs);
    QRat& operator*=(const QRat& rhs);
    QRat& operator/=(const QRat& rhs);

    friend QRat operator+(QRat lhs, const QRat& rhs) { return lhs += rhs; }
    friend QRat operator-(QRat lhs, const QRat& rhs) { return lhs -= rhs; }
    friend QRat operator*(QRat lhs, const QRat& rhs) { return lhs *= rhs; }
    friend QRat operator/(QRat lhs, const QRat& rhs) { return lhs /= rhs; }
    friend bool operator==(const QRat& lhs, const QRat& rhs) = default;

   private:
    struct Reduced {};
    QRat(IntPolyQ num, IntPolyQ den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
    void fix_sign();

    IntPolyQ num_;
    IntPolyQ den_;
};

inline Rational eval(const QRat& a, const Rational& q0) { return a.eval(q0); }

// Human form: "(num)/(den)" with parentheses only around multi-term parts,
// e.g. "-1/(1+q)" or "q^2/(1+2q+2q^2+q^3)".
std::string to_string(const QRat& a);
std::string to_latex(const QRat& a);
// {"num": [...], "den": [...]}, ascending powers of q. Coefficients outside
// the int64 range are emitted as decimal strings.
nlohmann::json to_json(const QRat& a);
// Accepts the JSON form only; integers or decimal strings as coefficients.
QRat qrat_from_json(const nlohmann::json& j);

// Parses "p", "-p" or "p/r" into an exact rational.
Rational parse_rational(const std::string& text);

nlohmann::json integer_to_json(const Integer& z);
Integer integer_from_json(const nlohmann::json& j);

}  // namespace qumbral

#endif
