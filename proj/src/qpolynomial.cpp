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

#include "qumbral/qpolynomial.hpp"

#include <algorithm>

#include "qumbral/qcombinatorics.hpp"

namespace qumbral {

XPoly::XPoly(const QRat& c) {
    if (!c.is_zero()) c_.push_back(c);
}

XPoly::XPoly(std::vector<QRat> coeffs) : c_(std::move(coeffs)) { trim(); }

XPoly XPoly::monomial(std::size_t k, const QRat& c) {
    if (c.is_zero()) return {};
    std::vector<QRat> v(k + 1);
    v[k] = c;
    return XPoly(std::move(v));
}

void XPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

XPoly XPoly::operator-() const {
    XPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

XPoly& XPoly::operator+=(const XPoly& rhs) {
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
    trim();
    return *this;
}

XPoly& XPoly::operator-=(const XPoly& rhs) {
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
    trim();
    return *this;
}

XPoly& XPoly::operator*=(const QRat& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

XPoly operator*(const XPoly& lhs, const XPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<QRat> out(lhs.c_.size() + rhs.c_.size() - 1);
    for (std::size_t i = 0; i < lhs.c_.size(); ++i) {
        if (lhs.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.c_.size(); ++j) out[i + j] += lhs.c_[i] * rhs.c_[j];
    }
    return XPoly(std::move(out));
}

XPoly dq(const XPoly& p) {
    if (p.degree() < 1) return {};
    std::vector<QRat> out(p.coeffs().size() - 1);
    for (std::size_t n = 1; n < p.coeffs().size(); ++n) out[n - 1] = p.coeffs()[n] * qint(n);
    return XPoly(std::move(out));
}

XPoly dq_iter(const XPoly& p, std::size_t k) {
    if (k == 0) return p;
    if (static_cast<long>(k) > p.degree()) return {};
    // x^n -> [n]_q [n-1]_q ... [n-k+1]_q x^(n-k) in one pass.
    std::vector<QRat> out(p.coeffs().size() - k);
    for (std::size_t n = k; n < p.coeffs().size(); ++n) {
        if (!p.coeffs()[n].is_zero()) out[n - k] = p.coeffs()[n] * qfalling(n, k);
    }
    return XPoly(std::move(out));
}

XPoly jackson_antiderivative(const XPoly& p) {
    if (p.is_zero()) return {};
    std::vector<QRat> out(p.coeffs().size() + 1);
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) out[k + 1] = p.coeffs()[k] / qint(k + 1);
    return XPoly(std::move(out));
}

QRat jackson_integral_01(const XPoly& p) {
    QRat acc;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) acc += p.coeffs()[k] / qint(k + 1);
    return acc;
}

QRat jackson_integral(const XPoly& p, const QRat& a, const QRat& b) {
    const XPoly anti = jackson_antiderivative(p);
    return eval_x(anti, b) - eval_x(anti, a);
}

QRat eval_x(const XPoly& p, const QRat& x0) {
    QRat acc;
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc *= x0;
        acc += *it;
    }
    return acc;
}

Rational eval_at(const XPoly& p, const Rational& q0, const Rational& x0) {
    Rational acc = 0;
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc *= x0;
        acc += it->eval(q0);
    }
    acc.canonicalize();
    return acc;
}

namespace {

bool single_term(const IntPolyQ& p) {
    return std::count_if(p.coeffs().begin(), p.coeffs().end(), [](const Integer& c) { return c != 0; }) == 1;
}

// Sign carried by the lowest-power term of the numerator.
bool leads_negative(const QRat& c) {
    for (const auto& v : c.num().coeffs()) {
        if (v != 0) return v < 0;
    }
    return false;
}

// Descending powers of x; a coefficient whose lowest q-term is negative is
// written with a " - " joint.
template <class CoeffFn, class PowerFn>
std::string render_terms(const XPoly& p, CoeffFn coeff_str, PowerFn power_str, const char* times, const char* lparen,
                         const char* rparen) {
    if (p.is_zero()) return "0";
    const auto& c = p.coeffs();
    const long nterms = std::count_if(c.begin(), c.end(), [](const QRat& v) { return !v.is_zero(); });
    std::string out;
    for (std::size_t k = c.size(); k-- > 0;) {
        if (c[k].is_zero()) continue;
        const bool negative = leads_negative(c[k]);
        const QRat mag = negative ? -c[k] : c[k];
        const bool multi = !single_term(mag.num());
        std::string term;
        if (k == 0) {
            term = coeff_str(mag);
            if (multi && mag.is_polynomial() && nterms > 1) term = lparen + term + rparen;
        } else if (mag.is_one()) {
            term = power_str(k);
        } else {
            std::string cs = coeff_str(mag);
            if (multi && mag.is_polynomial()) {
                cs = lparen + cs + rparen;
            } else if (!mag.is_polynomial() && *times != '\0') {
                cs = lparen + cs + rparen;
            }
            term = cs + times + power_str(k);
        }
        if (out.empty()) {
            out = negative ? "-" + term : term;
        } else {
            out += negative ? " - " : " + ";
            out += term;
        }
    }
    return out;
}

}  // namespace

std::string to_string(const XPoly& p) {
    return render_terms(
        p, [](const QRat& c) { return to_string(c); },
        [](std::size_t k) { return k == 1 ? std::string("x") : "x^" + std::to_string(k); }, "*", "(", ")");
}

std::string to_latex(const XPoly& p) {
    return render_terms(
        p, [](const QRat& c) { return to_latex(c); },
        [](std::size_t k) { return k == 1 ? std::string("x") : "x^{" + std::to_string(k) + "}"; }, "", "\\left(",
        "\\right)");
}

nlohmann::json to_json(const XPoly& p) {
    auto arr = nlohmann::json::array();
    for (const auto& c : p.coeffs()) arr.push_back(to_json(c));
    return {{"coeffs", arr}};
}

XPoly xpoly_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("coeffs") || !j.at("coeffs").is_array()) {
        throw ParseError("expected {\"coeffs\": [...]}, got " + j.dump());
    }
    std::vector<QRat> c;
    for (const auto& e : j.at("coeffs")) c.push_back(qrat_from_json(e));
    return XPoly(std::move(c));
}

}  // namespace qumbral
