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

#include "qumbral/qfield.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace qumbral {

namespace {

std::size_t nonzero_terms(const IntPolyQ& p) {
    return static_cast<std::size_t>(
        std::count_if(p.coeffs().begin(), p.coeffs().end(), [](const Integer& c) { return c != 0; }));
}

std::size_t valuation(const IntPolyQ& p) {
    const auto& c = p.coeffs();
    std::size_t v = 0;
    while (v < c.size() && c[v] == 0) ++v;
    return v;
}

IntPolyQ shift_down(const IntPolyQ& p, std::size_t k) {
    if (k == 0) return p;
    return IntPolyQ(std::vector<Integer>(p.coeffs().begin() + static_cast<std::ptrdiff_t>(k), p.coeffs().end()));
}

IntPolyQ shift_up(const IntPolyQ& p, std::size_t k) {
    if (k == 0 || p.is_zero()) return p;
    std::vector<Integer> c(k, Integer(0));
    c.insert(c.end(), p.coeffs().begin(), p.coeffs().end());
    return IntPolyQ(std::move(c));
}

IntPolyQ positive_primitive(const IntPolyQ& p) {
    IntPolyQ r = p.primitive_part();
    return r.leading() < 0 ? -r : r;
}

// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a mod b.
IntPolyQ pseudo_remainder(IntPolyQ a, const IntPolyQ& b) {
    const long db = b.degree();
    const Integer lb = b.leading();
    while (!a.is_zero() && a.degree() >= db) {
        const Integer la = a.leading();
        const auto shift = static_cast<std::size_t>(a.degree() - db);
        a *= lb;
        a -= shift_up(b * la, shift);
    }
    return a;
}

IntPolyQ primitive_prs_gcd(IntPolyQ a, IntPolyQ b) {
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        if (b.degree() == 0) return IntPolyQ(1);
        IntPolyQ r = pseudo_remainder(a, b);
        a = std::move(b);
        b = r.is_zero() ? r : r.primitive_part();
    }
    return positive_primitive(a);
}

// Symmetric xi-adic digits of g.
IntPolyQ xi_adic(Integer g, const Integer& xi) {
    std::vector<Integer> c;
    const Integer half = xi / 2;
    while (g != 0) {
        Integer d = g % xi;  // sign follows g
        if (d > half) d -= xi;
        if (d < -half) d += xi;
        c.push_back(d);
        g = (g - d) / xi;
    }
    return IntPolyQ(std::move(c));
}

bool divides(const IntPolyQ& g, const IntPolyQ& p) { return divide_exact(p, g).has_value(); }

// Both arguments primitive with positive leading coefficient, nonzero
// constant term, degree >= 1.
IntPolyQ primitive_gcd(const IntPolyQ& a, const IntPolyQ& b) {
    if (a == b) return a;
    // Heuristic gcd via evaluation at a large integer; every candidate is
    // confirmed by exact division before it is accepted.
    Integer xi = 2 * std::min(a.max_norm(), b.max_norm()) + 29;
    for (int attempt = 0; attempt < 6; ++attempt) {
        const Integer ga = a.eval(xi);
        const Integer gb = b.eval(xi);
        Integer g;
        mpz_gcd(g.get_mpz_t(), ga.get_mpz_t(), gb.get_mpz_t());
        IntPolyQ cand = xi_adic(g, xi);
        if (!cand.is_zero()) {
            cand = positive_primitive(cand);
            // xi >= 2 min(|a|, |b|) + 2 holds throughout, so a candidate that
            // divides both inputs is the gcd; the constant 1 divides anything.
            if (cand.degree() == 0) return IntPolyQ(1);
            if (divides(cand, a) && divides(cand, b)) {
                return cand;
            }
        }
        xi = xi * 73794 / 27011;
    }
    return primitive_prs_gcd(a, b);
}

}  // namespace

IntPolyQ::IntPolyQ(long c) {
    if (c != 0) c_.emplace_back(c);
}

IntPolyQ::IntPolyQ(const Integer& c) {
    if (c != 0) c_.push_back(c);
}

IntPolyQ::IntPolyQ(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPolyQ IntPolyQ::monomial(const Integer& c, std::size_t k) {
    if (c == 0) return {};
    std::vector<Integer> v(k + 1, Integer(0));
    v[k] = c;
    return IntPolyQ(std::move(v));
}

void IntPolyQ::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Integer IntPolyQ::content() const {
    Integer g = 0;
    for (const auto& c : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPolyQ IntPolyQ::primitive_part() const {
    const Integer g = content();
    if (g == 0 || g == 1) return *this;
    IntPolyQ r = *this;
    for (auto& c : r.c_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return r;
}

Integer IntPolyQ::max_norm() const {
    Integer m = 0;
    for (const auto& c : c_) {
        if (abs(c) > m) m = abs(c);
    }
    return m;
}

Integer IntPolyQ::eval(const Integer& q0) const {
    Integer acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= q0;
        acc += *it;
    }
    return acc;
}

Rational IntPolyQ::eval(const Rational& q0) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= q0;
        acc += *it;
    }
    acc.canonicalize();
    return acc;
}

IntPolyQ IntPolyQ::operator-() const {
    IntPolyQ r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

IntPolyQ& IntPolyQ::operator+=(const IntPolyQ& rhs) {
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), Integer(0));
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
    trim();
    return *this;
}

IntPolyQ& IntPolyQ::operator-=(const IntPolyQ& rhs) {
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), Integer(0));
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
    trim();
    return *this;
}

IntPolyQ& IntPolyQ::operator*=(const Integer& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

IntPolyQ operator*(const IntPolyQ& lhs, const IntPolyQ& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    if (lhs.c_.size() == 1) return rhs * lhs.c_[0];
    if (rhs.c_.size() == 1) return lhs * rhs.c_[0];
    std::vector<Integer> out(lhs.c_.size() + rhs.c_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < lhs.c_.size(); ++i) {
        if (lhs.c_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.c_.size(); ++j) {
            mpz_addmul(out[i + j].get_mpz_t(), lhs.c_[i].get_mpz_t(), rhs.c_[j].get_mpz_t());
        }
    }
    return IntPolyQ(std::move(out));
}

std::optional<IntPolyQ> divide_exact(const IntPolyQ& a, const IntPolyQ& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (a.is_zero()) return IntPolyQ();
    if (a.degree() < b.degree()) return std::nullopt;
    const auto& bc = b.coeffs();
    // Cheap rejections: values at q = 0 and q = 1 must divide.
    if (bc[0] != 0 && !mpz_divisible_p(a.coeffs()[0].get_mpz_t(), bc[0].get_mpz_t())) return std::nullopt;
    if (const Integer b1 = b.eval(Integer(1)); b1 != 0) {
        const Integer a1 = a.eval(Integer(1));
        if (!mpz_divisible_p(a1.get_mpz_t(), b1.get_mpz_t())) return std::nullopt;
    }

    std::vector<Integer> rem = a.coeffs();
    const auto db = static_cast<std::size_t>(b.degree());
    const auto dq = static_cast<std::size_t>(a.degree() - b.degree());
    std::vector<Integer> quot(dq + 1, Integer(0));
    const Integer& lb = bc.back();
    for (std::size_t step = dq + 1; step-- > 0;) {
        Integer& top = rem[step + db];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
        Integer qc;
        mpz_divexact(qc.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
        for (std::size_t j = 0; j <= db; ++j) {
            mpz_submul(rem[step + j].get_mpz_t(), qc.get_mpz_t(), bc[j].get_mpz_t());
        }
        quot[step] = std::move(qc);
    }
    for (std::size_t i = 0; i < db; ++i) {
        if (rem[i] != 0) return std::nullopt;
    }
    return IntPolyQ(std::move(quot));
}

IntPolyQ gcd(const IntPolyQ& a, const IntPolyQ& b) {
    if (a.is_zero()) return b.leading() < 0 ? -b : b;
    if (b.is_zero()) return a.leading() < 0 ? -a : a;
    Integer cg;
    {
        const Integer ca = a.content();
        const Integer cb = b.content();
        mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    }
    if (a.is_constant() || b.is_constant()) return IntPolyQ(cg);

    const std::size_t va = valuation(a);
    const std::size_t vb = valuation(b);
    const IntPolyQ pa = positive_primitive(shift_down(a, va));
    const IntPolyQ pb = positive_primitive(shift_down(b, vb));
    IntPolyQ g = (pa.is_constant() || pb.is_constant()) ? IntPolyQ(1) : primitive_gcd(pa, pb);
    return shift_up(g, std::min(va, vb)) * cg;
}

std::string to_string(const IntPolyQ& p) {
    if (p.is_zero()) return "0";
    std::string out;
    const auto& c = p.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        std::string term;
        if (k == 0) {
            term = c[k].get_str();
        } else {
            if (c[k] == 1) {
            } else if (c[k] == -1) {
                term = "-";
            } else {
                term = c[k].get_str();
            }
            term += k == 1 ? "q" : "q^" + std::to_string(k);
        }
        if (!out.empty() && term[0] != '-') out += '+';
        out += term;
    }
    return out;
}

std::string to_latex(const IntPolyQ& p) {
    if (p.is_zero()) return "0";
    std::string out;
    const auto& c = p.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        std::string term;
        if (k == 0) {
            term = c[k].get_str();
        } else {
            if (c[k] == -1) {
                term = "-";
            } else if (c[k] != 1) {
                term = c[k].get_str();
            }
            term += k == 1 ? "q" : "q^{" + std::to_string(k) + "}";
        }
        if (!out.empty() && term[0] != '-') out += '+';
        out += term;
    }
    return out;
}

QRat::QRat(IntPolyQ num, IntPolyQ den) {
    if (den.is_zero()) throw DivisionByZero();
    if (num.is_zero()) {
        den_ = IntPolyQ(1);
        return;
    }
    const IntPolyQ g = gcd(num, den);
    if (g.degree() == 0 && g.leading() == 1) {
        num_ = std::move(num);
        den_ = std::move(den);
    } else {
        num_ = *divide_exact(num, g);
        den_ = *divide_exact(den, g);
    }
    fix_sign();
}

QRat QRat::from_rational(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    return QRat(IntPolyQ(c.get_num()), IntPolyQ(c.get_den()), Reduced{});
}

QRat QRat::q_power(std::size_t k) { return QRat(IntPolyQ::monomial(Integer(1), k)); }

void QRat::fix_sign() {
    if (den_.leading() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

Rational QRat::eval(const Rational& q0) const {
    const Rational d = den_.eval(q0);
    if (d == 0) throw PoleAtPoint("denominator " + to_string(den_) + " vanishes at q = " + q0.get_str());
    Rational r = num_.eval(q0) / d;
    r.canonicalize();
    return r;
}

QRat QRat::inverse() const {
    if (is_zero()) throw DivisionByZero();
    QRat r(den_, num_, Reduced{});
    r.fix_sign();
    return r;
}

QRat QRat::operator-() const { return QRat(-num_, den_, Reduced{}); }

QRat& QRat::operator+=(const QRat& rhs) {
    if (rhs.is_zero()) return *this;
    if (is_zero()) return *this = rhs;
    if (is_polynomial() && rhs.is_polynomial()) {
        num_ += rhs.num_;
        return *this;
    }
    const IntPolyQ g = gcd(den_, rhs.den_);
    if (g.degree() == 0 && g.leading() == 1) {
        num_ = num_ * rhs.den_ + rhs.num_ * den_;
        if (num_.is_zero()) return *this = QRat();
        den_ = den_ * rhs.den_;
        return *this;
    }
    const IntPolyQ d1 = *divide_exact(den_, g);
    const IntPolyQ d2 = *divide_exact(rhs.den_, g);
    IntPolyQ t = num_ * d2 + rhs.num_ * d1;
    if (t.is_zero()) return *this = QRat();
    const IntPolyQ h = gcd(t, g);
    num_ = *divide_exact(t, h);
    den_ = d1 * *divide_exact(rhs.den_, h);
    fix_sign();
    return *this;
}

QRat& QRat::operator-=(const QRat& rhs) { return *this += -rhs; }

QRat& QRat::operator*=(const QRat& rhs) {
    if (is_zero()) return *this;
    if (rhs.is_zero()) return *this = QRat();
    const IntPolyQ g1 = gcd(num_, rhs.den_);
    const IntPolyQ g2 = gcd(rhs.num_, den_);
    const IntPolyQ n1 = *divide_exact(num_, g1);
    const IntPolyQ n2 = *divide_exact(rhs.num_, g2);
    const IntPolyQ d1 = *divide_exact(den_, g2);
    const IntPolyQ d2 = *divide_exact(rhs.den_, g1);
    num_ = n1 * n2;
    den_ = d1 * d2;
    fix_sign();
    return *this;
}

QRat& QRat::operator/=(const QRat& rhs) { return *this *= rhs.inverse(); }

std::string to_string(const QRat& a) {
    const std::string n = to_string(a.num());
    if (a.is_polynomial()) return n;
    const std::string d = to_string(a.den());
    const std::string ns = nonzero_terms(a.num()) > 1 ? "(" + n + ")" : n;
    const std::string ds = nonzero_terms(a.den()) > 1 ? "(" + d + ")" : d;
    return ns + "/" + ds;
}

std::string to_latex(const QRat& a) {
    if (a.is_polynomial()) return to_latex(a.num());
    if (nonzero_terms(a.num()) == 1 && a.num().leading() < 0) {
        return "-\\frac{" + to_latex(-a.num()) + "}{" + to_latex(a.den()) + "}";
    }
    return "\\frac{" + to_latex(a.num()) + "}{" + to_latex(a.den()) + "}";
}

nlohmann::json integer_to_json(const Integer& z) {
    if (z.fits_slong_p()) return nlohmann::json(static_cast<std::int64_t>(z.get_si()));
    return nlohmann::json(z.get_str());
}

Integer integer_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
        return Integer(std::to_string(j.get<std::int64_t>()));
    }
    if (j.is_string()) {
        const auto& s = j.get_ref<const std::string&>();
        const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
        if (s.size() == start || !std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                                              [](unsigned char ch) { return std::isdigit(ch); })) {
            throw ParseError("invalid integer string: \"" + s + "\"");
        }
        return Integer(s);
    }
    throw ParseError("expected an integer, got " + j.dump());
}

namespace {

nlohmann::json poly_to_json(const IntPolyQ& p) {
    auto arr = nlohmann::json::array();
    for (const auto& c : p.coeffs()) arr.push_back(integer_to_json(c));
    return arr;
}

IntPolyQ poly_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw ParseError("expected a coefficient array, got " + j.dump());
    std::vector<Integer> c;
    c.reserve(j.size());
    for (const auto& e : j) c.push_back(integer_from_json(e));
    return IntPolyQ(std::move(c));
}

}  // namespace

nlohmann::json to_json(const QRat& a) { return {{"num", poly_to_json(a.num())}, {"den", poly_to_json(a.den())}}; }

QRat qrat_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
        throw ParseError("expected {\"num\": [...], \"den\": [...]}, got " + j.dump());
    }
    IntPolyQ num = poly_from_json(j.at("num"));
    IntPolyQ den = poly_from_json(j.at("den"));
    if (den.is_zero()) throw ParseError("zero denominator in " + j.dump());
    return QRat(std::move(num), std::move(den));
}

Rational parse_rational(const std::string& text) {
    const auto digits = [](const std::string& s) {
        return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isdigit(ch); });
    };
    std::string s = text;
    bool negative = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        negative = s[0] == '-';
        s.erase(0, 1);
    }
    const auto slash = s.find('/');
    const std::string p = s.substr(0, slash);
    const std::string r = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!digits(p) || !digits(r)) throw ParseError("invalid rational \"" + text + "\" (expected p or p/r)");
    Integer den(r);
    if (den == 0) throw ParseError("zero denominator in \"" + text + "\"");
    Rational out(Integer(p), den);
    out.canonicalize();
    return negative ? Rational(-out) : out;
}

}  // namespace qumbral
