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

#include <random>

#include "doctest.h"
#include "qumbral/qcombinatorics.hpp"
#include "qumbral/qpolynomial.hpp"

using namespace qumbral;

namespace {

IntPolyQ P(std::initializer_list<long> cs) {
    std::vector<Integer> v;
    for (long c : cs) v.emplace_back(c);
    return IntPolyQ(std::move(v));
}

XPoly random_poly(std::mt19937_64& rng, std::size_t deg) {
    std::vector<QRat> c(deg + 1);
    for (auto& a : c) {
        long n = static_cast<long>(rng() % 7) - 3;
        long d = static_cast<long>(rng() % 3) + 1;
        a = QRat(P({n, static_cast<long>(rng() % 3)}), P({d, 1}));
    }
    return XPoly(std::move(c));
}

// (p(qx) - p(x)) / ((q-1)x), by substitution and explicit division by x
XPoly dq_by_substitution(const XPoly& p) {
    XPoly diff;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        diff += XPoly::monomial(k, p.coeffs()[k] * (QRat::q_power(k) - QRat(1)));
    }
    std::vector<QRat> c;
    for (std::size_t k = 1; k < diff.coeffs().size(); ++k) c.push_back(diff.coeffs()[k] / QRat(P({-1, 1})));
    CHECK(diff.coeff(0).is_zero());
    return XPoly(std::move(c));
}

}  // namespace

TEST_CASE("XPoly arithmetic") {
    XPoly x = XPoly::x();
    CHECK((x + 1) * (x - 1) == x * x - 1);
    CHECK((x - x).is_zero());
    CHECK(XPoly().degree() == -1);
    CHECK(XPoly::monomial(3, qint(2)).coeff(3) == qint(2));
    CHECK(XPoly::monomial(3, QRat()).is_zero());
    CHECK(scale(x, qint(3)).coeff(1) == qint(3));
}

TEST_CASE("q-derivative") {
    XPoly x3 = XPoly::monomial(3);
    CHECK(dq(x3) == XPoly::monomial(2, qint(3)));
    CHECK(dq(XPoly(5)).is_zero());
    CHECK(dq_iter(x3, 2) == XPoly::monomial(1, qint(3) * qint(2)));
    CHECK(dq_iter(x3, 3) == XPoly(qfactorial(3)));
    CHECK(dq_iter(x3, 4).is_zero());
    CHECK(dq_iter(x3, 0) == x3);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 20; ++i) {
        XPoly a = random_poly(rng, rng() % 6), b = random_poly(rng, rng() % 6);
        QRat c(P({1, 2}), P({3}));
        CHECK(dq(a) == dq_by_substitution(a));
        CHECK(dq(a + scale(b, c)) == dq(a) + scale(dq(b), c));
        CHECK(dq(jackson_antiderivative(a)) == a);
        CHECK(jackson_antiderivative(a).coeff(0).is_zero());
    }
    // q-Leibniz rule: D(fg)(x) = f(qx) Dg(x) + g(x) Df(x)
    XPoly f = XPoly::x() * XPoly::x() + 1, g = XPoly::x() - 2;
    XPoly f_qx({QRat(1), QRat(), QRat::q_power(2)});
    CHECK(dq(f * g) == f_qx * dq(g) + g * dq(f));
}

TEST_CASE("Jackson integrals") {
    for (std::size_t n = 0; n <= 8; ++n) {
        CHECK(jackson_integral_01(XPoly::monomial(n)) == qint(n + 1).inverse());
    }
    XPoly p = XPoly::monomial(2) + XPoly::x();
    QRat a(2), b(P({0, 1}));
    CHECK(jackson_integral(p, QRat(), QRat(1)) == jackson_integral_01(p));
    CHECK(jackson_integral(p, a, b) == -jackson_integral(p, b, a));
    CHECK(jackson_integral(p, a, b) == eval_x(jackson_antiderivative(p), b) - eval_x(jackson_antiderivative(p), a));
    // fundamental theorem: integral of Df over [a, b] is f(b) - f(a)
    std::mt19937_64 rng(9);
    for (int i = 0; i < 10; ++i) {
        XPoly f = random_poly(rng, 5);
        CHECK(jackson_integral(dq(f), a, b) == eval_x(f, b) - eval_x(f, a));
    }
}

TEST_CASE("evaluation") {
    XPoly p({QRat(1), qint(2), QRat(P({0, 1}))});  // 1 + (1+q)x + q x^2
    CHECK(eval_x(p, QRat()) == QRat(1));
    CHECK(eval_x(p, QRat(1)) == QRat(P({2, 2})));
    CHECK(eval_at(p, Rational(1, 2), Rational(2)) == Rational(1) + Rational(3) + Rational(2));
    // eval_at agrees with evaluating in q after substituting x
    std::mt19937_64 rng(13);
    for (int i = 0; i < 10; ++i) {
        XPoly r = random_poly(rng, 4);
        Rational q0(2, 5), x0(-3, 2);
        CHECK(eval_at(r, q0, x0) == eval_x(r, QRat::from_rational(x0)).eval(q0));
    }
    CHECK_THROWS_AS(eval_at(XPoly(qint(2).inverse()), Rational(-1), Rational(0)), PoleAtPoint);
}

TEST_CASE("rendering") {
    CHECK(to_string(qpochhammer_x_minus_1(2)) == "x^2 - (1+q)*x + q");
    CHECK(to_string(XPoly()) == "0");
    CHECK(to_string(XPoly::x()) == "x");
    CHECK(to_string(XPoly::monomial(1, QRat(-1))) == "-x");
    CHECK(to_string(XPoly({QRat(P({-1}), P({1, 1})), QRat(1)})) == "x - 1/(1+q)");
    CHECK(to_latex(qpochhammer_x_minus_1(2)) == "x^{2} - \\left(1+q\\right)x + q");
}

TEST_CASE("JSON round trip") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 20; ++i) {
        XPoly p = random_poly(rng, rng() % 7);
        CHECK(xpoly_from_json(nlohmann::json::parse(to_json(p).dump())) == p);
    }
    CHECK(to_json(XPoly())["coeffs"].empty());
    CHECK_THROWS_AS(xpoly_from_json(nlohmann::json::parse("[1,2]")), ParseError);
}
