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
#include "qumbral/qfield.hpp"

using namespace qumbral;

namespace {

IntPolyQ P(std::initializer_list<long> cs) {
    std::vector<Integer> v;
    for (long c : cs) v.emplace_back(c);
    return IntPolyQ(std::move(v));
}

IntPolyQ random_poly(std::mt19937_64& rng, int max_deg, int height) {
    std::vector<Integer> v(rng() % (max_deg + 1) + 1);
    for (auto& c : v) c = static_cast<long>(rng() % (2 * height + 1)) - height;
    return IntPolyQ(std::move(v));
}

QRat random_qrat(std::mt19937_64& rng) {
    IntPolyQ den;
    while (den.is_zero()) den = random_poly(rng, 3, 4);
    return QRat(random_poly(rng, 3, 4), den);
}

// Euclid over Q[q], then scaled to a primitive integer polynomial with
// positive leading coefficient.
using RPoly = std::vector<Rational>;

void rtrim(RPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

RPoly rmod(RPoly a, const RPoly& b) {
    rtrim(a);
    while (a.size() >= b.size()) {
        Rational f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
        rtrim(a);
    }
    return a;
}

IntPolyQ euclid_gcd(const IntPolyQ& x, const IntPolyQ& y) {
    RPoly a(x.coeffs().begin(), x.coeffs().end()), b(y.coeffs().begin(), y.coeffs().end());
    rtrim(a);
    rtrim(b);
    while (!b.empty()) {
        RPoly r = rmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty()) return IntPolyQ();
    Integer l = 1;
    for (auto& c : a) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> z;
    for (auto& c : a) z.push_back(Integer(c * l));
    IntPolyQ p = IntPolyQ(std::move(z)).primitive_part();
    return p.leading() < 0 ? -p : p;
}

}  // namespace

TEST_CASE("IntPolyQ basics") {
    IntPolyQ p = P({1, 2, 1});
    CHECK(p.degree() == 2);
    CHECK(IntPolyQ().degree() == -1);
    CHECK(P({0, 0}).is_zero());
    CHECK(p * P({1, 1}) == P({1, 3, 3, 1}));
    CHECK(p.eval(Integer(2)) == 9);
    CHECK(p.eval(Rational(1, 2)) == Rational(9, 4));
    CHECK(P({6, 4, -2}).content() == 2);
    CHECK(P({6, 4, -2}).primitive_part() == P({3, 2, -1}));
    CHECK(to_string(P({1, 2, 2, 1})) == "1+2q+2q^2+q^3");
    CHECK(to_string(P({0, -1, 0, 3})) == "-q+3q^3");
    CHECK(to_latex(P({1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 5})) == "1+5q^{11}");
}

TEST_CASE("exact division") {
    auto d = divide_exact(P({1, 3, 3, 1}), P({1, 1}));
    REQUIRE(d);
    CHECK(*d == P({1, 2, 1}));
    CHECK_FALSE(divide_exact(P({1, 0, 1}), P({1, 1})));
    CHECK_FALSE(divide_exact(P({1}), P({0, 1})));
}

TEST_CASE("gcd agrees with Euclid over Q[q]") {
    CHECK(gcd(P({-1, 0, 1}), P({1, 2, 1})) == P({1, 1}));
    CHECK(gcd(P({0, 0, 2}), P({0, 4})) == P({0, 2}));
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        IntPolyQ c = random_poly(rng, 3, 3);
        IntPolyQ a = random_poly(rng, 4, 5) * c, b = random_poly(rng, 4, 5) * c;
        IntPolyQ g = gcd(a, b);
        if (a.is_zero() && b.is_zero()) continue;
        // same primitive part up to sign, and g divides both
        IntPolyQ gp = g.primitive_part();
        if (gp.leading() < 0) gp = -gp;
        CHECK(gp == euclid_gcd(a, b));
        if (!a.is_zero()) CHECK(divide_exact(a, g));
        if (!b.is_zero()) CHECK(divide_exact(b, g));
    }
}

TEST_CASE("QRat canonical form") {
    QRat a(P({-1, 0, 1}), P({-1, -1}));
    CHECK(a.num() == P({1, -1}));
    CHECK(a.den() == P({1}));
    CHECK(QRat(P({2}), P({-4, -4})) == QRat(P({-1}), P({2, 2})));
    CHECK(QRat(P({2}), P({-4, -4})).den() == P({2, 2}));
    CHECK(QRat(P({0}), P({3, 1})).den() == P({1}));
    CHECK(QRat(P({5}), P({0, 0, 10})) == QRat(P({1}), P({0, 0, 2})));
    CHECK(QRat(a.num(), a.den()) == a);
    CHECK_THROWS_AS(QRat(P({1}), IntPolyQ()), DivisionByZero);
    CHECK_THROWS_AS(QRat().inverse(), DivisionByZero);
    CHECK(QRat::q_power(3).num() == P({0, 0, 0, 1}));
}

TEST_CASE("field axioms on random elements") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 60; ++i) {
        QRat a = random_qrat(rng), b = random_qrat(rng), c = random_qrat(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == QRat());
        if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
        if (!b.is_zero()) CHECK((a / b) * b == a);
        // substitution is a ring homomorphism wherever defined
        Rational q0(3, 7);
        if (b.den().eval(q0) != 0 && a.den().eval(q0) != 0) {
            CHECK((a + b).eval(q0) == a.eval(q0) + b.eval(q0));
            CHECK((a * b).eval(q0) == a.eval(q0) * b.eval(q0));
        }
    }
}

TEST_CASE("evaluation") {
    QRat inv_1pq(P({1}), P({1, 1}));
    CHECK(inv_1pq.eval(Rational(1)) == Rational(1, 2));
    CHECK(QRat(P({1, 1, 1})).eval(Rational(1, 2)) == Rational(7, 4));
    QRat b2(P({0, 0, 1}), P({1, 2, 2, 1}));
    CHECK(b2.eval(Rational(1)) == Rational(1, 6));
    CHECK_THROWS_AS(inv_1pq.eval(Rational(-1)), PoleAtPoint);
    // removable singularity after cancellation
    QRat r(P({-1, 0, 1}), P({-1, 1}));
    CHECK(r.eval(Rational(1)) == 2);
}

TEST_CASE("rendering") {
    CHECK(to_string(QRat(P({-1}), P({1, 1}))) == "-1/(1+q)");
    CHECK(to_string(QRat(P({0, 0, 1}), P({1, 2, 2, 1}))) == "q^2/(1+2q+2q^2+q^3)");
    CHECK(to_string(QRat::from_rational(Rational(-3, 4))) == "-3/4");
    CHECK(to_string(QRat()) == "0");
    CHECK(to_latex(QRat(P({-1}), P({1, 1}))) == "-\\frac{1}{1+q}");
}

TEST_CASE("JSON round trip") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 30; ++i) {
        QRat a = random_qrat(rng);
        CHECK(qrat_from_json(to_json(a)) == a);
        CHECK(qrat_from_json(nlohmann::json::parse(to_json(a).dump())) == a);
    }
    Integer big("123456789012345678901234567890");
    CHECK(integer_to_json(big).is_string());
    CHECK(integer_from_json(integer_to_json(big)) == big);
    CHECK(integer_to_json(Integer(-5)) == -5);
    CHECK_THROWS_AS(qrat_from_json(nlohmann::json::parse(R"({"num":[1]})")), ParseError);
    CHECK_THROWS_AS(qrat_from_json(nlohmann::json::parse(R"({"num":[1],"den":[]})")), Error);
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("1/2") == Rational(1, 2));
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK(parse_rational("+7") == 7);
    CHECK_THROWS_AS(parse_rational("0.5"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
}
