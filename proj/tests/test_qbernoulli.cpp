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
#include <thread>

#include "doctest.h"
#include "qumbral/qbernoulli.hpp"
#include "qumbral/qcombinatorics.hpp"

using namespace qumbral;

namespace {

IntPolyQ P(std::initializer_list<long> cs) {
    std::vector<Integer> v;
    for (long c : cs) v.emplace_back(c);
    return IntPolyQ(std::move(v));
}

XPoly random_poly(std::mt19937_64& rng, std::size_t deg) {
    std::vector<QRat> c(deg + 1);
    for (auto& a : c) a = QRat(P({static_cast<long>(rng() % 9) - 4, static_cast<long>(rng() % 3)}), P({1, 1}));
    return XPoly(std::move(c));
}

}  // namespace

TEST_CASE("numbers") {
    BernoulliCache cache;
    CHECK(cache.number(0).is_one());
    CHECK(cache.number(1) == QRat(P({-1}), P({1, 1})));
    CHECK(cache.number(2) == QRat(P({0, 0, 1}), P({1, 2, 2, 1})));
    CHECK(to_string(cache.number(2)) == "q^2/(1+2q+2q^2+q^3)");
    for (std::size_t n = 0; n <= 14; ++n) CHECK(cache.number(n) == cache.number_rec(n));
    // classical values at q = 1
    CHECK(cache.number(4).eval(Rational(1)) == Rational(-1, 30));
    CHECK(cache.number(6).eval(Rational(1)) == Rational(1, 42));
    CHECK(cache.number(3).eval(Rational(1)) == 0);
    CHECK(cache.number(1).eval(Rational(1, 2)) == Rational(-2, 3));
    // the inverse series has plain coefficients B_k/[k]!
    TSeries inv = cache.inverse_series(5);
    for (std::size_t k = 0; k < 5; ++k) CHECK(inv.coeff(k) * qfactorial(k) == cache.number(k));
    CHECK(bernoulli_number(2) == cache.number(2));
}

TEST_CASE("numbers out of order and across threads") {
    BernoulliCache a, b;
    QRat high = a.number(17);
    for (std::size_t n = 0; n <= 17; ++n) b.number(n);
    CHECK(b.number(17) == high);
    BernoulliCache shared;
    std::vector<QRat> got(4);
    std::vector<std::thread> ts;
    for (std::size_t i = 0; i < 4; ++i) ts.emplace_back([&, i] { got[i] = shared.poly(6 + i).coeff(0); });
    for (auto& t : ts) t.join();
    for (std::size_t i = 0; i < 4; ++i) CHECK(got[i] == a.number(6 + i));
}

TEST_CASE("polynomials") {
    BernoulliCache cache;
    CHECK(cache.poly(0) == XPoly(1));
    CHECK(cache.poly(1) == XPoly::x() + XPoly(cache.number(1)));
    for (std::size_t n = 0; n <= 8; ++n) {
        XPoly b = cache.poly(n);
        CHECK(b.degree() == static_cast<long>(n));
        CHECK(eval_x(b, QRat()) == cache.number(n));
        if (n >= 1) {
            CHECK(dq(b) == scale(cache.poly(n - 1), qint(n)));
            CHECK(jackson_integral_01(b).is_zero());
        }
        if (n >= 2) CHECK(eval_x(b, QRat(1)) == cache.number(n));
    }
    CHECK(eval_x(cache.poly(1), QRat(1)) - cache.number(1) == QRat(1));
}

TEST_CASE("higher order") {
    BernoulliCache cache;
    for (std::size_t n = 0; n <= 5; ++n) {
        CHECK(cache.higher_number(n, 0) == (n == 0 ? QRat(1) : QRat()));
        CHECK(cache.higher_number(n, 1) == cache.number(n));
        CHECK(cache.higher_poly(n, 1) == cache.poly(n));
        for (std::size_t r = 0; r <= 3; ++r) {
            CHECK(cache.higher_number_multinomial(n, r) == cache.higher_number(n, r));
            CHECK(eval_x(cache.higher_poly(n, r), QRat()) == cache.higher_number(n, r));
        }
    }
    CHECK(cache.higher_number_multinomial(1, 2) == QRat(P({-2}), P({1, 1})));
    CHECK(cache.higher_number(0, 4).is_one());
    // the order-r series is the r-th power of the order-one series
    TSeries inv2 = cache.inverse_series(6) * cache.inverse_series(6);
    for (std::size_t n = 0; n < 6; ++n) CHECK(inv2.umbral_coeff(n) == cache.higher_number(n, 2));
}

TEST_CASE("perturbation hook") {
    BernoulliCache cache;
    XPoly before = cache.poly(4);
    QRat b2 = cache.higher_number(3, 2);
    cache.perturb_number(2, QRat(1));
    CHECK(cache.number(2) == bernoulli_number(2) + QRat(1));
    CHECK(cache.number(3) == bernoulli_number(3));
    CHECK(cache.poly(4) != before);
    CHECK(cache.number_rec(2) == bernoulli_number(2));
    CHECK(cache.higher_number_multinomial(3, 2) != b2);
}

TEST_CASE("expansion in the Bernoulli basis") {
    BernoulliCache cache;
    auto e0 = expand_in_bernoulli(XPoly(1), cache);
    CHECK(e0.coeffs == std::vector<QRat>{QRat(1)});
    auto e3 = expand_in_bernoulli(cache.poly(3), cache);
    CHECK(e3.coeffs == std::vector<QRat>{QRat(), QRat(), QRat(), QRat(1)});
    CHECK(e3.basis.kind == BasisKind::bernoulli);
    // x^n = sum_k binom(n,k)_q / [n-k+1]_q B_k(x)
    for (std::size_t n = 0; n <= 8; ++n) {
        auto e = expand_in_bernoulli(XPoly::monomial(n), cache);
        REQUIRE(e.coeffs.size() == n + 1);
        for (std::size_t k = 0; k <= n; ++k) {
            CHECK(e.coeffs[k] == qbinomial(n, k) / qint(n - k + 1));
        }
    }
    std::mt19937_64 rng(61);
    for (int i = 0; i < 10; ++i) {
        XPoly p = random_poly(rng, rng() % 8);
        CHECK(reconstruct(expand_in_bernoulli(p, cache), cache) == p);
    }
    CHECK(expand_in_bernoulli(XPoly(), cache).coeffs.empty());
}

TEST_CASE("q-Pochhammer basis") {
    BernoulliCache cache;
    for (std::size_t n = 0; n <= 7; ++n) {
        auto e = expand_in_qpoch(n, cache);
        CHECK(e.basis.kind == BasisKind::qpoch_x_minus_1);
        CHECK(reconstruct(e, cache) == cache.poly(n));
        CHECK(expand_in_qpoch_basis(cache.poly(n)).coeffs == e.coeffs);
        auto back = qpoch_in_bernoulli(n);
        CHECK(reconstruct(back, cache) == qpochhammer_x_minus_1(n));
        CHECK(back.coeffs == expand_in_bernoulli(qpochhammer_x_minus_1(n), cache).coeffs);
    }
    CHECK(basis_element({BasisKind::qpoch_x_minus_1, 1}, 3, cache) == qpochhammer_x_minus_1(3));
}

TEST_CASE("order-r basis") {
    BernoulliCache cache;
    std::mt19937_64 rng(71);
    for (std::size_t r = 1; r <= 3; ++r) {
        for (int i = 0; i < 3; ++i) {
            XPoly p = random_poly(rng, rng() % 7);
            auto e = expand_in_higher_bernoulli(p, r);
            CHECK(e.basis == Basis{BasisKind::bernoulli_order_r, r});
            CHECK(reconstruct(e, cache) == p);
        }
    }
    CHECK(expand_in_higher_bernoulli(XPoly::monomial(3), 1).coeffs == expand_in_bernoulli(XPoly::monomial(3), cache).coeffs);
    CHECK(to_string(Basis{BasisKind::bernoulli_order_r, 2}) == "bernoulli_order_r(2)");
}

TEST_CASE("closed form in the order-r basis") {
    BernoulliCache cache;
    for (std::size_t j = 0; j <= 3; ++j) {
        for (std::size_t big_n = 0; big_n <= 6; ++big_n) {
            QRat direct = pairing(series_pow(eq_series(big_n + 1), j), cache.poly(big_n));
            CHECK(eq_power_pairing_bernoulli(j, big_n, cache) == direct);
        }
    }
    for (std::size_t r = 1; r <= 3; ++r) {
        for (std::size_t n = 0; n <= 6; ++n) {
            for (std::size_t k = 0; k < r; ++k) {
                CHECK(low_regime_prefactor(n, r, k) == low_regime_prefactor_unsimplified(n, r, k));
            }
            auto closed = bernoulli_in_higher_closed_form(n, r, cache);
            auto direct = expand_in_higher_bernoulli(cache.poly(n), r);
            direct.coeffs.resize(closed.coeffs.size());
            CHECK(closed.coeffs == direct.coeffs);
        }
    }
    CHECK(closed_form_discrepancies().size() == 4);
}

TEST_CASE("JSON") {
    BernoulliCache cache;
    auto j = to_json(expand_in_higher_bernoulli(XPoly::monomial(2), 2));
    CHECK(j["basis"] == "bernoulli_order_r");
    CHECK(j["order"] == 2);
    CHECK(j["coeffs"].size() == 3);
    auto k = to_json(expand_in_bernoulli(XPoly::monomial(2), cache));
    CHECK_FALSE(k.contains("order"));
    CHECK(qrat_from_json(k["coeffs"][0]) == qint(3).inverse());
}
