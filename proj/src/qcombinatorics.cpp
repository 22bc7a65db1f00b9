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

#include "qumbral/qcombinatorics.hpp"

#include <mutex>
#include <numeric>

namespace qumbral {

namespace {

IntPolyQ qint_poly(std::size_t n) { return IntPolyQ(std::vector<Integer>(n, Integer(1))); }

// [n]_q! as an integer polynomial; memoized, grows on demand.
IntPolyQ factorial_poly(std::size_t n) {
    static std::mutex mu;
    static std::vector<IntPolyQ> table{IntPolyQ(1)};
    std::lock_guard lock(mu);
    while (table.size() <= n) {
        const std::size_t k = table.size();
        table.push_back(table.back() * qint_poly(k));
    }
    return table[n];
}

IntPolyQ exact(const IntPolyQ& a, const IntPolyQ& b) { return *divide_exact(a, b); }

}  // namespace

QRat qint(std::size_t n) { return QRat(qint_poly(n)); }

QRat qfactorial(std::size_t n) { return QRat(factorial_poly(n)); }

QRat qfalling(std::size_t n, std::size_t k) { return QRat(exact(factorial_poly(n), factorial_poly(n - k))); }

QRat qbinomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) return QRat();
    const auto un = static_cast<std::size_t>(n);
    const auto uk = static_cast<std::size_t>(k);
    return QRat(exact(factorial_poly(un), factorial_poly(uk) * factorial_poly(un - uk)));
}

Integer binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Composition::Composition(std::vector<std::size_t> parts)
    : parts_(std::move(parts)), total_(std::accumulate(parts_.begin(), parts_.end(), std::size_t{0})) {}

QRat qmultinomial(std::size_t n, const Composition& parts) {
    if (parts.total() != n) {
        throw CompositionMismatch("composition parts sum to " + std::to_string(parts.total()) + ", expected " +
                                  std::to_string(n));
    }
    IntPolyQ acc = factorial_poly(n);
    for (std::size_t p : parts.parts()) {
        if (p > 1) acc = exact(acc, factorial_poly(p));
    }
    return QRat(std::move(acc));
}

CompositionIterator::CompositionIterator(std::size_t n, std::size_t j) {
    if (j == 0) {
        done_ = n != 0;
        return;
    }
    current_.parts_.assign(j, 0);
    current_.parts_.back() = n;
    current_.total_ = n;
    done_ = false;
}

CompositionIterator& CompositionIterator::operator++() {
    auto& p = current_.parts_;
    if (p.size() <= 1) {
        done_ = true;
        return *this;
    }
    // Rightmost i < j-1 with a positive suffix sum after it.
    std::size_t suffix = p.back();
    for (std::size_t i = p.size() - 1; i-- > 0;) {
        if (suffix > 0) {
            ++p[i];
            for (std::size_t l = i + 1; l + 1 < p.size(); ++l) p[l] = 0;
            p.back() = suffix - 1;
            return *this;
        }
        suffix += p[i];
    }
    done_ = true;
    return *this;
}

XPoly qpochhammer_x_minus_1(std::size_t n) {
    std::vector<QRat> c(n + 1);
    for (std::size_t m = 0; m <= n; ++m) {
        const std::size_t d = n - m;
        const std::size_t qexp = d == 0 ? 0 : d * (d - 1) / 2;
        QRat term = qbinomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(m)) * QRat::q_power(qexp);
        c[m] = d % 2 == 0 ? term : -term;
    }
    return XPoly(std::move(c));
}

QRat qshifted_power(const QRat& a, const QRat& b, std::size_t n) {
    QRat acc(1);
    for (std::size_t i = 0; i < n; ++i) acc *= a + QRat::q_power(i) * b;
    return acc;
}

}  // namespace qumbral
