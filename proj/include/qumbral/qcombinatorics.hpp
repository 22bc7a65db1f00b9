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

#ifndef QUMBRAL_QCOMBINATORICS_HPP
#define QUMBRAL_QCOMBINATORICS_HPP

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <vector>

#include "qumbral/qfield.hpp"
#include "qumbral/qpolynomial.hpp"

namespace qumbral {

// [n]_q = 1 + q + ... + q^(n-1).
QRat qint(std::size_t n);
// [n]_q! = [1]_q [2]_q ... [n]_q, with [0]_q! = 1.
QRat qfactorial(std::size_t n);
// [n]_q [n-1]_q ... [n-k+1]_q, i.e. [n]_q! / [n-k]_q!. Requires k <= n.
QRat qfalling(std::size_t n, std::size_t k);
// Gaussian binomial; 0 outside 0 <= k <= n.
QRat qbinomial(std::int64_t n, std::int64_t k);
// Ordinary binomial coefficient; 0 outside 0 <= k <= n.
Integer binomial(std::int64_t n, std::int64_t k);

// Weak composition: ordered nonnegative parts with a fixed total.
class Composition {
   public:
    Composition() = default;
    explicit Composition(std::vector<std::size_t> parts);

    const std::vector<std::size_t>& parts() const noexcept { return parts_; }
    std::size_t arity() const noexcept { return parts_.size(); }
    std::size_t total() const noexcept { return total_; }
    std::size_t operator[](std::size_t i) const { return parts_[i]; }

    friend bool operator==(const Composition&, const Composition&) = default;

   private:
    friend class CompositionIterator;
    std::vector<std::size_t> parts_;
    std::size_t total_ = 0;
};

// [n]_q! / ([i_1]_q! ... [i_m]_q!). Throws CompositionMismatch if the
// parts do not sum to n.
QRat qmultinomial(std::size_t n, const Composition& parts);

// Lexicographic walk over the weak compositions of n into j parts.
class CompositionIterator {
   public:
    using value_type = Composition;
    using difference_type = std::ptrdiff_t;

    CompositionIterator() = default;
    CompositionIterator(std::size_t n, std::size_t j);

    const Composition& operator*() const noexcept { return current_; }
    const Composition* operator->() const noexcept { return &current_; }
    CompositionIterator& operator++();
    CompositionIterator operator++(int) {
        auto tmp = *this;
        ++*this;
        return tmp;
    }
    friend bool operator==(const CompositionIterator& it, std::default_sentinel_t) noexcept { return it.done_; }

   private:
    Composition current_;
    bool done_ = true;
};

class CompositionRange {
   public:
    CompositionRange(std::size_t n, std::size_t j) : n_(n), j_(j) {}
    CompositionIterator begin() const { return {n_, j_}; }
    std::default_sentinel_t end() const noexcept { return {}; }

   private:
    std::size_t n_;
    std::size_t j_;
};

// Weak compositions of n into exactly j parts, lexicographic. For j = 0
// there is one (empty) composition when n = 0 and none otherwise.
inline CompositionRange compositions(std::size_t n, std::size_t j) { return {n, j}; }

// (x-1)(x-q)...(x-q^(n-1)) expanded in the monomial basis via
//   sum_m binom(n,m)_q (-1)^(n-m) q^binom(n-m,2) x^m.
XPoly qpochhammer_x_minus_1(std::size_t n);

// prod_{i<n} (a + q^i b).
QRat qshifted_power(const QRat& a, const QRat& b, std::size_t n);

}  // namespace qumbral

#endif
