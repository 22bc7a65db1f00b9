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

#ifndef QUMBRAL_ERRORS_HPP
#define QUMBRAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qumbral {

class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
   public:
    DivisionByZero() : Error("division by the zero rational function") {}
};

// Denominator vanishes at the requested value of q.
class PoleAtPoint : public Error {
   public:
    using Error::Error;
};

class NotInvertible : public Error {
   public:
    NotInvertible() : Error("series has zero constant term and is not invertible") {}
};

class NotDivisible : public Error {
   public:
    using Error::Error;
};

// A polynomial of degree >= cap was paired with / acted on by a truncated series.
class CapTooSmall : public Error {
   public:
    using Error::Error;
};

class CompositionMismatch : public Error {
   public:
    using Error::Error;
};

class ParseError : public Error {
   public:
    using Error::Error;
};

class CapExceeded : public Error {
   public:
    using Error::Error;
};

class InvalidArgs : public Error {
   public:
    using Error::Error;
};

}  // namespace qumbral

#endif
