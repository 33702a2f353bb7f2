/*
   Copyright 2026 The supertab Authors

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

#ifndef SUPERTAB_ERROR_HPP
#define SUPERTAB_ERROR_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace supertab {

class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
   public:
    DivisionByZero() : Error("division by zero in finite field") {}
};

class SpecMismatch : public Error {
   public:
    using Error::Error;
};

class OverflowError : public Error {
   public:
    using Error::Error;
};

class BadField : public Error {
   public:
    using Error::Error;
};

class PairOutOfRange : public Error {
   public:
    PairOutOfRange(int i, int j, int n)
        : Error("pair (" + std::to_string(i) + "," + std::to_string(j) + ") out of range for n=" +
                std::to_string(n)),
          pair_(i, j) {}
    std::pair<int, int> pair() const noexcept { return pair_; }

   private:
    std::pair<int, int> pair_;
};

/// Closure failure: each witness (i,j,k) has (i,j),(j,k) present but (i,k) missing.
class NotClosed : public Error {
   public:
    explicit NotClosed(std::vector<std::array<int, 3>> witnesses);
    const std::vector<std::array<int, 3>>& witnesses() const noexcept { return witnesses_; }

   private:
    std::vector<std::array<int, 3>> witnesses_;
};

class SyntaxError : public Error {
   public:
    SyntaxError(int line, const std::string& message)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}
    int line() const noexcept { return line_; }

   private:
    int line_;
};

class SizeCapExceeded : public Error {
   public:
    SizeCapExceeded(std::uint64_t cap, std::uint64_t required)
        : Error("enumeration needs " + std::to_string(required) + " elements, cap is " + std::to_string(cap)),
          cap_(cap),
          required_(required) {}
    std::uint64_t cap() const noexcept { return cap_; }
    std::uint64_t required() const noexcept { return required_; }

   private:
    std::uint64_t cap_;
    std::uint64_t required_;
};

/// Signals a bug in this library, never bad input.
class InternalInvariantViolation : public Error {
   public:
    using Error::Error;
};

class ShapeMismatch : public Error {
   public:
    using Error::Error;
};

class NonMonomialRepresentative : public Error {
   public:
    using Error::Error;
};

class NotAssociative : public Error {
   public:
    NotAssociative(int i, int j, int k, int l)
        : Error("structure constants not associative at (i,j,k,l)=(" + std::to_string(i) + "," +
                std::to_string(j) + "," + std::to_string(k) + "," + std::to_string(l) + ")"),
          where_{i, j, k, l} {}
    std::array<int, 4> where() const noexcept { return where_; }

   private:
    std::array<int, 4> where_;
};

class NotNilpotent : public Error {
   public:
    explicit NotNilpotent(std::vector<int> witness);
    const std::vector<int>& witness() const noexcept { return witness_; }

   private:
    std::vector<int> witness_;
};

class NonIntegralScaling : public InternalInvariantViolation {
   public:
    using InternalInvariantViolation::InternalInvariantViolation;
};

}  // namespace supertab

#endif
