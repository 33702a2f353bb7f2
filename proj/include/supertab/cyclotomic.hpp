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

#ifndef SUPERTAB_CYCLOTOMIC_HPP
#define SUPERTAB_CYCLOTOMIC_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace supertab {

class CharValue;

/// An element of Z[zeta_p], stored in the basis 1, zeta, ..., zeta^{p-2}.
///
/// Coefficients are 64-bit and every operation is overflow-checked; an
/// overflow throws OverflowError.
class CycInt {
   public:
    CycInt() = default;
    static CycInt zero(std::uint32_t p);
    static CycInt integer(std::uint32_t p, std::int64_t n);
    /// zeta_p^k for any integer k.
    static CycInt zeta(std::uint32_t p, std::int64_t k);
    /// sum_k counts[k] zeta^k for counts of length p.
    static CycInt from_counts(std::uint32_t p, std::span<const std::int64_t> counts);
    static CycInt from_coefficients(std::uint32_t p, std::vector<std::int64_t> coeffs);

    std::uint32_t p() const noexcept { return p_; }
    const std::vector<std::int64_t>& coefficients() const noexcept { return c_; }
    bool is_zero() const noexcept;

    CycInt operator+(const CycInt& o) const;
    CycInt operator-(const CycInt& o) const;
    CycInt operator-() const;
    CycInt operator*(const CycInt& o) const;
    CycInt& operator+=(const CycInt& o);
    CycInt scale(std::int64_t k) const;
    /// Exact division by an integer; nullopt if some coefficient is not divisible.
    std::optional<CycInt> divide_exact(std::int64_t k) const;
    /// Complex conjugate: zeta -> zeta^{-1}.
    CycInt conjugate() const;

    /// Recognises n * zeta^k with n = q^m, m >= 0.
    std::optional<CharValue> as_char_value(std::uint64_t q) const;
    /// If the value is a rational integer, returns it.
    std::optional<std::int64_t> as_integer() const;

    std::string to_string() const;

    friend bool operator==(const CycInt& a, const CycInt& b) noexcept { return a.p_ == b.p_ && a.c_ == b.c_; }

   private:
    CycInt(std::uint32_t p, std::vector<std::int64_t> c) : p_(p), c_(std::move(c)) {}
    void check_same(const CycInt& o) const;

    std::uint32_t p_ = 2;
    std::vector<std::int64_t> c_{0};
};

/// A character value that is either zero or q^m zeta_p^k.
class CharValue {
   public:
    CharValue() = default;
    static CharValue zero() { return CharValue(); }
    static CharValue make(std::uint32_t q_exp, std::uint32_t zeta_exp) { return CharValue(q_exp, zeta_exp); }

    bool is_zero() const noexcept { return zero_; }
    std::uint32_t q_exp() const noexcept { return q_exp_; }
    std::uint32_t zeta_exp() const noexcept { return zeta_exp_; }

    /// Exact value in Z[zeta_p]; throws OverflowError if q^m does not fit.
    CycInt to_cyc(std::uint32_t p, std::uint64_t q) const;
    /// q^m zeta^k with the sign folded in when p = 2; nullopt for p odd and k != 0.
    std::optional<std::int64_t> as_integer(std::uint32_t p, std::uint64_t q) const;
    /// "0" or "q^m*z^k".
    std::string to_string() const;

    friend bool operator==(const CharValue&, const CharValue&) = default;

   private:
    CharValue(std::uint32_t m, std::uint32_t k) : zero_(false), q_exp_(m), zeta_exp_(k) {}

    bool zero_ = true;
    std::uint32_t q_exp_ = 0;
    std::uint32_t zeta_exp_ = 0;
};

/// Checked q^m.
std::int64_t checked_pow(std::uint64_t q, std::uint32_t m);

}  // namespace supertab

#endif
