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

#ifndef SUPERTAB_GF_HPP
#define SUPERTAB_GF_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace supertab {

/// An element of F_q in packed form: the coefficients c_0..c_{r-1} of its
/// polynomial representative read as the base-p integer c_0 + c_1 p + ...
/// Elements are meaningless without the Field they came from.
struct Elem {
    std::uint32_t value = 0;

    constexpr bool is_zero() const noexcept { return value == 0; }
    friend constexpr auto operator<=>(Elem, Elem) = default;
};

/// The finite field F_q, q = p^r <= 2^16, with table-driven arithmetic.
///
/// Extension fields are realised as F_p[X]/(modulus). The modulus is checked
/// for irreducibility on construction. Instances are immutable and shared
/// through `std::shared_ptr<const Field>`.
class Field {
   public:
    static constexpr std::uint32_t max_order = 1u << 16;

    /// Field of order q. For r > 1 the default modulus is the irreducible
    /// polynomial of degree r whose coefficient string, read as a base-p
    /// integer with the constant term least significant, is smallest.
    static std::shared_ptr<const Field> create(std::uint32_t q);
    /// Field with an explicit modulus (constant term first, monic, length r+1).
    static std::shared_ptr<const Field> create(std::uint32_t q, const std::vector<std::uint32_t>& modulus);

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t r() const noexcept { return r_; }
    std::uint32_t q() const noexcept { return q_; }
    /// Empty for prime fields.
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    Elem zero() const noexcept { return Elem{0}; }
    Elem one() const noexcept { return Elem{1}; }
    /// Image of an integer under Z -> F_p -> F_q.
    Elem from_int(long long v) const noexcept;
    Elem from_coefficients(std::span<const std::uint32_t> coeffs) const;
    std::vector<std::uint32_t> coefficients(Elem a) const;
    bool contains(Elem a) const noexcept { return a.value < q_; }

    Elem add(Elem a, Elem b) const noexcept {
        if (r_ == 1) {
            std::uint32_t s = a.value + b.value;
            return Elem{s >= p_ ? s - p_ : s};
        }
        if (!add_table_.empty()) return Elem{add_table_[a.value * q_ + b.value]};
        return add_digits(a, b);
    }
    Elem neg(Elem a) const noexcept { return Elem{neg_table_[a.value]}; }
    Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const noexcept {
        if (a.value == 0 || b.value == 0) return Elem{0};
        std::uint32_t s = log_[a.value] + log_[b.value];
        if (s >= q_ - 1) s -= q_ - 1;
        return Elem{exp_[s]};
    }
    /// Throws DivisionByZero for a = 0.
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const noexcept;
    /// Absolute trace Tr_{F_q/F_p}(a) as an integer in [0,p).
    std::uint32_t trace(Elem a) const noexcept { return trace_[a.value]; }

    /// Elements in packed order 0,1,...,q-1.
    std::vector<Elem> elements() const;
    /// Nonzero elements in packed order.
    std::vector<Elem> units() const;

    std::string describe() const;

    friend bool operator==(const Field& a, const Field& b) noexcept {
        return a.p_ == b.p_ && a.r_ == b.r_ && a.modulus_ == b.modulus_;
    }

   private:
    Field(std::uint32_t p, std::uint32_t r, std::vector<std::uint32_t> modulus);
    Elem add_digits(Elem a, Elem b) const noexcept;
    Elem poly_mul(Elem a, Elem b) const noexcept;

    std::uint32_t p_;
    std::uint32_t r_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint16_t> add_table_;
    std::vector<std::uint32_t> neg_table_;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> trace_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// True iff the monic polynomial (constant term first) is irreducible over F_p.
bool is_irreducible_poly(std::uint32_t p, const std::vector<std::uint32_t>& poly);
/// Smallest monic irreducible of degree r in the order used by Field::create(q).
std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t r);
/// Decomposes q = p^r; nullopt when q is not a prime power.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint32_t q);

/// A field element bound to its field; arithmetic checks that operands agree.
class FieldElem {
   public:
    FieldElem(FieldPtr field, Elem e);
    static FieldElem from_int(FieldPtr field, long long v) {
        Elem e = field->from_int(v);
        return FieldElem(std::move(field), e);
    }

    const FieldPtr& field() const noexcept { return field_; }
    Elem elem() const noexcept { return e_; }
    std::vector<std::uint32_t> coefficients() const { return field_->coefficients(e_); }
    bool is_zero() const noexcept { return e_.is_zero(); }

    FieldElem operator-() const { return {field_, field_->neg(e_)}; }
    FieldElem inv() const { return {field_, field_->inv(e_)}; }
    std::uint32_t trace() const noexcept { return field_->trace(e_); }

    friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
    friend bool operator==(const FieldElem& a, const FieldElem& b);

   private:
    FieldPtr field_;
    Elem e_;
};

}  // namespace supertab

#endif
