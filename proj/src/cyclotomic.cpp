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

#include "supertab/cyclotomic.hpp"

#include <sstream>

#include "supertab/error.hpp"

namespace supertab {

namespace {

std::int64_t add_checked(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("cyclotomic coefficient overflow");
    return r;
}

std::int64_t sub_checked(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("cyclotomic coefficient overflow");
    return r;
}

std::int64_t mul_checked(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("cyclotomic coefficient overflow");
    return r;
}

std::uint32_t mod_p(std::int64_t k, std::uint32_t p) {
    std::int64_t m = k % static_cast<std::int64_t>(p);
    return static_cast<std::uint32_t>(m < 0 ? m + p : m);
}

}  // namespace

std::int64_t checked_pow(std::uint64_t q, std::uint32_t m) {
    std::int64_t out = 1;
    for (std::uint32_t i = 0; i < m; ++i) out = mul_checked(out, static_cast<std::int64_t>(q));
    return out;
}

CycInt CycInt::zero(std::uint32_t p) {
    if (p < 2) throw BadField("cyclotomic integers need a prime p");
    return CycInt(p, std::vector<std::int64_t>(p - 1, 0));
}

CycInt CycInt::integer(std::uint32_t p, std::int64_t n) {
    CycInt out = zero(p);
    out.c_[0] = n;
    return out;
}

CycInt CycInt::zeta(std::uint32_t p, std::int64_t k) {
    std::vector<std::int64_t> counts(p, 0);
    counts[mod_p(k, p)] = 1;
    return from_counts(p, counts);
}

CycInt CycInt::from_counts(std::uint32_t p, std::span<const std::int64_t> counts) {
    if (counts.size() != p) throw ShapeMismatch("count vector length differs from p");
    CycInt out = zero(p);
    for (std::uint32_t k = 0; k + 1 < p; ++k) out.c_[k] = sub_checked(counts[k], counts[p - 1]);
    return out;
}

CycInt CycInt::from_coefficients(std::uint32_t p, std::vector<std::int64_t> coeffs) {
    if (coeffs.size() + 1 != p) throw ShapeMismatch("coefficient vector must have length p-1");
    return CycInt(p, std::move(coeffs));
}

bool CycInt::is_zero() const noexcept {
    for (auto c : c_) {
        if (c != 0) return false;
    }
    return true;
}

void CycInt::check_same(const CycInt& o) const {
    if (p_ != o.p_) throw SpecMismatch("cyclotomic integers for different primes");
}

CycInt CycInt::operator+(const CycInt& o) const {
    CycInt out = *this;
    out += o;
    return out;
}

CycInt& CycInt::operator+=(const CycInt& o) {
    check_same(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] = add_checked(c_[k], o.c_[k]);
    return *this;
}

CycInt CycInt::operator-(const CycInt& o) const {
    check_same(o);
    CycInt out = *this;
    for (std::size_t k = 0; k < c_.size(); ++k) out.c_[k] = sub_checked(c_[k], o.c_[k]);
    return out;
}

CycInt CycInt::operator-() const { return zero(p_) - *this; }

CycInt CycInt::operator*(const CycInt& o) const {
    check_same(o);
    std::vector<std::int64_t> counts(p_, 0);
    for (std::uint32_t i = 0; i + 1 < p_; ++i) {
        if (c_[i] == 0) continue;
        for (std::uint32_t j = 0; j + 1 < p_; ++j) {
            std::uint32_t k = (i + j) % p_;
            counts[k] = add_checked(counts[k], mul_checked(c_[i], o.c_[j]));
        }
    }
    return from_counts(p_, counts);
}

CycInt CycInt::scale(std::int64_t k) const {
    CycInt out = *this;
    for (auto& c : out.c_) c = mul_checked(c, k);
    return out;
}

std::optional<CycInt> CycInt::divide_exact(std::int64_t k) const {
    if (k == 0) throw DivisionByZero();
    CycInt out = *this;
    for (auto& c : out.c_) {
        if (c % k != 0) return std::nullopt;
        c /= k;
    }
    return out;
}

CycInt CycInt::conjugate() const {
    std::vector<std::int64_t> counts(p_, 0);
    for (std::uint32_t k = 0; k + 1 < p_; ++k) counts[(p_ - k) % p_] = c_[k];
    return from_counts(p_, counts);
}

std::optional<std::int64_t> CycInt::as_integer() const {
    for (std::size_t k = 1; k < c_.size(); ++k) {
        if (c_[k] != 0) return std::nullopt;
    }
    return c_[0];
}

std::optional<CharValue> CycInt::as_char_value(std::uint64_t q) const {
    if (is_zero()) return CharValue::zero();
    std::int64_t n = 0;
    std::uint32_t k = 0;
    if (p_ == 2) {
        n = c_[0] < 0 ? -c_[0] : c_[0];
        k = c_[0] < 0 ? 1 : 0;
    } else {
        std::size_t nonzero = 0;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] != 0) {
                ++nonzero;
                k = static_cast<std::uint32_t>(i);
            }
        }
        if (nonzero == 1 && c_[k] > 0) {
            n = c_[k];
        } else if (nonzero == c_.size() && c_[0] < 0) {
            for (auto c : c_) {
                if (c != c_[0]) return std::nullopt;
            }
            n = -c_[0];
            k = p_ - 1;
        } else {
            return std::nullopt;
        }
    }
    std::uint32_t m = 0;
    while (n > 1) {
        if (static_cast<std::uint64_t>(n) % q != 0) return std::nullopt;
        n = static_cast<std::int64_t>(static_cast<std::uint64_t>(n) / q);
        ++m;
    }
    return CharValue::make(m, k);
}

std::string CycInt::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        std::int64_t c = c_[k];
        if (!first) {
            out << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        } else if (c < 0 && k > 0) {
            out << '-';
            c = -c;
        }
        first = false;
        if (k == 0) {
            out << c;
        } else {
            if (c != 1) out << c << '*';
            out << 'z';
            if (k > 1) out << '^' << k;
        }
    }
    return first ? "0" : out.str();
}

CycInt CharValue::to_cyc(std::uint32_t p, std::uint64_t q) const {
    if (zero_) return CycInt::zero(p);
    return CycInt::zeta(p, zeta_exp_).scale(checked_pow(q, q_exp_));
}

std::optional<std::int64_t> CharValue::as_integer(std::uint32_t p, std::uint64_t q) const {
    if (zero_) return 0;
    if (zeta_exp_ == 0) return checked_pow(q, q_exp_);
    if (p == 2) return -checked_pow(q, q_exp_);
    return std::nullopt;
}

std::string CharValue::to_string() const {
    if (zero_) return "0";
    return "q^" + std::to_string(q_exp_) + "*z^" + std::to_string(zeta_exp_);
}

}  // namespace supertab
