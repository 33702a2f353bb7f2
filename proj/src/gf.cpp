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

#include "supertab/gf.hpp"

#include <sstream>

#include "supertab/error.hpp"

namespace supertab {

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial m over F_p.
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        const std::uint32_t lead = a.back();
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) {
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - lead) * m[i]) % p);
        }
        trim(a);
    }
    return a;
}

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

}  // namespace

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint32_t q) {
    if (q < 2) return std::nullopt;
    std::uint32_t p = 2;
    while (q % p != 0) ++p;
    std::uint32_t r = 0;
    while (q % p == 0) {
        q /= p;
        ++r;
    }
    if (q != 1) return std::nullopt;
    return std::make_pair(p, r);
}

bool is_irreducible_poly(std::uint32_t p, const std::vector<std::uint32_t>& poly) {
    if (poly.size() < 2) return false;
    const std::size_t r = poly.size() - 1;
    if (r == 1) return true;
    // Trial division by every monic polynomial of degree 1..r/2.
    for (std::size_t d = 1; d <= r / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            Poly f(d + 1);
            std::uint64_t c = code;
            for (std::size_t i = 0; i < d; ++i) {
                f[i] = static_cast<std::uint32_t>(c % p);
                c /= p;
            }
            f[d] = 1;
            if (poly_mod(poly, f, p).empty()) return false;
        }
    }
    return true;
}

std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t r) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < r; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
        Poly f(r + 1);
        std::uint64_t c = code;
        for (std::uint32_t i = 0; i < r; ++i) {
            f[i] = static_cast<std::uint32_t>(c % p);
            c /= p;
        }
        f[r] = 1;
        if (is_irreducible_poly(p, f)) return f;
    }
    throw BadField("no irreducible polynomial found");
}

std::shared_ptr<const Field> Field::create(std::uint32_t q) {
    auto pr = prime_power(q);
    if (!pr || q > max_order) throw BadField("field order " + std::to_string(q) + " is not a prime power <= 65536");
    auto [p, r] = *pr;
    Poly modulus = r > 1 ? default_modulus(p, r) : Poly{};
    return std::shared_ptr<const Field>(new Field(p, r, std::move(modulus)));
}

std::shared_ptr<const Field> Field::create(std::uint32_t q, const std::vector<std::uint32_t>& modulus) {
    auto pr = prime_power(q);
    if (!pr || q > max_order) throw BadField("field order " + std::to_string(q) + " is not a prime power <= 65536");
    auto [p, r] = *pr;
    if (r == 1) {
        if (!modulus.empty()) throw BadField("prime field takes no modulus");
        return create(q);
    }
    if (modulus.size() != r + 1) throw BadField("modulus must have " + std::to_string(r + 1) + " coefficients");
    for (auto c : modulus) {
        if (c >= p) throw BadField("modulus coefficient out of range");
    }
    if (modulus.back() != 1) throw BadField("modulus must be monic");
    if (!is_irreducible_poly(p, modulus)) throw BadField("reducible polynomial");
    return std::shared_ptr<const Field>(new Field(p, r, modulus));
}

Field::Field(std::uint32_t p, std::uint32_t r, std::vector<std::uint32_t> modulus)
    : p_(p), r_(r), q_(1), modulus_(std::move(modulus)) {
    if (!is_prime(p)) throw BadField("characteristic is not prime");
    for (std::uint32_t i = 0; i < r; ++i) q_ *= p;

    neg_table_.resize(q_);
    for (std::uint32_t a = 0; a < q_; ++a) {
        std::uint32_t out = 0, scale = 1, x = a;
        for (std::uint32_t i = 0; i < r_; ++i) {
            std::uint32_t d = x % p_;
            x /= p_;
            out += ((p_ - d) % p_) * scale;
            scale *= p_;
        }
        neg_table_[a] = out;
    }
    if (r_ > 1 && q_ <= 256) {
        add_table_.resize(static_cast<std::size_t>(q_) * q_);
        for (std::uint32_t a = 0; a < q_; ++a) {
            for (std::uint32_t b = 0; b < q_; ++b) {
                add_table_[a * q_ + b] = static_cast<std::uint16_t>(add_digits(Elem{a}, Elem{b}).value);
            }
        }
    }

    // Build exp/log tables from the first primitive element.
    exp_.assign(q_ - 1 == 0 ? 1 : q_ - 1, 0);
    log_.assign(q_, 0);
    bool found = false;
    for (std::uint32_t g = 1; g < q_ && !found; ++g) {
        std::uint32_t x = 1;
        std::uint32_t order = 0;
        do {
            exp_[order] = x;
            x = poly_mul(Elem{x}, Elem{g}).value;
            ++order;
        } while (x != 1 && order < q_ - 1);
        if (x == 1 && order == q_ - 1) found = true;
    }
    if (!found) throw BadField("no primitive element; modulus is not irreducible");
    for (std::uint32_t k = 0; k + 1 < q_; ++k) log_[exp_[k]] = k;

    trace_.assign(q_, 0);
    for (std::uint32_t a = 0; a < q_; ++a) {
        Elem acc{0};
        Elem power{a};
        for (std::uint32_t i = 0; i < r_; ++i) {
            acc = add(acc, power);
            power = pow(power, p_);
        }
        if (acc.value >= p_) throw InternalInvariantViolation("trace left the prime field");
        trace_[a] = acc.value;
    }
}

Elem Field::add_digits(Elem a, Elem b) const noexcept {
    std::uint32_t x = a.value, y = b.value, out = 0, scale = 1;
    for (std::uint32_t i = 0; i < r_; ++i) {
        std::uint32_t d = x % p_ + y % p_;
        if (d >= p_) d -= p_;
        out += d * scale;
        scale *= p_;
        x /= p_;
        y /= p_;
    }
    return Elem{out};
}

Elem Field::poly_mul(Elem a, Elem b) const noexcept {
    if (r_ == 1) return Elem{static_cast<std::uint32_t>((std::uint64_t{a.value} * b.value) % p_)};
    Poly x = coefficients(a), y = coefficients(b);
    Poly prod(2 * r_ - 1, 0);
    for (std::uint32_t i = 0; i < r_; ++i) {
        for (std::uint32_t j = 0; j < r_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
    }
    Poly red = poly_mod(prod, modulus_, p_);
    red.resize(r_, 0);
    return from_coefficients(red);
}

Elem Field::from_int(long long v) const noexcept {
    long long m = v % static_cast<long long>(p_);
    if (m < 0) m += p_;
    return Elem{static_cast<std::uint32_t>(m)};
}

Elem Field::from_coefficients(std::span<const std::uint32_t> coeffs) const {
    if (coeffs.size() > r_) throw BadField("too many coefficients for a field element");
    std::uint32_t out = 0, scale = 1;
    for (auto c : coeffs) {
        out += (c % p_) * scale;
        scale *= p_;
    }
    return Elem{out};
}

std::vector<std::uint32_t> Field::coefficients(Elem a) const {
    std::vector<std::uint32_t> out(r_);
    std::uint32_t x = a.value;
    for (std::uint32_t i = 0; i < r_; ++i) {
        out[i] = x % p_;
        x /= p_;
    }
    return out;
}

Elem Field::inv(Elem a) const {
    if (a.value == 0) throw DivisionByZero();
    std::uint32_t l = log_[a.value];
    return Elem{exp_[l == 0 ? 0 : q_ - 1 - l]};
}

Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
    if (e == 0) return one();
    if (a.value == 0) return zero();
    std::uint64_t l = (std::uint64_t{log_[a.value]} * (e % (q_ - 1))) % (q_ - 1);
    return Elem{exp_[l]};
}

std::vector<Elem> Field::elements() const {
    std::vector<Elem> out(q_);
    for (std::uint32_t i = 0; i < q_; ++i) out[i] = Elem{i};
    return out;
}

std::vector<Elem> Field::units() const {
    std::vector<Elem> out;
    out.reserve(q_ - 1);
    for (std::uint32_t i = 1; i < q_; ++i) out.push_back(Elem{i});
    return out;
}

std::string Field::describe() const {
    std::ostringstream out;
    out << "F_" << q_;
    if (r_ > 1) {
        out << " = F_" << p_ << "[X]/(";
        bool first = true;
        for (std::size_t i = modulus_.size(); i-- > 0;) {
            if (modulus_[i] == 0) continue;
            if (!first) out << " + ";
            first = false;
            if (modulus_[i] != 1 || i == 0) out << modulus_[i];
            if (i >= 1) out << 'X';
            if (i >= 2) out << '^' << i;
        }
        out << ')';
    }
    return out.str();
}

FieldElem::FieldElem(FieldPtr field, Elem e) : field_(std::move(field)), e_(e) {
    if (!field_) throw SpecMismatch("field element without a field");
    if (!field_->contains(e_)) throw BadField("element out of range for " + field_->describe());
}

namespace {

const FieldPtr& common_field(const FieldElem& a, const FieldElem& b) {
    if (a.field() != b.field() && !(*a.field() == *b.field())) {
        throw SpecMismatch("operands belong to different fields");
    }
    return a.field();
}

}  // namespace

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    const auto& f = common_field(a, b);
    return {f, f->add(a.elem(), b.elem())};
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) {
    const auto& f = common_field(a, b);
    return {f, f->sub(a.elem(), b.elem())};
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    const auto& f = common_field(a, b);
    return {f, f->mul(a.elem(), b.elem())};
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) {
    const auto& f = common_field(a, b);
    return {f, f->div(a.elem(), b.elem())};
}

bool operator==(const FieldElem& a, const FieldElem& b) {
    return common_field(a, b) && a.elem() == b.elem();
}

}  // namespace supertab
