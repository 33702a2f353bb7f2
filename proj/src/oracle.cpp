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

#include "supertab/oracle.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "supertab/error.hpp"

namespace supertab {

namespace {

constexpr std::uint32_t unassigned = std::numeric_limits<std::uint32_t>::max();

std::uint64_t checked_order(std::uint32_t q, std::size_t dim, std::uint64_t cap) {
    const auto size = space_size(q, dim);
    const std::uint64_t limit = std::min<std::uint64_t>(cap, std::numeric_limits<std::uint32_t>::max());
    if (!size) throw SizeCapExceeded(cap, std::numeric_limits<std::uint64_t>::max());
    if (*size > limit) throw SizeCapExceeded(cap, *size);
    return *size;
}

std::uint32_t ipow(std::uint32_t q, std::size_t e) {
    std::uint32_t r = 1;
    for (std::size_t k = 0; k < e; ++k) r *= q;
    return r;
}

}  // namespace

EnumeratedGroup::EnumeratedGroup(FieldPtr field, std::size_t dim, std::uint64_t cap, Product product)
    : field_(std::move(field)), dim_(dim), order_(checked_order(field_->q(), dim, cap)), product_(std::move(product)) {}

EnumeratedGroup EnumeratedGroup::pattern(const PatternGroup& G, std::uint64_t cap) {
    const ClosedSet J = G.J();
    const FieldPtr field = G.field_ptr();
    const auto n = static_cast<std::size_t>(J.n());
    auto dense = [J, n](const Vec& v) {
        Matrix m(n, n);
        for (std::size_t k = 0; k < v.size(); ++k) {
            const Pair pr = J.pair(k);
            m(static_cast<std::size_t>(pr.first - 1), static_cast<std::size_t>(pr.second - 1)) = v[k];
        }
        return m;
    };
    auto product = [J, n, field, dense](const Vec& x, const Vec& y) {
        const Field& f = *field;
        const Matrix X = dense(x), Y = dense(y);
        Matrix Z(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t m = 0; m < n; ++m) {
                if (X(i, m).is_zero()) continue;
                for (std::size_t j = 0; j < n; ++j) Z(i, j) = f.add(Z(i, j), f.mul(X(i, m), Y(m, j)));
            }
        Vec out(J.size());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (Z(i, j).is_zero()) continue;
                const int idx = J.index(static_cast<int>(i + 1), static_cast<int>(j + 1));
                if (idx < 0) throw InternalInvariantViolation("matrix product leaves the pattern");
                out[static_cast<std::size_t>(idx)] = Z(i, j);
            }
        return out;
    };
    return EnumeratedGroup(field, J.size(), cap, product);
}

EnumeratedGroup EnumeratedGroup::algebra(const AlgebraGroup& G, std::uint64_t cap) {
    const StructureAlgebra A = G.algebra();
    EnumeratedGroup E(A.field_ptr(), A.d(), cap, [A](const Vec& x, const Vec& y) { return A.multiply(x, y); });
    std::vector<bool> seen(E.order_);
    std::vector<std::uint32_t> queue{0};
    seen[0] = true;
    const auto gens = E.generators();
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vec x = E.decode(queue[head]);
        for (const auto& g : gens) {
            const std::uint32_t c = E.encode(E.multiply(x, g));
            if (!seen[c]) {
                seen[c] = true;
                queue.push_back(c);
            }
        }
    }
    if (queue.size() != E.order_) throw InternalInvariantViolation("basis elements do not generate the group");
    return E;
}

std::uint32_t EnumeratedGroup::encode(const Vec& v) const {
    std::uint32_t code = 0;
    for (const Elem e : v) code = code * field_->q() + e.value;
    return code;
}

Vec EnumeratedGroup::decode(std::uint32_t code) const {
    Vec v(dim_);
    for (std::size_t k = dim_; k-- > 0;) {
        v[k] = Elem{code % field_->q()};
        code /= field_->q();
    }
    return v;
}

Vec EnumeratedGroup::multiply(const Vec& x, const Vec& y) const {
    Vec out = product(x, y);
    for (std::size_t k = 0; k < dim_; ++k) out[k] = field_->add(out[k], field_->add(x[k], y[k]));
    return out;
}

Vec EnumeratedGroup::inverse(const Vec& x) const {
    Vec minus(dim_);
    for (std::size_t k = 0; k < dim_; ++k) minus[k] = field_->neg(x[k]);
    Vec z(dim_), term = minus;
    while (std::any_of(term.begin(), term.end(), [](Elem e) { return !e.is_zero(); })) {
        for (std::size_t k = 0; k < dim_; ++k) z[k] = field_->add(z[k], term[k]);
        term = product(term, minus);
    }
    return z;
}

std::vector<Vec> EnumeratedGroup::generators() const {
    std::vector<Vec> out;
    for (std::size_t k = 0; k < dim_; ++k)
        for (const Elem t : field_->units()) {
            Vec g(dim_);
            g[k] = t;
            out.push_back(std::move(g));
        }
    return out;
}

bool AxiomReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
}

CycInt inner_product(const std::vector<CycInt>& f, const std::vector<CycInt>& g) {
    if (f.size() != g.size()) throw ShapeMismatch("class functions on different groups");
    if (f.empty()) throw ShapeMismatch("empty class function");
    CycInt total = CycInt::zero(f.front().p());
    for (std::size_t x = 0; x < f.size(); ++x) total += f[x] * g[x].conjugate();
    return total;
}

Oracle::SparseMap Oracle::linear_map(const std::function<Vec(const Vec&)>& f) const {
    const Field& F = G_.field();
    const std::size_t N = G_.dim();
    SparseMap m;
    for (std::size_t j = 0; j < N; ++j) {
        Vec e(N);
        e[j] = Elem{1};
        const Vec image = f(e);
        for (std::size_t k = 0; k < N; ++k) {
            const Elem c = k == j ? F.sub(image[k], Elem{1}) : image[k];
            if (!c.is_zero()) m.terms.push_back({static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(j), c});
        }
    }
    return m;
}

namespace {

template <typename Visit>
void for_each_image(const Field& F, const std::vector<MoveTerm>& terms, const Vec& v, Vec& w, Visit&& visit) {
    w = v;
    for (const auto& t : terms) w[t.dst] = F.add(w[t.dst], F.mul(t.coeff, v[t.src]));
    visit(w);
}

}  // namespace

CodePartition Oracle::partition(const std::vector<SparseMap>& maps) const {
    const Field& F = G_.field();
    CodePartition out;
    out.orbit_of.assign(G_.order(), unassigned);
    std::vector<std::uint32_t> queue;
    Vec w;
    for (std::uint32_t code = 0; code < G_.order(); ++code) {
        if (out.orbit_of[code] != unassigned) continue;
        const auto id = static_cast<std::uint32_t>(out.reps.size());
        out.orbit_of[code] = id;
        queue.assign(1, code);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const Vec v = G_.decode(queue[head]);
            for (const auto& m : maps) {
                for_each_image(F, m.terms, v, w, [&](const Vec& image) {
                    const std::uint32_t c = G_.encode(image);
                    if (out.orbit_of[c] == unassigned) {
                        out.orbit_of[c] = id;
                        queue.push_back(c);
                    }
                });
            }
        }
        out.reps.push_back(code);
        out.sizes.push_back(queue.size());
    }
    return out;
}

std::uint64_t Oracle::orbit_size(const std::vector<SparseMap>& maps, std::uint32_t start,
                                 std::vector<std::uint32_t>& stamp, std::uint32_t mark) const {
    const Field& F = G_.field();
    std::vector<std::uint32_t> queue{start};
    stamp[start] = mark;
    Vec w;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vec v = G_.decode(queue[head]);
        for (const auto& m : maps) {
            for_each_image(F, m.terms, v, w, [&](const Vec& image) {
                const std::uint32_t c = G_.encode(image);
                if (stamp[c] != mark) {
                    stamp[c] = mark;
                    queue.push_back(c);
                }
            });
        }
    }
    return queue.size();
}

Oracle::Oracle(EnumeratedGroup G) : G_(std::move(G)) {
    const Field& F = G_.field();
    const std::size_t N = G_.dim();
    const std::uint32_t q = F.q();
    hi_len_ = N / 2;
    lo_len_ = N - hi_len_;
    lo_size_ = ipow(q, lo_len_);

    // trace_half[a * size + b] = Tr(<a, b>) for half-length coordinate blocks.
    auto half_table = [&](std::size_t len) {
        const std::uint32_t size = ipow(q, len);
        std::vector<Vec> digits(size, Vec(len));
        for (std::uint32_t c = 0; c < size; ++c) {
            std::uint32_t x = c;
            for (std::size_t k = len; k-- > 0;) {
                digits[c][k] = Elem{x % q};
                x /= q;
            }
        }
        std::vector<std::uint8_t> table(static_cast<std::size_t>(size) * size);
        for (std::uint32_t a = 0; a < size; ++a)
            for (std::uint32_t b = 0; b < size; ++b) {
                Elem s{0};
                for (std::size_t k = 0; k < len; ++k) s = F.add(s, F.mul(digits[a][k], digits[b][k]));
                table[static_cast<std::size_t>(a) * size + b] = static_cast<std::uint8_t>(F.trace(s));
            }
        return table;
    };
    trace_hi_ = half_table(hi_len_);
    trace_lo_ = half_table(lo_len_);

    std::vector<SparseMap> two_sided, cotwo_sided, coright;
    for (const Vec& g : G_.generators()) {
        auto add = [&](const Vec& x, const Vec& y) {
            Vec out(x.size());
            for (std::size_t k = 0; k < x.size(); ++k) out[k] = F.add(x[k], y[k]);
            return out;
        };
        const SparseMap left = linear_map([&](const Vec& x) { return add(x, G_.product(g, x)); });
        const SparseMap right = linear_map([&](const Vec& x) { return add(x, G_.product(x, g)); });
        const Vec h = G_.inverse(g);
        conj_maps_.push_back(linear_map([&](const Vec& x) {
            const Vec y = add(x, G_.product(g, x));
            return add(y, G_.product(y, h));
        }));
        auto transpose = [](const SparseMap& m) {
            SparseMap t;
            for (const auto& term : m.terms) t.terms.push_back({term.src, term.dst, term.coeff});
            return t;
        };
        two_sided.push_back(left);
        two_sided.push_back(right);
        cotwo_sided.push_back(transpose(left));
        cotwo_sided.push_back(transpose(right));
        coright.push_back(transpose(right));
    }
    classes_ = partition(two_sided);
    coorbits_ = partition(cotwo_sided);

    std::vector<std::uint32_t> stamp(G_.order(), unassigned);
    for (std::size_t c = 0; c < coorbits_.reps.size(); ++c) {
        right_sizes_.push_back(orbit_size(coright, coorbits_.reps[c], stamp, static_cast<std::uint32_t>(c)));
    }
    members_.resize(coorbits_.reps.size());
    for (std::size_t c = 0; c < members_.size(); ++c) members_[c].reserve(coorbits_.sizes[c]);
    for (std::uint32_t code = 0; code < G_.order(); ++code) members_[coorbits_.orbit_of[code]].push_back(code);
}

std::size_t Oracle::corank(std::size_t coorbit) const {
    std::uint64_t size = right_sizes_.at(coorbit), power = 1;
    std::size_t e = 0;
    while (power < size) {
        power *= G_.field().q();
        ++e;
    }
    if (power != size) throw InternalInvariantViolation("right co-orbit size is not a power of q");
    return e;
}

CycInt Oracle::scaled(std::size_t coorbit, const std::vector<std::int64_t>& counts) const {
    const std::uint64_t two = coorbits_.sizes[coorbit], right = right_sizes_[coorbit];
    if (two % right != 0) throw NonIntegralScaling("co-orbit size is not a multiple of the right co-orbit size");
    const auto sum = CycInt::from_counts(G_.field().p(), counts);
    auto value = sum.divide_exact(static_cast<std::int64_t>(two / right));
    if (!value) throw NonIntegralScaling("orbit sum " + sum.to_string() + " is not divisible by " + std::to_string(two / right));
    return *value;
}

const std::vector<std::vector<CycInt>>& Oracle::table() const {
    if (!table_.empty()) return table_;
    const std::uint32_t p = G_.field().p();
    const std::size_t R = classes_.reps.size();
    const std::uint32_t hi_size = static_cast<std::uint32_t>(G_.order() / lo_size_);
    std::vector<std::vector<CycInt>> out(coorbits_.reps.size(), std::vector<CycInt>(R));
    std::vector<std::uint32_t> mu_hi, mu_lo;
    std::vector<std::int64_t> counts(p);
    for (std::size_t c = 0; c < members_.size(); ++c) {
        mu_hi.clear();
        mu_lo.clear();
        for (const std::uint32_t code : members_[c]) {
            mu_hi.push_back(code / lo_size_);
            mu_lo.push_back(code % lo_size_);
        }
        for (std::size_t r = 0; r < R; ++r) {
            const std::uint32_t phi = classes_.reps[r];
            const std::uint8_t* hi = &trace_hi_[static_cast<std::size_t>(phi / lo_size_) * hi_size];
            const std::uint8_t* lo = &trace_lo_[static_cast<std::size_t>(phi % lo_size_) * lo_size_];
            std::fill(counts.begin(), counts.end(), 0);
            for (std::size_t m = 0; m < mu_hi.size(); ++m) {
                std::uint32_t s = hi[mu_hi[m]] + lo[mu_lo[m]];
                if (s >= p) s -= p;
                ++counts[s];
            }
            out[c][r] = scaled(c, counts);
        }
    }
    table_ = std::move(out);
    return table_;
}

std::vector<CycInt> Oracle::supercharacter(const Vec& eta) const { return table().at(coorbit_of(eta)); }

std::vector<CycInt> Oracle::class_function(std::size_t coorbit) const {
    const std::uint32_t p = G_.field().p();
    const std::uint32_t hi_size = static_cast<std::uint32_t>(G_.order() / lo_size_);
    const auto& members = members_.at(coorbit);
    std::vector<CycInt> out(G_.order());
    std::vector<std::int64_t> counts(p);
    for (std::uint32_t phi = 0; phi < G_.order(); ++phi) {
        const std::uint8_t* hi = &trace_hi_[static_cast<std::size_t>(phi / lo_size_) * hi_size];
        const std::uint8_t* lo = &trace_lo_[static_cast<std::size_t>(phi % lo_size_) * lo_size_];
        std::fill(counts.begin(), counts.end(), 0);
        for (const std::uint32_t mu : members) {
            std::uint32_t s = hi[mu / lo_size_] + lo[mu % lo_size_];
            if (s >= p) s -= p;
            ++counts[s];
        }
        out[phi] = scaled(coorbit, counts);
    }
    return out;
}

CycInt Oracle::superclass_inner_product(std::size_t c, std::size_t d) const {
    const auto& T = table();
    const std::uint32_t p = G_.field().p();
    // acc[e] is the coefficient of zeta^e; conj(zeta^b) = zeta^{p-b}.
    std::vector<std::int64_t> acc(p);
    for (std::size_t k = 0; k < classes_.reps.size(); ++k) {
        const auto& f = T.at(c)[k].coefficients();
        const auto& g = T.at(d)[k].coefficients();
        const auto size = static_cast<std::int64_t>(classes_.sizes[k]);
        for (std::size_t a = 0; a < f.size(); ++a) {
            if (f[a] == 0) continue;
            for (std::size_t b = 0; b < g.size(); ++b) {
                if (g[b] == 0) continue;
                std::int64_t term = 0;
                if (__builtin_mul_overflow(f[a], g[b], &term) || __builtin_mul_overflow(term, size, &term) ||
                    __builtin_add_overflow(acc[(a + p - b) % p], term, &acc[(a + p - b) % p])) {
                    throw OverflowError("inner product overflows 64-bit coefficients");
                }
            }
        }
    }
    return CycInt::from_counts(p, acc);
}

const CodePartition& Oracle::conjugacy_classes() const {
    if (conjugacy_.reps.empty()) conjugacy_ = partition(conj_maps_);
    return conjugacy_;
}

std::string Oracle::describe(std::uint32_t code) const {
    std::ostringstream out;
    out << '(';
    const Vec v = G_.decode(code);
    for (std::size_t k = 0; k < v.size(); ++k) out << (k ? "," : "") << v[k].value;
    out << ')';
    return out.str();
}

AxiomReport Oracle::verify_axioms() const {
    AxiomReport report;
    const std::uint32_t p = G_.field().p();
    const std::uint64_t order = G_.order();
    const auto& T = table();

    AxiomCheck identity{"identity superclass is a singleton", classes_.sizes[0] == 1, ""};
    if (!identity.passed) identity.witness = "superclass of the identity has " + std::to_string(classes_.sizes[0]) + " elements";
    report.checks.push_back(identity);

    AxiomCheck counts{"superclass count equals co-orbit count", classes_.reps.size() == coorbits_.reps.size(), ""};
    if (!counts.passed) {
        counts.witness = std::to_string(classes_.reps.size()) + " superclasses, " + std::to_string(coorbits_.reps.size()) +
                         " co-orbits";
    }
    report.checks.push_back(counts);

    AxiomCheck constant{"supercharacters are constant on superclasses", true, ""};
    for (std::size_t c = 0; c < coorbits_.reps.size() && constant.passed; ++c) {
        const auto f = class_function(c);
        for (std::uint32_t x = 0; x < order; ++x) {
            if (!(f[x] == T[c][classes_.orbit_of[x]])) {
                constant.passed = false;
                constant.witness = "eta=" + describe(coorbits_.reps[c]) + " phi=" + describe(x);
                break;
            }
        }
    }
    report.checks.push_back(constant);

    AxiomCheck unions{"superclasses are unions of conjugacy classes", true, ""};
    const auto& conj = conjugacy_classes();
    for (std::uint32_t x = 0; x < order; ++x) {
        if (classes_.orbit_of[x] != classes_.orbit_of[conj.reps[conj.orbit_of[x]]]) {
            unions.passed = false;
            unions.witness = describe(x) + " is conjugate to " + describe(conj.reps[conj.orbit_of[x]]);
            break;
        }
    }
    report.checks.push_back(unions);

    AxiomCheck fourier{"Fourier completeness", true, ""};
    const std::uint32_t hi_size = static_cast<std::uint32_t>(order / lo_size_);
    std::vector<std::int64_t> hist(p);
    for (std::uint32_t phi = 0; phi < order && fourier.passed; ++phi) {
        const std::uint8_t* hi = &trace_hi_[static_cast<std::size_t>(phi / lo_size_) * hi_size];
        const std::uint8_t* lo = &trace_lo_[static_cast<std::size_t>(phi % lo_size_) * lo_size_];
        std::fill(hist.begin(), hist.end(), 0);
        for (std::uint32_t a = 0; a < hi_size; ++a)
            for (std::uint32_t b = 0; b < lo_size_; ++b) {
                std::uint32_t s = hi[a] + lo[b];
                if (s >= p) s -= p;
                ++hist[s];
            }
        const CycInt sum = CycInt::from_counts(p, hist);
        const CycInt expected = CycInt::integer(p, phi == 0 ? static_cast<std::int64_t>(order) : 0);
        if (!(sum == expected)) {
            fourier.passed = false;
            fourier.witness = "phi=" + describe(phi) + " sum=" + sum.to_string();
        }
    }
    report.checks.push_back(fourier);

    AxiomCheck regular{"orbit-weighted supercharacter sum is the regular character", true, ""};
    for (std::size_t k = 0; k < classes_.reps.size() && regular.passed; ++k) {
        CycInt sum = CycInt::zero(p);
        for (std::size_t c = 0; c < coorbits_.reps.size(); ++c) {
            sum += T[c][k].scale(static_cast<std::int64_t>(coorbits_.sizes[c] / right_sizes_[c]));
        }
        const CycInt expected = CycInt::integer(p, k == 0 ? static_cast<std::int64_t>(order) : 0);
        if (!(sum == expected)) {
            regular.passed = false;
            regular.witness = "phi=" + describe(classes_.reps[k]) + " sum=" + sum.to_string();
        }
    }
    report.checks.push_back(regular);
    return report;
}

}  // namespace supertab
