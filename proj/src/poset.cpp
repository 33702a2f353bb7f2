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

#include "supertab/poset.hpp"

#include <algorithm>

#include "supertab/error.hpp"

namespace supertab {

namespace {

bool order_less(const Pair& a, const Pair& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second > b.second;
}

std::vector<Pair> checked_unique(int n, const std::vector<Pair>& pairs) {
    if (n < 0) throw PairOutOfRange(0, 0, n);
    for (const auto& [i, j] : pairs) {
        if (i < 1 || j > n || i >= j) throw PairOutOfRange(i, j, n);
    }
    std::vector<Pair> out = pairs;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

ClosedSet::ClosedSet(int n, std::vector<Pair> pairs) : n_(n), order_(std::move(pairs)) {
    std::sort(order_.begin(), order_.end(), order_less);
    slot_.assign(static_cast<std::size_t>(n_) * n_, -1);
    for (std::size_t k = 0; k < order_.size(); ++k) {
        slot_[static_cast<std::size_t>(order_[k].first - 1) * n_ + (order_[k].second - 1)] = static_cast<int>(k);
    }
    for (int i = 1; i <= n_; ++i) {
        for (int j = i + 1; j <= n_; ++j) {
            if (!contains(i, j)) continue;
            for (int k = j + 1; k <= n_; ++k) {
                if (!contains(j, k)) continue;
                chains3_.push_back({i, j, k});
                for (int l = k + 1; l <= n_; ++l) {
                    if (contains(k, l)) chains4_.push_back({i, j, k, l});
                }
            }
        }
    }
}

ClosedSet ClosedSet::validate_closed(int n, const std::vector<Pair>& pairs) {
    std::vector<Pair> unique = checked_unique(n, pairs);
    ClosedSet candidate(n, unique);
    std::vector<Chain3> witnesses;
    for (const auto& [i, j, k] : candidate.chains3_) {
        if (!candidate.contains(i, k)) witnesses.push_back({i, j, k});
    }
    if (!witnesses.empty()) throw NotClosed(std::move(witnesses));
    return candidate;
}

ClosedSet ClosedSet::close_covers(int n, const std::vector<Pair>& covers) {
    std::vector<Pair> unique = checked_unique(n, covers);
    std::vector<char> rel(static_cast<std::size_t>(n) * n, 0);
    auto at = [&](int i, int j) -> char& { return rel[static_cast<std::size_t>(i - 1) * n + (j - 1)]; };
    for (const auto& [i, j] : unique) at(i, j) = 1;
    for (int j = 1; j <= n; ++j) {
        for (int i = 1; i <= n; ++i) {
            if (!at(i, j)) continue;
            for (int k = 1; k <= n; ++k) {
                if (at(j, k)) at(i, k) = 1;
            }
        }
    }
    std::vector<Pair> closed;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            if (at(i, j)) closed.emplace_back(i, j);
        }
    }
    return ClosedSet(n, std::move(closed));
}

ClosedSet ClosedSet::full(int n) {
    std::vector<Pair> all;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) all.emplace_back(i, j);
    }
    return ClosedSet(n, std::move(all));
}

std::vector<Pair> ClosedSet::sorted_pairs() const {
    std::vector<Pair> out = order_;
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Pair> ClosedSet::covers() const {
    std::vector<Pair> out;
    for (const auto& [i, k] : sorted_pairs()) {
        bool composite = false;
        for (int j = i + 1; j < k && !composite; ++j) composite = contains(i, j) && contains(j, k);
        if (!composite) out.emplace_back(i, k);
    }
    return out;
}

ClosedSet derived_subgroup(const ClosedSet& J) {
    std::vector<Pair> pairs;
    for (const auto& [i, j, k] : J.chains3()) pairs.emplace_back(i, k);
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    return ClosedSet::validate_closed(J.n(), pairs);
}

bool ordering_lemma_holds(const ClosedSet& J) {
    for (const auto& [i, j, k] : J.chains3()) {
        // (j,k) + (i,j) = (i,k), with (j,k) < (i,j) in the total order.
        int a = J.index(j, k), b = J.index(i, j);
        const int s = J.index(i, k);
        if (b < a) std::swap(a, b);
        if (!(a < s && s < b)) return false;
    }
    return true;
}

Functional zero_functional(const ClosedSet& J) { return Functional(J.size()); }

Functional make_functional(const ClosedSet& J, const std::vector<FunctionalEntry>& entries) {
    Functional phi = zero_functional(J);
    for (const auto& e : entries) {
        const int idx = J.index(e.i, e.j);
        if (idx < 0) throw PairOutOfRange(e.i, e.j, J.n());
        phi[static_cast<std::size_t>(idx)] = e.value;
    }
    return phi;
}

Elem value_at(const ClosedSet& J, const Functional& phi, int i, int j) noexcept {
    const int idx = J.index(i, j);
    return idx < 0 ? Elem{0} : phi[static_cast<std::size_t>(idx)];
}

std::vector<Pair> support(const ClosedSet& J, const Functional& phi) {
    std::vector<Pair> out;
    for (std::size_t k = 0; k < phi.size(); ++k) {
        if (!phi[k].is_zero()) out.push_back(J.pair(k));
    }
    return out;
}

bool is_monomial(const ClosedSet& J, const Functional& phi) {
    std::vector<char> row(static_cast<std::size_t>(J.n()) + 1, 0), col(static_cast<std::size_t>(J.n()) + 1, 0);
    for (const auto& [i, j] : support(J, phi)) {
        if (row[i] || col[j]) return false;
        row[i] = col[j] = 1;
    }
    return true;
}

std::uint64_t pack(std::uint32_t q, std::span<const Elem> v) {
    std::uint64_t code = 0;
    for (auto e : v) code = code * q + e.value;
    return code;
}

Vec unpack(std::uint32_t q, std::size_t len, std::uint64_t code) {
    Vec v(len);
    for (std::size_t k = len; k-- > 0;) {
        v[k] = Elem{static_cast<std::uint32_t>(code % q)};
        code /= q;
    }
    return v;
}

std::optional<std::uint64_t> space_size(std::uint32_t q, std::size_t len) noexcept {
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < len; ++i) {
        if (out > (std::uint64_t{1} << 63) / q) return std::nullopt;
        out *= q;
    }
    return out;
}

}  // namespace supertab
