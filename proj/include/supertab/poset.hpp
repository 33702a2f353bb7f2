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

#ifndef SUPERTAB_POSET_HPP
#define SUPERTAB_POSET_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "supertab/gf.hpp"
#include "supertab/linalg.hpp"

namespace supertab {

using Pair = std::pair<int, int>;
using Chain3 = std::array<int, 3>;
using Chain4 = std::array<int, 4>;

/// A closed set J of pairs (i,j), 1 <= i < j <= n, with (i,j),(j,k) in J
/// implying (i,k) in J.
///
/// Pairs are indexed by the total order in which (r,s) < (i,j) iff r > i,
/// or r = i and s > j. Index 0 is the smallest pair.
class ClosedSet {
   public:
    ClosedSet() = default;

    /// Throws NotClosed listing every violating triple, or PairOutOfRange.
    static ClosedSet validate_closed(int n, const std::vector<Pair>& pairs);
    /// Transitive closure of a relation given by covering pairs.
    static ClosedSet close_covers(int n, const std::vector<Pair>& covers);
    /// All pairs i < j.
    static ClosedSet full(int n);

    int n() const noexcept { return n_; }
    std::size_t size() const noexcept { return order_.size(); }
    bool empty() const noexcept { return order_.empty(); }

    /// Pairs in increasing total order.
    const std::vector<Pair>& index_order() const noexcept { return order_; }
    const Pair& pair(std::size_t idx) const noexcept { return order_[idx]; }
    /// Position in index_order, or -1 if absent.
    int index(int i, int j) const noexcept {
        if (i < 1 || j < 1 || i > n_ || j > n_) return -1;
        return slot_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
    }
    bool contains(int i, int j) const noexcept { return index(i, j) >= 0; }

    /// Chains with consecutive pairs in J, in lexicographic order.
    const std::vector<Chain3>& chains3() const noexcept { return chains3_; }
    const std::vector<Chain4>& chains4() const noexcept { return chains4_; }
    bool has_4chain() const noexcept { return !chains4_.empty(); }

    /// Pairs in lexicographic order.
    std::vector<Pair> sorted_pairs() const;
    /// Covering relations of the poset.
    std::vector<Pair> covers() const;
    bool is_full() const noexcept { return order_.size() == static_cast<std::size_t>(n_ * (n_ - 1) / 2); }

    friend bool operator==(const ClosedSet& a, const ClosedSet& b) noexcept {
        return a.n_ == b.n_ && a.order_ == b.order_;
    }

   private:
    ClosedSet(int n, std::vector<Pair> pairs);

    int n_ = 0;
    std::vector<Pair> order_;
    std::vector<int> slot_;
    std::vector<Chain3> chains3_;
    std::vector<Chain4> chains4_;
};

/// J' = {(i,k) : (i,j),(j,k) in J for some j}.
ClosedSet derived_subgroup(const ClosedSet& J);

/// True iff alpha < alpha+beta < beta in the index order for every pair of
/// roots alpha < beta of J whose sum is a root of J.
bool ordering_lemma_holds(const ClosedSet& J);

/// A map J -> F_q stored densely in index order; absent pairs are zero.
using Functional = Vec;

struct FunctionalEntry {
    int i;
    int j;
    Elem value;
};

Functional zero_functional(const ClosedSet& J);
/// Throws PairOutOfRange for a pair outside J.
Functional make_functional(const ClosedSet& J, const std::vector<FunctionalEntry>& entries);
Elem value_at(const ClosedSet& J, const Functional& phi, int i, int j) noexcept;
/// Pairs with nonzero value, in index order.
std::vector<Pair> support(const ClosedSet& J, const Functional& phi);
/// At most one nonzero entry in each row and each column.
bool is_monomial(const ClosedSet& J, const Functional& phi);

/// Packs a coordinate vector as sum_k v_k q^{N-1-k}; numeric order of codes
/// equals lexicographic order of vectors.
std::uint64_t pack(std::uint32_t q, std::span<const Elem> v);
Vec unpack(std::uint32_t q, std::size_t len, std::uint64_t code);
/// q^len, or nullopt if it exceeds 2^63.
std::optional<std::uint64_t> space_size(std::uint32_t q, std::size_t len) noexcept;

}  // namespace supertab

#endif
