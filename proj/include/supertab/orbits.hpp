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

#ifndef SUPERTAB_ORBITS_HPP
#define SUPERTAB_ORBITS_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "supertab/gf.hpp"
#include "supertab/linalg.hpp"

namespace supertab {

/// (A v)_dst += coeff * v_src for each term of a sparse linear map A.
struct MoveTerm {
    std::uint32_t dst;
    std::uint32_t src;
    Elem coeff;
};

/// A generator acting on F_q^N by v -> v + t A v for t in `scalars`.
struct LinearMove {
    std::vector<MoveTerm> terms;
};

/// Generators of a group acting linearly on F_q^N.
struct MoveSet {
    std::size_t dim = 0;
    std::vector<LinearMove> moves;
    std::vector<Elem> scalars;
};

void apply_move(const Field& f, const LinearMove& move, Elem t, std::span<const Elem> v, std::span<Elem> out);

/// An orbit found by exhaustive search.
struct OrbitSummary {
    Vec rep;
    std::uint64_t size = 0;
    /// Code of the lexicographically smallest member.
    std::uint64_t min_code = 0;
};

/// Members of the orbit of `start`, in breadth-first discovery order.
/// Throws SizeCapExceeded once the orbit grows past `cap`.
std::vector<Vec> orbit_members(const Field& f, const MoveSet& moves, const Vec& start, std::uint64_t cap);

/// Partitions F_q^N into orbits, visiting codes in increasing order. The
/// representative is the smallest member, or the smallest member satisfying
/// `preferred` when one is given and some member satisfies it.
/// Throws SizeCapExceeded when q^N exceeds `cap`.
std::vector<OrbitSummary> sweep_orbits(const Field& f, const MoveSet& moves, std::uint64_t cap,
                                       const std::function<bool(const Vec&)>& preferred = {});

/// Orbit ids of every code, for callers that need the full partition.
struct OrbitPartition {
    std::vector<OrbitSummary> orbits;
    std::vector<std::uint32_t> orbit_of;
};
OrbitPartition partition_orbits(const Field& f, const MoveSet& moves, std::uint64_t cap,
                                const std::function<bool(const Vec&)>& preferred = {});

}  // namespace supertab

#endif
