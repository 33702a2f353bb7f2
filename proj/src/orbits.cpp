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

#include "supertab/orbits.hpp"

#include <unordered_set>

#include "supertab/error.hpp"
#include "supertab/poset.hpp"

namespace supertab {

void apply_move(const Field& f, const LinearMove& move, Elem t, std::span<const Elem> v, std::span<Elem> out) {
    std::copy(v.begin(), v.end(), out.begin());
    for (const auto& term : move.terms) {
        const Elem s = v[term.src];
        if (s.is_zero()) continue;
        out[term.dst] = f.add(out[term.dst], f.mul(t, f.mul(term.coeff, s)));
    }
}

std::vector<Vec> orbit_members(const Field& f, const MoveSet& moves, const Vec& start, std::uint64_t cap) {
    if (start.size() != moves.dim) throw ShapeMismatch("orbit seed has the wrong dimension");
    std::unordered_set<std::uint64_t> seen;
    std::vector<Vec> members{start};
    seen.insert(pack(f.q(), start));
    Vec next(moves.dim);
    for (std::size_t head = 0; head < members.size(); ++head) {
        for (const auto& move : moves.moves) {
            for (auto t : moves.scalars) {
                apply_move(f, move, t, members[head], next);
                if (seen.insert(pack(f.q(), next)).second) {
                    if (members.size() >= cap) throw SizeCapExceeded(cap, members.size() + 1);
                    members.push_back(next);
                }
            }
        }
    }
    return members;
}

OrbitPartition partition_orbits(const Field& f, const MoveSet& moves, std::uint64_t cap,
                                const std::function<bool(const Vec&)>& preferred) {
    const auto total = space_size(f.q(), moves.dim);
    if (!total || *total > cap) throw SizeCapExceeded(cap, total ? *total : UINT64_MAX);
    constexpr std::uint32_t unseen = UINT32_MAX;
    OrbitPartition out;
    out.orbit_of.assign(*total, unseen);
    std::vector<std::uint64_t> queue;
    Vec cur(moves.dim), next(moves.dim);
    for (std::uint64_t seed = 0; seed < *total; ++seed) {
        if (out.orbit_of[seed] != unseen) continue;
        const auto id = static_cast<std::uint32_t>(out.orbits.size());
        OrbitSummary orbit;
        orbit.min_code = seed;
        queue.assign(1, seed);
        out.orbit_of[seed] = id;
        bool have_preferred = false;
        std::uint64_t best = seed;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const std::uint64_t code = queue[head];
            cur = unpack(f.q(), moves.dim, code);
            if (preferred && (!have_preferred || code < best) && preferred(cur)) {
                have_preferred = true;
                best = code;
            }
            for (const auto& move : moves.moves) {
                for (auto t : moves.scalars) {
                    apply_move(f, move, t, cur, next);
                    const std::uint64_t c = pack(f.q(), next);
                    if (out.orbit_of[c] == unseen) {
                        out.orbit_of[c] = id;
                        queue.push_back(c);
                    }
                }
            }
        }
        orbit.size = queue.size();
        orbit.rep = unpack(f.q(), moves.dim, have_preferred ? best : seed);
        out.orbits.push_back(std::move(orbit));
    }
    return out;
}

std::vector<OrbitSummary> sweep_orbits(const Field& f, const MoveSet& moves, std::uint64_t cap,
                                       const std::function<bool(const Vec&)>& preferred) {
    return partition_orbits(f, moves, cap, preferred).orbits;
}

}  // namespace supertab
