#ifndef SUPERTAB_TESTS_SUPPORT_HPP
#define SUPERTAB_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>

#include "supertab/core.hpp"
#include "supertab/oracle.hpp"

namespace helpers {

inline supertab::Functional random_functional(const supertab::ClosedSet& J, const supertab::Field& f, std::mt19937& rng) {
    std::uniform_int_distribution<std::uint32_t> pick(0, f.q() - 1);
    supertab::Functional out = supertab::zero_functional(J);
    for (auto& e : out) e = supertab::Elem{pick(rng)};
    return out;
}

inline supertab::Vec random_vec(std::size_t n, const supertab::Field& f, std::mt19937& rng) {
    std::uniform_int_distribution<std::uint32_t> pick(0, f.q() - 1);
    supertab::Vec out(n);
    for (auto& e : out) e = supertab::Elem{pick(rng)};
    return out;
}

inline supertab::Functional single(const supertab::ClosedSet& J, int i, int j, supertab::Elem v) {
    return supertab::make_functional(J, {{i, j, v}});
}

inline std::uint64_t qpow(std::uint64_t q, std::size_t e) {
    std::uint64_t out = 1;
    for (std::size_t k = 0; k < e; ++k) out *= q;
    return out;
}

/// True when the group is small enough for per-element oracle checks.
inline bool oracle_scale(const supertab::PatternGroup& G, std::uint64_t limit = supertab::default_oracle_cap) {
    const auto size = supertab::space_size(G.field().q(), G.dim());
    return size && *size <= limit;
}

inline supertab::Oracle pattern_oracle(const supertab::PatternGroup& G, std::uint64_t cap = supertab::default_oracle_cap) {
    return supertab::Oracle(supertab::EnumeratedGroup::pattern(G, cap));
}

}  // namespace helpers

#endif
