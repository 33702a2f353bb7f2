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

#ifndef SUPERTAB_CORE_HPP
#define SUPERTAB_CORE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "supertab/gf.hpp"
#include "supertab/linalg.hpp"
#include "supertab/orbits.hpp"
#include "supertab/poset.hpp"

namespace supertab {

inline constexpr std::uint64_t default_table_cap = std::uint64_t{1} << 20;
inline constexpr std::uint64_t default_oracle_cap = std::uint64_t{1} << 12;

/// x_phi = 1 + X_phi in U_J, stored by its functional phi.
struct GroupElement {
    Functional phi;
    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

struct Orbit {
    Functional representative;
    std::uint64_t size = 0;
    std::optional<std::vector<Functional>> elements;
};

/// The pattern group U_J over F_q together with its actions on n_J and n_J^*.
class PatternGroup {
   public:
    PatternGroup(ClosedSet J, FieldPtr field);

    const ClosedSet& J() const noexcept { return J_; }
    const Field& field() const noexcept { return *field_; }
    const FieldPtr& field_ptr() const noexcept { return field_; }
    std::size_t dim() const noexcept { return J_.size(); }

    /// Index triples (idx(i,j), idx(j,k), idx(i,k)) of every 3-chain.
    const std::vector<std::array<std::uint32_t, 3>>& chain3_index() const noexcept { return c3_; }
    /// Index quadruples (idx(i,j), idx(j,k), idx(k,l), idx(i,l)), then idx(i,k), idx(j,l).
    const std::vector<std::array<std::uint32_t, 6>>& chain4_index() const noexcept { return c4_; }

    GroupElement identity() const { return {zero_functional(J_)}; }
    GroupElement multiply(const GroupElement& x, const GroupElement& y) const;
    GroupElement inverse(const GroupElement& x) const;

    /// X_{phi'} = x_rho X_phi.
    Functional act_left(const Functional& rho, const Functional& phi) const;
    /// X_{phi'} = X_phi x_rho.
    Functional act_right(const Functional& phi, const Functional& rho) const;
    /// X_{phi'} = x_tau X_phi x_rho.
    Functional act_two_sided(const Functional& tau, const Functional& phi, const Functional& rho) const;
    /// lambda_{eta'}(X) = lambda_eta(x_tau X x_rho).
    Functional coact(const Functional& tau, const Functional& eta, const Functional& rho) const;

    /// The product X_a X_b restricted to J.
    Functional product(const Functional& a, const Functional& b) const;
    /// lambda_eta(X_phi) = sum over J of eta * phi.
    Elem pairing(const Functional& eta, const Functional& phi) const { return dot(*field_, eta, phi); }

    Matrix left_action_matrix(const Functional& phi) const;
    Matrix right_action_matrix(const Functional& phi) const;
    Matrix left_coaction_matrix(const Functional& eta) const;
    Matrix right_coaction_matrix(const Functional& eta) const;
    /// rank of the left co-action matrix; throws InternalInvariantViolation
    /// if it differs from the rank of the right one.
    std::size_t corank(const Functional& eta) const;

    /// Generators for the one- and two-sided actions on n_J and n_J^*.
    const MoveSet& left_moves() const noexcept { return left_; }
    const MoveSet& right_moves() const noexcept { return right_; }
    const MoveSet& two_sided_moves() const noexcept { return both_; }
    const MoveSet& left_comoves() const noexcept { return coleft_; }
    const MoveSet& right_comoves() const noexcept { return coright_; }
    const MoveSet& two_sided_comoves() const noexcept { return coboth_; }

    /// Two-sided orbit of X_phi; throws SizeCapExceeded when larger than cap.
    Orbit orbit(const Functional& phi, std::uint64_t cap = default_table_cap, bool materialize = true) const;
    /// Two-sided orbit of lambda_eta.
    Orbit coorbit(const Functional& eta, std::uint64_t cap = default_table_cap, bool materialize = true) const;

    /// Canonical orbit representatives in increasing order of their smallest member.
    std::vector<OrbitSummary> all_orbit_reps(std::uint64_t cap = default_table_cap) const;
    std::vector<OrbitSummary> all_coorbit_reps(std::uint64_t cap = default_table_cap) const;

    /// Predicate used to pick representatives; monomial when J is all of R^+.
    bool preferred_rep(const Vec& v) const;

   private:
    Orbit make_orbit(std::vector<Vec> members, bool materialize) const;

    ClosedSet J_;
    FieldPtr field_;
    std::vector<std::array<std::uint32_t, 3>> c3_;
    std::vector<std::array<std::uint32_t, 6>> c4_;
    MoveSet left_, right_, both_, coleft_, coright_, coboth_;
};

}  // namespace supertab

#endif
