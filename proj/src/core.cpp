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

#include "supertab/core.hpp"

#include <algorithm>

#include "supertab/error.hpp"

namespace supertab {

namespace {

std::uint32_t u(int idx) { return static_cast<std::uint32_t>(idx); }

void check_dim(const Functional& v, std::size_t dim) {
    if (v.size() != dim) throw SpecMismatch("functional does not belong to this closed set");
}

}  // namespace

PatternGroup::PatternGroup(ClosedSet J, FieldPtr field) : J_(std::move(J)), field_(std::move(field)) {
    if (!field_) throw SpecMismatch("pattern group without a field");
    for (const auto& [i, j, k] : J_.chains3()) {
        c3_.push_back({u(J_.index(i, j)), u(J_.index(j, k)), u(J_.index(i, k))});
    }
    for (const auto& [i, j, k, l] : J_.chains4()) {
        c4_.push_back({u(J_.index(i, j)), u(J_.index(j, k)), u(J_.index(k, l)), u(J_.index(i, l)),
                       u(J_.index(i, k)), u(J_.index(j, l))});
    }

    // Scalars t = X^s, s < r, span F_q over F_p; x_a(s)x_a(t) = x_a(s+t) makes them enough.
    std::vector<Elem> basis;
    std::uint32_t power = 1;
    for (std::uint32_t s = 0; s < field_->r(); ++s) {
        basis.push_back(Elem{power});
        power *= field_->p();
    }
    const int n = J_.n();
    for (MoveSet* m : {&left_, &right_, &both_, &coleft_, &coright_, &coboth_}) {
        m->dim = J_.size();
        m->scalars = basis;
    }
    const Elem one = field_->one();
    for (const auto& [a, b] : J_.index_order()) {
        LinearMove left, right, coleft, coright;
        for (int l = b + 1; l <= n; ++l) {
            // x_{ab}(t) X: row b moves into row a.
            if (J_.contains(b, l)) left.terms.push_back({u(J_.index(a, l)), u(J_.index(b, l)), one});
            // lambda x_{ab}(t): eta_{bl} picks up eta_{al}.
            if (J_.contains(b, l)) coleft.terms.push_back({u(J_.index(b, l)), u(J_.index(a, l)), one});
        }
        for (int i = 1; i < a; ++i) {
            // X x_{ab}(t): column a moves into column b.
            if (J_.contains(i, a)) right.terms.push_back({u(J_.index(i, b)), u(J_.index(i, a)), one});
            // eta_{ia} picks up eta_{ib}.
            if (J_.contains(i, a)) coright.terms.push_back({u(J_.index(i, a)), u(J_.index(i, b)), one});
        }
        left_.moves.push_back(left);
        right_.moves.push_back(right);
        coleft_.moves.push_back(coleft);
        coright_.moves.push_back(coright);
        both_.moves.push_back(left);
        both_.moves.push_back(right);
        coboth_.moves.push_back(coleft);
        coboth_.moves.push_back(coright);
    }
}

Functional PatternGroup::product(const Functional& a, const Functional& b) const {
    check_dim(a, dim());
    check_dim(b, dim());
    const Field& f = *field_;
    Functional out = zero_functional(J_);
    for (const auto& [ij, jk, ik] : c3_) out[ik] = f.add(out[ik], f.mul(a[ij], b[jk]));
    return out;
}

GroupElement PatternGroup::multiply(const GroupElement& x, const GroupElement& y) const {
    const Field& f = *field_;
    Functional out = product(x.phi, y.phi);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = f.add(out[k], f.add(x.phi[k], y.phi[k]));
    return {std::move(out)};
}

GroupElement PatternGroup::inverse(const GroupElement& x) const {
    check_dim(x.phi, dim());
    const Field& f = *field_;
    // (1+X)^{-1} = 1 - X + X^2 - ...; X^n = 0.
    Functional sum = zero_functional(J_);
    Functional term = x.phi;
    bool negate = true;
    for (int step = 0; step < J_.n(); ++step) {
        for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = negate ? f.sub(sum[k], term[k]) : f.add(sum[k], term[k]);
        negate = !negate;
        term = product(term, x.phi);
    }
    return {std::move(sum)};
}

Functional PatternGroup::act_left(const Functional& rho, const Functional& phi) const {
    Functional out = product(rho, phi);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = field_->add(out[k], phi[k]);
    return out;
}

Functional PatternGroup::act_right(const Functional& phi, const Functional& rho) const {
    Functional out = product(phi, rho);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = field_->add(out[k], phi[k]);
    return out;
}

Functional PatternGroup::act_two_sided(const Functional& tau, const Functional& phi, const Functional& rho) const {
    check_dim(tau, dim());
    check_dim(phi, dim());
    check_dim(rho, dim());
    const Field& f = *field_;
    Functional out = phi;
    for (const auto& [ij, jk, ik] : c3_) {
        out[ik] = f.add(out[ik], f.mul(tau[ij], phi[jk]));
        out[ik] = f.add(out[ik], f.mul(phi[ij], rho[jk]));
    }
    for (const auto& c : c4_) out[c[3]] = f.add(out[c[3]], f.mul(tau[c[0]], f.mul(phi[c[1]], rho[c[2]])));
    return out;
}

Functional PatternGroup::coact(const Functional& tau, const Functional& eta, const Functional& rho) const {
    check_dim(tau, dim());
    check_dim(eta, dim());
    check_dim(rho, dim());
    const Field& f = *field_;
    Functional out = eta;
    for (const auto& [ij, jk, ik] : c3_) {
        // tau_{ij} eta_{ik} lands on (j,k); eta_{ik} rho_{jk} lands on (i,j).
        out[jk] = f.add(out[jk], f.mul(tau[ij], eta[ik]));
        out[ij] = f.add(out[ij], f.mul(eta[ik], rho[jk]));
    }
    for (const auto& c : c4_) out[c[1]] = f.add(out[c[1]], f.mul(tau[c[0]], f.mul(eta[c[3]], rho[c[2]])));
    return out;
}

Matrix PatternGroup::left_action_matrix(const Functional& phi) const {
    check_dim(phi, dim());
    Matrix m(dim(), dim());
    for (const auto& [ik, kl, il] : c3_) m(il, ik) = phi[kl];
    return m;
}

Matrix PatternGroup::right_action_matrix(const Functional& phi) const {
    check_dim(phi, dim());
    Matrix m(dim(), dim());
    for (const auto& [ij, jl, il] : c3_) m(il, jl) = phi[ij];
    return m;
}

Matrix PatternGroup::left_coaction_matrix(const Functional& eta) const {
    check_dim(eta, dim());
    Matrix m(dim(), dim());
    for (const auto& [ij, jk, ik] : c3_) m(jk, ij) = eta[ik];
    return m;
}

Matrix PatternGroup::right_coaction_matrix(const Functional& eta) const {
    check_dim(eta, dim());
    Matrix m(dim(), dim());
    for (const auto& [jk, kl, jl] : c3_) m(jk, kl) = eta[jl];
    return m;
}

std::size_t PatternGroup::corank(const Functional& eta) const {
    const std::size_t left = rank(*field_, left_coaction_matrix(eta));
    const std::size_t right = rank(*field_, right_coaction_matrix(eta));
    if (left != right) throw InternalInvariantViolation("left and right co-action ranks differ");
    return left;
}

bool PatternGroup::preferred_rep(const Vec& v) const { return J_.is_full() && is_monomial(J_, v); }

Orbit PatternGroup::make_orbit(std::vector<Vec> members, bool materialize) const {
    const std::uint32_t q = field_->q();
    std::sort(members.begin(), members.end(),
              [q](const Vec& a, const Vec& b) { return pack(q, a) < pack(q, b); });
    Orbit out;
    out.size = members.size();
    out.representative = members.front();
    if (J_.is_full()) {
        auto it = std::find_if(members.begin(), members.end(), [this](const Vec& v) { return preferred_rep(v); });
        if (it != members.end()) out.representative = *it;
    }
    if (materialize) out.elements = std::move(members);
    return out;
}

Orbit PatternGroup::orbit(const Functional& phi, std::uint64_t cap, bool materialize) const {
    check_dim(phi, dim());
    return make_orbit(orbit_members(*field_, both_, phi, cap), materialize);
}

Orbit PatternGroup::coorbit(const Functional& eta, std::uint64_t cap, bool materialize) const {
    check_dim(eta, dim());
    return make_orbit(orbit_members(*field_, coboth_, eta, cap), materialize);
}

std::vector<OrbitSummary> PatternGroup::all_orbit_reps(std::uint64_t cap) const {
    if (!J_.is_full()) return sweep_orbits(*field_, both_, cap);
    return sweep_orbits(*field_, both_, cap, [this](const Vec& v) { return preferred_rep(v); });
}

std::vector<OrbitSummary> PatternGroup::all_coorbit_reps(std::uint64_t cap) const {
    if (!J_.is_full()) return sweep_orbits(*field_, coboth_, cap);
    return sweep_orbits(*field_, coboth_, cap, [this](const Vec& v) { return preferred_rep(v); });
}

}  // namespace supertab
