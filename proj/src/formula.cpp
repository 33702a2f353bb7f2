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

#include "supertab/formula.hpp"

#include <algorithm>

#include "supertab/error.hpp"

namespace supertab {

namespace {

std::vector<Vec> echelonized(const Field& f, const std::vector<Vec>& vectors, std::size_t dim) {
    if (vectors.empty()) return {};
    Echelon e = rref(f, Matrix::from_rows(vectors, dim));
    std::vector<Vec> out;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        auto row = e.reduced.row(i);
        out.emplace_back(row.begin(), row.end());
    }
    return out;
}

CharValue theta_power(const Field& f, std::size_t corank, std::size_t rank, Elem arg) {
    if (corank < rank) throw InternalInvariantViolation("meshed pair with corank below the mesh rank");
    return CharValue::make(static_cast<std::uint32_t>(corank - rank), f.trace(arg));
}

}  // namespace

MeshData mesh_data(const PatternGroup& G, const Functional& phi, const Functional& eta) {
    const Field& f = G.field();
    const std::size_t N = G.dim();
    if (phi.size() != N || eta.size() != N) throw SpecMismatch("functional does not belong to this closed set");
    MeshData d{Matrix(N, N), Vec(N), Vec(N)};
    for (const auto& [ij, jk, ik] : G.chain3_index()) {
        d.a[ij] = f.add(d.a[ij], f.mul(phi[jk], eta[ik]));
        d.b[jk] = f.add(d.b[jk], f.mul(phi[ij], eta[ik]));
    }
    for (const auto& c : G.chain4_index()) d.M(c[0], c[2]) = f.mul(phi[c[1]], eta[c[3]]);
    return d;
}

MeshResult mesh_test(const Field& f, const MeshData& data) {
    MeshResult out;
    Vec rhs(data.a.size());
    for (std::size_t k = 0; k < rhs.size(); ++k) rhs[k] = f.neg(data.a[k]);
    auto x = solve(f, data.M, rhs);
    out.rank = rank(f, data.M);
    if (!x) return out;
    if (!perp_to_nullspace(f, data.M, data.b)) return out;
    out.meshed = true;
    out.b0 = std::move(*x);
    return out;
}

MeshResult meshes(const PatternGroup& G, const Functional& phi, const Functional& eta) {
    return mesh_test(G.field(), mesh_data(G, phi, eta));
}

CharValue value_with_solution(const Field& f, std::size_t corank, const MeshData& data, const Vec& solution,
                              std::size_t rank, Elem pairing) {
    return theta_power(f, corank, rank, f.add(dot(f, solution, data.b), pairing));
}

CharValue value_from_mesh(const Field& f, std::size_t corank, const MeshData& data, const MeshResult& mesh,
                          Elem pairing) {
    if (!mesh.meshed) return CharValue::zero();
    return value_with_solution(f, corank, data, mesh.b0, mesh.rank, pairing);
}

CharValue value(const PatternGroup& G, const Functional& eta, const Functional& phi) {
    const MeshData data = mesh_data(G, phi, eta);
    return value_from_mesh(G.field(), G.corank(eta), data, mesh_test(G.field(), data), G.pairing(eta, phi));
}

std::uint64_t degree(const PatternGroup& G, const Functional& eta) {
    return static_cast<std::uint64_t>(checked_pow(G.field().q(), static_cast<std::uint32_t>(G.corank(eta))));
}

CharacterEvaluator::CharacterEvaluator(const PatternGroup& G, Functional eta)
    : G_(&G), eta_(std::move(eta)), corank_(G.corank(eta_)) {
    const std::size_t N = G.dim();
    for (const auto& [ij, jk, ik] : G.chain3_index()) {
        if (eta_[ik].is_zero()) continue;
        a_terms_.push_back({ij, 0, jk, eta_[ik]});
        b_terms_.push_back({jk, 0, ij, eta_[ik]});
    }
    row_slot_.assign(N, -1);
    col_slot_.assign(N, -1);
    for (const auto& c : G.chain4_index()) {
        if (eta_[c[3]].is_zero()) continue;
        m_terms_.push_back({c[0], c[2], c[1], eta_[c[3]]});
        if (row_slot_[c[0]] < 0) {
            row_slot_[c[0]] = static_cast<int>(rows_.size());
            rows_.push_back(c[0]);
        }
        if (col_slot_[c[2]] < 0) {
            col_slot_[c[2]] = 0;
            cols_.push_back(c[2]);
        }
    }
    // Keep active columns in index order so pivots match the full system.
    std::sort(cols_.begin(), cols_.end());
    for (std::size_t k = 0; k < cols_.size(); ++k) col_slot_[cols_[k]] = static_cast<int>(k);
    std::sort(rows_.begin(), rows_.end());
    for (std::size_t k = 0; k < rows_.size(); ++k) row_slot_[rows_[k]] = static_cast<int>(k);
    work_.resize(rows_.size() * (cols_.size() + 1));
    a_.resize(N);
    b_.resize(N);
}

CharValue CharacterEvaluator::operator()(const Functional& phi) {
    const Field& f = G_->field();
    const std::size_t N = G_->dim();
    if (phi.size() != N) throw SpecMismatch("functional does not belong to this closed set");
    std::fill(a_.begin(), a_.end(), Elem{0});
    std::fill(b_.begin(), b_.end(), Elem{0});
    for (const auto& t : a_terms_) a_[t.row] = f.add(a_[t.row], f.mul(phi[t.src], t.coeff));
    for (const auto& t : b_terms_) b_[t.row] = f.add(b_[t.row], f.mul(phi[t.src], t.coeff));
    for (std::size_t k = 0; k < N; ++k) {
        if (row_slot_[k] < 0 && !a_[k].is_zero()) return CharValue::zero();
        if (col_slot_[k] < 0 && !b_[k].is_zero()) return CharValue::zero();
    }
    const std::size_t R = rows_.size(), C = cols_.size(), W = C + 1;
    std::fill(work_.begin(), work_.end(), Elem{0});
    for (const auto& t : m_terms_) {
        Elem& cell = work_[static_cast<std::size_t>(row_slot_[t.row]) * W + static_cast<std::size_t>(col_slot_[t.col])];
        cell = f.add(cell, f.mul(phi[t.src], t.coeff));
    }
    for (std::size_t r = 0; r < R; ++r) work_[r * W + C] = f.neg(a_[rows_[r]]);

    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < C && rank < R; ++c) {
        std::size_t piv = rank;
        while (piv < R && work_[piv * W + c].is_zero()) ++piv;
        if (piv == R) continue;
        if (piv != rank) {
            for (std::size_t j = c; j < W; ++j) std::swap(work_[piv * W + j], work_[rank * W + j]);
        }
        const Elem inv = f.inv(work_[rank * W + c]);
        for (std::size_t j = c; j < W; ++j) work_[rank * W + j] = f.mul(work_[rank * W + j], inv);
        for (std::size_t i = 0; i < R; ++i) {
            if (i == rank) continue;
            const Elem factor = work_[i * W + c];
            if (factor.is_zero()) continue;
            for (std::size_t j = c; j < W; ++j) {
                work_[i * W + j] = f.sub(work_[i * W + j], f.mul(factor, work_[rank * W + j]));
            }
        }
        pivots.push_back(c);
        ++rank;
    }
    for (std::size_t i = rank; i < R; ++i) {
        if (!work_[i * W + C].is_zero()) return CharValue::zero();
    }
    // b must lie in the row space of M.
    Vec residual(C);
    for (std::size_t c = 0; c < C; ++c) residual[c] = b_[cols_[c]];
    Elem arg = G_->pairing(eta_, phi);
    for (std::size_t i = 0; i < rank; ++i) arg = f.add(arg, f.mul(work_[i * W + C], b_[cols_[pivots[i]]]));
    for (std::size_t i = 0; i < rank; ++i) {
        const Elem coef = residual[pivots[i]];
        if (coef.is_zero()) continue;
        for (std::size_t c = pivots[i]; c < C; ++c) residual[c] = f.sub(residual[c], f.mul(coef, work_[i * W + c]));
    }
    for (auto e : residual) {
        if (!e.is_zero()) return CharValue::zero();
    }
    return theta_power(f, corank_, rank, arg);
}

bool is_heisenberg_shape(const ClosedSet& J) {
    const int n = J.n();
    if (n < 2) return false;
    std::vector<Pair> expected;
    for (int j = 2; j <= n; ++j) expected.emplace_back(1, j);
    for (int j = 2; j < n; ++j) expected.emplace_back(j, n);
    std::sort(expected.begin(), expected.end());
    return J.sorted_pairs() == expected;
}

CharValue value_heisenberg(const PatternGroup& G, const Functional& eta, const Functional& phi) {
    const ClosedSet& J = G.J();
    if (!is_heisenberg_shape(J)) throw ShapeMismatch("closed set is not of Heisenberg shape");
    const Field& f = G.field();
    const int n = J.n();
    const Elem center_eta = value_at(J, eta, 1, n);
    if (center_eta.is_zero()) return CharValue::make(0, f.trace(G.pairing(eta, phi)));
    for (const auto& [i, j] : support(J, phi)) {
        if (i != 1 || j != n) return CharValue::zero();
    }
    return CharValue::make(static_cast<std::uint32_t>(n - 2), f.trace(f.mul(center_eta, value_at(J, phi, 1, n))));
}

CharValue value_un(const PatternGroup& G, const Functional& eta, const Functional& phi) {
    const ClosedSet& J = G.J();
    if (!J.is_full()) throw ShapeMismatch("closed set is not all of R^+");
    if (!is_monomial(J, eta) || !is_monomial(J, phi)) {
        throw NonMonomialRepresentative("representatives must have at most one nonzero entry per row and column");
    }
    const Field& f = G.field();
    const auto seta = support(J, eta), sphi = support(J, phi);
    for (const auto& [i, l] : seta) {
        for (const auto& [j, k] : sphi) {
            if (j == i && k < l) return CharValue::zero();
            if (k == l && j > i) return CharValue::zero();
        }
    }
    long exponent = 0;
    for (const auto& [i, l] : seta) {
        exponent += l - i - 1;
        for (const auto& [j, k] : sphi) {
            if (i < j && k < l) --exponent;
        }
    }
    if (exponent < 0) throw InternalInvariantViolation("negative exponent in the R^+ closed form");
    return CharValue::make(static_cast<std::uint32_t>(exponent), f.trace(G.pairing(eta, phi)));
}

CharValue value_no4chain(const PatternGroup& G, const Functional& eta, const Functional& phi) {
    const ClosedSet& J = G.J();
    if (J.has_4chain()) throw ShapeMismatch("closed set has a 4-chain");
    const Field& f = G.field();
    const MeshData d = mesh_data(G, phi, eta);
    for (std::size_t k = 0; k < G.dim(); ++k) {
        if (!d.a[k].is_zero() || !d.b[k].is_zero()) return CharValue::zero();
    }
    std::size_t exponent = 0;
    const int n = J.n();
    for (int j = 1; j <= n; ++j) {
        std::vector<int> below, above;
        for (int i = 1; i < j; ++i) {
            if (J.contains(i, j)) below.push_back(i);
        }
        for (int k = j + 1; k <= n; ++k) {
            if (J.contains(j, k)) above.push_back(k);
        }
        if (below.empty() || above.empty()) continue;
        Matrix W(below.size(), above.size());
        for (std::size_t r = 0; r < below.size(); ++r) {
            for (std::size_t c = 0; c < above.size(); ++c) W(r, c) = value_at(J, eta, below[r], above[c]);
        }
        exponent += rank(f, W);
    }
    return CharValue::make(static_cast<std::uint32_t>(exponent), f.trace(G.pairing(eta, phi)));
}

std::pair<std::vector<Vec>, std::vector<Vec>> ann_spaces(const PatternGroup& G, const Functional& eta) {
    const Field& f = G.field();
    const std::size_t N = G.dim();
    if (eta.size() != N) throw SpecMismatch("functional does not belong to this closed set");
    Matrix right(N, N), left(N, N);
    for (const auto& [ij, jk, ik] : G.chain3_index()) {
        right(ij, jk) = eta[ik];
        left(jk, ij) = eta[ik];
    }
    return {echelonized(f, nullspace_basis(f, right), N), echelonized(f, nullspace_basis(f, left), N)};
}

bool is_irreducible(const PatternGroup& G, const Functional& eta) {
    auto [right, left] = ann_spaces(G, eta);
    std::vector<Vec> all = std::move(right);
    all.insert(all.end(), left.begin(), left.end());
    if (all.empty()) return G.dim() == 0;
    return rank(G.field(), Matrix::from_rows(all, G.dim())) == G.dim();
}

bool superclass_is_class_sufficient(const PatternGroup& G, const Functional& phi) {
    for (const auto& c : G.chain4_index()) {
        if (!phi[c[0]].is_zero() && !phi[c[2]].is_zero()) return false;
    }
    return true;
}

bool irreducible_sufficient(const PatternGroup& G, const Functional& eta) {
    for (const auto& c : G.chain4_index()) {
        if (!eta[c[4]].is_zero() && !eta[c[5]].is_zero()) return false;
    }
    return true;
}

bool full_u_irreducible(const PatternGroup& G, const Functional& eta) {
    if (!G.J().is_full()) throw ShapeMismatch("closed set is not all of R^+");
    if (!is_monomial(G.J(), eta)) throw NonMonomialRepresentative("eta is not monomial");
    return irreducible_sufficient(G, eta);
}

}  // namespace supertab
