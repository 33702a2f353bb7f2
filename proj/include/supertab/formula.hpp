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

#ifndef SUPERTAB_FORMULA_HPP
#define SUPERTAB_FORMULA_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "supertab/core.hpp"
#include "supertab/cyclotomic.hpp"

namespace supertab {

/// M_{(i,j),(k,l)} = phi_jk eta_il over 4-chains (i,j,k,l);
/// a_{(i,j)} = sum_k phi_jk eta_ik; b_{(j,k)} = sum_i phi_ij eta_ik.
struct MeshData {
    Matrix M;
    Vec a;
    Vec b;
};

struct MeshResult {
    bool meshed = false;
    /// The particular solution of M x = -a with free variables zero.
    Vec b0;
    std::size_t rank = 0;
};

MeshData mesh_data(const PatternGroup& G, const Functional& phi, const Functional& eta);
/// Meshing test on precomputed mesh data; shared with algebra groups.
MeshResult mesh_test(const Field& f, const MeshData& data);
MeshResult meshes(const PatternGroup& G, const Functional& phi, const Functional& eta);

/// q^{corank - rank} zeta^{Tr(b0 . b + phi . eta)} on meshed data, zero otherwise.
CharValue value_from_mesh(const Field& f, std::size_t corank, const MeshData& data, const MeshResult& mesh,
                          Elem pairing);
/// Same as above with an arbitrary solution of M x = -a in place of b0.
CharValue value_with_solution(const Field& f, std::size_t corank, const MeshData& data, const Vec& solution,
                              std::size_t rank, Elem pairing);

/// chi^eta(x_phi).
CharValue value(const PatternGroup& G, const Functional& eta, const Functional& phi);
/// chi^eta(1) = q^corank(eta).
std::uint64_t degree(const PatternGroup& G, const Functional& eta);

/// Repeated evaluation of chi^eta for a fixed eta. Restricts the mesh
/// system to rows and columns touched by 4-chains through supp(eta).
/// Not thread-safe; use one instance per thread.
class CharacterEvaluator {
   public:
    CharacterEvaluator(const PatternGroup& G, Functional eta);
    std::size_t corank() const noexcept { return corank_; }
    const Functional& eta() const noexcept { return eta_; }
    CharValue operator()(const Functional& phi);

   private:
    struct Entry {
        std::uint32_t row;
        std::uint32_t col;
        std::uint32_t src;
        Elem coeff;
    };
    const PatternGroup* G_;
    Functional eta_;
    std::size_t corank_;
    std::vector<Entry> a_terms_, b_terms_, m_terms_;
    std::vector<std::uint32_t> rows_, cols_;
    std::vector<int> row_slot_, col_slot_;
    std::vector<Elem> work_;
    Vec a_, b_;
};

bool is_heisenberg_shape(const ClosedSet& J);
/// Closed form on Heisenberg-shaped J; throws ShapeMismatch otherwise.
CharValue value_heisenberg(const PatternGroup& G, const Functional& eta, const Functional& phi);
/// Closed form on J = R^+ for monomial eta and phi.
CharValue value_un(const PatternGroup& G, const Functional& eta, const Functional& phi);
/// Closed form on J without 4-chains.
CharValue value_no4chain(const PatternGroup& G, const Functional& eta, const Functional& phi);

/// Bases of ann^R(eta) and ann^L(eta).
std::pair<std::vector<Vec>, std::vector<Vec>> ann_spaces(const PatternGroup& G, const Functional& eta);
/// True iff ann^R(eta) + ann^L(eta) is all of J^*.
bool is_irreducible(const PatternGroup& G, const Functional& eta);

/// No 4-chain (i,j,k,l) with (i,j),(k,l) in supp(phi): the superclass of x_phi is a conjugacy class.
bool superclass_is_class_sufficient(const PatternGroup& G, const Functional& phi);
/// No 4-chain (i,j,k,l) with (i,k),(j,l) in supp(eta): chi^eta is irreducible.
bool irreducible_sufficient(const PatternGroup& G, const Functional& eta);
/// For J = R^+ and monomial eta, the exact irreducibility test. Throws
/// ShapeMismatch or NonMonomialRepresentative outside that domain.
bool full_u_irreducible(const PatternGroup& G, const Functional& eta);

}  // namespace supertab

#endif
