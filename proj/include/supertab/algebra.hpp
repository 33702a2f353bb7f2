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

#ifndef SUPERTAB_ALGEBRA_HPP
#define SUPERTAB_ALGEBRA_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "supertab/core.hpp"
#include "supertab/cyclotomic.hpp"
#include "supertab/formula.hpp"
#include "supertab/gf.hpp"
#include "supertab/linalg.hpp"
#include "supertab/orbits.hpp"
#include "supertab/poset.hpp"

namespace supertab {

/// One structure constant c_ij^k (0-based indices).
struct StructureConstant {
    std::uint32_t i;
    std::uint32_t j;
    std::uint32_t k;
    Elem value;
};

/// Coordinates of phi or eta against a basis of the algebra or its dual.
using AlgFunctional = Vec;

/// A nilpotent associative algebra over F_q given by structure constants
/// v_i v_j = sum_k c_ij^k v_k.
class StructureAlgebra {
   public:
    /// Throws NotAssociative at the first violated identity or NotNilpotent
    /// with a nonzero product of d+1 basis vectors.
    static StructureAlgebra validate(FieldPtr field, std::size_t d, const std::vector<StructureConstant>& constants);

    std::size_t d() const noexcept { return d_; }
    const Field& field() const noexcept { return *field_; }
    const FieldPtr& field_ptr() const noexcept { return field_; }
    Elem c(std::size_t i, std::size_t j, std::size_t k) const noexcept { return c_[(i * d_ + j) * d_ + k]; }
    /// Nonzero constants in (i,j,k) order.
    std::vector<StructureConstant> constants() const;

    /// Product of two algebra elements in coordinates.
    Vec multiply(const Vec& x, const Vec& y) const;
    /// (C_i)_{jk} = c_ij^k.
    Matrix left_constants(std::size_t i) const;
    /// (C^j)_{ik} = c_ij^k.
    Matrix right_constants(std::size_t j) const;

    friend bool operator==(const StructureAlgebra& a, const StructureAlgebra& b) {
        return a.d_ == b.d_ && *a.field_ == *b.field_ && a.c_ == b.c_;
    }

   private:
    StructureAlgebra(FieldPtr field, std::size_t d, std::vector<Elem> c)
        : field_(std::move(field)), d_(d), c_(std::move(c)) {}

    FieldPtr field_;
    std::size_t d_;
    std::vector<Elem> c_;
};

/// The algebra group 1 + n with its orbit machinery.
class AlgebraGroup {
   public:
    explicit AlgebraGroup(StructureAlgebra algebra);

    const StructureAlgebra& algebra() const noexcept { return A_; }
    const Field& field() const noexcept { return A_.field(); }
    std::size_t dim() const noexcept { return A_.d(); }

    const MoveSet& two_sided_moves() const noexcept { return both_; }
    const MoveSet& right_comoves() const noexcept { return coright_; }
    const MoveSet& two_sided_comoves() const noexcept { return coboth_; }

    std::vector<OrbitSummary> all_orbit_reps(std::uint64_t cap = default_table_cap) const;
    std::vector<OrbitSummary> all_coorbit_reps(std::uint64_t cap = default_table_cap) const;

   private:
    StructureAlgebra A_;
    MoveSet both_, coright_, coboth_;
};

/// M_ij = lambda_eta(v_i X_phi v_j), a_i = lambda_eta(v_i X_phi), b_j = lambda_eta(X_phi v_j).
MeshData alg_mesh_data(const StructureAlgebra& A, const AlgFunctional& phi, const AlgFunctional& eta);
/// log_q of the right co-orbit size of lambda_eta.
std::size_t alg_corank(const AlgebraGroup& G, const AlgFunctional& eta, std::uint64_t cap = default_table_cap);
CharValue alg_value(const AlgebraGroup& G, const AlgFunctional& eta, const AlgFunctional& phi,
                    std::uint64_t cap = default_table_cap);
/// alg_value with a precomputed corank.
CharValue alg_value_with_corank(const StructureAlgebra& A, std::size_t corank, const AlgFunctional& eta,
                                const AlgFunctional& phi);

/// Basis matrices of an algebra embedded in the strictly upper n x n matrices.
struct Embedding {
    int n = 0;
    std::vector<Matrix> basis;
};

/// Smallest closed set whose pattern algebra contains the span of the basis.
ClosedSet pattern_envelope(const Embedding& embedding);
/// Structure constants of the span of the basis; throws SpecMismatch if the
/// basis is dependent or the span is not closed under products.
StructureAlgebra algebra_from_embedding(FieldPtr field, const Embedding& embedding);
/// n_J with basis indexed by the total order on J.
StructureAlgebra pattern_to_algebra(const ClosedSet& J, FieldPtr field);

struct AlgebraSpec {
    StructureAlgebra algebra;
    std::optional<Embedding> embedding;
};

/// Parses the algebra spec format:
///
///     d 4
///     q 2
///     constants
///     1 1 2 1        (i j k c_ij^k, 1-based)
///     embed n 4      (optional)
///     1 1 2 1        (basis index, row, column, value)
///
/// When both are present the constants must match the embedding.
AlgebraSpec parse_algebra_spec(std::string_view text, std::optional<std::uint32_t> q_override = std::nullopt);
std::string emit_algebra_spec(const AlgebraSpec& spec);

}  // namespace supertab

#endif
