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

#ifndef SUPERTAB_ORACLE_HPP
#define SUPERTAB_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "supertab/algebra.hpp"
#include "supertab/core.hpp"
#include "supertab/cyclotomic.hpp"

namespace supertab {

/// A nilpotent algebra of dimension N whose q^N elements are addressed by
/// packed codes. The product is evaluated definitionally: dense matrix
/// multiplication for pattern groups, structure constants for algebra groups.
class EnumeratedGroup {
   public:
    using Product = std::function<Vec(const Vec&, const Vec&)>;

    static EnumeratedGroup pattern(const PatternGroup& G, std::uint64_t cap = default_oracle_cap);
    /// Also checks that the elements 1 + t v_k generate the whole group.
    static EnumeratedGroup algebra(const AlgebraGroup& G, std::uint64_t cap = default_oracle_cap);

    const Field& field() const noexcept { return *field_; }
    std::size_t dim() const noexcept { return dim_; }
    std::uint64_t order() const noexcept { return order_; }

    std::uint32_t encode(const Vec& v) const;
    Vec decode(std::uint32_t code) const;

    /// Algebra product XY.
    Vec product(const Vec& x, const Vec& y) const { return product_(x, y); }
    /// Group product (1+X)(1+Y) = 1 + X + Y + XY.
    Vec multiply(const Vec& x, const Vec& y) const;
    /// Z with (1+X)(1+Z) = 1.
    Vec inverse(const Vec& x) const;

    /// The elements t v_k for every basis index k and unit t.
    std::vector<Vec> generators() const;

   private:
    EnumeratedGroup(FieldPtr field, std::size_t dim, std::uint64_t cap, Product product);

    FieldPtr field_;
    std::size_t dim_;
    std::uint64_t order_;
    Product product_;
};

/// Partition of all codes into orbits; orbits are numbered by their
/// smallest code, which is the representative.
struct CodePartition {
    std::vector<std::uint32_t> orbit_of;
    std::vector<std::uint32_t> reps;
    std::vector<std::uint64_t> sizes;
};

struct AxiomCheck {
    std::string name;
    bool passed = true;
    std::string witness;
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;
    bool all_passed() const;
};

/// |G| times the inner product (1/|G|) sum_x f(x) conj(g(x)).
CycInt inner_product(const std::vector<CycInt>& f, const std::vector<CycInt>& g);

/// Superclasses, co-orbits and orbit-sum supercharacters of an enumerated group.
class Oracle {
   public:
    explicit Oracle(EnumeratedGroup G);

    const EnumeratedGroup& group() const noexcept { return G_; }

    const CodePartition& superclasses() const noexcept { return classes_; }
    const CodePartition& coorbits() const noexcept { return coorbits_; }
    /// |lambda U| for each co-orbit.
    const std::vector<std::uint64_t>& right_sizes() const noexcept { return right_sizes_; }
    /// log_q |lambda U| for each co-orbit.
    std::size_t corank(std::size_t coorbit) const;

    std::uint32_t superclass_of(const Vec& phi) const { return classes_.orbit_of[G_.encode(phi)]; }
    std::uint32_t coorbit_of(const Vec& eta) const { return coorbits_.orbit_of[G_.encode(eta)]; }

    /// Values of every supercharacter on every superclass, computed on first use.
    const std::vector<std::vector<CycInt>>& table() const;
    /// Values of the supercharacter of eta on each superclass.
    std::vector<CycInt> supercharacter(const Vec& eta) const;
    /// Values of a supercharacter at every element, in code order.
    std::vector<CycInt> class_function(std::size_t coorbit) const;

    /// |G| times the inner product of two supercharacters, summed over superclasses.
    CycInt superclass_inner_product(std::size_t c, std::size_t d) const;

    /// Orbits of conjugation, computed on first use.
    const CodePartition& conjugacy_classes() const;

    /// Identity singleton, matching counts, constancy, unions of classes,
    /// Fourier completeness and the orbit-weighted regular identity.
    AxiomReport verify_axioms() const;

   private:
    struct SparseMap {
        std::vector<MoveTerm> terms;
    };

    SparseMap linear_map(const std::function<Vec(const Vec&)>& f) const;
    CodePartition partition(const std::vector<SparseMap>& maps) const;
    std::uint64_t orbit_size(const std::vector<SparseMap>& maps, std::uint32_t start,
                             std::vector<std::uint32_t>& stamp, std::uint32_t mark) const;
    CycInt scaled(std::size_t coorbit, const std::vector<std::int64_t>& counts) const;
    std::string describe(std::uint32_t code) const;

    EnumeratedGroup G_;
    std::size_t hi_len_, lo_len_;
    std::uint32_t lo_size_;
    std::vector<std::uint8_t> trace_hi_, trace_lo_;
    std::vector<SparseMap> conj_maps_;
    CodePartition classes_, coorbits_;
    std::vector<std::uint64_t> right_sizes_;
    std::vector<std::vector<std::uint32_t>> members_;
    mutable std::vector<std::vector<CycInt>> table_;
    mutable CodePartition conjugacy_;
};

}  // namespace supertab

#endif
