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

#ifndef SUPERTAB_TABLE_HPP
#define SUPERTAB_TABLE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "supertab/algebra.hpp"
#include "supertab/core.hpp"
#include "supertab/cyclotomic.hpp"

namespace supertab {

enum class TableKind { pattern, algebra };

struct TableClass {
    Vec rep;
    std::uint64_t size = 0;
};

struct TableChar {
    Vec rep;
    std::size_t corank = 0;
    std::uint64_t degree = 0;
    bool irreducible = false;
};

/// Supercharacter table. Rows are co-orbit representatives, columns are
/// superclass representatives; column 0 is the identity and row 0 the
/// trivial character.
struct SuperTable {
    TableKind kind = TableKind::pattern;
    FieldPtr field;
    /// Pattern tables only.
    std::optional<ClosedSet> J;
    /// Algebra tables only.
    std::size_t d = 0;
    std::vector<StructureConstant> constants;

    std::vector<TableClass> classes;
    std::vector<TableChar> chars;
    std::vector<std::vector<CharValue>> values;

    std::size_t dim() const { return J ? J->size() : d; }
};

bool operator==(const SuperTable& a, const SuperTable& b);

struct TableOptions {
    std::uint64_t cap = default_table_cap;
    /// Worker threads for the value matrix; 0 picks the hardware count.
    unsigned threads = 1;
};

SuperTable build_table(const PatternGroup& G, const TableOptions& options = {});
SuperTable build_table(const AlgebraGroup& G, const TableOptions& options = {});

std::string to_json(const SuperTable& table);
/// Inverse of to_json; throws SpecMismatch on malformed documents.
SuperTable table_from_json(std::string_view text);
std::string to_csv(const SuperTable& table);
std::string to_pretty(const SuperTable& table);

/// Text form of a representative: "i,j=v;..." for patterns, "k=v;..." for algebras, "0" when zero.
std::string format_rep(const SuperTable& table, const Vec& rep);

}  // namespace supertab

#endif
