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

#ifndef SUPERTAB_SPEC_IO_HPP
#define SUPERTAB_SPEC_IO_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "supertab/gf.hpp"
#include "supertab/poset.hpp"

namespace supertab {

/// A tokenised spec line with its 1-based line number.
struct SpecLine {
    int number;
    std::vector<std::string> tokens;
};

/// Splits text into non-empty lines, dropping everything after '#'.
std::vector<SpecLine> tokenize_spec(std::string_view text);

enum class SpecKind { poset, algebra };
/// Decided by the first header keyword: "n" for posets, "d" for algebras.
SpecKind detect_spec_kind(std::string_view text);

struct PosetSpec {
    ClosedSet J;
    FieldPtr field;
};

/// Parses the poset spec format:
///
///     # comment
///     n 5
///     q 9
///     modulus 1 0 1      (optional, constant term first)
///     covers             (or "pairs")
///     1 2
///     ...
///
/// `q_override` replaces the header's q and drops its modulus.
PosetSpec parse_poset_spec(std::string_view text, std::optional<std::uint32_t> q_override = std::nullopt);
/// Canonical text: header, then "pairs" in lexicographic order.
std::string emit_poset_spec(const ClosedSet& J, const Field& field);

/// Field element literal: an integer, or "c0:c1:..." for extension fields.
Elem parse_element(const Field& field, std::string_view text);
std::string format_element(const Field& field, Elem e);

/// "i,j=v;i,j=v" functional syntax; an empty string is the zero functional.
Functional parse_functional(const ClosedSet& J, const Field& field, std::string_view text);
std::string format_functional(const ClosedSet& J, const Field& field, const Functional& phi);

/// "k=v;k=v" syntax for coordinate vectors of length d (1-based k).
Vec parse_coordinates(std::size_t d, const Field& field, std::string_view text);
std::string format_coordinates(const Field& field, const Vec& v);

/// Field from header values, shared by both spec formats.
FieldPtr make_field(std::uint32_t q, const std::vector<std::uint32_t>& modulus);

/// Strict integer parse; throws SyntaxError on failure.
long long parse_int(std::string_view text, int line);

}  // namespace supertab

#endif
