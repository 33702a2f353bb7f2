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

#include "supertab/spec_io.hpp"

#include <charconv>
#include <sstream>

#include "supertab/error.hpp"

namespace supertab {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::string_view strip(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

}  // namespace

long long parse_int(std::string_view text, int line) {
    text = strip(text);
    long long v = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (!text.empty() && text.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (text.empty() || ec != std::errc() || ptr != last) {
        throw SyntaxError(line, "expected an integer, got '" + std::string(text) + "'");
    }
    return v;
}

std::vector<SpecLine> tokenize_spec(std::string_view text) {
    std::vector<SpecLine> out;
    int number = 0;
    for (std::string_view raw : split(text, '\n')) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        std::istringstream in{std::string(raw)};
        SpecLine line{number, {}};
        std::string tok;
        while (in >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) out.push_back(std::move(line));
    }
    return out;
}

SpecKind detect_spec_kind(std::string_view text) {
    for (const auto& line : tokenize_spec(text)) {
        if (line.tokens[0] == "n") return SpecKind::poset;
        if (line.tokens[0] == "d") return SpecKind::algebra;
        if (line.tokens[0] != "q" && line.tokens[0] != "modulus") {
            throw SyntaxError(line.number, "expected header line 'n <int>' or 'd <int>'");
        }
    }
    throw SyntaxError(0, "empty spec");
}

FieldPtr make_field(std::uint32_t q, const std::vector<std::uint32_t>& modulus) {
    return modulus.empty() ? Field::create(q) : Field::create(q, modulus);
}

PosetSpec parse_poset_spec(std::string_view text, std::optional<std::uint32_t> q_override) {
    std::optional<int> n;
    std::optional<std::uint32_t> q;
    std::vector<std::uint32_t> modulus;
    enum { header, pairs, covers } mode = header;
    std::vector<Pair> entries;
    int last_line = 0;
    for (const auto& line : tokenize_spec(text)) {
        last_line = line.number;
        const auto& t = line.tokens;
        if (mode == header) {
            if (t[0] == "n" || t[0] == "q") {
                if (t.size() != 2) throw SyntaxError(line.number, "'" + t[0] + "' takes one integer");
                const long long v = parse_int(t[1], line.number);
                if (t[0] == "n") {
                    if (n) throw SyntaxError(line.number, "duplicate 'n'");
                    if (v < 0 || v > 64) throw SyntaxError(line.number, "n must be in [0,64]");
                    n = static_cast<int>(v);
                } else {
                    if (q) throw SyntaxError(line.number, "duplicate 'q'");
                    if (v < 2 || v > static_cast<long long>(Field::max_order)) throw BadField("q out of range");
                    q = static_cast<std::uint32_t>(v);
                }
            } else if (t[0] == "modulus") {
                if (t.size() < 3) throw SyntaxError(line.number, "modulus needs at least two coefficients");
                for (std::size_t k = 1; k < t.size(); ++k) {
                    const long long c = parse_int(t[k], line.number);
                    if (c < 0) throw SyntaxError(line.number, "modulus coefficients must be nonnegative");
                    modulus.push_back(static_cast<std::uint32_t>(c));
                }
            } else if (t[0] == "pairs" || t[0] == "covers") {
                if (t.size() != 1) throw SyntaxError(line.number, "mode line takes no arguments");
                if (!n) throw SyntaxError(line.number, "missing 'n' header");
                if (!q) throw SyntaxError(line.number, "missing 'q' header");
                mode = t[0] == "pairs" ? pairs : covers;
            } else {
                throw SyntaxError(line.number, "unknown header keyword '" + t[0] + "'");
            }
            continue;
        }
        if (t.size() != 2) throw SyntaxError(line.number, "expected a pair 'i j'");
        const long long i = parse_int(t[0], line.number), j = parse_int(t[1], line.number);
        if (i < 1 || j > *n || i >= j) throw PairOutOfRange(static_cast<int>(i), static_cast<int>(j), *n);
        entries.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
    if (mode == header) throw SyntaxError(last_line + 1, "missing mode line 'pairs' or 'covers'");
    FieldPtr field = q_override ? Field::create(*q_override) : make_field(*q, modulus);
    ClosedSet J = mode == pairs ? ClosedSet::validate_closed(*n, entries) : ClosedSet::close_covers(*n, entries);
    return {std::move(J), std::move(field)};
}

namespace {

void emit_field_header(std::ostream& out, const Field& field) {
    out << "q " << field.q() << '\n';
    if (field.r() > 1) {
        out << "modulus";
        for (auto c : field.modulus()) out << ' ' << c;
        out << '\n';
    }
}

}  // namespace

std::string emit_poset_spec(const ClosedSet& J, const Field& field) {
    std::ostringstream out;
    out << "n " << J.n() << '\n';
    emit_field_header(out, field);
    out << "pairs\n";
    for (const auto& [i, j] : J.sorted_pairs()) out << i << ' ' << j << '\n';
    return out.str();
}

Elem parse_element(const Field& field, std::string_view text) {
    text = strip(text);
    if (text.find(':') == std::string_view::npos) return field.from_int(parse_int(text, 0));
    std::vector<std::uint32_t> coeffs;
    for (auto part : split(text, ':')) {
        const long long c = parse_int(part, 0);
        coeffs.push_back(static_cast<std::uint32_t>(((c % field.p()) + field.p()) % field.p()));
    }
    return field.from_coefficients(coeffs);
}

std::string format_element(const Field& field, Elem e) {
    if (field.r() == 1) return std::to_string(e.value);
    std::string out;
    for (auto c : field.coefficients(e)) {
        if (!out.empty()) out += ':';
        out += std::to_string(c);
    }
    return out;
}

Functional parse_functional(const ClosedSet& J, const Field& field, std::string_view text) {
    Functional phi = zero_functional(J);
    text = strip(text);
    if (text.empty() || text == "0") return phi;
    for (auto item : split(text, ';')) {
        item = strip(item);
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string_view::npos) throw SyntaxError(0, "functional item '" + std::string(item) + "' lacks '='");
        const auto key = split(item.substr(0, eq), ',');
        if (key.size() != 2) throw SyntaxError(0, "functional key must be 'i,j'");
        const long long i = parse_int(key[0], 0), j = parse_int(key[1], 0);
        const int idx = J.index(static_cast<int>(i), static_cast<int>(j));
        if (idx < 0) throw PairOutOfRange(static_cast<int>(i), static_cast<int>(j), J.n());
        phi[static_cast<std::size_t>(idx)] = parse_element(field, item.substr(eq + 1));
    }
    return phi;
}

std::string format_functional(const ClosedSet& J, const Field& field, const Functional& phi) {
    std::string out;
    for (const auto& [i, j] : J.sorted_pairs()) {
        const Elem v = value_at(J, phi, i, j);
        if (v.is_zero()) continue;
        if (!out.empty()) out += ';';
        out += std::to_string(i) + ',' + std::to_string(j) + '=' + format_element(field, v);
    }
    return out;
}

Vec parse_coordinates(std::size_t d, const Field& field, std::string_view text) {
    Vec v(d);
    text = strip(text);
    if (text.empty() || text == "0") return v;
    for (auto item : split(text, ';')) {
        item = strip(item);
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string_view::npos) throw SyntaxError(0, "coordinate item '" + std::string(item) + "' lacks '='");
        const long long k = parse_int(item.substr(0, eq), 0);
        if (k < 1 || static_cast<std::size_t>(k) > d) throw SyntaxError(0, "coordinate index out of range");
        v[static_cast<std::size_t>(k - 1)] = parse_element(field, item.substr(eq + 1));
    }
    return v;
}

std::string format_coordinates(const Field& field, const Vec& v) {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero()) continue;
        if (!out.empty()) out += ';';
        out += std::to_string(k + 1) + '=' + format_element(field, v[k]);
    }
    return out;
}

}  // namespace supertab
