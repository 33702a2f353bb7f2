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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "supertab/algebra.hpp"
#include "supertab/core.hpp"
#include "supertab/error.hpp"
#include "supertab/formula.hpp"
#include "supertab/oracle.hpp"
#include "supertab/spec_io.hpp"
#include "supertab/table.hpp"

using namespace supertab;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_invalid = 1;
constexpr int exit_cap = 2;
constexpr int exit_mismatch = 3;

struct Options {
    std::string path;
    std::optional<std::uint32_t> q;
    unsigned threads = 1;
    std::uint64_t cap = default_table_cap;
    std::uint64_t oracle_cap = default_oracle_cap;
    std::string format = "pretty";
    std::string out;
    std::string eta;
    std::string phi;
    std::vector<std::string> elements;
    bool dual = false;
};

/// A parsed spec file: either a pattern group or an algebra group.
using Loaded = std::variant<PatternGroup, AlgebraGroup>;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SpecMismatch("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Loaded load(const Options& o, std::string* canonical = nullptr) {
    const std::string text = read_file(o.path);
    if (detect_spec_kind(text) == SpecKind::poset) {
        auto spec = parse_poset_spec(text, o.q);
        if (canonical) *canonical = emit_poset_spec(spec.J, *spec.field);
        return PatternGroup(spec.J, spec.field);
    }
    auto spec = parse_algebra_spec(text, o.q);
    if (canonical) *canonical = emit_algebra_spec(spec);
    return AlgebraGroup(spec.algebra);
}

Vec parse_vec(const Loaded& g, const std::string& text) {
    if (const auto* P = std::get_if<PatternGroup>(&g)) return parse_functional(P->J(), P->field(), text);
    const auto& A = std::get<AlgebraGroup>(g);
    return parse_coordinates(A.dim(), A.field(), text);
}

std::string show_vec(const Loaded& g, const Vec& v) {
    std::string s;
    if (const auto* P = std::get_if<PatternGroup>(&g)) {
        s = format_functional(P->J(), P->field(), v);
    } else {
        s = format_coordinates(std::get<AlgebraGroup>(g).field(), v);
    }
    return s.empty() ? "0" : s;
}

const Field& field_of(const Loaded& g) {
    return std::visit([](const auto& G) -> const Field& { return G.field(); }, g);
}

std::string show_value(const Field& f, const CharValue& v) {
    std::string s = v.to_string();
    if (const auto n = v.as_integer(f.p(), f.q())) s += " (" + std::to_string(*n) + ")";
    return s;
}

void write_output(const Options& o, const std::string& data) {
    if (o.out.empty()) {
        std::cout << data;
        return;
    }
    std::ofstream out(o.out, std::ios::binary);
    if (!out) throw SpecMismatch("cannot write '" + o.out + "'");
    out << data;
}

int cmd_validate(const Options& o) {
    std::string canonical;
    load(o, &canonical);
    std::cout << canonical;
    return exit_ok;
}

int cmd_table(const Options& o) {
    const auto g = load(o);
    const TableOptions topts{o.cap, o.threads};
    const SuperTable t = std::visit([&](const auto& G) { return build_table(G, topts); }, g);
    if (o.format == "json") {
        write_output(o, to_json(t));
    } else if (o.format == "csv") {
        write_output(o, to_csv(t));
    } else {
        write_output(o, to_pretty(t));
    }
    return exit_ok;
}

int cmd_value(const Options& o) {
    const auto g = load(o);
    const Vec eta = parse_vec(g, o.eta);
    const Vec phi = parse_vec(g, o.phi);
    CharValue v;
    if (const auto* P = std::get_if<PatternGroup>(&g)) {
        v = value(*P, eta, phi);
    } else {
        v = alg_value(std::get<AlgebraGroup>(g), eta, phi, o.cap);
    }
    std::cout << show_value(field_of(g), v) << '\n';
    return exit_ok;
}

int cmd_irreducible(const Options& o) {
    const auto g = load(o);
    const Vec eta = parse_vec(g, o.eta);
    std::size_t corank = 0;
    bool irreducible = false;
    if (const auto* P = std::get_if<PatternGroup>(&g)) {
        corank = P->corank(eta);
        irreducible = is_irreducible(*P, eta);
    } else {
        const auto& A = std::get<AlgebraGroup>(g);
        corank = alg_corank(A, eta, o.cap);
        const auto size = orbit_members(A.field(), A.two_sided_comoves(), eta, o.cap).size();
        const std::uint64_t degree = checked_pow(A.field().q(), static_cast<std::uint32_t>(corank));
        irreducible = size == degree * degree;
    }
    std::cout << "irreducible: " << (irreducible ? "true" : "false") << '\n'
              << "corank: " << corank << '\n'
              << "degree: " << checked_pow(field_of(g).q(), static_cast<std::uint32_t>(corank)) << '\n';
    return exit_ok;
}

int cmd_orbits(const Options& o) {
    const auto g = load(o);
    const Field& f = field_of(g);
    if (!o.elements.empty()) {
        for (const auto& text : o.elements) {
            const Vec v = parse_vec(g, text);
            std::uint64_t size = 0;
            if (const auto* P = std::get_if<PatternGroup>(&g)) {
                size = o.dual ? P->coorbit(v, o.cap, false).size : P->orbit(v, o.cap, false).size;
            } else {
                const auto& A = std::get<AlgebraGroup>(g);
                size = orbit_members(f, o.dual ? A.two_sided_comoves() : A.two_sided_moves(), v, o.cap).size();
            }
            std::cout << show_vec(g, v) << "\tsize " << size << '\n';
        }
        return exit_ok;
    }
    const auto reps = std::visit(
        [&](const auto& G) { return o.dual ? G.all_coorbit_reps(o.cap) : G.all_orbit_reps(o.cap); }, g);
    std::cout << (o.dual ? "co-orbits: " : "superclasses: ") << reps.size() << '\n';
    for (const auto& r : reps) std::cout << show_vec(g, r.rep) << "\tsize " << r.size << '\n';
    return exit_ok;
}

int cmd_check(const Options& o) {
    const auto g = load(o);
    const Field& f = field_of(g);
    const TableOptions topts{o.cap, o.threads};
    const SuperTable t = std::visit([&](const auto& G) { return build_table(G, topts); }, g);
    Oracle oracle(std::holds_alternative<PatternGroup>(g)
                      ? EnumeratedGroup::pattern(std::get<PatternGroup>(g), o.oracle_cap)
                      : EnumeratedGroup::algebra(std::get<AlgebraGroup>(g), o.oracle_cap));

    bool ok = true;
    auto fail = [&](const std::string& what) {
        if (ok) std::cout << "first mismatch: " << what << '\n';
        ok = false;
    };
    if (oracle.superclasses().reps.size() != t.classes.size() || oracle.coorbits().reps.size() != t.chars.size()) {
        fail("partition counts differ: formula " + std::to_string(t.chars.size()) + "x" +
             std::to_string(t.classes.size()) + ", oracle " + std::to_string(oracle.coorbits().reps.size()) + "x" +
             std::to_string(oracle.superclasses().reps.size()));
    }
    const auto& values = oracle.table();
    for (std::size_t r = 0; ok && r < t.chars.size(); ++r) {
        const auto row = oracle.coorbit_of(t.chars[r].rep);
        for (std::size_t c = 0; c < t.classes.size(); ++c) {
            const CycInt expected = values[row][oracle.superclass_of(t.classes[c].rep)];
            if (t.values[r][c].to_cyc(f.p(), f.q()) == expected) continue;
            fail("eta=" + show_vec(g, t.chars[r].rep) + " phi=" + show_vec(g, t.classes[c].rep) +
                 " formula=" + t.values[r][c].to_string() + " oracle=" + expected.to_string());
            break;
        }
    }
    std::size_t pairs = t.chars.size() * t.classes.size();
    std::cout << "values: " << (ok ? "pass" : "FAIL") << " (" << pairs << " pairs)\n";

    for (const auto& check : oracle.verify_axioms().checks) {
        std::cout << check.name << ": " << (check.passed ? "pass" : "FAIL") << '\n';
        if (!check.passed) {
            fail(check.name + ": " + check.witness);
        }
    }
    return ok ? exit_ok : exit_mismatch;
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"Supercharacter tables of pattern groups and algebra groups over finite fields"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--threads", o.threads, "Worker threads (0 = hardware concurrency)")->capture_default_str();
    app.add_option("--q", o.q, "Override the field size of the spec");
    app.add_option("--cap", o.cap, "Largest enumeration size for orbit sweeps")->capture_default_str();

    auto add_path = [&](CLI::App* sub) { sub->add_option("spec", o.path, "Poset or algebra spec file")->required(); };

    auto* validate = app.add_subcommand("validate", "Parse and validate a spec, printing its canonical form");
    add_path(validate);

    auto* table = app.add_subcommand("table", "Emit the supercharacter table");
    add_path(table);
    table->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "pretty"}))
        ->capture_default_str();
    table->add_option("--out", o.out, "Write to a file instead of stdout");

    auto* val = app.add_subcommand("value", "Evaluate one supercharacter at one superclass");
    add_path(val);
    val->add_option("--eta", o.eta, "Character label, e.g. \"1,3=1;2,3=2\"")->required();
    val->add_option("--phi", o.phi, "Superclass label")->required();

    auto* irr = app.add_subcommand("irreducible", "Decide whether a supercharacter is irreducible");
    add_path(irr);
    irr->add_option("--eta", o.eta, "Character label")->required();

    auto* orbits = app.add_subcommand("orbits", "List superclasses, or report orbit sizes of given elements");
    add_path(orbits);
    orbits->add_option("--element", o.elements, "Element whose two-sided orbit size to report (repeatable)");
    orbits->add_flag("--dual", o.dual, "Use the co-adjoint action on functionals");

    auto* check = app.add_subcommand("check", "Compare the closed formula with brute-force enumeration");
    add_path(check);
    check->add_option("--oracle-cap", o.oracle_cap, "Largest group the oracle enumerates")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_invalid;
    }

    try {
        if (*validate) return cmd_validate(o);
        if (*table) return cmd_table(o);
        if (*val) return cmd_value(o);
        if (*irr) return cmd_irreducible(o);
        if (*orbits) return cmd_orbits(o);
        return cmd_check(o);
    } catch (const SizeCapExceeded& e) {
        std::cerr << "error: " << e.what() << " (cap " << e.cap() << ", required " << e.required() << ")\n";
        return exit_cap;
    } catch (const InternalInvariantViolation& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_mismatch;
    } catch (const NotClosed& e) {
        std::cerr << "error: pairs are not closed; missing (i,k) for witnesses (i,j,k):";
        for (const auto& [i, j, k] : e.witnesses()) std::cerr << " (" << i << ',' << j << ',' << k << ')';
        std::cerr << '\n';
        return exit_invalid;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_invalid;
    }
}
