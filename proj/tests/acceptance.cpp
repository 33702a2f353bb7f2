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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
//
//     acceptance <path-to-supertab-cli> <specs-dir>

#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "support.hpp"
#include "supertab/algebra.hpp"
#include "supertab/error.hpp"
#include "supertab/formula.hpp"
#include "supertab/linalg.hpp"
#include "supertab/oracle.hpp"
#include "supertab/spec_io.hpp"
#include "supertab/table.hpp"

using namespace supertab;
namespace fs = std::filesystem;

namespace {

constexpr std::uint64_t big_oracle_cap = std::uint64_t{1} << 20;

/// Collects the first few failure messages of one criterion.
class Tally {
   public:
    void expect(bool ok, const std::string& what) {
        ++checks_;
        if (ok) return;
        if (failures_.size() < 5) failures_.push_back(what);
        ++failed_;
    }
    /// Same as expect, but builds the message only on failure.
    template <typename Describe>
    void expect_lazy(bool ok, Describe&& describe) {
        if (ok) {
            ++checks_;
            return;
        }
        expect(false, describe());
    }
    bool ok() const { return failed_ == 0 && checks_ > 0; }
    std::size_t checks() const { return checks_; }
    std::string summary() const {
        std::string out = std::to_string(checks_) + " checks";
        if (failed_) out += ", " + std::to_string(failed_) + " failed";
        if (checks_ == 0) out += ", nothing checked";
        for (const auto& f : failures_) out += "\n      " + f;
        return out;
    }

   private:
    std::size_t checks_ = 0, failed_ = 0;
    std::vector<std::string> failures_;
};

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Vec coords(std::initializer_list<std::uint32_t> values) {
    Vec v;
    for (auto x : values) v.push_back(Elem{x});
    return v;
}

std::string label(const std::string& name, std::uint32_t q) { return name + " q=" + std::to_string(q); }

void master_equivalence(Tally& t) {
    for (const auto& inst : corpus::all()) {
        for (const std::uint32_t q : {2u, 3u}) {
            PatternGroup G(inst.J, Field::create(q));
            const SuperTable table = build_table(G);
            const Oracle oracle(EnumeratedGroup::pattern(G, big_oracle_cap));
            const auto& values = oracle.table();
            t.expect(oracle.superclasses().reps.size() == table.classes.size() &&
                         oracle.coorbits().reps.size() == table.chars.size(),
                     label(inst.name, q) + ": partition counts differ");
            for (std::size_t r = 0; r < table.chars.size(); ++r) {
                const auto row = oracle.coorbit_of(table.chars[r].rep);
                for (std::size_t c = 0; c < table.classes.size(); ++c) {
                    const CycInt expected = values[row][oracle.superclass_of(table.classes[c].rep)];
                    t.expect_lazy(table.values[r][c].to_cyc(G.field().p(), q) == expected, [&] {
                        return label(inst.name, q) + ": eta=" + format_rep(table, table.chars[r].rep) +
                               " phi=" + format_rep(table, table.classes[c].rep);
                    });
                }
            }
        }
    }
}

void golden_table(Tally& t, const fs::path& specs) {
    const auto spec = parse_algebra_spec(read_file(specs / "sixteen.algebra"));
    const AlgebraGroup G(spec.algebra);
    const SuperTable table = build_table(G);
    t.expect(table.chars.size() == 7 && table.classes.size() == 7, "table is not 7x7");

    // Rows 1, x, lr, rxl, r, l, z; columns 1, z, lr, x, r, l, xr in the basis (x, l, r, z).
    const std::vector<Vec> chars = {coords({0, 0, 0, 0}), coords({1, 0, 0, 0}), coords({0, 1, 1, 0}),
                                    coords({1, 1, 1, 0}), coords({0, 0, 1, 0}), coords({0, 1, 0, 0}),
                                    coords({0, 0, 0, 1})};
    const std::vector<Vec> classes = {coords({0, 0, 0, 0}), coords({0, 0, 0, 1}), coords({0, 1, 1, 0}),
                                      coords({1, 0, 0, 0}), coords({0, 0, 1, 0}), coords({0, 1, 0, 0}),
                                      coords({1, 0, 1, 1})};
    const std::vector<std::vector<int>> printed = {
        {1, 1, 1, 1, 1, 1, 1},   {1, 1, 1, -1, 1, 1, -1},   {1, 1, 1, 1, -1, -1, -1}, {1, 1, 1, -1, -1, -1, 1},
        {2, 2, -2, 0, -2, 2, 0}, {2, 2, -2, 0, 2, -2, 0}, {4, -4, 0, 0, 0, 0, 0},
    };
    const std::vector<std::uint64_t> degrees = {1, 1, 1, 1, 2, 2, 4};

    auto find_row = [&](const Vec& eta) -> std::optional<std::size_t> {
        for (std::size_t r = 0; r < table.chars.size(); ++r) {
            for (const auto& m : orbit_members(G.field(), G.two_sided_comoves(), table.chars[r].rep, 64)) {
                if (m == eta) return r;
            }
        }
        return std::nullopt;
    };
    auto find_col = [&](const Vec& phi) -> std::optional<std::size_t> {
        for (std::size_t c = 0; c < table.classes.size(); ++c) {
            for (const auto& m : orbit_members(G.field(), G.two_sided_moves(), table.classes[c].rep, 64)) {
                if (m == phi) return c;
            }
        }
        return std::nullopt;
    };
    for (std::size_t i = 0; i < 7; ++i) {
        const auto r = find_row(chars[i]);
        t.expect(r.has_value(), "row " + std::to_string(i + 1) + " not found");
        if (!r) continue;
        t.expect(table.chars[*r].degree == degrees[i], "degree of row " + std::to_string(i + 1));
        for (std::size_t j = 0; j < 7; ++j) {
            const auto c = find_col(classes[j]);
            t.expect(c.has_value(), "column " + std::to_string(j + 1) + " not found");
            if (!c) continue;
            const auto v = table.values[*r][*c].as_integer(2, 2);
            t.expect(v && *v == printed[i][j],
                     "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") = " +
                         table.values[*r][*c].to_string());
        }
    }
}

void heisenberg(Tally& t) {
    for (const int n : {3, 4, 5}) {
        for (const std::uint32_t q : {2u, 3u}) {
            PatternGroup G(corpus::heisenberg(n), Field::create(q));
            const std::string name = label("heisenberg" + std::to_string(n), q);
            const SuperTable table = build_table(G);
            std::uint64_t linear = 0, top = 0;
            const std::uint64_t top_degree = helpers::qpow(q, static_cast<std::size_t>(n - 2));
            for (std::size_t r = 0; r < table.chars.size(); ++r) {
                const auto& eta = table.chars[r].rep;
                t.expect(is_irreducible(G, eta), name + ": reducible supercharacter " + format_rep(table, eta));
                linear += table.chars[r].degree == 1;
                top += table.chars[r].degree == top_degree;
                for (std::size_t c = 0; c < table.classes.size(); ++c) {
                    t.expect(value_heisenberg(G, eta, table.classes[c].rep) == table.values[r][c],
                             name + ": closed form differs at eta=" + format_rep(table, eta));
                }
            }
            t.expect(linear == helpers::qpow(q, static_cast<std::size_t>(2 * n - 4)), name + ": linear count");
            t.expect(top == q - 1, name + ": top-degree count");
            t.expect(table.chars.size() == linear + top, name + ": character count");
            const Oracle oracle = helpers::pattern_oracle(G, big_oracle_cap);
            t.expect(oracle.conjugacy_classes().reps.size() == oracle.superclasses().reps.size(),
                     name + ": superclasses are not conjugacy classes");
        }
    }
}

void full_u(Tally& t) {
    for (const std::uint32_t q : {2u, 3u}) {
        PatternGroup G(ClosedSet::full(4), Field::create(q));
        const auto classes = G.all_orbit_reps();
        for (const auto& eta : G.all_coorbit_reps()) {
            t.expect(is_monomial(G.J(), eta.rep), "non-monomial co-orbit representative");
            std::size_t expected = 0;
            for (const auto& [i, k] : support(G.J(), eta.rep)) expected += static_cast<std::size_t>(k - i - 1);
            t.expect(rank(G.field(), G.right_coaction_matrix(eta.rep)) == expected, label("full4", q) + ": corank");
            t.expect(G.corank(eta.rep) == expected, label("full4", q) + ": corank");
            for (const auto& phi : classes) {
                t.expect(is_monomial(G.J(), phi.rep), "non-monomial orbit representative");
                t.expect(value_un(G, eta.rep, phi.rep) == value(G, eta.rep, phi.rep), label("full4", q) + ": value");
            }
        }
    }
}

void cautionary(Tally& t) {
    PatternGroup C(corpus::caution_orbits(), Field::create(3));
    const auto x1 = make_functional(C.J(), {{1, 3, Elem{1}}, {1, 4, Elem{1}}, {2, 3, Elem{1}}, {2, 4, Elem{1}}});
    const auto x2 = make_functional(C.J(), {{1, 3, Elem{2}}, {1, 4, Elem{1}}, {2, 3, Elem{1}}, {2, 4, Elem{1}}});
    const auto s1 = C.orbit(x1).size, s2 = C.orbit(x2).size;
    t.expect(s1 == 3, "first orbit has size " + std::to_string(s1));
    t.expect(s2 == 9, "second orbit has size " + std::to_string(s2));
    const Oracle oracle = helpers::pattern_oracle(C, big_oracle_cap);
    t.expect(oracle.superclasses().sizes[oracle.superclass_of(x1)] == 3, "oracle disagrees on the first orbit");
    t.expect(oracle.superclasses().sizes[oracle.superclass_of(x2)] == 9, "oracle disagrees on the second orbit");
}

void irreducibility(Tally& t) {
    auto f3 = Field::create(3);
    PatternGroup G(corpus::determinant_example(), f3);
    const Oracle oracle = helpers::pattern_oracle(G, big_oracle_cap);
    const auto order = static_cast<std::int64_t>(oracle.group().order());
    int count = 0;
    for (std::uint32_t a = 1; a < 3; ++a)
        for (std::uint32_t b = 1; b < 3; ++b)
            for (std::uint32_t c = 1; c < 3; ++c)
                for (std::uint32_t d = 1; d < 3; ++d) {
                    const auto eta = make_functional(
                        G.J(), {{1, 4, Elem{a}}, {1, 5, Elem{b}}, {2, 4, Elem{c}}, {2, 5, Elem{d}}, {3, 6, Elem{1}}});
                    const bool singular = f3->sub(f3->mul(Elem{d}, Elem{a}), f3->mul(Elem{b}, Elem{c})).is_zero();
                    const bool irreducible = is_irreducible(G, eta);
                    const std::string name = "eta14,15,24,25=" + std::to_string(a) + std::to_string(b) +
                                             std::to_string(c) + std::to_string(d);
                    t.expect(irreducible == singular, name + ": determinant condition");
                    const auto row = oracle.coorbit_of(eta);
                    const bool norm_one = oracle.superclass_inner_product(row, row) == CycInt::integer(3, order);
                    t.expect(norm_one == irreducible, name + ": oracle norm");
                    ++count;
                }
    t.expect(count == 16, "assignment count");

    PatternGroup C(corpus::class_example(), Field::create(2));
    const auto phi = make_functional(C.J(), {{1, 2, Elem{1}}, {2, 4, Elem{1}}, {3, 5, Elem{1}}});
    t.expect(!superclass_is_class_sufficient(C, phi), "sufficient condition unexpectedly holds");
    const Oracle small = helpers::pattern_oracle(C);
    const auto& conj = small.conjugacy_classes();
    t.expect(conj.sizes[conj.orbit_of[small.group().encode(phi)]] == small.superclasses().sizes[small.superclass_of(phi)],
             "superclass of x_phi is not a conjugacy class");
}

void orthogonality(Tally& t) {
    for (const auto& inst : corpus::all()) {
        for (const std::uint32_t q : {2u, 3u}) {
            PatternGroup G(inst.J, Field::create(q));
            if (!helpers::oracle_scale(G)) continue;
            const Oracle oracle = helpers::pattern_oracle(G);
            const auto order = static_cast<std::int64_t>(oracle.group().order());
            const std::size_t count = oracle.coorbits().reps.size();
            for (std::size_t c = 0; c < count; ++c) {
                const Vec eta = oracle.group().decode(oracle.coorbits().reps[c]);
                const auto size = static_cast<std::int64_t>(oracle.coorbits().sizes[c]);
                const auto norm = static_cast<std::int64_t>(helpers::qpow(q, 2 * G.corank(eta)));
                for (std::size_t d = 0; d < count; ++d) {
                    const CycInt ip = oracle.superclass_inner_product(c, d);
                    t.expect(ip.scale(size) == CycInt::integer(G.field().p(), c == d ? order * norm : 0),
                             label(inst.name, q) + ": pair " + std::to_string(c) + "," + std::to_string(d));
                }
            }
        }
    }
}

void value_shape(Tally& t, const fs::path& specs) {
    auto check = [&](const SuperTable& table, const std::string& name) {
        const Field& f = *table.field;
        for (const auto& row : table.values) {
            for (const auto& v : row) {
                if (f.p() == 2) t.expect_lazy(v.as_integer(2, f.q()).has_value(), [&] { return name + ": non-integer value"; });
                const CycInt c = v.to_cyc(f.p(), f.q());
                t.expect_lazy(v.is_zero() == c.is_zero(), [&] { return name + ": zero mismatch"; });
                if (!v.is_zero()) t.expect_lazy(c.as_char_value(f.q()) == v, [&] { return name + ": value is not q^m z^k"; });
            }
        }
    };
    for (const auto& inst : corpus::all()) {
        for (const std::uint32_t q : {2u, 3u, 4u}) {
            PatternGroup G(inst.J, Field::create(q));
            if (!space_size(q, G.dim()) || *space_size(q, G.dim()) > default_table_cap) continue;
            check(build_table(G), label(inst.name, q));
            if (!helpers::oracle_scale(G)) continue;
            // The orbit sums themselves must already have the shape q^m z^k.
            const Oracle oracle = helpers::pattern_oracle(G);
            for (const auto& row : oracle.table()) {
                for (const auto& c : row) {
                    t.expect_lazy(c.is_zero() || c.as_char_value(q).has_value(),
                                  [&] { return label(inst.name, q) + ": oracle value"; });
                    if (G.field().p() == 2) {
                        t.expect_lazy(c.as_integer().has_value(), [&] { return label(inst.name, q) + ": oracle integer"; });
                    }
                }
            }
        }
    }
    for (const auto& entry : fs::directory_iterator(specs)) {
        if (entry.path().extension() != ".algebra") continue;
        const auto spec = parse_algebra_spec(read_file(entry.path()));
        check(build_table(AlgebraGroup(spec.algebra)), entry.path().filename().string());
    }
}

void structure(Tally& t) {
    for (const auto& inst : corpus::all()) {
        for (const std::uint32_t q : {2u, 3u}) {
            PatternGroup G(inst.J, Field::create(q));
            const std::string name = label(inst.name, q);
            const Field& f = G.field();
            const auto classes = G.all_orbit_reps(), chars = G.all_coorbit_reps();
            t.expect(classes.size() == chars.size(), name + ": orbit and co-orbit counts differ");
            std::uint64_t total = 0, cototal = 0;
            for (const auto& c : classes) total += c.size;
            for (const auto& c : chars) cototal += c.size;
            const std::uint64_t size = *space_size(q, G.dim());
            t.expect(total == size, name + ": superclass sizes do not sum to q^|J|");
            t.expect(cototal == size, name + ": co-orbit sizes do not sum to q^|J|");
            const std::uint64_t cap = big_oracle_cap;
            for (const auto& c : classes) {
                t.expect(orbit_members(f, G.left_moves(), c.rep, cap).size() ==
                             helpers::qpow(q, rank(f, G.left_action_matrix(c.rep))),
                         name + ": left orbit size");
                t.expect(orbit_members(f, G.right_moves(), c.rep, cap).size() ==
                             helpers::qpow(q, rank(f, G.right_action_matrix(c.rep))),
                         name + ": right orbit size");
            }
            for (const auto& c : chars) {
                const std::size_t left = rank(f, G.left_coaction_matrix(c.rep));
                const std::size_t right = rank(f, G.right_coaction_matrix(c.rep));
                t.expect(left == right, name + ": rank(M_L) != rank(M_R)");
                t.expect(orbit_members(f, G.left_comoves(), c.rep, cap).size() == helpers::qpow(q, left),
                         name + ": left co-orbit size");
                t.expect(orbit_members(f, G.right_comoves(), c.rep, cap).size() == helpers::qpow(q, right),
                         name + ": right co-orbit size");
            }
        }
    }
}

void determinism(Tally& t, const std::string& cli, const fs::path& specs) {
    const fs::path scratch = fs::temp_directory_path() / ("supertab_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(scratch);
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(specs)) files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& spec : files) {
        for (const std::string format : {"json", "csv", "pretty"}) {
            std::vector<std::string> outputs;
            for (const int threads : {1, 4}) {
                const fs::path out = scratch / ("out" + std::to_string(threads));
                const std::string cmd = "\"" + cli + "\" table \"" + spec.string() + "\" --format " + format +
                                        " --threads " + std::to_string(threads) + " --out \"" + out.string() + "\"";
                const int status = std::system(cmd.c_str());
                t.expect(status == 0, spec.filename().string() + ": cli exited with " + std::to_string(status));
                outputs.push_back(read_file(out));
            }
            t.expect(!outputs[0].empty() && outputs[0] == outputs[1],
                     spec.filename().string() + " " + format + ": output differs across thread counts");
        }
    }
    fs::remove_all(scratch);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 3) {
        std::cerr << "usage: acceptance <supertab-cli> <specs-dir>\n";
        return 2;
    }
    const std::string cli = argv[1];
    const fs::path specs = argv[2];

    struct Criterion {
        int number;
        std::string name;
        std::function<void(Tally&)> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "formula equals oracle orbit sums on the corpus, q in {2,3}", master_equivalence},
        {2, "16-element golden table", [&](Tally& t) { golden_table(t, specs); }},
        {3, "Heisenberg closed form, irreducibility and counts", heisenberg},
        {4, "U_4 monomial formula and corank", full_u},
        {5, "cautionary orbit sizes 3 and 9", cautionary},
        {6, "irreducibility criteria", irreducibility},
        {7, "orthogonality with norm q^(2 corank)/|O|", orthogonality},
        {8, "values are q^m z^k, integers when p=2", [&](Tally& t) { value_shape(t, specs); }},
        {9, "orbit counts, sizes and action ranks", structure},
        {10, "table output independent of thread count", [&](Tally& t) { determinism(t, cli, specs); }},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        Tally tally;
        const auto start = std::chrono::steady_clock::now();
        std::string error;
        try {
            c.run(tally);
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool ok = error.empty() && tally.ok();
        failed += !ok;
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.1fs", seconds);
        std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << c.number << ": " << c.name << " (" << tally.summary()
                  << ", " << timing << ")";
        if (!error.empty()) std::cout << "\n      exception: " << error;
        std::cout << std::endl;
    }
    std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << '\n';
    return failed ? 1 : 0;
}
