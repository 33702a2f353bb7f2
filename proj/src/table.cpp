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

#include "supertab/table.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "supertab/error.hpp"
#include "supertab/formula.hpp"
#include "supertab/spec_io.hpp"

namespace supertab {

namespace {

using json = nlohmann::ordered_json;

bool same_constants(const std::vector<StructureConstant>& a, const std::vector<StructureConstant>& b) {
    return std::equal(a.begin(), a.end(), b.begin(), b.end(), [](const StructureConstant& x, const StructureConstant& y) {
        return x.i == y.i && x.j == y.j && x.k == y.k && x.value == y.value;
    });
}

// Runs row(r) for every r in [0, rows) on a pool; each row writes only its own slot.
void parallel_rows(std::size_t rows, unsigned threads, const std::function<void(std::size_t)>& row) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(rows, 1)));
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&] {
        for (std::size_t r = next++; r < rows; r = next++) {
            try {
                row(r);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                next = rows;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

std::vector<TableClass> to_classes(const std::vector<OrbitSummary>& orbits) {
    std::vector<TableClass> out;
    for (const auto& o : orbits) out.push_back({o.rep, o.size});
    return out;
}

json element_json(const Field& f, Elem e) {
    if (f.r() == 1) return e.value;
    return format_element(f, e);
}

Elem element_from_json(const Field& f, const json& j) {
    if (j.is_number_unsigned()) {
        const auto v = j.get<std::uint64_t>();
        if (v >= f.p() && f.r() > 1) throw SpecMismatch("integer literal outside the prime field");
        if (v >= f.q()) throw SpecMismatch("field element out of range");
        return Elem{static_cast<std::uint32_t>(v)};
    }
    if (j.is_string()) return parse_element(f, j.get<std::string>());
    throw SpecMismatch("field element must be an integer or a string");
}

json rep_json(const SuperTable& t, const Vec& rep) {
    json out = json::object();
    const Field& f = *t.field;
    if (t.J) {
        for (const auto& [i, j] : t.J->sorted_pairs()) {
            const Elem e = rep[static_cast<std::size_t>(t.J->index(i, j))];
            if (!e.is_zero()) out[std::to_string(i) + "," + std::to_string(j)] = element_json(f, e);
        }
    } else {
        for (std::size_t k = 0; k < rep.size(); ++k) {
            if (!rep[k].is_zero()) out[std::to_string(k + 1)] = element_json(f, rep[k]);
        }
    }
    return out;
}

Vec rep_from_json(const SuperTable& t, const json& j) {
    if (!j.is_object()) throw SpecMismatch("representative must be an object");
    Vec out(t.dim());
    for (const auto& [key, value] : j.items()) {
        std::size_t idx = 0;
        if (t.J) {
            const auto comma = key.find(',');
            if (comma == std::string::npos) throw SpecMismatch("bad pair key '" + key + "'");
            const int i = static_cast<int>(parse_int(key.substr(0, comma), 0));
            const int k = static_cast<int>(parse_int(key.substr(comma + 1), 0));
            const int at = t.J->index(i, k);
            if (at < 0) throw SpecMismatch("pair key '" + key + "' is not in J");
            idx = static_cast<std::size_t>(at);
        } else {
            const long long k = parse_int(key, 0);
            if (k < 1 || static_cast<std::size_t>(k) > t.d) throw SpecMismatch("coordinate key '" + key + "' out of range");
            idx = static_cast<std::size_t>(k - 1);
        }
        out[idx] = element_from_json(*t.field, value);
    }
    return out;
}

json value_json(const CharValue& v) {
    if (v.is_zero()) return nullptr;
    return json{{"q_exp", v.q_exp()}, {"zeta_exp", v.zeta_exp()}};
}

CharValue value_from_json(const json& j) {
    if (j.is_null()) return CharValue::zero();
    return CharValue::make(j.at("q_exp").get<std::uint32_t>(), j.at("zeta_exp").get<std::uint32_t>());
}

std::string pretty_value(const SuperTable& t, const CharValue& v) {
    if (v.is_zero()) return "0";
    const Field& f = *t.field;
    if (f.p() == 2) return std::to_string(*v.as_integer(2, f.q()));
    std::string out = std::to_string(checked_pow(f.q(), v.q_exp()));
    if (v.zeta_exp() != 0) out += "*z^" + std::to_string(v.zeta_exp());
    return out;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",;\"") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

bool operator==(const SuperTable& a, const SuperTable& b) {
    auto same_classes = [](const TableClass& x, const TableClass& y) { return x.rep == y.rep && x.size == y.size; };
    auto same_chars = [](const TableChar& x, const TableChar& y) {
        return x.rep == y.rep && x.corank == y.corank && x.degree == y.degree && x.irreducible == y.irreducible;
    };
    return a.kind == b.kind && a.field && b.field && *a.field == *b.field && a.J == b.J && a.d == b.d &&
           same_constants(a.constants, b.constants) &&
           std::equal(a.classes.begin(), a.classes.end(), b.classes.begin(), b.classes.end(), same_classes) &&
           std::equal(a.chars.begin(), a.chars.end(), b.chars.begin(), b.chars.end(), same_chars) && a.values == b.values;
}

SuperTable build_table(const PatternGroup& G, const TableOptions& options) {
    SuperTable t;
    t.kind = TableKind::pattern;
    t.field = G.field_ptr();
    t.J = G.J();
    t.classes = to_classes(G.all_orbit_reps(options.cap));
    const auto chars = G.all_coorbit_reps(options.cap);
    t.chars.resize(chars.size());
    t.values.assign(chars.size(), std::vector<CharValue>(t.classes.size()));
    parallel_rows(chars.size(), options.threads, [&](std::size_t r) {
        CharacterEvaluator ev(G, chars[r].rep);
        t.chars[r] = {chars[r].rep, ev.corank(),
                      static_cast<std::uint64_t>(checked_pow(G.field().q(), static_cast<std::uint32_t>(ev.corank()))),
                      is_irreducible(G, chars[r].rep)};
        for (std::size_t c = 0; c < t.classes.size(); ++c) t.values[r][c] = ev(t.classes[c].rep);
    });
    return t;
}

SuperTable build_table(const AlgebraGroup& G, const TableOptions& options) {
    SuperTable t;
    t.kind = TableKind::algebra;
    t.field = G.algebra().field_ptr();
    t.d = G.dim();
    t.constants = G.algebra().constants();
    t.classes = to_classes(G.all_orbit_reps(options.cap));
    const auto chars = G.all_coorbit_reps(options.cap);
    t.chars.resize(chars.size());
    t.values.assign(chars.size(), std::vector<CharValue>(t.classes.size()));
    const std::uint32_t q = G.field().q();
    parallel_rows(chars.size(), options.threads, [&](std::size_t r) {
        const std::size_t corank = alg_corank(G, chars[r].rep, options.cap);
        const auto degree = static_cast<std::uint64_t>(checked_pow(q, static_cast<std::uint32_t>(corank)));
        // <chi, chi> = q^{2 corank} / |O|, so the norm is 1 exactly when |O| = degree^2.
        const bool irreducible = chars[r].size == degree * degree;
        t.chars[r] = {chars[r].rep, corank, degree, irreducible};
        for (std::size_t c = 0; c < t.classes.size(); ++c) {
            t.values[r][c] = alg_value_with_corank(G.algebra(), corank, chars[r].rep, t.classes[c].rep);
        }
    });
    return t;
}

std::string format_rep(const SuperTable& table, const Vec& rep) {
    const std::string s =
        table.J ? format_functional(*table.J, *table.field, rep) : format_coordinates(*table.field, rep);
    return s.empty() ? "0" : s;
}

std::string to_json(const SuperTable& t) {
    const Field& f = *t.field;
    json doc;
    doc["kind"] = t.kind == TableKind::pattern ? "pattern" : "algebra";
    if (t.J) {
        doc["n"] = t.J->n();
    } else {
        doc["d"] = t.d;
    }
    doc["q"] = f.q();
    doc["p"] = f.p();
    if (f.r() > 1) doc["modulus"] = f.modulus();
    if (t.J) {
        json pairs = json::array();
        for (const auto& [i, j] : t.J->sorted_pairs()) pairs.push_back({i, j});
        doc["J"] = pairs;
    } else {
        json constants = json::array();
        for (const auto& c : t.constants) constants.push_back({c.i + 1, c.j + 1, c.k + 1, element_json(f, c.value)});
        doc["constants"] = constants;
    }
    json classes = json::array();
    for (const auto& c : t.classes) classes.push_back({{"rep", rep_json(t, c.rep)}, {"size", c.size}});
    doc["classes"] = classes;
    json chars = json::array();
    for (const auto& c : t.chars) {
        chars.push_back({{"rep", rep_json(t, c.rep)},
                         {"corank", c.corank},
                         {"degree", c.degree},
                         {"irreducible", c.irreducible}});
    }
    doc["chars"] = chars;
    json values = json::array();
    for (const auto& row : t.values) {
        json r = json::array();
        for (const auto& v : row) r.push_back(value_json(v));
        values.push_back(r);
    }
    doc["values"] = values;
    return doc.dump(1) + "\n";
}

SuperTable table_from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw SpecMismatch(std::string("malformed table JSON: ") + e.what());
    }
    try {
        SuperTable t;
        const std::string kind = doc.at("kind").get<std::string>();
        if (kind != "pattern" && kind != "algebra") throw SpecMismatch("unknown table kind '" + kind + "'");
        t.kind = kind == "pattern" ? TableKind::pattern : TableKind::algebra;
        std::vector<std::uint32_t> modulus;
        if (doc.contains("modulus")) modulus = doc.at("modulus").get<std::vector<std::uint32_t>>();
        t.field = make_field(doc.at("q").get<std::uint32_t>(), modulus);
        if (doc.at("p").get<std::uint32_t>() != t.field->p()) throw SpecMismatch("p does not match q");
        if (t.kind == TableKind::pattern) {
            std::vector<Pair> pairs;
            for (const auto& pr : doc.at("J")) pairs.emplace_back(pr.at(0).get<int>(), pr.at(1).get<int>());
            t.J = ClosedSet::validate_closed(doc.at("n").get<int>(), pairs);
        } else {
            t.d = doc.at("d").get<std::size_t>();
            for (const auto& c : doc.at("constants")) {
                const auto i = c.at(0).get<std::uint32_t>(), j = c.at(1).get<std::uint32_t>(), k = c.at(2).get<std::uint32_t>();
                if (i < 1 || j < 1 || k < 1 || i > t.d || j > t.d || k > t.d) throw SpecMismatch("constant index out of range");
                t.constants.push_back({i - 1, j - 1, k - 1, element_from_json(*t.field, c.at(3))});
            }
        }
        for (const auto& c : doc.at("classes")) t.classes.push_back({rep_from_json(t, c.at("rep")), c.at("size").get<std::uint64_t>()});
        for (const auto& c : doc.at("chars")) {
            t.chars.push_back({rep_from_json(t, c.at("rep")), c.at("corank").get<std::size_t>(),
                               c.at("degree").get<std::uint64_t>(), c.at("irreducible").get<bool>()});
        }
        for (const auto& row : doc.at("values")) {
            std::vector<CharValue> r;
            for (const auto& v : row) r.push_back(value_from_json(v));
            if (r.size() != t.classes.size()) throw SpecMismatch("value row length differs from the class count");
            t.values.push_back(std::move(r));
        }
        if (t.values.size() != t.chars.size()) throw SpecMismatch("value row count differs from the character count");
        return t;
    } catch (const json::exception& e) {
        throw SpecMismatch(std::string("malformed table JSON: ") + e.what());
    }
}

std::string to_csv(const SuperTable& t) {
    std::ostringstream out;
    out << "character";
    for (const auto& c : t.classes) out << ',' << csv_field(format_rep(t, c.rep));
    out << '\n';
    for (std::size_t r = 0; r < t.chars.size(); ++r) {
        out << csv_field(format_rep(t, t.chars[r].rep));
        for (const auto& v : t.values[r]) out << ',' << v.to_string();
        out << '\n';
    }
    return out.str();
}

std::string to_pretty(const SuperTable& t) {
    const Field& f = *t.field;
    std::ostringstream out;
    if (t.J) {
        out << "pattern group U_J, n=" << t.J->n() << ", |J|=" << t.J->size();
    } else {
        out << "algebra group, d=" << t.d;
    }
    out << ", " << f.describe() << '\n';
    if (t.J) {
        out << "J:";
        for (const auto& [i, j] : t.J->sorted_pairs()) out << " (" << i << ',' << j << ')';
        out << '\n';
    }
    out << "\nsuperclasses\n";
    for (std::size_t c = 0; c < t.classes.size(); ++c) {
        out << "  K" << c + 1 << "  size " << t.classes[c].size << "  rep " << format_rep(t, t.classes[c].rep) << '\n';
    }
    out << "\nsupercharacters\n";
    for (std::size_t r = 0; r < t.chars.size(); ++r) {
        const auto& c = t.chars[r];
        out << "  X" << r + 1 << "  degree " << c.degree << "  corank " << c.corank
            << (c.irreducible ? "  irreducible" : "  reducible") << "  rep " << format_rep(t, c.rep) << '\n';
    }

    std::vector<std::vector<std::string>> cells(t.chars.size() + 1, std::vector<std::string>(t.classes.size() + 1));
    for (std::size_t c = 0; c < t.classes.size(); ++c) cells[0][c + 1] = "K" + std::to_string(c + 1);
    for (std::size_t r = 0; r < t.chars.size(); ++r) {
        cells[r + 1][0] = "X" + std::to_string(r + 1);
        for (std::size_t c = 0; c < t.classes.size(); ++c) cells[r + 1][c + 1] = pretty_value(t, t.values[r][c]);
    }
    std::vector<std::size_t> width(t.classes.size() + 1, 0);
    for (const auto& row : cells)
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    out << "\ntable\n";
    for (const auto& row : cells) {
        out << ' ';
        for (std::size_t c = 0; c < row.size(); ++c) out << ' ' << std::setw(static_cast<int>(width[c])) << row[c];
        out << '\n';
    }
    return out.str();
}

}  // namespace supertab
