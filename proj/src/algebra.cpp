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

#include "supertab/algebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "supertab/error.hpp"
#include "supertab/spec_io.hpp"

namespace supertab {

namespace {

// Incrementally maintained echelon basis used to detect new directions.
class Span {
   public:
    Span(const Field& f, std::size_t dim) : f_(&f), dim_(dim) {}

    // Adds v if it is independent of the current rows; returns whether it was added.
    bool insert(Vec v) {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Elem c = v[pivots_[r]];
            if (c.is_zero()) continue;
            for (std::size_t k = 0; k < dim_; ++k) v[k] = f_->sub(v[k], f_->mul(c, rows_[r][k]));
        }
        std::size_t piv = 0;
        while (piv < dim_ && v[piv].is_zero()) ++piv;
        if (piv == dim_) return false;
        const Elem inv = f_->inv(v[piv]);
        for (auto& e : v) e = f_->mul(e, inv);
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Elem c = rows_[r][piv];
            if (c.is_zero()) continue;
            for (std::size_t k = 0; k < dim_; ++k) rows_[r][k] = f_->sub(rows_[r][k], f_->mul(c, v[k]));
        }
        rows_.push_back(std::move(v));
        pivots_.push_back(piv);
        return true;
    }

   private:
    const Field* f_;
    std::size_t dim_;
    std::vector<Vec> rows_;
    std::vector<std::size_t> pivots_;
};

Vec flatten(const Matrix& m) { return m.data(); }

}  // namespace

StructureAlgebra StructureAlgebra::validate(FieldPtr field, std::size_t d,
                                            const std::vector<StructureConstant>& constants) {
    if (!field) throw SpecMismatch("algebra without a field");
    std::vector<Elem> c(d * d * d);
    for (const auto& e : constants) {
        if (e.i >= d || e.j >= d || e.k >= d) throw ShapeMismatch("structure constant index out of range");
        if (!field->contains(e.value)) throw BadField("structure constant outside the field");
        c[(e.i * d + e.j) * d + e.k] = e.value;
    }
    StructureAlgebra A(std::move(field), d, std::move(c));
    const Field& f = *A.field_;

    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                for (std::size_t l = 0; l < d; ++l) {
                    Elem lhs{0}, rhs{0};
                    for (std::size_t m = 0; m < d; ++m) {
                        lhs = f.add(lhs, f.mul(A.c(i, j, m), A.c(m, k, l)));
                        rhs = f.add(rhs, f.mul(A.c(j, k, m), A.c(i, m, l)));
                    }
                    if (lhs != rhs) {
                        throw NotAssociative(static_cast<int>(i + 1), static_cast<int>(j + 1), static_cast<int>(k + 1),
                                             static_cast<int>(l + 1));
                    }
                }

    // Words whose products span n^m; n is nilpotent iff n^{d+1} = 0.
    std::vector<std::pair<std::vector<int>, Vec>> level;
    {
        Span span(f, d);
        for (std::size_t i = 0; i < d; ++i) {
            Vec e(d);
            e[i] = Elem{1};
            span.insert(e);
            level.push_back({{static_cast<int>(i + 1)}, e});
        }
    }
    for (std::size_t power = 2; power <= d + 1 && !level.empty(); ++power) {
        Span span(f, d);
        std::vector<std::pair<std::vector<int>, Vec>> next;
        for (const auto& [word, x] : level) {
            for (std::size_t j = 0; j < d; ++j) {
                Vec e(d);
                e[j] = Elem{1};
                Vec y = A.multiply(x, e);
                if (span.insert(y)) {
                    auto w = word;
                    w.push_back(static_cast<int>(j + 1));
                    next.emplace_back(std::move(w), std::move(y));
                }
            }
        }
        level = std::move(next);
        if (power == d + 1 && !level.empty()) throw NotNilpotent(level.front().first);
    }
    return A;
}

std::vector<StructureConstant> StructureAlgebra::constants() const {
    std::vector<StructureConstant> out;
    for (std::size_t i = 0; i < d_; ++i)
        for (std::size_t j = 0; j < d_; ++j)
            for (std::size_t k = 0; k < d_; ++k) {
                if (!c(i, j, k).is_zero()) {
                    out.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j),
                                   static_cast<std::uint32_t>(k), c(i, j, k)});
                }
            }
    return out;
}

Vec StructureAlgebra::multiply(const Vec& x, const Vec& y) const {
    if (x.size() != d_ || y.size() != d_) throw ShapeMismatch("algebra element has the wrong dimension");
    const Field& f = *field_;
    Vec out(d_);
    for (std::size_t i = 0; i < d_; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < d_; ++j) {
            if (y[j].is_zero()) continue;
            const Elem s = f.mul(x[i], y[j]);
            for (std::size_t k = 0; k < d_; ++k) out[k] = f.add(out[k], f.mul(s, c(i, j, k)));
        }
    }
    return out;
}

Matrix StructureAlgebra::left_constants(std::size_t i) const {
    Matrix m(d_, d_);
    for (std::size_t j = 0; j < d_; ++j)
        for (std::size_t k = 0; k < d_; ++k) m(j, k) = c(i, j, k);
    return m;
}

Matrix StructureAlgebra::right_constants(std::size_t j) const {
    Matrix m(d_, d_);
    for (std::size_t i = 0; i < d_; ++i)
        for (std::size_t k = 0; k < d_; ++k) m(i, k) = c(i, j, k);
    return m;
}

AlgebraGroup::AlgebraGroup(StructureAlgebra algebra) : A_(std::move(algebra)) {
    const std::size_t d = A_.d();
    const auto units = A_.field().units();
    for (MoveSet* m : {&both_, &coright_, &coboth_}) {
        m->dim = d;
        m->scalars = units;
    }
    for (std::size_t i = 0; i < d; ++i) {
        LinearMove left, right, coleft, coright;
        for (std::size_t j = 0; j < d; ++j) {
            for (std::size_t k = 0; k < d; ++k) {
                const auto uj = static_cast<std::uint32_t>(j), uk = static_cast<std::uint32_t>(k);
                // (v_i X)_k gains X_j c_ij^k; (X v_i)_k gains X_j c_ji^k.
                if (!A_.c(i, j, k).is_zero()) {
                    left.terms.push_back({uk, uj, A_.c(i, j, k)});
                    coleft.terms.push_back({uj, uk, A_.c(i, j, k)});
                }
                if (!A_.c(j, i, k).is_zero()) {
                    right.terms.push_back({uk, uj, A_.c(j, i, k)});
                    coright.terms.push_back({uj, uk, A_.c(j, i, k)});
                }
            }
        }
        both_.moves.push_back(left);
        both_.moves.push_back(right);
        coright_.moves.push_back(coright);
        coboth_.moves.push_back(coleft);
        coboth_.moves.push_back(coright);
    }
}

std::vector<OrbitSummary> AlgebraGroup::all_orbit_reps(std::uint64_t cap) const {
    return sweep_orbits(field(), both_, cap);
}

std::vector<OrbitSummary> AlgebraGroup::all_coorbit_reps(std::uint64_t cap) const {
    return sweep_orbits(field(), coboth_, cap);
}

MeshData alg_mesh_data(const StructureAlgebra& A, const AlgFunctional& phi, const AlgFunctional& eta) {
    const std::size_t d = A.d();
    if (phi.size() != d || eta.size() != d) throw ShapeMismatch("functional has the wrong dimension");
    const Field& f = A.field();
    MeshData out{Matrix(d, d), Vec(d), Vec(d)};
    // u[i] = v_i X_phi; r[j][n] = lambda_eta(v_n v_j).
    std::vector<Vec> u(d, Vec(d)), r(d, Vec(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t m = 0; m < d; ++m) {
            if (phi[m].is_zero()) continue;
            for (std::size_t n = 0; n < d; ++n) u[i][n] = f.add(u[i][n], f.mul(phi[m], A.c(i, m, n)));
        }
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t n = 0; n < d; ++n)
            for (std::size_t k = 0; k < d; ++k) r[j][n] = f.add(r[j][n], f.mul(A.c(n, j, k), eta[k]));
    for (std::size_t i = 0; i < d; ++i) {
        out.a[i] = dot(f, u[i], eta);
        for (std::size_t j = 0; j < d; ++j) out.M(i, j) = dot(f, u[i], r[j]);
    }
    for (std::size_t j = 0; j < d; ++j) {
        Elem b{0};
        for (std::size_t m = 0; m < d; ++m) b = f.add(b, f.mul(phi[m], r[j][m]));
        out.b[j] = b;
    }
    return out;
}

std::size_t alg_corank(const AlgebraGroup& G, const AlgFunctional& eta, std::uint64_t cap) {
    const std::uint64_t size = orbit_members(G.field(), G.right_comoves(), eta, cap).size();
    std::uint64_t power = 1;
    std::size_t e = 0;
    while (power < size) {
        power *= G.field().q();
        ++e;
    }
    if (power != size) throw InternalInvariantViolation("right co-orbit size is not a power of q");
    return e;
}

CharValue alg_value_with_corank(const StructureAlgebra& A, std::size_t corank, const AlgFunctional& eta,
                                const AlgFunctional& phi) {
    const MeshData data = alg_mesh_data(A, phi, eta);
    return value_from_mesh(A.field(), corank, data, mesh_test(A.field(), data), dot(A.field(), eta, phi));
}

CharValue alg_value(const AlgebraGroup& G, const AlgFunctional& eta, const AlgFunctional& phi, std::uint64_t cap) {
    return alg_value_with_corank(G.algebra(), alg_corank(G, eta, cap), eta, phi);
}

ClosedSet pattern_envelope(const Embedding& embedding) {
    std::vector<Pair> support;
    const auto n = static_cast<std::size_t>(embedding.n);
    for (const auto& B : embedding.basis) {
        if (B.rows() != n || B.cols() != n) throw ShapeMismatch("embedded basis matrix has the wrong size");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (B(i, j).is_zero()) continue;
                if (j <= i) throw SpecMismatch("embedded basis matrix is not strictly upper triangular");
                support.emplace_back(static_cast<int>(i + 1), static_cast<int>(j + 1));
            }
    }
    return ClosedSet::close_covers(embedding.n, support);
}

StructureAlgebra algebra_from_embedding(FieldPtr field, const Embedding& embedding) {
    const Field& f = *field;
    const std::size_t d = embedding.basis.size();
    const auto n = static_cast<std::size_t>(embedding.n);
    pattern_envelope(embedding);
    Matrix columns(n * n, d);
    for (std::size_t k = 0; k < d; ++k) {
        const Vec flat = flatten(embedding.basis[k]);
        for (std::size_t e = 0; e < n * n; ++e) columns(e, k) = flat[e];
    }
    if (rank(f, columns) != d) throw SpecMismatch("embedded basis is linearly dependent");
    std::vector<StructureConstant> constants;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const auto& X = embedding.basis[i];
            const auto& Y = embedding.basis[j];
            Vec prod(n * n);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t m = 0; m < n; ++m) {
                    if (X(r, m).is_zero()) continue;
                    for (std::size_t s = 0; s < n; ++s) prod[r * n + s] = f.add(prod[r * n + s], f.mul(X(r, m), Y(m, s)));
                }
            auto coeffs = solve(f, columns, prod);
            if (!coeffs) throw SpecMismatch("span of the embedded basis is not closed under products");
            for (std::size_t k = 0; k < d; ++k) {
                if (!(*coeffs)[k].is_zero()) {
                    constants.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j),
                                         static_cast<std::uint32_t>(k), (*coeffs)[k]});
                }
            }
        }
    return StructureAlgebra::validate(std::move(field), d, constants);
}

StructureAlgebra pattern_to_algebra(const ClosedSet& J, FieldPtr field) {
    std::vector<StructureConstant> constants;
    for (const auto& [i, j, l] : J.chains3()) {
        constants.push_back({static_cast<std::uint32_t>(J.index(i, j)), static_cast<std::uint32_t>(J.index(j, l)),
                             static_cast<std::uint32_t>(J.index(i, l)), Elem{1}});
    }
    return StructureAlgebra::validate(std::move(field), J.size(), constants);
}

AlgebraSpec parse_algebra_spec(std::string_view text, std::optional<std::uint32_t> q_override) {
    std::optional<std::size_t> d;
    std::optional<std::uint32_t> q;
    std::vector<std::uint32_t> modulus;
    enum { header, constants, embed } mode = header;
    struct RawConstant {
        long long i, j, k;
        std::string value;
        int line;
    };
    struct RawEntry {
        long long b, i, j;
        std::string value;
        int line;
    };
    std::vector<RawConstant> raw_constants;
    std::vector<RawEntry> raw_entries;
    int embed_n = 0;
    int last_line = 0;
    for (const auto& line : tokenize_spec(text)) {
        last_line = line.number;
        const auto& t = line.tokens;
        if (t[0] == "embed") {
            if (mode != constants) throw SyntaxError(line.number, "'embed' must follow the constants section");
            if (t.size() != 3 || t[1] != "n") throw SyntaxError(line.number, "expected 'embed n <int>'");
            embed_n = static_cast<int>(parse_int(t[2], line.number));
            if (embed_n < 1 || embed_n > 64) throw SyntaxError(line.number, "embedding size out of range");
            mode = embed;
            continue;
        }
        if (mode == header) {
            if (t[0] == "d" || t[0] == "q") {
                if (t.size() != 2) throw SyntaxError(line.number, "'" + t[0] + "' takes one integer");
                const long long v = parse_int(t[1], line.number);
                if (t[0] == "d") {
                    if (d) throw SyntaxError(line.number, "duplicate 'd'");
                    if (v < 0 || v > 64) throw SyntaxError(line.number, "d must be in [0,64]");
                    d = static_cast<std::size_t>(v);
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
            } else if (t[0] == "constants") {
                if (t.size() != 1) throw SyntaxError(line.number, "'constants' takes no arguments");
                if (!d) throw SyntaxError(line.number, "missing 'd' header");
                if (!q) throw SyntaxError(line.number, "missing 'q' header");
                mode = constants;
            } else {
                throw SyntaxError(line.number, "unknown header keyword '" + t[0] + "'");
            }
            continue;
        }
        if (t.size() != 4) throw SyntaxError(line.number, mode == constants ? "expected 'i j k value'" : "expected 'b i j value'");
        const long long x = parse_int(t[0], line.number), y = parse_int(t[1], line.number),
                        z = parse_int(t[2], line.number);
        if (mode == constants) {
            for (long long v : {x, y, z}) {
                if (v < 1 || static_cast<std::size_t>(v) > *d) throw SyntaxError(line.number, "basis index out of range");
            }
            raw_constants.push_back({x, y, z, t[3], line.number});
        } else {
            if (x < 1 || static_cast<std::size_t>(x) > *d) throw SyntaxError(line.number, "basis index out of range");
            if (y < 1 || z > embed_n || y >= z) {
                throw PairOutOfRange(static_cast<int>(y), static_cast<int>(z), embed_n);
            }
            raw_entries.push_back({x, y, z, t[3], line.number});
        }
    }
    if (mode == header) throw SyntaxError(last_line + 1, "missing 'constants' section");

    FieldPtr field = q_override ? Field::create(*q_override) : make_field(*q, modulus);
    auto element = [&](const std::string& s, int line) {
        try {
            return parse_element(*field, s);
        } catch (const SyntaxError&) {
            throw SyntaxError(line, "bad field element '" + s + "'");
        } catch (const BadField&) {
            throw SyntaxError(line, "bad field element '" + s + "'");
        }
    };
    std::map<std::array<long long, 3>, int> seen;
    std::vector<StructureConstant> entries;
    for (const auto& c : raw_constants) {
        if (!seen.emplace(std::array<long long, 3>{c.i, c.j, c.k}, c.line).second) {
            throw SyntaxError(c.line, "duplicate structure constant");
        }
        entries.push_back({static_cast<std::uint32_t>(c.i - 1), static_cast<std::uint32_t>(c.j - 1),
                           static_cast<std::uint32_t>(c.k - 1), element(c.value, c.line)});
    }
    StructureAlgebra algebra = StructureAlgebra::validate(field, *d, entries);
    std::optional<Embedding> embedding;
    if (mode == embed) {
        Embedding e;
        e.n = embed_n;
        e.basis.assign(*d, Matrix(static_cast<std::size_t>(embed_n), static_cast<std::size_t>(embed_n)));
        for (const auto& r : raw_entries) {
            e.basis[static_cast<std::size_t>(r.b - 1)](static_cast<std::size_t>(r.i - 1), static_cast<std::size_t>(r.j - 1)) =
                element(r.value, r.line);
        }
        if (!(algebra_from_embedding(field, e) == algebra)) {
            throw SpecMismatch("structure constants disagree with the embedded basis");
        }
        embedding = std::move(e);
    }
    return {std::move(algebra), std::move(embedding)};
}

std::string emit_algebra_spec(const AlgebraSpec& spec) {
    const StructureAlgebra& A = spec.algebra;
    const Field& f = A.field();
    std::ostringstream out;
    out << "d " << A.d() << '\n' << "q " << f.q() << '\n';
    if (f.r() > 1) {
        out << "modulus";
        for (auto c : f.modulus()) out << ' ' << c;
        out << '\n';
    }
    out << "constants\n";
    for (const auto& c : A.constants()) {
        out << c.i + 1 << ' ' << c.j + 1 << ' ' << c.k + 1 << ' ' << format_element(f, c.value) << '\n';
    }
    if (spec.embedding) {
        out << "embed n " << spec.embedding->n << '\n';
        for (std::size_t b = 0; b < spec.embedding->basis.size(); ++b) {
            const Matrix& B = spec.embedding->basis[b];
            for (std::size_t i = 0; i < B.rows(); ++i)
                for (std::size_t j = 0; j < B.cols(); ++j) {
                    if (!B(i, j).is_zero()) {
                        out << b + 1 << ' ' << i + 1 << ' ' << j + 1 << ' ' << format_element(f, B(i, j)) << '\n';
                    }
                }
        }
    }
    return out.str();
}

}  // namespace supertab
