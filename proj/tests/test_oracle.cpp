#include <algorithm>
#include <map>
#include <random>

#include "corpus.hpp"
#include "doctest.h"
#include "support.hpp"
#include "supertab/error.hpp"
#include "supertab/formula.hpp"
#include "supertab/oracle.hpp"

using namespace supertab;

TEST_CASE("enumerated groups") {
    auto f3 = Field::create(3);
    PatternGroup G(ClosedSet::full(3), f3);
    const auto E = EnumeratedGroup::pattern(G);
    CHECK(E.order() == 27);
    std::mt19937 rng(1);
    for (int trial = 0; trial < 50; ++trial) {
        const auto x = helpers::random_functional(G.J(), *f3, rng), y = helpers::random_functional(G.J(), *f3, rng);
        CHECK(E.decode(E.encode(x)) == x);
        CHECK(E.multiply(x, y) == G.multiply({x}, {y}).phi);
        CHECK(E.inverse(x) == G.inverse({x}).phi);
        CHECK(E.encode(x) == pack(3, x));
    }
    CHECK(E.generators().size() == 3 * 2);
    PatternGroup big(corpus::determinant_example(), f3);
    CHECK_THROWS_AS(EnumeratedGroup::pattern(big), SizeCapExceeded);
    CHECK(EnumeratedGroup::pattern(big, std::uint64_t{1} << 20).order() == 531441);
}

TEST_CASE("trivial supercharacter") {
    PatternGroup G(ClosedSet::full(4), Field::create(3));
    const Oracle oracle = helpers::pattern_oracle(G);
    for (const auto& v : oracle.supercharacter(zero_functional(G.J()))) CHECK(v == CycInt::integer(3, 1));
    const auto one = oracle.class_function(oracle.coorbit_of(zero_functional(G.J())));
    CHECK(inner_product(one, one) == CycInt::integer(3, 729));
}

TEST_CASE("Heisenberg n=3 over F_3 matches the formula") {
    PatternGroup G(corpus::heisenberg(3), Field::create(3));
    const Oracle oracle = helpers::pattern_oracle(G);
    for (std::uint32_t e = 0; e < 27; ++e)
        for (std::uint32_t x = 0; x < 27; ++x) {
            const Vec eta = oracle.group().decode(e), phi = oracle.group().decode(x);
            CHECK(value(G, eta, phi).to_cyc(3, 3) == oracle.table()[oracle.coorbits().orbit_of[e]][oracle.superclasses().orbit_of[x]]);
        }
}

TEST_CASE("conjugacy classes") {
    auto f2 = Field::create(2);
    PatternGroup A(ClosedSet::validate_closed(4, {{1, 2}, {3, 4}, {1, 4}}), f2);
    const Oracle abelian = helpers::pattern_oracle(A);
    CHECK(abelian.conjugacy_classes().reps.size() == abelian.group().order());

    PatternGroup H(corpus::heisenberg(4), f2);
    const Oracle oracle = helpers::pattern_oracle(H);
    const auto& conj = oracle.conjugacy_classes();
    CHECK(conj.reps.size() == 2 + 15);
    CHECK(conj.orbit_of == oracle.superclasses().orbit_of);

    PatternGroup U(ClosedSet::full(4), f2);
    const Oracle u4 = helpers::pattern_oracle(U);
    CHECK(u4.conjugacy_classes().reps.size() > u4.superclasses().reps.size());
}

TEST_CASE("axioms on the corpus") {
    for (const auto& inst : corpus::all()) {
        for (const std::uint32_t q : {2u, 3u}) {
            PatternGroup G(inst.J, Field::create(q));
            if (!helpers::oracle_scale(G)) continue;
            CAPTURE(inst.name);
            CAPTURE(q);
            const Oracle oracle = helpers::pattern_oracle(G);
            const auto report = oracle.verify_axioms();
            for (const auto& check : report.checks) {
                CAPTURE(check.name);
                CAPTURE(check.witness);
                CHECK(check.passed);
            }
            CHECK(report.all_passed());
        }
    }
    PatternGroup U3(ClosedSet::full(3), Field::create(2));
    const Oracle oracle = helpers::pattern_oracle(U3);
    CHECK(oracle.superclasses().reps.size() == 5);
    CHECK(oracle.coorbits().reps.size() == 5);
}

TEST_CASE("oracle partitions agree with core") {
    for (const auto& inst : corpus::all()) {
        for (const std::uint32_t q : {2u, 3u}) {
            PatternGroup G(inst.J, Field::create(q));
            if (!helpers::oracle_scale(G)) continue;
            CAPTURE(inst.name);
            const Oracle oracle = helpers::pattern_oracle(G);
            const auto classes = G.all_orbit_reps(), chars = G.all_coorbit_reps();
            REQUIRE(classes.size() == oracle.superclasses().reps.size());
            REQUIRE(chars.size() == oracle.coorbits().reps.size());
            std::vector<bool> hit(classes.size()), cohit(chars.size());
            for (const auto& c : classes) {
                const auto k = oracle.superclass_of(c.rep);
                CHECK_FALSE(hit[k]);
                hit[k] = true;
                CHECK(oracle.superclasses().sizes[k] == c.size);
            }
            for (const auto& c : chars) {
                const auto k = oracle.coorbit_of(c.rep);
                CHECK_FALSE(cohit[k]);
                cohit[k] = true;
                CHECK(oracle.coorbits().sizes[k] == c.size);
                CHECK(oracle.corank(k) == G.corank(c.rep));
            }
        }
    }
}

TEST_CASE("orthogonality") {
    for (const auto& inst : corpus::all()) {
        for (const std::uint32_t q : {2u, 3u}) {
            PatternGroup G(inst.J, Field::create(q));
            if (!helpers::oracle_scale(G)) continue;
            CAPTURE(inst.name);
            const Oracle oracle = helpers::pattern_oracle(G);
            const auto order = static_cast<std::int64_t>(oracle.group().order());
            const std::size_t count = oracle.coorbits().reps.size();
            for (std::size_t c = 0; c < count; ++c) {
                const auto size = static_cast<std::int64_t>(oracle.coorbits().sizes[c]);
                const auto norm = static_cast<std::int64_t>(helpers::qpow(q, 2 * oracle.corank(c)));
                for (std::size_t d = 0; d < count; ++d) {
                    const CycInt ip = oracle.superclass_inner_product(c, d);
                    CHECK(ip.scale(size) == CycInt::integer(G.field().p(), c == d ? order * norm : 0));
                }
            }
        }
    }
    PatternGroup H(corpus::heisenberg(3), Field::create(3));
    const Oracle oracle = helpers::pattern_oracle(H);
    for (std::size_t c = 0; c < oracle.coorbits().reps.size(); ++c)
        for (std::size_t d = 0; d < oracle.coorbits().reps.size(); ++d) {
            CHECK(inner_product(oracle.class_function(c), oracle.class_function(d)) == oracle.superclass_inner_product(c, d));
        }
}

TEST_CASE("algebra group generation check") {
    auto f2 = Field::create(2);
    const AlgebraGroup G(StructureAlgebra::validate(f2, 2, {{0, 0, 1, Elem{1}}}));
    const auto E = EnumeratedGroup::algebra(G);
    CHECK(E.order() == 4);
    const Oracle oracle(E);
    CHECK(oracle.verify_axioms().all_passed());
}
