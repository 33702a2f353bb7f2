#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "supertab/error.hpp"
#include "supertab/poset.hpp"
#include "supertab/spec_io.hpp"

using namespace supertab;

namespace {

std::vector<Pair> heisenberg_pairs(int n) {
    std::vector<Pair> out;
    for (int j = 2; j <= n; ++j) out.emplace_back(1, j);
    for (int j = 2; j < n; ++j) out.emplace_back(j, n);
    return out;
}

std::vector<Pair> random_covers(int n, std::mt19937& rng) {
    std::bernoulli_distribution keep(0.35);
    std::vector<Pair> out;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            if (keep(rng)) out.emplace_back(i, j);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("validate_closed") {
    try {
        ClosedSet::validate_closed(3, {{1, 2}, {2, 3}});
        FAIL("expected NotClosed");
    } catch (const NotClosed& e) {
        CHECK(e.witnesses() == std::vector<Chain3>{{1, 2, 3}});
    }
    CHECK(ClosedSet::validate_closed(4, heisenberg_pairs(4)).size() == 5);
    CHECK(ClosedSet::validate_closed(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}).is_full());
    CHECK_THROWS_AS(ClosedSet::validate_closed(3, {{2, 4}}), PairOutOfRange);
    CHECK_THROWS_AS(ClosedSet::validate_closed(3, {{2, 2}}), PairOutOfRange);
}

TEST_CASE("close_covers") {
    CHECK(ClosedSet::close_covers(3, {{1, 2}, {2, 3}}).sorted_pairs() == std::vector<Pair>{{1, 2}, {1, 3}, {2, 3}});
    CHECK(ClosedSet::close_covers(3, {}).empty());
    CHECK(ClosedSet::close_covers(4, {{1, 2}, {2, 3}, {3, 4}}) == ClosedSet::full(4));
    CHECK_THROWS_AS(ClosedSet::close_covers(3, {{0, 1}}), PairOutOfRange);
}

TEST_CASE("derived subgroup") {
    CHECK(derived_subgroup(ClosedSet::full(4)).sorted_pairs() == std::vector<Pair>{{1, 3}, {1, 4}, {2, 4}});
    CHECK(derived_subgroup(ClosedSet::validate_closed(4, heisenberg_pairs(4))).sorted_pairs() ==
          std::vector<Pair>{{1, 4}});
    CHECK(derived_subgroup(ClosedSet::validate_closed(4, {{1, 2}, {3, 4}})).empty());
}

TEST_CASE("chains") {
    for (int n = 3; n <= 7; ++n) {
        auto H = ClosedSet::validate_closed(n, heisenberg_pairs(n));
        CHECK_FALSE(H.has_4chain());
    }
    CHECK(ClosedSet::full(4).chains4() == std::vector<Chain4>{{1, 2, 3, 4}});
    CHECK(ClosedSet::full(3).chains3() == std::vector<Chain3>{{1, 2, 3}});
}

TEST_CASE("total order") {
    const auto J = ClosedSet::full(4);
    const std::vector<Pair> expected{{3, 4}, {2, 4}, {2, 3}, {1, 4}, {1, 3}, {1, 2}};
    CHECK(J.index_order() == expected);
    for (int n = 1; n <= 7; ++n) CHECK(ordering_lemma_holds(ClosedSet::full(n)));
}

TEST_CASE("random closed sets: closure, chains, derived subgroup, ordering") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + trial % 6;
        const auto J = ClosedSet::close_covers(n, random_covers(n, rng));
        CHECK_NOTHROW(ClosedSet::validate_closed(n, J.sorted_pairs()));
        CHECK(ClosedSet::close_covers(n, J.covers()) == J);
        CHECK(ordering_lemma_holds(J));

        std::vector<Chain3> c3;
        std::vector<Chain4> c4;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                for (int k = 1; k <= n; ++k) {
                    if (J.contains(i, j) && J.contains(j, k)) c3.push_back({i, j, k});
                    for (int l = 1; l <= n; ++l) {
                        if (J.contains(i, j) && J.contains(j, k) && J.contains(k, l)) c4.push_back({i, j, k, l});
                    }
                }
        CHECK(J.chains3() == c3);
        CHECK(J.chains4() == c4);
        CHECK(J.has_4chain() == !c4.empty());

        const auto D = derived_subgroup(J);
        for (const auto& [i, j] : D.sorted_pairs()) CHECK(J.contains(i, j));
        CHECK_NOTHROW(ClosedSet::validate_closed(n, D.sorted_pairs()));
    }
}

TEST_CASE("functionals") {
    auto f3 = Field::create(3);
    const auto J = ClosedSet::full(3);
    const auto phi = make_functional(J, {{1, 3, Elem{2}}, {2, 3, Elem{1}}});
    CHECK(support(J, phi) == std::vector<Pair>{{2, 3}, {1, 3}});
    CHECK(value_at(J, phi, 1, 3) == Elem{2});
    CHECK_FALSE(is_monomial(J, phi));
    CHECK(is_monomial(J, make_functional(J, {{1, 3, Elem{2}}})));
    CHECK_THROWS_AS(make_functional(ClosedSet::validate_closed(3, {{1, 3}}), {{1, 2, Elem{1}}}), PairOutOfRange);
    CHECK(unpack(3, J.size(), pack(3, phi)) == phi);
    CHECK(pack(3, Vec{Elem{1}, Elem{0}}) > pack(3, Vec{Elem{0}, Elem{2}}));
}

TEST_CASE("spec parsing") {
    auto a = parse_poset_spec("n 3\nq 2\npairs\n1 3\n");
    CHECK(a.J.sorted_pairs() == std::vector<Pair>{{1, 3}});
    CHECK(a.field->q() == 2);

    auto b = parse_poset_spec("# chain\nn 4\nq 3\ncovers\n1 2\n2 3\n3 4\n");
    CHECK(b.J == ClosedSet::full(4));
    CHECK(b.field->q() == 3);

    CHECK_THROWS_AS(parse_poset_spec("n 3\nq 2\npairs\n1 2\n2 3\n"), NotClosed);
    CHECK_THROWS_AS(parse_poset_spec("n 3\nq 6\npairs\n"), BadField);
    CHECK_THROWS_AS(parse_poset_spec("n 3\nq 4\nmodulus 1 0 1\npairs\n"), BadField);
    try {
        parse_poset_spec("n 3\nq 2\nbogus\n");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(parse_poset_spec("n 3\nq 2\npairs\n1 x\n"), SyntaxError);
    CHECK_THROWS_AS(parse_poset_spec("n 3\npairs\n"), SyntaxError);

    auto c = parse_poset_spec("n 4\nq 9\nmodulus 2 2 1\ncovers\n1 2\n2 4\n1 3\n");
    CHECK(c.field->modulus() == std::vector<std::uint32_t>{2, 2, 1});
    auto round = parse_poset_spec(emit_poset_spec(c.J, *c.field));
    CHECK(round.J == c.J);
    CHECK(*round.field == *c.field);
    CHECK(emit_poset_spec(round.J, *round.field) == emit_poset_spec(c.J, *c.field));

    CHECK(parse_poset_spec("n 3\nq 2\npairs\n1 3\n", 5).field->q() == 5);
}

TEST_CASE("functional syntax") {
    auto f9 = Field::create(9);
    const auto J = ClosedSet::full(3);
    const auto phi = parse_functional(J, *f9, "1,2=1:2; 2,3=2");
    CHECK(value_at(J, phi, 1, 2) == f9->from_coefficients(std::vector<std::uint32_t>{1, 2}));
    CHECK(value_at(J, phi, 2, 3) == Elem{2});
    CHECK(parse_functional(J, *f9, format_functional(J, *f9, phi)) == phi);
    CHECK(format_functional(J, *f9, phi) == "1,2=1:2;2,3=2:0");
    CHECK_THROWS_AS(parse_functional(J, *f9, "1,4=1"), PairOutOfRange);
    CHECK_THROWS_AS(parse_functional(J, *f9, "1,2"), SyntaxError);
    CHECK(parse_functional(J, *f9, "") == zero_functional(J));
    CHECK(parse_functional(J, *f9, "0") == zero_functional(J));
    CHECK(parse_coordinates(2, *f9, "0") == Vec(2));
}
