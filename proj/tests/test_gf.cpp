#include <algorithm>
#include <random>

#include "doctest.h"
#include "supertab/cyclotomic.hpp"
#include "supertab/error.hpp"
#include "supertab/gf.hpp"
#include "supertab/linalg.hpp"

using namespace supertab;

namespace {

Elem naive_power(const Field& f, Elem a, std::uint64_t e) {
    Elem out = f.one();
    for (std::uint64_t i = 0; i < e; ++i) out = f.mul(out, a);
    return out;
}

Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, std::mt19937& rng, double density = 0.5) {
    std::uniform_int_distribution<std::uint32_t> pick(1, f.q() - 1);
    std::bernoulli_distribution nonzero(density);
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = nonzero(rng) ? Elem{pick(rng)} : Elem{0};
    }
    return m;
}

Vec combination(const Field& f, const std::vector<Vec>& basis, std::uint64_t code, std::size_t dim) {
    Vec v(dim);
    for (const auto& b : basis) {
        const Elem c{static_cast<std::uint32_t>(code % f.q())};
        code /= f.q();
        for (std::size_t k = 0; k < dim; ++k) v[k] = f.add(v[k], f.mul(c, b[k]));
    }
    return v;
}

}  // namespace

TEST_CASE("prime field arithmetic") {
    auto f3 = Field::create(3);
    CHECK(f3->add(Elem{2}, Elem{2}) == Elem{1});
    auto f2 = Field::create(2);
    CHECK(f2->inv(Elem{1}) == Elem{1});
    CHECK_THROWS_AS(f3->inv(Elem{0}), DivisionByZero);
    CHECK(f3->from_int(-1) == Elem{2});
}

TEST_CASE("extension field arithmetic") {
    auto f4 = Field::create(4);
    CHECK(f4->modulus() == std::vector<std::uint32_t>{1, 1, 1});
    const Elem x{2};
    CHECK(f4->mul(x, x) == Elem{3});
    CHECK(f4->trace(x) == 1);
    CHECK(f4->trace(Elem{0}) == 0);

    CHECK(Field::create(8)->modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});
    CHECK(Field::create(9)->modulus() == std::vector<std::uint32_t>{1, 0, 1});
    CHECK(Field::create(16)->modulus() == std::vector<std::uint32_t>{1, 1, 0, 0, 1});
    CHECK(Field::create(25)->modulus() == std::vector<std::uint32_t>{2, 0, 1});
    CHECK(Field::create(27)->modulus() == std::vector<std::uint32_t>{1, 2, 0, 1});
}

TEST_CASE("field construction errors") {
    CHECK_THROWS_AS(Field::create(6), BadField);
    CHECK_THROWS_AS(Field::create(1), BadField);
    CHECK_THROWS_AS(Field::create(4, {1, 0, 1}), BadField);
    CHECK_THROWS_AS(Field::create(9, {2, 0, 2}), BadField);
    CHECK_NOTHROW(Field::create(9, {2, 2, 1}));
}

TEST_CASE("field elements check their field") {
    auto f3 = Field::create(3);
    auto f5 = Field::create(5);
    FieldElem a(f3, Elem{2});
    FieldElem b(f5, Elem{2});
    CHECK((a + a).elem() == Elem{1});
    CHECK_THROWS_AS(a + b, SpecMismatch);
    CHECK_THROWS_AS(FieldElem(f3, Elem{0}).inv(), DivisionByZero);
    auto other3 = Field::create(3);
    CHECK((a * FieldElem(other3, Elem{2})).elem() == Elem{1});
}

TEST_CASE("field axioms and trace on small fields") {
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u}) {
        CAPTURE(q);
        auto f = Field::create(q);
        for (std::uint32_t a = 0; a < q; ++a) {
            const Elem ea{a};
            CHECK(f->add(ea, f->neg(ea)) == Elem{0});
            if (a != 0) CHECK(f->mul(ea, f->inv(ea)) == Elem{1});
            Elem tr{0}, power = ea;
            for (std::uint32_t i = 0; i < f->r(); ++i) {
                tr = f->add(tr, power);
                power = naive_power(*f, power, f->p());
            }
            CHECK(tr.value == f->trace(ea));
            for (std::uint32_t b = 0; b < q; ++b) {
                const Elem eb{b};
                CHECK(f->trace(f->add(ea, eb)) == (f->trace(ea) + f->trace(eb)) % f->p());
                for (std::uint32_t c = 0; c < q; c += 3) {
                    const Elem ec{c};
                    CHECK(f->mul(ea, f->add(eb, ec)) == f->add(f->mul(ea, eb), f->mul(ea, ec)));
                }
            }
        }
    }
}

TEST_CASE("theta is a nontrivial additive character") {
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 8u, 9u}) {
        CAPTURE(q);
        auto f = Field::create(q);
        const std::uint32_t p = f->p();
        CycInt sum = CycInt::zero(p);
        for (std::uint32_t a = 0; a < q; ++a) {
            sum += CycInt::zeta(p, f->trace(Elem{a}));
            for (std::uint32_t b = 0; b < q; ++b) {
                CHECK(CycInt::zeta(p, f->trace(f->add(Elem{a}, Elem{b}))) ==
                      CycInt::zeta(p, f->trace(Elem{a})) * CycInt::zeta(p, f->trace(Elem{b})));
            }
        }
        CHECK(sum.is_zero());
    }
    auto f3 = Field::create(3);
    CHECK(CharValue::make(0, f3->trace(Elem{1})).to_cyc(3, 3) == CycInt::zeta(3, 1));
    CHECK(CharValue::make(0, Field::create(2)->trace(Elem{1})).to_cyc(2, 2) == CycInt::integer(2, -1));
}

TEST_CASE("cyclotomic integers") {
    CHECK((CycInt::integer(3, 1) + CycInt::zeta(3, 1) + CycInt::zeta(3, 2)).is_zero());
    CHECK(CycInt::zeta(2, 1) * CycInt::zeta(2, 1) == CycInt::integer(2, 1));
    CHECK(CycInt::zeta(3, 1).conjugate() == CycInt::from_coefficients(3, {-1, -1}));
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coef(-5, 5);
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<std::int64_t> c(p - 1);
            for (auto& x : c) x = coef(rng);
            const CycInt x = CycInt::from_coefficients(p, c);
            CHECK(x.conjugate().conjugate() == x);
            if (p == 2) CHECK(x.conjugate() == x);
            CHECK((x * CycInt::integer(p, 1)) == x);
            CHECK(x.scale(3) == x + x + x);
        }
    }
    CHECK_THROWS_AS(CycInt::integer(3, INT64_MAX) + CycInt::integer(3, 1), OverflowError);
    CHECK_THROWS_AS(CycInt::integer(3, INT64_MAX / 2).scale(3), OverflowError);
}

TEST_CASE("character value recognition") {
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 9u}) {
        auto f = Field::create(q);
        for (std::uint32_t m = 0; m < 4; ++m) {
            for (std::uint32_t k = 0; k < f->p(); ++k) {
                const CharValue v = CharValue::make(m, k);
                auto back = v.to_cyc(f->p(), q).as_char_value(q);
                REQUIRE(back.has_value());
                CHECK(*back == v);
            }
        }
    }
    CHECK(CycInt::zero(3).as_char_value(3) == CharValue::zero());
    CHECK_FALSE(CycInt::integer(3, 2).as_char_value(3).has_value());
    CHECK_FALSE((CycInt::integer(3, 1) + CycInt::zeta(3, 1)).as_char_value(3).has_value());
    CHECK(CharValue::make(2, 1).as_integer(2, 2) == -4);
}

TEST_CASE("rank examples") {
    auto f2 = Field::create(2);
    auto f3 = Field::create(3);
    CHECK(rank(*f2, Matrix(3, 3)) == 0);
    CHECK(rank(*f3, Matrix::identity(3)) == 3);
    CHECK(rank(*f2, Matrix(2, 2, {Elem{1}, Elem{1}, Elem{1}, Elem{1}})) == 1);
}

TEST_CASE("nullspace examples") {
    auto f2 = Field::create(2);
    auto f3 = Field::create(3);
    CHECK(nullspace_basis(*f3, Matrix::identity(2)).empty());
    CHECK(nullspace_basis(*f2, Matrix(1, 2)) == std::vector<Vec>{{Elem{1}, Elem{0}}, {Elem{0}, Elem{1}}});
    CHECK(nullspace_basis(*f3, Matrix(1, 2, {Elem{1}, Elem{1}})) == std::vector<Vec>{{Elem{2}, Elem{1}}});
}

TEST_CASE("solve examples") {
    auto f2 = Field::create(2);
    auto f5 = Field::create(5);
    const Vec c{Elem{3}, Elem{4}};
    CHECK(solve(*f5, Matrix::identity(2), c) == c);
    CHECK_FALSE(solve(*f2, Matrix(1, 1), Vec{Elem{1}}).has_value());
    CHECK(solve(*f2, Matrix(1, 2, {Elem{1}, Elem{1}}), Vec{Elem{1}}) == Vec{Elem{1}, Elem{0}});
}

TEST_CASE("perpendicularity examples") {
    auto f3 = Field::create(3);
    CHECK(perp_to_nullspace(*f3, Matrix::identity(2), Vec{Elem{2}, Elem{1}}));
    CHECK_FALSE(perp_to_nullspace(*f3, Matrix(2, 2), Vec{Elem{0}, Elem{1}}));
    const Matrix m(1, 2, {Elem{1}, Elem{0}});
    CHECK(perp_to_nullspace(*f3, m, Vec{Elem{1}, Elem{0}}));
    CHECK_FALSE(perp_to_nullspace(*f3, m, Vec{Elem{0}, Elem{1}}));
}

TEST_CASE("random linear algebra properties") {
    std::mt19937 rng(2024);
    for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
        auto f = Field::create(q);
        for (int trial = 0; trial < 60; ++trial) {
            std::uniform_int_distribution<std::size_t> dim(1, 7);
            const std::size_t rows = dim(rng), cols = dim(rng);
            const Matrix m = random_matrix(*f, rows, cols, rng, trial % 2 ? 0.3 : 0.7);
            const auto basis = nullspace_basis(*f, m);
            CHECK(rank(*f, m) + basis.size() == cols);
            for (const auto& v : basis) {
                const Vec image = mat_vec(*f, m, v);
                CHECK(std::all_of(image.begin(), image.end(), [](Elem e) { return e.is_zero(); }));
            }

            Vec c(rows);
            std::uniform_int_distribution<std::uint32_t> elem(0, q - 1);
            for (auto& e : c) e = Elem{elem(rng)};
            auto x = solve(*f, m, c);
            Matrix aug(rows, cols + 1);
            for (std::size_t i = 0; i < rows; ++i) {
                for (std::size_t j = 0; j < cols; ++j) aug(i, j) = m(i, j);
                aug(i, cols) = c[i];
            }
            if (x) {
                CHECK(mat_vec(*f, m, *x) == c);
            } else {
                CHECK(rank(*f, aug) > rank(*f, m));
            }

            Vec b(cols);
            for (auto& e : b) e = Elem{elem(rng)};
            const bool limit = (q == 2 && basis.size() <= 8) || (q == 3 && basis.size() <= 5);
            if (limit) {
                std::uint64_t total = 1;
                for (std::size_t k = 0; k < basis.size(); ++k) total *= q;
                bool perp = true;
                for (std::uint64_t code = 0; code < total; ++code) {
                    if (!dot(*f, combination(*f, basis, code, cols), b).is_zero()) perp = false;
                }
                CHECK(perp == perp_to_nullspace(*f, m, b));
            }
        }
    }
}
