#include <doctest.h>

#include <random>

#include "lie2/error.hpp"
#include "lie2/liealg.hpp"
#include "lie2/linalg.hpp"

using namespace lie2;

namespace {

Matrix random_matrix(const FieldPtr& f, std::size_t r, std::size_t c, std::mt19937_64& rng, int zero_bias = 0) {
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m.at(i, j) = (zero_bias && rng() % zero_bias) ? 0 : static_cast<Elem>(rng() % f->size());
    return m;
}

Elem eval(const Field& f, const Polynomial& p, Elem x) {
    Elem r = 0;
    for (int i = p.degree(); i >= 0; --i) r = f.mul(r, x) ^ p.coeff(static_cast<std::size_t>(i));
    return r;
}

}  // namespace

TEST_SUITE("linalg") {
    TEST_CASE("packed and scalar elimination agree") {
        std::mt19937_64 rng(5);
        FieldPtr f = Field::gf2();
        for (int trial = 0; trial < 40; ++trial) {
            Matrix m = random_matrix(f, 30 + trial % 7, 70 + trial, rng, trial % 3 + 1);
            RankNullspace a = rank_nullspace(m, RowReducer::Backend::Packed);
            RankNullspace b = rank_nullspace(m, RowReducer::Backend::Scalar);
            CHECK(a.rank == b.rank);
            CHECK(a.basis == b.basis);
            CHECK(a.rank + a.basis.size() == m.cols());
            for (const auto& v : a.basis) CHECK(is_zero(m.apply(v)));
        }
    }

    TEST_CASE("nullspace over extension fields") {
        std::mt19937_64 rng(9);
        for (int k : {2, 3, 8}) {
            FieldPtr f = Field::gf2k(k);
            Matrix m = random_matrix(f, 6, 11, rng, 2);
            RankNullspace ns = rank_nullspace(m);
            CHECK(ns.rank == rank(m.transpose()));
            for (const auto& v : ns.basis) CHECK(is_zero(m.apply(v)));
        }
    }

    TEST_CASE("inverse and determinant") {
        std::mt19937_64 rng(3);
        FieldPtr f = Field::gf2k(4);
        for (int trial = 0; trial < 20; ++trial) {
            Matrix m = random_matrix(f, 5, 5, rng);
            auto inv = inverse(m);
            CHECK(inv.has_value() == (determinant(m) != 0));
            if (inv) CHECK(m * *inv == Matrix::identity(f, 5));
        }
        Matrix singular = Matrix::from_rows(f, {{1, 2}, {2, f->mul(2, 2)}});
        CHECK(determinant(singular) == 0);
        CHECK_FALSE(inverse(singular).has_value());
    }

    TEST_CASE("solve_linear") {
        FieldPtr f = Field::gf2k(3);
        Matrix m = Matrix::from_rows(f, {{1, 3, 0}, {0, 1, 5}});
        Vec b = {4, 7};
        auto x = solve_linear(m, b);
        REQUIRE(x.has_value());
        CHECK(m.apply(*x) == b);
        Matrix z = Matrix::from_rows(f, {{1, 1}, {1, 1}});
        CHECK_FALSE(solve_linear(z, {1, 0}).has_value());
    }

    TEST_CASE("char poly agrees with det(lambda I + M) at every field point") {
        std::mt19937_64 rng(11);
        FieldPtr f = Field::gf2k(4);
        for (int trial = 0; trial < 15; ++trial) {
            const std::size_t n = 2 + trial % 6;
            Matrix m = random_matrix(f, n, n, rng, trial % 2 + 1);
            Polynomial p = char_poly(m);
            CHECK(p.degree() == static_cast<int>(n));
            CHECK(p.coeff(n) == 1);
            for (Elem l = 0; l < f->size(); ++l) CHECK(eval(*f, p, l) == determinant(m + Matrix::identity(f, n).scaled(l)));
        }
    }

    TEST_CASE("char poly of a nilpotent Jordan block") {
        FieldPtr f = Field::gf2();
        Matrix j(f, 4, 4);
        for (int i = 0; i < 3; ++i) j.at(i, i + 1) = 1;
        CHECK(char_poly(j) == Polynomial::monomial(f, 4));
    }

    TEST_CASE("subspace operations") {
        FieldPtr f = Field::gf2();
        Subspace a = Subspace::span(f, 4, {{1, 1, 0, 0}, {0, 1, 1, 0}});
        Subspace b = Subspace::span(f, 4, {{1, 0, 1, 0}, {0, 0, 0, 1}});
        CHECK(a.intersect(b).dim() == 1);
        CHECK(a.intersect(b).contains(Vec{1, 0, 1, 0}));
        CHECK(a.sum(b).dim() == 3);
        CHECK(a.sum(b) == Subspace::span(f, 4, {{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 0, 1}}));
        Vec v = {1, 0, 1, 0};
        CHECK(a.from_coords(a.coords(v)) == v);
        CHECK_THROWS_AS(a.coords(Vec{0, 0, 0, 1}), UsageError);
    }
}
