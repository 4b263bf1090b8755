#include <doctest.h>

#include <random>

#include "lie2/classical.hpp"
#include "lie2/error.hpp"
#include "lie2/liealg.hpp"

using namespace lie2;

namespace {

LieAlgebra heisenberg(const FieldPtr& f) {
    StructureConstants sc(f, 3);
    sc.set_pair(0, 1, {{2, 1}});
    return LieAlgebra(sc, {"x", "y", "z"});
}

Matrix mat_unit(const FieldPtr& f, std::size_t N, std::size_t i, std::size_t j) {
    Matrix m(f, N, N);
    m.at(i, j) = 1;
    return m;
}

}  // namespace

TEST_SUITE("liealg") {
    TEST_CASE("alternation is enforced") {
        FieldPtr f = Field::gf2();
        StructureConstants sc(f, 2);
        sc.add(0, 1, 0, 1);
        CHECK_THROWS_AS(LieAlgebra{sc}, UsageError);
        StructureConstants diag(f, 2);
        diag.add(0, 0, 1, 1);
        CHECK_THROWS_AS(LieAlgebra{diag}, UsageError);
    }

    TEST_CASE("validate_lie finds Jacobi violations") {
        FieldPtr f = Field::gf2();
        StructureConstants sc(f, 3);
        sc.set_pair(0, 1, {{1, 1}});
        sc.set_pair(0, 2, {{0, 1}});
        sc.set_pair(1, 2, {{1, 1}});
        ValidationReport r = validate_lie(sc);
        CHECK_FALSE(r.ok);
        CHECK(r.failures > 0);
        CHECK(validate_lie(heisenberg(f)).ok);
    }

    TEST_CASE("gl(N) bracket is the matrix commutator") {
        for (int k : {1, 2}) {
            FieldPtr f = Field::gf2k(k);
            const std::size_t N = 3;
            LieAlgebra g = make_gl(f, N);
            CHECK(validate_lie(g).ok);
            std::mt19937_64 rng(1);
            for (int t = 0; t < 10; ++t) {
                Vec x(N * N), y(N * N);
                for (auto& e : x) e = static_cast<Elem>(rng() % f->size());
                for (auto& e : y) e = static_cast<Elem>(rng() % f->size());
                Matrix X = unflatten(f, N, x), Y = unflatten(f, N, y);
                CHECK(unflatten(f, N, g.bracket(x, y)) == commutator(X, Y));
            }
            CHECK(commutator(mat_unit(f, N, 0, 1), mat_unit(f, N, 1, 0)) == mat_unit(f, N, 0, 0) + mat_unit(f, N, 1, 1));
        }
    }

    TEST_CASE("Heisenberg invariants") {
        FieldPtr f = Field::gf2();
        LieAlgebra h = heisenberg(f);
        CHECK(center(h) == Subspace::span(f, 3, {{0, 0, 1}}));
        CHECK(derivation_space(h).size() == 6);
        for (const auto& d : derivation_space(h)) CHECK(is_derivation(h, d));
        LieFingerprint fp = fingerprint(h);
        CHECK(fp.solvable);
        CHECK(fp.center_dim == 1);
        CHECK(fp.lower_central == std::vector<std::size_t>{3, 1, 0, 0});
    }

    TEST_CASE("derivations of an abelian algebra are gl") {
        FieldPtr f = Field::gf2k(2);
        LieAlgebra a(StructureConstants(f, 3));
        CHECK(derivation_space(a).size() == 9);
    }

    TEST_CASE("derivation solver backends agree") {
        FieldPtr f = Field::gf2();
        LieAlgebra g = make_gl(f, 3);
        auto a = derivation_space(g, RowReducer::Backend::Packed);
        auto b = derivation_space(g, RowReducer::Backend::Scalar);
        CHECK(a == b);
        std::vector<Vec> flat;
        for (const auto& d : a) flat.push_back(d.flatten());
        Subspace der = Subspace::span(f, 81, flat);
        for (std::size_t i = 0; i < 9; ++i) CHECK(der.contains(g.ad_basis(i).flatten()));
    }

    TEST_CASE("2-powers in gl(N) are matrix squares modulo the center") {
        FieldPtr f = Field::gf2();
        const std::size_t N = 3;
        LieAlgebra g = make_gl(f, N);
        std::mt19937_64 rng(4);
        for (int t = 0; t < 10; ++t) {
            Vec x(N * N);
            for (auto& e : x) e = static_cast<Elem>(rng() & 1);
            auto z = two_power(g, x);
            REQUIRE(z.has_value());
            Matrix ad = g.ad(x);
            CHECK(g.ad(*z) == ad * ad);
            Matrix X = unflatten(f, N, x);
            Matrix diff = unflatten(f, N, *z) + X * X;
            CHECK(center(g).contains(diff.flatten()));
        }
    }

    TEST_CASE("quotient of gl(2) by its center") {
        FieldPtr f = Field::gf2();
        LieAlgebra g = make_gl(f, 2);
        Quotient q = quotient_map(g, center(g));
        CHECK(q.algebra.dim() == 3);
        CHECK(validate_lie(q.algebra).ok);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) {
                Vec x = unit_vec(4, i), y = unit_vec(4, j);
                CHECK(q.projection.apply(g.bracket(x, y)) == q.algebra.bracket(q.projection.apply(x), q.projection.apply(y)));
            }
    }

    TEST_CASE("series and solvability") {
        FieldPtr f = Field::gf2();
        LieAlgebra g = make_gl(f, 2);
        // gl(2) in characteristic 2 is solvable: [gl, gl] = sl(2) and [sl(2), sl(2)] = center.
        CHECK(is_solvable(g, Subspace::whole(f, 4)));
        auto d = series(g, Subspace::whole(f, 4), SeriesKind::Derived);
        CHECK(series_string(d) == "3,1,0");
    }
}
