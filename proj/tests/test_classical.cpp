#include <doctest.h>

#include "lie2/classical.hpp"
#include "lie2/error.hpp"

using namespace lie2;

TEST_SUITE("classical") {
    TEST_CASE("dimensions of the classical series") {
        FieldPtr f = Field::gf2();
        for (std::size_t N = 2; N <= 6; ++N) {
            CHECK(make_classical(f, Series::gl, N).algebra.dim() == N * N);
            CHECK(make_classical(f, Series::sl, N).algebra.dim() == N * N - 1);
            // With the identity form, o(N) is the symmetric matrices and o' the zero-diagonal ones.
            CHECK(make_classical(f, Series::o, N).algebra.dim() == N * (N + 1) / 2);
            CHECK(make_classical(f, Series::o1, N).algebra.dim() == N * (N - 1) / 2);
        }
        CHECK(make_classical(f, Series::psl, 4).algebra.dim() == 14);
        CHECK_THROWS_AS(make_classical(f, Series::psl, 5), UsageError);  // sl(odd) has no center
    }

    TEST_CASE("classical algebras satisfy the Lie axioms") {
        for (int k : {1, 2}) {
            FieldPtr f = Field::gf2k(k);
            for (Series s : {Series::sl, Series::psl, Series::o1, Series::o2, Series::o2_mod_c, Series::tilde_o}) {
                ClassicalAlgebra c = make_classical(f, s, 4);
                CHECK_MESSAGE(validate_lie(c.algebra).ok, c.name);
            }
        }
    }

    TEST_CASE("form classification and transitions") {
        FieldPtr f = Field::gf2();
        CHECK(classify_form(Matrix::identity(f, 3)) == FormKind::I);
        CHECK(classify_form(BilinearForm::split(f, 4).gram) == FormKind::Pi);
        CHECK(classify_form(Matrix::identity(f, 4)) == FormKind::I);
        Matrix B = Matrix::identity(f, 3);
        auto P = find_transition(B, {{FormKind::I, 1}, {FormKind::Pi, 2}});
        REQUIRE(P.has_value());
        CHECK(P->transpose() * B * *P == block_gram(f, {{FormKind::I, 1}, {FormKind::Pi, 2}}));
        // An alternating form has no non-isotropic vectors.
        CHECK_FALSE(find_transition(BilinearForm::split(f, 4).gram, {{FormKind::I, 4}}).has_value());
        CHECK_THROWS_AS(BilinearForm::split(f, 3), UsageError);
    }

    TEST_CASE("series names round-trip") {
        for (Series s : {Series::gl, Series::sl, Series::psl, Series::o, Series::o1, Series::o2, Series::o2_mod_c,
                         Series::tilde_o})
            CHECK(parse_series(series_name(s)) == s);
        CHECK_THROWS_AS(parse_series("sp"), UsageError);
    }

    TEST_CASE("projection reps of sl(4) are verified") {
        FieldPtr f = Field::gf2();
        ProjectionReps reps = projection_reps(f, Series::sl, 4);
        ClassicalAlgebra g = reps_algebra(f, Series::sl, 4);
        CHECK(reps.reps.size() == 3);
        for (const auto& r : reps.reps) {
            CHECK(r.A * r.A == r.A);
            ProjectionCheck pc = verify_projection(r, g);
            CHECK_MESSAGE(pc.report.ok, r.label.str());
            RepSuperization s = superize_rep(r, g);
            CHECK(s.sdim_match);
            CHECK(s.valid.ok);
        }
    }

    TEST_CASE("labelled superalgebras") {
        FieldPtr f = Field::gf2();
        SuperLabel l;
        l.kind = SuperLabel::Kind::sl;
        l.a = 2, l.b = 1;
        LieSuperalgebra s = label_superalgebra(f, l);
        CHECK(s.dim_even() == 4);  // gl(2) + gl(1) minus the supertrace condition
        CHECK(s.dim_odd() == 4);
        CHECK(validate_super(s).ok);
        SuperLabel pe;
        pe.kind = SuperLabel::Kind::pe;
        pe.a = 2, pe.b = 1;
        CHECK_THROWS_AS(label_superalgebra(f, pe), UsageError);
    }

    TEST_CASE("a wrong projection is rejected") {
        FieldPtr f = Field::gf2();
        ClassicalAlgebra g = reps_algebra(f, Series::o1, 3);
        ProjectionRep bad;
        bad.A = Matrix::identity(f, 3);
        bad.A.at(0, 1) = 1;  // not idempotent
        bad.basis = Matrix::identity(f, 3);
        bad.dim_image = 3;
        CHECK_FALSE(verify_projection(bad, g).report.ok);
    }
}
