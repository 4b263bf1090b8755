#include <doctest.h>

#include "lie2/classical.hpp"
#include "lie2/divpow.hpp"
#include "lie2/error.hpp"
#include "lie2/superalgebra.hpp"

using namespace lie2;

namespace {

Matrix unit(const FieldPtr& f, std::size_t N, std::size_t i, std::size_t j) {
    Matrix m(f, N, N);
    m.at(i, j) = 1;
    return m;
}

}  // namespace

TEST_SUITE("super") {
    TEST_CASE("gl(1|1) from supermatrices") {
        FieldPtr f = Field::gf2();
        MatrixSuperalgebra m = matrix_superalgebra(f, {0, 1}, {unit(f, 2, 0, 0), unit(f, 2, 1, 1), unit(f, 2, 0, 1), unit(f, 2, 1, 0)});
        CHECK(m.s.dim_even() == 2);
        CHECK(m.s.dim_odd() == 2);
        CHECK(validate_super(m.s).ok);
        // (E_01)^2 = 0 and [E_01, E_10] = E_00 + E_11.
        Vec x = unit_vec(4, 2), y = unit_vec(4, 3);
        CHECK(is_zero(m.s.square(x)));
        Vec id = matrix_coords(m, unit(f, 2, 0, 0) + unit(f, 2, 1, 1));
        CHECK(m.s.bracket(x, y) == id);
        CHECK(m.s.square(add(x, y)) == id);
    }

    TEST_CASE("the square polarizes to the odd bracket") {
        FieldPtr f = Field::gf2k(2);
        SuperLabel l;
        l.kind = SuperLabel::Kind::oo;
        l.a = 1, l.b = 2;
        l.form_odd = FormKind::Pi;
        LieSuperalgebra s = label_superalgebra(f, l);
        const std::size_t d0 = s.dim_even();
        for (std::size_t i = 0; i < s.dim_odd(); ++i)
            for (std::size_t j = 0; j < s.dim_odd(); ++j) {
                Vec x = scaled(*f, 2, unit_vec(s.dim(), d0 + i)), y = unit_vec(s.dim(), d0 + j);
                Vec lhs = add(add(s.square(add(x, y)), s.square(x)), s.square(y));
                CHECK(lhs == s.bracket(x, y));
            }
    }

    TEST_CASE("validate_super catches a broken square") {
        FieldPtr f = Field::gf2();
        MatrixSuperalgebra m = matrix_superalgebra(f, {0, 1}, {unit(f, 2, 0, 0), unit(f, 2, 1, 1), unit(f, 2, 0, 1), unit(f, 2, 1, 0)});
        LieSuperalgebra s = m.s;
        s.set_square(0, {{0, 1}});
        CHECK_FALSE(validate_super(s).ok);
    }

    TEST_CASE("grading operators must be idempotent derivations") {
        FieldPtr f = Field::gf2();
        LieAlgebra g = make_vect(f, 2, true);
        CHECK_THROWS_AS(GradingOperator::make(g, Matrix::identity(f, 3)), UsageError);
        Matrix bad(f, 3, 3);
        bad.at(0, 0) = 1;
        CHECK_THROWS_AS(GradingOperator::make(g, bad), UsageError);
    }

    TEST_CASE("method-2 superization of a trivial grading is the algebra itself") {
        FieldPtr f = Field::gf2();
        LieAlgebra g = make_vect(f, 3, true);
        RestrictedClosure c = one_step_closure({g, GradingOperator::make(g, Matrix(f, g.dim(), g.dim()))});
        CHECK(c.h.dim() == g.dim());
        LieSuperalgebra s = method2_superize(c);
        CHECK(s.dim_odd() == 0);
        CHECK(s.even_part().sc() == g.sc());
    }

    TEST_CASE("closure adjoins outer squares") {
        FieldPtr f = Field::gf2();
        for (Elem c1 : {0u, 1u}) {
            GeneratingFunction u = GeneratingFunction::make(f, 3, {0, c1, 0});
            LieAlgebra g = make_vect(f, 3, true);
            RestrictedClosure c = one_step_closure({g, GradingOperator::make(g, vect_grading(u))});
            CHECK(validate_lie(c.h).ok);
            for (std::size_t i = 0; i < c.odd_basis.size(); ++i) {
                Matrix ad = c.h.ad(c.odd_basis[i]);
                CHECK(c.h.ad(c.odd_squares[i]) == ad * ad);
            }
            LieSuperalgebra s = method2_superize(c);
            CHECK(validate_super(s).ok);
            CHECK(s.dim_even() + s.dim_odd() == c.h.dim());
        }
    }

    TEST_CASE("center, derived algebra and quotients") {
        FieldPtr f = Field::gf2();
        SuperLabel l;
        l.kind = SuperLabel::Kind::sl;
        l.a = 2, l.b = 2;
        LieSuperalgebra s = label_superalgebra(f, l);
        GradedSubspace z = super_center(s);
        CHECK(z.sdim_even() == 1);  // the identity is supertraceless for (2|2)
        LieSuperalgebra q = quotient_super(s, z);
        CHECK(q.dim_even() == s.dim_even() - 1);
        CHECK(validate_super(q).ok);
        GradedSubspace d = derived_super(s);
        LieSuperalgebra sub = sub_superalgebra(s, d);
        CHECK(validate_super(sub).ok);
    }

    TEST_CASE("fingerprints separate superdimensions") {
        FieldPtr f = Field::gf2();
        SuperLabel a, b;
        a.kind = b.kind = SuperLabel::Kind::oo;
        a.a = 3, a.b = 2;
        b.a = 3, b.b = 2;
        b.form_odd = FormKind::Pi;
        SuperFingerprint fa = fingerprint(label_superalgebra(f, a)), fb = fingerprint(label_superalgebra(f, b));
        CHECK(fa.dim_even == fb.dim_even);
        CHECK_FALSE(fa.str().empty());
    }
}
