#include <doctest.h>

#include "lie2/error.hpp"
#include "lie2/known.hpp"

using namespace lie2;

TEST_SUITE("known") {
    TEST_CASE("kl: dimensions, axioms and the vect realization") {
        FieldPtr f = Field::gf2();
        for (int n = 2; n <= 5; ++n) {
            LieSuperalgebra s = kl(f, n);
            const std::size_t half = std::size_t{1} << (n - 1);
            CHECK(s.dim_even() == half + 1);
            CHECK(s.dim_odd() == half);
            CHECK(validate_super(s).ok);
            CHECK(kl_from_vect(f, n) == s);
        }
    }

    TEST_CASE("the literal table violates super Jacobi") {
        FieldPtr f = Field::gf2();
        for (int n = 3; n <= 4; ++n) CHECK_FALSE(validate_super(kl_printed(f, n)).ok);
    }

    TEST_CASE("q(vect) is valid and differs from kl") {
        FieldPtr f = Field::gf2();
        for (int n = 3; n <= 4; ++n) {
            LieSuperalgebra q = q_vect(f, n);
            CHECK(validate_super(q).ok);
            CHECK(q.dim_even() == kl(f, n).dim_even());
            CHECK(q.dim_odd() == kl(f, n).dim_odd());
            CHECK_FALSE(fingerprint(q) == fingerprint(kl(f, n)));
            // In q, ad of an even element acts on the odd part as on the even part.
            Vec x = unit_vec(q.dim(), 1);
            CHECK(q_discriminant(q, x).verdict == QVerdict::q_like);
        }
    }

    TEST_CASE("index helpers") {
        CHECK(kl_even_index(3, -2) == 0);
        CHECK(kl_even_index(3, 2) == 4);
        CHECK(kl_odd_index(3, -1) == 5);
        CHECK(kl_odd_index(3, 2) == 8);
    }

    TEST_CASE("an identity map is a homomorphism; a parity swap is not") {
        FieldPtr f = Field::gf2();
        LieSuperalgebra s = kl(f, 3);
        CHECK(is_super_homomorphism(s, s, Matrix::identity(f, s.dim())));
        Matrix p = Matrix::identity(f, s.dim());
        p.at(0, 0) = 0, p.at(s.dim() - 1, s.dim() - 1) = 0;
        p.at(s.dim() - 1, 0) = 1, p.at(0, s.dim() - 1) = 1;
        CHECK_FALSE(is_super_homomorphism(s, s, p));
    }

    TEST_CASE("named superalgebras") {
        FieldPtr f = Field::gf2();
        CHECK(make_known_super(f, "kl", 4) == kl(f, 4));
        CHECK(validate_super(make_known_super(f, "oo-IPi", 1, 2)).ok);
        CHECK(validate_super(make_known_super(f, "pe", 2)).ok);
        CHECK(validate_super(make_known_super(f, "k", 3)).ok);
        CHECK_THROWS_AS(make_known_super(f, "oo-IPi", 1, 3), UsageError);
        CHECK_THROWS_AS(make_known_super(f, "nonesuch", 1), UsageError);
    }

    TEST_CASE("(1|2) small cases") {
        FieldPtr f = Field::gf2();
        CHECK(vect2_small_case(f, 0, 0).ok());
        CHECK(vect2_small_case(f, 1, 1).ok());
        CHECK_THROWS_AS(vect2_small_case(f, 1, 0), UsageError);
    }
}
