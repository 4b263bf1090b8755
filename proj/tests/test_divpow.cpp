#include <doctest.h>

#include "lie2/divpow.hpp"
#include "lie2/error.hpp"

using namespace lie2;

namespace {

// binom(a, b) mod 2 from Pascal's rule.
int pascal(int a, int b) {
    std::vector<std::vector<int>> t(a + 1, std::vector<int>(a + 1, 0));
    for (int i = 0; i <= a; ++i) {
        t[i][0] = 1;
        for (int j = 1; j <= i; ++j) t[i][j] = (t[i - 1][j - 1] + (j < i ? t[i - 1][j] : 0)) & 1;
    }
    return b <= a ? t[a][b] : 0;
}

}  // namespace

TEST_SUITE("divpow") {
    TEST_CASE("Lucas test agrees with Pascal's triangle") {
        for (int a = 0; a < 40; ++a)
            for (int b = 0; b <= a; ++b) CHECK(binom2(a, b) == pascal(a, b));
    }

    TEST_CASE("divided power multiplication") {
        FieldPtr f = Field::gf2();
        const int n = 4;
        for (std::size_t r = 0; r < 16; ++r)
            for (std::size_t s = 0; s < 16; ++s) {
                DividedPoly p = DividedPoly::monomial(f, n, r) * DividedPoly::monomial(f, n, s);
                DividedPoly want = (r + s < 16 && binom2(r + s, r)) ? DividedPoly::monomial(f, n, r + s) : DividedPoly(f, n);
                CHECK(p == want);
            }
        // x^(1) x^(1) = 2 x^(2) = 0 and (x^(1))^(k) = x^(k).
        DividedPoly x = DividedPoly::monomial(f, n, 1);
        CHECK((x * x).is_zero());
        CHECK(x.divided_power(5) == DividedPoly::monomial(f, n, 5));
        CHECK(DividedPoly::monomial(f, n, 5).partial() == DividedPoly::monomial(f, n, 4));
    }

    TEST_CASE("vect(1;n) dimensions and the Witt bracket") {
        FieldPtr f = Field::gf2();
        for (int n = 1; n <= 5; ++n) {
            LieAlgebra v = make_vect(f, n, false), v1 = make_vect(f, n, true);
            CHECK(v.dim() == (std::size_t{1} << n));
            CHECK(v1.dim() == (std::size_t{1} << n) - 1);
            CHECK(validate_lie(v).ok);
        }
        // [x^(a) d, x^(b) d] = (binom(a+b-1, a) - binom(a+b-1, b)) x^(a+b-1) d
        LieAlgebra v = make_vect(f, 3, false);
        for (std::size_t a = 0; a < 8; ++a)
            for (std::size_t b = 0; b < 8; ++b) {
                Vec want(8, 0);
                if (a + b >= 1 && a + b - 1 < 8) want[a + b - 1] = static_cast<Elem>(binom2(a + b - 1, a) ^ binom2(a + b - 1, b));
                CHECK(v.bracket(unit_vec(8, a), unit_vec(8, b)) == want);
            }
    }

    TEST_CASE("2-map of v_{n+1} realizes (ad)^2") {
        FieldPtr f = Field::gf2k(2);
        ExtendedVect v(f, 3);
        for (std::size_t i = 1; i < v.dim(); ++i)
            for (Elem c : {1u, 2u}) {
                Vec x = scaled(*f, c, unit_vec(v.dim(), i));
                Matrix ad = v.algebra().ad(x);
                CHECK(v.algebra().ad(v.two_map(x)) == ad * ad);
            }
        CHECK_THROWS_AS(v.two_map(unit_vec(v.dim(), 0)), UsageError);
    }

    TEST_CASE("grading operators are idempotent derivations") {
        for (int k : {1, 2}) {
            FieldPtr f = Field::gf2k(k);
            for (Elem c0 = 0; c0 < f->size(); ++c0)
                for (Elem c1 = 0; c1 < f->size(); ++c1)
                    for (Elem c2 = 0; c2 < f->size(); ++c2) {
                        GeneratingFunction u = GeneratingFunction::make(f, 3, {c0, c1, c2});
                        CHECK(satisfies_u_prop(u.poly()));
                        Matrix U = vect_grading(u);
                        LieAlgebra g = make_vect(f, 3, true);
                        CHECK(U * U == U);
                        CHECK(is_derivation(g, U));
                    }
        }
    }

    TEST_CASE("generating function syntax") {
        FieldPtr f = Field::gf2k(2);
        GeneratingFunction u = GeneratingFunction::parse(f, 3, "0,t,1");
        CHECK(u.c == Vec{0, 2, 1});
        CHECK(GeneratingFunction::parse(Field::gf2(), 4, "0101").c == Vec{0, 1, 0, 1});
        CHECK(GeneratingFunction::parse(Field::gf2(), 4, "0101").str() == "(0101)");
        CHECK_THROWS_AS(GeneratingFunction::parse(f, 3, "0,1"), UsageError);
    }

    TEST_CASE("d^2 char poly formula at small heights") {
        FieldPtr f = Field::gf2();
        for (Elem c1 = 0; c1 < 2; ++c1)
            for (Elem c2 = 0; c2 < 2; ++c2) {
                GeneratingFunction u = GeneratingFunction::make(f, 3, {0, c1, c2});
                CHECK(d2_charpoly(u) == conjectured_d2_charpoly(u));
            }
        CHECK(conjectured_d2_charpoly(GeneratingFunction::make(f, 3, {0, 0, 0})) == Polynomial::monomial(f, 4));
    }

    TEST_CASE("rescale orbits and Burnside") {
        RescaleOrbits r = rescale_orbits(Field::gf2k(2), 3);
        std::size_t total = 0;
        for (const auto& o : r.orbits) total += o.size();
        CHECK(total == 16);
        CHECK(r.orbits.size() == r.burnside);
    }

    TEST_CASE("Sierpinski pattern for n = 2") {
        SievePattern p = sierpinski_pattern(2);
        CHECK(p.size == 3);
        CHECK(p.derivation_dim == 5);
        CHECK(p.grid() == "***\n*_*\n***\n");
    }
}
