#include <doctest.h>

#include "lie2/error.hpp"
#include "lie2/experiments.hpp"

using namespace lie2;

TEST_SUITE("experiments") {
    TEST_CASE("table for n = 2 and 3") {
        VectTable t2 = vect_table(2);
        CHECK_FALSE(t2.rows.empty());
        VectTable t3 = vect_table(3);
        bool found = false;
        for (const auto& r : t3.rows)
            if (r.lower == std::vector<std::size_t>{3, 2, 1, 0}) {
                found = true;
                CHECK(r.tag == "solv");
            }
        CHECK(found);
    }

    TEST_CASE("superdimension law for small n") {
        for (int n = 2; n <= 4; ++n) CHECK(superdimension_law(Field::gf2(), n).ok());
        CHECK(superdimension_law(Field::gf2k(2), 3, 20, 5).ok());
    }

    TEST_CASE("char poly runs are reproducible") {
        CharpolyReport a = verify_charpoly(Field::gf2k(3), 4, 30, 99), b = verify_charpoly(Field::gf2k(3), 4, 30, 99);
        CHECK(a.ok());
        CHECK(a.tested == b.tested);
        CHECK(verify_charpoly(Field::gf2(), 3).exhaustive);
    }

    TEST_CASE("enumeration bound") {
        LieAlgebra g = make_vect(Field::gf2k(3), 3, true);
        CHECK_THROWS_AS(idempotent_derivations(g, 100), ResourceError);
    }

    TEST_CASE("gradings of vect^(1)(1;2) over GF(2)") {
        GradingEnumeration e = enumerate_gradings(make_vect(Field::gf2(), 2, true));
        CHECK(e.derivation_dim == 5);
        CHECK(e.classes.size() == 3);
        std::size_t members = 0;
        for (const auto& c : e.classes) members += c.members.size();
        CHECK(members == 5);  // four U(c_0, c_1) and U = 0
    }

    TEST_CASE("deformation and solvability for n = 3") {
        FieldPtr f = Field::gf2();
        for (Elem c1 = 0; c1 < 2; ++c1)
            for (Elem c2 = 0; c2 < 2; ++c2) {
                GeneratingFunction u = GeneratingFunction::make(f, 3, {0, c1, c2});
                CHECK(check_deformation(u).ok());
                CHECK(even_part_solvable(u));
            }
        CHECK_THROWS_AS(check_deformation(GeneratingFunction::make(f, 3, {1, 0, 0})), UsageError);
    }

    TEST_CASE("rescale orbits do not depend on the seed") {
        RescaleCheck a = rescale_check(Field::gf2k(2), 3, 1), b = rescale_check(Field::gf2k(2), 3, 77);
        CHECK(a.ok());
        CHECK(b.ok());
        CHECK(a.orbits == b.orbits);
    }
}
