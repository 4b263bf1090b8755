#include <doctest.h>

#include "lie2/error.hpp"
#include "lie2/field.hpp"

using namespace lie2;

TEST_SUITE("field") {
    TEST_CASE("built-in moduli are irreducible and of the right degree") {
        for (int k = 1; k <= Field::kMaxDegree; ++k) {
            std::uint32_t m = Field::default_modulus(k);
            CHECK((m >> k) == 1u);
            CHECK(gf2_poly_irreducible(m, k));
        }
    }

    TEST_CASE("log tables agree with schoolbook multiplication") {
        for (int k = 1; k <= 8; ++k) {
            FieldPtr f = Field::gf2k(k);
            for (Elem a = 0; a < f->size(); ++a)
                for (Elem b = 0; b < f->size(); b += (k > 6 ? 7 : 1))
                    REQUIRE(f->mul(a, b) == gf2_poly_mulmod(a, b, f->modulus(), k));
        }
    }

    TEST_CASE("inverse, square root, Frobenius") {
        for (int k : {1, 2, 3, 6, 11}) {
            FieldPtr f = Field::gf2k(k);
            for (Elem a = 1; a < std::min<Elem>(f->size(), 600); ++a) {
                CHECK(f->mul(a, f->inv(a)) == 1);
                CHECK(f->sqr(f->sqrt(a)) == a);
                CHECK(f->pow(a, f->size() - 1) == 1);
            }
            CHECK_THROWS_AS(f->inv(0), DomainError);
        }
    }

    TEST_CASE("Artin-Schreier roots exist exactly for trace zero") {
        FieldPtr f = Field::gf2k(4);
        for (Elem c = 0; c < f->size(); ++c) {
            auto d = f->artin_schreier(c);
            CHECK(d.has_value() == (f->trace(c) == 0));
            if (d) CHECK((f->sqr(*d) ^ *d) == c);
        }
    }

    TEST_CASE("names and element syntax") {
        CHECK(Field::parse("gf2")->degree() == 1);
        CHECK(Field::parse("gf4")->degree() == 2);
        CHECK(Field::parse("gf64")->degree() == 6);
        CHECK(Field::parse("gf2e5")->degree() == 5);
        CHECK(Field::parse("gf2e5")->name() == "gf2e5");
        CHECK_THROWS_AS(Field::parse("gf3"), UsageError);
        CHECK_THROWS_AS(Field::parse("gf2e17"), UsageError);
        FieldPtr f = Field::gf2k(3);
        for (Elem a = 0; a < f->size(); ++a) CHECK(f->parse_elem(f->format(a)) == a);
        CHECK(f->format(0b101) == "t^2+1");
        CHECK(f->parse_elem("5") == 5);
        CHECK_THROWS_AS(f->parse_elem("8"), UsageError);
    }

    TEST_CASE("custom moduli are checked") {
        CHECK_THROWS_AS(Field::with_modulus(2, 0b101), UsageError);  // t^2 + 1 = (t + 1)^2
        FieldPtr f = Field::with_modulus(3, 0b1101);
        CHECK(f->mul(0b10, 0b100) == 0b101);
    }

    TEST_CASE("doubled field embeds the small one") {
        FieldPtr f = Field::gf2k(2);
        const auto& e = f->doubled();
        CHECK(e.big->degree() == 4);
        for (Elem a = 0; a < 4; ++a)
            for (Elem b = 0; b < 4; ++b) CHECK(e.image[f->mul(a, b)] == e.big->mul(e.image[a], e.image[b]));
    }
}
