#include <doctest.h>

#include "lie2/classical.hpp"
#include "lie2/error.hpp"
#include "lie2/json_io.hpp"
#include "lie2/known.hpp"

using namespace lie2;

TEST_SUITE("json") {
    TEST_CASE("Lie algebra round trip") {
        for (int k : {1, 3}) {
            LieAlgebra g = make_classical(Field::gf2k(k), Series::sl, 3).algebra;
            LieAlgebra h = lie_from_json(lie_to_json(g));
            CHECK(h.sc() == g.sc());
            CHECK(h.labels() == g.labels());
        }
    }

    TEST_CASE("superalgebra round trip") {
        FieldPtr f = Field::gf2k(2);
        for (const auto& s : {kl(f, 4), q_vect(f, 3), make_known_super(f, "oo-IPi", 1, 2)}) {
            LieSuperalgebra t = super_from_json(super_to_json(s));
            CHECK(t == s);
            CHECK(t.labels == s.labels);
        }
    }

    TEST_CASE("string coefficients") {
        LieAlgebra g = lie_from_json(R"({"field": "gf4", "dim": 2, "entries": [[0, 1, 1, "t"]]})");
        CHECK(g.basis_bracket(0, 1) == SparseVec{{1, 2}});
    }

    TEST_CASE("malformed documents") {
        CHECK_THROWS_AS(lie_from_json("{"), UsageError);
        CHECK_THROWS_AS(lie_from_json(R"({"dim": 2})"), UsageError);
        CHECK_THROWS_AS(lie_from_json(R"({"field": "gf2", "dim": 2, "entries": [[0, 2, 1, 1]]})"), UsageError);
        CHECK_THROWS_AS(lie_from_json(R"({"field": "gf2", "dim": 2, "entries": [[0, 0, 1, 1]]})"), UsageError);
        CHECK_THROWS_AS(lie_from_json(R"({"field": "gf2", "dim": 2, "entries": [[0, 1, 1, 2]]})"), UsageError);
        CHECK_THROWS_AS(lie_from_json(R"({"field": "gf2", "dim": 2, "entries": [[0, 1]]})"), UsageError);
        CHECK_THROWS_AS(super_from_json(R"({"field": "gf2", "dim_even": 1, "dim_odd": 1, "sc_oo": [[0, 0, 0, 1]]})"),
                        UsageError);
    }

    TEST_CASE("invalid structure constants load but fail validation") {
        LieAlgebra g = lie_from_json(
            R"({"field": "gf2", "dim": 3, "entries": [[0, 1, 1, 1], [0, 2, 0, 1], [1, 2, 1, 1]]})");
        CHECK_FALSE(validate_lie(g).ok);
    }
}
