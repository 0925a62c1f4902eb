#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "ug4/chevalley.hpp"

using namespace ug4;

TEST_CASE("sl2 fixture: basis, brackets, Killing form") {
    LieAlgebra a = build_algebra("sl2");
    CHECK(a.dimension == 3);
    CHECK(a.rank == 1);
    // [h, e] = 2e, [e, f] = h, kappa(h, h) = 8
    REQUIRE(a.bracket(0, 1).size() == 1);
    CHECK(a.bracket(0, 1)[0].second == Rat(2));
    REQUIRE(a.bracket(1, 2).size() == 1);
    CHECK(a.bracket(1, 2)[0].first == 0);
    CHECK(a.bracket(1, 2)[0].second == Rat(1));
    CHECK(a.killing[0][0] == Rat(8));
}

TEST_CASE("Jacobi identity and Killing invariance") {
    for (const char* n : {"sl2", "sl3", "sl4", "so5", "so7", "sp6", "g2"}) {
        LieAlgebra a = build_algebra(n);
        INFO(n);
        CHECK(a.jacobi_violations() == 0);
        CHECK(a.killing_invariance_violations() == 0);
    }
}

TEST_CASE("quadratic Casimir acts as the identity scalar (Killing normalization)") {
    for (const char* n : {"sl2", "sl3", "so5", "sp6", "g2"}) {
        LieAlgebra a = build_algebra(n);
        INFO(n);
        CHECK(a.quadratic_casimir_check() == Rat(1));
    }
}

TEST_CASE("dimensions match the catalog") {
    CHECK(build_algebra("sl5").dimension == 24);
    CHECK(build_algebra("so8").dimension == 28);
    CHECK(build_algebra("sp4").dimension == 10);
    CHECK(build_algebra("g2").dimension == 14);
    CHECK(build_algebra("f4").dimension == 52);
}

TEST_CASE("defining representation oracle for sl(N)") {
    // kappa = 2N x (trace form of the defining rep)
    CHECK(defining_rep_check_slN(build_algebra("sl2")) == Rat(4));
    CHECK(defining_rep_check_slN(build_algebra("sl3")) == Rat(6));
    CHECK(defining_rep_check_slN(build_algebra("sl4")) == Rat(8));
}

TEST_CASE("type names and Cartan aliases agree") {
    LieAlgebra b2 = build_algebra("B2");
    LieAlgebra so5 = build_algebra("so5");
    CHECK(b2.dimension == so5.dimension);
    CHECK(b2.name == so5.name);
    LieAlgebra c3 = build_algebra("sp6");
    CHECK(c3.dimension == 21);
}

TEST_CASE("structure constants are integers on the root part") {
    LieAlgebra a = build_algebra("g2");
    for (int x = a.rank; x < a.dimension; ++x)
        for (int y = a.rank; y < a.dimension; ++y)
            for (const auto& [z, v] : a.bracket(x, y)) CHECK(v.get_den() == 1);
}
