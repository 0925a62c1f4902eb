#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "ug4/vparams.hpp"

using namespace ug4;

TEST_CASE("table 1 parameter points, t = 1/2 gauge") {
    auto p = algebra_point("sl3");
    CHECK(p.a == Rat(-1, 3));
    CHECK(p.b == Rat(1, 3));
    CHECK(p.c == Rat(1, 2));
    p = algebra_point("so8");
    CHECK(p.a == Rat(-1, 6));
    CHECK(p.b == Rat(1, 3));
    CHECK(p.c == Rat(1, 3));
    p = algebra_point("sp6");
    CHECK(p.a == Rat(1, 8));
    CHECK(p.b == Rat(-1, 4));
    CHECK(p.c == Rat(5, 8));
    p = algebra_point("g2");
    CHECK(p.a == Rat(-1, 4));
    CHECK(p.b == Rat(5, 12));
    CHECK(p.c == Rat(1, 3));
    p = algebra_point("e8");
    CHECK(p.a == Rat(-1, 30));
    CHECK(p.b == Rat(1, 5));
    CHECK(p.c == Rat(1, 3));
}

TEST_CASE("points are normalized: a + b + c = 1/2") {
    for (const char* n : {"sl2", "sl5", "so5", "so11", "sp8", "g2", "f4", "e6", "e7", "e8"}) {
        auto p = algebra_point(n);
        Rat s = p.a + p.b + p.c;
        s.canonicalize();
        CHECK(s == Rat(1, 2));
    }
}

TEST_CASE("family lines evaluate to the table points") {
    FamilyLine sl = family_line(Family::sl);
    CHECK(sl.a(Rat(4)) == Rat(-1, 4));
    CHECK(sl.b(Rat(4)) == Rat(1, 4));
    CHECK(sl.c(Rat(4)) == Rat(1, 2));
    FamilyLine so = family_line(Family::so);
    CHECK(so.a(Rat(7)) == Rat(-1, 5));
    CHECK(so.b(Rat(7)) == Rat(2, 5));
    CHECK(so.c(Rat(7)) == Rat(3, 10));
    FamilyLine exc = family_line(Family::exc);
    CHECK(exc.a(Rat(30)) == Rat(-1, 30));  // e8
    CHECK(exc.b(Rat(30)) == Rat(1, 5));
}

TEST_CASE("S3 action composes correctly") {
    auto pt = algebra_point("sl4");
    auto q = apply_permutation(PermutationS3::swap_ab(), pt);
    CHECK(q.a == pt.b);
    CHECK(q.b == pt.a);
    CHECK(q.c == pt.c);
    // cycle_abc twice equals cycle_acb
    auto c1 = PermutationS3::cycle_abc().compose(PermutationS3::cycle_abc());
    CHECK(apply_permutation(c1, pt) == apply_permutation(PermutationS3::cycle_acb(), pt));
    CHECK(PermutationS3::all().size() == 6);
}

TEST_CASE("algebra name parsing") {
    AlgebraId id = parse_algebra("so7");
    CHECK(id.family == Family::so);
    CHECK(id.N == 7);
    CHECK_THROWS(parse_algebra("so4"));   // not simple
    CHECK_THROWS(parse_algebra("sp5"));   // odd symplectic
    CHECK_THROWS(parse_algebra("e9"));
}
