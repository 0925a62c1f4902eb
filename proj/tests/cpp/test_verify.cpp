#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include <map>

#include "ug4/verify.hpp"

using namespace ug4;

TEST_CASE("warm-ups pass for small algebras") {
    for (const char* n : {"sl2", "sl3", "so5"}) {
        LieAlgebra a = build_algebra(n);
        AlgebraId id = parse_algebra(n);
        for (const auto& rep : verify_warmups(a, id)) {
            INFO(n << " " << rep.module);
            CHECK(rep.verdict);
        }
    }
}

TEST_CASE("so5 adjoint square: asym2 = g + X2 with dims 10 + 35") {
    LieAlgebra a = build_algebra("so5");
    AlgebraId id = parse_algebra("so5");
    VerificationReport rep = verify_module(a, id, "asym2");
    CHECK(rep.verdict);
    REQUIRE(rep.rows.size() == 2);
    std::map<std::string, long long> by_label;
    for (const auto& row : rep.rows) {
        REQUIRE(row.labels.size() == 1);
        by_label[row.labels[0].str()] = row.measured;
    }
    CHECK(by_label.at("g") == 10);
    CHECK(by_label.at("X2") == 35);
}

TEST_CASE("erratum regression: as-printed sl3 Sym2 fails exactly on the Y2 row") {
    LieAlgebra a = build_algebra("sl3");
    AlgebraId id = parse_algebra("sl3");
    VerificationReport rep = verify_module(a, id, "sym2", Provenance::as_printed);
    CHECK_FALSE(rep.verdict);
    int bad = 0;
    for (const auto& row : rep.rows) {
        if (row.match) continue;
        ++bad;
        REQUIRE(row.labels.size() == 1);
        CHECK(row.labels[0].str() == "Y2");
        CHECK(row.predicted == Rat(27, 2));
        CHECK(row.measured == 27);
    }
    CHECK(bad == 1);
    VerificationReport good = verify_module(a, id, "sym2", Provenance::corrected);
    CHECK(good.verdict);
}

TEST_CASE("report JSON fields") {
    LieAlgebra a = build_algebra("sl2");
    AlgebraId id = parse_algebra("sl2");
    std::string j = report_to_json(verify_module(a, id, "sym2"));
    for (const char* key : {"\"verdict\"", "\"provenance\"", "\"rows\"", "\"line_evaluated\""})
        CHECK(j.find(key) != std::string::npos);
}

TEST_CASE("erratum scan isolates the Y2 finding and is empty when corrected") {
    auto findings = erratum_scan({"sl3"}, Provenance::as_printed, {"sym2"});
    REQUIRE(findings.size() == 1);
    CHECK(findings[0].labels.size() == 1);
    CHECK(findings[0].labels[0].str() == "Y2");
    CHECK(findings[0].resolved);
    CHECK(!findings[0].evidence.empty());

    auto clean = erratum_scan({"sl2", "sl3"}, Provenance::corrected, {"sym2", "asym2", "asym3"});
    CHECK(clean.empty());
}

TEST_CASE("line-evaluated rows are flagged at so8") {
    LieAlgebra a = build_algebra("so8");
    AlgebraId id = parse_algebra("so8");
    VerificationReport rep = verify_module(a, id, "sym2");
    CHECK(rep.verdict);
    bool any_line = false;
    for (const auto& row : rep.rows) any_line = any_line || row.line_evaluated;
    CHECK(any_line);
}
