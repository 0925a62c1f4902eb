#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>

#include "doctest.h"
#include "ug4/splitcas.hpp"

using namespace ug4;

namespace {
std::map<std::string, long long> entry_map(const ModuleSpectrum& s) {
    std::map<std::string, long long> m;
    for (const auto& e : s.entries) m[rat_str(e.eigenvalue)] = e.dim;
    return m;
}
}  // namespace

TEST_CASE("module_info maps labels to S_n data") {
    CHECK(module_info("sym2").n == 2);
    CHECK(module_info("sym2").sn_dim == 1);
    CHECK(module_info("31").n == 4);
    CHECK(module_info("31").sn_dim == 3);
    CHECK(module_info("22").sn_dim == 2);
    CHECK(module_info("asym3").partition == std::vector<int>{1, 1, 1});
}

TEST_CASE("sl2 warm-up trace moments and spectra") {
    LieAlgebra a = build_algebra("sl2");
    AlgebraId id = parse_algebra("sl2");
    auto mu = trace_moments(a, "sym2", 2);
    CHECK(mu[0] == Rat(6));
    CHECK(mu[1] == Rat(3, 2));
    auto s = module_spectrum(a, id, "sym2");
    CHECK(s.backend == "exact");
    CHECK(entry_map(s) == std::map<std::string, long long>{{"-1", 1}, {"1/2", 5}});
    s = module_spectrum(a, id, "asym2");
    CHECK(entry_map(s) == std::map<std::string, long long>{{"-1/2", 3}});
    CHECK(module_spectrum(a, id, "asym3").total == 1);
}

TEST_CASE("sl3 cube and fourth power") {
    LieAlgebra a = build_algebra("sl3");
    AlgebraId id = parse_algebra("sl3");
    CHECK(module_spectrum(a, id, "asym3").total == 56);
    auto s = module_spectrum(a, id, "1111");
    CHECK(entry_map(s) == std::map<std::string, long long>{{"-3/2", 16}, {"-2/3", 54}});
    long long grand = 0;
    for (const std::string& m : {"4", "31", "22", "211", "1111"})
        grand += module_spectrum(a, id, m).total * module_info(m).sn_dim;
    CHECK(grand == 4096);
}

TEST_CASE("structural self-checks: symmetry and projector algebra") {
    LieAlgebra a = build_algebra("sl2");
    CHECK(casimir_symmetry_check(a, 2));
    CHECK(casimir_symmetry_check(a, 3));
    CHECK(projector_algebra_check(a, 2));
    CHECK(projector_algebra_check(a, 3));
    CHECK(projector_algebra_check(a, 4, 2));
    LieAlgebra b = build_algebra("sl3");
    CHECK(casimir_symmetry_check(b, 2, 2));
    CHECK(projector_algebra_check(b, 2, 2));
}

TEST_CASE("dense oracle agrees with trace moments (sl2)") {
    LieAlgebra a = build_algebra("sl2");
    AlgebraId id = parse_algebra("sl2");
    for (const std::string& m : {"4", "22", "1111"}) {
        auto s1 = module_spectrum(a, id, m);
        auto s2 = dense_spectrum_oracle(a, id, m);
        CHECK(entry_map(s1) == entry_map(s2));
        CHECK(s1.total == s2.total);
    }
}

TEST_CASE("annihilator identity holds and detects corruption") {
    LieAlgebra a = build_algebra("sl3");
    AlgebraId id = parse_algebra("sl3");
    auto s = module_spectrum(a, id, "22");
    CHECK(annihilator_check(a, id, "22", s).ok);
    s.entries[0].eigenvalue += Rat(1, 97);
    CHECK_FALSE(annihilator_check(a, id, "22", s).ok);
}

TEST_CASE("spectrum JSON carries the schema fields") {
    LieAlgebra a = build_algebra("sl2");
    AlgebraId id = parse_algebra("sl2");
    std::string j = spectrum_to_json(module_spectrum(a, id, "sym2"));
    CHECK(j.find("\"algebra\"") != std::string::npos);
    CHECK(j.find("\"entries\"") != std::string::npos);
    CHECK(j.find("\"backend\"") != std::string::npos);
    CHECK(j.find("\"eigenvalue\"") != std::string::npos);
}

TEST_CASE("exact apply matches eigenvalue on a projected vector") {
    LieAlgebra a = build_algebra("sl2");
    SplitCasimir op(a, 2);
    // v = e (x) e is a highest-weight vector of the Cartan square (eig 1/2)
    std::map<std::uint64_t, Rat> v{{static_cast<std::uint64_t>(1 * 3 + 1), Rat(1)}};
    auto w = op.apply(v);
    REQUIRE(w.size() == 1);
    CHECK(w.begin()->second == Rat(1, 2));
}
