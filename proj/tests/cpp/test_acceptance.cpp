// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Deliberately independent of the unit-test framework so the output
// stays a readable checklist.
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "ug4/splitcas.hpp"
#include "ug4/udim.hpp"
#include "ug4/verify.hpp"

using namespace ug4;

namespace {

int g_failures = 0;

void report(int num, const std::string& what, bool ok, const std::string& detail = "") {
    std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", num, what.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

void run(int num, const std::string& what, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    report(num, what, ok, detail);
}

const std::vector<std::string> kS4Modules = {"4", "31", "22", "211", "1111"};
const std::vector<std::string> kWarmupAlgebras = {"sl2", "sl3", "sl4", "so5", "so7", "sp4", "g2"};
const std::vector<std::string> kFullAlgebras = {"sl2", "sl3", "sl4", "sl5", "so5",
                                                "so7", "so8", "sp4", "sp6", "g2"};
const std::vector<std::string> kExceptional = {"g2", "f4", "e6", "e7", "e8"};

std::map<std::string, LieAlgebra>& algebra_cache() {
    static std::map<std::string, LieAlgebra> cache;
    return cache;
}
const LieAlgebra& cached_algebra(const std::string& name) {
    auto& c = algebra_cache();
    auto it = c.find(name);
    if (it == c.end()) it = c.emplace(name, build_algebra(name)).first;
    return it->second;
}

// Random point on the a+b+c = 1/2 plane at which every catalog formula and
// every closed-form total is finite.
VogelPoint random_safe_point(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-40, 40);
    std::uniform_int_distribution<long> den(1, 23);
    for (;;) {
        Rat a(num(rng), den(rng)), b(num(rng), den(rng));
        Rat c = Rat(1, 2) - a - b;
        if (a == 0 || b == 0 || c == 0) continue;
        VogelPoint pt{a, b, c};
        try {
            for (const Label& l : catalog_labels()) (void)dim(l, pt);
            for (const auto& m : module_names()) (void)check_sum_identity(m, pt);
        } catch (const std::exception&) {
            continue;
        }
        return pt;
    }
}

}  // namespace

int main() {
    run(1, "warm-up spectra (Sym2, Asym2, Asym3) match predictions exactly", [](std::string& detail) {
        for (const auto& name : kWarmupAlgebras) {
            const LieAlgebra& alg = cached_algebra(name);
            AlgebraId id = parse_algebra(name);
            for (const auto& rep : verify_warmups(alg, id)) {
                if (!rep.verdict) {
                    detail = name + " " + rep.module + " mismatch";
                    return false;
                }
            }
        }
        return true;
    });

    run(2, "g^(x)4 full verification: 10 algebras x 5 modules, every row exact", [](std::string& detail) {
        for (const auto& name : kFullAlgebras) {
            const LieAlgebra& alg = cached_algebra(name);
            AlgebraId id = parse_algebra(name);
            for (const auto& m : kS4Modules) {
                VerificationReport rep = verify_module(alg, id, m);
                if (!rep.verdict) {
                    detail = name + " " + m + " mismatch";
                    return false;
                }
            }
        }
        return true;
    });

    run(3, "sum identities for all 8 modules at 100 random rational points", [](std::string& detail) {
        std::mt19937_64 rng(20240817);
        for (int i = 0; i < 100; ++i) {
            VogelPoint pt = random_safe_point(rng);
            for (const auto& m : module_names()) {
                SumIdentityReport r = check_sum_identity(m, pt);
                if (!r.exact) {
                    detail = "module " + m + " at " + pt.str();
                    return false;
                }
            }
        }
        return true;
    });

    run(4, "diff = 0 on all algebra loci (classical N <= 50 and exceptional points)", [](std::string& detail) {
        auto bad = [&detail](const std::string& where) {
            detail = "diff != 0 at " + where;
            return false;
        };
        for (long N = 2; N <= 50; ++N)
            if (diff_on_line(Family::sl, N) != 0) return bad("sl" + std::to_string(N));
        for (long N = 5; N <= 50; ++N)
            if (diff_on_line(Family::so, N) != 0) return bad("so" + std::to_string(N));
        for (long N = 4; N <= 50; N += 2)
            if (diff_on_line(Family::sp, N) != 0) return bad("sp" + std::to_string(N));
        for (const auto& name : kExceptional) {
            AlgebraId id = parse_algebra(name);
            Rat v;
            try {
                v = diff_value(algebra_point(id));
            } catch (const PoleError&) {
                v = diff_on_line(Family::exc, id.N);  // removable pole (a-b+c at e6)
            }
            if (v != 0) return bad(name);
        }
        return true;
    });

    run(5, "exceptional reductions: ex1-ex6 and reduced decompositions at all 5 points", [](std::string& detail) {
        for (const auto& name : kExceptional) {
            for (const auto& rel : exceptional_relations(name)) {
                if (!rel.ok) {
                    detail = name + ": " + rel.description;
                    return false;
                }
            }
            // The reduced lists must carry exactly the same dimension in each
            // eigenvalue as the full table after cancellation.
            VogelPoint pt = algebra_point(name);
            AlgebraId id = parse_algebra(name);
            for (const auto& m : kS4Modules) {
                std::map<Rat, Rat> full, reduced;
                for (const auto& e : module_table(m).entries)
                    full[casimir_eigenvalue(e.label, pt, 4)] +=
                        Rat(e.mult) * dim_at_algebra(e.label, id);
                for (const auto& e : reduced_exceptional_table(m))
                    reduced[casimir_eigenvalue(e.label, pt, 4)] +=
                        Rat(e.mult) * dim_at_algebra(e.label, id);
                for (auto* side : {&full, &reduced})
                    for (auto it = side->begin(); it != side->end();)
                        it = (it->second == 0) ? side->erase(it) : std::next(it);
                if (full != reduced) {
                    detail = name + " " + m + " reduced list disagrees with cancellation";
                    return false;
                }
            }
        }
        // g2 is additionally confirmed by direct measurement.
        const LieAlgebra& g2 = cached_algebra("g2");
        AlgebraId id = parse_algebra("g2");
        for (const auto& m : kS4Modules) {
            if (!verify_module(g2, id, m).verdict) {
                detail = "g2 " + m + " measurement mismatch";
                return false;
            }
        }
        return true;
    });

    run(6, "annihilator identity for every (algebra, module) pair of criterion 2", [](std::string& detail) {
        for (const auto& name : kFullAlgebras) {
            const LieAlgebra& alg = cached_algebra(name);
            AlgebraId id = parse_algebra(name);
            for (const auto& m : kS4Modules) {
                ModuleSpectrum sp = module_spectrum(alg, id, m);
                AnnihilatorReport rep = annihilator_check(alg, id, m, sp);
                if (!rep.ok) {
                    detail = name + " " + m + ": " + rep.failure;
                    return false;
                }
            }
        }
        return true;
    });

    run(7, "erratum regression: as-printed fails exactly on Y2 (27/2), corrected gives 27", [](std::string& detail) {
        const LieAlgebra& alg = cached_algebra("sl3");
        AlgebraId id = parse_algebra("sl3");
        VerificationReport printed = verify_module(alg, id, "sym2", Provenance::as_printed);
        if (printed.verdict) {
            detail = "as-printed unexpectedly passed";
            return false;
        }
        int bad = 0;
        for (const auto& row : printed.rows) {
            if (row.match) continue;
            ++bad;
            if (row.labels.size() != 1 || row.labels[0].str() != "Y2" ||
                row.predicted != Rat(27, 2) || row.measured != 27) {
                detail = "unexpected failing row";
                return false;
            }
        }
        if (bad != 1) {
            detail = "expected exactly one failing row, got " + std::to_string(bad);
            return false;
        }
        if (!verify_module(alg, id, "sym2", Provenance::corrected).verdict) {
            detail = "corrected variant failed";
            return false;
        }
        bool logged = false;
        for (const auto& e : erratum_log())
            logged = logged || e.summary.find("dimY2") != std::string::npos;
        if (!logged) {
            detail = "erratum log is missing the Y2 entry";
            return false;
        }
        return true;
    });

    run(8, "dense exact oracle reproduces the trace-moment spectra for sl2 and sl3", [](std::string& detail) {
        for (const char* name : {"sl2", "sl3"}) {
            const LieAlgebra& alg = cached_algebra(name);
            AlgebraId id = parse_algebra(name);
            for (const auto& m : module_names()) {
                ModuleSpectrum fast = module_spectrum(alg, id, m);
                ModuleSpectrum slow = dense_spectrum_oracle(alg, id, m);
                if (fast.entries.size() != slow.entries.size() || fast.total != slow.total) {
                    detail = std::string(name) + " " + m + " entry count/total mismatch";
                    return false;
                }
                for (size_t i = 0; i < fast.entries.size(); ++i) {
                    if (fast.entries[i].eigenvalue != slow.entries[i].eigenvalue ||
                        fast.entries[i].dim != slow.entries[i].dim) {
                        detail = std::string(name) + " " + m + " spectrum mismatch";
                        return false;
                    }
                }
            }
        }
        return true;
    });

    if (g_failures == 0) {
        std::printf("acceptance: all 8 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
    return 1;
}
