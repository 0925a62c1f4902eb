// The measurement engine: n-split Casimir operators on tensor powers of the
// adjoint representation, symmetric-group isotypic projectors, trace moments,
// and eigenvalue-multiplicity extraction.
//
// Two arithmetic backends share the weight-block machinery:
//  * an exact backend (scaled integers / rationals) used for n = 2, 3 and for
//    small n = 4 spaces, and by the annihilator and dense-oracle checks;
//  * a dual-prime modular backend for the large n = 4 sweeps, whose results
//    are certified by exact k = 0 moments, exact totals, agreement across two
//    31-bit primes, over-determined residual moments, and the exact
//    annihilator identity.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ug4/chevalley.hpp"
#include "ug4/rational.hpp"
#include "ug4/udim.hpp"
#include "ug4/vparams.hpp"

namespace ug4 {

// Module label ("sym2", "asym2", "asym3", "4", "31", "22", "211", "1111") to
// tensor power n, the S_n partition, and the S_n irrep dimension.
struct ModuleInfo {
    std::string name;
    int n;
    std::vector<int> partition;
    int sn_dim;
};
ModuleInfo module_info(const std::string& label);

// ---------------------------------------------------------------------------
// split Casimir operator (exact, matrix-free)
// ---------------------------------------------------------------------------

class SplitCasimir {
  public:
    SplitCasimir(const LieAlgebra& alg, int n);

    const LieAlgebra& algebra() const { return *alg_; }
    int n() const { return n_; }
    std::uint64_t dim() const;  // d^n

    // Exact matrix-free apply of C_(n) = sum_{i<j} g^{ab} X_a|i X_b|j.
    std::vector<Rat> apply(const std::vector<Rat>& v) const;
    std::map<std::uint64_t, Rat> apply(const std::map<std::uint64_t, Rat>& v) const;

    // Exact isotypic projector P_R for a partition of n.
    std::vector<Rat> project(const std::string& module, const std::vector<Rat>& v) const;
    std::map<std::uint64_t, Rat> project(const std::string& module,
                                         const std::map<std::uint64_t, Rat>& v) const;

    // Slot permutation action (sigma = image list of slots).
    std::map<std::uint64_t, Rat> permute(const std::vector<int>& sigma,
                                         const std::map<std::uint64_t, Rat>& v) const;

    // Integer scale c such that c*C_(n) has integer matrix entries.
    const Rat& scale() const { return scale_; }

    // Scaled pairwise operator column: entries of c * g^{ab} X_a (x) X_b on
    // basis column (x, y), as ((x', y'), integer value).
    const std::vector<std::pair<std::pair<int, int>, long long>>& pair_column(int x, int y) const;

  private:
    const LieAlgebra* alg_;
    int n_;
    Rat scale_;
    std::vector<std::vector<std::pair<std::pair<int, int>, long long>>> pair_cols_;
};

// ---------------------------------------------------------------------------
// trace moments and spectra
// ---------------------------------------------------------------------------

// Exact isotypic trace moments [tr(P_R C^k)]_{k=0..kmax}. Exact backend:
// intended for n = 2, 3 spaces and for n = 4 with small d (sl2/sl3 scale).
std::vector<Rat> trace_moments(const LieAlgebra& alg, const std::string& module, int kmax);

struct SpectrumEntry {
    Rat eigenvalue;                 // n-split eigenvalue (c2 - n)/2 at the point
    std::vector<Label> labels;      // catalog labels merged into this eigenvalue
    long long dim;                  // measured multiplicity-space dimension
};

struct ModuleSpectrum {
    std::string algebra;
    std::string module;
    std::vector<SpectrumEntry> entries;  // sorted by eigenvalue
    long long total;                     // sum of dims
    std::string backend;                 // "exact" or "modp"
};

// Measures the spectrum of C_(n) on the multiplicity space of module R, using
// candidate eigenvalues from the udim catalog at the algebra's point (merged
// by exact equality). Throws std::runtime_error with an explanatory message if
// the candidate list cannot reproduce the measured moments (incomplete or
// wrong list), or if certification fails.
ModuleSpectrum module_spectrum(const LieAlgebra& alg, const AlgebraId& id,
                               const std::string& module,
                               Provenance prov = Provenance::corrected);

std::string spectrum_to_json(const ModuleSpectrum& s);

// ---------------------------------------------------------------------------
// annihilator identity (criterion: characteristic identity)
// ---------------------------------------------------------------------------

struct AnnihilatorReport {
    std::string algebra, module;
    int vectors_checked = 0;
    bool ok = false;
    std::string failure;  // offending vector seed/hash when not ok
};

// For nvec random rational vectors v, checks exactly that
// prod_lambda (C - lambda) (P_R v) = 0 over the measured spectrum.
AnnihilatorReport annihilator_check(const LieAlgebra& alg, const AlgebraId& id,
                                    const std::string& module, const ModuleSpectrum& spectrum,
                                    int nvec = 20, std::uint64_t seed = 1);

// ---------------------------------------------------------------------------
// dense exact oracle (independent cross-check for small spaces)
// ---------------------------------------------------------------------------

// Brute-force eigendecomposition over exact arithmetic: per weight block,
// materializes the dense operator, computes exact kernel ranks of (C - lambda)
// against the candidate set (verifying that the kernels exhaust the block,
// i.e. the characteristic polynomial splits over the candidates), and splits
// eigenspaces across isotypic components by exact rank computations.
// Feasible for d^n <= ~5000 (sl2 and sl3 at n = 4).
ModuleSpectrum dense_spectrum_oracle(const LieAlgebra& alg, const AlgebraId& id,
                                     const std::string& module,
                                     Provenance prov = Provenance::corrected);

// ---------------------------------------------------------------------------
// structural self-checks (used by unit tests)
// ---------------------------------------------------------------------------

// sigma C sigma^{-1} = C and [C, diagonal action] = 0 on random vectors;
// projector idempotence/orthogonality/completeness; returns true iff all pass.
bool casimir_symmetry_check(const LieAlgebra& alg, int n, int nvec = 5, std::uint64_t seed = 7);
bool projector_algebra_check(const LieAlgebra& alg, int n, int nvec = 5, std::uint64_t seed = 11);

}  // namespace ug4
