// Reconciliation engine: compares catalog predictions against measured
// spectra per (algebra, module), runs the exceptional reductions, and reduces
// as-printed mismatches to erratum findings.
#pragma once

#include <string>
#include <vector>

#include "ug4/splitcas.hpp"
#include "ug4/udim.hpp"
#include "ug4/vparams.hpp"

namespace ug4 {

struct VerificationRow {
    Rat eigenvalue;               // merged 4-split eigenvalue at the point
    std::vector<Label> labels;    // contributing labels (zero-dim ones dropped)
    Rat predicted;                // sum of label dims (may include negatives)
    long long measured = 0;
    bool match = false;
    bool line_evaluated = false;  // some label needed line evaluation
};

struct VerificationReport {
    std::string algebra;
    std::string module;
    Provenance provenance;
    std::vector<VerificationRow> rows;  // sorted by eigenvalue
    Rat predicted_total;
    long long measured_total = 0;
    bool verdict = false;  // pass iff every row matches and totals agree
    std::string backend;   // measurement backend used
};

// Measures the spectrum (always with corrected candidate eigenvalues; the
// documented eigenvalue-table erratum concerns only the trivial
// representation's printed cell) and compares with dimension predictions
// under the requested provenance.
VerificationReport verify_module(const LieAlgebra& alg, const AlgebraId& id,
                                 const std::string& module,
                                 Provenance prov = Provenance::corrected);

// Sym^2, Lambda^2, Lambda^3 reports.
std::vector<VerificationReport> verify_warmups(const LieAlgebra& alg, const AlgebraId& id,
                                               Provenance prov = Provenance::corrected);

struct ErratumFinding {
    std::string description;
    std::vector<Label> labels;          // minimal implicated label set
    std::vector<std::string> evidence;  // per-algebra predicted vs measured rows
    bool resolved = false;              // a documented correction exists
};

// Verifies every module for each named algebra under the given provenance and
// reduces mismatches to the labels that appear alone in some mismatched row.
// modules: subset of module_names() to scan; empty means all eight.
std::vector<ErratumFinding> erratum_scan(const std::vector<std::string>& algebras,
                                         Provenance prov = Provenance::as_printed,
                                         const std::vector<std::string>& modules = {});

std::string report_to_json(const VerificationReport& r);

}  // namespace ug4
