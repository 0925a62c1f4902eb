// Catalog of universal dimension formulas, split-Casimir eigenvalues and
// decomposition tables for tensor powers of the adjoint representation,
// with exact evaluation at points of the Vogel plane and along family lines.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ug4/vparams.hpp"

namespace ug4 {

// Which reading of the source tables to use. A handful of printed entries are
// inconsistent with the permutation symmetry and with concrete measurements;
// the corrected variants are the default and each correction is documented in
// the erratum log (see erratum_log()).
enum class Provenance { corrected, as_printed };

enum class Base { One, g, X2, X3fam, X4, Y2, Y3, Y4, B, C, J, D, E, H, G, F, I };

// Variants of the X3-family Casimir eigenspace (all share eigenvalue -1/2).
enum class X3Variant { X3, Z3sym, Z3win, K3, L3 };

struct Label {
    Base base = Base::One;
    int perm = 0;  // index into PermutationS3::all(): 0 = unprimed, 1 = ', 2 = '', 3 = ''', 4 = '''', 5 = '''''
    X3Variant var = X3Variant::X3;  // meaningful only for Base::X3fam

    std::string str() const;
    bool operator==(const Label& o) const {
        return base == o.base && perm == o.perm && (base != Base::X3fam || var == o.var);
    }
};

Label parse_label(const std::string& s);

// All labels appearing anywhere in the n<=4 catalog (X3 variants listed once each).
std::vector<Label> catalog_labels();

// Thrown when a formula denominator vanishes at a point; carries the factor.
struct PoleError : std::domain_error {
    std::string factor;
    PoleError(const std::string& msg, std::string f) : std::domain_error(msg), factor(std::move(f)) {}
};

// --- dimensions ---

Rat dim(const Label& label, const VogelPoint& pt, Provenance prov = Provenance::corrected);

// Pole-cancelling evaluation along a family line (classical families and the
// exceptional line); throws std::domain_error on a genuine (non-removable) pole.
Rat dim_on_line(const Label& label, Family fam, long N, Provenance prov = Provenance::corrected);

// dim at the algebra's Table 1 point, falling back to line evaluation when a
// formula has a removable singularity there. line_used reports the fallback.
Rat dim_at_algebra(const Label& label, const AlgebraId& id, Provenance prov = Provenance::corrected,
                   bool* line_used = nullptr);

// The universal function "diff" (identically zero on all algebra loci).
Rat diff_value(const VogelPoint& pt);
Rat diff_on_line(Family fam, long N);

// dim g as a rational of the point (convenience; same as dim of label g).
Rat dim_g(const VogelPoint& pt);

// --- family-content data for the X3 family (sl/so only; the source gives none for sp) ---

// dim of the two irreducible constituents of the X3 eigenspace on the sl/so lines.
Rat dim_x3_hat_on_line(Family fam, long N);
Rat dim_x3_tilde_on_line(Family fam, long N);

// Multiplicities (hat, tilde) of the X3 constituents inside a variant, per family.
// Returns nullopt when the source states no content (sp and, for K3/L3 at
// exceptional points, the eigenspace is a single X3).
std::optional<std::pair<int, int>> x3_variant_content(X3Variant var, Family fam);

// --- decomposition tables ---

struct TableEntry {
    Label label;
    int mult;
};

struct DecompositionTable {
    std::string module;               // canonical spelling: 4, 31, 22, 211, 1111, sym2, asym2, asym3
    int n;                            // tensor power
    int sn_irrep_dim;                 // dim of the S_n irrep indexing the module
    std::vector<TableEntry> entries;
    Rat total_prefactor;              // total = prefactor * prod (d - shift_i)
    std::vector<Rat> total_shifts;
    std::vector<Rat> total_poly() const;   // expanded coefficients in d, ascending
    Rat total_at(const Rat& d) const;
};

std::vector<std::string> module_names();  // all eight canonical module names
std::string canonical_module(const std::string& name);
DecompositionTable module_table(const std::string& module, Provenance prov = Provenance::corrected);

struct SumIdentityReport {
    std::string module;
    Rat lhs, rhs;
    bool exact;
};
SumIdentityReport check_sum_identity(const std::string& module, const VogelPoint& pt,
                                     Provenance prov = Provenance::corrected);

// --- eigenvalues ---

// Normalized quadratic Casimir value c2 of a label at a point (c2(adjoint)=1).
Rat casimir_c2(const Label& label, const VogelPoint& pt, Provenance prov = Provenance::corrected);

// n-split Casimir eigenvalue (c2 - n)/2, for 2 <= n <= 4.
Rat casimir_eigenvalue(const Label& label, const VogelPoint& pt, int n,
                       Provenance prov = Provenance::corrected);

// --- exceptional-point relations (ex1..ex6) ---

struct RelationCheck {
    std::string description;  // e.g. "dimC'' = -dimX2"
    Rat lhs, rhs;
    bool ok;
};
// pt must name one of g2/f4/e6/e7/e8; throws otherwise.
std::vector<RelationCheck> exceptional_relations(const std::string& algebra);

// Printed reduced decompositions at exceptional points, as label multisets.
// For the window module the printed list is inconsistent with cancellation
// bookkeeping (see erratum_log); both readings are available.
std::vector<TableEntry> reduced_exceptional_table(const std::string& module,
                                                  Provenance prov = Provenance::corrected);

// --- erratum documentation ---

struct Erratum {
    std::string id;
    std::string summary;
    std::string evidence;
};
const std::vector<Erratum>& erratum_log();

}  // namespace ug4
