// Points and family lines of the Vogel projective plane, in the gauge where
// the three parameters sum to 1/2, plus the natural S3 action permuting them.
#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

#include "ug4/ratfun.hpp"
#include "ug4/rational.hpp"

namespace ug4 {

struct VogelPoint {
    Rat a, b, c;  // alpha_hat, beta_hat, gamma_hat; a + b + c == 1/2

    bool operator==(const VogelPoint& o) const { return a == o.a && b == o.b && c == o.c; }
    std::string str() const { return "(" + rat_str(a) + ", " + rat_str(b) + ", " + rat_str(c) + ")"; }
};

// Rescale homogeneous coordinates into the sum-1/2 gauge.
VogelPoint normalize(const Rat& a, const Rat& b, const Rat& c);

// An S3 element as a permutation of the three coordinate slots:
// perm[i] = source slot for destination slot i.
struct PermutationS3 {
    std::array<int, 3> p;

    static PermutationS3 identity() { return {{0, 1, 2}}; }
    static PermutationS3 swap_ab() { return {{1, 0, 2}}; }
    static PermutationS3 swap_ac() { return {{2, 1, 0}}; }
    static PermutationS3 swap_bc() { return {{0, 2, 1}}; }
    // a -> b -> c -> a (each coordinate symbol replaced by the next one)
    static PermutationS3 cycle_abc() { return {{1, 2, 0}}; }
    static PermutationS3 cycle_acb() { return {{2, 0, 1}}; }
    static std::array<PermutationS3, 6> all();

    PermutationS3 compose(const PermutationS3& inner) const {
        return {{inner.p[p[0]], inner.p[p[1]], inner.p[p[2]]}};
    }
    bool operator==(const PermutationS3& o) const { return p == o.p; }
};

VogelPoint apply_permutation(const PermutationS3& s, const VogelPoint& pt);

enum class Family { sl, so, sp, exc };

// One-parameter line through the plane: exact rational functions of N.
// For the classical families these are the Table 1 columns; the "exc" line
// passes through all five exceptional points (g2,f4,e6,e7,e8 at
// N = 4, 9, 12, 18, 30) and exists to take 0/0 limits of formulas there.
struct FamilyLine {
    Family family;
    RatFun a, b, c;

    // Exact evaluation at integer N; throws on a parameter pole (e.g. so(2)).
    VogelPoint at(long N) const;
};

FamilyLine family_line(Family f);

struct AlgebraId {
    Family family;       // exc covers g2/f4/e6/e7/e8
    long N;              // sl/so/sp: matrix size; exc: position on the exceptional line
    std::string name;    // canonical name, e.g. "sl4", "so8", "g2"

    bool operator==(const AlgebraId& o) const { return family == o.family && N == o.N; }
};

// Parse "sl4", "so8", "sp6", "g2", "f4", "e6", "e7", "e8".
AlgebraId parse_algebra(const std::string& name);

// Table 1 point of a named algebra.
VogelPoint algebra_point(const AlgebraId& id);
inline VogelPoint algebra_point(const std::string& name) { return algebra_point(parse_algebra(name)); }

}  // namespace ug4
