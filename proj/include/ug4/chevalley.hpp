// Concrete simple Lie algebras over the exact rationals: Chevalley basis from
// the Cartan matrix, adjoint matrices, and the Killing form with its inverse.
//
// Basis ordering (fixed, used by all serializations and fixtures): the r
// Cartan generators h_1..h_r first, then e_beta for positive roots beta sorted
// by height then lexicographically, then the f_beta mirrored in the same
// order. Structure constants are integers except for nothing -- the Chevalley
// construction guarantees integrality -- but they are stored as exact
// rationals for uniformity with the Killing data.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ug4/rational.hpp"
#include "ug4/vparams.hpp"

namespace ug4 {

// Sparse vector in the algebra basis: (basis index, coefficient), index-sorted.
using SparseVec = std::vector<std::pair<int, Rat>>;

struct LieAlgebra {
    std::string name;     // canonical type name, e.g. "A3", "B2", "G2"
    char type = 'A';      // A,B,C,D,E,F,G
    int rank = 0;
    int dimension = 0;
    std::vector<std::string> labels;            // basis labels in the fixed order
    std::vector<std::vector<int>> pos_roots;    // simple-root coordinates, table order
    std::vector<std::vector<int>> cartan;       // Cartan matrix A[i][j] = <alpha_j, alpha_i^vee>
    std::vector<std::vector<Rat>> killing;      // kappa_ab = tr(ad X_a ad X_b)
    std::vector<std::vector<Rat>> killing_inv;  // exact inverse

    // [X_a, X_b] in the basis; antisymmetric by construction.
    const SparseVec& bracket(int a, int b) const;

    // Dense adjoint matrix of basis element a: ad(X_a)[c][b] = f_{ab}^c.
    std::vector<std::vector<Rat>> ad_matrix(int a) const;

    // Exhaustive (d <= 60) or sampled exact Jacobi check; returns the number
    // of failing triples (0 expected).
    long jacobi_violations() const;

    // Exact check of kappa([x,y],z) + kappa(y,[x,z]) = 0 on basis triples.
    long killing_invariance_violations() const;

    // g^ab ad(X_a) ad(X_b): must be an exact scalar multiple of the identity;
    // returns the scalar (1 for the Killing normalization) or throws
    // std::runtime_error("invariance violated") if the matrix is not scalar.
    Rat quadratic_casimir_check() const;

    // JSON dump: structure constants as [a, b, c, "p/q"] triples (a < b),
    // Killing form as nonzero [i, j, "p/q"] with i <= j.
    std::string to_json() const;

    // Internal storage, exposed for the tensor engine (index = a*dimension+b).
    std::vector<SparseVec> table;
};

// Accepts "A3".."E8" style type names and algebra names ("sl4", "so7", "sp6",
// "g2", "f4", "e6", "e7", "e8"). Throws std::invalid_argument on unsupported
// input (A_r r>=1, B_r r>=2, C_r r>=2, D_r r>=3, G2, F4, E6, E7, E8).
LieAlgebra build_algebra(const std::string& type);

// Type name of the algebra ("sl4" -> "A3" etc.).
std::string type_of_algebra(const AlgebraId& id);

// Second oracle for type A: builds the defining (r+1)-dimensional matrix
// realization from the Chevalley generators, checks that it is an exact
// representation ([rho(x),rho(y)] = rho([x,y]) for all basis pairs) and that
// its trace form is proportional to the Killing form; returns the exact
// proportionality constant kappa/tr-form.
Rat defining_rep_check_slN(const LieAlgebra& alg);

}  // namespace ug4
