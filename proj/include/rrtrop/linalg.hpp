#pragma once

// Small exact linear algebra over Q: ranks, null spaces, primitive integer
// vectors, and Fourier-Motzkin feasibility for systems of linear inequalities.

#include <optional>
#include <vector>

#include "rrtrop/poly.hpp"

namespace rrtrop::linalg {

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;

Rational dot(const QVec& a, const QVec& b);
QVec to_qvec(const Exponent& a);
QVec to_qvec(const std::vector<Integer>& a);

// Nonzero rows of the reduced row echelon form.
QMat row_basis(QMat rows);
std::size_t rank(const QMat& rows);
// Basis of { x in Q^ncols : rows x = 0 }.
QMat nullspace(const QMat& rows, std::size_t ncols);
// Positive rescaling to an integer vector with gcd 1; the zero vector stays zero.
std::vector<Integer> primitive(const QVec& v);

// coeffs . y  <=  rhs   (or < when strict)
struct Inequality {
  QVec coeffs;
  Rational rhs;
  bool strict = false;
};

// A feasible point, or nullopt when the system is infeasible. Back-substitution
// prefers 0, then the tightest non-strict bound, then the nearest integer.
std::optional<QVec> solve_inequalities(const std::vector<Inequality>& system, std::size_t nvars);

}  // namespace rrtrop::linalg
