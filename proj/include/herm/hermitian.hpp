#pragma once

#include <optional>
#include <utility>

#include "herm/poly.hpp"

namespace herm {

// Square matrix A of order n+1 over F_q with tA = A^(sqrt q); the datum of a
// Hermitian form sum a_ij X_i^{sqrt q} X_j. Diagonal entries necessarily lie
// in F_{sqrt q}.
struct HermitianMatrix {
  int n = 0;  // ambient projective dimension; matrix order n+1
  Mat4 a{};
};

HermitianMatrix make_hermitian(const Field& f, int n, const Mat4& entries);
bool is_hermitian_matrix(const Field& f, int n, const Mat4& entries);

// sum a_ij X_i^{sqrt q} X_j, degree sqrt(q)+1 (zero matrix gives the zero
// polynomial, flagged by is_zero()).
HomPoly to_polynomial(const Field& f, const HermitianMatrix& A);

// Search for rho in F_q^* with rho*F of Hermitian shape; returns the smallest
// such rho by canonical index together with its matrix.
std::optional<std::pair<Fe, HermitianMatrix>> detect_hermitian(const HomPoly& F);

bool is_nonsingular(const Field& f, const HermitianMatrix& A);

// Exact point count of the nonsingular Hermitian variety in P^n(F_q).
long long predicted_count(int n, const Field& f);

// Congruence transform P with tP^(sqrt q) A P = I, built by conjugate-
// symmetric Gram-Schmidt; vector search follows point enumeration order and
// norm equations are solved by the precomputed fiber tables.
ProjTransform standardize(const Field& f, const HermitianMatrix& A);

// Closure of the Hermitian family under F_{sqrt q}-linear combinations,
// checked exactly on basis matrices, plus a witness that a non-subfield
// scalar breaks the property.
bool hermitian_space_check(int n, const Field& f);

}  // namespace herm
