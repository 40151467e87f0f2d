#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "herm/pg.hpp"

namespace herm {

using Expo = std::array<std::uint8_t, 4>;

// Sparse homogeneous polynomial over F_q in up to four variables.
// Terms are kept in descending lexicographic order on exponent vectors
// (graded-lex within one degree), coefficients always nonzero.
class HomPoly {
 public:
  struct Term {
    Expo e{};
    Fe c = 0;
  };

  HomPoly() = default;
  HomPoly(const Field& f, int nvars, int degree, std::vector<Term> terms);
  static HomPoly zero(const Field& f, int nvars, int degree);

  const Field& field() const { return *field_; }
  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }

  Fe coeff(const Expo& e) const;

  Fe evaluate(const ProjPoint& P) const { return evaluate(P.x); }
  Fe evaluate(const Vec4& x) const;

  HomPoly scaled(Fe s) const;
  // Scalar-canonical form: first coefficient in the dense monomial order is 1.
  HomPoly canonical() const;
  bool scalar_equal(const HomPoly& other) const;

  bool operator==(const HomPoly& o) const;

 private:
  const Field* field_ = nullptr;
  int nvars_ = 0;
  int degree_ = 0;
  std::vector<Term> terms_;
};

// All exponent vectors of the given total degree, descending lex.
const std::vector<Expo>& monomials(int nvars, int degree);
std::vector<Fe> dense_coeffs(const HomPoly& F);
HomPoly from_dense(const Field& f, int nvars, int degree, const std::vector<Fe>& coeffs);

HomPoly add(const HomPoly& a, const HomPoly& b);
HomPoly mul(const HomPoly& a, const HomPoly& b);
HomPoly pow(const HomPoly& a, int k);
HomPoly derivative(const HomPoly& F, int var);
HomPoly embed_poly(const HomPoly& F, const TowerEmbedding& emb);

// N = #{P in P^n(field) : F(P) = 0}. The field must be F's base field or an
// extension present in the registry.
long long count_points(const HomPoly& F);
long long count_points(const HomPoly& F, const Field& ext);

// Restriction of a 4-variable form to a plane, through the deterministic
// plane frame; the zero polynomial signals H inside {F = 0}.
HomPoly restrict_to_plane(const HomPoly& F, const ProjPlane& H);

// Binary form F(sA + tB), ascending t-degree, length degree+1.
std::vector<Fe> restrict_to_line(const HomPoly& F, const Vec4& A, const Vec4& B);

// Precomposition F . T: substitute X_i -> sum_j T[i][j] X_j, so apply(T^{-1},.)
// maps the old zero set onto the new one.
HomPoly linear_substitute(const HomPoly& F, const ProjTransform& T);

// Exact division by a linear form, decided by restriction to {L = 0} and
// computed by a coordinate change plus synthetic division by a variable.
std::optional<HomPoly> divide_by_linear(const HomPoly& F, const HomPoly& L);
bool linear_divides(const HomPoly& F, const Vec4& dual);

// Cofactor R with Q * R = F, solved as an exact linear system; nullopt when
// Q does not divide F. Independent route from divide_by_linear.
std::optional<HomPoly> exact_cofactor(const HomPoly& F, const HomPoly& Q);

// Degree-1 factors of a ternary form over F_{q^m}, with multiplicities,
// found by scanning every canonical linear form of the extension.
std::vector<std::pair<HomPoly, int>> fq_linear_components(const HomPoly& F, int ext_degree = 1);

// F_q-points where C and all formal partials vanish (C = 0 is always tested
// explicitly; Euler's relation degenerates when p | d).
std::vector<ProjPoint> singular_fq_points(const HomPoly& C);

Vec4 tangent_dual(const HomPoly& C, const ProjPoint& P);
ProjLine tangent_line(const HomPoly& C, const ProjPoint& P);

// Order of vanishing at P of C pulled back to l; throws on l inside C.
int intersection_multiplicity(const ProjLine& l, const HomPoly& C, const ProjPoint& P);

// Text form: '+'/'-'-separated terms like "w^2*X0^2*X1"; w is the canonical
// generator of F_q. Rejects non-homogeneous input with a position. The
// variable count is inferred from the highest index used unless forced.
HomPoly parse_poly(const Field& f, const std::string& text, int force_nvars = 0);
std::string to_string(const HomPoly& F);

// Canonical dual vectors of the lines of P^2(F_q) together with, for each
// line, the indices (into the canonical point enumeration) of its points.
struct P2Lines {
  std::vector<std::array<Fe, 3>> duals;
  std::vector<std::vector<std::uint32_t>> point_idx;
  std::vector<ProjPoint> points;
};
const P2Lines& p2_lines(const Field& f);

}  // namespace herm
