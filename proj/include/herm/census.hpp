#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "herm/sections.hpp"

namespace herm {

// One interesting curve from the exhaustive F_4 cubic census. The id is the
// canonical (first dense coefficient = 1) representative, which is the
// lexicographically least scalar multiple.
struct CurveRecord {
  std::uint32_t index = 0;             // position in the canonical enumeration
  std::vector<Fe> coeffs;              // dense coefficients, 10 entries
  int n4 = 0;
  bool has_linear_component = false;
  std::vector<long long> singular_points;   // canonical point indices
  std::vector<int> flex_multiplicities;     // i(T_P.C; P) per point of C(F_4)
  bool all_flexes = false;
  bool hermitian_equivalent = false;
  std::optional<ProjTransform> to_standard;  // substitution onto the Fermat cubic
};

struct CensusResult {
  int shard_index = 0;
  int shard_count = 1;
  long long visited = 0;
  long long with_linear_component = 0;
  std::map<int, long long> hist_all;        // N -> count, all curves
  std::map<int, long long> hist_line_free;  // N -> count, line-free curves
  long long line_free_n9 = 0;
  long long all_flex_count = 0;
  long long hermitian_equivalent_count = 0;
  long long irreducibility_checked = 0;  // line-free curves with N >= threshold
  std::vector<CurveRecord> records;      // line-free N = 9 curves, index order
  std::vector<std::string> structural_failures;
};

// Visit all 349,525 canonical plane cubics over F_4, verifying on the fly:
// the Sziklai bound for line-free cubics, nonsingularity at F_4-points and
// absolute irreducibility for line-free nine-point cubics, and equivalence
// to the Fermat cubic whenever all nine points are flexes. A counterexample
// lands in structural_failures together with its record.
CensusResult cubic_census_f4(int shard_index = 0, int shard_count = 1);

// Absolute irreducibility oracle for line-free cubics: no linear factor over
// F_{q^j}, j in {1,2,3}. A cubic splitting off a conic forces a linear
// cofactor over F_q (degrees 2+1), so the conic route is subsumed by j = 1;
// quartics would additionally need the F_q-conic scan in conic_factor.
bool absolutely_irreducible_cubic(const HomPoly& C);

// Brute-force scan over canonical conics; returns a conic factor if one
// exists. Used for d = 4 inputs and as defense in depth.
std::optional<HomPoly> conic_factor(const HomPoly& F);

// Pruned exhaustive search over PGL(3, F_q): a transform T with
// linear_substitute(C1, T) scalar-equal to C2, or nullopt. Candidate images
// are restricted to frames inside the curves' point sets.
std::optional<ProjTransform> projectively_equivalent(const HomPoly& C1, const HomPoly& C2);

struct KCurveReport {
  long long n4 = 0;
  bool complement_of_subplane = false;  // K(F_4) = P^2(F_4) minus P^2(F_2)
  bool consistent = false;              // 21 - 7 = 14
};
KCurveReport k_curve_check();

struct ExtremalHit {
  long long trial = 0;
  std::vector<Fe> coeffs;  // dense
  bool survey_ok = false;
  bool reconstructed = false;
};

struct ProbeSummary {
  int q = 0;
  std::uint64_t seed = 0;
  long long trials = 0;
  int shard_index = 0;
  int shard_count = 1;
  long long rejected_plane_component = 0;
  std::map<int, long long> histogram;  // N -> count over plane-free samples
  std::vector<ExtremalHit> extremal;
  std::vector<std::string> structural_failures;
};

// Seeded uniform sampling of degree-(sqrt q + 1) surfaces; samples with an
// F_q-plane component are discarded. Every extremal sample must survive
// section_survey and reconstruct_hermitian. Reruns with the same seed are
// byte-identical and shard-independent.
ProbeSummary random_surface_probe(int q, long long trials, std::uint64_t seed,
                                  int shard_index = 0, int shard_count = 1);

struct ReconstructResult {
  bool success = false;
  ProjTransform transform;   // composed substitution
  Fe rho = 0;
  HermitianMatrix matrix;    // nonsingular Hermitian matrix of the image
  std::string failure;       // structural-failure diagnostics when !success
};

// Constructive normalization of an extremal surface: move a Hermitian
// section to {X_0 = 0}, bring it to the hyperbolic form
// X_1 X_2^{sqrt q} + X_1^{sqrt q} X_2 + X_3^{sqrt q + 1}, align the unique
// pencil planes through the two tangent lines by shears, then read off the
// Hermitian matrix of the transformed equation.
ReconstructResult reconstruct_hermitian(const HomPoly& S);

// Fermat form sum X_i^{sqrt q + 1} in nvars variables.
HomPoly fermat_form(const Field& f, int nvars);

}  // namespace herm
