#pragma once

#include <map>
#include <optional>

#include "herm/hermitian.hpp"

namespace herm {

// Union of d distinct concurrent F_q-lines inside one plane; the common
// point is the vertex. Point count of the union is d*q + 1.
struct PlanarPencil {
  ProjPlane plane;
  ProjPoint vertex;               // ambient coordinates
  std::vector<ProjLine> lines;    // ambient lines, one per component
};

enum class SectionKind { Pencil, Hermitian, Other };

struct SectionClass {
  SectionKind kind = SectionKind::Other;
  long long npoints = 0;

  // Pencil payload
  std::optional<PlanarPencil> pencil;

  // Hermitian payload: detection on the restricted curve, with det A != 0
  std::optional<Fe> rho;
  std::optional<HermitianMatrix> matrix;  // 3x3 (n = 2)

  std::string reason;  // diagnostics for Other
};

struct PlaneSection {
  ProjPlane plane;
  SectionClass cls;
};

struct SectionReport {
  std::vector<PlaneSection> planes;
  long long nu1 = 0;      // pencil planes
  long long nu2 = 0;      // nonsingular Hermitian sections
  long long nu_other = 0;
};

// Classify one plane section: pencil of d distinct concurrent F_q-lines,
// nonsingular Hermitian curve, or Other with diagnostics. A zero restriction
// (plane inside the surface) is a precondition violation.
SectionClass classify_section(const HomPoly& S, const ProjPlane& H);

// Classify every F_q-plane of P^3. Throws naming the plane if S has an
// F_q-plane component.
SectionReport section_survey(const HomPoly& S);

// All F_q-lines whose restriction of S is the zero binary form.
std::vector<ProjLine> lines_on_surface(const HomPoly& S);

struct VertexMapResult {
  std::vector<std::pair<ProjPlane, ProjPoint>> entries;  // plane -> vertex
  bool bijective = false;
  std::vector<std::string> failures;  // non-pencil plane through l, etc.
};

// H -> v_{S cap H} over the q+1 planes through a line of S; bijectivity
// onto the points of l is checked and reported.
VertexMapResult vertex_map(const HomPoly& S, const ProjLine& l);

struct VertexUniquenessResult {
  // surface point index (canonical enumeration) -> its unique pencil plane
  std::map<long long, ProjPlane> plane_of_point;
  bool bijective = false;
  std::vector<std::string> failures;
};

// For every F_q-point of an extremal surface there is exactly one plane whose
// section is a pencil with that vertex; the report carries any defect.
VertexUniquenessResult vertex_uniqueness(const HomPoly& S);

}  // namespace herm
