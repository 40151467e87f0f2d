#include "herm/sections.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace herm {

namespace {

std::string plane_str(const ProjPlane& H) {
  std::ostringstream os;
  os << "(" << H.h[0] << "," << H.h[1] << "," << H.h[2] << "," << H.h[3] << ")";
  return os.str();
}

// Distinct canonical linear factors of a ternary form: the line point test
// filters candidates (exact already when d <= q), and each survivor is
// confirmed by the restriction-based divisibility test.
std::vector<std::array<Fe, 3>> distinct_linear_factors(const HomPoly& C) {
  const Field& f = C.field();
  const auto& tab = p2_lines(f);
  std::vector<Fe> values(tab.points.size());
  for (std::size_t i = 0; i < tab.points.size(); ++i) values[i] = C.evaluate(tab.points[i]);
  std::vector<std::array<Fe, 3>> out;
  for (std::size_t li = 0; li < tab.duals.size(); ++li) {
    const auto& idx = tab.point_idx[li];
    bool all = true;
    for (std::size_t k = 0; k < idx.size() && all; ++k) all = (values[idx[k]] == 0);
    if (!all) continue;
    const auto& d3 = tab.duals[li];
    if (linear_divides(C, Vec4{d3[0], d3[1], d3[2], 0})) out.push_back(d3);
  }
  return out;
}

HomPoly linear_from_dual(const Field& f, const std::array<Fe, 3>& dual) {
  std::vector<HomPoly::Term> terms;
  for (int i = 0; i < 3; ++i) {
    if (dual[i] == 0) continue;
    Expo e{};
    e[i] = 1;
    terms.push_back({e, dual[i]});
  }
  return HomPoly(f, 3, 1, std::move(terms));
}

// Common point of a set of in-plane lines, or nullopt.
std::optional<ProjPoint> common_point(const Field& f, const std::vector<std::array<Fe, 3>>& duals) {
  Vec4 r0{duals[0][0], duals[0][1], duals[0][2], 0};
  Vec4 r1{duals[1][0], duals[1][1], duals[1][2], 0};
  auto basis = kernel_basis(f, {r0, r1}, 3);
  if (basis.size() != 1) return std::nullopt;  // lines coincide (cannot happen: distinct duals)
  ProjPoint v = make_point(f, 2, basis[0]);
  for (std::size_t i = 2; i < duals.size(); ++i) {
    Fe acc = 0;
    for (int j = 0; j < 3; ++j) acc = f.add(acc, f.mul(duals[i][j], v.x[j]));
    if (acc != 0) return std::nullopt;
  }
  return v;
}

ProjPoint to_ambient(const Field& f, const std::array<ProjPoint, 3>& frame, const ProjPoint& inplane) {
  Vec4 v{};
  for (int k = 0; k < 3; ++k) {
    if (inplane.x[k] == 0) continue;
    for (int j = 0; j < 4; ++j) v[j] = f.add(v[j], f.mul(inplane.x[k], frame[k].x[j]));
  }
  return make_point(f, 3, v);
}

}  // namespace

SectionClass classify_section(const HomPoly& S, const ProjPlane& H) {
  const Field& f = S.field();
  const int d = S.degree();
  HomPoly C = restrict_to_plane(S, H);
  if (C.is_zero())
    throw UsageError("classify_section: plane " + plane_str(H) + " is a component of the surface");

  SectionClass out;
  out.npoints = count_points(C);

  // pencil test first (cannot overlap with the Hermitian case)
  auto factors = distinct_linear_factors(C);
  if (static_cast<int>(factors.size()) == d) {
    // d distinct linear forms all dividing a degree-d form: the product is
    // the form itself up to a scalar; verify and test concurrency.
    HomPoly prod = linear_from_dual(f, factors[0]);
    for (int i = 1; i < d; ++i) prod = mul(prod, linear_from_dual(f, factors[i]));
    if (!prod.scalar_equal(C))
      throw UsageError("classify_section: factor product mismatch");
    auto vertex = common_point(f, factors);
    if (vertex) {
      auto frame = plane_frame(f, H);
      PlanarPencil pencil;
      pencil.plane = H;
      pencil.vertex = to_ambient(f, frame, *vertex);
      for (const auto& dual : factors) {
        // two in-plane points of the component line, mapped to ambient
        Vec4 r{dual[0], dual[1], dual[2], 0};
        auto basis = kernel_basis(f, {r}, 3);
        ProjPoint a = to_ambient(f, frame, make_point(f, 2, basis[0]));
        ProjPoint b = to_ambient(f, frame, make_point(f, 2, basis[1]));
        pencil.lines.push_back(line_through(f, a, b));
      }
      out.kind = SectionKind::Pencil;
      out.pencil = std::move(pencil);
      return out;
    }
    out.kind = SectionKind::Other;
    out.reason = "d distinct linear factors, not concurrent";
    return out;
  }
  if (!factors.empty()) {
    out.kind = SectionKind::Other;
    out.reason = "has linear components but is not a pencil";
    return out;
  }

  if (d == f.sqrt_q() + 1) {
    auto det_res = detect_hermitian(C);
    if (det_res) {
      if (is_nonsingular(f, det_res->second)) {
        out.kind = SectionKind::Hermitian;
        out.rho = det_res->first;
        out.matrix = det_res->second;
        return out;
      }
      out.kind = SectionKind::Other;
      out.reason = "Hermitian shape with singular matrix";
      return out;
    }
  }
  out.kind = SectionKind::Other;
  out.reason = "neither pencil nor Hermitian";
  return out;
}

SectionReport section_survey(const HomPoly& S) {
  if (S.nvars() != 4) throw UsageError("section_survey: need a 4-variable form");
  const Field& f = S.field();
  SectionReport rep;
  const long long nplanes = point_count(f.q(), 3);
  rep.planes.reserve(nplanes);
  for (long long i = 0; i < nplanes; ++i) {
    ProjPlane H = make_plane(f, point_at(f, 3, i).x);
    PlaneSection ps;
    ps.plane = H;
    ps.cls = classify_section(S, H);
    switch (ps.cls.kind) {
      case SectionKind::Pencil: ++rep.nu1; break;
      case SectionKind::Hermitian: ++rep.nu2; break;
      case SectionKind::Other: ++rep.nu_other; break;
    }
    rep.planes.push_back(std::move(ps));
  }
  return rep;
}

std::vector<ProjLine> lines_on_surface(const HomPoly& S) {
  if (S.nvars() != 4) throw UsageError("lines_on_surface: need a 4-variable form");
  const Field& f = S.field();
  std::vector<ProjLine> out;
  for_lines_p3(f, [&](const ProjLine& l) {
    auto coeffs = restrict_to_line(S, l.b[0], l.b[1]);
    if (std::all_of(coeffs.begin(), coeffs.end(), [](Fe c) { return c == 0; }))
      out.push_back(l);
  });
  return out;
}

VertexMapResult vertex_map(const HomPoly& S, const ProjLine& l) {
  const Field& f = S.field();
  VertexMapResult res;
  auto planes = planes_through_line(f, l);
  std::set<ProjPoint> seen;
  for (const auto& H : planes) {
    SectionClass cls = classify_section(S, H);
    if (cls.kind != SectionKind::Pencil) {
      res.failures.push_back("plane " + plane_str(H) + " through the line is not a pencil");
      continue;
    }
    const ProjPoint& v = cls.pencil->vertex;
    if (!line_contains(f, l, v)) {
      res.failures.push_back("vertex of plane " + plane_str(H) + " is not on the line");
      continue;
    }
    seen.insert(v);
    res.entries.emplace_back(H, v);
  }
  res.bijective = res.failures.empty() &&
                  static_cast<int>(res.entries.size()) == f.q() + 1 &&
                  seen.size() == res.entries.size();
  return res;
}

VertexUniquenessResult vertex_uniqueness(const HomPoly& S) {
  const Field& f = S.field();
  VertexUniquenessResult res;
  SectionReport rep = section_survey(S);
  std::map<long long, std::vector<ProjPlane>> by_vertex;
  for (const auto& ps : rep.planes) {
    if (ps.cls.kind != SectionKind::Pencil) continue;
    by_vertex[index_of(f, ps.cls.pencil->vertex)].push_back(ps.plane);
  }
  bool ok = true;
  for_points(f, 3, [&](const ProjPoint& P) {
    if (S.evaluate(P) != 0) return;
    long long idx = index_of(f, P);
    auto it = by_vertex.find(idx);
    std::size_t count = (it == by_vertex.end()) ? 0 : it->second.size();
    if (count != 1) {
      ok = false;
      res.failures.push_back("surface point #" + std::to_string(idx) + " has " +
                             std::to_string(count) + " pencil planes");
      return;
    }
    res.plane_of_point.emplace(idx, it->second.front());
  });
  // every pencil vertex must itself be a surface point
  for (const auto& [idx, planes] : by_vertex) {
    if (S.evaluate(point_at(f, 3, idx)) != 0) {
      ok = false;
      res.failures.push_back("pencil vertex #" + std::to_string(idx) + " is not on the surface");
    }
  }
  res.bijective = ok && res.plane_of_point.size() == by_vertex.size();
  return res;
}

}  // namespace herm
