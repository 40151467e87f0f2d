#include "doctest.h"

#include <set>

#include "herm/census.hpp"
#include "herm/sections.hpp"

using namespace herm;

TEST_CASE("classify_section on the Hermitian surface over F_4") {
  const Field& f = Registry::field(4);
  HomPoly H2 = fermat_form(f, 4);

  // {X_0 = 0}: the standard form restricts to the standard form
  SectionClass c0 = classify_section(H2, make_plane(f, {1, 0, 0, 0}));
  CHECK(c0.kind == SectionKind::Hermitian);
  CHECK(is_nonsingular(f, *c0.matrix));
  CHECK(c0.npoints == 9);

  // {X_0 = X_1} is a tangent plane: a pencil of 3 lines with vertex (1,1,0,0)
  SectionClass c1 = classify_section(H2, make_plane(f, {1, 1, 0, 0}));
  CHECK(c1.kind == SectionKind::Pencil);
  CHECK(c1.npoints == 13);  // 3q + 1
  CHECK(c1.pencil->vertex == make_point(f, 3, {1, 1, 0, 0}));
  CHECK(c1.pencil->lines.size() == 3);
  for (const auto& l : c1.pencil->lines) {
    CHECK(line_contains(f, l, c1.pencil->vertex));
    for (const auto& P : points_on_line(f, l)) {
      CHECK(H2.evaluate(P) == 0);
      CHECK(plane_contains(f, c1.pencil->plane, P));
    }
  }

  // pencil point count is d*q + 1: union of the three concurrent lines
  std::set<ProjPoint> uni;
  for (const auto& l : c1.pencil->lines)
    for (const auto& P : points_on_line(f, l)) uni.insert(P);
  CHECK(static_cast<long long>(uni.size()) == c1.npoints);

  // a generic cubic section of a random surface is usually Other
  Rng rng(3);
  int others = 0;
  for (int t = 0; t < 20; ++t) {
    std::vector<Fe> c(monomials(4, 3).size());
    for (auto& x : c) x = static_cast<Fe>(rng.below(4));
    HomPoly S = from_dense(f, 4, 3, c);
    if (S.is_zero()) continue;
    ProjPlane H = make_plane(f, point_at(f, 3, static_cast<long long>(rng.below(85))).x);
    HomPoly R = restrict_to_plane(S, H);
    if (R.is_zero()) continue;
    SectionClass cls = classify_section(S, H);
    if (cls.kind == SectionKind::Other) {
      ++others;
      CHECK(cls.npoints <= 13);  // Segre cap for cubic sections
    }
  }
  CHECK(others > 0);
}

TEST_CASE("section_survey tallies at q = 4 and q = 9") {
  const Field& f4 = Registry::field(4);
  SectionReport r4 = section_survey(fermat_form(f4, 4));
  CHECK(r4.nu1 == 45);
  CHECK(r4.nu2 == 40);
  CHECK(r4.nu_other == 0);
  CHECK(r4.nu1 + r4.nu2 + r4.nu_other == 85);
  // nu2 = sqrt(q)^3 (q+1)(sqrt(q)-1)
  CHECK(r4.nu2 == 8 * 5 * 1);

  const Field& f9 = Registry::field(9);
  SectionReport r9 = section_survey(fermat_form(f9, 4));
  CHECK(r9.nu1 == 280);
  CHECK(r9.nu2 == 540);  // 27 * 10 * 2
  CHECK(r9.nu_other == 0);
  CHECK(r9.nu1 + r9.nu2 + r9.nu_other == 820);

  // the remaining supported orders: nu1 = N_q(S), nu2 = sqrt(q)^3 (q+1)(sqrt(q)-1)
  SectionReport r16 = section_survey(fermat_form(Registry::field(16), 4));
  CHECK(r16.nu1 == 1105);
  CHECK(r16.nu2 == 3264);
  CHECK(r16.nu_other == 0);
  SectionReport r25 = section_survey(fermat_form(Registry::field(25), 4));
  CHECK(r25.nu1 == 3276);
  CHECK(r25.nu2 == 13000);
  CHECK(r25.nu_other == 0);
  CHECK(r25.nu1 + r25.nu2 == point_count(25, 3));

  // every pencil plane has d*q+1 points, every Hermitian one sqrt(q)^3+1
  for (const auto& ps : r9.planes) {
    if (ps.cls.kind == SectionKind::Pencil) CHECK(ps.cls.npoints == 37);
    if (ps.cls.kind == SectionKind::Hermitian) CHECK(ps.cls.npoints == 28);
  }
}

TEST_CASE("survey transports along projectivities") {
  const Field& f = Registry::field(4);
  Rng rng(11);
  ProjTransform T = random_transform(f, 3, rng);
  SectionReport rep = section_survey(linear_substitute(fermat_form(f, 4), T));
  CHECK(rep.nu1 == 45);
  CHECK(rep.nu2 == 40);
  CHECK(rep.nu_other == 0);
}

TEST_CASE("surveying a surface with a plane component is an error naming it") {
  const Field& f = Registry::field(4);
  HomPoly S = parse_poly(f, "X0*X1^2+X0*X2*X3");
  CHECK_THROWS_WITH_AS(section_survey(S), doctest::Contains("(1,0,0,0)"), UsageError);
}

TEST_CASE("lines on surfaces: Hermitian count and quadric oracle") {
  const Field& f4 = Registry::field(4);
  auto lines = lines_on_surface(fermat_form(f4, 4));
  CHECK(lines.size() == 27);  // (sqrt(q)^3 + 1)(sqrt(q) + 1)

  // independent oracle: an F_q-line lies on S iff all q+1 points do
  // (valid since d = 3 < q+1); brute-force scan over all 357 lines
  long long oracle = 0;
  HomPoly H2 = fermat_form(f4, 4);
  for_lines_p3(f4, [&](const ProjLine& l) {
    bool on = true;
    for (const auto& P : points_on_line(f4, l))
      if (H2.evaluate(P) != 0) on = false;
    if (on) ++oracle;
  });
  CHECK(oracle == 27);

  // smooth quadric X_0 X_3 + X_1 X_2: two rulings of q+1 lines each
  HomPoly quadric = parse_poly(f4, "X0*X3+X1*X2");
  auto qlines = lines_on_surface(quadric);
  long long qoracle = 0;
  for_lines_p3(f4, [&](const ProjLine& l) {
    bool on = true;
    for (const auto& P : points_on_line(f4, l))
      if (quadric.evaluate(P) != 0) on = false;
    if (on) ++qoracle;
  });
  CHECK(static_cast<long long>(qlines.size()) == qoracle);
  CHECK(qlines.size() == 10);  // 2(q+1)

  const Field& f9 = Registry::field(9);
  auto lines9 = lines_on_surface(fermat_form(f9, 4));
  CHECK(lines9.size() == 112);  // (27+1)(3+1)
  CHECK(lines_on_surface(parse_poly(f9, "X0*X3+X1*X2")).size() == 20);
}

TEST_CASE("vertex maps are bijective for every line of the Hermitian surface") {
  const Field& f = Registry::field(4);
  HomPoly H2 = fermat_form(f, 4);
  auto lines = lines_on_surface(H2);
  REQUIRE(lines.size() == 27);
  long long pencil_incidences = 0;
  for (const auto& l : lines) {
    VertexMapResult vm = vertex_map(H2, l);
    CHECK(vm.failures.empty());
    CHECK(vm.bijective);
    CHECK(vm.entries.size() == 5);
    pencil_incidences += static_cast<long long>(vm.entries.size());
    // image is exactly l(F_4)
    std::set<ProjPoint> onl;
    for (const auto& P : points_on_line(f, l)) onl.insert(P);
    for (const auto& [H, v] : vm.entries) CHECK(onl.count(v) == 1);
  }
  // double count: 45 pencil planes x 3 lines = 27 lines x 5 planes = 135
  CHECK(pencil_incidences == 135);
}

TEST_CASE("vertex maps on sampled lines at q = 9") {
  const Field& f = Registry::field(9);
  HomPoly H2 = fermat_form(f, 4);
  auto lines = lines_on_surface(H2);
  REQUIRE(lines.size() == 112);
  for (std::size_t i = 0; i < lines.size(); i += 23) {
    VertexMapResult vm = vertex_map(H2, lines[i]);
    CHECK(vm.bijective);
    CHECK(vm.entries.size() == 10);
  }
}

TEST_CASE("point <-> pencil-plane bijection (vertex uniqueness)") {
  const Field& f4 = Registry::field(4);
  HomPoly H2 = fermat_form(f4, 4);
  VertexUniquenessResult vu = vertex_uniqueness(H2);
  CHECK(vu.bijective);
  CHECK(vu.failures.empty());
  CHECK(vu.plane_of_point.size() == 45);

  // invariance under transport
  Rng rng(21);
  ProjTransform T = random_transform(f4, 3, rng);
  VertexUniquenessResult vut = vertex_uniqueness(linear_substitute(H2, T));
  CHECK(vut.bijective);
  CHECK(vut.plane_of_point.size() == 45);

  const Field& f9 = Registry::field(9);
  VertexUniquenessResult vu9 = vertex_uniqueness(fermat_form(f9, 4));
  CHECK(vu9.bijective);
  CHECK(vu9.plane_of_point.size() == 280);
}

TEST_CASE("vertex map reports failures for a line not on the surface") {
  const Field& f = Registry::field(4);
  HomPoly H2 = fermat_form(f, 4);
  // (1,0,0,0) is off the surface, so this line is not contained in it
  ProjLine off = line_through(f, make_point(f, 3, {1, 0, 0, 0}), make_point(f, 3, {0, 1, 0, 0}));
  VertexMapResult vm = vertex_map(H2, off);
  CHECK(!vm.bijective);
  CHECK(!vm.failures.empty());
}

TEST_CASE("distinct non-concurrent factors classify as Other") {
  const Field& f = Registry::field(4);
  // section of {X_1 X_2 X_3 = 0} by {X_0 = 0} is a coordinate triangle
  HomPoly S = parse_poly(f, "X1*X2*X3");
  SectionClass cls = classify_section(S, make_plane(f, {1, 0, 0, 0}));
  CHECK(cls.kind == SectionKind::Other);
  CHECK(cls.reason == "d distinct linear factors, not concurrent");

  // repeated factors also fall outside the pencil definition
  HomPoly S2 = parse_poly(f, "X1^2*X2+0*X3^3");
  SectionClass cls2 = classify_section(S2, make_plane(f, {1, 0, 0, 0}));
  CHECK(cls2.kind == SectionKind::Other);
}

TEST_CASE("lines of the surface through a pencil vertex are pencil components") {
  // exhaustive over all 45 pencil planes at q = 4
  const Field& f = Registry::field(4);
  HomPoly H2 = fermat_form(f, 4);
  auto lines = lines_on_surface(H2);
  SectionReport rep = section_survey(H2);
  long long pencil_planes = 0;
  for (const auto& ps : rep.planes) {
    if (ps.cls.kind != SectionKind::Pencil) continue;
    ++pencil_planes;
    const ProjPoint& v = ps.cls.pencil->vertex;
    std::set<ProjLine> components(ps.cls.pencil->lines.begin(), ps.cls.pencil->lines.end());
    for (const auto& l : lines) {
      if (!line_contains(f, l, v)) continue;
      CHECK(components.count(l) == 1);
    }
  }
  CHECK(pencil_planes == 45);
}
