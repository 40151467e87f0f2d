// Acceptance suite: one line per criterion, exact values, nonzero exit on
// any failure. Each criterion is self-contained and uses only public API.

#include <chrono>
#include <cstdio>
#include <set>

#include "herm/bounds.hpp"
#include "herm/census.hpp"
#include "herm/report.hpp"
#include "herm/zeta.hpp"

using namespace herm;

namespace {

int failures = 0;

void report(int id, const char* what, bool ok, double secs) {
  std::printf("%s  criterion %d: %s  (%.1fs)\n", ok ? "PASS" : "FAIL", id, what, secs);
  if (!ok) ++failures;
}

template <typename Fn>
void criterion(int id, const char* what, Fn fn) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = fn();
  } catch (const std::exception& e) {
    std::printf("      exception: %s\n", e.what());
    ok = false;
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report(id, what, ok, secs);
}

bool criterion1_counts() {
  bool ok = true;
  const long long expected[3][4] = {
      // n = 1, 2, 3 over q = 4, 9, 16, 25
      {3, 4, 5, 6},
      {9, 28, 65, 126},
      {45, 280, 1105, 3276},
  };
  for (int ni = 0; ni < 3; ++ni) {
    int n = ni + 1;
    int qi = 0;
    for (int q : {4, 9, 16, 25}) {
      const Field& f = Registry::field(q);
      HomPoly h = fermat_form(f, n + 1);
      long long direct = count_points(h);
      long long predicted = predicted_count(n, f);
      ok = ok && (direct == predicted) && (predicted == expected[ni][qi]);
      ++qi;
    }
  }
  // headline values
  ok = ok && (predicted_count(2, Registry::field(4)) == 9);
  ok = ok && (predicted_count(3, Registry::field(4)) == 45);
  ok = ok && (predicted_count(2, Registry::field(9)) == 28);
  ok = ok && (predicted_count(3, Registry::field(9)) == 280);
  return ok;
}

bool criterion2_survey() {
  SectionReport r4 = section_survey(fermat_form(Registry::field(4), 4));
  bool ok = (r4.nu1 == 45 && r4.nu2 == 40 && r4.nu_other == 0);
  SectionReport r9 = section_survey(fermat_form(Registry::field(9), 4));
  ok = ok && (r9.nu1 == 280 && r9.nu2 == 540 && r9.nu_other == 0);
  return ok;
}

bool criterion3_pencil_structure() {
  const Field& f = Registry::field(4);
  HomPoly H2 = fermat_form(f, 4);
  auto lines = lines_on_surface(H2);
  bool ok = (lines.size() == 27);

  long long incidences = 0;
  for (const auto& l : lines) {
    VertexMapResult vm = vertex_map(H2, l);
    ok = ok && vm.failures.empty() && vm.bijective && vm.entries.size() == 5;
    incidences += static_cast<long long>(vm.entries.size());
  }
  ok = ok && (incidences == 135);  // 45*3 = 27*5

  VertexUniquenessResult vu = vertex_uniqueness(H2);
  ok = ok && vu.bijective && vu.plane_of_point.size() == 45;

  // every line of the surface through a pencil vertex is a pencil component
  SectionReport rep = section_survey(H2);
  long long pencils = 0;
  for (const auto& ps : rep.planes) {
    if (ps.cls.kind != SectionKind::Pencil) continue;
    ++pencils;
    std::set<ProjLine> comp(ps.cls.pencil->lines.begin(), ps.cls.pencil->lines.end());
    for (const auto& l : lines) {
      if (line_contains(f, l, ps.cls.pencil->vertex)) ok = ok && comp.count(l) == 1;
    }
  }
  ok = ok && (pencils == 45);
  return ok;
}

CensusResult census_once() { return cubic_census_f4(); }

bool criterion4_sziklai(const CensusResult& census) {
  KCurveReport k = k_curve_check();
  bool ok = (k.n4 == 14) && k.complement_of_subplane && k.consistent;
  ok = ok && (census.visited == 349525);
  ok = ok && census.structural_failures.empty();
  for (const auto& [n, c] : census.hist_line_free) ok = ok && (n <= 9);
  return ok;
}

bool criterion5_detour(const CensusResult& census) {
  const Field& f = Registry::field(4);
  HomPoly fermat = fermat_form(f, 3);
  bool ok = census.structural_failures.empty();
  ok = ok && (census.line_free_n9 == 2520) && (static_cast<long long>(census.records.size()) == 2520);
  long long all_flex = 0;
  for (const auto& rec : census.records) {
    ok = ok && rec.singular_points.empty();
    if (rec.all_flexes) {
      ++all_flex;
      // equivalence transform stored and re-verified
      if (!rec.to_standard.has_value()) {
        ok = false;
        continue;
      }
      HomPoly C = from_dense(f, 3, 3, rec.coeffs);
      ok = ok && linear_substitute(C, *rec.to_standard).scalar_equal(fermat);
      ok = ok && rec.hermitian_equivalent;
    } else {
      ok = ok && !rec.hermitian_equivalent;
    }
  }
  ok = ok && (all_flex == 280) && (census.all_flex_count == 280);
  // the irreducibility oracle ran on every line-free curve at/above the
  // threshold (d-2)q+3 = 7 and found no counterexample (no failure records)
  ok = ok && (census.irreducibility_checked == 52920);
  return ok;
}

bool criterion6_characterization() {
  const Field& f = Registry::field(4);
  HomPoly H2 = fermat_form(f, 4);
  bool ok = true;

  // (a) 100 random PGL(4, F_4) transports, exact reconstruction round trip
  for (int i = 0; i < 100; ++i) {
    Rng rng = Rng::substream(20250809, static_cast<std::uint64_t>(i));
    ProjTransform T = random_transform(f, 3, rng);
    HomPoly S = linear_substitute(H2, T);
    if (count_points(S) != 45) {
      ok = false;
      continue;
    }
    ReconstructResult rec = reconstruct_hermitian(S);
    ok = ok && rec.success && is_nonsingular(f, rec.matrix);
    ok = ok &&
         linear_substitute(S, rec.transform).scalar_equal(to_polynomial(f, rec.matrix));
  }

  // (b) 10^5 seeded plane-free random cubic surfaces: never above the
  // elementary bound, and any extremal hit must reconstruct
  ProbeSummary probe = random_surface_probe(4, 100000, 1);
  ok = ok && probe.structural_failures.empty();
  for (const auto& [n, c] : probe.histogram) ok = ok && (n <= elementary(3, 4));
  for (const auto& hit : probe.extremal) ok = ok && hit.survey_ok && hit.reconstructed;
  return ok;
}

bool criterion7_zeta() {
  bool ok = true;
  const long long b2s[4] = {7, 22, 53, 106};
  int i = 0;
  for (int q : {4, 9, 16, 25}) {
    ok = ok && (hermitian_b2(q) == b2s[i++]);
    ZetaRational z = zeta_p2(q);
    for (long long k = 1; k < hermitian_b2(q); ++k) z = blowup(z, q);
    ok = ok && (z == hermitian_surface_zeta(q));
  }
  // direct-count cross-checks: (q, m) in {(4,1), (4,2), (9,1), (9,2)}
  const long long expected[2][2] = {{45, 369}, {280, 8344}};
  int qi = 0;
  for (int q : {4, 9}) {
    HomPoly H2 = fermat_form(Registry::field(q), 4);
    auto rows = zeta_cross_check(H2, hermitian_surface_zeta(q), 2);
    ok = ok && rows.size() == 2;
    for (int m = 0; m < 2; ++m) {
      ok = ok && rows[m].agree;
      ok = ok && (rows[m].direct == expected[qi][m]);
      ok = ok && (rows[m].from_zeta == expected[qi][m]);
    }
    ++qi;
  }
  return ok;
}

bool criterion8_bound_identity() {
  bool ok = true;
  for (int q : {4, 9, 16, 25}) {
    int d = Registry::field(q).sqrt_q() + 1;
    ok = ok && (weil_deligne(3, d, q) == elementary(d, q));
  }
  return ok;
}

}  // namespace

int main() {
  criterion(1, "Hermitian point counts match the closed formula, all (n, q)",
            criterion1_counts);
  criterion(2, "plane-section survey tallies (45,40,0) at q=4 and (280,540,0) at q=9",
            criterion2_survey);
  criterion(3, "27 lines, bijective vertex maps, 45<->45 pencil bijection, double count 135",
            criterion3_pencil_structure);

  auto t0 = std::chrono::steady_clock::now();
  CensusResult census = census_once();
  std::printf("      (census: %lld curves visited in %.1fs, shared by criteria 4-5)\n",
              census.visited,
              std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  criterion(4, "N_4(K)=14, subplane complement, census finds no Sziklai violation",
            [&] { return criterion4_sziklai(census); });
  criterion(5, "nine-point line-free cubics: nonsingular, irreducible, flexes => Hermitian",
            [&] { return criterion5_detour(census); });

  criterion(6, "100 transports reconstructed exactly; 10^5 probes stay under 45",
            criterion6_characterization);
  criterion(7, "zeta equals b2-1 blowups of P^2; N_m cross-checks 45/369/280/8344",
            criterion7_zeta);
  criterion(8, "weil_deligne(3, sqrt(q)+1, q) = elementary(sqrt(q)+1, q), all q",
            criterion8_bound_identity);

  if (failures == 0) {
    std::printf("acceptance: all 8 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) FAILED\n", failures);
  return 1;
}
