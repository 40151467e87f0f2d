#include "herm/report.hpp"

#include "herm/bounds.hpp"

namespace herm {

using nlohmann::json;

json to_json(const RunConfig& cfg) {
  json j;
  j["subcommand"] = cfg.subcommand;
  j["q"] = cfg.q;
  if (cfg.has_poly()) j["poly"] = cfg.poly;
  if (cfg.nvars > 0) j["nvars"] = cfg.nvars;
  if (cfg.subcommand == "probe") {
    j["seed"] = cfg.seed;
    j["trials"] = cfg.trials;
    j["rng"] = "mt19937_64 with splitmix64 per-trial substreams";
  }
  if (cfg.subcommand == "census" || cfg.subcommand == "probe")
    j["shard"] = std::to_string(cfg.shard_index) + "/" + std::to_string(cfg.shard_count);
  if (cfg.check_m > 0) j["check_m"] = cfg.check_m;
  if (cfg.blowups > 0) j["blowups"] = cfg.blowups;
  if (!cfg.out.empty()) j["out"] = cfg.out;
  return j;
}

json to_json(const Field&, const ProjPoint& P) {
  json j = json::array();
  for (int i = 0; i <= P.n; ++i) j.push_back(P.x[i]);
  return j;
}

json to_json(const ProjPlane& H) {
  json j = json::array();
  for (int i = 0; i < 4; ++i) j.push_back(H.h[i]);
  return j;
}

json to_json(const ProjLine& l) {
  json j = json::array();
  for (int r = 0; r < 2; ++r) {
    json row = json::array();
    for (int i = 0; i <= l.n; ++i) row.push_back(l.b[r][i]);
    j.push_back(row);
  }
  return j;
}

json to_json(int n, const Mat4& m) {
  json j = json::array();
  for (int i = 0; i <= n; ++i) {
    json row = json::array();
    for (int k = 0; k <= n; ++k) row.push_back(m[i][k]);
    j.push_back(row);
  }
  return j;
}

json to_json(const HomPoly& F) {
  json j;
  j["nvars"] = F.nvars();
  j["degree"] = F.degree();
  json terms = json::array();
  for (const auto& t : F.terms()) {
    json e = json::array();
    for (int i = 0; i < F.nvars(); ++i) e.push_back(t.e[i]);
    terms.push_back(json::array({e, t.c}));
  }
  j["terms"] = terms;
  return j;
}

namespace {

json header(const RunConfig& cfg, const Field& f) {
  json h;
  h["schema"] = kReportSchema;
  h["tool"] = kToolName;
  h["version"] = kToolVersion;
  h["config"] = to_json(cfg);
  json fld;
  fld["q"] = f.q();
  fld["p"] = f.p();
  fld["e"] = f.e();
  fld["modulus"] = f.spec().modulus;
  h["field"] = fld;
  return h;
}

json bound_row(const BoundReport& r) {
  json j;
  j["bound"] = r.bound;
  j["n"] = r.n;
  j["d"] = r.d;
  j["q"] = r.q;
  j["value"] = r.value;
  j["observed"] = r.observed;
  j["status"] = to_string(r.status);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

json run_count(const RunConfig& cfg, const Field& f) {
  HomPoly F = parse_poly(f, cfg.poly, cfg.nvars);
  json body;
  body["N"] = count_points(F);
  return body;
}

json run_bounds(const RunConfig& cfg, const Field& f) {
  HomPoly F = parse_poly(f, cfg.poly, cfg.nvars);
  json body;
  json rows = json::array();
  for (const auto& r : check_bounds(F)) rows.push_back(bound_row(r));
  body["reports"] = rows;
  return body;
}

json run_detect(const RunConfig& cfg, const Field& f) {
  HomPoly F = parse_poly(f, cfg.poly, cfg.nvars);
  auto res = detect_hermitian(F);
  json body;
  body["hermitian"] = res.has_value();
  if (res) {
    body["rho"] = res->first;
    body["matrix"] = to_json(res->second.n, res->second.a);
    body["nonsingular"] = is_nonsingular(f, res->second);
  }
  return body;
}

json run_sections(const RunConfig& cfg, const Field& f) {
  HomPoly S = parse_poly(f, cfg.poly, cfg.nvars);
  SectionReport rep = section_survey(S);
  json body;
  json planes = json::array();
  for (const auto& ps : rep.planes) {
    json row;
    row["plane"] = to_json(ps.plane);
    row["N"] = ps.cls.npoints;
    switch (ps.cls.kind) {
      case SectionKind::Pencil: {
        row["class"] = "pencil";
        row["vertex"] = to_json(f, ps.cls.pencil->vertex);
        json lines = json::array();
        for (const auto& l : ps.cls.pencil->lines) lines.push_back(to_json(l));
        row["lines"] = lines;
        break;
      }
      case SectionKind::Hermitian:
        row["class"] = "hermitian";
        row["rho"] = *ps.cls.rho;
        row["matrix"] = to_json(ps.cls.matrix->n, ps.cls.matrix->a);
        break;
      case SectionKind::Other:
        row["class"] = "other";
        row["reason"] = ps.cls.reason;
        break;
    }
    planes.push_back(row);
  }
  body["planes"] = planes;
  body["tallies"] = {{"nu1", rep.nu1}, {"nu2", rep.nu2}, {"other", rep.nu_other}};
  return body;
}

json census_record(const CurveRecord& rec) {
  json j;
  j["index"] = rec.index;
  j["coeffs"] = rec.coeffs;
  j["N"] = rec.n4;
  j["has_linear_component"] = rec.has_linear_component;
  j["singular_points"] = rec.singular_points;
  j["flex_multiplicities"] = rec.flex_multiplicities;
  j["all_flexes"] = rec.all_flexes;
  j["hermitian_equivalent"] = rec.hermitian_equivalent;
  if (rec.to_standard) j["to_standard"] = to_json(rec.to_standard->n, rec.to_standard->m);
  return j;
}

json hist_json(const std::map<int, long long>& hist) {
  json j;
  for (const auto& [n, c] : hist) j[std::to_string(n)] = c;
  return j;
}

json run_census(const RunConfig& cfg, const Field&) {
  if (cfg.q != 4) throw CapabilityError("census: only q=4 is in scope");
  CensusResult res = cubic_census_f4(cfg.shard_index, cfg.shard_count);
  json body;
  json summary;
  summary["visited"] = res.visited;
  summary["with_linear_component"] = res.with_linear_component;
  summary["hist_all"] = hist_json(res.hist_all);
  summary["hist_line_free"] = hist_json(res.hist_line_free);
  summary["line_free_n9"] = res.line_free_n9;
  summary["all_flex"] = res.all_flex_count;
  summary["hermitian_equivalent"] = res.hermitian_equivalent_count;
  summary["irreducibility_checked"] = res.irreducibility_checked;
  body["summary"] = summary;
  json records = json::array();
  for (const auto& rec : res.records) records.push_back(census_record(rec));
  body["records"] = records;
  body["structural_failures"] = res.structural_failures;
  return body;
}

json run_probe(const RunConfig& cfg, const Field&) {
  ProbeSummary sum = random_surface_probe(cfg.q, cfg.trials, cfg.seed, cfg.shard_index,
                                          cfg.shard_count);
  json body;
  body["rejected_plane_component"] = sum.rejected_plane_component;
  body["histogram"] = hist_json(sum.histogram);
  json hits = json::array();
  for (const auto& h : sum.extremal) {
    json row;
    row["trial"] = h.trial;
    row["coeffs"] = h.coeffs;
    row["survey_ok"] = h.survey_ok;
    row["reconstructed"] = h.reconstructed;
    hits.push_back(row);
  }
  body["extremal"] = hits;
  body["structural_failures"] = sum.structural_failures;
  return body;
}

json zeta_json(const ZetaRational& z) {
  json j = json::array();
  for (const auto& [c, m] : z.factors) j.push_back(json::array({c, m}));
  return j;
}

json run_zeta(const RunConfig& cfg, const Field& f) {
  json body;
  body["p2"] = zeta_json(zeta_p2(cfg.q));
  if (f.has_conjugation()) {
    body["b2"] = hermitian_b2(cfg.q);
    body["hermitian_surface"] = zeta_json(hermitian_surface_zeta(cfg.q));
  }
  if (cfg.blowups > 0) {
    ZetaRational z = zeta_p2(cfg.q);
    for (int i = 0; i < cfg.blowups; ++i) z = blowup(z, cfg.q);
    body["blown_up"] = zeta_json(z);
    if (f.has_conjugation())
      body["blown_up_equals_hermitian"] = (z == hermitian_surface_zeta(cfg.q));
  }
  if (cfg.has_poly()) {
    int m_max = cfg.check_m > 0 ? cfg.check_m : 1;
    HomPoly S = parse_poly(f, cfg.poly, cfg.nvars);
    json rows = json::array();
    for (const auto& row : zeta_cross_check(S, hermitian_surface_zeta(cfg.q), m_max)) {
      rows.push_back({{"m", row.m},
                      {"from_zeta", row.from_zeta},
                      {"direct", row.direct},
                      {"agree", row.agree}});
    }
    body["cross_check"] = rows;
  }
  return body;
}

json run_reconstruct(const RunConfig& cfg, const Field& f, bool* structural) {
  HomPoly S = parse_poly(f, cfg.poly, cfg.nvars);
  ReconstructResult res = reconstruct_hermitian(S);
  json body;
  body["success"] = res.success;
  if (res.success) {
    body["transform"] = to_json(res.transform.n, res.transform.m);
    body["rho"] = res.rho;
    body["matrix"] = to_json(res.matrix.n, res.matrix.a);
  } else {
    body["structural_failure"] = res.failure;
    *structural = true;
  }
  return body;
}

}  // namespace

Report run(const RunConfig& cfg) {
  const Field& f = Registry::field(cfg.q);
  Report rep;
  rep.doc = header(cfg, f);
  bool structural = false;
  json body;
  if (cfg.subcommand == "count") {
    body = run_count(cfg, f);
  } else if (cfg.subcommand == "bounds") {
    body = run_bounds(cfg, f);
  } else if (cfg.subcommand == "detect") {
    body = run_detect(cfg, f);
  } else if (cfg.subcommand == "sections") {
    body = run_sections(cfg, f);
  } else if (cfg.subcommand == "census") {
    body = run_census(cfg, f);
    structural = !body["structural_failures"].empty();
  } else if (cfg.subcommand == "probe") {
    body = run_probe(cfg, f);
    structural = !body["structural_failures"].empty();
  } else if (cfg.subcommand == "zeta") {
    body = run_zeta(cfg, f);
  } else if (cfg.subcommand == "reconstruct") {
    body = run_reconstruct(cfg, f, &structural);
  } else {
    throw UsageError("unknown subcommand: " + cfg.subcommand);
  }
  rep.doc["body"] = body;
  rep.doc["status"] = structural ? "structural-failure" : "ok";
  rep.exit_code = structural ? 2 : 0;
  return rep;
}

}  // namespace herm
