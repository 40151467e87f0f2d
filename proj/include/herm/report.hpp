#pragma once

#include <string>

#include "json.hpp"

#include "herm/census.hpp"
#include "herm/zeta.hpp"

namespace herm {

// One run of the tool; fully serialized into the report header, making
// every output self-describing.
struct RunConfig {
  std::string subcommand;
  int q = 0;
  std::string poly;
  int nvars = 0;  // 0 = infer from the polynomial text
  std::uint64_t seed = 1;
  long long trials = 10000;
  int shard_index = 0;
  int shard_count = 1;
  int check_m = 0;
  int blowups = 0;
  std::string out;  // output path; empty writes to stdout

  bool has_poly() const { return !poly.empty(); }
};

struct Report {
  nlohmann::json doc;
  // 0 = success, 1 = usage error (thrown instead), 2 = structural failures
  int exit_code = 0;
};

// Dispatch a validated config. UsageError/CapabilityError propagate to the
// caller; structural-failure findings set exit_code 2.
Report run(const RunConfig& cfg);

nlohmann::json to_json(const RunConfig& cfg);
nlohmann::json to_json(const Field& f, const ProjPoint& P);
nlohmann::json to_json(const ProjPlane& H);
nlohmann::json to_json(const ProjLine& l);
nlohmann::json to_json(int n, const Mat4& m);
nlohmann::json to_json(const HomPoly& F);

}  // namespace herm
