// Command-line front end: every subcommand emits a self-describing JSON
// report on stdout (or --out), with a one-line human summary on stderr.
// Exit codes: 0 success, 1 usage error, 2 structural-failure findings.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "herm/report.hpp"

namespace {

void add_shard_option(CLI::App* cmd, std::string* shard) {
  cmd->add_option("--shard", *shard, "shard spec i/n for partitioned runs");
}

void parse_shard(const std::string& shard, herm::RunConfig* cfg) {
  if (shard.empty()) return;
  auto slash = shard.find('/');
  if (slash == std::string::npos) throw herm::UsageError("--shard expects i/n");
  try {
    cfg->shard_index = std::stoi(shard.substr(0, slash));
    cfg->shard_count = std::stoi(shard.substr(slash + 1));
  } catch (const std::exception&) {
    throw herm::UsageError("--shard expects i/n");
  }
  if (cfg->shard_count < 1 || cfg->shard_index < 0 || cfg->shard_index >= cfg->shard_count)
    throw herm::UsageError("--shard indices out of range");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Point counts, bounds and plane-section structure of Hermitian "
               "surfaces over small finite fields"};
  app.require_subcommand(1);

  herm::RunConfig cfg;
  std::string shard;

  auto add_common = [&](CLI::App* cmd, bool needs_poly) {
    cmd->add_option("--q", cfg.q, "field order")->required();
    cmd->add_option("--out", cfg.out, "write the JSON report to this file");
    auto* p = cmd->add_option("--poly", cfg.poly,
                              "polynomial, e.g. \"X0^3+w^2*X1^2*X2\" (w = canonical generator)");
    cmd->add_option("--nvars", cfg.nvars, "ambient variable count (default: inferred)");
    if (needs_poly) p->required();
    return p;
  };

  auto* count = app.add_subcommand("count", "count F_q-points of a hypersurface");
  add_common(count, true);

  auto* bounds = app.add_subcommand("bounds", "evaluate the point-count bounds");
  add_common(bounds, true);

  auto* detect = app.add_subcommand("detect", "detect a Hermitian form up to a scalar");
  add_common(detect, true);

  auto* sections = app.add_subcommand("sections", "classify all plane sections of a surface");
  auto* sec_poly = add_common(sections, false);
  sections->add_option("--surface", cfg.poly, "alias for --poly")->excludes(sec_poly);

  auto* census = app.add_subcommand("census", "exhaustive F_4 plane-cubic census");
  census->add_option("--q", cfg.q, "field order")->required();
  census->add_option("--out", cfg.out, "write the JSON report to this file");
  add_shard_option(census, &shard);

  auto* probe = app.add_subcommand("probe", "seeded random surface probe");
  probe->add_option("--q", cfg.q, "field order")->required();
  probe->add_option("--trials", cfg.trials, "number of samples");
  probe->add_option("--seed", cfg.seed, "RNG seed");
  probe->add_option("--out", cfg.out, "write the JSON report to this file");
  add_shard_option(probe, &shard);

  auto* zeta = app.add_subcommand("zeta", "rational zeta functions and cross-checks");
  zeta->add_option("--q", cfg.q, "field order")->required();
  zeta->add_option("--out", cfg.out, "write the JSON report to this file");
  zeta->add_option("--poly", cfg.poly, "surface to cross-check against the Hermitian zeta");
  zeta->add_option("--surface", cfg.poly, "alias for --poly");
  zeta->add_option("--blowups", cfg.blowups, "number of successive blow-ups of P^2");
  zeta->add_option("--check-m", cfg.check_m, "cross-check point counts up to F_{q^m}");

  auto* reconstruct = app.add_subcommand("reconstruct", "normalize an extremal surface");
  add_common(reconstruct, true);

  CLI11_PARSE(app, argc, argv);

  cfg.subcommand = app.get_subcommands().front()->get_name();

  try {
    parse_shard(shard, &cfg);
    if ((cfg.subcommand == "sections" || cfg.subcommand == "reconstruct") && cfg.poly.empty())
      throw herm::UsageError(cfg.subcommand + ": --poly is required");
    herm::Report rep = herm::run(cfg);
    std::string text = rep.doc.dump(2);
    if (cfg.out.empty()) {
      std::cout << text << "\n";
    } else {
      std::ofstream os(cfg.out, std::ios::binary);
      if (!os) throw herm::UsageError("cannot open output file: " + cfg.out);
      os << text << "\n";
    }
    std::cerr << cfg.subcommand << ": " << rep.doc["status"].get<std::string>() << "\n";
    return rep.exit_code;
  } catch (const herm::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const herm::CapabilityError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return 1;
  }
}
