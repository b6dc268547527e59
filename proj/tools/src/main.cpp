#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

using tlalg::cli::Command;
using tlalg::cli::JobConfig;

void add_system_options(CLI::App* sub, JobConfig& cfg) {
  sub->add_option("--complex", cfg.complex, "builtin:NAME (circle, circleN, torus3x3, torusRxC, sphere, simplexN) or a JSON file");
  sub->add_option("--rep", cfg.rep, "rank-1 generator values, e.g. a=2,b=-3/2");
  sub->add_option("--rep-file", cfg.rep_file, "representation or transports JSON");
}

void add_algebroid_options(CLI::App* sub, JobConfig& cfg) {
  sub->add_option("--omega", cfg.omega_file, "2-cocycle JSON over the local system");
  sub->add_option("--algebroid", cfg.algebroid_file, "algebroid JSON (complex, representation/transports, omega)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Transitive Lie algebroids over simplicial complexes: twisted cohomology, Chern-Weil, characteristic classes"};
  app.require_subcommand(1);
  JobConfig cfg;
  cfg.verbosity = tlalg::cli::verbosity_from_env();
  app.add_flag("--json", cfg.json, "machine-readable output");

  auto* validate = app.add_subcommand("validate", "check a complex, local system or algebroid");
  add_system_options(validate, cfg);
  add_algebroid_options(validate, cfg);

  auto* coh = app.add_subcommand("cohomology", "twisted cohomology dimensions");
  add_system_options(coh, cfg);
  coh->add_option("--degree", cfg.degree, "single degree");
  coh->add_flag("--all-degrees", cfg.all_degrees, "every degree up to the dimension (default)");

  auto* cw = app.add_subcommand("chern-weil", "invariant sections and Chern-Weil image");
  add_system_options(cw, cfg);
  add_algebroid_options(cw, cfg);
  cw->add_option("--power", cfg.power, "symmetric power k (default: all k with 2k <= dim)");

  auto* cc = app.add_subcommand("char-classes", "sign and log classes of a rank-1 system");
  add_system_options(cc, cfg);
  cc->add_flag("--check-surjectivity", cfg.check_surjectivity, "run the torus surjectivity check");

  auto* pb = app.add_subcommand("pullback", "pull back along maps; checks a contiguity chain");
  add_system_options(pb, cfg);
  add_algebroid_options(pb, cfg);
  pb->add_option("--map", cfg.map_files, "map JSON; repeat for a chain")->required();

  auto* sj = app.add_subcommand("surjectivity", "surjectivity certificate on a grid torus");
  add_system_options(sj, cfg);

  for (auto* sub : {validate, coh, cw, cc, pb, sj}) sub->add_flag("--json", cfg.json, "machine-readable output");

  CLI11_PARSE(app, argc, argv);

  if (validate->parsed()) cfg.command = Command::Validate;
  if (coh->parsed()) cfg.command = Command::Cohomology;
  if (cw->parsed()) cfg.command = Command::ChernWeil;
  if (cc->parsed()) cfg.command = Command::CharClasses;
  if (pb->parsed()) cfg.command = Command::Pullback;
  if (sj->parsed()) cfg.command = Command::Surjectivity;
  return tlalg::cli::run(cfg, std::cout, std::cerr);
}
