#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "app.hpp"

int main(int argc, char** argv) {
  CLI::App app{"ibis: irredundant bases, IBIS verdicts, and matroids of "
               "finite permutation groups"};
  app.require_subcommand(1);

  ibistk::cli::RunConfig cfg;
  std::string group_path, catalog_name, suite_name = "small";

  auto add_source = [&](CLI::App* cmd) {
    cmd->add_option("--group", group_path, "group file to load");
    cmd->add_option("--catalog", catalog_name, "catalog name to construct");
  };
  auto add_caps = [&](CLI::App* cmd) {
    cmd->add_option("--nodes", cfg.node_cap, "search node cap");
    cmd->add_option("--time", cfg.time_cap_seconds, "search time cap, seconds");
    cmd->add_option("--workers", cfg.workers, "parallel workers for the spectrum search");
    cmd->add_flag("--json", cfg.json, "machine-readable output");
  };

  CLI::App* analyze = app.add_subcommand("analyze",
                                         "base sizes, spectrum, IBIS verdict");
  add_source(analyze);
  add_caps(analyze);

  CLI::App* ct = app.add_subcommand("ct", "commutativity-transitivity check");
  add_source(ct);
  add_caps(ct);

  CLI::App* catalog = app.add_subcommand("catalog", "list the named groups");
  catalog->add_flag("--json", cfg.json, "machine-readable output");

  CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("--suite", suite_name, "small or full");
  add_caps(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1; // usage errors exit 1, --help exits 0
  }

  if (analyze->parsed())
    return ibistk::cli::run_analyze(group_path, catalog_name, cfg, std::cout,
                                    std::cerr);
  if (ct->parsed())
    return ibistk::cli::run_ct(group_path, catalog_name, cfg, std::cout,
                               std::cerr);
  if (catalog->parsed()) return ibistk::cli::run_catalog(cfg, std::cout);
  if (verify->parsed())
    return ibistk::cli::run_verify(suite_name, cfg, std::cout, std::cerr);
  return 1;
}
