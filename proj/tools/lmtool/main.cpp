#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"
#include "config.hpp"

int main(int argc, char** argv) {
  using namespace lmtool;

  CLI::App app{"lmtool: verification pipelines for ramified unitary local models"};
  app.require_subcommand(1);
  app.fallthrough();  // accept the global flags after the subcommand name too

  RunConfig cfg;
  app.add_option("--prime", cfg.prime, "coefficient field: Q or one of 3, 5, 7, 11")
      ->capture_default_str();
  app.add_option("--budget-pairs", cfg.budget_pairs, "Groebner S-pair budget")
      ->capture_default_str();
  app.add_option("--budget-degree", cfg.budget_degree, "Groebner total-degree budget")
      ->capture_default_str();
  app.add_option("--precision", cfg.precision, "u-adic precision for relative positions (0 = auto)")
      ->capture_default_str();
  app.add_option("--out", cfg.out, "output directory (default: stdout)");
  app.add_option("--seed", cfg.seed, "seed for randomized property checks")
      ->capture_default_str();

  int n = 0, r = 0, s = 0;
  std::vector<int> index;
  bool with_svg = false;
  std::string kase = "A", level = "naive", ideal_file, var = "u", suite;

  CLI::App* adm = app.add_subcommand("admissible", "enumerate the mu-admissible set");
  adm->add_option("-n,--n", n, "dimension n")->required();
  adm->add_option("-r,--r", r, "signature r")->required();
  adm->add_option("-s,--s", s, "signature s")->required();
  adm->add_option("-I,--index", index, "parahoric index set (default: Iwahori)");
  adm->add_flag("--svg", with_svg, "also emit the alcove figure (rank <= 2)");

  CLI::App* chart = app.add_subcommand("chart", "emit a chart ideal as JSON");
  chart->add_option("--case", kase, "A | B | B1 | picard | example1 | example2")
      ->capture_default_str();
  chart->add_option("-n,--n", n, "dimension n");
  chart->add_option("-r,--r", r, "signature r");
  chart->add_option("-s,--s", s, "signature s");
  chart->add_option("--level", level, "naive | wedge | spin")->capture_default_str();

  CLI::App* flat = app.add_subcommand("flatness", "DVR-flatness verdict for an ideal file");
  flat->add_option("ideal-file", ideal_file, "JSON ideal (or chart output)")->required();
  flat->add_option("--var", var, "uniformizer variable")->capture_default_str();

  CLI::App* verify = app.add_subcommand("verify", "run a named verification suite");
  verify->add_option("suite", suite,
                     "picard | orthogonal | special-parahoric | spin | weyl | conjectures")
      ->required();

  CLI::App* svg = app.add_subcommand("svg", "emit the alcove figure (rank <= 2)");
  svg->add_option("-n,--n", n, "dimension n")->required();
  svg->add_option("-r,--r", r, "signature r")->required();
  svg->add_option("-s,--s", s, "signature s")->required();
  svg->add_option("-I,--index", index, "parahoric index set (default: Iwahori)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    cfg.validate();
    std::optional<std::vector<int>> idx;
    if (!index.empty()) idx = index;
    if (adm->parsed()) return cmd_admissible(cfg, n, r, s, idx, with_svg);
    if (chart->parsed()) return cmd_chart(cfg, kase, n, r, s, level);
    if (flat->parsed()) return cmd_flatness(cfg, ideal_file, var);
    if (verify->parsed()) return cmd_verify(cfg, suite);
    if (svg->parsed()) return cmd_svg(cfg, n, r, s, idx);
    std::cerr << "error: no subcommand\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const lm::BudgetExhausted& e) {
    std::cerr << "inconclusive: " << e.what() << '\n';
    return kInconclusive;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
