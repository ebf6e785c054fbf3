#ifndef LMTOOL_CONFIG_HPP
#define LMTOOL_CONFIG_HPP

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "lm/field.hpp"
#include "lm/ideal.hpp"

namespace lmtool {

// Exit codes shared by every subcommand.
enum ExitCode { kPass = 0, kFail = 1, kInconclusive = 2, kUsage = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Run-wide configuration; every command echoes it into its JSON output so
// re-runs are reproducible byte for byte.
struct RunConfig {
  std::string prime = "Q";          // "Q" or one of 3, 5, 7, 11
  long long budget_pairs = 2'000'000;
  int budget_degree = 120;
  int precision = 0;                // u-adic precision for relative positions (0 = auto)
  std::string out;                  // output directory; empty writes to stdout
  unsigned long long seed = 1;

  void validate() const {
    if (prime != "Q" && prime != "3" && prime != "5" && prime != "7" && prime != "11")
      throw UsageError("--prime must be one of Q, 3, 5, 7, 11");
    if (budget_pairs <= 0 || budget_degree <= 0 || precision < 0)
      throw UsageError("budgets must be positive");
  }

  bool rational() const { return prime == "Q"; }
  long long p() const { return rational() ? 0 : std::stoll(prime); }

  lm::Field field() const { return rational() ? lm::Field::Q() : lm::Field::Fp(p()); }

  lm::GBOptions gb() const {
    lm::GBOptions o;
    o.max_pairs = (size_t)budget_pairs;
    o.max_degree = budget_degree;
    return o;
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["prime"] = prime;
    j["budget_pairs"] = budget_pairs;
    j["budget_degree"] = budget_degree;
    j["precision"] = precision;
    j["out"] = out;
    j["seed"] = seed;
    return j;
  }
};

}  // namespace lmtool

#endif
