#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "bibdopt/limits.hpp"
#include "bibdopt/optimality.hpp"

namespace bibdopt {

enum class CheckStatus { pass, fail };

struct VerifyCheck {
  std::string claim_id;
  std::string claim;
  nlohmann::ordered_json parameters;
  CheckStatus status = CheckStatus::pass;
  /// Design ids and exact values backing the verdict.
  nlohmann::ordered_json witness;
};

struct VerifySuiteReport {
  std::string suite;
  std::vector<VerifyCheck> checks;

  std::size_t passed() const;
  std::size_t failed() const;
  bool ok() const { return failed() == 0; }
};

/// Narrows a suite to part of its default parameter grid. Empty fields keep
/// the defaults.
struct VerifyOptions {
  std::optional<int> v_min;
  std::optional<int> v_max;
  std::optional<std::vector<unsigned long>> ys;
  std::optional<Criterion> criterion;
  Limits limits{};
};

/// oracle, path-prop, cycle-prop, s3-lemma, complement, multipartite,
/// bounds, theorem1, eigen-bound, power-sums.
const std::vector<std::string>& suite_names();

/// Throws ValidationError for an unknown suite and ScaleCapError when the
/// requested parameters exceed the limits. "all" runs every suite.
std::vector<VerifySuiteReport> run_suite(std::string_view name, const VerifyOptions& options = {});

nlohmann::ordered_json to_json(const VerifySuiteReport& r);

}  // namespace bibdopt
