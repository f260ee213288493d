#pragma once

#include <optional>
#include <string>
#include <vector>

namespace chatelet::tools {

struct ReproStep {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct ReproOptions {
  /// Negative control: flips every Hilbert symbol the chain reads directly.
  bool corrupt_symbols = false;
};

struct ReproResult {
  std::vector<ReproStep> steps;
  /// Per-place invariant table over Q(sqrt(29)).
  std::vector<std::string> table;

  [[nodiscard]] bool ok() const;
  [[nodiscard]] std::optional<ReproStep> first_failure() const;
};

/// Checks the chain of facts about y^2 - 5 z^2 = (3/5)(5t^4 + 7t^2 + 1):
/// no adelic points over Q, an obstruction with constant sum 1/2 over
/// Q(sqrt(29)).
ReproResult reproduce_counterexample(const ReproOptions& opts = {});

}  // namespace chatelet::tools
