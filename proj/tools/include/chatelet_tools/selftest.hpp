#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chatelet/surface.hpp"

namespace chatelet::tools {

struct SelftestOptions {
  int pairs = 500;
  std::uint64_t seed = 20260101;
};

struct SelftestResult {
  int product_formula_pairs = 0;
  int conic_checks = 0;
  int surface_checks = 0;
  /// Counterexamples, empty on success.
  std::vector<std::string> failures;

  [[nodiscard]] bool ok() const { return failures.empty(); }
};

/// The fixed surfaces for the brute-force comparison.
std::vector<ChateletSurface> oracle_surfaces();

/// Product-formula sweep over random pairs with |num|, |den| <= 10^4.
void product_formula_sweep(const SelftestOptions& opts, SelftestResult& out);
/// Hilbert symbols and local solvability against brute force modulo p^6.
void oracle_suite(SelftestResult& out);

SelftestResult run_selftest(const SelftestOptions& opts);

}  // namespace chatelet::tools
