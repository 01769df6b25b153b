#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "digcon/algebra.hpp"
#include "digcon/digraph.hpp"

namespace digcon {

struct CriterionResult {
  int id = 0;
  std::string group;
  std::string title;
  bool pass = false;
  /// Passed only the mandatory part; an optional part ran out of budget.
  bool budget_limited = false;
  std::string detail;
};

struct PaperCheckOptions {
  /// A group name ("chain", "fig3", ...) or a criterion number.
  std::optional<std::string> only;
  /// Replaces the stored seven-vertex regression digraph.
  std::optional<Digraph> fig3;
  std::uint64_t seed = 20'231'107;
};

/// Group names in criterion order.
std::vector<std::string> paper_check_groups();

std::vector<CriterionResult> run_paper_check(const PaperCheckOptions& options = {});

std::string format_result(const CriterionResult& r);

/// A reflexive digraph compatible with an affine Z_2 power, produced by
/// generated_digraph from a random reflexive seed and a generating placement.
struct AffineInstance {
  FiniteAlgebra algebra;
  Digraph digraph;
};

/// Deterministic for a given seed; exponents cycle through 1, 2, 3.
std::vector<AffineInstance> affine_instances(std::size_t count, std::uint64_t seed);

/// The reflexive 3-cycle x→y→z→x.
Digraph three_cycle_seed();

}  // namespace digcon
