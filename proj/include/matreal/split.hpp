#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matreal/matroid.hpp"

namespace matreal {

enum class SplitCondition {
  PairwiseIntersection,  // |H_i ∩ H_j| <= r_i + r_j - n
  Complement,            // |[d] \ H_i| >= n - r_i
  RankBelowN,            // r_i <= n - 1
  EdgeLargerThanRank,    // |H_i| >= r_i + 1
};

std::string_view to_string(SplitCondition c);

struct SplitViolation {
  SplitCondition condition;
  std::vector<int> edges;  // indices into h.edges
  std::string detail;
};

struct ValidationReport {
  std::vector<SplitViolation> violations;
  /// Structural problems outside the four conditions (bad d, n, labels).
  std::vector<std::string> structural;
  bool valid() const { return violations.empty() && structural.empty(); }
};

/// Lists every violated condition; an empty report means the hypergraph is valid.
ValidationReport validate_split(const SplitHypergraph& h);

/// Throws Error(InvalidHypergraph) carrying the report text when invalid.
Matroid elementary_split_matroid(const SplitHypergraph& h);

/// Recovers (H_i, r_i) when M is elementary split: the subspaces of M are the
/// only candidate hypergraph, and the rank functions are compared exhaustively.
std::optional<SplitHypergraph> recognize_elementary_split(const Matroid& m);

/// Every point of degree at most two is 2-simple.
bool is_2_simple_all(const Matroid& m);

}  // namespace matreal
