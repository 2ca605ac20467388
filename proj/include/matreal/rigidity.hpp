#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "matreal/matroid.hpp"
#include "matreal/orderings.hpp"

namespace matreal {

struct RigidityReport {
  Ordering ordering;
  std::int64_t sum_tau_tilde = 0;
  /// n^2 - 1 + d
  std::int64_t threshold = 0;
  bool rigid_criterion = false;
  bool has_n_plus_1_circuit = false;
  /// Rigidity verdict; absent when M has no (n+1)-circuit and the dimension count does not apply.
  std::optional<bool> rigid;
  /// The verdict relies on M being realizable, which is never decided here.
  bool realizability_assumed = true;
  /// For elementary split matroids: naive dimension and whether it equals the threshold.
  std::optional<std::int64_t> naive_dim;
  std::optional<bool> naive_equals_threshold;
  std::optional<Ordering> inductively_rigid_witness;
  /// "characterization" for elementary split matroids, "sufficient-only" otherwise.
  std::string verdict_basis;
};

/// Compares Σ τ̃ along w with n^2 - 1 + d; throws NotInductivelyConnected when w fails the inductive condition.
RigidityReport rigidity_criterion(const Matroid& m, const Ordering& w);
/// Uses the least inductive ordering; throws NotInductivelyConnected when there is none.
RigidityReport rigidity_criterion(const Matroid& m);

/// Searches for the least ordering whose first n+1 points form a circuit and
/// whose later points satisfy the inductive condition with τ_i = 1 (elementary
/// split matroids), or, for other matroids, a circuit-prefixed inductive
/// ordering of a rigid matroid.
RigidityReport is_inductively_rigid(const Matroid& m);

}  // namespace matreal
