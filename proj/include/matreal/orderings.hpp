#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matreal/matroid.hpp"

namespace matreal {

/// A permutation of the ground set, written (p1, ..., pd).
using Ordering = std::vector<Element>;

/// Throws Error(InvalidOrdering) unless w lists every ground element exactly once.
void check_ordering(const Matroid& m, const Ordering& w);
/// Parses "1,2,3"; throws ParseError.
Ordering parse_ordering(const std::string& text);
std::string format_ordering(const Ordering& w);

struct TypeVector {
  std::vector<int> tau;
  /// Equals tau except at degree-two steps, where it is rank l1 + rank l2 - rank(l1 ∪ l2).
  /// Steps of degree three or more keep tau.
  std::vector<int> tau_tilde;
  /// Number of subspaces of M_w[i] through p_i.
  std::vector<int> degree;
  Ordering ordering;
};

TypeVector ordering_type(const Matroid& m, const Ordering& w);

struct PointClass {
  int degree = 0;
  int a_p = 0;
  std::optional<int> b_p;
  bool two_simple = true;
};

PointClass point_class(const Matroid& m, Element p);

/// First n points form a basis and every later p_i lies on at most two subspaces of M_w[i].
bool satisfies_inductive_condition(const Matroid& m, const Ordering& w);

enum class SearchMode {
  /// Exhaustive search; returns the lexicographically least witness.
  Backtracking,
  /// Repeatedly removes the smallest point of degree at most two; may miss witnesses.
  Greedy,
};

std::optional<Ordering> find_inductive_ordering(const Matroid& m, SearchMode mode = SearchMode::Backtracking);
bool is_inductively_connected(const Matroid& m);

}  // namespace matreal
