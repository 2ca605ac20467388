#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "matreal/element_set.hpp"
#include "matreal/rational.hpp"

namespace matreal {

/// A hyperedge H_i with its rank r_i.
struct SplitEdge {
  ElementSet set;
  int rank = 0;
  bool operator==(const SplitEdge&) const = default;
};

struct SplitHypergraph {
  int d = 0;
  int n = 0;
  std::vector<SplitEdge> edges;
};

enum class Backend { CircuitList, SplitHypergraph, VectorConfig, Minor };

namespace detail {
struct BackendData;
}

/// A matroid on a set of 1-based labels with a rank oracle.
///
/// Values are immutable; minors share the parent's backend. Rank queries are
/// answered from a precomputed table when the largest label is at most 20
/// (16 for vector configurations); beyond that every query runs the backend
/// oracle directly, which is exponential in the worst case for circuit lists.
class Matroid {
 public:
  /// Validates the three circuit axioms; `circuits` must be the complete set.
  static Matroid from_circuits(int d, const std::vector<ElementSet>& circuits);
  /// n-paving matroid on [d] from its dependent hyperplanes.
  static Matroid paving(int d, int n, const std::vector<ElementSet>& hyperplanes);
  static Matroid uniform(int n, int d);
  /// Element j+1 is columns[j]; all columns must share one length.
  static Matroid from_vectors(const std::vector<std::vector<Rational>>& columns);
  /// Closed-form rank oracle; the hypergraph is not validated here.
  static Matroid from_split_unchecked(const SplitHypergraph& h);
  /// The matroid on the empty ground set.
  static Matroid empty();

  ElementSet ground() const { return ground_; }
  int size() const { return ground_.size(); }
  int rank() const { return rank_; }
  int rank(ElementSet s) const;
  bool is_independent(ElementSet s) const { return rank(s) == s.size(); }
  bool is_basis(ElementSet s) const { return s.size() == rank_ && is_independent(s); }
  bool is_circuit(ElementSet s) const;
  ElementSet closure(ElementSet s) const;

  Backend backend() const;
  /// The defining hypergraph when this is an unrestricted split-backed matroid.
  const SplitHypergraph* hypergraph() const;

  Matroid restriction(ElementSet s) const;
  Matroid deletion(ElementSet s) const;
  /// Contraction by an independent set.
  Matroid contraction(ElementSet s) const;

 private:
  Matroid(ElementSet ground, std::shared_ptr<const detail::BackendData> data);
  int oracle_rank(ElementSet s) const;
  void check_subset(ElementSet s) const;
  void build_table();

  ElementSet ground_;
  int rank_ = 0;
  std::shared_ptr<const detail::BackendData> data_;
  std::shared_ptr<const std::vector<std::uint8_t>> table_;

  friend Matroid circuit_list_unchecked(ElementSet, const std::vector<ElementSet>&);
};

/// Builds a circuit-list matroid without axiom checks (inputs known valid).
Matroid circuit_list_unchecked(ElementSet ground, const std::vector<ElementSet>& circuits);

/// An equivalence class of circuits of size at most n sharing one closure.
struct Subspace {
  ElementSet points;
  int rank = 0;
  bool operator==(const Subspace&) const = default;
};

/// Circuits with at most `max_size` elements, by size then lexicographically.
std::vector<ElementSet> circuits(const Matroid& m, int max_size);
std::vector<ElementSet> circuits(const Matroid& m);
std::vector<ElementSet> bases(const Matroid& m);

/// Sorted lexicographically by point set.
std::vector<Subspace> subspaces(const Matroid& m);
std::vector<Subspace> point_subspaces(const Matroid& m, Element p);
int degree(const Matroid& m, Element p);

/// Subspaces of the restriction M|within that contain p. Circuits of size up to n = rank(M) count,
/// also when M|within has smaller rank.
std::vector<Subspace> subspaces_through(const Matroid& m, ElementSet within, Element p);
/// Number of subspaces of M|within containing p, without materializing them.
int degree_within(const Matroid& m, ElementSet within, Element p);

bool is_connected(const Matroid& m);
bool is_paving(const Matroid& m);

/// Elements of M keep their order as 1..d1, elements of N follow as d1+1..d1+d2.
Matroid direct_sum(const Matroid& m, const Matroid& n);

}  // namespace matreal
