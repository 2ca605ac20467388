#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matreal/matroid.hpp"
#include "matreal/orderings.hpp"
#include "matreal/poly.hpp"

namespace matreal {

/// Parametrized realization in stratum form: an n x d matrix of polynomials in
/// `params`, valid wherever no polynomial of `nonvanishing` vanishes.
struct ParamMatrix {
  int n = 0;
  int d = 0;
  Ordering order;
  std::vector<std::string> params;
  /// columns[e-1] is the column of element e.
  std::vector<PolyVector> columns;
  std::vector<Poly> nonvanishing;
};

/// How each column was produced.
struct ColumnStep {
  Element point = 0;
  int degree = 0;
  /// Parameters introduced at this step.
  int new_params = 0;
  /// Placed points whose columns span the new column (degree one), or the
  /// intersection basis sources (degree two).
  std::vector<Element> basis;
  /// rank(l1 ∪ l2) for degree two.
  int joint_rank = 0;
};

struct BuildResult {
  ParamMatrix matrix;
  std::vector<ColumnStep> steps;
};

BuildResult build_realization_traced(const Matroid& m, const Ordering& w);
ParamMatrix build_realization(const Matroid& m, const Ordering& w);

struct SampleResult {
  bool passed = false;
  std::vector<Rational> point;
  std::optional<ElementSet> witness;
  int expected_rank = 0;
  int observed_rank = 0;
};

struct VerificationReport {
  int samples = 0;
  int passed = 0;
  int rejected = 0;
  std::vector<SampleResult> results;
  bool all_passed() const { return passed == samples; }
};

struct VerifyOptions {
  std::int64_t height = 1000;
  int retry_cap = 100;
};

/// Samples parameter points off the non-vanishing locus and compares the rank
/// of every subset of size at most n against M.
VerificationReport verify_realization(const ParamMatrix& pm, const Matroid& m, int samples, std::uint64_t seed,
                                      const VerifyOptions& options = {});

/// Names x_{i,j} of the generic n x d matrix; variable (i-1)*d + (j-1).
std::vector<std::string> generic_matrix_names(int n, int d);

/// Minors [A|B] of the generic matrix for circuits B with |B| <= n and row sets |A| = |B|.
std::vector<Poly> circuit_ideal_generators(const Matroid& m, std::size_t cap = 200000);
/// Maximal minors of the generic matrix on every basis.
std::vector<Poly> basis_nonvanishing(const Matroid& m);

}  // namespace matreal
