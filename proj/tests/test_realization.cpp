#include <doctest.h>

#include <numeric>
#include <set>

#include "fixtures.hpp"
#include "matreal/dimensions.hpp"
#include "matreal/error.hpp"
#include "matreal/extensor.hpp"
#include "matreal/orderings.hpp"
#include "matreal/realization.hpp"
#include "oracles.hpp"

using namespace matreal;

namespace {

int sum(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

// Rows that are identically zero in the column of element e.
std::vector<int> zero_rows(const ParamMatrix& pm, Element e) {
  std::vector<int> out;
  for (int i = 0; i < pm.n; ++i) {
    if (pm.columns[e - 1][i].is_zero()) out.push_back(i + 1);
  }
  return out;
}

// A parameter point off the non-vanishing locus.
std::vector<Rational> good_point(const ParamMatrix& pm, std::uint64_t seed) {
  RationalSampler s(seed, 50);
  for (;;) {
    auto pt = s.point(pm.params.size());
    bool ok = true;
    for (const Poly& p : pm.nonvanishing) ok = ok && p.evaluate(pt) != 0;
    if (ok) return pt;
  }
}

std::vector<std::vector<Rational>> instantiate(const ParamMatrix& pm, const std::vector<Rational>& pt) {
  std::vector<std::vector<Rational>> cols;
  for (const PolyVector& c : pm.columns) cols.push_back(evaluate(c, pt));
  return cols;
}

void check_identity_prefix(const ParamMatrix& pm) {
  for (int k = 0; k < pm.n; ++k) {
    const PolyVector& c = pm.columns[pm.order[k] - 1];
    for (int i = 0; i < pm.n; ++i) REQUIRE(c[i] == Poly(i == k ? 1 : 0));
  }
}

}  // namespace

TEST_CASE("first worked example") {
  const Matroid m = fixtures::realization_example1();
  const Ordering w{1, 2, 3, 5, 4, 6, 7, 8};
  const ParamMatrix pm = build_realization(m, w);
  CHECK(pm.params.size() == 12);
  CHECK(pm.params.front() == "c_{5,1}");
  check_identity_prefix(pm);
  CHECK(zero_rows(pm, 4) == std::vector<int>{4});
  CHECK(zero_rows(pm, 6).empty());
  CHECK(zero_rows(pm, 7) == std::vector<int>{2});
  CHECK(zero_rows(pm, 8).empty());
  CHECK(static_cast<int>(pm.params.size()) == sum(ordering_type(m, w).tau_tilde) - 16);

  const VerificationReport r = verify_realization(pm, m, 25, 7);
  CHECK(r.samples == 25);
  CHECK(r.passed == 25);
}

TEST_CASE("second worked example") {
  const Matroid m = fixtures::realization_example2();
  const Ordering w{7, 8, 9, 11, 12, 6, 3, 2, 5, 1, 4, 10};
  const BuildResult b = build_realization_traced(m, w);
  const ParamMatrix& pm = b.matrix;
  check_identity_prefix(pm);
  CHECK(zero_rows(pm, 3).empty());
  CHECK(zero_rows(pm, 2).empty());
  CHECK(zero_rows(pm, 5) == std::vector<int>{1, 2, 3});
  CHECK(zero_rows(pm, 1).empty());
  CHECK(zero_rows(pm, 4).empty());
  CHECK(zero_rows(pm, 10) == std::vector<int>{6});
  CHECK(pm.params.size() == 25);
  CHECK(static_cast<int>(pm.params.size()) == sum(ordering_type(m, w).tau_tilde) - 36);

  const ColumnStep& last = b.steps.back();
  CHECK(last.point == 10);
  CHECK(last.degree == 2);
  CHECK(last.new_params == 2);
  CHECK(last.joint_rank == 6);

  const VerificationReport r = verify_realization(pm, m, 25, 7);
  CHECK(r.passed == 25);
}

TEST_CASE("uniform matroids get a fully generic block") {
  const ParamMatrix pm = build_realization(Matroid::uniform(3, 6), {1, 2, 3, 4, 5, 6});
  CHECK(pm.params.size() == 9);
  check_identity_prefix(pm);
  std::set<int> seen;
  for (Element e = 4; e <= 6; ++e) {
    for (const Poly& p : pm.columns[e - 1]) {
      REQUIRE(p.terms().size() == 1);
      REQUIRE(p.degree() == 1);
      seen.insert(p.terms()[0].mono.factors()[0].first);
    }
  }
  CHECK(seen.size() == 9);
  CHECK(verify_realization(pm, Matroid::uniform(3, 6), 5, 1).all_passed());
}

TEST_CASE("parameter count, dimension count and sampling on random inductively connected matroids") {
  std::mt19937_64 rng(60);
  int built = 0, split_built = 0;
  for (int trial = 0; trial < 36; ++trial) {
    Matroid m = Matroid::empty();
    switch (trial % 3) {
      case 0: m = Matroid::from_vectors(oracle::random_columns(rng, 3, 7)); break;
      case 1: m = elementary_split_matroid(oracle::random_split(rng, 8, 3 + trial % 2)); break;
      default: m = Matroid::paving(8, 3, oracle::random_hyperplanes(rng, 8, 3, 8)); break;
    }
    const auto w = find_inductive_ordering(m);
    if (!w) continue;
    ParamMatrix pm;
    try {
      pm = build_realization(m, *w);
    } catch (const Error& e) {
      REQUIRE(e.kind() == ErrorKind::SymbolicDegeneracy);
      continue;
    }
    const int n = m.rank();
    CHECK(static_cast<int>(pm.params.size()) == sum(ordering_type(m, *w).tau_tilde) - n * n);
    if (recognize_elementary_split(m)) {
      CHECK(static_cast<std::int64_t>(pm.params.size()) + n * n == naive_dimension(m));
      ++split_built;
    }
    const VerificationReport r = verify_realization(pm, m, 3, 11);
    CHECK(r.all_passed());

    // The full matroid of one instance agrees on every subset, not only small ones.
    const Matroid inst = Matroid::from_vectors(instantiate(pm, good_point(pm, 5)));
    for (ElementSet s : oracle::all_subsets(m.ground())) REQUIRE(inst.rank(s) == m.rank(s));
    ++built;
  }
  CHECK(built >= 15);
  CHECK(split_built >= 5);
}

TEST_CASE("every basis minor is a non-vanishing condition") {
  const Matroid m = fixtures::qs();
  const ParamMatrix pm = build_realization(m, *find_inductive_ordering(m));
  for (ElementSet b : bases(m)) {
    std::vector<PolyVector> cols;
    for (Element e : b) cols.push_back(pm.columns[e - 1]);
    const Poly det = determinant(cols);
    REQUIRE_FALSE(det.is_zero());
    if (det.is_constant()) continue;
    const Poly prim = det.primitive();
    CHECK(std::find(pm.nonvanishing.begin(), pm.nonvanishing.end(), prim) != pm.nonvanishing.end());
  }
}

TEST_CASE("intersection columns are proportional to the meet of the two lines") {
  const Matroid m = fixtures::qs();
  const Ordering w = *find_inductive_ordering(m);
  const ParamMatrix pm = build_realization(m, w);
  const auto cols = instantiate(pm, good_point(pm, 9));
  auto vec = [&](Element e) {
    PolyVector v;
    for (const Rational& x : cols[e - 1]) v.push_back(x);
    return v;
  };
  int checked = 0;
  for (std::size_t i = 3; i < w.size(); ++i) {
    const ElementSet prefix(Ordering(w.begin(), w.begin() + i + 1));
    const auto ls = subspaces_through(m, prefix, w[i]);
    if (ls.size() != 2) continue;
    std::vector<Extensor> lines;
    for (const Subspace& l : ls) {
      const auto pts = l.points.without(w[i]).elements();
      lines.push_back(Extensor::join_of(3, {vec(pts[0]), vec(pts[1])}));
    }
    const auto meet_vec = evaluate(to_vector(meet(lines[0], lines[1])), {});
    const std::vector<std::vector<Rational>> pair{meet_vec, cols[w[i] - 1]};
    CHECK(oracle::rank_of_columns(pair, ElementSet{1, 2}) == 1);
    ++checked;
  }
  CHECK(checked == 1);
}

TEST_CASE("a corrupted entry is caught with a witness") {
  const Matroid m = fixtures::realization_example1();
  ParamMatrix pm = build_realization(m, {1, 2, 3, 5, 4, 6, 7, 8});
  REQUIRE(verify_realization(pm, m, 5, 7).all_passed());
  pm.columns[7 - 1][1] = Poly::var(0);  // point 7 no longer lies on the hyperplane {1,3,5,7}
  const VerificationReport r = verify_realization(pm, m, 5, 7);
  CHECK_FALSE(r.all_passed());
  REQUIRE(!r.results.empty());
  const SampleResult& s = r.results.front();
  REQUIRE(s.witness.has_value());
  CHECK(m.rank(*s.witness) == s.expected_rank);
  CHECK(s.expected_rank != s.observed_rank);
}

TEST_CASE("verification is deterministic in the seed") {
  const Matroid m = fixtures::qs();
  const ParamMatrix pm = build_realization(m, *find_inductive_ordering(m));
  const auto a = verify_realization(pm, m, 4, 21);
  const auto b = verify_realization(pm, m, 4, 21);
  const auto c = verify_realization(pm, m, 4, 22);
  REQUIRE(a.results.size() == b.results.size());
  for (std::size_t i = 0; i < a.results.size(); ++i) CHECK(a.results[i].point == b.results[i].point);
  CHECK(a.results[0].point != c.results[0].point);
}

TEST_CASE("retry cap on an unsatisfiable non-vanishing set") {
  const Matroid m = Matroid::uniform(2, 3);
  ParamMatrix pm = build_realization(m, {1, 2, 3});
  pm.nonvanishing.push_back(Poly());
  try {
    verify_realization(pm, m, 1, 1);
    FAIL("expected RetryExhausted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::RetryExhausted);
  }
}

TEST_CASE("build errors") {
  auto kind_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::ParseError;
  };
  CHECK(kind_of([] { build_realization(fixtures::qs(), {1, 2, 3, 4, 5, 6}); }) == ErrorKind::InvalidOrdering);
  CHECK(kind_of([] { build_realization(fixtures::concurrent_lines(), {1, 3, 5, 2, 4, 6, 7}); }) ==
        ErrorKind::DegreeTooHigh);
  CHECK(kind_of([] { build_realization(fixtures::qs(), {1, 2, 4}); }) == ErrorKind::InvalidOrdering);

  // Lines 12, 34, 56, 78 with the five coplanarities force 34 and 78 to meet
  // at the point 12 ∩ 56, so {3,4,7,8} is dependent in every realization.
  const Matroid m = fixtures::paving8();
  const Ordering w = *find_inductive_ordering(m);
  CHECK(kind_of([&] { build_realization(m, w); }) == ErrorKind::SymbolicDegeneracy);
}

TEST_CASE("ideal generators of the generic matrix") {
  CHECK(circuit_ideal_generators(Matroid::uniform(2, 3)).empty());
  CHECK(basis_nonvanishing(Matroid::uniform(2, 3)).size() == 3);
  CHECK(basis_nonvanishing(Matroid::uniform(2, 2)).size() == 1);
  CHECK(basis_nonvanishing(fixtures::qs()).size() == 16);

  const Matroid parallel = Matroid::from_circuits(3, {{1, 2}});
  REQUIRE(parallel.rank() == 2);
  const Matroid rank3 = Matroid::from_vectors({{1, 0, 0}, {2, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(circuit_ideal_generators(rank3).size() == 3);

  const auto gens = circuit_ideal_generators(fixtures::concurrent_lines());
  CHECK(gens.size() == 3);
  for (const Poly& g : gens) {
    CHECK(g.degree() == 3);
    CHECK(g.terms().size() == 6);
  }
  CHECK(generic_matrix_names(2, 3) == std::vector<std::string>{"x_{1,1}", "x_{1,2}", "x_{1,3}", "x_{2,1}", "x_{2,2}",
                                                               "x_{2,3}"});

  // A realization makes the generators vanish and keeps the basis minors away from zero.
  const Matroid m = fixtures::qs();
  const ParamMatrix pm = build_realization(m, *find_inductive_ordering(m));
  const auto cols = instantiate(pm, good_point(pm, 3));
  std::vector<Rational> x(3 * 6);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 6; ++j) x[i * 6 + j] = cols[j][i];
  }
  for (const Poly& g : circuit_ideal_generators(m)) CHECK(g.evaluate(x) == 0);
  for (const Poly& b : basis_nonvanishing(m)) CHECK(b.evaluate(x) != 0);
}
