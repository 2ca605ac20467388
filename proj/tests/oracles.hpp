#pragma once

// Brute-force reference implementations and random instance generators used
// to cross-check the library. Kept deliberately naive.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "matreal/matroid.hpp"
#include "matreal/poly.hpp"
#include "matreal/rational.hpp"
#include "matreal/split.hpp"

namespace oracle {

using matreal::Element;
using matreal::ElementSet;
using matreal::Matroid;
using matreal::Poly;
using matreal::Rational;
using matreal::SplitEdge;
using matreal::SplitHypergraph;

inline std::vector<ElementSet> all_subsets(ElementSet ground) {
  std::vector<ElementSet> out;
  const std::vector<Element> el = ground.elements();
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << el.size()); ++m) {
    ElementSet s;
    for (std::size_t i = 0; i < el.size(); ++i) {
      if (m >> i & 1) s = s.with(el[i]);
    }
    out.push_back(s);
  }
  return out;
}

// The three circuit axioms checked pair by pair.
inline bool circuit_axioms_hold(const std::vector<ElementSet>& cs) {
  for (ElementSet c : cs) {
    if (c.empty()) return false;
  }
  for (ElementSet a : cs) {
    for (ElementSet b : cs) {
      if (a != b && a.subset_of(b)) return false;
    }
  }
  for (std::size_t i = 0; i < cs.size(); ++i) {
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      for (Element e : cs[i] & cs[j]) {
        const ElementSet u = (cs[i] | cs[j]).without(e);
        bool found = false;
        for (ElementSet c : cs) found = found || c.subset_of(u);
        if (!found) return false;
      }
    }
  }
  return true;
}

// Largest subset of s containing no circuit.
inline int rank_from_circuits(const std::vector<ElementSet>& cs, ElementSet s) {
  int best = 0;
  for (ElementSet t : all_subsets(s)) {
    if (t.size() <= best) continue;
    bool indep = true;
    for (ElementSet c : cs) indep = indep && !c.subset_of(t);
    if (indep) best = t.size();
  }
  return best;
}

// Gaussian elimination over Q on the chosen columns.
inline int rank_of_columns(const std::vector<std::vector<Rational>>& cols, ElementSet s) {
  std::vector<std::vector<Rational>> rows;
  for (Element e : s) rows.push_back(cols[e - 1]);
  int rank = 0;
  const std::size_t width = cols.empty() ? 0 : cols[0].size();
  for (std::size_t c = 0; c < width && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(r) == rank || rows[r][c] == 0) continue;
      const Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t k = 0; k < width; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

// Minimal dependent sets found by exhaustive rank queries.
inline std::vector<ElementSet> circuits_by_rank(const Matroid& m) {
  std::vector<ElementSet> out;
  for (ElementSet s : all_subsets(m.ground())) {
    if (s.empty() || m.rank(s) == s.size()) continue;
    bool minimal = true;
    for (Element e : s) minimal = minimal && m.rank(s.without(e)) == s.size() - 1;
    if (minimal) out.push_back(s);
  }
  return out;
}

// a_G and ec_G with G = all subsets, evaluated by submask recursion.
inline std::int64_t expected_codim_brute(const Matroid& m) {
  const std::vector<Element> el = m.ground().elements();
  const std::size_t d = el.size();
  auto to_set = [&](std::uint64_t mask) {
    ElementSet s;
    for (std::size_t i = 0; i < d; ++i) {
      if (mask >> i & 1) s = s.with(el[i]);
    }
    return s;
  };
  std::vector<std::int64_t> a(std::size_t{1} << d, 0);
  std::int64_t ec = 0;
  for (std::uint64_t s = 1; s < a.size(); ++s) {
    const ElementSet set = to_set(s);
    std::int64_t v = set.size() - m.rank(set);
    for (std::uint64_t t = (s - 1) & s; t != 0; t = (t - 1) & s) v -= a[t];
    a[s] = v;
    ec += (m.rank() - m.rank(set)) * v;
  }
  return ec;
}

// Leibniz formula.
inline Poly permutation_determinant(const std::vector<std::vector<Poly>>& cols) {
  const std::size_t n = cols.size();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  Poly sum;
  do {
    int inv = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inv += p[i] > p[j];
    }
    Poly prod(1);
    for (std::size_t j = 0; j < n; ++j) prod *= cols[j][p[j]];
    if (inv % 2) {
      sum -= prod;
    } else {
      sum += prod;
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return sum;
}

// The four inequalities for a split hypergraph, checked directly.
inline bool split_conditions_hold(const SplitHypergraph& h) {
  for (std::size_t i = 0; i < h.edges.size(); ++i) {
    const SplitEdge& e = h.edges[i];
    if (e.rank > h.n - 1) return false;
    if (e.set.size() < e.rank + 1) return false;
    if (h.d - e.set.size() < h.n - e.rank) return false;
    for (std::size_t j = 0; j < h.edges.size(); ++j) {
      if (i != j && (e.set & h.edges[j].set).size() > e.rank + h.edges[j].rank - h.n) return false;
    }
  }
  return true;
}

inline ElementSet random_subset(std::mt19937_64& rng, int d, int size) {
  std::vector<Element> el(d);
  std::iota(el.begin(), el.end(), 1);
  std::shuffle(el.begin(), el.end(), rng);
  return ElementSet(std::vector<Element>(el.begin(), el.begin() + size));
}

// Adds random edges while the four conditions keep holding.
inline SplitHypergraph random_split(std::mt19937_64& rng, int d, int n, int attempts = 12) {
  SplitHypergraph h{d, n, {}};
  for (int a = 0; a < attempts; ++a) {
    const int r = std::uniform_int_distribution<int>(1, n - 1)(rng);
    const int size = std::uniform_int_distribution<int>(r + 1, std::min(d - n + r, d))(rng);
    if (size < r + 1) continue;
    SplitHypergraph next = h;
    next.edges.push_back({random_subset(rng, d, size), r});
    if (split_conditions_hold(next)) h = next;
  }
  return h;
}

// Random dependent hyperplanes with pairwise intersections of size at most n-2.
inline std::vector<ElementSet> random_hyperplanes(std::mt19937_64& rng, int d, int n, int attempts = 12) {
  std::vector<ElementSet> hs;
  for (int a = 0; a < attempts; ++a) {
    const int size = std::uniform_int_distribution<int>(n, std::min(d - 1, n + 1))(rng);
    const ElementSet cand = random_subset(rng, d, size);
    bool ok = true;
    for (ElementSet h : hs) ok = ok && (h & cand).size() <= n - 2;
    if (ok) hs.push_back(cand);
  }
  return hs;
}

// Small integer columns; zero columns are replaced so there are no loops.
inline std::vector<std::vector<Rational>> random_columns(std::mt19937_64& rng, int n, int d, int spread = 1) {
  std::uniform_int_distribution<int> entry(-spread, spread);
  std::vector<std::vector<Rational>> cols(d, std::vector<Rational>(n));
  for (auto& c : cols) {
    bool zero = true;
    while (zero) {
      for (auto& x : c) x = entry(rng);
      zero = std::all_of(c.begin(), c.end(), [](const Rational& x) { return x == 0; });
    }
  }
  return cols;
}

}  // namespace oracle
