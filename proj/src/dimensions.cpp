#include "matreal/dimensions.hpp"

#include <algorithm>
#include <bit>
#include <vector>

#include "matreal/error.hpp"

namespace matreal {

namespace {

// Ranks of all subsets of the ground set, indexed by compact masks over the
// sorted ground elements.
struct SubsetRanks {
  std::vector<Element> elements;
  std::vector<std::uint64_t> absolute;
  std::vector<int> rank;
};

SubsetRanks subset_ranks(const Matroid& m) {
  SubsetRanks s;
  s.elements = m.ground().elements();
  const std::size_t size = std::size_t{1} << s.elements.size();
  s.absolute.assign(size, 0);
  s.rank.assign(size, 0);
  for (std::size_t cm = 1; cm < size; ++cm) {
    const int low = std::countr_zero(cm);
    s.absolute[cm] = s.absolute[cm & (cm - 1)] | ElementSet::single(s.elements[low]).mask();
    s.rank[cm] = m.rank(ElementSet::from_mask(s.absolute[cm]));
  }
  return s;
}

void check_cap(const Matroid& m, int cap) {
  if (m.size() > cap) {
    throw Error(ErrorKind::TooLarge, "ground set of size " + std::to_string(m.size()) + " exceeds the cap " +
                                         std::to_string(cap));
  }
}

// No separator A with r(A) + r(E - A) = r(E), E = full; rank given by r(T) for T within `full`.
template <class R>
bool connected_by_rank(std::uint64_t full, R&& r) {
  if (std::popcount(full) <= 1) return true;
  const std::uint64_t low = full & -full;
  const std::uint64_t rest = full & ~low;
  const int total = r(full);
  // A ranges over sets containing the lowest element, excluding the full set.
  std::uint64_t sub = 0;
  while (true) {
    const std::uint64_t a = sub | low;
    if (a != full && r(a) + r(full & ~a) == total) return false;
    if (sub == rest) break;
    sub = (sub - rest) & rest;
  }
  return true;
}

std::int64_t ec_powerset(const Matroid& m, int cap) {
  check_cap(m, cap);
  const SubsetRanks s = subset_ranks(m);
  const std::size_t size = s.rank.size();
  const int d = static_cast<int>(s.elements.size());
  std::vector<std::int64_t> a(size);
  for (std::size_t cm = 0; cm < size; ++cm) a[cm] = std::popcount(cm) - s.rank[cm];
  // Möbius inversion over the boolean lattice.
  for (int i = 0; i < d; ++i) {
    const std::size_t bit = std::size_t{1} << i;
    for (std::size_t cm = 0; cm < size; ++cm) {
      if (cm & bit) a[cm] -= a[cm ^ bit];
    }
  }
  std::int64_t ec = 0;
  for (std::size_t cm = 0; cm < size; ++cm) ec += static_cast<std::int64_t>(m.rank() - s.rank[cm]) * a[cm];
  return ec;
}

std::int64_t ec_connected(const Matroid& m, int cap) {
  check_cap(m, cap);
  const SubsetRanks s = subset_ranks(m);
  const std::size_t size = s.rank.size();
  const std::uint64_t full = size - 1;
  std::vector<bool> in_g(size, false);
  for (std::size_t cm = 1; cm < size; ++cm) {
    const bool restricted = connected_by_rank(cm, [&](std::uint64_t t) { return s.rank[t]; });
    if (!restricted) continue;
    const int rs = s.rank[cm];
    in_g[cm] = connected_by_rank(full & ~cm, [&](std::uint64_t t) { return s.rank[t | cm] - rs; });
  }
  std::vector<std::int64_t> a(size, 0);
  std::int64_t ec = 0;
  for (std::size_t cm = 1; cm < size; ++cm) {
    if (!in_g[cm]) continue;
    std::int64_t value = std::popcount(cm) - s.rank[cm];
    for (std::uint64_t t = (cm - 1) & cm; t != 0; t = (t - 1) & cm) {
      if (in_g[t]) value -= a[t];
    }
    a[cm] = value;
    ec += static_cast<std::int64_t>(m.rank() - s.rank[cm]) * value;
  }
  return ec;
}

std::int64_t ec_hypergraph(const Matroid& m) {
  const SplitHypergraph* h = m.hypergraph();
  if (h == nullptr) {
    throw Error(ErrorKind::FamilyUnavailable, "the hypergraph family needs a matroid built from a split hypergraph");
  }
  std::vector<ElementSet> sets;
  for (const SplitEdge& e : h->edges) sets.push_back(e.set);
  std::stable_sort(sets.begin(), sets.end(), [](ElementSet x, ElementSet y) { return x.size() < y.size(); });
  std::vector<std::int64_t> a(sets.size());
  std::int64_t ec = 0;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    std::int64_t value = sets[i].size() - m.rank(sets[i]);
    for (std::size_t j = 0; j < i; ++j) {
      if (sets[j].proper_subset_of(sets[i])) value -= a[j];
    }
    a[i] = value;
    ec += static_cast<std::int64_t>(m.rank() - m.rank(sets[i])) * value;
  }
  return ec;
}

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Powerset: return "powerset";
    case Family::Connected: return "connected";
    case Family::Hypergraph: return "hypergraph";
  }
  return "unknown";
}

Family parse_family(std::string_view text) {
  if (text == "powerset") return Family::Powerset;
  if (text == "connected") return Family::Connected;
  if (text == "hypergraph") return Family::Hypergraph;
  throw Error(ErrorKind::ParseError, "unknown family '" + std::string(text) + "'");
}

std::int64_t naive_dimension(const Matroid& m) {
  const std::int64_t n = m.rank();
  std::int64_t value = n * m.size();
  for (const Subspace& l : subspaces(m)) value -= static_cast<std::int64_t>(l.points.size() - l.rank) * (n - l.rank);
  return value;
}

std::int64_t naive_dimension_paving(const Matroid& m) {
  if (!is_paving(m)) throw Error(ErrorKind::NotPaving, "matroid has a circuit smaller than its rank");
  const std::int64_t n = m.rank();
  const auto ls = subspaces(m);
  std::int64_t degrees = 0;
  for (Element p : m.ground()) {
    for (const Subspace& l : ls) degrees += l.points.contains(p) ? 1 : 0;
  }
  return n * m.size() + (n - 1) * static_cast<std::int64_t>(ls.size()) - degrees;
}

std::int64_t expected_codim(const Matroid& m, Family family, int cap) {
  switch (family) {
    case Family::Powerset: return ec_powerset(m, cap);
    case Family::Connected: return ec_connected(m, cap);
    case Family::Hypergraph: return ec_hypergraph(m);
  }
  throw Error(ErrorKind::FamilyUnavailable, "unknown family");
}

std::int64_t expected_dim(const Matroid& m, int cap) {
  return static_cast<std::int64_t>(m.rank()) * m.size() - expected_codim(m, Family::Powerset, cap);
}

bool direct_sum_codim_check(const Matroid& m, const Matroid& n, int cap) {
  const std::int64_t n1 = m.rank(), d1 = m.size(), n2 = n.rank(), d2 = n.size();
  const Matroid sum = direct_sum(m, n);
  const std::int64_t lhs = expected_codim(sum, Family::Powerset, cap);
  const std::int64_t rhs = expected_codim(m, Family::Powerset, cap) + expected_codim(n, Family::Powerset, cap) +
                           n2 * (d1 - n1) + n1 * (d2 - n2);
  return lhs == rhs;
}

DimensionReport dimension_report(const Matroid& m, Family family, int cap) {
  DimensionReport r;
  r.family_used = family;
  r.naive_dim = naive_dimension(m);
  r.expected_codim = expected_codim(m, family, cap);
  r.expected_dim = static_cast<std::int64_t>(m.rank()) * m.size() - *r.expected_codim;
  return r;
}

}  // namespace matreal
