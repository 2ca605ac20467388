#include "matreal/split.hpp"

#include "matreal/error.hpp"

namespace matreal {

std::string_view to_string(SplitCondition c) {
  switch (c) {
    case SplitCondition::PairwiseIntersection: return "pairwise-intersection";
    case SplitCondition::Complement: return "complement-size";
    case SplitCondition::RankBelowN: return "rank-below-n";
    case SplitCondition::EdgeLargerThanRank: return "edge-larger-than-rank";
  }
  return "unknown";
}

ValidationReport validate_split(const SplitHypergraph& h) {
  ValidationReport report;
  if (h.d < 1) report.structural.push_back("d must be at least 1");
  if (h.d > kMaxElement) report.structural.push_back("d must be at most 64");
  if (h.n < 1 || h.n > h.d) report.structural.push_back("n must satisfy 1 <= n <= d");
  const ElementSet ground = ElementSet::range(h.d);
  const int q = static_cast<int>(h.edges.size());
  for (int i = 0; i < q; ++i) {
    const SplitEdge& e = h.edges[i];
    if (!e.set.subset_of(ground)) {
      report.structural.push_back("edge " + std::to_string(i) + " " + e.set.to_string() + " is not inside [d]");
    }
    if (e.rank < 1) report.structural.push_back("edge " + std::to_string(i) + " has non-positive rank");
    if ((ground - e.set).size() < h.n - e.rank) {
      report.violations.push_back({SplitCondition::Complement, {i},
                                   "|[d] \\ H" + std::to_string(i) + "| = " + std::to_string((ground - e.set).size()) +
                                       " < n - r = " + std::to_string(h.n - e.rank)});
    }
    if (e.rank > h.n - 1) {
      report.violations.push_back({SplitCondition::RankBelowN, {i},
                                   "r" + std::to_string(i) + " = " + std::to_string(e.rank) + " > n - 1"});
    }
    if (e.set.size() < e.rank + 1) {
      report.violations.push_back({SplitCondition::EdgeLargerThanRank, {i},
                                   "|H" + std::to_string(i) + "| = " + std::to_string(e.set.size()) +
                                       " < r + 1 = " + std::to_string(e.rank + 1)});
    }
  }
  for (int i = 0; i < q; ++i) {
    for (int j = i + 1; j < q; ++j) {
      const int meet = (h.edges[i].set & h.edges[j].set).size();
      const int bound = h.edges[i].rank + h.edges[j].rank - h.n;
      if (meet > bound) {
        report.violations.push_back({SplitCondition::PairwiseIntersection, {i, j},
                                     "|H" + std::to_string(i) + " ∩ H" + std::to_string(j) + "| = " +
                                         std::to_string(meet) + " > r_i + r_j - n = " + std::to_string(bound)});
      }
    }
  }
  return report;
}

Matroid elementary_split_matroid(const SplitHypergraph& h) {
  const ValidationReport report = validate_split(h);
  if (!report.valid()) {
    std::string msg = "invalid hypergraph:";
    for (const auto& s : report.structural) msg += " " + s + ";";
    for (const auto& v : report.violations) msg += " [" + std::string(to_string(v.condition)) + "] " + v.detail + ";";
    throw Error(ErrorKind::InvalidHypergraph, msg);
  }
  return Matroid::from_split_unchecked(h);
}

std::optional<SplitHypergraph> recognize_elementary_split(const Matroid& m) {
  if (const SplitHypergraph* h = m.hypergraph()) return *h;
  if (m.ground() != ElementSet::range(m.size()) || m.size() == 0) return std::nullopt;
  SplitHypergraph h{m.size(), m.rank(), {}};
  for (const Subspace& s : subspaces(m)) h.edges.push_back({s.points, s.rank});
  if (!validate_split(h).valid()) return std::nullopt;
  const Matroid candidate = Matroid::from_split_unchecked(h);
  bool equal = true;
  for_each_subset(m.ground(), [&](ElementSet s) {
    if (equal && candidate.rank(s) != m.rank(s)) equal = false;
  });
  if (!equal) return std::nullopt;
  return h;
}

bool is_2_simple_all(const Matroid& m) {
  for (Element p : m.ground()) {
    const auto ls = point_subspaces(m, p);
    if (ls.size() == 2 && m.rank(ls[0].points | ls[1].points) != m.rank()) return false;
  }
  return true;
}

}  // namespace matreal
