#include "matreal/orderings.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_set>

#include "matreal/error.hpp"

namespace matreal {

void check_ordering(const Matroid& m, const Ordering& w) {
  ElementSet seen;
  for (Element e : w) {
    if (!m.ground().contains(e)) {
      throw Error(ErrorKind::InvalidOrdering, "element " + std::to_string(e) + " is not in the ground set");
    }
    if (seen.contains(e)) throw Error(ErrorKind::InvalidOrdering, "element " + std::to_string(e) + " repeats");
    seen = seen.with(e);
  }
  if (seen != m.ground()) {
    throw Error(ErrorKind::InvalidOrdering, "ordering misses " + (m.ground() - seen).to_string());
  }
}

Ordering parse_ordering(const std::string& text) {
  Ordering w;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string token = text.substr(pos, comma - pos);
    token.erase(0, token.find_first_not_of(" \t"));
    token.erase(token.find_last_not_of(" \t") + 1);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw Error(ErrorKind::ParseError, "bad ordering entry '" + token + "' at offset " + std::to_string(pos));
    }
    w.push_back(value);
    pos = comma + 1;
  }
  return w;
}

std::string format_ordering(const Ordering& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(w[i]);
  }
  return out;
}

TypeVector ordering_type(const Matroid& m, const Ordering& w) {
  check_ordering(m, w);
  const int n = m.rank();
  TypeVector t;
  t.ordering = w;
  ElementSet prefix;
  for (Element p : w) {
    prefix = prefix.with(p);
    const auto ls = subspaces_through(m, prefix, p);
    const int k = static_cast<int>(ls.size());
    int tau = -n * (k - 1);
    for (const Subspace& l : ls) tau += l.rank;
    int tilde = tau;
    if (k == 2) tilde = ls[0].rank + ls[1].rank - m.rank(ls[0].points | ls[1].points);
    t.tau.push_back(tau);
    t.tau_tilde.push_back(tilde);
    t.degree.push_back(k);
  }
  return t;
}

PointClass point_class(const Matroid& m, Element p) {
  const auto ls = point_subspaces(m, p);
  const int n = m.rank();
  PointClass c;
  c.degree = static_cast<int>(ls.size());
  c.a_p = -n * (c.degree - 1);
  for (const Subspace& l : ls) c.a_p += l.rank;
  if (c.degree == 2) {
    const int joint = m.rank(ls[0].points | ls[1].points);
    c.b_p = ls[0].rank + ls[1].rank - joint;
    c.two_simple = joint == n;
  } else {
    c.two_simple = c.degree <= 1;
  }
  return c;
}

bool satisfies_inductive_condition(const Matroid& m, const Ordering& w) {
  check_ordering(m, w);
  const int n = m.rank();
  ElementSet prefix;
  for (int i = 0; i < n; ++i) prefix = prefix.with(w[i]);
  if (!m.is_basis(prefix)) return false;
  for (std::size_t i = n; i < w.size(); ++i) {
    prefix = prefix.with(w[i]);
    if (degree_within(m, prefix, w[i]) > 2) return false;
  }
  return true;
}

namespace {

class Search {
 public:
  explicit Search(const Matroid& m) : m_(m) {}

  // Extends `order` (whose set is `placed`) to the whole ground set, smallest feasible point first.
  bool extend(ElementSet placed, Ordering& order) {
    if (placed == m_.ground()) return true;
    if (dead_.count(placed.mask()) != 0) return false;
    for (Element p : m_.ground() - placed) {
      const ElementSet next = placed.with(p);
      if (degree_within(m_, next, p) > 2) continue;
      order.push_back(p);
      if (extend(next, order)) return true;
      order.pop_back();
    }
    dead_.insert(placed.mask());
    return false;
  }

 private:
  const Matroid& m_;
  std::unordered_set<std::uint64_t> dead_;
};

std::optional<Ordering> greedy(const Matroid& m) {
  const int n = m.rank();
  ElementSet rest = m.ground();
  Ordering removed;
  while (rest.size() > n) {
    Element pick = 0;
    for (Element p : rest) {
      if (m.rank(rest.without(p)) == n && degree_within(m, rest, p) <= 2) {
        pick = p;
        break;
      }
    }
    if (pick == 0) return std::nullopt;
    removed.push_back(pick);
    rest = rest.without(pick);
  }
  Ordering w = rest.elements();
  w.insert(w.end(), removed.rbegin(), removed.rend());
  return w;
}

}  // namespace

std::optional<Ordering> find_inductive_ordering(const Matroid& m, SearchMode mode) {
  if (m.size() == 0) return Ordering{};
  if (mode == SearchMode::Greedy) {
    auto w = greedy(m);
    if (w && !satisfies_inductive_condition(m, *w)) return std::nullopt;
    return w;
  }
  Search search(m);
  for (ElementSet b : bases(m)) {
    Ordering w = b.elements();
    if (search.extend(b, w)) return w;
  }
  return std::nullopt;
}

bool is_inductively_connected(const Matroid& m) { return find_inductive_ordering(m).has_value(); }

}  // namespace matreal
