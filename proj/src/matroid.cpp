#include "matreal/matroid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <variant>

#include "matreal/error.hpp"

namespace matreal {

namespace detail {

struct CircuitData {
  std::vector<ElementSet> circuits;
  // circuits_with[e-1]: circuits containing e.
  std::vector<std::vector<ElementSet>> circuits_with;
};

struct SplitData {
  SplitHypergraph h;
};

struct VectorData {
  std::vector<std::vector<Integer>> columns;
};

struct MinorData {
  std::shared_ptr<const Matroid> parent;
  ElementSet contracted;
};

struct BackendData {
  std::variant<CircuitData, SplitData, VectorData, MinorData> v;
};

}  // namespace detail

namespace {

constexpr int kTableLimit = 20;

int circuit_rank(const detail::CircuitData& c, ElementSet s) {
  ElementSet indep;
  for (Element x : s) {
    const ElementSet trial = indep.with(x);
    bool dependent = false;
    if (static_cast<std::size_t>(x) <= c.circuits_with.size()) {
      for (ElementSet circ : c.circuits_with[x - 1]) {
        if (circ.subset_of(trial)) {
          dependent = true;
          break;
        }
      }
    }
    if (!dependent) indep = trial;
  }
  return indep.size();
}

int split_rank(const SplitHypergraph& h, ElementSet s) {
  int r = std::min(h.n, s.size());
  for (const SplitEdge& e : h.edges) r = std::min(r, (s - e.set).size() + e.rank);
  return r;
}

int vector_rank(const detail::VectorData& v, ElementSet s) {
  std::vector<std::vector<Integer>> cols;
  cols.reserve(s.size());
  for (Element x : s) cols.push_back(v.columns[x - 1]);
  return integer_rank(std::move(cols));
}

detail::CircuitData make_circuit_data(const std::vector<ElementSet>& circuits, int max_label) {
  detail::CircuitData c;
  c.circuits = circuits;
  c.circuits_with.resize(max_label);
  for (ElementSet circ : circuits) {
    for (Element e : circ) c.circuits_with[e - 1].push_back(circ);
  }
  return c;
}

[[noreturn]] void axiom_error(const std::string& msg) { throw Error(ErrorKind::AxiomViolation, msg); }

}  // namespace

Matroid::Matroid(ElementSet ground, std::shared_ptr<const detail::BackendData> data)
    : ground_(ground), data_(std::move(data)) {}

Matroid circuit_list_unchecked(ElementSet ground, const std::vector<ElementSet>& circuits) {
  auto data = std::make_shared<detail::BackendData>();
  data->v = make_circuit_data(circuits, ground.max());
  Matroid m(ground, std::move(data));
  m.build_table();
  m.rank_ = m.rank(ground);
  return m;
}

Matroid Matroid::empty() {
  return circuit_list_unchecked(ElementSet{}, {});
}

Matroid Matroid::from_circuits(int d, const std::vector<ElementSet>& circuits) {
  if (d < 1) throw Error(ErrorKind::EmptyGroundSet, "ground set must be non-empty");
  if (d > kMaxElement) throw Error(ErrorKind::TooLarge, "ground set larger than 64");
  const ElementSet ground = ElementSet::range(d);
  for (ElementSet c : circuits) {
    if (c.empty()) axiom_error("axiom 1: the empty set is listed as a circuit");
    if (!c.subset_of(ground)) {
      throw Error(ErrorKind::OutOfRange, "circuit " + c.to_string() + " is not a subset of [" + std::to_string(d) + "]");
    }
  }
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    for (std::size_t j = 0; j < circuits.size(); ++j) {
      if (i == j) continue;
      if (circuits[i] == circuits[j] && i < j) {
        axiom_error("axiom 2: circuit " + circuits[i].to_string() + " is listed twice");
      }
      if (circuits[i].proper_subset_of(circuits[j])) {
        axiom_error("axiom 2: circuit " + circuits[j].to_string() + " contains circuit " + circuits[i].to_string());
      }
    }
  }
  // dependent[U]: U contains a listed circuit.
  std::vector<bool> dependent;
  if (d <= kTableLimit) {
    dependent.assign(std::size_t{1} << d, false);
    for (ElementSet c : circuits) dependent[c.mask()] = true;
    for (std::uint64_t u = 1; u < dependent.size(); ++u) {
      if (dependent[u]) continue;
      for (std::uint64_t rest = u; rest != 0; rest &= rest - 1) {
        if (dependent[u & ~(rest & -rest)]) {
          dependent[u] = true;
          break;
        }
      }
    }
  }
  auto contains_circuit = [&](ElementSet u) {
    if (!dependent.empty()) return static_cast<bool>(dependent[u.mask()]);
    return std::any_of(circuits.begin(), circuits.end(), [&](ElementSet c) { return c.subset_of(u); });
  };
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    for (std::size_t j = i + 1; j < circuits.size(); ++j) {
      const ElementSet common = circuits[i] & circuits[j];
      const ElementSet uni = circuits[i] | circuits[j];
      for (Element e : common) {
        if (!contains_circuit(uni.without(e))) {
          axiom_error("axiom 3: circuits " + circuits[i].to_string() + " and " + circuits[j].to_string() +
                      " share " + std::to_string(e) + " but no circuit lies in " + uni.without(e).to_string());
        }
      }
    }
  }
  return circuit_list_unchecked(ground, circuits);
}

Matroid Matroid::paving(int d, int n, const std::vector<ElementSet>& hyperplanes) {
  if (d < 1) throw Error(ErrorKind::EmptyGroundSet, "ground set must be non-empty");
  if (d > kMaxElement) throw Error(ErrorKind::TooLarge, "ground set larger than 64");
  if (n < 1 || n > d) throw Error(ErrorKind::AxiomViolation, "paving rank must satisfy 1 <= n <= d");
  const ElementSet ground = ElementSet::range(d);
  for (std::size_t i = 0; i < hyperplanes.size(); ++i) {
    const ElementSet h = hyperplanes[i];
    if (!h.subset_of(ground)) throw Error(ErrorKind::OutOfRange, "hyperplane " + h.to_string() + " leaves [d]");
    if (h.size() < n) {
      axiom_error("dependent hyperplane " + h.to_string() + " has fewer than n = " + std::to_string(n) + " points");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if ((h & hyperplanes[j]).size() > n - 2) {
        axiom_error("dependent hyperplanes " + hyperplanes[j].to_string() + " and " + h.to_string() +
                    " meet in more than n-2 points");
      }
    }
  }
  std::vector<ElementSet> small;
  for (ElementSet h : hyperplanes) for_each_k_subset(h, n, [&](ElementSet s) { small.push_back(s); });
  std::sort(small.begin(), small.end(), [](ElementSet a, ElementSet b) { return a.mask() < b.mask(); });
  small.erase(std::unique(small.begin(), small.end()), small.end());
  std::vector<ElementSet> all = small;
  if (n < d) {
    for_each_k_subset(ground, n + 1, [&](ElementSet s) {
      const bool covered = std::any_of(small.begin(), small.end(), [&](ElementSet c) { return c.subset_of(s); });
      if (!covered) all.push_back(s);
    });
  }
  return circuit_list_unchecked(ground, all);
}

Matroid Matroid::uniform(int n, int d) {
  if (d < 1) throw Error(ErrorKind::EmptyGroundSet, "ground set must be non-empty");
  if (n < 0 || n > d) throw Error(ErrorKind::AxiomViolation, "uniform matroid needs 0 <= n <= d");
  SplitHypergraph h{d, n, {}};
  return from_split_unchecked(h);
}

Matroid Matroid::from_vectors(const std::vector<std::vector<Rational>>& columns) {
  if (columns.empty()) throw Error(ErrorKind::EmptyGroundSet, "no vectors given");
  if (columns.size() > static_cast<std::size_t>(kMaxElement)) throw Error(ErrorKind::TooLarge, "more than 64 vectors");
  const std::size_t len = columns.front().size();
  detail::VectorData v;
  for (const auto& c : columns) {
    if (c.size() != len) throw Error(ErrorKind::DimensionMismatch, "vectors have different lengths");
    v.columns.push_back(clear_denominators(c));
  }
  auto data = std::make_shared<detail::BackendData>();
  data->v = std::move(v);
  Matroid m(ElementSet::range(static_cast<int>(columns.size())), std::move(data));
  m.rank_ = m.rank(m.ground_);
  return m;
}

Matroid Matroid::from_split_unchecked(const SplitHypergraph& h) {
  if (h.d < 1) throw Error(ErrorKind::EmptyGroundSet, "ground set must be non-empty");
  if (h.d > kMaxElement) throw Error(ErrorKind::TooLarge, "ground set larger than 64");
  auto data = std::make_shared<detail::BackendData>();
  data->v = detail::SplitData{h};
  Matroid m(ElementSet::range(h.d), std::move(data));
  m.build_table();
  m.rank_ = m.rank(m.ground_);
  return m;
}

void Matroid::build_table() {
  const int top = ground_.max();
  if (top > kTableLimit) return;
  const std::size_t size = std::size_t{1} << top;
  auto table = std::make_shared<std::vector<std::uint8_t>>(size);
  auto& t = *table;
  if (const auto* c = std::get_if<detail::CircuitData>(&data_->v)) {
    std::vector<bool> is_circuit(size, false);
    for (ElementSet circ : c->circuits) is_circuit[circ.mask()] = true;
    std::vector<bool> dependent(size, false);
    for (std::uint64_t u = 1; u < size; ++u) {
      bool dep = is_circuit[u];
      std::uint8_t best = 0;
      for (std::uint64_t rest = u; rest != 0; rest &= rest - 1) {
        const std::uint64_t sub = u & ~(rest & -rest);
        dep = dep || dependent[sub];
        best = std::max(best, t[sub]);
      }
      dependent[u] = dep;
      t[u] = dep ? best : static_cast<std::uint8_t>(std::popcount(u));
    }
  } else {
    for (std::uint64_t u = 0; u < size; ++u) t[u] = static_cast<std::uint8_t>(oracle_rank(ElementSet::from_mask(u)));
  }
  table_ = std::move(table);
}

int Matroid::oracle_rank(ElementSet s) const {
  if (const auto* c = std::get_if<detail::CircuitData>(&data_->v)) return circuit_rank(*c, s);
  if (const auto* sp = std::get_if<detail::SplitData>(&data_->v)) return split_rank(sp->h, s);
  if (const auto* v = std::get_if<detail::VectorData>(&data_->v)) return vector_rank(*v, s);
  const auto& minor = std::get<detail::MinorData>(data_->v);
  return minor.parent->rank(s | minor.contracted) - minor.parent->rank(minor.contracted);
}

void Matroid::check_subset(ElementSet s) const {
  if (!s.subset_of(ground_)) {
    throw Error(ErrorKind::OutOfRange, s.to_string() + " is not a subset of the ground set " + ground_.to_string());
  }
}

int Matroid::rank(ElementSet s) const {
  check_subset(s);
  if (table_) return (*table_)[s.mask()];
  return oracle_rank(s);
}

bool Matroid::is_circuit(ElementSet s) const {
  if (s.empty() || rank(s) != s.size() - 1) return false;
  for (Element x : s) {
    if (rank(s.without(x)) != s.size() - 1) return false;
  }
  return true;
}

ElementSet Matroid::closure(ElementSet s) const {
  const int r = rank(s);
  ElementSet out = s;
  for (Element x : ground_ - s) {
    if (rank(s.with(x)) == r) out = out.with(x);
  }
  return out;
}

Backend Matroid::backend() const {
  switch (data_->v.index()) {
    case 0: return Backend::CircuitList;
    case 1: return Backend::SplitHypergraph;
    case 2: return Backend::VectorConfig;
    default: return Backend::Minor;
  }
}

const SplitHypergraph* Matroid::hypergraph() const {
  const auto* sp = std::get_if<detail::SplitData>(&data_->v);
  if (sp == nullptr || ground_ != ElementSet::range(sp->h.d)) return nullptr;
  return &sp->h;
}

Matroid Matroid::restriction(ElementSet s) const {
  check_subset(s);
  Matroid m = *this;
  m.ground_ = s;
  m.rank_ = rank(s);
  return m;
}

Matroid Matroid::deletion(ElementSet s) const {
  check_subset(s);
  return restriction(ground_ - s);
}

Matroid Matroid::contraction(ElementSet s) const {
  check_subset(s);
  if (!is_independent(s)) {
    throw Error(ErrorKind::NonIndependentContraction, "contraction set " + s.to_string() + " is dependent");
  }
  auto data = std::make_shared<detail::BackendData>();
  data->v = detail::MinorData{std::make_shared<const Matroid>(*this), s};
  Matroid m(ground_ - s, std::move(data));
  m.rank_ = rank_ - s.size();
  return m;
}

std::vector<ElementSet> circuits(const Matroid& m, int max_size) {
  std::vector<ElementSet> out;
  const int top = std::min(max_size, m.rank() + 1);
  for (int k = 1; k <= top; ++k) {
    for_each_k_subset(m.ground(), k, [&](ElementSet s) {
      if (m.is_circuit(s)) out.push_back(s);
    });
  }
  return out;
}

std::vector<ElementSet> circuits(const Matroid& m) { return circuits(m, m.rank() + 1); }

std::vector<ElementSet> bases(const Matroid& m) {
  std::vector<ElementSet> out;
  for_each_k_subset(m.ground(), m.rank(), [&](ElementSet s) {
    if (m.is_independent(s)) out.push_back(s);
  });
  return out;
}

std::vector<Subspace> subspaces(const Matroid& m) {
  std::map<std::uint64_t, Subspace> by_closure;
  for (ElementSet c : circuits(m, m.rank())) {
    Subspace& s = by_closure[m.closure(c).mask()];
    s.points |= c;
    s.rank = c.size() - 1;
  }
  std::vector<Subspace> out;
  out.reserve(by_closure.size());
  for (auto& [key, s] : by_closure) out.push_back(s);
  std::sort(out.begin(), out.end(), [](const Subspace& a, const Subspace& b) { return lex_less(a.points, b.points); });
  return out;
}

std::vector<Subspace> point_subspaces(const Matroid& m, Element p) {
  if (!m.ground().contains(p)) throw Error(ErrorKind::OutOfRange, "point " + std::to_string(p) + " not in ground set");
  std::vector<Subspace> out;
  for (const Subspace& s : subspaces(m)) {
    if (s.points.contains(p)) out.push_back(s);
  }
  return out;
}

int degree(const Matroid& m, Element p) { return static_cast<int>(point_subspaces(m, p).size()); }

namespace {

// Closures (in M) of the circuits of M|within through p with at most n = rank(M) elements.
std::vector<std::pair<ElementSet, int>> classes_through(const Matroid& m, ElementSet within, Element p) {
  if (!within.contains(p) || !within.subset_of(m.ground())) {
    throw Error(ErrorKind::OutOfRange, "point " + std::to_string(p) + " not in " + within.to_string());
  }
  const int top = m.rank();
  const ElementSet others = within.without(p);
  std::vector<std::pair<ElementSet, int>> out;
  for (int k = 1; k <= top; ++k) {
    for_each_k_subset(others, k - 1, [&](ElementSet s) {
      const ElementSet c = s.with(p);
      bool known = false;
      for (const auto& [key, r] : out) {
        if (r == k - 1 && c.subset_of(key)) {
          known = true;
          break;
        }
      }
      if (known || !m.is_circuit(c)) return;
      out.emplace_back(m.closure(c), k - 1);
    });
  }
  return out;
}

}  // namespace

std::vector<Subspace> subspaces_through(const Matroid& m, ElementSet within, Element p) {
  std::vector<Subspace> out;
  for (const auto& [key, r] : classes_through(m, within, p)) {
    Subspace l{ElementSet{}, r};
    for_each_k_subset(key & within, r + 1, [&](ElementSet c) {
      if (!c.subset_of(l.points) && m.is_circuit(c)) l.points |= c;
    });
    out.push_back(l);
  }
  std::sort(out.begin(), out.end(), [](const Subspace& a, const Subspace& b) { return lex_less(a.points, b.points); });
  return out;
}

int degree_within(const Matroid& m, ElementSet within, Element p) {
  return static_cast<int>(classes_through(m, within, p).size());
}

bool is_connected(const Matroid& m) {
  const std::vector<Element> elems = m.ground().elements();
  if (elems.size() <= 1) return true;
  std::vector<int> parent(kMaxElement + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (ElementSet c : circuits(m)) {
    const Element first = c.min();
    for (Element e : c) parent[find(e)] = find(first);
  }
  const int root = find(elems.front());
  return std::all_of(elems.begin(), elems.end(), [&](Element e) { return find(e) == root; });
}

bool is_paving(const Matroid& m) { return circuits(m, m.rank() - 1).empty(); }

Matroid direct_sum(const Matroid& m, const Matroid& n) {
  const std::vector<Element> em = m.ground().elements();
  const std::vector<Element> en = n.ground().elements();
  const int d1 = static_cast<int>(em.size());
  const int d2 = static_cast<int>(en.size());
  if (d1 + d2 > kMaxElement) throw Error(ErrorKind::TooLarge, "direct sum exceeds 64 elements");
  std::map<Element, Element> relabel_m, relabel_n;
  for (int i = 0; i < d1; ++i) relabel_m[em[i]] = i + 1;
  for (int i = 0; i < d2; ++i) relabel_n[en[i]] = d1 + i + 1;
  std::vector<ElementSet> all;
  for (ElementSet c : circuits(m)) {
    ElementSet r;
    for (Element e : c) r = r.with(relabel_m[e]);
    all.push_back(r);
  }
  for (ElementSet c : circuits(n)) {
    ElementSet r;
    for (Element e : c) r = r.with(relabel_n[e]);
    all.push_back(r);
  }
  return circuit_list_unchecked(ElementSet::range(d1 + d2), all);
}

}  // namespace matreal
