#include "matreal/rigidity.hpp"

#include <unordered_set>

#include "matreal/dimensions.hpp"
#include "matreal/error.hpp"
#include "matreal/split.hpp"

namespace matreal {

namespace {

bool has_circuit_of_size(const Matroid& m, int k) {
  bool found = false;
  for_each_k_subset(m.ground(), k, [&](ElementSet s) {
    if (!found && m.is_circuit(s)) found = true;
  });
  return found;
}

// Extends a circuit prefix by points of degree at most two; with `unit_tau`, each new point must have τ = 1.
class PrefixSearch {
 public:
  PrefixSearch(const Matroid& m, bool unit_tau) : m_(m), unit_tau_(unit_tau) {}

  bool extend(ElementSet placed, Ordering& order) {
    if (placed == m_.ground()) return true;
    if (dead_.count(placed.mask()) != 0) return false;
    for (Element p : m_.ground() - placed) {
      const ElementSet next = placed.with(p);
      const auto ls = subspaces_through(m_, next, p);
      if (ls.size() > 2) continue;
      if (unit_tau_) {
        int tau = -m_.rank() * (static_cast<int>(ls.size()) - 1);
        for (const Subspace& l : ls) tau += l.rank;
        if (tau != 1) continue;
      }
      order.push_back(p);
      if (extend(next, order)) return true;
      order.pop_back();
    }
    dead_.insert(placed.mask());
    return false;
  }

 private:
  const Matroid& m_;
  bool unit_tau_;
  std::unordered_set<std::uint64_t> dead_;
};

std::optional<Ordering> circuit_prefixed(const Matroid& m, bool unit_tau) {
  PrefixSearch search(m, unit_tau);
  std::optional<Ordering> result;
  for_each_k_subset(m.ground(), m.rank() + 1, [&](ElementSet c) {
    if (result || !m.is_circuit(c)) return;
    Ordering w = c.elements();
    if (search.extend(c, w)) result = std::move(w);
  });
  return result;
}

}  // namespace

RigidityReport rigidity_criterion(const Matroid& m, const Ordering& w) {
  if (!satisfies_inductive_condition(m, w)) {
    throw Error(ErrorKind::NotInductivelyConnected, "ordering " + format_ordering(w) + " is not inductive");
  }
  const TypeVector t = ordering_type(m, w);
  RigidityReport r;
  r.ordering = w;
  for (int x : t.tau_tilde) r.sum_tau_tilde += x;
  const std::int64_t n = m.rank();
  r.threshold = n * n - 1 + m.size();
  r.rigid_criterion = r.sum_tau_tilde == r.threshold;
  r.has_n_plus_1_circuit = has_circuit_of_size(m, m.rank() + 1);
  if (r.has_n_plus_1_circuit) r.rigid = r.rigid_criterion;
  if (recognize_elementary_split(m)) {
    r.naive_dim = naive_dimension(m);
    r.naive_equals_threshold = *r.naive_dim == r.threshold;
    r.verdict_basis = "characterization";
  } else {
    r.verdict_basis = "sufficient-only";
  }
  return r;
}

RigidityReport rigidity_criterion(const Matroid& m) {
  const auto w = find_inductive_ordering(m);
  if (!w) throw Error(ErrorKind::NotInductivelyConnected, "matroid is not inductively connected");
  return rigidity_criterion(m, *w);
}

RigidityReport is_inductively_rigid(const Matroid& m) {
  RigidityReport r = rigidity_criterion(m);
  if (!r.has_n_plus_1_circuit) return r;
  if (r.verdict_basis == "characterization") {
    r.inductively_rigid_witness = circuit_prefixed(m, true);
  } else if (r.rigid_criterion) {
    r.inductively_rigid_witness = circuit_prefixed(m, false);
  }
  return r;
}

}  // namespace matreal
