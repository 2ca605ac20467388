#include "matreal/realization.hpp"

#include <algorithm>
#include <map>

#include "matreal/error.hpp"
#include "matreal/extensor.hpp"

namespace matreal {

namespace {

constexpr std::uint64_t kProbeSeed = 0x5eed'0f'9e0b'e5ULL;
constexpr std::int64_t kProbeHeight = 1000;
constexpr int kProbeCount = 5;

// Lexicographically smallest independent subset of `from` spanning it, extending `start`.
ElementSet greedy_basis(const Matroid& m, ElementSet start, ElementSet from) {
  ElementSet b = start;
  for (Element e : from - start) {
    if (m.rank(b.with(e)) == b.size() + 1) b = b.with(e);
  }
  return b;
}

PolyVector unit(int n, int k) {
  PolyVector v(n);
  v[k] = Poly(1);
  return v;
}

class Builder {
 public:
  Builder(const Matroid& m, const Ordering& w) : m_(m), w_(w), n_(m.rank()), sampler_(kProbeSeed, kProbeHeight) {
    const int d = m.ground().max();
    pm_.n = n_;
    pm_.d = d;
    pm_.order = w;
    pm_.columns.assign(d, PolyVector(n_));
  }

  BuildResult run() {
    check_ordering(m_, w_);
    ElementSet prefix;
    for (int i = 0; i < n_; ++i) prefix = prefix.with(w_[i]);
    if (!m_.is_basis(prefix)) {
      throw Error(ErrorKind::InvalidOrdering, "the first n points " + prefix.to_string() + " are not a basis");
    }
    for (int i = 0; i < n_; ++i) {
      pm_.columns[w_[i] - 1] = unit(n_, i);
      steps_.push_back({w_[i], 0, 0, {}, 0});
    }
    for (std::size_t i = n_; i < w_.size(); ++i) {
      const Element p = w_[i];
      prefix = prefix.with(p);
      const auto ls = subspaces_through(m_, prefix, p);
      ColumnStep step{p, static_cast<int>(ls.size()), 0, {}, 0};
      const int position = static_cast<int>(i) + 1;
      if (ls.empty()) {
        PolyVector col(n_);
        for (int k = 0; k < n_; ++k) col[k] = fresh(position);
        pm_.columns[p - 1] = std::move(col);
        step.new_params = n_;
      } else if (ls.size() == 1) {
        const ElementSet basis = greedy_basis(m_, {}, ls[0].points.without(p));
        PolyVector col(n_);
        for (Element q : basis) add_scaled(col, fresh(position), pm_.columns[q - 1]);
        pm_.columns[p - 1] = std::move(col);
        step.new_params = basis.size();
        step.basis = basis.elements();
      } else if (ls.size() == 2) {
        degree_two(p, position, ls[0], ls[1], step);
      } else {
        throw Error(ErrorKind::DegreeTooHigh, "point " + std::to_string(p) + " lies on " +
                                                  std::to_string(ls.size()) + " subspaces of its prefix");
      }
      steps_.push_back(std::move(step));
    }
    add_basis_minors();
    pm_.nonvanishing = finish_nonvanishing();
    return {std::move(pm_), std::move(steps_)};
  }

 private:
  Poly fresh(int position) {
    const int index = static_cast<int>(pm_.params.size());
    const int local = ++counter_[position];
    pm_.params.push_back("c_{" + std::to_string(position) + "," + std::to_string(local) + "}");
    return Poly::var(index);
  }

  static void add_scaled(PolyVector& acc, const Poly& c, const PolyVector& v) {
    for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += c * v[k];
  }

  std::vector<Rational> probe_point() { return sampler_.point(pm_.params.size()); }

  // A matrix (given by columns) with full column rank for generic parameters.
  bool generically_independent(const std::vector<PolyVector>& cols) {
    for (int t = 0; t < kProbeCount; ++t) {
      const auto point = probe_point();
      std::vector<std::vector<Rational>> numeric;
      for (const auto& c : cols) numeric.push_back(evaluate(c, point));
      if (rational_rank(numeric) == static_cast<int>(cols.size())) return true;
    }
    return false;
  }

  // Strips rational and monomial content; a single-entry vector becomes a unit vector.
  PolyVector normalize(PolyVector v) {
    std::size_t nonzero = 0, last = 0;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (!v[k].is_zero()) {
        ++nonzero;
        last = k;
      }
    }
    if (nonzero == 0) return v;
    if (nonzero == 1) {
      record_factor(v[last]);
      return unit(static_cast<int>(v.size()), static_cast<int>(last));
    }
    Monomial content;
    bool first = true;
    for (const Poly& e : v) {
      if (e.is_zero()) continue;
      content = first ? e.monomial_content() : Monomial::gcd(content, e.monomial_content());
      first = false;
    }
    for (const auto& [var, exp] : content.factors()) record_factor(Poly::var(var));
    Integer g = 0, l = 1;
    for (Poly& e : v) {
      e = e.divide_monomial(content);
      for (const Term& t : e.terms()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_num_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coef.get_den_mpz_t());
      }
    }
    Rational scale(l, g);
    scale.canonicalize();
    for (Poly& e : v) e = e * Poly(scale);
    return v;
  }

  void record_factor(const Poly& f) {
    if (!f.is_constant()) genericity_.push_back(f);
  }

  void degree_two(Element p, int position, const Subspace& l1, const Subspace& l2, ColumnStep& step) {
    const ElementSet u = (l1.points | l2.points).without(p);
    const int m = m_.rank(u);
    step.joint_rank = m;
    const ElementSet q = greedy_basis(m_, {}, l1.points.without(p));
    const ElementSet r = greedy_basis(m_, {}, l2.points.without(p));
    const ElementSet b1 = greedy_basis(m_, q, u);
    const ElementSet q_ext = b1 - q;
    const ElementSet r_ext = greedy_basis(m_, r, r | q) - r;
    const ElementSet s = b1 - (q_ext | r_ext);
    const std::vector<Element> b1_list = b1.elements();

    // Coordinates relative to the columns of B1 (m-dimensional), or the ambient coordinates when m = n.
    std::vector<PolyVector> coord(pm_.d + 1);
    std::vector<PolyVector> a_cols;
    for (Element e : b1_list) a_cols.push_back(pm_.columns[e - 1]);
    if (m == n_) {
      for (Element e : u) coord[e] = pm_.columns[e - 1];
    } else {
      const auto rows = choose_rows(a_cols, m);
      auto restrict_rows = [&](const PolyVector& v) {
        PolyVector out;
        for (int row : rows) out.push_back(v[row]);
        return out;
      };
      std::vector<PolyVector> a_rows;
      for (const auto& c : a_cols) a_rows.push_back(restrict_rows(c));
      for (int k = 0; k < m; ++k) coord[b1_list[k]] = unit(m, k);
      for (Element e : r - b1) {
        // Cramer numerators: det(A_R) times the coordinates of the column of e.
        const PolyVector target = restrict_rows(pm_.columns[e - 1]);
        PolyVector y(m);
        for (int k = 0; k < m; ++k) {
          std::vector<PolyVector> replaced = a_rows;
          replaced[k] = target;
          y[k] = determinant(replaced);
        }
        coord[e] = std::move(y);
      }
    }
    auto join_of = [&](ElementSet set) {
      std::vector<PolyVector> fs;
      for (Element e : set) fs.push_back(coord[e]);
      return Extensor::join_of(m, fs);
    };
    const Extensor common = meet(join_of(q), join_of(r));
    std::vector<PolyVector> basis;
    for (Element si : s) {
      const Extensor v = meet(common, join_of(q_ext | r_ext | ElementSet::single(si)));
      PolyVector local = to_vector(v);
      PolyVector ambient(n_);
      if (m == n_) {
        ambient = std::move(local);
      } else {
        for (int k = 0; k < m; ++k) add_scaled(ambient, local[k], a_cols[k]);
      }
      basis.push_back(normalize(std::move(ambient)));
    }
    if (!generically_independent(basis)) {
      throw Error(ErrorKind::SymbolicDegeneracy, "intersection vectors for point " + std::to_string(p) +
                                                     " are dependent for generic parameters");
    }
    PolyVector col(n_);
    for (const PolyVector& v : basis) add_scaled(col, fresh(position), v);
    pm_.columns[p - 1] = std::move(col);
    step.new_params = static_cast<int>(basis.size());
    step.basis = s.elements();
  }

  // Lexicographically first m-subset of rows on which A has a non-vanishing minor.
  std::vector<int> choose_rows(const std::vector<PolyVector>& a_cols, int m) {
    std::vector<int> chosen;
    bool found = false;
    for_each_k_subset(ElementSet::range(n_), m, [&](ElementSet rows) {
      if (found) return;
      std::vector<PolyVector> sub;
      for (const auto& c : a_cols) {
        PolyVector r;
        for (Element row : rows) r.push_back(c[row - 1]);
        sub.push_back(std::move(r));
      }
      bool nonzero = false;
      for (int t = 0; t < kProbeCount && !nonzero; ++t) {
        const auto point = probe_point();
        std::vector<std::vector<Rational>> numeric;
        for (const auto& c : sub) numeric.push_back(evaluate(c, point));
        nonzero = rational_determinant(numeric) != 0;
      }
      const Poly det = determinant(sub);
      if (!nonzero && det.is_zero()) return;
      record_factor(det);
      for (Element row : rows) chosen.push_back(row - 1);
      found = true;
    });
    if (!found) throw Error(ErrorKind::SymbolicDegeneracy, "no row subset gives a non-vanishing minor");
    return chosen;
  }

  void add_basis_minors() {
    for (ElementSet b : bases(m_)) {
      std::vector<PolyVector> cols;
      for (Element e : b) cols.push_back(pm_.columns[e - 1]);
      Poly det = determinant(cols);
      if (det.is_zero()) {
        throw Error(ErrorKind::SymbolicDegeneracy, "basis " + b.to_string() + " has an identically zero minor");
      }
      minors_.push_back(std::move(det));
    }
  }

  std::vector<Poly> finish_nonvanishing() {
    std::vector<Poly> out;
    auto push = [&](const Poly& f) {
      if (f.is_constant()) return;
      Poly g = f.primitive();
      if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(std::move(g));
    };
    for (const Poly& f : minors_) push(f);
    for (const Poly& f : genericity_) push(f);
    return out;
  }

  const Matroid& m_;
  const Ordering& w_;
  int n_;
  RationalSampler sampler_;
  ParamMatrix pm_;
  std::vector<ColumnStep> steps_;
  std::vector<Poly> minors_;
  std::vector<Poly> genericity_;
  std::map<int, int> counter_;
};

}  // namespace

BuildResult build_realization_traced(const Matroid& m, const Ordering& w) { return Builder(m, w).run(); }

ParamMatrix build_realization(const Matroid& m, const Ordering& w) { return build_realization_traced(m, w).matrix; }

VerificationReport verify_realization(const ParamMatrix& pm, const Matroid& m, int samples, std::uint64_t seed,
                                      const VerifyOptions& options) {
  if (pm.columns.size() != static_cast<std::size_t>(m.ground().max()) || pm.n != m.rank()) {
    throw Error(ErrorKind::DimensionMismatch, "parametrized matrix does not match the matroid's size or rank");
  }
  RationalSampler sampler(seed, options.height);
  VerificationReport report;
  report.samples = samples;
  std::vector<ElementSet> subsets;
  for (int k = 1; k <= m.rank(); ++k) for_each_k_subset(m.ground(), k, [&](ElementSet s) { subsets.push_back(s); });
  for (int s = 0; s < samples; ++s) {
    std::vector<Rational> point;
    int attempts = 0;
    while (true) {
      if (attempts == options.retry_cap) {
        throw Error(ErrorKind::RetryExhausted, "no sample off the non-vanishing locus after " +
                                                   std::to_string(options.retry_cap) + " attempts");
      }
      ++attempts;
      point = sampler.point(pm.params.size());
      const bool ok = std::none_of(pm.nonvanishing.begin(), pm.nonvanishing.end(),
                                   [&](const Poly& f) { return f.evaluate(point) == 0; });
      if (ok) break;
      ++report.rejected;
    }
    std::vector<std::vector<Rational>> numeric;
    for (const PolyVector& c : pm.columns) numeric.push_back(evaluate(c, point));
    const Matroid realized = Matroid::from_vectors(numeric);
    SampleResult result;
    result.point = point;
    result.passed = true;
    for (ElementSet t : subsets) {
      const int expected = m.rank(t);
      const int observed = realized.rank(t);
      if (expected != observed) {
        result.passed = false;
        result.witness = t;
        result.expected_rank = expected;
        result.observed_rank = observed;
        break;
      }
    }
    if (result.passed) ++report.passed;
    report.results.push_back(std::move(result));
  }
  return report;
}

std::vector<std::string> generic_matrix_names(int n, int d) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= d; ++j) names.push_back("x_{" + std::to_string(i) + "," + std::to_string(j) + "}");
  }
  return names;
}

namespace {

Poly generic_minor(int d, ElementSet rows, ElementSet cols) {
  std::vector<PolyVector> m;
  for (Element j : cols) {
    PolyVector c;
    for (Element i : rows) c.push_back(Poly::var((i - 1) * d + (j - 1)));
    m.push_back(std::move(c));
  }
  return determinant(m);
}

}  // namespace

std::vector<Poly> circuit_ideal_generators(const Matroid& m, std::size_t cap) {
  const int n = m.rank();
  const int d = m.ground().max();
  std::vector<Poly> out;
  for (ElementSet b : circuits(m, n)) {
    for_each_k_subset(ElementSet::range(n), b.size(), [&](ElementSet rows) {
      if (out.size() >= cap) {
        throw Error(ErrorKind::TooLarge, "more than " + std::to_string(cap) + " circuit ideal generators");
      }
      out.push_back(generic_minor(d, rows, b));
    });
  }
  return out;
}

std::vector<Poly> basis_nonvanishing(const Matroid& m) {
  const int d = m.ground().max();
  std::vector<Poly> out;
  for (ElementSet b : bases(m)) out.push_back(generic_minor(d, ElementSet::range(m.rank()), b));
  return out;
}

}  // namespace matreal
