#pragma once

#include <map>
#include <string>
#include <vector>

#include "matreal/element_set.hpp"
#include "matreal/error.hpp"
#include "matreal/poly.hpp"

namespace matreal {

/// Formal sum of decomposable extensors c * (f1 ∨ ... ∨ fk) in ambient dimension n.
///
/// `Traits` supplies the coefficient and factor types and the bracket
/// [f1 ... fn] of n factors as a coefficient.
template <class Traits>
class BasicExtensor {
 public:
  using Coef = typename Traits::Coef;
  using Factor = typename Traits::Factor;

  struct Term {
    Coef coef;
    std::vector<Factor> factors;
  };

  BasicExtensor(int ambient, int step) : n_(ambient), step_(step) {}

  static BasicExtensor factor(int ambient, Factor f) {
    BasicExtensor e(ambient, 1);
    e.terms_.push_back({Coef(1), {std::move(f)}});
    return e;
  }
  /// f1 ∨ ... ∨ fk.
  static BasicExtensor join_of(int ambient, const std::vector<Factor>& fs) {
    if (static_cast<int>(fs.size()) > ambient) {
      throw Error(ErrorKind::StepOverflow, "join of " + std::to_string(fs.size()) + " factors exceeds dimension");
    }
    BasicExtensor e(ambient, static_cast<int>(fs.size()));
    e.terms_.push_back({Coef(1), fs});
    return e;
  }
  static BasicExtensor scalar(int ambient, Coef c) {
    BasicExtensor e(ambient, 0);
    e.terms_.push_back({std::move(c), {}});
    return e;
  }

  int ambient() const { return n_; }
  int step() const { return step_; }
  const std::vector<Term>& terms() const { return terms_; }
  /// True when there are no terms left; a non-empty sum may still vanish.
  bool empty() const { return terms_.empty(); }

  void add_term(Coef c, std::vector<Factor> fs) {
    if (static_cast<int>(fs.size()) != step_) throw Error(ErrorKind::DimensionMismatch, "term has the wrong step");
    if (!Traits::is_zero(c)) terms_.push_back({std::move(c), std::move(fs)});
  }

  BasicExtensor& operator+=(const BasicExtensor& o) {
    if (o.step_ != step_ || o.n_ != n_) throw Error(ErrorKind::DimensionMismatch, "adding extensors of different step");
    for (const Term& t : o.terms_) terms_.push_back(t);
    return *this;
  }

  friend BasicExtensor join(const BasicExtensor& a, const BasicExtensor& b) {
    if (a.n_ != b.n_) throw Error(ErrorKind::DimensionMismatch, "extensors live in different dimensions");
    if (a.step_ + b.step_ > a.n_) {
      throw Error(ErrorKind::StepOverflow, "join of steps " + std::to_string(a.step_) + " and " +
                                               std::to_string(b.step_) + " exceeds dimension " + std::to_string(a.n_));
    }
    BasicExtensor out(a.n_, a.step_ + b.step_);
    for (const Term& s : a.terms_) {
      for (const Term& t : b.terms_) {
        std::vector<Factor> fs = s.factors;
        fs.insert(fs.end(), t.factors.begin(), t.factors.end());
        out.add_term(s.coef * t.coef, std::move(fs));
      }
    }
    return out;
  }

  /// Shuffle formula:
  /// v ∧ w = Σ_σ sgn(σ) [v_σ(1) ... v_σ(n-j) w_1 ... w_j] v_σ(n-j+1) ∨ ... ∨ v_σ(k),
  /// where σ runs over shuffles keeping both blocks in order. Zero when k + j < n.
  friend BasicExtensor meet(const BasicExtensor& v, const BasicExtensor& w) {
    if (v.n_ != w.n_) throw Error(ErrorKind::DimensionMismatch, "extensors live in different dimensions");
    const int n = v.n_, k = v.step_, j = w.step_;
    if (k + j < n) return BasicExtensor(n, 0);
    BasicExtensor out(n, k + j - n);
    const int take = n - j;
    for (const Term& s : v.terms_) {
      for (const Term& t : w.terms_) {
        const Coef base = s.coef * t.coef;
        for_each_k_subset(ElementSet::range(k), take, [&](ElementSet chosen) {
          std::vector<Factor> bracket_args;
          std::vector<Factor> rest;
          int inversions = 0;
          int position = 0;
          for (int i = 1; i <= k; ++i) {
            if (chosen.contains(i)) {
              bracket_args.push_back(s.factors[i - 1]);
              inversions += (i - 1) - position;
              ++position;
            } else {
              rest.push_back(s.factors[i - 1]);
            }
          }
          bracket_args.insert(bracket_args.end(), t.factors.begin(), t.factors.end());
          Coef b = Traits::bracket(bracket_args);
          if (Traits::is_zero(b)) return;
          Coef c = base * b;
          if (inversions % 2 == 1) c = -c;
          out.add_term(std::move(c), std::move(rest));
        });
      }
    }
    return out;
  }

  /// Σ coef * [factors] for a step-n extensor.
  Coef bracket_value() const {
    if (step_ != n_) throw Error(ErrorKind::DimensionMismatch, "bracket needs a step-n extensor");
    Coef sum(0);
    for (const Term& t : terms_) sum = sum + t.coef * Traits::bracket(t.factors);
    return sum;
  }

 private:
  int n_;
  int step_;
  std::vector<Term> terms_;
};

struct PolyTraits {
  using Coef = Poly;
  using Factor = PolyVector;
  static Poly bracket(const std::vector<PolyVector>& vs) { return determinant(vs); }
  static bool is_zero(const Poly& p) { return p.is_zero(); }
};

/// Extensor over polynomial vectors.
using Extensor = BasicExtensor<PolyTraits>;

/// Bracket [v1 ... vn]: determinant; throws DimensionMismatch unless n vectors of length n.
Poly bracket(const std::vector<PolyVector>& vs);

/// Collapses a step-1 extensor to Σ coef * factor; throws StepNotOne.
PolyVector to_vector(const Extensor& e);

/// Plücker coordinates of an extensor: k-subsets of rows (as masks over 1..n) to polynomials, zeros omitted.
std::map<std::uint64_t, Poly> plucker(const Extensor& e);

/// An extensor is zero iff every Plücker coordinate vanishes.
bool is_zero(const Extensor& e);

/// Polynomials in brackets of labelled points, e.g. [1 2 3][4 5 6] - [1 2 4][3 5 6].
///
/// Brackets are stored with sorted labels (the permutation sign moves into the
/// coefficient); a bracket with a repeated label is zero. Monomials are sorted
/// lists of brackets.
class BracketPoly {
 public:
  using Bracket = std::vector<int>;
  using Monomial = std::vector<Bracket>;

  BracketPoly() = default;
  BracketPoly(int c);  // NOLINT(implicit)
  static BracketPoly bracket(std::vector<int> labels);

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  BracketPoly operator-() const;
  friend BracketPoly operator+(const BracketPoly& a, const BracketPoly& b);
  friend BracketPoly operator*(const BracketPoly& a, const BracketPoly& b);
  bool operator==(const BracketPoly&) const = default;

  /// "[1 2 3][4 5 6] - [1 2 4][3 5 6]"; monomials in lexicographic order.
  std::string to_string() const;

 private:
  std::map<Monomial, Rational> terms_;
};

struct LabelTraits {
  using Coef = BracketPoly;
  using Factor = int;
  static BracketPoly bracket(const std::vector<int>& labels) { return BracketPoly::bracket(labels); }
  static bool is_zero(const BracketPoly& p) { return p.is_zero(); }
};

/// Extensor over symbolic point labels with bracket-polynomial coefficients.
using LabelExtensor = BasicExtensor<LabelTraits>;

}  // namespace matreal
