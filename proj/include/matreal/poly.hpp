#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "matreal/rational.hpp"

namespace matreal {

/// Sparse monomial: (variable index, exponent) pairs sorted by index, exponents > 0.
class Monomial {
 public:
  Monomial() = default;
  static Monomial var(int index, int exponent = 1);

  const std::vector<std::pair<int, int>>& factors() const { return factors_; }
  int degree() const { return degree_; }
  int exponent(int index) const;
  bool is_one() const { return factors_.empty(); }
  /// Whether `other` divides this monomial.
  bool divisible_by(const Monomial& other) const;
  Monomial divided_by(const Monomial& other) const;
  /// Componentwise minimum of exponents.
  static Monomial gcd(const Monomial& a, const Monomial& b);

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  bool operator==(const Monomial&) const = default;

 private:
  std::vector<std::pair<int, int>> factors_;
  int degree_ = 0;
};

/// Graded lexicographic order with variable 0 largest.
bool grlex_greater(const Monomial& a, const Monomial& b);

struct Term {
  Rational coef;
  Monomial mono;
  bool operator==(const Term&) const = default;
};

/// Exact multivariate polynomial over the rationals; terms are kept in
/// descending graded lexicographic order with no zero coefficients.
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& c);  // NOLINT(implicit)
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT(implicit)
  Poly(int c) : Poly(Rational(c)) {}  // NOLINT(implicit)
  static Poly var(int index);
  static Poly term(const Rational& c, const Monomial& m);
  /// Takes terms in any order; merges duplicates and drops zeros.
  static Poly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  /// Constant term value (0 when absent).
  Rational constant() const;
  int degree() const { return terms_.empty() ? -1 : terms_.front().mono.degree(); }
  /// Largest variable index used plus one.
  int num_vars() const;

  Rational evaluate(const std::vector<Rational>& values) const;
  /// Substitutes each variable by a polynomial.
  Poly substitute(const std::vector<Poly>& values) const;

  /// Divides out the gcd of the numerators and lcm of denominators, and makes the leading coefficient positive.
  Poly primitive() const;
  /// Largest monomial dividing every term.
  Monomial monomial_content() const;
  Poly divide_monomial(const Monomial& m) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  bool operator==(const Poly&) const = default;

  /// Human-readable form using the given variable names ("x0", "x1", ... when empty).
  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  std::vector<Term> terms_;
};

/// Canonical comparison of polynomials (by term list in grlex order).
bool poly_less(const Poly& a, const Poly& b);

using PolyVector = std::vector<Poly>;

/// Determinant of the square matrix whose columns are given, by cofactor
/// expansion along columns with memoization over row subsets.
Poly determinant(const std::vector<PolyVector>& columns);

/// Determinant of a rational matrix given by columns.
Rational rational_determinant(const std::vector<std::vector<Rational>>& columns);

/// Evaluates every entry.
std::vector<Rational> evaluate(const PolyVector& v, const std::vector<Rational>& values);

}  // namespace matreal
