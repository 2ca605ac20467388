#include "matreal/poly.hpp"

#include <algorithm>
#include <map>

#include "matreal/error.hpp"

namespace matreal {

Monomial Monomial::var(int index, int exponent) {
  Monomial m;
  if (exponent > 0) {
    m.factors_.emplace_back(index, exponent);
    m.degree_ = exponent;
  }
  return m;
}

int Monomial::exponent(int index) const {
  for (const auto& [v, e] : factors_) {
    if (v == index) return e;
  }
  return 0;
}

bool Monomial::divisible_by(const Monomial& other) const {
  for (const auto& [v, e] : other.factors_) {
    if (exponent(v) < e) return false;
  }
  return true;
}

Monomial Monomial::divided_by(const Monomial& other) const {
  Monomial out;
  for (const auto& [v, e] : factors_) {
    const int left = e - other.exponent(v);
    if (left > 0) {
      out.factors_.emplace_back(v, left);
      out.degree_ += left;
    }
  }
  return out;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial out;
  for (const auto& [v, e] : a.factors_) {
    const int low = std::min(e, b.exponent(v));
    if (low > 0) {
      out.factors_.emplace_back(v, low);
      out.degree_ += low;
    }
  }
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
      out.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || j->first < i->first) {
      out.factors_.push_back(*j++);
    } else {
      out.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  out.degree_ = a.degree_ + b.degree_;
  return out;
}

bool grlex_greater(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  // Lex with variable 0 largest: the first differing variable decides.
  auto i = a.factors().begin();
  auto j = b.factors().begin();
  while (i != a.factors().end() && j != b.factors().end()) {
    if (i->first != j->first) return i->first < j->first;
    if (i->second != j->second) return i->second > j->second;
    ++i;
    ++j;
  }
  return i != a.factors().end() && j == b.factors().end();
}

namespace {

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_greater(a, b); }
};

}  // namespace

Poly::Poly(const Rational& c) {
  if (c != 0) {
    terms_.push_back({c, Monomial{}});
    terms_.back().coef.canonicalize();
  }
}

Poly Poly::var(int index) { return term(1, Monomial::var(index)); }

Poly Poly::term(const Rational& c, const Monomial& m) {
  Poly p;
  if (c != 0) {
    p.terms_.push_back({c, m});
    p.terms_.back().coef.canonicalize();
  }
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::map<Monomial, Rational, GrlexGreater> acc;
  for (Term& t : terms) {
    t.coef.canonicalize();
    auto [it, inserted] = acc.try_emplace(std::move(t.mono), t.coef);
    if (!inserted) it->second += t.coef;
  }
  Poly p;
  for (auto& [m, c] : acc) {
    if (c != 0) p.terms_.push_back({c, m});
  }
  return p;
}

Rational Poly::constant() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coef;
  return 0;
}

int Poly::num_vars() const {
  int top = 0;
  for (const Term& t : terms_) {
    if (!t.mono.factors().empty()) top = std::max(top, t.mono.factors().back().first + 1);
  }
  return top;
}

Rational Poly::evaluate(const std::vector<Rational>& values) const {
  Rational sum = 0;
  for (const Term& t : terms_) {
    Rational prod = t.coef;
    for (const auto& [v, e] : t.mono.factors()) {
      if (static_cast<std::size_t>(v) >= values.size()) {
        throw Error(ErrorKind::DimensionMismatch, "no value for variable " + std::to_string(v));
      }
      for (int k = 0; k < e; ++k) prod *= values[v];
    }
    sum += prod;
  }
  return sum;
}

Poly Poly::substitute(const std::vector<Poly>& values) const {
  Poly sum;
  for (const Term& t : terms_) {
    Poly prod(t.coef);
    for (const auto& [v, e] : t.mono.factors()) {
      if (static_cast<std::size_t>(v) >= values.size()) {
        throw Error(ErrorKind::DimensionMismatch, "no value for variable " + std::to_string(v));
      }
      for (int k = 0; k < e; ++k) prod *= values[v];
    }
    sum += prod;
  }
  return sum;
}

Poly Poly::primitive() const {
  if (terms_.empty()) return *this;
  Integer g = 0, l = 1;
  for (const Term& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coef.get_den_mpz_t());
  }
  Rational scale(l, g);
  scale.canonicalize();
  if (terms_.front().coef < 0) scale = -scale;
  Poly out = *this;
  for (Term& t : out.terms_) t.coef *= scale;
  return out;
}

Monomial Poly::monomial_content() const {
  if (terms_.empty()) return {};
  Monomial g = terms_.front().mono;
  for (const Term& t : terms_) g = Monomial::gcd(g, t.mono);
  return g;
}

Poly Poly::divide_monomial(const Monomial& m) const {
  Poly out;
  for (const Term& t : terms_) {
    if (!t.mono.divisible_by(m)) throw Error(ErrorKind::DimensionMismatch, "monomial does not divide polynomial");
    out.terms_.push_back({t.coef, t.mono.divided_by(m)});
  }
  // Dividing every term by one monomial preserves the grlex order.
  return out;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (Term& t : out.terms_) t.coef = -t.coef;
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() || j != o.terms_.end()) {
    if (j == o.terms_.end() || (i != terms_.end() && grlex_greater(i->mono, j->mono))) {
      merged.push_back(std::move(*i++));
    } else if (i == terms_.end() || grlex_greater(j->mono, i->mono)) {
      merged.push_back(*j++);
    } else {
      Rational c = i->coef + j->coef;
      if (c != 0) merged.push_back({std::move(c), std::move(i->mono)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.is_constant()) {
    Poly out = a;
    const Rational c = b.constant();
    for (Term& t : out.terms_) t.coef *= c;
    return out;
  }
  if (a.is_constant()) return b * a;
  std::vector<Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const Term& s : a.terms_) {
    for (const Term& t : b.terms_) terms.push_back({s.coef * t.coef, s.mono * t.mono});
  }
  return Poly::from_terms(std::move(terms));
}

std::string Poly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : terms_) {
    Rational c = t.coef;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (c < 0) c = -c;
    const bool unit = c == 1 && !t.mono.is_one();
    if (!unit) out += format_rational(c);
    bool need_star = !unit;
    for (const auto& [v, e] : t.mono.factors()) {
      if (need_star) out += "*";
      out += static_cast<std::size_t>(v) < names.size() ? names[v] : "x" + std::to_string(v);
      if (e > 1) out += "^" + std::to_string(e);
      need_star = true;
    }
    first = false;
  }
  return out;
}

bool poly_less(const Poly& a, const Poly& b) {
  const auto& x = a.terms();
  const auto& y = b.terms();
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (!(x[i].mono == y[i].mono)) return grlex_greater(x[i].mono, y[i].mono);
    if (x[i].coef != y[i].coef) return x[i].coef < y[i].coef;
  }
  return x.size() < y.size();
}

Poly determinant(const std::vector<PolyVector>& columns) {
  const std::size_t n = columns.size();
  for (const auto& c : columns) {
    if (c.size() != n) throw Error(ErrorKind::DimensionMismatch, "determinant needs a square matrix");
  }
  if (n == 0) return Poly(1);
  if (n > 20) throw Error(ErrorKind::TooLarge, "determinant larger than 20x20");
  // minor[rows]: determinant of the last popcount(rows) columns on those rows.
  std::map<std::uint64_t, Poly> memo;
  std::function<Poly(std::size_t, std::uint64_t)> rec = [&](std::size_t col, std::uint64_t rows) -> Poly {
    if (col == n) return Poly(1);
    auto it = memo.find(rows);
    if (it != memo.end()) return it->second;
    Poly sum;
    int position = 0;
    for (std::size_t r = 0; r < n; ++r) {
      const std::uint64_t bit = std::uint64_t{1} << r;
      if ((rows & bit) == 0) continue;
      const Poly& entry = columns[col][r];
      if (!entry.is_zero()) {
        Poly sub = rec(col + 1, rows & ~bit);
        if (!sub.is_zero()) {
          Poly term = entry * sub;
          if (position % 2 == 0) {
            sum += term;
          } else {
            sum -= term;
          }
        }
      }
      ++position;
    }
    memo.emplace(rows, sum);
    return sum;
  };
  return rec(0, (std::uint64_t{1} << n) - 1);
}

Rational rational_determinant(const std::vector<std::vector<Rational>>& columns) {
  const std::size_t n = columns.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t j = 0; j < n; ++j) {
    if (columns[j].size() != n) throw Error(ErrorKind::DimensionMismatch, "determinant needs a square matrix");
    for (std::size_t i = 0; i < n; ++i) a[i][j] = columns[j][i];
  }
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot][c] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      std::swap(a[pivot], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

std::vector<Rational> evaluate(const PolyVector& v, const std::vector<Rational>& values) {
  std::vector<Rational> out;
  out.reserve(v.size());
  for (const Poly& p : v) out.push_back(p.evaluate(values));
  return out;
}

}  // namespace matreal
