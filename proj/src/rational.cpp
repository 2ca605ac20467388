#include "matreal/rational.hpp"

#include <utility>

#include "matreal/error.hpp"

namespace matreal {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::AxiomViolation: return "AxiomViolation";
    case ErrorKind::EmptyGroundSet: return "EmptyGroundSet";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::NonIndependentContraction: return "NonIndependentContraction";
    case ErrorKind::InvalidHypergraph: return "InvalidHypergraph";
    case ErrorKind::NotPaving: return "NotPaving";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::FamilyUnavailable: return "FamilyUnavailable";
    case ErrorKind::InvalidOrdering: return "InvalidOrdering";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::StepOverflow: return "StepOverflow";
    case ErrorKind::StepNotOne: return "StepNotOne";
    case ErrorKind::DegreeTooHigh: return "DegreeTooHigh";
    case ErrorKind::SymbolicDegeneracy: return "SymbolicDegeneracy";
    case ErrorKind::RetryExhausted: return "RetryExhausted";
    case ErrorKind::NotInductivelyConnected: return "NotInductivelyConnected";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0) {
    throw Error(ErrorKind::ParseError, "malformed rational '" + text + "'");
  }
  if (q.get_den() == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) { return q.get_str(10); }

std::vector<Integer> clear_denominators(const std::vector<Rational>& v) {
  Integer lcm = 1;
  for (const Rational& x : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(v.size());
  for (const Rational& x : v) out.push_back(x.get_num() * (lcm / x.get_den()));
  return out;
}

int rational_rank(const std::vector<std::vector<Rational>>& columns) {
  std::vector<std::vector<Integer>> ints;
  ints.reserve(columns.size());
  for (const auto& c : columns) ints.push_back(clear_denominators(c));
  return integer_rank(std::move(ints));
}

int integer_rank(std::vector<std::vector<Integer>> columns) {
  if (columns.empty()) return 0;
  const std::size_t rows = columns.front().size();
  const std::size_t cols = columns.size();
  // Row-major copy; Bareiss elimination keeps every entry an integer minor.
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t i = 0; i < rows; ++i) a[i][j] = std::move(columns[j][i]);
  }
  int rank = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t r = rank; r < rows; ++r) {
      if (a[r][c] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        a[r][k] = (a[rank][c] * a[r][k] - a[r][c] * a[rank][k]) / prev;
      }
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

RationalSampler::RationalSampler(std::uint64_t seed, std::int64_t height)
    : engine_(seed), height_(height < 1 ? 1 : height) {}

std::uint64_t RationalSampler::uniform(std::uint64_t bound) { return engine_() % bound; }

Rational RationalSampler::next() {
  const auto span = static_cast<std::uint64_t>(2 * height_ + 1);
  const std::int64_t num = static_cast<std::int64_t>(uniform(span)) - height_;
  const std::int64_t den = static_cast<std::int64_t>(uniform(static_cast<std::uint64_t>(height_))) + 1;
  Rational q{Integer(static_cast<long>(num)), Integer(static_cast<long>(den))};
  q.canonicalize();
  return q;
}

Rational RationalSampler::next_nonzero() {
  while (true) {
    Rational q = next();
    if (q != 0) return q;
  }
}

std::vector<Rational> RationalSampler::point(std::size_t dimension) {
  std::vector<Rational> p;
  p.reserve(dimension);
  for (std::size_t i = 0; i < dimension; ++i) p.push_back(next());
  return p;
}

}  // namespace matreal
