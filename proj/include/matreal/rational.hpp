#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace matreal {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q" or "p"; throws Error(ParseError) on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

/// Canonical "p/q" (or "p" when q == 1).
std::string format_rational(const Rational& q);

/// Rank of the matrix whose columns are given, computed exactly.
int rational_rank(const std::vector<std::vector<Rational>>& columns);

/// Rank of an integer matrix given by columns (fraction-free elimination).
int integer_rank(std::vector<std::vector<Integer>> columns);

/// Scales a rational vector by the lcm of its denominators.
std::vector<Integer> clear_denominators(const std::vector<Rational>& v);

/// Deterministic source of rational sample points.
///
/// Numerator is uniform in [-height, height], denominator in [1, height]; both
/// come from raw mt19937_64 output reduced modulo the range so the sequence is
/// identical across standard libraries for a given seed.
class RationalSampler {
 public:
  RationalSampler(std::uint64_t seed, std::int64_t height);

  Rational next();
  /// Like next() but never returns zero.
  Rational next_nonzero();
  std::vector<Rational> point(std::size_t dimension);

 private:
  std::uint64_t uniform(std::uint64_t bound);

  std::mt19937_64 engine_;
  std::int64_t height_;
};

}  // namespace matreal
