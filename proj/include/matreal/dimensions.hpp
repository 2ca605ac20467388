#pragma once

#include <cstdint>
#include <optional>

#include "matreal/matroid.hpp"

namespace matreal {

enum class Family { Powerset, Connected, Hypergraph };

std::string_view to_string(Family f);
/// Accepts "powerset", "connected", "hypergraph".
Family parse_family(std::string_view text);

inline constexpr int kDefaultPowersetCap = 14;

struct DimensionReport {
  std::int64_t naive_dim = 0;
  std::optional<std::int64_t> expected_codim;
  std::optional<std::int64_t> expected_dim;
  Family family_used = Family::Powerset;
};

/// nd - sum over subspaces of (|l| - rank l)(n - rank l); may be negative.
std::int64_t naive_dimension(const Matroid& m);
/// nd + (n-1)|L| - sum of degrees; throws NotPaving.
std::int64_t naive_dimension_paving(const Matroid& m);

/// Ford's expected codimension with respect to the chosen family of subsets.
/// `cap` bounds the ground-set size for the families that enumerate subsets.
std::int64_t expected_codim(const Matroid& m, Family family, int cap = kDefaultPowersetCap);
std::int64_t expected_dim(const Matroid& m, int cap = kDefaultPowersetCap);

/// Checks ec(M + N) = ec(M) + ec(N) + n2(d1 - n1) + n1(d2 - n2) exactly.
bool direct_sum_codim_check(const Matroid& m, const Matroid& n, int cap = kDefaultPowersetCap);

DimensionReport dimension_report(const Matroid& m, Family family, int cap = kDefaultPowersetCap);

}  // namespace matreal
