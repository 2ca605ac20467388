#pragma once

#include "matreal/matroid.hpp"
#include "matreal/split.hpp"

namespace fixtures {

using matreal::ElementSet;
using matreal::Matroid;
using matreal::SplitHypergraph;

// Quadrilateral set: rank 3 on six points with four lines.
inline Matroid qs() { return Matroid::paving(6, 3, {{1, 2, 3}, {1, 5, 6}, {3, 4, 5}, {2, 4, 6}}); }

inline SplitHypergraph qs_hypergraph() {
  return {6, 3, {{{1, 2, 3}, 2}, {{1, 5, 6}, 2}, {{3, 4, 5}, 2}, {{2, 4, 6}, 2}}};
}

// Three concurrent lines through point 7.
inline Matroid concurrent_lines() { return Matroid::paving(7, 3, {{1, 2, 7}, {3, 4, 7}, {5, 6, 7}}); }

inline Matroid paving7() {
  return Matroid::paving(7, 4, {{1, 2, 3, 4}, {1, 2, 5, 6}, {3, 4, 5, 6}, {1, 3, 5, 7}, {2, 4, 6, 7}});
}

inline Matroid paving8() {
  return Matroid::paving(8, 4, {{1, 2, 3, 4}, {3, 4, 5, 6}, {5, 6, 7, 8}, {7, 8, 1, 2}, {1, 2, 5, 6}});
}

inline Matroid paving8_blocked() {
  return Matroid::paving(8, 4, {{1, 2, 3, 4}, {3, 4, 5, 6}, {5, 6, 7, 8}, {7, 8, 1, 2}, {1, 2, 5, 6}, {3, 4, 7, 8}});
}

inline SplitHypergraph rank4_12_hypergraph() {
  return {12,
          4,
          {{{1, 2, 3, 4}, 3},
           {{3, 4, 5, 6}, 3},
           {{5, 6, 7, 8}, 3},
           {{7, 8, 9, 10}, 3},
           {{9, 10, 11, 12}, 3},
           {{11, 12, 1, 2}, 3},
           {{1, 5, 9}, 2},
           {{2, 6, 10}, 2},
           {{3, 7, 11}, 2}}};
}
inline Matroid rank4_12() { return matreal::elementary_split_matroid(rank4_12_hypergraph()); }

// First worked realization example: 4-paving on [8].
inline Matroid realization_example1() {
  return Matroid::paving(8, 4, {{1, 2, 3, 4}, {3, 4, 5, 6}, {5, 6, 7, 8}, {1, 3, 5, 7}});
}

// Second worked realization example: rank 6 on [12].
inline SplitHypergraph realization_example2_hypergraph() {
  return {12,
          6,
          {{{1, 2, 3, 4, 5, 6}, 5},
           {{7, 8, 9, 10, 11, 12}, 5},
           {{1, 2, 7, 8}, 3},
           {{3, 4, 9, 10}, 3},
           {{5, 6, 11, 12}, 3}}};
}
inline Matroid realization_example2() { return matreal::elementary_split_matroid(realization_example2_hypergraph()); }

inline SplitHypergraph rank4_6_hypergraph() { return {6, 4, {{{1, 2, 3, 6}, 3}, {{4, 5, 6}, 2}}}; }
inline Matroid rank4_6() { return matreal::elementary_split_matroid(rank4_6_hypergraph()); }

}  // namespace fixtures
