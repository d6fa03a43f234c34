#pragma once

#include <compare>
#include <vector>

#include "primenf/class_data.hpp"
#include "primenf/int_matrix.hpp"
#include "primenf/words.hpp"

namespace primenf {

/// The v-th fixed point among those with n_i = s. Ordered lexicographically.
struct PairLabel {
  int s = 1;
  int v = 1;

  friend auto operator<=>(const PairLabel&, const PairLabel&) = default;
  friend bool operator==(const PairLabel&, const PairLabel&) = default;
};

/// All pairs except the two smallest; length t - 2.
std::vector<PairLabel> kept_pairs(const ConjugacyClass& cls);

/// h^0(X_a) x h^k(X_b) for a <= b.
int pair_intersection(const ConjugacyClass& cls, const PairLabel& a, const PairLabel& b,
                      int k);

/// h^j(X_a) x h^k(X_b) for any order of a and b.
int shifted_pair_intersection(const ConjugacyClass& cls, const PairLabel& a, int j,
                              const PairLabel& b, int k);

/// The 2q x 2q block over the kept pairs, pair-major, k = 0..p-2.
IntMatrix pair_block(const ConjugacyClass& cls);

/// [[0, I, 0], [-I, 0, 0], [0, 0, B]] in the A | B | Y layout.
IntMatrix adapted_intersection(const ConjugacyClass& cls);

/// Arc count for a one-vertex symbol: entry (x, y) is s(y+) - s(y-) where
/// s marks occurrences strictly inside the forward arc from x+ to x-.
/// This pairs the curves dual to the edges.
IntMatrix chord_linking(const Word& symbol, const std::vector<Generator>& edges);

/// Pairing of the edge loops themselves: -(chord_linking)^{-1}.
IntMatrix symbol_intersection(const Word& symbol, const std::vector<Generator>& edges);

}  // namespace primenf
