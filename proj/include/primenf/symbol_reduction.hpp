#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "primenf/int_matrix.hpp"
#include "primenf/words.hpp"

namespace primenf {

/// P = a W1 b W2 a^{-1} W3 b^{-1} W4 with a the leftmost letter and b the
/// first letter after it whose inverse lies past a^{-1}.
struct LinkSplit {
  Letter a;
  Letter b;
  Word w1, w2, w3, w4;
};

/// Cyclic free reduction; throws ValidationError if nothing is left.
Word free_reduce_symbol(const Word& symbol);

/// Throws ValidationError when the leftmost letter has no linked partner.
LinkSplit find_link(const Word& symbol);

struct StepRecord {
  Letter a;
  Letter b;
  std::array<std::size_t, 4> w_lengths{};
  bool shortcut = false;
  Word m_word;
  Word n_word;
  std::size_t a_slot = 0;
  std::size_t b_slot = 0;
  /// Columns a_slot and b_slot of the step's basis change.
  std::vector<long long> m_column;
  std::vector<long long> n_column;
  int changed_columns = 0;
  int det = 1;
};

struct ReductionState {
  std::vector<Generator> edges;
  Word P;
  Word Q;
  /// Action matrix in the current basis, row convention.
  IntMatrix M;
  /// Columns: current basis in edge coordinates.
  IntMatrix U;
  IntMatrix U_inv;
  /// Current basis element at each slot, as a word in the edges.
  std::vector<Word> basis;
  std::vector<std::pair<Word, Word>> pairs;
  std::vector<std::size_t> a_slots;
  std::vector<std::size_t> b_slots;
  std::vector<StepRecord> steps;
};

ReductionState start_reduction(const Word& qhat, const IntMatrix& m0, const Word& lrhat,
                               const std::vector<Generator>& edges);

/// One commutator is split off P. Throws InvariantError if P admits a free
/// reduction or the basis change is not unimodular.
void link_step(ReductionState& state);

struct TightenResult {
  Word Q;
  /// Row convention, basis (M_1..M_q | N_1..N_q).
  IntMatrix M_CAN;
  /// Columns: final basis in edge coordinates.
  IntMatrix V;
  std::vector<Word> basis;
  std::vector<std::pair<Word, Word>> pairs;
  std::vector<StepRecord> steps;
};

TightenResult tighten(const Word& qhat, const IntMatrix& m0, const Word& lrhat,
                      const std::vector<Generator>& edges);

}  // namespace primenf
