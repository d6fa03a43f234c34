#pragma once

#include <utility>
#include <vector>

#include "primenf/class_data.hpp"
#include "primenf/int_matrix.hpp"
#include "primenf/words.hpp"

namespace primenf {

/// Which lift of the fixed-point loop x_r names Y_r. `base_coset` lifts at
/// the trivial coset and is the labeling the intersection formulas describe.
/// `prefix_coset` lifts at the coset of x_1...x_{r-1}; it yields the
/// unshifted symbol used in hand calculations.
enum class Labeling { base_coset, prefix_coset };

struct Presentation {
  ConjugacyClass cls;
  Labeling labeling = Labeling::base_coset;
  /// A-part, B-part, Y-part (t > 0) or A-part, alpha, B-part, beta (t == 0).
  std::vector<Generator> generators;
  Word relation;
  Word qhat;
  Word lrhat;
  /// Each A/B generator of qhat stands for U g U^{-1} in the raw relation.
  std::vector<std::pair<Generator, Word>> conjugators;
};

/// h^u applied letterwise, powers taken mod p. Alpha/Beta are fixed.
Word shift_word(const Word& w, int u, int p);

/// h^{u_1}(w) h^{u_2}(w) ...
Word power_word(const Word& w, const std::vector<int>& exps, int p);

/// (h^{p-1}(Y_r))^{-1} written in Y_r, ..., h^{p-2}(Y_r); from the rotation
/// relation prod_k h^{k n_r}(Y_r) = 1.
Word inverse_top_power(const ConjugacyClass& cls, int r);

/// Requires a normalized class with t >= 2. Throws InvariantError if the
/// certified invariants fail.
Presentation build_presentation(const ConjugacyClass& cls,
                                Labeling labeling = Labeling::base_coset);

/// The relation before the A/B commutators were moved to the front.
Word raw_relation(const Presentation& pres);

/// h(gen) as a word in live generators.
Word h_image(const Generator& gen, const ConjugacyClass& cls);

/// Row i is the abelianized h-image of generator i.
IntMatrix adapted_action_matrix(const Presentation& pres);

struct T0Presentation {
  Presentation presentation;
  IntMatrix matrix;
};

T0Presentation t0_presentation(const ConjugacyClass& cls);

/// Every edge interleaves with at least one other edge.
bool is_fully_linked(const Word& symbol);

/// Throws InvariantError describing the first failed check.
void certify_presentation(const Presentation& pres);

}  // namespace primenf
