#pragma once

#include <optional>
#include <string>
#include <vector>

#include "primenf/class_data.hpp"
#include "primenf/int_matrix.hpp"
#include "primenf/presentation.hpp"
#include "primenf/symbol_reduction.hpp"
#include "primenf/words.hpp"

namespace primenf {

struct NormalFormResult {
  ConjugacyClass input;
  ConjugacyClass normalized;
  /// The normalized class's matrix is raised to this power.
  int power = 1;
  /// Row convention, layout of J.
  IntMatrix matrix;
  IntMatrix J;
  /// Action matrix on the adapted basis (normalized class, before the power).
  IntMatrix adapted;
  /// Columns: final basis in adapted coordinates.
  IntMatrix V;
  Presentation presentation;
  /// qhat followed by the commutators [M_i, N_i].
  Word relation;
  /// Final basis elements as words in the adapted generators.
  std::vector<Word> basis;
  std::vector<StepRecord> steps;
  int order = 0;
  Integer trace;
  bool symplectic = false;
};

NormalFormResult normal_form(int p, const std::vector<int>& n, int g0);
NormalFormResult normal_form(const ConjugacyClass& cls);

enum class Verdict { impossible, necessary_conditions_met, matches_normal_form_invariants };

std::string to_string(Verdict v);

struct CandidateVerdict {
  int genus = 0;
  int order = 0;
  Integer trace;
  /// 2 - trace when that is a possible fixed-point count.
  std::optional<int> t;
  std::vector<Integer> characteristic_polynomial;
  std::vector<ConjugacyClass> admissible;
  /// Admissible classes whose normal form has the same characteristic polynomial.
  std::vector<ConjugacyClass> charpoly_matches;
  /// Admissible classes whose normal form (and J) equal the input exactly.
  std::vector<ConjugacyClass> exact_matches;
  Verdict verdict = Verdict::impossible;
  std::string reason;
};

/// Throws ValidationError unless m is symplectic for j and has prime order
/// within 4g^2.
CandidateVerdict candidate_check(const IntMatrix& m, const IntMatrix& j);

}  // namespace primenf
