#include "primenf/normal_form.hpp"

#include <algorithm>

#include "primenf/errors.hpp"
#include "primenf/intersection.hpp"

namespace primenf {

namespace {

IntMatrix sub_block(const IntMatrix& m, std::size_t from, std::size_t to) {
  IntMatrix out(to - from, to - from);
  for (std::size_t i = from; i < to; ++i)
    for (std::size_t j = from; j < to; ++j) out(i - from, j - from) = m(i, j);
  return out;
}

std::string describe(const ConjugacyClass& cls) {
  std::string s = "p=" + std::to_string(cls.p) + " n=(";
  for (std::size_t i = 0; i < cls.n.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(cls.n[i]);
  }
  return s + ") g0=" + std::to_string(cls.g0);
}

void certify_result(NormalFormResult& r) {
  const auto& cls = r.normalized;
  auto fail = [&](const std::string& what) {
    throw InvariantError("normal-form", what + " for " + describe(r.input) + "\n" +
                                            r.matrix.to_string());
  };
  const auto order = matrix_order(r.matrix, cls.p);
  if (!order || *order != cls.p) fail("matrix order is not p");
  r.order = *order;
  r.trace = r.matrix.trace();
  if (r.trace != 2 - cls.t()) fail("trace is not 2 - t");
  r.symplectic = is_symplectic(r.matrix, r.J);
  if (!r.symplectic) fail("matrix is not symplectic");
}

}  // namespace

NormalFormResult normal_form(int p, const std::vector<int>& n, int g0) {
  return normal_form(validate_class(p, n, g0));
}

NormalFormResult normal_form(const ConjugacyClass& input) {
  const ConjugacyClass cls = validate_class(input.p, input.n, input.g0);
  const auto norm = normalize_class(cls);
  NormalFormResult r;
  r.input = cls;
  r.normalized = norm.cls;
  r.power = norm.power;
  const int p = cls.p;
  const std::size_t two_g = 2 * static_cast<std::size_t>(cls.genus);

  if (cls.t() == 0) {
    auto t0 = t0_presentation(cls);
    r.presentation = std::move(t0.presentation);
    r.adapted = t0.matrix;
    r.matrix = t0.matrix;
    r.J = standard_J(cls.genus, 0);
    r.V = IntMatrix::identity(two_g);
    r.relation = r.presentation.relation;
    for (const auto& g : r.presentation.generators) r.basis.push_back({{g, 1}});
    certify_result(r);
    return r;
  }

  r.presentation = build_presentation(norm.cls);
  const auto& pres = r.presentation;
  r.adapted = adapted_action_matrix(pres);
  if (!(r.adapted == adapted_block_matrix(norm.cls))) {
    throw InvariantError("presentation", "action matrix differs from the block form for " +
                                             describe(cls));
  }

  const std::size_t ab = 2 * static_cast<std::size_t>(p * cls.g0);
  const std::vector<Generator> edges(pres.generators.begin() + static_cast<std::ptrdiff_t>(ab),
                                     pres.generators.end());
  const int q = static_cast<int>(edges.size() / 2);
  r.J = standard_J(p * cls.g0, q);
  for (std::size_t i = 0; i < ab; ++i) r.basis.push_back({{pres.generators[i], 1}});

  if (edges.empty()) {
    r.matrix = r.adapted;
    r.V = IntMatrix::identity(two_g);
    r.relation = pres.relation;
  } else {
    auto tight = tighten(pres.qhat, sub_block(r.adapted, ab, two_g), pres.lrhat, edges);
    r.matrix = block_diagonal({sub_block(r.adapted, 0, ab), tight.M_CAN});
    r.V = block_diagonal({IntMatrix::identity(ab), tight.V});
    r.relation = std::move(tight.Q);
    for (auto& w : tight.basis) r.basis.push_back(std::move(w));
    r.steps = std::move(tight.steps);
  }

  if (!(r.V.transpose() * adapted_intersection(norm.cls) * r.V == r.J)) {
    throw InvariantError("symbol-reduction",
                         "final basis does not carry the intersection form to J for " +
                             describe(cls));
  }
  if (r.power != 1) r.matrix = r.matrix.pow(static_cast<unsigned>(r.power));
  certify_result(r);
  return r;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::impossible:
      return "impossible";
    case Verdict::necessary_conditions_met:
      return "necessary-conditions-met";
    case Verdict::matches_normal_form_invariants:
      return "matches-normal-form-invariants";
  }
  return "unknown";
}

CandidateVerdict candidate_check(const IntMatrix& m, const IntMatrix& j) {
  if (!m.is_square() || !j.is_square() || m.rows() != j.rows()) {
    throw ValidationError("matrix and form must be square of equal size");
  }
  if (m.rows() == 0 || m.rows() % 2 != 0) {
    throw ValidationError("matrix size must be even and positive");
  }
  if (!(j + j.transpose()).is_zero() || determinant(j) != 1) {
    throw ValidationError("J is not a unimodular alternating form");
  }
  if (!is_symplectic(m, j)) throw ValidationError("matrix is not symplectic for J");

  CandidateVerdict out;
  out.genus = static_cast<int>(m.rows() / 2);
  const int g = out.genus;
  const auto order = matrix_order(m, 4 * g * g);
  if (!order) {
    throw ValidationError("matrix has no finite order up to " + std::to_string(4 * g * g));
  }
  if (!is_prime(*order)) {
    throw ValidationError("matrix order " + std::to_string(*order) + " is not prime");
  }
  out.order = *order;
  out.trace = m.trace();
  out.characteristic_polynomial = characteristic_polynomial(m);

  if (out.trace > 2 || out.trace < -2 * g) {
    out.reason = "trace outside [-2g, 2]";
    return out;
  }
  out.t = 2 - static_cast<int>(out.trace.get_si());
  for (const auto& cls : enumerate_classes(g, out.order)) {
    if (cls.t() == *out.t) out.admissible.push_back(cls);
  }
  if (out.admissible.empty()) {
    out.reason = "no admissible class with this genus, order and fixed-point count";
    return out;
  }
  for (const auto& cls : out.admissible) {
    const auto nf = normal_form(cls);
    if (characteristic_polynomial(nf.matrix) == out.characteristic_polynomial) {
      out.charpoly_matches.push_back(cls);
    }
    if (nf.matrix == m && nf.J == j) out.exact_matches.push_back(cls);
  }
  if (!out.exact_matches.empty()) {
    out.verdict = Verdict::matches_normal_form_invariants;
    out.reason = "equal to the normal form of an admissible class";
  } else {
    out.verdict = Verdict::necessary_conditions_met;
    out.reason = "order and trace admit a prime-order class";
  }
  return out;
}

}  // namespace primenf
