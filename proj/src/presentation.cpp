#include "primenf/presentation.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "primenf/errors.hpp"

namespace primenf {

Word shift_word(const Word& w, int u, int p) {
  Word out = w;
  for (auto& l : out) {
    if (l.gen.kind == GenKind::Alpha || l.gen.kind == GenKind::Beta) continue;
    l.gen.power = ((l.gen.power + u) % p + p) % p;
  }
  return out;
}

Word power_word(const Word& w, const std::vector<int>& exps, int p) {
  Word out;
  for (int u : exps) {
    const Word part = shift_word(w, u, p);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

Word inverse_top_power(const ConjugacyClass& cls, int r) {
  const int p = cls.p;
  const int nr = cls.n.at(static_cast<std::size_t>(r - 1));
  // Rotating prod_k h^{k n_r}(Y_r) to start just after h^{p-1}(Y_r).
  Word out;
  for (int k = 1; k < p; ++k) {
    out.push_back({{GenKind::Y, r, (p - 1 + k * nr) % p}, 1});
  }
  return out;
}

namespace {

void require_normalized(const ConjugacyClass& cls) {
  if (cls.t() < 2) throw ValidationError("presentation needs t >= 2");
  if (cls.n.front() != 1 || !std::is_sorted(cls.n.begin(), cls.n.end())) {
    throw ValidationError("presentation needs a normalized class (sorted, n1 = 1)");
  }
}

std::vector<int> coset_shifts(const ConjugacyClass& cls, Labeling labeling) {
  std::vector<int> e(static_cast<std::size_t>(cls.t()) + 1, 0);
  if (labeling == Labeling::prefix_coset) return e;
  int c = 0;
  for (int j = 1; j <= cls.t(); ++j) {
    e[static_cast<std::size_t>(j)] = c;
    c = (c + cls.n[static_cast<std::size_t>(j - 1)]) % cls.p;
  }
  return e;
}

// prod_{j = t..3} (h^{u + e_j}(Y_j))^{-1}, top powers expanded.
Word z_word(const ConjugacyClass& cls, const std::vector<int>& e, int u) {
  Word out;
  for (int j = cls.t(); j >= 3; --j) {
    const int w = (u + e[static_cast<std::size_t>(j)]) % cls.p;
    if (w == cls.p - 1) {
      const Word top = inverse_top_power(cls, j);
      out.insert(out.end(), top.begin(), top.end());
    } else {
      out.push_back({{GenKind::Y, j, w}, -1});
    }
  }
  return out;
}

// h^u of prod_{i = g0..1} [A_i, B_i].
Word c_word(int g0, int u) {
  Word out;
  for (int i = g0; i >= 1; --i) {
    const Word part = commutator({{{GenKind::A, i, u}, 1}}, {{{GenKind::B, i, u}, 1}});
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<int> relation_exponents(const ConjugacyClass& cls) {
  std::vector<int> u;
  for (int k = 0; k < cls.p; ++k) u.push_back((k * cls.n[1]) % cls.p);
  return u;
}

std::string describe(const Presentation& pres) {
  std::string s = "p=" + std::to_string(pres.cls.p) + " n=(";
  for (std::size_t i = 0; i < pres.cls.n.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(pres.cls.n[i]);
  }
  return s + ") g0=" + std::to_string(pres.cls.g0);
}

}  // namespace

Presentation build_presentation(const ConjugacyClass& cls, Labeling labeling) {
  require_normalized(cls);
  const int p = cls.p;
  Presentation pres;
  pres.cls = cls;
  pres.labeling = labeling;

  for (GenKind kind : {GenKind::A, GenKind::B})
    for (int i = 1; i <= cls.g0; ++i)
      for (int v = 0; v < p; ++v) pres.generators.push_back({kind, i, v});
  for (int r = 3; r <= cls.t(); ++r)
    for (int v = 0; v <= p - 2; ++v) pres.generators.push_back({GenKind::Y, r, v});

  const auto e = coset_shifts(cls, labeling);
  Word prefix;
  for (int u : relation_exponents(cls)) {
    const Word c = c_word(cls.g0, u);
    pres.qhat.insert(pres.qhat.end(), c.begin(), c.end());
    for (int i = cls.g0; i >= 1; --i) {
      pres.conjugators.push_back({{GenKind::A, i, u}, prefix});
      pres.conjugators.push_back({{GenKind::B, i, u}, prefix});
    }
    const Word z = z_word(cls, e, u);
    prefix.insert(prefix.end(), z.begin(), z.end());
  }
  pres.lrhat = prefix;
  pres.relation = concat(pres.qhat, pres.lrhat);

  certify_presentation(pres);

  // The moved commutators must still spell the raw relation.
  std::map<Generator, Word> conj(pres.conjugators.begin(), pres.conjugators.end());
  Word expanded;
  for (const auto& l : pres.qhat) {
    const Word part = conjugate_word({l}, conj.at(l.gen));
    expanded.insert(expanded.end(), part.begin(), part.end());
  }
  expanded.insert(expanded.end(), pres.lrhat.begin(), pres.lrhat.end());
  if (free_reduce(expanded) != free_reduce(raw_relation(pres))) {
    throw InvariantError("presentation",
                         "conjugated commutators do not reproduce the relation for " +
                             describe(pres));
  }
  return pres;
}

Word raw_relation(const Presentation& pres) {
  const auto& cls = pres.cls;
  if (cls.t() == 0) return pres.relation;
  const auto e = coset_shifts(cls, pres.labeling);
  Word out;
  for (int u : relation_exponents(cls)) {
    const Word c = c_word(cls.g0, u);
    const Word z = z_word(cls, e, u);
    out.insert(out.end(), c.begin(), c.end());
    out.insert(out.end(), z.begin(), z.end());
  }
  return out;
}

Word h_image(const Generator& gen, const ConjugacyClass& cls) {
  const int p = cls.p;
  switch (gen.kind) {
    case GenKind::Alpha:
    case GenKind::Beta:
      return {{gen, 1}};
    case GenKind::A:
    case GenKind::B:
      return {{{gen.kind, gen.index, (gen.power + 1) % p}, 1}};
    case GenKind::Y:
      if (gen.power < p - 2) return {{{GenKind::Y, gen.index, gen.power + 1}, 1}};
      return inverse(inverse_top_power(cls, gen.index));
  }
  return {};
}

IntMatrix adapted_action_matrix(const Presentation& pres) {
  const std::size_t n = pres.generators.size();
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = abelianize(h_image(pres.generators[i], pres.cls), pres.generators);
    for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<long>(row[j]);
  }
  return m;
}

T0Presentation t0_presentation(const ConjugacyClass& cls) {
  if (cls.t() != 0) throw ValidationError("t0_presentation needs t = 0");
  if (cls.g0 < 2) throw ValidationError("t = 0 needs g0 >= 2");
  const int p = cls.p;
  Presentation pres;
  pres.cls = cls;
  for (GenKind kind : {GenKind::A, GenKind::B}) {
    for (int j = 2; j <= cls.g0; ++j)
      for (int v = 0; v < p; ++v) pres.generators.push_back({kind, j, v});
    pres.generators.push_back({kind == GenKind::A ? GenKind::Alpha : GenKind::Beta, 1, 0});
  }
  pres.qhat = commutator({{{GenKind::Alpha, 1, 0}, 1}}, {{{GenKind::Beta, 1, 0}, 1}});
  Word base;
  for (int j = 2; j <= cls.g0; ++j) {
    const Word c = commutator({{{GenKind::A, j, 0}, 1}}, {{{GenKind::B, j, 0}, 1}});
    base.insert(base.end(), c.begin(), c.end());
  }
  for (int k = 0; k < p; ++k) {
    const Word part = shift_word(base, k, p);
    pres.qhat.insert(pres.qhat.end(), part.begin(), part.end());
  }
  pres.relation = pres.qhat;
  certify_presentation(pres);

  T0Presentation out{pres, adapted_action_matrix(pres)};
  if (!(out.matrix == adapted_block_matrix(cls))) {
    throw InvariantError("t0_presentation", "action matrix is not in block form");
  }
  return out;
}

bool is_fully_linked(const Word& symbol) {
  std::map<Generator, std::pair<std::size_t, std::size_t>> pos;
  for (std::size_t i = 0; i < symbol.size(); ++i) {
    auto& slot = pos[symbol[i].gen];
    (symbol[i].sign > 0 ? slot.first : slot.second) = i;
  }
  auto inside = [](std::size_t from, std::size_t to, std::size_t x) {
    return from < to ? (from < x && x < to) : (x > from || x < to);
  };
  for (const auto& [x, px] : pos) {
    bool linked = false;
    for (const auto& [y, py] : pos) {
      if (x == y) continue;
      if (inside(px.first, px.second, py.first) != inside(px.first, px.second, py.second)) {
        linked = true;
        break;
      }
    }
    if (!linked) return false;
  }
  return true;
}

void certify_presentation(const Presentation& pres) {
  const auto& cls = pres.cls;
  auto fail = [&](const std::string& what) {
    throw InvariantError("presentation", what + " for " + describe(pres));
  };
  const auto g = static_cast<std::size_t>(cls.genus);
  if (pres.generators.size() != 2 * g) fail("generator count is not 2g");
  if (pres.relation.size() != 4 * g) fail("relation length is not 4g");
  if (pres.relation != concat(pres.qhat, pres.lrhat)) fail("relation is not qhat.lrhat");
  if (!is_evenly_worded(pres.relation)) fail("relation is not evenly worded");
  const auto ab = abelianize(pres.relation, pres.generators);
  if (std::any_of(ab.begin(), ab.end(), [](long long v) { return v != 0; })) {
    fail("relation has non-zero abelianization");
  }
  if (!pres.lrhat.empty() && !is_fully_linked(pres.lrhat)) fail("lrhat is not fully linked");
}

}  // namespace primenf
