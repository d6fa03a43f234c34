#include "primenf/intersection.hpp"

#include <map>

#include "primenf/errors.hpp"

namespace primenf {

std::vector<PairLabel> kept_pairs(const ConjugacyClass& cls) {
  const auto data = rotation_data(cls);
  std::vector<PairLabel> pairs;
  for (int s = 1; s < cls.p; ++s)
    for (int v = 1; v <= data.multiplicity[static_cast<std::size_t>(s - 1)]; ++v)
      pairs.push_back({s, v});
  if (pairs.size() < 2) return {};
  return {pairs.begin() + 2, pairs.end()};
}

namespace {

struct Bracket {
  int p;
  int qhat;
  int operator()(int v) const { return static_cast<int>(((1LL * qhat * v) % p + p) % p); }
};

Bracket bracket_for(const ConjugacyClass& cls) {
  int shat = 0;
  for (int s = 1; s < cls.p && shat == 0; ++s)
    for (int v : cls.n)
      if (v == s) {
        shat = s;
        break;
      }
  if (shat == 0) throw ValidationError("class has no fixed points");
  return {cls.p, mod_inverse(shat, cls.p)};
}

int pair_value(const Bracket& br, const PairLabel& a, const PairLabel& b, int k) {
  const int r = a.s, s = b.s;
  if (a != b) {
    if (br(k) < br(r) && br(r) <= br(k + s)) return 1;
    if (br(k + s) < br(r) && br(r) <= br(k)) return -1;
    return 0;
  }
  if (br(k) <= br(s) && br(s) < br(k + s)) return 1;
  if (br(k + s) < br(s) && br(s) < br(k)) return -1;
  return 0;
}

}  // namespace

int pair_intersection(const ConjugacyClass& cls, const PairLabel& a, const PairLabel& b,
                      int k) {
  if (b < a) throw ValidationError("pair_intersection needs a <= b");
  return pair_value(bracket_for(cls), a, b, ((k % cls.p) + cls.p) % cls.p);
}

int shifted_pair_intersection(const ConjugacyClass& cls, const PairLabel& a, int j,
                              const PairLabel& b, int k) {
  const int p = cls.p;
  if (a <= b) return pair_intersection(cls, a, b, ((k - j) % p + p) % p);
  return -pair_intersection(cls, b, a, ((j - k) % p + p) % p);
}

IntMatrix pair_block(const ConjugacyClass& cls) {
  const auto pairs = kept_pairs(cls);
  const int p = cls.p;
  const Bracket br = bracket_for(cls);
  const std::size_t n = pairs.size() * static_cast<std::size_t>(p - 1);
  IntMatrix m(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto& a = pairs[x / static_cast<std::size_t>(p - 1)];
    const int j = static_cast<int>(x % static_cast<std::size_t>(p - 1));
    for (std::size_t y = 0; y < n; ++y) {
      const auto& b = pairs[y / static_cast<std::size_t>(p - 1)];
      const int k = static_cast<int>(y % static_cast<std::size_t>(p - 1));
      const int value = a <= b ? pair_value(br, a, b, ((k - j) % p + p) % p)
                               : -pair_value(br, b, a, ((j - k) % p + p) % p);
      m(x, y) = value;
    }
  }
  return m;
}

IntMatrix adapted_intersection(const ConjugacyClass& cls) {
  if (cls.t() == 0) return standard_J(cls.genus, 0);
  const int pg0 = cls.p * cls.g0;
  const IntMatrix b = pair_block(cls);
  IntMatrix m = block_diagonal({standard_J(pg0, 0), b});
  return m;
}

IntMatrix chord_linking(const Word& symbol, const std::vector<Generator>& edges) {
  const std::size_t len = symbol.size();
  std::map<Letter, std::size_t> pos;
  for (std::size_t i = 0; i < len; ++i) {
    if (!pos.emplace(symbol[i], i).second) {
      throw ValidationError("symbol repeats the letter " + format_letter(symbol[i]));
    }
  }
  auto where = [&](const Generator& g, int sign) {
    auto it = pos.find({g, sign});
    if (it == pos.end()) {
      throw ValidationError("edge " + format_generator(g) +
                            " does not occur once with each sign");
    }
    return it->second;
  };
  const std::size_t n = edges.size();
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t from = where(edges[i], 1), to = where(edges[i], -1);
    auto inside = [&](std::size_t x) {
      return from < to ? (from < x && x < to) : (x > from || x < to);
    };
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      m(i, j) = static_cast<int>(inside(where(edges[j], 1))) -
                static_cast<int>(inside(where(edges[j], -1)));
    }
  }
  return m;
}

IntMatrix symbol_intersection(const Word& symbol, const std::vector<Generator>& edges) {
  IntMatrix d = chord_linking(symbol, edges);
  if (!(d + d.transpose()).is_zero()) {
    throw InvariantError("symbol_intersection", "arc counts are not antisymmetric");
  }
  return -unimodular_inverse(d);
}

}  // namespace primenf
