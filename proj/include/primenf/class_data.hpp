#pragma once

#include <compare>
#include <cstddef>
#include <vector>

namespace primenf {

/// Conjugacy class of a prime order mapping class: the order p, the
/// complementary rotation numbers at the t fixed points and the genus of
/// the quotient surface. `genus` is derived and always >= 2 once validated.
struct ConjugacyClass {
  int p = 0;
  std::vector<int> n;
  int g0 = 0;
  int genus = 0;

  int t() const noexcept { return static_cast<int>(n.size()); }

  friend bool operator==(const ConjugacyClass&, const ConjugacyClass&) = default;
  friend auto operator<=>(const ConjugacyClass&, const ConjugacyClass&) = default;
};

/// Per fixed point: n_r, s_r = n_r^{-1} and p_r with p_r * s_r = p - 1 (mod p).
/// `multiplicity[j - 1]` counts the entries equal to j.
struct RotationData {
  std::vector<int> n;
  std::vector<int> s;
  std::vector<int> p_r;
  std::vector<int> multiplicity;
};

struct NormalizedClass {
  ConjugacyClass cls;
  int power = 1;
};

bool is_prime(int value);

/// Inverse of a modulo the prime p, in [1, p - 1].
int mod_inverse(int a, int p);

/// Genus from Riemann-Hurwitz; t == 0 uses 2g = 2p(g0 - 1) + 2.
int genus_of(int p, int t, int g0);

ConjugacyClass validate_class(int p, std::vector<int> n, int g0);

/// Rescales so the smallest entry becomes 1 and sorts. The returned power is
/// the original smallest entry; the class of h is the power-th power of the
/// normalized one. A class with t == 0 is returned unchanged with power 1.
NormalizedClass normalize_class(const ConjugacyClass& cls);

RotationData rotation_data(const ConjugacyClass& cls);

/// All admissible classes of genus g and order p, including the t == 0
/// family, ordered by g0 and then lexicographically by the sorted tuple.
std::vector<ConjugacyClass> enumerate_classes(int g, int p);

}  // namespace primenf
