#include "primenf/class_data.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "primenf/errors.hpp"

namespace primenf {

bool is_prime(int value) {
  if (value < 2) return false;
  for (int d = 2; d * d <= value; ++d) {
    if (value % d == 0) return false;
  }
  return true;
}

int mod_inverse(int a, int p) {
  if (p < 2) throw ValidationError("modulus must be at least 2");
  int r = ((a % p) + p) % p;
  if (r == 0) {
    throw ValidationError("no inverse of " + std::to_string(a) + " modulo " +
                          std::to_string(p));
  }
  // Extended Euclid on (r, p).
  long long old_r = r, cur_r = p, old_s = 1, cur_s = 0;
  while (cur_r != 0) {
    const long long q = old_r / cur_r;
    old_r = std::exchange(cur_r, old_r - q * cur_r);
    old_s = std::exchange(cur_s, old_s - q * cur_s);
  }
  if (old_r != 1) {
    throw ValidationError(std::to_string(a) + " is not invertible modulo " +
                          std::to_string(p));
  }
  return static_cast<int>(((old_s % p) + p) % p);
}

int genus_of(int p, int t, int g0) {
  if (t < 0 || g0 < 0) throw ValidationError("t and g0 must be non-negative");
  long long twice;
  if (t == 0) {
    if (g0 < 2) throw ValidationError("t = 0 requires g0 >= 2");
    twice = 2LL * p * (g0 - 1) + 2;
  } else {
    twice = 2LL * p * g0 + static_cast<long long>(p - 1) * (t - 2);
  }
  if (twice % 2 != 0) {
    throw ValidationError("Riemann-Hurwitz gives an odd value for 2g");
  }
  if (twice / 2 < 2) {
    throw ValidationError("derived genus " + std::to_string(twice / 2) +
                          " is below 2");
  }
  return static_cast<int>(twice / 2);
}

ConjugacyClass validate_class(int p, std::vector<int> n, int g0) {
  if (!is_prime(p)) throw ValidationError(std::to_string(p) + " is not prime");
  if (g0 < 0) throw ValidationError("g0 must be non-negative");
  if (n.size() == 1) {
    throw ValidationError(
        "t = 1 is impossible: a single non-zero residue cannot sum to 0");
  }
  for (int v : n) {
    if (v < 1 || v > p - 1) {
      throw ValidationError("rotation number " + std::to_string(v) +
                            " is outside [1, p - 1]");
    }
  }
  const long long sum = std::accumulate(n.begin(), n.end(), 0LL);
  if (sum % p != 0) {
    throw ValidationError("sum of rotation numbers is " +
                          std::to_string(sum % p) + " mod " +
                          std::to_string(p) + ", expected 0");
  }
  const int t = static_cast<int>(n.size());
  const int g = genus_of(p, t, g0);
  return ConjugacyClass{p, std::move(n), g0, g};
}

NormalizedClass normalize_class(const ConjugacyClass& cls) {
  if (cls.n.empty()) return {cls, 1};
  std::vector<int> sorted = cls.n;
  std::sort(sorted.begin(), sorted.end());
  const int power = sorted.front();
  const int scale = mod_inverse(power, cls.p);
  for (int& v : sorted) v = static_cast<int>((1LL * v * scale) % cls.p);
  std::sort(sorted.begin(), sorted.end());
  ConjugacyClass out = cls;
  out.n = std::move(sorted);
  return {std::move(out), power};
}

RotationData rotation_data(const ConjugacyClass& cls) {
  RotationData data;
  data.multiplicity.assign(static_cast<std::size_t>(cls.p - 1), 0);
  for (int v : cls.n) {
    const int s = mod_inverse(v, cls.p);
    data.n.push_back(v);
    data.s.push_back(s);
    data.p_r.push_back(static_cast<int>((1LL * (cls.p - 1) * v) % cls.p));
    ++data.multiplicity[static_cast<std::size_t>(v - 1)];
  }
  return data;
}

namespace {

// Non-decreasing tuples of length t over [1, p - 1] with sum = 0 (mod p),
// emitted in lexicographic order.
void emit_tuples(int p, int t, std::vector<int>& prefix, int sum,
                 std::vector<std::vector<int>>& out) {
  if (static_cast<int>(prefix.size()) == t) {
    if (sum % p == 0) out.push_back(prefix);
    return;
  }
  const int start = prefix.empty() ? 1 : prefix.back();
  for (int v = start; v <= p - 1; ++v) {
    prefix.push_back(v);
    emit_tuples(p, t, prefix, sum + v, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<ConjugacyClass> enumerate_classes(int g, int p) {
  std::vector<ConjugacyClass> out;
  if (g < 2 || !is_prime(p)) return out;
  for (int g0 = 0; g0 <= g; ++g0) {
    // t == 0 family: 2g = 2p(g0 - 1) + 2.
    if (g0 >= 2 && p * (g0 - 1) + 1 == g) {
      out.push_back(ConjugacyClass{p, {}, g0, g});
    }
    if (p * g0 > g) continue;
    const int rest = 2 * g - 2 * p * g0;
    if (rest % (p - 1) != 0) continue;
    const int t = rest / (p - 1) + 2;
    if (t < 2) continue;
    std::vector<std::vector<int>> tuples;
    std::vector<int> prefix;
    emit_tuples(p, t, prefix, 0, tuples);
    for (auto& tuple : tuples) {
      out.push_back(ConjugacyClass{p, std::move(tuple), g0, g});
    }
  }
  return out;
}

}  // namespace primenf
