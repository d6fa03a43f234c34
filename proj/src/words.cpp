#include "primenf/words.hpp"

#include <charconv>
#include <sstream>

#include "primenf/errors.hpp"

namespace primenf {

std::string format_generator(const Generator& g) {
  switch (g.kind) {
    case GenKind::Alpha:
      return "alpha";
    case GenKind::Beta:
      return "beta";
    case GenKind::A:
      return "A:" + std::to_string(g.index) + ":" + std::to_string(g.power);
    case GenKind::B:
      return "B:" + std::to_string(g.index) + ":" + std::to_string(g.power);
    case GenKind::Y:
      return "Y:" + std::to_string(g.index) + ":" + std::to_string(g.power);
  }
  return "?";
}

std::string format_letter(const Letter& l) {
  return format_generator(l.gen) + (l.sign < 0 ? "'" : "");
}

std::vector<std::string> word_tokens(const Word& w) {
  std::vector<std::string> out;
  out.reserve(w.size());
  for (const auto& l : w) out.push_back(format_letter(l));
  return out;
}

std::string format_word(const Word& w) {
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out += ' ';
    out += format_letter(l);
  }
  return out;
}

namespace {

int parse_int(std::string_view s, std::string_view token) {
  int value = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (s.empty() || ec != std::errc() || ptr != end) {
    throw ValidationError("bad number in generator token '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Generator parse_generator(std::string_view token) {
  if (token == "alpha") return {GenKind::Alpha, 1, 0};
  if (token == "beta") return {GenKind::Beta, 1, 0};
  if (token.size() < 5 || token[1] != ':') {
    throw ValidationError("bad generator token '" + std::string(token) + "'");
  }
  Generator g;
  switch (token[0]) {
    case 'A': g.kind = GenKind::A; break;
    case 'B': g.kind = GenKind::B; break;
    case 'Y': g.kind = GenKind::Y; break;
    default:
      throw ValidationError("unknown generator kind in '" + std::string(token) + "'");
  }
  const auto rest = token.substr(2);
  const auto colon = rest.find(':');
  if (colon == std::string_view::npos) {
    throw ValidationError("generator token '" + std::string(token) + "' needs two fields");
  }
  g.index = parse_int(rest.substr(0, colon), token);
  g.power = parse_int(rest.substr(colon + 1), token);
  if (g.index < 1 || g.power < 0) {
    throw ValidationError("generator token '" + std::string(token) + "' out of range");
  }
  return g;
}

Letter parse_letter(std::string_view token) {
  if (!token.empty() && token.back() == '\'') {
    return {parse_generator(token.substr(0, token.size() - 1)), -1};
  }
  return {parse_generator(token), 1};
}

Word parse_word(std::string_view text) {
  Word w;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) w.push_back(parse_letter(token));
  return w;
}

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word commutator(const Word& a, const Word& b) {
  Word out = concat(a, b);
  const Word ai = inverse(a), bi = inverse(b);
  out.insert(out.end(), ai.begin(), ai.end());
  out.insert(out.end(), bi.begin(), bi.end());
  return out;
}

Word conjugate_word(const Word& w, const Word& u) {
  return concat(concat(u, w), inverse(u));
}

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const auto& l : w) {
    if (!out.empty() && out.back() == l.inverse()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word cyclic_reduce(const Word& w) {
  Word out = free_reduce(w);
  std::size_t lo = 0, hi = out.size();
  while (hi - lo >= 2 && out[lo] == out[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  return Word(out.begin() + static_cast<std::ptrdiff_t>(lo),
              out.begin() + static_cast<std::ptrdiff_t>(hi));
}

bool has_cancellation(const Word& w, bool cyclic) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] == w[i + 1].inverse()) return true;
  }
  return cyclic && w.size() >= 2 && w.back() == w.front().inverse();
}

std::map<Generator, std::size_t> index_of(const std::vector<Generator>& basis) {
  std::map<Generator, std::size_t> idx;
  for (std::size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i], i);
  return idx;
}

std::vector<long long> abelianize(const Word& w, const std::vector<Generator>& basis) {
  const auto idx = index_of(basis);
  std::vector<long long> v(basis.size(), 0);
  for (const auto& l : w) {
    auto it = idx.find(l.gen);
    if (it == idx.end()) {
      throw ValidationError("letter " + format_letter(l) + " is not in the basis");
    }
    v[it->second] += l.sign;
  }
  return v;
}

bool is_cyclic_rotation(const Word& a, const Word& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  const std::size_t n = a.size();
  for (std::size_t shift = 0; shift < n; ++shift) {
    bool same = true;
    for (std::size_t i = 0; i < n && same; ++i) same = a[(i + shift) % n] == b[i];
    if (same) return true;
  }
  return false;
}

bool is_evenly_worded(const Word& w) {
  std::map<Generator, std::pair<int, int>> seen;
  for (const auto& l : w) {
    auto& [pos, neg] = seen[l.gen];
    (l.sign > 0 ? pos : neg) += 1;
  }
  for (const auto& [g, c] : seen) {
    if (c.first != 1 || c.second != 1) return false;
  }
  return true;
}

}  // namespace primenf
