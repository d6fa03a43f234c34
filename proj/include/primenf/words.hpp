#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace primenf {

enum class GenKind : std::uint8_t { A, B, Y, Alpha, Beta };

/// h^power applied to A_index, B_index or Y_index; Alpha/Beta are the
/// h-fixed generators of the fixed-point-free case.
struct Generator {
  GenKind kind = GenKind::Y;
  int index = 0;
  int power = 0;

  friend auto operator<=>(const Generator&, const Generator&) = default;
  friend bool operator==(const Generator&, const Generator&) = default;
};

struct Letter {
  Generator gen;
  int sign = 1;

  Letter inverse() const { return {gen, -sign}; }
  friend auto operator<=>(const Letter&, const Letter&) = default;
  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// Grammar: `Y:r:v`, `A:i:v`, `B:i:v`, `alpha`, `beta`; a trailing `'`
/// inverts. Words are whitespace-separated.
std::string format_generator(const Generator& g);
std::string format_letter(const Letter& l);
std::string format_word(const Word& w);
std::vector<std::string> word_tokens(const Word& w);

Generator parse_generator(std::string_view token);
Letter parse_letter(std::string_view token);
Word parse_word(std::string_view text);

Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
Word commutator(const Word& a, const Word& b);
/// u * w * u^{-1}
Word conjugate_word(const Word& w, const Word& u);

Word free_reduce(const Word& w);
/// Free reduction including the cyclic seam.
Word cyclic_reduce(const Word& w);
bool has_cancellation(const Word& w, bool cyclic);

/// Signed occurrence counts of the basis generators. Throws if a letter is
/// not in the basis.
std::vector<long long> abelianize(const Word& w, const std::vector<Generator>& basis);

bool is_cyclic_rotation(const Word& a, const Word& b);

/// True when every generator occurs exactly once with each sign.
bool is_evenly_worded(const Word& w);

/// Index lookup for a generator list.
std::map<Generator, std::size_t> index_of(const std::vector<Generator>& basis);

}  // namespace primenf
