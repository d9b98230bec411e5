#pragma once

#include <string>
#include <vector>

#include "gprx/permutation.hpp"

namespace gprx {

/// One letter of a generator word: generator index (1-based) and exponent +-1.
struct Letter {
  int index;
  int exponent;  // +1 or -1
  bool operator==(const Letter&) const = default;
};

/// A word in abstract generators s_1..s_m; the empty word is the identity.
using Word = std::vector<Letter>;

/// Cancels adjacent inverse pairs until none remain.
Word free_reduce(const Word& word);

/// Concatenation followed by free reduction.
Word concat_reduced(const Word& a, const Word& b);

Word word_inverse(const Word& word);

/// Evaluates a word against concrete generators (gens[0] is s_1).
/// Throws std::out_of_range if a letter index exceeds the generator list.
Permutation evaluate_word(const Word& word, const std::vector<Permutation>& gens,
                          int degree);

/// The mirror rewrite with top index m: every s_m^e becomes s_m^-e, every
/// s_{m-1} becomes s_{m-1} s_m^2, and every s_{m-1}^-1 becomes s_m^-2 s_{m-1}^-1.
/// Letters with index below m-1 pass through. The result is freely reduced,
/// which makes the rewrite an involution at word level.
/// Throws std::invalid_argument if the word uses an index above m.
Word bar_word(const Word& word, int m);

std::string word_to_string(const Word& word);

}  // namespace gprx
