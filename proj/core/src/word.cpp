#include "gprx/word.hpp"

#include <sstream>
#include <stdexcept>

namespace gprx {

Word free_reduce(const Word& word) {
  Word stack;
  stack.reserve(word.size());
  for (const Letter& letter : word) {
    if (!stack.empty() && stack.back().index == letter.index &&
        stack.back().exponent == -letter.exponent) {
      stack.pop_back();
    } else {
      stack.push_back(letter);
    }
  }
  return stack;
}

Word concat_reduced(const Word& a, const Word& b) {
  Word joined = a;
  joined.insert(joined.end(), b.begin(), b.end());
  return free_reduce(joined);
}

Word word_inverse(const Word& word) {
  Word result;
  result.reserve(word.size());
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    result.push_back({it->index, -it->exponent});
  return result;
}

Permutation evaluate_word(const Word& word, const std::vector<Permutation>& gens,
                          int degree) {
  Permutation result(degree);
  for (const Letter& letter : word) {
    if (letter.index < 1 || letter.index > static_cast<int>(gens.size()))
      throw std::out_of_range("word letter index outside generator list");
    const Permutation& g = gens[letter.index - 1];
    result = letter.exponent > 0 ? result * g : result * g.inverse();
  }
  return result;
}

Word bar_word(const Word& word, int m) {
  Word result;
  result.reserve(word.size() * 3);
  for (const Letter& letter : word) {
    if (letter.index > m)
      throw std::invalid_argument("bar_word: letter index above the top index");
    if (letter.index == m) {
      result.push_back({m, -letter.exponent});
    } else if (letter.index == m - 1) {
      if (letter.exponent > 0) {
        result.push_back({m - 1, 1});
        result.push_back({m, 1});
        result.push_back({m, 1});
      } else {
        result.push_back({m, -1});
        result.push_back({m, -1});
        result.push_back({m - 1, -1});
      }
    } else {
      result.push_back(letter);
    }
  }
  return free_reduce(result);
}

std::string word_to_string(const Word& word) {
  if (word.empty()) return "e";
  std::ostringstream out;
  for (size_t i = 0; i < word.size(); ++i) {
    if (i) out << '.';
    out << 's' << word[i].index;
    if (word[i].exponent < 0) out << "'";
  }
  return out.str();
}

}  // namespace gprx
