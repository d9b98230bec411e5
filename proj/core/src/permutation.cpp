#include "gprx/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gprx {

Permutation::Permutation(int degree) : degree_(degree), images_(degree + 1) {
  if (degree < 0) throw std::invalid_argument("permutation degree must be >= 0");
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation::Permutation(const std::vector<int>& images)
    : degree_(static_cast<int>(images.size())), images_(images.size() + 1) {
  std::vector<char> seen(degree_ + 1, 0);
  for (int i = 1; i <= degree_; ++i) {
    const int v = images[i - 1];
    if (v < 1 || v > degree_ || seen[v])
      throw std::invalid_argument("image table is not a bijection of 1..N");
    seen[v] = 1;
    images_[i] = v;
  }
}

Permutation Permutation::from_cycles(const std::string& text, int degree) {
  Permutation result(degree);
  std::vector<char> touched(degree + 1, 0);
  size_t pos = 0;
  const auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw std::invalid_argument("expected '(' in cycle notation");
    ++pos;
    std::vector<int> cycle;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      size_t end = pos;
      while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
      if (end == pos) throw std::invalid_argument("expected point number in cycle notation");
      const int point = std::stoi(text.substr(pos, end - pos));
      if (point < 1 || point > degree)
        throw std::invalid_argument("cycle point out of range 1..N");
      if (touched[point]) throw std::invalid_argument("point repeated in cycle notation");
      touched[point] = 1;
      cycle.push_back(point);
      pos = end;
      skip_ws();
      if (pos < text.size() && text[pos] == ',') { ++pos; skip_ws(); }
    }
    if (pos >= text.size()) throw std::invalid_argument("unterminated cycle");
    ++pos;  // ')'
    for (size_t k = 0; k < cycle.size(); ++k)
      result.images_[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  return result;
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (degree_ != other.degree_)
    throw std::invalid_argument("cannot compose permutations of different degree");
  Permutation result(degree_);
  for (int i = 1; i <= degree_; ++i) result.images_[i] = other.images_[images_[i]];
  return result;
}

Permutation Permutation::inverse() const {
  Permutation result(degree_);
  for (int i = 1; i <= degree_; ++i) result.images_[images_[i]] = i;
  return result;
}

Permutation Permutation::pow(long long k) const {
  Permutation base = k < 0 ? inverse() : *this;
  if (k < 0) k = -k;
  Permutation result(degree_);
  while (k > 0) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= degree_; ++i)
    if (images_[i] != i) return false;
  return true;
}

long long Permutation::order() const {
  long long result = 1;
  for (const auto& cycle : cycles())
    result = std::lcm(result, static_cast<long long>(cycle.size()));
  return result;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> result;
  std::vector<char> seen(degree_ + 1, 0);
  for (int i = 1; i <= degree_; ++i) {
    if (seen[i] || images_[i] == i) continue;
    std::vector<int> cycle;
    int j = i;
    while (!seen[j]) {
      seen[j] = 1;
      cycle.push_back(j);
      j = images_[j];
    }
    result.push_back(std::move(cycle));
  }
  return result;  // already sorted by least point: outer loop ascends
}

Permutation Permutation::from_cycle_list(const std::vector<std::vector<int>>& cycles,
                                         int degree) {
  Permutation result(degree);
  std::vector<char> touched(degree + 1, 0);
  for (const auto& cycle : cycles) {
    for (int p : cycle) {
      if (p < 1 || p > degree) throw std::invalid_argument("cycle point out of range");
      if (touched[p]) throw std::invalid_argument("cycles are not disjoint");
      touched[p] = 1;
    }
    for (size_t k = 0; k < cycle.size(); ++k)
      result.images_[cycle[k]] = cycle[(k + 1) % cycle.size()];
  }
  return result;
}

std::vector<int> Permutation::support() const {
  std::vector<int> result;
  for (int i = 1; i <= degree_; ++i)
    if (images_[i] != i) result.push_back(i);
  return result;
}

int Permutation::least_moved_point() const {
  for (int i = 1; i <= degree_; ++i)
    if (images_[i] != i) return i;
  return 0;
}

std::vector<int> Permutation::image_table() const {
  return std::vector<int>(images_.begin() + 1, images_.end());
}

std::string Permutation::to_cycle_string() const {
  const auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream out;
  for (const auto& cycle : cs) {
    out << '(';
    for (size_t k = 0; k < cycle.size(); ++k) {
      if (k) out << ',';
      out << cycle[k];
    }
    out << ')';
  }
  return out.str();
}

Permutation conjugate(const Permutation& a, const Permutation& g) {
  return g.inverse() * a * g;
}

Permutation commutator(const Permutation& a, const Permutation& b) {
  return a.inverse() * b.inverse() * a * b;
}

std::vector<std::vector<int>> cycles_on(const Permutation& a,
                                        const std::vector<int>& subset) {
  std::set<int> points(subset.begin(), subset.end());
  for (int p : points)
    if (!points.count(a[p]))
      throw std::invalid_argument("subset is not invariant under the permutation");
  std::vector<std::vector<int>> result;
  std::set<int> seen;
  for (int p : points) {
    if (seen.count(p) || a[p] == p) continue;
    std::vector<int> cycle;
    int j = p;
    while (!seen.count(j)) {
      seen.insert(j);
      cycle.push_back(j);
      j = a[j];
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

}  // namespace gprx
