#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gprx {

/// A permutation of the points 1..N, stored as an image table.
///
/// The action convention throughout this library is the right action with
/// left-to-right composition: point * (a*b) == (point * a) * b.
class Permutation {
public:
  /// Identity on 1..degree.
  explicit Permutation(int degree);

  /// From a 1-based image table: images[i-1] is the image of point i.
  /// Throws std::invalid_argument if the table is not a bijection of 1..N.
  explicit Permutation(const std::vector<int>& images);

  static Permutation identity(int degree) { return Permutation(degree); }

  /// Parses disjoint-cycle notation such as "(1,2,3,4)(5,6)" on 1..degree.
  /// Whitespace is ignored; "()" and the empty string denote the identity.
  static Permutation from_cycles(const std::string& text, int degree);

  int degree() const { return degree_; }

  /// Image of a 1-based point.
  int operator[](int point) const { return images_[point]; }

  /// this followed by other. Degrees must match.
  Permutation operator*(const Permutation& other) const;

  Permutation inverse() const;

  /// this^k for any integer k (negative powers via the inverse).
  Permutation pow(long long k) const;

  bool is_identity() const;

  /// Least m >= 1 with this^m equal to the identity (lcm of cycle lengths).
  long long order() const;

  /// Disjoint cycles covering the support, fixed points omitted.
  /// Each cycle starts at its least point; cycles sorted by least point.
  std::vector<std::vector<int>> cycles() const;

  /// Rebuilds a permutation from disjoint cycles (inverse of cycles()).
  static Permutation from_cycle_list(const std::vector<std::vector<int>>& cycles,
                                     int degree);

  /// Points moved by this permutation, ascending.
  std::vector<int> support() const;

  /// Least moved point, or 0 for the identity.
  int least_moved_point() const;

  /// The 1-based image table (length N).
  std::vector<int> image_table() const;

  /// "(1,2,3)(4,5)" style display; "()" for the identity.
  std::string to_cycle_string() const;

  bool operator==(const Permutation& other) const = default;

private:
  int degree_;
  std::vector<int> images_;  // size degree_+1, slot 0 unused
};

/// Conjugate a^g = g^-1 * a * g.
Permutation conjugate(const Permutation& a, const Permutation& g);

/// Commutator [a,b] = a^-1 b^-1 a b.
Permutation commutator(const Permutation& a, const Permutation& b);

/// Restriction of `a` to a subset of points it maps onto itself, reported as
/// cycles within the subset. Throws if the subset is not invariant.
std::vector<std::vector<int>> cycles_on(const Permutation& a,
                                        const std::vector<int>& subset);

}  // namespace gprx
