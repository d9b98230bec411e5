#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "gprx/permutation.hpp"

namespace gprx {

using BigInt = boost::multiprecision::cpp_int;

/// A permutation group held as a base and strong generating set.
///
/// Construction runs a deterministic Schreier-Sims: base points are always the
/// least moved point of the first sifted element that reaches a new level, so
/// the same generator list always yields the same chain. Orders are exact
/// arbitrary-precision integers. The handle is immutable once built; queries
/// are const and safe to run concurrently.
class PermutationGroup {
public:
  /// Throws std::invalid_argument on an empty list or mixed degrees.
  explicit PermutationGroup(std::vector<Permutation> generators);

  static PermutationGroup trivial(int degree);

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  const BigInt& order() const { return order_; }
  bool is_trivial() const { return order_ == 1; }

  /// True iff the permutation sifts to the identity through the chain.
  bool contains(const Permutation& p) const;

  std::vector<int> base() const;
  std::vector<Permutation> strong_generators() const;

  /// Orbit sizes along the base; their product is the group order.
  std::vector<size_t> fundamental_orbit_sizes() const;

  friend PermutationGroup normal_closure(const PermutationGroup& group,
                                         const std::vector<Permutation>& elements);

private:
  struct Level {
    int base_point = 0;
    std::vector<Permutation> gens;       // strong generators active at this level
    std::vector<int> orbit;              // discovery order, orbit[0] == base_point
    std::vector<int> orbit_pos;          // point -> index in orbit, or -1
    std::vector<Permutation> transversal;      // base_point ^ t == orbit point
    std::vector<Permutation> transversal_inv;
    std::vector<size_t> schreier_done;   // per orbit index: gens already processed
  };

  PermutationGroup(int degree, std::vector<Permutation> generators, bool defer);

  bool add_element(const Permutation& g, size_t level);
  void extend_orbit(size_t level);
  void process_schreier(size_t level);
  std::pair<Permutation, size_t> sift_from(Permutation g, size_t level) const;
  void recompute_order();

  int degree_;
  std::vector<Permutation> generators_;
  std::vector<Level> levels_;
  BigInt order_;
};

/// Orbit of a point under a generator list (the empty list gives {point}).
/// Result is sorted ascending.
std::vector<int> orbit_of(const std::vector<Permutation>& gens, int point);

/// Smallest normal subgroup of `group` containing `elements`.
/// Throws std::invalid_argument if an element lies outside the group.
PermutationGroup normal_closure(const PermutationGroup& group,
                                const std::vector<Permutation>& elements);

/// Whether gens[i] -> images[i] extends to a homomorphism of <gens> into
/// itself. Decided on the diagonal action: the subgroup of pairs
/// <(gens[i], images[i])> acting on two copies of the domain has the same
/// order as <gens> exactly when the assignment respects all relations.
/// Throws std::invalid_argument if some image lies outside <gens>, or the
/// lists differ in length.
bool extends_to_homomorphism(const std::vector<Permutation>& gens,
                             const std::vector<Permutation>& images);

/// As above, plus the requirement that the images generate the whole group,
/// which upgrades the homomorphism to an automorphism.
bool extends_to_automorphism(const std::vector<Permutation>& gens,
                             const std::vector<Permutation>& images);

struct BlockAction {
  std::vector<Permutation> block_generators;  // induced action on block indices
  BigInt kernel_order;                        // |<gens>| / |block image group|
};

/// Action induced on the classes of a generator-invariant partition.
/// Throws std::invalid_argument if `blocks` is not a partition of 1..N or
/// some generator fails to map blocks to blocks.
BlockAction induced_block_action(const std::vector<Permutation>& gens,
                                 const std::vector<std::vector<int>>& blocks);

/// Parity of `a` restricted to an invariant subset: true iff even.
/// Throws std::invalid_argument if the subset is not invariant.
bool is_even_on(const Permutation& a, const std::vector<int>& subset);

}  // namespace gprx
