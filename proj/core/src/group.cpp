#include "gprx/group.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace gprx {

PermutationGroup::PermutationGroup(std::vector<Permutation> generators)
    : PermutationGroup(generators.empty() ? 0 : generators.front().degree(),
                       std::move(generators), false) {}

PermutationGroup::PermutationGroup(int degree, std::vector<Permutation> generators,
                                   bool defer)
    : degree_(degree), generators_(std::move(generators)), order_(1) {
  if (!defer && generators_.empty())
    throw std::invalid_argument("group requires at least one generator");
  for (const auto& g : generators_)
    if (g.degree() != degree_)
      throw std::invalid_argument("generators must share one degree");
  for (const auto& g : generators_) add_element(g, 0);
  recompute_order();
}

PermutationGroup PermutationGroup::trivial(int degree) {
  return PermutationGroup(degree, {Permutation::identity(degree)}, false);
}

std::pair<Permutation, size_t> PermutationGroup::sift_from(Permutation g,
                                                           size_t level) const {
  for (size_t lvl = level; lvl < levels_.size(); ++lvl) {
    const Level& L = levels_[lvl];
    const int image = g[L.base_point];
    const int pos = L.orbit_pos[image];
    if (pos < 0) return {std::move(g), lvl};
    g = g * L.transversal_inv[pos];
  }
  return {std::move(g), levels_.size()};
}

bool PermutationGroup::add_element(const Permutation& g, size_t level) {
  auto [residue, lvl] = sift_from(g, level);
  if (residue.is_identity()) return false;

  if (lvl == levels_.size()) {
    Level fresh;
    fresh.base_point = residue.least_moved_point();
    fresh.orbit_pos.assign(degree_ + 1, -1);
    fresh.orbit.push_back(fresh.base_point);
    fresh.orbit_pos[fresh.base_point] = 0;
    fresh.transversal.push_back(Permutation::identity(degree_));
    fresh.transversal_inv.push_back(Permutation::identity(degree_));
    fresh.schreier_done.push_back(0);
    levels_.push_back(std::move(fresh));
  }

  levels_[lvl].gens.push_back(residue);
  extend_orbit(lvl);
  process_schreier(lvl);
  return true;
}

void PermutationGroup::extend_orbit(size_t level) {
  Level& L = levels_[level];
  for (size_t i = 0; i < L.orbit.size(); ++i) {
    for (const Permutation& g : L.gens) {
      const int image = g[L.orbit[i]];
      if (L.orbit_pos[image] >= 0) continue;
      L.orbit_pos[image] = static_cast<int>(L.orbit.size());
      L.orbit.push_back(image);
      Permutation t = L.transversal[i] * g;
      L.transversal_inv.push_back(t.inverse());
      L.transversal.push_back(std::move(t));
      L.schreier_done.push_back(0);
    }
  }
}

void PermutationGroup::process_schreier(size_t level) {
  // Every Schreier generator T[i] * g * T[i^g]^-1 must sift through the rest
  // of the chain; watermarks avoid reprocessing pairs seen earlier. levels_
  // may reallocate inside add_element, so the level is re-indexed each pass.
  for (size_t i = 0; i < levels_[level].orbit.size(); ++i) {
    for (size_t j = levels_[level].schreier_done[i]; j < levels_[level].gens.size(); ++j) {
      Level& L = levels_[level];
      const Permutation& g = L.gens[j];
      const int target = L.orbit_pos[g[L.orbit[i]]];
      Permutation schreier = L.transversal[i] * g * L.transversal_inv[target];
      L.schreier_done[i] = j + 1;
      if (!schreier.is_identity()) add_element(schreier, level + 1);
    }
  }
}

void PermutationGroup::recompute_order() {
  order_ = 1;
  for (const Level& L : levels_) order_ *= static_cast<unsigned long>(L.orbit.size());
}

bool PermutationGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  auto [residue, lvl] = sift_from(p, 0);
  return lvl == levels_.size() && residue.is_identity();
}

std::vector<int> PermutationGroup::base() const {
  std::vector<int> result;
  result.reserve(levels_.size());
  for (const Level& L : levels_) result.push_back(L.base_point);
  return result;
}

std::vector<Permutation> PermutationGroup::strong_generators() const {
  std::vector<Permutation> result;
  for (const Level& L : levels_)
    result.insert(result.end(), L.gens.begin(), L.gens.end());
  return result;
}

std::vector<size_t> PermutationGroup::fundamental_orbit_sizes() const {
  std::vector<size_t> result;
  result.reserve(levels_.size());
  for (const Level& L : levels_) result.push_back(L.orbit.size());
  return result;
}

std::vector<int> orbit_of(const std::vector<Permutation>& gens, int point) {
  // Forward closure suffices: finite order makes g^-1 reachable through g.
  std::vector<int> frontier{point};
  std::set<int> seen{point};
  while (!frontier.empty()) {
    const int p = frontier.back();
    frontier.pop_back();
    for (const Permutation& g : gens)
      if (seen.insert(g[p]).second) frontier.push_back(g[p]);
  }
  return {seen.begin(), seen.end()};
}

PermutationGroup normal_closure(const PermutationGroup& group,
                                const std::vector<Permutation>& elements) {
  for (const auto& e : elements)
    if (!group.contains(e))
      throw std::invalid_argument("normal_closure: element outside the group");

  PermutationGroup closure(group.degree(), {}, true);
  std::vector<Permutation> worklist;
  for (const auto& e : elements) {
    if (!closure.contains(e)) {
      closure.generators_.push_back(e);
      closure.add_element(e, 0);
      worklist.push_back(e);
    }
  }
  while (!worklist.empty()) {
    const Permutation current = std::move(worklist.back());
    worklist.pop_back();
    for (const Permutation& g : group.generators()) {
      Permutation conj = conjugate(current, g);
      if (!closure.contains(conj)) {
        closure.generators_.push_back(conj);
        closure.add_element(conj, 0);
        worklist.push_back(std::move(conj));
      }
    }
  }
  if (closure.generators_.empty()) {
    closure.generators_.push_back(Permutation::identity(group.degree()));
  }
  closure.recompute_order();
  return closure;
}

namespace {

std::vector<Permutation> diagonal_pairs(const std::vector<Permutation>& gens,
                                        const std::vector<Permutation>& images) {
  const int n = gens.front().degree();
  std::vector<Permutation> result;
  result.reserve(gens.size());
  for (size_t k = 0; k < gens.size(); ++k) {
    std::vector<int> table(2 * n);
    for (int i = 1; i <= n; ++i) {
      table[i - 1] = gens[k][i];
      table[n + i - 1] = n + images[k][i];
    }
    result.emplace_back(table);
  }
  return result;
}

}  // namespace

bool extends_to_homomorphism(const std::vector<Permutation>& gens,
                             const std::vector<Permutation>& images) {
  if (gens.empty() || gens.size() != images.size())
    throw std::invalid_argument("generator and image lists must match and be nonempty");
  PermutationGroup g(gens);
  for (const auto& im : images)
    if (!g.contains(im))
      throw std::invalid_argument("image permutation lies outside the group");
  PermutationGroup diag(diagonal_pairs(gens, images));
  return diag.order() == g.order();
}

bool extends_to_automorphism(const std::vector<Permutation>& gens,
                             const std::vector<Permutation>& images) {
  if (gens.empty() || gens.size() != images.size())
    throw std::invalid_argument("generator and image lists must match and be nonempty");
  PermutationGroup g(gens);
  for (const auto& im : images)
    if (!g.contains(im))
      throw std::invalid_argument("image permutation lies outside the group");
  // A homomorphism onto a generating image set is surjective, hence bijective.
  if (PermutationGroup(images).order() != g.order()) return false;
  PermutationGroup diag(diagonal_pairs(gens, images));
  return diag.order() == g.order();
}

BlockAction induced_block_action(const std::vector<Permutation>& gens,
                                 const std::vector<std::vector<int>>& blocks) {
  if (gens.empty()) throw std::invalid_argument("block action needs generators");
  const int n = gens.front().degree();

  std::vector<int> block_of(n + 1, -1);
  for (size_t b = 0; b < blocks.size(); ++b) {
    for (int p : blocks[b]) {
      if (p < 1 || p > n || block_of[p] >= 0)
        throw std::invalid_argument("blocks do not form a partition of 1..N");
      block_of[p] = static_cast<int>(b);
    }
  }
  for (int p = 1; p <= n; ++p)
    if (block_of[p] < 0)
      throw std::invalid_argument("blocks do not form a partition of 1..N");

  const int m = static_cast<int>(blocks.size());
  std::vector<Permutation> block_gens;
  block_gens.reserve(gens.size());
  for (const Permutation& g : gens) {
    std::vector<int> table(m, 0);
    for (int b = 0; b < m; ++b) {
      const int image_block = block_of[g[blocks[b].front()]];
      for (int p : blocks[b])
        if (block_of[g[p]] != image_block)
          throw std::invalid_argument("partition is not invariant under the generators");
      table[b] = image_block + 1;
    }
    block_gens.emplace_back(table);
  }

  const BigInt full = PermutationGroup(gens).order();
  const BigInt image = PermutationGroup(block_gens).order();
  return BlockAction{std::move(block_gens), full / image};
}

bool is_even_on(const Permutation& a, const std::vector<int>& subset) {
  size_t transpositions = 0;
  for (const auto& cycle : cycles_on(a, subset)) transpositions += cycle.size() - 1;
  return transpositions % 2 == 0;
}

}  // namespace gprx
