#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gprx/permutation.hpp"

namespace gprx {

/// An edge-labeled digraph on vertices 1..N: one arrow permutation per label
/// 1..d-1 (v -> v*sigma_label, fixed points drawn as omitted loops), plus an
/// optional undirected perfect matching stored as a fixed-point-free
/// involutory permutation.
struct GprGraph {
  int vertex_count = 0;
  std::vector<Permutation> arrows;       // arrows[k-1] is the label-k permutation
  std::optional<Permutation> matching;
  int base_vertex = 1;

  int label_count() const { return static_cast<int>(arrows.size()); }

  /// Label of the matching when treated as one more arrow set.
  int matching_label() const { return label_count() + 1; }

  const Permutation& arrow(int label) const { return arrows.at(label - 1); }
};

/// Validates and assembles a graph: equal arrow degrees, base in range, and a
/// matching (when present) that is an involution without fixed points.
GprGraph make_gpr_graph(int vertex_count, std::vector<Permutation> arrows,
                        std::optional<Permutation> matching = std::nullopt,
                        int base_vertex = 1);

/// The Cayley graph of <gens> acting on 1..N, with label k arrows from
/// gens[k-1]. Requires the action to be regular (transitive with group order
/// equal to N); otherwise throws std::invalid_argument("action not regular").
GprGraph cayley_gpr(const std::vector<Permutation>& gens);

/// Partition of the vertex set into connected components under a label set.
struct ComponentPartition {
  std::vector<int> labels;
  std::vector<std::vector<int>> classes;  // each sorted; ordered by least vertex
  std::vector<int> class_index;           // size N+1; vertex -> index into classes

  const std::vector<int>& class_containing(int vertex) const {
    return classes[class_index[vertex]];
  }
};

/// Components under the given labels. The matching participates when the
/// pseudo-label label_count()+1 is listed. Unknown labels throw.
ComponentPartition components(const GprGraph& g, const std::vector<int>& labels);

/// The unique label-preserving digraph isomorphism between the components of
/// v1 and v2 sending v1 to v2, found by propagation, or nullopt when the
/// propagation conflicts. Matchings take part only when both graphs have one.
std::optional<std::unordered_map<int, int>> colored_component_isomorphic(
    const GprGraph& g1, int v1, const GprGraph& g2, int v2);

/// Lossless JSON round-trip. Arrow image arrays are 1-based; a string value
/// in disjoint-cycle notation is accepted on input in place of an array.
std::string to_json(const GprGraph& g);
GprGraph gpr_from_json(const std::string& text);

/// GraphViz output: arrows as directed edges labeled with their number,
/// matching edges undirected and dashed.
std::string export_dot(const GprGraph& g);

}  // namespace gprx
