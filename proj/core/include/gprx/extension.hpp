#pragma once

#include <string>
#include <vector>

#include "gprx/gpr_graph.hpp"
#include "gprx/word.hpp"

namespace gprx {

/// Outcome of the three entry checks run before an extension is attempted.
struct PreconditionReport {
  bool regular_action = false;   // the graph really is a Cayley GPR graph
  bool input_chiral = false;     // mirror assignment at the top index fails to extend
  bool facet_regular = false;    // mirror assignment one index down does extend
  bool relations_hold = false;   // (s_i...s_j)^2 trivial for all i < j
  std::vector<std::string> failures;

  bool ok() const {
    return regular_action && input_chiral && facet_regular && relations_hold;
  }
};

PreconditionReport verify_extension_preconditions(const GprGraph& cay);

/// One matched pair with the component and word that produced it.
struct MatchEntry {
  int component = 0;  // index of the (1,d-2)-component holding `vertex`
  int vertex = 0;     // first-copy vertex
  int partner = 0;    // second-copy vertex (serialized N+i)
  Word word;          // word from the component seed to `vertex`
};

struct MatchingConstruction {
  Permutation tau;               // perfect matching on 2N points
  std::vector<MatchEntry> log;   // one entry per first-copy vertex
};

/// Builds the matching between two copies of the Cayley graph:
///   - the base vertex orbit under the top rotation is matched power-to-
///     complementary-power,
///   - every other (1,d-2)-component gets one seed v_i <-> v_i', chosen as the
///     least vertex of the component's intersection with the deepest E_k it
///     meets (E_k = component of the base vertex under labels k..d-1),
///   - seeds propagate by v_i a <-> v_j' abar with abar the mirror rewrite of
///     a shortest word for a at top index d-2.
/// Requires verify_extension_preconditions(cay).ok().
MatchingConstruction build_matching(const GprGraph& cay);

/// A GPR graph of the rank-(d+1) extension: two copies of the input with the
/// matching, plus the derived top rotation sigma_d = sigma_{d-1}^-1 * tau.
struct ExtendedGpr {
  GprGraph graph;                     // 2N vertices, labels 1..d-1, matching
  Permutation sigma_d;
  GprGraph facet;                     // the input Cayley graph
  std::vector<MatchEntry> construction_log;

  /// sigma_1..sigma_d acting on the 2N vertices.
  std::vector<Permutation> all_generators() const;
};

/// Runs the precondition checks and the matching construction.
/// Throws std::invalid_argument when a precondition fails.
ExtendedGpr extend(const GprGraph& cay);

/// Assembles an extension from parts already in hand (used by the toroidal
/// family, whose matching is written down explicitly rather than constructed).
ExtendedGpr assemble_extension(const GprGraph& facet, const Permutation& tau,
                               std::vector<MatchEntry> log = {});

/// Shortest word over the listed labels moving `from` to `to`; ties resolved
/// lexicographically with s_k before s_k^-1 and lower labels first.
/// Throws std::invalid_argument when `to` is unreachable.
Word shortest_word(const GprGraph& g, int from, int to, const std::vector<int>& labels);

/// Extension JSON: the graph schema plus a "sigma_d" image array.
std::string to_json(const ExtendedGpr& ext);

/// Parses extension JSON against its facet. The matching must be present and
/// any "sigma_d" field must agree with sigma_{d-1}^-1 * matching.
ExtendedGpr extended_from_json(const std::string& text, const GprGraph& facet);

/// FNV-1a digest of the matching and construction log, for report stamping.
std::string construction_digest(const ExtendedGpr& ext);

}  // namespace gprx
