#pragma once

#include <string>
#include <vector>

#include "gprx/extension.hpp"
#include "gprx/gpr_graph.hpp"
#include "gprx/permutation.hpp"

namespace gprx {

enum class Chirality { Chiral, OrientablyRegular };

inline const char* to_string(Chirality c) {
  return c == Chirality::Chiral ? "chiral" : "orientably-regular";
}

struct RelationCheck {
  std::string id;
  bool pass = false;
  int witness_point = 0;  // first point violating the identity, 0 when pass
};

/// Verifies (s_i...s_j)^2 = e for all 1 <= i < j <= m over the generator
/// list, then the half-turn relation family for t = s_{m-1} s_m:
///   t^2 = e,  t s_{m-2} t = s_{m-2}^-1,  t s_{m-3} t = s_{m-3} s_{m-2}^2,
///   t s_j = s_j t for j <= m-4.
/// Failures are results with witnesses, never exceptions.
std::vector<RelationCheck> check_rotation_relations(const std::vector<Permutation>& gens);

struct ConditionResult {
  bool pass = false;
  std::string witness;  // what failed, empty when pass
};

/// The four polytopality conditions for an extension graph, checked against
/// the facet graph:
///  (a) every component under labels 1..d-1 is label-isomorphic to the facet,
///  (b) (s_k...s_d)^2 fixes every vertex for k = 1..d-1,
///  (c) no nontrivial power of s_d lies in <s_1..s_{d-1}>,
///  (d) for k = 2..d-1 the base component under labels 1..d-1 meets the
///      (k..d)-component of the base vertex exactly in its (k..d-1)-component.
struct TheoremConditions {
  ConditionResult a, b, c, d;
  bool all() const { return a.pass && b.pass && c.pass && d.pass; }
};

TheoremConditions check_theorem_conditions(const ExtendedGpr& ext, const GprGraph& facet);

/// Orders of the generators; entry i is the order of s_{i+1}.
std::vector<long long> schlafli_symbol(const std::vector<Permutation>& gens);

/// Chiral iff the mirror assignment at the top index (s_m -> s_m^-1,
/// s_{m-1} -> s_{m-1} s_m^2, lower generators fixed) fails to extend to an
/// automorphism of the generated group.
Chirality chirality_test(const std::vector<Permutation>& gens);

struct VerificationReport {
  std::vector<RelationCheck> relation_checks;
  TheoremConditions conditions;
  std::vector<long long> schlafli;
  bool schlafli_nondegenerate = false;  // every entry >= 2
  Chirality chirality = Chirality::Chiral;
  bool overall = false;

  std::vector<std::string> failed_items() const;
};

/// The full battery over an extension and its facet.
VerificationReport run_battery(const ExtendedGpr& ext, const GprGraph& facet);

/// Machine-readable report; `digest` stamps the construction it verified.
std::string report_to_json(const VerificationReport& report, const std::string& digest);
std::string report_to_text(const VerificationReport& report);

}  // namespace gprx
