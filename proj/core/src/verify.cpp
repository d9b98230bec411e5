#include "gprx/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "gprx/group.hpp"
#include "gprx/version.hpp"

namespace gprx {

namespace {

int first_moved_point(const Permutation& p) {
  const int lmp = p.least_moved_point();
  return lmp;
}

RelationCheck identity_check(std::string id, const Permutation& p) {
  RelationCheck check;
  check.id = std::move(id);
  check.pass = p.is_identity();
  check.witness_point = check.pass ? 0 : first_moved_point(p);
  return check;
}

}  // namespace

std::vector<RelationCheck> check_rotation_relations(const std::vector<Permutation>& gens) {
  std::vector<RelationCheck> checks;
  const int m = static_cast<int>(gens.size());
  for (int i = 1; i <= m; ++i) {
    Permutation prod = gens[i - 1];
    for (int j = i + 1; j <= m; ++j) {
      prod = prod * gens[j - 1];
      std::ostringstream id;
      id << "(s" << i << "..s" << j << ")^2";
      checks.push_back(identity_check(id.str(), prod * prod));
    }
  }
  if (m >= 2) {
    const Permutation t = gens[m - 2] * gens[m - 1];
    checks.push_back(identity_check("halfturn^2", t * t));
    if (m >= 3) {
      const Permutation& s = gens[m - 3];
      checks.push_back(identity_check(
          "halfturn.s" + std::to_string(m - 2) + ".halfturn = s" +
              std::to_string(m - 2) + "^-1",
          t * s * t * s));
    }
    if (m >= 4) {
      const Permutation& s = gens[m - 4];
      const Permutation rhs = s * gens[m - 3] * gens[m - 3];
      checks.push_back(identity_check(
          "halfturn.s" + std::to_string(m - 3) + ".halfturn = s" +
              std::to_string(m - 3) + ".s" + std::to_string(m - 2) + "^2",
          t * s * t * rhs.inverse()));
    }
    for (int j = 1; j <= m - 4; ++j) {
      checks.push_back(identity_check(
          "halfturn commutes with s" + std::to_string(j),
          commutator(t, gens[j - 1])));
    }
  }
  return checks;
}

TheoremConditions check_theorem_conditions(const ExtendedGpr& ext, const GprGraph& facet) {
  TheoremConditions result;
  const GprGraph& g = ext.graph;
  const int dtop = g.label_count();  // sigma_d sits above labels 1..dtop
  const std::vector<Permutation> gens = ext.all_generators();

  std::vector<int> facet_labels;
  for (int k = 1; k <= dtop; ++k) facet_labels.push_back(k);

  // (a) every (1, d-1)-component is label-isomorphic to the facet
  {
    const ComponentPartition comps = components(g, facet_labels);
    result.a.pass = true;
    for (const auto& cls : comps.classes) {
      if (!colored_component_isomorphic(g, cls.front(), facet, facet.base_vertex)) {
        result.a.pass = false;
        result.a.witness =
            "component of vertex " + std::to_string(cls.front()) +
            " is not isomorphic to the facet graph";
        break;
      }
    }
  }

  // (b) (s_k...s_d)^2 trivial on all vertices
  {
    result.b.pass = true;
    for (int k = 1; k <= dtop; ++k) {
      Permutation prod = gens[k - 1];
      for (int j = k + 1; j <= dtop + 1; ++j) prod = prod * gens[j - 1];
      const Permutation square = prod * prod;
      if (!square.is_identity()) {
        result.b.pass = false;
        result.b.witness = "(s" + std::to_string(k) + "..s" +
                           std::to_string(dtop + 1) + ")^2 moves vertex " +
                           std::to_string(first_moved_point(square));
        break;
      }
    }
  }

  // (c) <s_1..s_{d-1}> meets <s_d> trivially
  {
    const PermutationGroup low(g.arrows);
    const long long ord = ext.sigma_d.order();
    result.c.pass = true;
    Permutation power = ext.sigma_d;
    for (long long p = 1; p < ord; ++p) {
      if (low.contains(power)) {
        result.c.pass = false;
        result.c.witness = "s_d^" + std::to_string(p) + " lies in <s_1..s_" +
                           std::to_string(dtop) + ">";
        break;
      }
      power = power * ext.sigma_d;
    }
  }

  // (d) base component under 1..d-1 meets each (k..d)-component in the
  //     (k..d-1)-component of the base vertex
  {
    result.d.pass = true;
    const int v1 = g.base_vertex;
    const ComponentPartition full = components(g, facet_labels);
    const std::vector<int>& g1 = full.class_containing(v1);
    for (int k = 2; k <= dtop; ++k) {
      std::vector<int> mid_labels, ext_labels;
      for (int j = k; j <= dtop; ++j) mid_labels.push_back(j);
      ext_labels = mid_labels;
      ext_labels.push_back(g.matching_label());

      const std::vector<int>& dk = components(g, ext_labels).class_containing(v1);
      const std::vector<int>& ek = components(g, mid_labels).class_containing(v1);

      std::vector<int> meet;
      std::set_intersection(g1.begin(), g1.end(), dk.begin(), dk.end(),
                            std::back_inserter(meet));
      if (meet.empty() || meet != ek) {
        result.d.pass = false;
        result.d.witness =
            "k=" + std::to_string(k) +
            ": base component intersection differs from the (k..d-1)-component";
        break;
      }
    }
  }
  return result;
}

std::vector<long long> schlafli_symbol(const std::vector<Permutation>& gens) {
  std::vector<long long> symbol;
  symbol.reserve(gens.size());
  for (const Permutation& g : gens) symbol.push_back(g.order());
  return symbol;
}

Chirality chirality_test(const std::vector<Permutation>& gens) {
  const size_t m = gens.size();
  std::vector<Permutation> images(gens.begin(), gens.end());
  images[m - 1] = gens[m - 1].inverse();
  if (m >= 2) images[m - 2] = gens[m - 2] * gens[m - 1] * gens[m - 1];
  return extends_to_automorphism(gens, images) ? Chirality::OrientablyRegular
                                               : Chirality::Chiral;
}

std::vector<std::string> VerificationReport::failed_items() const {
  std::vector<std::string> items;
  for (const auto& check : relation_checks)
    if (!check.pass) items.push_back("relation " + check.id);
  if (!conditions.a.pass) items.push_back("condition (a): " + conditions.a.witness);
  if (!conditions.b.pass) items.push_back("condition (b): " + conditions.b.witness);
  if (!conditions.c.pass) items.push_back("condition (c): " + conditions.c.witness);
  if (!conditions.d.pass) items.push_back("condition (d): " + conditions.d.witness);
  if (!schlafli_nondegenerate) items.push_back("schlafli entry below 2");
  return items;
}

VerificationReport run_battery(const ExtendedGpr& ext, const GprGraph& facet) {
  VerificationReport report;
  const std::vector<Permutation> gens = ext.all_generators();
  report.relation_checks = check_rotation_relations(gens);
  report.conditions = check_theorem_conditions(ext, facet);
  report.schlafli = schlafli_symbol(gens);
  report.schlafli_nondegenerate =
      std::all_of(report.schlafli.begin(), report.schlafli.end(),
                  [](long long p) { return p >= 2; });
  report.chirality = chirality_test(gens);
  report.overall =
      std::all_of(report.relation_checks.begin(), report.relation_checks.end(),
                  [](const RelationCheck& c) { return c.pass; }) &&
      report.conditions.all() && report.schlafli_nondegenerate;
  return report;
}

std::string report_to_json(const VerificationReport& report, const std::string& digest) {
  nlohmann::json j;
  j["version"] = kVersion;
  j["construction_digest"] = digest;
  nlohmann::json relations = nlohmann::json::array();
  for (const auto& check : report.relation_checks) {
    relations.push_back({{"id", check.id},
                         {"pass", check.pass},
                         {"witness_point", check.witness_point}});
  }
  j["relations"] = std::move(relations);
  const auto condition = [](const ConditionResult& c) {
    return nlohmann::json{{"pass", c.pass}, {"witness", c.witness}};
  };
  j["condition_a"] = condition(report.conditions.a);
  j["condition_b"] = condition(report.conditions.b);
  j["condition_c"] = condition(report.conditions.c);
  j["condition_d"] = condition(report.conditions.d);
  j["schlafli"] = report.schlafli;
  j["chirality"] = to_string(report.chirality);
  j["overall"] = report.overall;
  return j.dump(2) + "\n";
}

std::string report_to_text(const VerificationReport& report) {
  std::ostringstream out;
  for (const auto& check : report.relation_checks) {
    out << (check.pass ? "  ok   " : "  FAIL ") << check.id;
    if (!check.pass) out << "  (moves vertex " << check.witness_point << ")";
    out << "\n";
  }
  const auto line = [&out](const char* name, const ConditionResult& c) {
    out << (c.pass ? "  ok   " : "  FAIL ") << "condition (" << name << ")";
    if (!c.pass) out << "  " << c.witness;
    out << "\n";
  };
  line("a", report.conditions.a);
  line("b", report.conditions.b);
  line("c", report.conditions.c);
  line("d", report.conditions.d);
  out << "  schlafli: {";
  for (size_t i = 0; i < report.schlafli.size(); ++i)
    out << (i ? "," : "") << report.schlafli[i];
  out << "}\n  chirality: " << to_string(report.chirality) << "\n";
  out << "  overall: " << (report.overall ? "pass" : "FAIL") << "\n";
  return out.str();
}

}  // namespace gprx
