#include "gprx/gpr_graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "gprx/group.hpp"

namespace gprx {

GprGraph make_gpr_graph(int vertex_count, std::vector<Permutation> arrows,
                        std::optional<Permutation> matching, int base_vertex) {
  if (vertex_count < 1) throw std::invalid_argument("graph needs at least one vertex");
  if (arrows.empty()) throw std::invalid_argument("graph needs at least one arrow label");
  for (const auto& a : arrows)
    if (a.degree() != vertex_count)
      throw std::invalid_argument("arrow permutation degree differs from vertex count");
  if (matching) {
    if (matching->degree() != vertex_count)
      throw std::invalid_argument("matching degree differs from vertex count");
    for (int v = 1; v <= vertex_count; ++v) {
      if ((*matching)[v] == v)
        throw std::invalid_argument("matching has a fixed point");
      if ((*matching)[(*matching)[v]] != v)
        throw std::invalid_argument("matching is not an involution");
    }
  }
  if (base_vertex < 1 || base_vertex > vertex_count)
    throw std::invalid_argument("base vertex out of range");
  return GprGraph{vertex_count, std::move(arrows), std::move(matching), base_vertex};
}

GprGraph cayley_gpr(const std::vector<Permutation>& gens) {
  if (gens.empty()) throw std::invalid_argument("Cayley graph needs generators");
  const int n = gens.front().degree();
  if (static_cast<int>(orbit_of(gens, 1).size()) != n)
    throw std::invalid_argument("action not regular: not transitive on 1..N");
  if (PermutationGroup(gens).order() != n)
    throw std::invalid_argument("action not regular: group order differs from degree");
  return make_gpr_graph(n, gens);
}

ComponentPartition components(const GprGraph& g, const std::vector<int>& labels) {
  std::vector<Permutation> steps;
  for (int label : labels) {
    const Permutation* p = nullptr;
    if (label >= 1 && label <= g.label_count()) {
      p = &g.arrow(label);
    } else if (label == g.matching_label() && g.matching) {
      p = &*g.matching;
    } else {
      throw std::invalid_argument("unknown component label");
    }
    steps.push_back(*p);
    steps.push_back(p->inverse());
  }

  ComponentPartition result;
  result.labels = labels;
  result.class_index.assign(g.vertex_count + 1, -1);
  for (int v = 1; v <= g.vertex_count; ++v) {
    if (result.class_index[v] >= 0) continue;
    const int idx = static_cast<int>(result.classes.size());
    std::vector<int> cls;
    std::vector<int> stack{v};
    result.class_index[v] = idx;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      cls.push_back(u);
      for (const Permutation& p : steps) {
        if (result.class_index[p[u]] < 0) {
          result.class_index[p[u]] = idx;
          stack.push_back(p[u]);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    result.classes.push_back(std::move(cls));
  }
  return result;
}

std::optional<std::unordered_map<int, int>> colored_component_isomorphic(
    const GprGraph& g1, int v1, const GprGraph& g2, int v2) {
  if (v1 < 1 || v1 > g1.vertex_count || v2 < 1 || v2 > g2.vertex_count)
    throw std::invalid_argument("seed vertex out of range");
  if (g1.label_count() != g2.label_count()) return std::nullopt;

  std::vector<std::pair<Permutation, Permutation>> pairs1, pairs2;
  for (int label = 1; label <= g1.label_count(); ++label) {
    pairs1.emplace_back(g1.arrow(label), g1.arrow(label).inverse());
    pairs2.emplace_back(g2.arrow(label), g2.arrow(label).inverse());
  }
  if (g1.matching.has_value() && g2.matching.has_value()) {
    pairs1.emplace_back(*g1.matching, g1.matching->inverse());
    pairs2.emplace_back(*g2.matching, g2.matching->inverse());
  }

  std::unordered_map<int, int> mapping{{v1, v2}};
  std::unordered_map<int, int> reverse{{v2, v1}};
  std::deque<int> queue{v1};
  const auto bind = [&](int u, int w) {
    const auto it = mapping.find(u);
    if (it != mapping.end()) return it->second == w;
    const auto rit = reverse.find(w);
    if (rit != reverse.end()) return false;
    mapping.emplace(u, w);
    reverse.emplace(w, u);
    queue.push_back(u);
    return true;
  };
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    const int w = mapping.at(u);
    for (size_t k = 0; k < pairs1.size(); ++k) {
      if (!bind(pairs1[k].first[u], pairs2[k].first[w])) return std::nullopt;
      if (!bind(pairs1[k].second[u], pairs2[k].second[w])) return std::nullopt;
    }
  }
  return mapping;
}

std::string to_json(const GprGraph& g) {
  nlohmann::json j;
  j["vertices"] = g.vertex_count;
  j["labels"] = g.label_count();
  nlohmann::json arrows = nlohmann::json::object();
  for (int label = 1; label <= g.label_count(); ++label)
    arrows[std::to_string(label)] = g.arrow(label).image_table();
  j["arrows"] = std::move(arrows);
  j["matching"] = g.matching ? nlohmann::json(g.matching->image_table())
                             : nlohmann::json(nullptr);
  j["base"] = g.base_vertex;
  return j.dump(2) + "\n";
}

namespace {

Permutation permutation_from_json(const nlohmann::json& value, int degree) {
  if (value.is_string())
    return Permutation::from_cycles(value.get<std::string>(), degree);
  if (!value.is_array())
    throw std::invalid_argument("permutation must be an image array or cycle string");
  const auto images = value.get<std::vector<int>>();
  if (static_cast<int>(images.size()) != degree)
    throw std::invalid_argument("image array length differs from vertex count");
  return Permutation(images);  // rejects non-bijections
}

}  // namespace

GprGraph gpr_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j.contains("labels") ||
      !j.contains("arrows"))
    throw std::invalid_argument("graph JSON needs vertices, labels and arrows");
  const int n = j["vertices"].get<int>();
  const int labels = j["labels"].get<int>();
  std::vector<Permutation> arrows;
  for (int label = 1; label <= labels; ++label) {
    const std::string key = std::to_string(label);
    if (!j["arrows"].contains(key))
      throw std::invalid_argument("missing arrow table for label " + key);
    arrows.push_back(permutation_from_json(j["arrows"][key], n));
  }
  std::optional<Permutation> matching;
  if (j.contains("matching") && !j["matching"].is_null())
    matching = permutation_from_json(j["matching"], n);
  const int base = j.contains("base") ? j["base"].get<int>() : 1;
  return make_gpr_graph(n, std::move(arrows), std::move(matching), base);
}

std::string export_dot(const GprGraph& g) {
  std::ostringstream out;
  out << "digraph gpr {\n";
  for (int v = 1; v <= g.vertex_count; ++v) out << "  " << v << ";\n";
  for (int label = 1; label <= g.label_count(); ++label) {
    const Permutation& a = g.arrow(label);
    for (int v = 1; v <= g.vertex_count; ++v)
      if (a[v] != v)
        out << "  " << v << " -> " << a[v] << " [label=\"" << label << "\"];\n";
  }
  if (g.matching) {
    for (int v = 1; v <= g.vertex_count; ++v)
      if (v < (*g.matching)[v])
        out << "  " << v << " -> " << (*g.matching)[v]
            << " [dir=none, style=dashed];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace gprx
