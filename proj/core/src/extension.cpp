#include "gprx/extension.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "gprx/group.hpp"

namespace gprx {

namespace {

// Mirror generator assignment at top index m for gens[0..m-1]:
// s_m -> s_m^-1, s_{m-1} -> s_{m-1} s_m^2, lower generators unchanged.
std::vector<Permutation> mirror_assignment(const std::vector<Permutation>& gens) {
  const size_t m = gens.size();
  std::vector<Permutation> images(gens.begin(), gens.end());
  images[m - 1] = gens[m - 1].inverse();
  if (m >= 2) images[m - 2] = gens[m - 2] * gens[m - 1] * gens[m - 1];
  return images;
}

struct BfsWords {
  std::vector<int> order;            // vertices in discovery order
  std::vector<Word> word;            // size N+1; word from start, empty if unreached
  std::vector<char> reached;         // size N+1
};

// Breadth-first words over the given labels: shortest, and lexicographically
// least among shortest because neighbors are explored label-ascending with
// the positive direction first.
BfsWords bfs_words(const GprGraph& g, int start, const std::vector<int>& labels) {
  std::vector<std::pair<int, Permutation>> steps;  // (signed label step)
  std::vector<Letter> step_letter;
  for (int label : labels) {
    if (label < 1 || label > g.label_count())
      throw std::invalid_argument("unknown label in word search");
    steps.emplace_back(label, g.arrow(label));
    step_letter.push_back({label, +1});
    steps.emplace_back(label, g.arrow(label).inverse());
    step_letter.push_back({label, -1});
  }

  BfsWords result;
  result.word.assign(g.vertex_count + 1, {});
  result.reached.assign(g.vertex_count + 1, 0);
  std::vector<int> parent(g.vertex_count + 1, 0);
  std::vector<Letter> via(g.vertex_count + 1, Letter{0, 0});

  std::deque<int> queue{start};
  result.reached[start] = 1;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    result.order.push_back(u);
    for (size_t s = 0; s < steps.size(); ++s) {
      const int v = steps[s].second[u];
      if (result.reached[v]) continue;
      result.reached[v] = 1;
      parent[v] = u;
      via[v] = step_letter[s];
      queue.push_back(v);
    }
  }
  for (int v : result.order) {
    if (v == start) continue;
    Word w;
    for (int u = v; u != start; u = parent[u]) w.push_back(via[u]);
    std::reverse(w.begin(), w.end());
    result.word[v] = std::move(w);
  }
  return result;
}

int apply_word_point(int point, const Word& word,
                     const std::vector<Permutation>& gens,
                     const std::vector<Permutation>& inverses) {
  for (const Letter& letter : word)
    point = letter.exponent > 0 ? gens[letter.index - 1][point]
                                : inverses[letter.index - 1][point];
  return point;
}

}  // namespace

PreconditionReport verify_extension_preconditions(const GprGraph& cay) {
  PreconditionReport report;
  const std::vector<Permutation>& gens = cay.arrows;
  const int n = cay.vertex_count;
  const int top = cay.label_count();  // index of sigma_{d-1}

  report.regular_action =
      static_cast<int>(orbit_of(gens, cay.base_vertex).size()) == n &&
      PermutationGroup(gens).order() == n;
  if (!report.regular_action)
    report.failures.push_back("action not regular: the graph is not a Cayley GPR graph");

  report.relations_hold = true;
  for (int i = 1; i <= top; ++i) {
    Permutation prod = gens[i - 1];
    for (int j = i + 1; j <= top; ++j) {
      prod = prod * gens[j - 1];
      if (!(prod * prod).is_identity()) {
        report.relations_hold = false;
        std::ostringstream msg;
        msg << "relation (s" << i << "..s" << j << ")^2 = e fails";
        report.failures.push_back(msg.str());
      }
    }
  }

  report.input_chiral = !extends_to_automorphism(gens, mirror_assignment(gens));
  if (!report.input_chiral)
    report.failures.push_back("input not chiral: the mirror assignment extends to an automorphism");

  if (top >= 2) {
    std::vector<Permutation> facet_gens(gens.begin(), gens.end() - 1);
    report.facet_regular =
        extends_to_automorphism(facet_gens, mirror_assignment(facet_gens));
    if (!report.facet_regular)
      report.failures.push_back("facet not regular: the facet mirror assignment does not extend");
  } else {
    report.facet_regular = false;
    report.failures.push_back("rank too small: no facet rotation subgroup");
  }
  return report;
}

MatchingConstruction build_matching(const GprGraph& cay) {
  const int n = cay.vertex_count;
  const int d = cay.label_count() + 1;  // rank of the input polytope
  if (d < 3) throw std::invalid_argument("extension needs an input of rank >= 3");
  const int top = d - 1;
  const Permutation& sig_top = cay.arrow(top);
  const int v1 = cay.base_vertex;

  // E[k]: component of v1 under labels k..d-1; E[d-1] is the sigma_{d-1} orbit.
  std::vector<std::set<int>> E(d);
  for (int k = 1; k <= top; ++k) {
    std::vector<Permutation> sub(cay.arrows.begin() + (k - 1), cay.arrows.end());
    const auto orbit = orbit_of(sub, v1);
    E[k] = std::set<int>(orbit.begin(), orbit.end());
  }

  std::vector<int> low_labels;
  for (int k = 1; k <= d - 2; ++k) low_labels.push_back(k);
  const ComponentPartition comp = components(cay, low_labels);

  // Seeds: the sigma_{d-1} orbit of v1 is matched power to complementary
  // power; every other component matches its representative to its twin.
  std::vector<std::vector<std::pair<int, int>>> seeds(comp.classes.size());
  std::vector<char> base_seeded(comp.classes.size(), 0);
  {
    std::vector<int> orbit_points;  // v1 * sig_top^k for k = 0..l-1
    int u = v1;
    do {
      orbit_points.push_back(u);
      u = sig_top[u];
    } while (u != v1);
    const size_t l = orbit_points.size();
    for (size_t k = 0; k < l; ++k) {
      const int a = orbit_points[k];
      const int b = orbit_points[(l - k) % l];
      seeds[comp.class_index[a]].emplace_back(a, n + b);
      base_seeded[comp.class_index[a]] = 1;
    }
  }
  for (size_t ci = 0; ci < comp.classes.size(); ++ci) {
    if (base_seeded[ci]) continue;
    int deepest = 0;
    for (int k = 1; k <= d - 2; ++k) {
      const bool meets = std::any_of(comp.classes[ci].begin(), comp.classes[ci].end(),
                                     [&](int v) { return E[k].count(v) > 0; });
      if (meets) deepest = k;
    }
    if (deepest == 0)
      throw std::logic_error("component with no matched seed: input is not connected");
    int rep = 0;
    for (int v : comp.classes[ci]) {
      if (E[deepest].count(v)) { rep = v; break; }
    }
    seeds[ci].emplace_back(rep, n + rep);
  }

  std::vector<Permutation> inverses;
  for (const auto& a : cay.arrows) inverses.push_back(a.inverse());

  std::vector<int> tau_images(2 * n + 1, 0);
  MatchingConstruction result;
  const auto assign = [&](int u, int v) {
    if ((tau_images[u] && tau_images[u] != v) || (tau_images[v] && tau_images[v] != u))
      throw std::logic_error("matching propagation conflict at vertex " + std::to_string(u));
    const bool fresh = tau_images[u] == 0;
    tau_images[u] = v;
    tau_images[v] = u;
    return fresh;
  };

  for (size_t ci = 0; ci < comp.classes.size(); ++ci) {
    for (const auto& [seed_vertex, seed_partner] : seeds[ci]) {
      const BfsWords words = bfs_words(cay, seed_vertex, low_labels);
      for (int u : words.order) {
        const Word& alpha = words.word[u];
        const Word abar = bar_word(alpha, d - 2);
        const int partner =
            n + apply_word_point(seed_partner - n, abar, cay.arrows, inverses);
        if (assign(u, partner))
          result.log.push_back({static_cast<int>(ci), u, partner, alpha});
      }
    }
  }

  for (int v = 1; v <= 2 * n; ++v)
    if (tau_images[v] == 0)
      throw std::logic_error("matching left vertex " + std::to_string(v) + " unmatched");
  std::sort(result.log.begin(), result.log.end(),
            [](const MatchEntry& a, const MatchEntry& b) { return a.vertex < b.vertex; });
  result.tau = Permutation(std::vector<int>(tau_images.begin() + 1, tau_images.end()));
  return result;
}

std::vector<Permutation> ExtendedGpr::all_generators() const {
  std::vector<Permutation> gens = graph.arrows;
  gens.push_back(sigma_d);
  return gens;
}

ExtendedGpr extend(const GprGraph& cay) {
  const PreconditionReport pre = verify_extension_preconditions(cay);
  if (!pre.ok()) {
    std::string msg = "extension preconditions failed:";
    for (const auto& f : pre.failures) msg += "\n  " + f;
    throw std::invalid_argument(msg);
  }
  MatchingConstruction mc = build_matching(cay);
  return assemble_extension(cay, mc.tau, std::move(mc.log));
}

ExtendedGpr assemble_extension(const GprGraph& facet, const Permutation& tau,
                               std::vector<MatchEntry> log) {
  const int n = facet.vertex_count;
  if (tau.degree() != 2 * n)
    throw std::invalid_argument("matching degree must be twice the facet size");
  for (int v = 1; v <= n; ++v)
    if (tau[v] <= n)
      throw std::invalid_argument("matching must exchange the two copies");

  std::vector<Permutation> arrows;
  arrows.reserve(facet.arrows.size());
  for (const Permutation& a : facet.arrows) {
    std::vector<int> table(2 * n);
    for (int i = 1; i <= n; ++i) {
      table[i - 1] = a[i];
      table[n + i - 1] = n + a[i];
    }
    arrows.emplace_back(table);
  }
  GprGraph graph = make_gpr_graph(2 * n, std::move(arrows), tau, facet.base_vertex);
  Permutation sigma_d = graph.arrow(graph.label_count()).inverse() * tau;
  return ExtendedGpr{std::move(graph), std::move(sigma_d), facet, std::move(log)};
}

Word shortest_word(const GprGraph& g, int from, int to, const std::vector<int>& labels) {
  if (from < 1 || from > g.vertex_count || to < 1 || to > g.vertex_count)
    throw std::invalid_argument("vertex out of range");
  const BfsWords words = bfs_words(g, from, labels);
  if (!words.reached[to])
    throw std::invalid_argument("target vertex unreachable under the given labels");
  return words.word[to];
}

std::string to_json(const ExtendedGpr& ext) {
  nlohmann::json j = nlohmann::json::parse(to_json(ext.graph));
  j["sigma_d"] = ext.sigma_d.image_table();
  return j.dump(2) + "\n";
}

ExtendedGpr extended_from_json(const std::string& text, const GprGraph& facet) {
  GprGraph graph = gpr_from_json(text);
  if (!graph.matching)
    throw std::invalid_argument("extension JSON must carry a matching");
  Permutation sigma_d = graph.arrow(graph.label_count()).inverse() * *graph.matching;

  nlohmann::json j = nlohmann::json::parse(text);
  if (j.contains("sigma_d") && !j["sigma_d"].is_null()) {
    const Permutation declared(j["sigma_d"].get<std::vector<int>>());
    if (!(declared == sigma_d))
      throw std::invalid_argument("sigma_d field disagrees with sigma_{d-1}^-1 * matching");
  }
  return ExtendedGpr{std::move(graph), std::move(sigma_d), facet, {}};
}

std::string construction_digest(const ExtendedGpr& ext) {
  uint64_t hash = 1469598103934665603ull;
  const auto mix = [&hash](uint64_t v) {
    hash ^= v;
    hash *= 1099511628211ull;
  };
  if (ext.graph.matching)
    for (int img : ext.graph.matching->image_table()) mix(static_cast<uint64_t>(img));
  for (const MatchEntry& e : ext.construction_log) {
    mix(static_cast<uint64_t>(e.component));
    mix(static_cast<uint64_t>(e.vertex));
    mix(static_cast<uint64_t>(e.partner));
    for (const Letter& letter : e.word) {
      mix(static_cast<uint64_t>(letter.index));
      mix(static_cast<uint64_t>(letter.exponent + 2));
    }
  }
  std::ostringstream out;
  out << std::hex << hash;
  return out.str();
}

}  // namespace gprx
