#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "harmonic/centrality.hpp"
#include "harmonic/closed_form.hpp"
#include "harmonic/distance.hpp"
#include "harmonic/families.hpp"
#include "harmonic/graph.hpp"
#include "harmonic/rational.hpp"

namespace harmonic {

enum class Quantity { Centralization, VertexClassValue, MaxCentrality };

// One closed-form value checked against the brute-force engine.
struct VerificationRecord {
  FamilySpec spec;
  Quantity quantity = Quantity::Centralization;
  std::optional<VertexClass> vertex_class;
  Rational closed_value;
  Rational oracle_value;
  bool match = false;
  std::string note;

  std::string quantity_label() const {
    switch (quantity) {
      case Quantity::Centralization: return "centralization";
      case Quantity::MaxCentrality: return "max_centrality";
      case Quantity::VertexClassValue: return "vertex:" + vertex_class->to_string();
    }
    return "?";
  }
};

struct SweepOptions {
  bool vertex_classes = false;  // add per-class and max-centrality records
  unsigned threads = 1;
};

struct ParameterRange {
  std::size_t lo = 0;
  std::size_t hi = 0;
};

// Checks one family member. The centralization record always comes first,
// followed (when requested) by the max-centrality record and one record per
// vertex class. For a class record the oracle value is the engine value at
// the first class member that disagrees with the closed form, or the common
// value when all members agree.
inline std::vector<VerificationRecord> verify_spec(const FamilySpec& spec, const SweepOptions& options = {}) {
  FamilyGraph fg = generate(spec);
  CentralityReport report = full_report(fg.graph, options.threads);

  std::vector<VerificationRecord> records;
  auto push = [&](Quantity quantity, std::optional<VertexClass> cls, Rational closed, Rational oracle,
                  std::string note) {
    bool match = closed == oracle;
    records.push_back({spec, quantity, std::move(cls), std::move(closed), std::move(oracle), match, std::move(note)});
  };

  push(Quantity::Centralization, std::nullopt, centralization_closed(spec), *report.centralization,
       centralization_note(spec));
  if (!options.vertex_classes) return records;

  push(Quantity::MaxCentrality, std::nullopt, max_centrality_closed(spec), report.max_value, "");
  for (const auto& cls : vertex_classes(spec)) {
    Rational closed = vertex_centrality_closed(spec, cls);
    std::optional<Rational> oracle;
    for (Vertex v = 0; v < fg.graph.order(); ++v) {
      if (!(class_of(spec, fg.roles[v]) == cls)) continue;
      if (!oracle || report.centrality[v] != closed) oracle = report.centrality[v];
      if (*oracle != closed) break;
    }
    if (!oracle) throw std::logic_error("vertex class " + cls.to_string() + " is empty in " + spec.to_string());
    push(Quantity::VertexClassValue, cls, std::move(closed), *oracle, vertex_class_note(spec, cls));
  }
  return records;
}

// Family members swept by default: m = 3..30 for one-parameter families,
// 2 <= m, n <= 15 for bipartite, 2 <= n <= 15 and 1 <= k <= 15 for split.
inline std::vector<FamilySpec> sweep_specs(Family family, ParameterRange first,
                                           std::optional<ParameterRange> second = std::nullopt) {
  std::size_t lo = std::max(first.lo, detail::closed_form_minimum(family));
  std::vector<FamilySpec> specs;
  if (family_arity(family) == 1) {
    for (std::size_t m = lo; m <= first.hi; ++m) specs.push_back(FamilySpec::of(family, m));
    return specs;
  }
  ParameterRange r2 = second.value_or(first);
  std::size_t lo2 = std::max(r2.lo, family_minimum(family)[1]);
  for (std::size_t a = lo; a <= first.hi; ++a) {
    for (std::size_t b = lo2; b <= r2.hi; ++b) specs.push_back({family, a, b});
  }
  return specs;
}

inline std::vector<FamilySpec> default_sweep(Family family) {
  if (family == Family::CompleteBipartite) return sweep_specs(family, {2, 15}, ParameterRange{2, 15});
  if (family == Family::CompleteSplit) return sweep_specs(family, {2, 15}, ParameterRange{1, 15});
  return sweep_specs(family, {3, 30});
}

inline std::vector<VerificationRecord> verify_family(const std::vector<FamilySpec>& specs,
                                                     const SweepOptions& options = {}) {
  std::vector<VerificationRecord> out;
  for (const auto& spec : specs) {
    auto records = verify_spec(spec, options);
    out.insert(out.end(), std::make_move_iterator(records.begin()), std::make_move_iterator(records.end()));
  }
  return out;
}

inline bool all_match(const std::vector<VerificationRecord>& records) {
  return std::all_of(records.begin(), records.end(), [](const auto& r) { return r.match; });
}

// Floyd-Warshall on unit weights. Cubic; used only to cross-check BFS.
inline std::vector<std::vector<Distance>> floyd_warshall(const Graph& g) {
  const std::size_t m = g.order();
  std::vector<std::vector<Distance>> d(m, std::vector<Distance>(m, kUnreachable));
  for (Vertex u = 0; u < m; ++u) {
    d[u][u] = 0;
    for (Vertex v : g.neighbors(u)) d[u][v] = 1;
  }
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t i = 0; i < m; ++i) {
      if (d[i][k] == kUnreachable) continue;
      for (std::size_t j = 0; j < m; ++j) {
        if (d[k][j] == kUnreachable) continue;
        Distance via = d[i][k] + d[k][j];
        if (via < d[i][j]) d[i][j] = via;
      }
    }
  }
  return d;
}

inline constexpr std::size_t kOracleMaxOrder = 50;

inline bool distance_oracle_crosscheck(const Graph& g) {
  if (g.order() > kOracleMaxOrder) {
    throw std::invalid_argument("distance oracle limited to order <= " + std::to_string(kOracleMaxOrder));
  }
  auto reference = floyd_warshall(g);
  auto rows = all_pairs_distances(g);
  for (std::size_t u = 0; u < g.order(); ++u) {
    if (rows[u].dist != reference[u]) return false;
  }
  return true;
}

struct GoldenFixture {
  std::string name;
  Graph graph;
  std::vector<std::string> labels;
  std::vector<Rational> centrality;
  Rational centralization;
  Vertex hub = 0;
  Rational hub_reciprocal_sum;
};

// The order-10 caterpillar: hub u adjacent to x2, x5, x7; x2 carries leaves
// x1, x3, x4 and x7 carries x6, x8, x9. Index 0 is u, index i is x_i.
inline GoldenFixture caterpillar_fixture() {
  Graph g(10);
  for (Vertex x : {2u, 5u, 7u}) g.add_edge(0, x);
  for (Vertex x : {1u, 3u, 4u}) g.add_edge(2, x);
  for (Vertex x : {6u, 8u, 9u}) g.add_edge(7, x);

  std::vector<std::string> labels{"u"};
  for (int i = 1; i <= 9; ++i) labels.push_back("x" + std::to_string(i));

  const Rational spine(2, 3);
  const Rational leaf(47, 108);
  const Rational lone(4, 9);
  std::vector<Rational> expected{spine, leaf, spine, leaf, leaf, lone, leaf, spine, leaf, leaf};
  return {"caterpillar", std::move(g), std::move(labels), std::move(expected), Rational(29, 72), 0, Rational(6)};
}

inline std::vector<GoldenFixture> golden_fixtures() { return {caterpillar_fixture()}; }

}  // namespace harmonic
