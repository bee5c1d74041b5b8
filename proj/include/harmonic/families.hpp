#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "harmonic/graph.hpp"

namespace harmonic {

enum class Family {
  Path,
  Cycle,
  Fan,
  Wheel,
  CompleteBipartite,
  Ladder,
  Crown,
  Prism,
  Star,
  Book,
  Helm,
  CompleteSplit,
  Complete,
};

inline constexpr std::array<Family, 13> kAllFamilies = {
    Family::Path,  Family::Cycle, Family::Fan,   Family::Wheel, Family::CompleteBipartite,
    Family::Ladder, Family::Crown, Family::Prism, Family::Star,  Family::Book,
    Family::Helm,  Family::CompleteSplit, Family::Complete,
};

// Short name used in spec strings ("bipartite", "split", ...).
inline std::string_view family_name(Family f) {
  switch (f) {
    case Family::Path: return "path";
    case Family::Cycle: return "cycle";
    case Family::Fan: return "fan";
    case Family::Wheel: return "wheel";
    case Family::CompleteBipartite: return "bipartite";
    case Family::Ladder: return "ladder";
    case Family::Crown: return "crown";
    case Family::Prism: return "prism";
    case Family::Star: return "star";
    case Family::Book: return "book";
    case Family::Helm: return "helm";
    case Family::CompleteSplit: return "split";
    case Family::Complete: return "complete";
  }
  return "?";
}

inline std::size_t family_arity(Family f) {
  return (f == Family::CompleteBipartite || f == Family::CompleteSplit) ? 2 : 1;
}

class FamilyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A family together with its integer parameters.
//
//   one-parameter families: `first` is m, `second` is unused (0)
//   CompleteBipartite:      (m, n) = (first, second)
//   CompleteSplit:          (n, k) = (first, second), n clique vertices, k independent
struct FamilySpec {
  Family family = Family::Path;
  std::size_t first = 0;
  std::size_t second = 0;

  static FamilySpec of(Family f, std::size_t m) { return {f, m, 0}; }
  static FamilySpec bipartite(std::size_t m, std::size_t n) { return {Family::CompleteBipartite, m, n}; }
  static FamilySpec split(std::size_t n, std::size_t k) { return {Family::CompleteSplit, n, k}; }

  std::vector<std::size_t> params() const {
    if (family_arity(family) == 2) return {first, second};
    return {first};
  }

  std::string to_string() const {
    std::string s(family_name(family));
    s += ':' + std::to_string(first);
    if (family_arity(family) == 2) s += ',' + std::to_string(second);
    return s;
  }

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

// Smallest admissible first (and second) parameter of each generator.
inline std::array<std::size_t, 2> family_minimum(Family f) {
  switch (f) {
    case Family::Path: return {1, 0};
    case Family::Cycle: return {3, 0};
    case Family::Fan: return {3, 0};
    case Family::Wheel: return {3, 0};
    case Family::CompleteBipartite: return {2, 2};
    case Family::Ladder: return {2, 0};
    case Family::Crown: return {3, 0};
    case Family::Prism: return {3, 0};
    case Family::Star: return {2, 0};
    case Family::Book: return {1, 0};
    case Family::Helm: return {3, 0};
    case Family::CompleteSplit: return {2, 1};
    case Family::Complete: return {1, 0};
  }
  return {0, 0};
}

inline void check_domain(const FamilySpec& spec) {
  auto [min1, min2] = family_minimum(spec.family);
  if (spec.first < min1 || (family_arity(spec.family) == 2 && spec.second < min2)) {
    std::string need = std::string(family_name(spec.family)) + " requires parameter >= " + std::to_string(min1);
    if (family_arity(spec.family) == 2) need += " and second parameter >= " + std::to_string(min2);
    throw FamilyError("'" + spec.to_string() + "' out of domain: " + need);
  }
}

// Specs accepted by the generators but outside the range the classical
// definition admits. Currently only the wheel on a triangle (which is K_4).
inline std::optional<std::string> domain_warning(const FamilySpec& spec) {
  if (spec.family == Family::Wheel && spec.first == 3) {
    return "wheel:3 is K_4; wheels are classically defined for rims of more than 3 vertices";
  }
  return std::nullopt;
}

inline FamilySpec parse_family_spec(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  std::string_view body = trim(text);
  auto colon = body.find(':');
  if (colon == std::string_view::npos) {
    throw FamilyError("family spec '" + std::string(text) + "' must look like <name>:<p1>[,<p2>]");
  }

  std::string name(trim(body.substr(0, colon)));
  std::transform(name.begin(), name.end(), name.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  auto found = std::find_if(kAllFamilies.begin(), kAllFamilies.end(),
                            [&](Family f) { return family_name(f) == name; });
  if (found == kAllFamilies.end()) throw FamilyError("unknown family '" + name + "'");

  std::vector<std::size_t> values;
  std::string_view rest = body.substr(colon + 1);
  while (true) {
    auto comma = rest.find(',');
    std::string_view field = trim(rest.substr(0, comma));
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
      throw FamilyError("bad parameter '" + std::string(field) + "' in '" + std::string(text) + "'");
    }
    values.push_back(value);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }

  if (values.size() != family_arity(*found)) {
    throw FamilyError(name + " takes " + std::to_string(family_arity(*found)) + " parameter(s), got " +
                      std::to_string(values.size()));
  }
  FamilySpec spec{*found, values[0], values.size() > 1 ? values[1] : 0};
  check_domain(spec);
  return spec;
}

enum class RoleKind {
  Hub,
  PathVertex,
  CycleVertex,
  PartitionU,
  PartitionV,
  Rung,
  CrownU,
  CrownV,
  Pendant,
  Clique,
  Independent,
  StarLeaf,
  BookPage,
};

// What a vertex is in its family's definition. `index` is the 1-based
// subscript (u_i, v_j, a_i, ...); `side` is the P_2 copy (1 or 2) for
// ladder, prism and book vertices, 0 otherwise.
struct VertexRole {
  RoleKind kind = RoleKind::Hub;
  std::size_t index = 0;
  std::size_t side = 0;

  std::string to_string() const {
    auto with_index = [&](std::string_view name) {
      std::string s(name);
      s += '[' + std::to_string(index);
      if (side != 0) s += ',' + std::to_string(side);
      return s + ']';
    };
    switch (kind) {
      case RoleKind::Hub: return side == 0 ? "hub" : "hub[" + std::to_string(side) + "]";
      case RoleKind::PathVertex: return with_index("path");
      case RoleKind::CycleVertex: return with_index("cycle");
      case RoleKind::PartitionU: return with_index("u");
      case RoleKind::PartitionV: return with_index("v");
      case RoleKind::Rung: return with_index("rung");
      case RoleKind::CrownU: return with_index("crown_u");
      case RoleKind::CrownV: return with_index("crown_v");
      case RoleKind::Pendant: return with_index("pendant");
      case RoleKind::Clique: return with_index("clique");
      case RoleKind::Independent: return with_index("independent");
      case RoleKind::StarLeaf: return with_index("leaf");
      case RoleKind::BookPage: return with_index("page");
    }
    return "?";
  }

  friend bool operator==(const VertexRole&, const VertexRole&) = default;
};

struct FamilyGraph {
  Graph graph;
  std::vector<VertexRole> roles;
};

namespace detail {

inline void add_path(Graph& g, Vertex first, std::size_t count) {
  for (std::size_t i = 0; i + 1 < count; ++i) g.add_edge(first + i, first + i + 1);
}

inline void add_cycle(Graph& g, Vertex first, std::size_t count) {
  add_path(g, first, count);
  g.add_edge(first + count - 1, first);
}

// Two copies of a c-vertex layer at 0..c-1 and c..2c-1, joined i <-> i+c.
inline void join_layers(Graph& g, std::size_t c) {
  for (std::size_t i = 0; i < c; ++i) g.add_edge(i, i + c);
}

}  // namespace detail

// Index conventions:
//   fan, wheel, star, helm   hub u_0 at 0, u_1..u_m at 1..m, helm pendant v_i at m+i
//   bipartite                u_1..u_m at 0..m-1, v_1..v_n at m..m+n-1
//   ladder, prism, book      side-1 layer at 0..c-1, side-2 layer at c..2c-1
//                            (book layers are stars with the hub first)
//   crown                    u_i at i-1, v_j at m+j-1, u_i ~ v_j iff i != j
//   split                    clique a_1..a_n at 0..n-1, independent b_1..b_k after
inline FamilyGraph generate(const FamilySpec& spec) {
  check_domain(spec);
  const std::size_t m = spec.first;
  std::vector<VertexRole> roles;

  auto hub_plus = [&](RoleKind rim_kind, std::size_t total) {
    roles.push_back({RoleKind::Hub, 0, 0});
    for (std::size_t i = 1; i <= m; ++i) roles.push_back({rim_kind, i, 0});
    return Graph(total);
  };

  switch (spec.family) {
    case Family::Path: {
      Graph g(m);
      detail::add_path(g, 0, m);
      for (std::size_t i = 1; i <= m; ++i) roles.push_back({RoleKind::PathVertex, i, 0});
      return {std::move(g), std::move(roles)};
    }
    case Family::Cycle: {
      Graph g(m);
      detail::add_cycle(g, 0, m);
      for (std::size_t i = 1; i <= m; ++i) roles.push_back({RoleKind::CycleVertex, i, 0});
      return {std::move(g), std::move(roles)};
    }
    case Family::Fan:
    case Family::Wheel:
    case Family::Star: {
      RoleKind rim = spec.family == Family::Fan    ? RoleKind::PathVertex
                     : spec.family == Family::Wheel ? RoleKind::CycleVertex
                                                    : RoleKind::StarLeaf;
      Graph g = hub_plus(rim, m + 1);
      for (Vertex i = 1; i <= m; ++i) g.add_edge(0, i);
      if (spec.family == Family::Fan) detail::add_path(g, 1, m);
      if (spec.family == Family::Wheel) detail::add_cycle(g, 1, m);
      return {std::move(g), std::move(roles)};
    }
    case Family::Helm: {
      Graph g = hub_plus(RoleKind::CycleVertex, 2 * m + 1);
      for (Vertex i = 1; i <= m; ++i) g.add_edge(0, i);
      detail::add_cycle(g, 1, m);
      for (std::size_t i = 1; i <= m; ++i) {
        g.add_edge(i, m + i);
        roles.push_back({RoleKind::Pendant, i, 0});
      }
      return {std::move(g), std::move(roles)};
    }
    case Family::CompleteBipartite: {
      const std::size_t n = spec.second;
      Graph g(m + n);
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) g.add_edge(i, m + j);
      }
      for (std::size_t i = 1; i <= m; ++i) roles.push_back({RoleKind::PartitionU, i, 0});
      for (std::size_t j = 1; j <= n; ++j) roles.push_back({RoleKind::PartitionV, j, 0});
      return {std::move(g), std::move(roles)};
    }
    case Family::Ladder:
    case Family::Prism: {
      Graph g(2 * m);
      for (Vertex side = 0; side < 2; ++side) {
        if (spec.family == Family::Ladder) {
          detail::add_path(g, side * m, m);
        } else {
          detail::add_cycle(g, side * m, m);
        }
      }
      detail::join_layers(g, m);
      for (std::size_t side = 1; side <= 2; ++side) {
        for (std::size_t i = 1; i <= m; ++i) roles.push_back({RoleKind::Rung, i, side});
      }
      return {std::move(g), std::move(roles)};
    }
    case Family::Book: {
      const std::size_t c = m + 1;
      Graph g(2 * c);
      for (std::size_t side = 0; side < 2; ++side) {
        for (std::size_t i = 1; i <= m; ++i) g.add_edge(side * c, side * c + i);
      }
      detail::join_layers(g, c);
      for (std::size_t side = 1; side <= 2; ++side) {
        roles.push_back({RoleKind::Hub, 0, side});
        for (std::size_t i = 1; i <= m; ++i) roles.push_back({RoleKind::BookPage, i, side});
      }
      return {std::move(g), std::move(roles)};
    }
    case Family::Crown: {
      Graph g(2 * m);
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          if (i != j) g.add_edge(i, m + j);
        }
      }
      for (std::size_t i = 1; i <= m; ++i) roles.push_back({RoleKind::CrownU, i, 0});
      for (std::size_t i = 1; i <= m; ++i) roles.push_back({RoleKind::CrownV, i, 0});
      return {std::move(g), std::move(roles)};
    }
    case Family::CompleteSplit: {
      const std::size_t n = m;
      const std::size_t k = spec.second;
      Graph g(n + k);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
        for (std::size_t j = 0; j < k; ++j) g.add_edge(i, n + j);
      }
      for (std::size_t i = 1; i <= n; ++i) roles.push_back({RoleKind::Clique, i, 0});
      for (std::size_t j = 1; j <= k; ++j) roles.push_back({RoleKind::Independent, j, 0});
      return {std::move(g), std::move(roles)};
    }
    case Family::Complete: {
      Graph g(m);
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) g.add_edge(i, j);
      }
      for (std::size_t i = 1; i <= m; ++i) roles.push_back({RoleKind::Clique, i, 0});
      return {std::move(g), std::move(roles)};
    }
  }
  throw FamilyError("unhandled family");
}

}  // namespace harmonic
