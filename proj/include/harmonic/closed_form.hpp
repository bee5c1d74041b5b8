#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "harmonic/centrality.hpp"
#include "harmonic/families.hpp"
#include "harmonic/rational.hpp"

// Closed-form harmonic centralities and centralizations of the named graph
// families, evaluated exactly from the integer parameters alone.
//
// Conventions:
//  - H_x with a half-integer index x is read as H_floor(x).
//  - Sums whose upper limit is below the lower limit are empty (0).

namespace harmonic {

enum class ClassKind {
  Hub,
  PathEnd,
  PathInterior,
  FanEnd,
  FanInterior,
  Rim,
  BipartiteU,
  BipartiteV,
  LadderColumn,
  CrownAny,
  PrismAny,
  CycleAny,
  BookHub,
  BookPage,
  HelmCenter,
  HelmRim,
  HelmPendant,
  SplitClique,
  SplitIndependent,
  StarLeaf,
  CompleteAny,
};

// A set of vertices sharing one centrality value. `index` is the 1-based
// position for PathInterior(i) and LadderColumn(i), 0 otherwise.
struct VertexClass {
  ClassKind kind = ClassKind::Hub;
  std::size_t index = 0;

  std::string to_string() const {
    auto indexed = [&](const char* name) { return std::string(name) + "(" + std::to_string(index) + ")"; };
    switch (kind) {
      case ClassKind::Hub: return "Hub";
      case ClassKind::PathEnd: return "PathEnd";
      case ClassKind::PathInterior: return indexed("PathInterior");
      case ClassKind::FanEnd: return "FanEnd";
      case ClassKind::FanInterior: return "FanInterior";
      case ClassKind::Rim: return "Rim";
      case ClassKind::BipartiteU: return "BipartiteU";
      case ClassKind::BipartiteV: return "BipartiteV";
      case ClassKind::LadderColumn: return indexed("LadderColumn");
      case ClassKind::CrownAny: return "CrownAny";
      case ClassKind::PrismAny: return "PrismAny";
      case ClassKind::CycleAny: return "CycleAny";
      case ClassKind::BookHub: return "BookHub";
      case ClassKind::BookPage: return "BookPage";
      case ClassKind::HelmCenter: return "HelmCenter";
      case ClassKind::HelmRim: return "HelmRim";
      case ClassKind::HelmPendant: return "HelmPendant";
      case ClassKind::SplitClique: return "SplitClique";
      case ClassKind::SplitIndependent: return "SplitIndependent";
      case ClassKind::StarLeaf: return "StarLeaf";
      case ClassKind::CompleteAny: return "CompleteAny";
    }
    return "?";
  }

  friend bool operator==(const VertexClass&, const VertexClass&) = default;
};

class ClosedFormError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline Rational q(std::int64_t num, std::int64_t den = 1) { return Rational(num, den); }
inline Rational hn(std::int64_t n) { return harmonic_number(static_cast<std::size_t>(std::max<std::int64_t>(n, 0))); }

template <typename Term>
Rational sum_range(std::int64_t lo, std::int64_t hi, Term term) {
  Rational total;
  for (std::int64_t i = lo; i <= hi; ++i) total += term(i);
  return total;
}

// (2H_{i-1} + 2H_{m-i} + (1-i)/i + 1/(m-i+1)): the reciprocal-distance sum
// of either vertex in column i of the ladder L_m.
inline Rational ladder_column_sum(std::int64_t m, std::int64_t i) {
  return 2 * hn(i - 1) + 2 * hn(m - i) + q(1 - i, i) + q(1, m - i + 1);
}

inline std::size_t closed_form_minimum(Family f) {
  switch (f) {
    case Family::Path: return 3;
    case Family::Ladder: return 3;
    case Family::Book: return 3;
    case Family::Complete: return 3;
    default: return family_minimum(f)[0];
  }
}

// Order threshold below which per-vertex centrality is undefined (order 1).
inline void check_vertex_domain(const FamilySpec& spec) {
  check_domain(spec);
  if ((spec.family == Family::Path || spec.family == Family::Complete) && spec.first < 2) {
    throw ClosedFormError("'" + spec.to_string() + "' has a single vertex; centrality needs order >= 2");
  }
}

[[noreturn]] inline void class_mismatch(const FamilySpec& spec, const VertexClass& cls) {
  throw ClosedFormError("vertex class " + cls.to_string() + " does not belong to '" + spec.to_string() + "'");
}

}  // namespace detail

// Parameter range where a graph-level closed form is defined.
inline void check_closed_form_domain(const FamilySpec& spec) {
  check_domain(spec);
  std::size_t lo = detail::closed_form_minimum(spec.family);
  if (spec.first < lo) {
    throw ClosedFormError("no closed-form centralization for '" + spec.to_string() + "' (needs parameter >= " +
                          std::to_string(lo) + ")");
  }
}

inline Rational centralization_closed(const FamilySpec& spec) {
  using detail::hn;
  using detail::q;
  check_closed_form_domain(spec);
  const auto m = static_cast<std::int64_t>(spec.first);

  switch (spec.family) {
    case Family::Path: {
      auto pair_sum = [&](std::int64_t i) { return hn(i - 1) + hn(m - i); };
      Rational scale = q(4, (m - 1) * (m - 2));
      if (m % 2 == 1) {
        std::int64_t h = (m - 1) / 2;
        return scale * ((m - 1) * hn(h) - hn(m - 1) - detail::sum_range(2, h, pair_sum));
      }
      std::int64_t h = (m - 2) / 2;
      return scale * (q(m - 2, m) + (m - 2) * hn(h) - hn(m - 1) - detail::sum_range(2, h, pair_sum));
    }
    case Family::Cycle:
    case Family::Crown:
    case Family::Prism:
    case Family::Complete:
      return Rational(0);
    case Family::Fan:
      return q(m - 2, m);
    case Family::Wheel:
      return q(m - 3, m - 1);
    case Family::CompleteBipartite: {
      const auto n = static_cast<std::int64_t>(spec.second);
      if (m == n) return Rational(0);
      std::int64_t big = std::max(m, n);
      std::int64_t small = std::min(m, n);
      return q(big * (big - small), (m + n - 2) * (m + n - 1));
    }
    case Family::Ladder: {
      auto column = [&](std::int64_t i) { return detail::ladder_column_sum(m, i); };
      if (m % 2 == 1) {
        std::int64_t h = (m - 1) / 2;
        return q(4, (m - 1) * (2 * m - 1)) *
               (2 * (m - 1) * hn(h) - 2 * hn(m - 1) + q(2 * (m - 1), m + 1) - q(m - 1, 2) - q(1, m) -
                detail::sum_range(2, h, column));
      }
      // Prefactor 2; see centralization_note().
      return q(2, (2 * m - 1) * (m - 1)) *
             (4 * (m - 2) * hn(m / 2) - 4 * hn(m - 1) - q(m * m - 2, m) + q(2 * m - 4, m + 2) -
              2 * detail::sum_range(2, (m - 2) / 2, column));
    }
    case Family::Star:
      return Rational(1);
    case Family::Book:
      return q(4 * (m - 1), 3 * (2 * m + 1));
    case Family::Helm:
      if (m == 3) return q(2, 5);
      return q(19 * m - 47, 12 * (2 * m - 1));
    case Family::CompleteSplit: {
      const auto n = m;
      const auto k = static_cast<std::int64_t>(spec.second);
      return q(k * (k - 1), (n + k - 1) * (n + k - 2));
    }
  }
  throw ClosedFormError("unhandled family");
}

// Exhaustive list of the vertex classes of one family member.
inline std::vector<VertexClass> vertex_classes(const FamilySpec& spec) {
  detail::check_vertex_domain(spec);
  const std::size_t m = spec.first;
  switch (spec.family) {
    case Family::Path: {
      std::vector<VertexClass> out{{ClassKind::PathEnd, 0}};
      for (std::size_t i = 2; i < m; ++i) out.push_back({ClassKind::PathInterior, i});
      return out;
    }
    case Family::Cycle: return {{ClassKind::CycleAny, 0}};
    case Family::Fan: return {{ClassKind::Hub, 0}, {ClassKind::FanEnd, 0}, {ClassKind::FanInterior, 0}};
    case Family::Wheel: return {{ClassKind::Hub, 0}, {ClassKind::Rim, 0}};
    case Family::CompleteBipartite: return {{ClassKind::BipartiteU, 0}, {ClassKind::BipartiteV, 0}};
    case Family::Ladder: {
      std::vector<VertexClass> out;
      for (std::size_t i = 1; i <= m; ++i) out.push_back({ClassKind::LadderColumn, i});
      return out;
    }
    case Family::Crown: return {{ClassKind::CrownAny, 0}};
    case Family::Prism: return {{ClassKind::PrismAny, 0}};
    case Family::Star: return {{ClassKind::Hub, 0}, {ClassKind::StarLeaf, 0}};
    case Family::Book: return {{ClassKind::BookHub, 0}, {ClassKind::BookPage, 0}};
    case Family::Helm:
      return {{ClassKind::HelmCenter, 0}, {ClassKind::HelmRim, 0}, {ClassKind::HelmPendant, 0}};
    case Family::CompleteSplit: return {{ClassKind::SplitClique, 0}, {ClassKind::SplitIndependent, 0}};
    case Family::Complete: return {{ClassKind::CompleteAny, 0}};
  }
  return {};
}

// Class of the vertex playing `role` in the generated family graph.
inline VertexClass class_of(const FamilySpec& spec, const VertexRole& role) {
  const std::size_t m = spec.first;
  switch (spec.family) {
    case Family::Path:
      if (role.index == 1 || role.index == m) return {ClassKind::PathEnd, 0};
      return {ClassKind::PathInterior, role.index};
    case Family::Cycle: return {ClassKind::CycleAny, 0};
    case Family::Fan:
      if (role.kind == RoleKind::Hub) return {ClassKind::Hub, 0};
      return {(role.index == 1 || role.index == m) ? ClassKind::FanEnd : ClassKind::FanInterior, 0};
    case Family::Wheel: return {role.kind == RoleKind::Hub ? ClassKind::Hub : ClassKind::Rim, 0};
    case Family::CompleteBipartite:
      return {role.kind == RoleKind::PartitionU ? ClassKind::BipartiteU : ClassKind::BipartiteV, 0};
    case Family::Ladder: return {ClassKind::LadderColumn, role.index};
    case Family::Crown: return {ClassKind::CrownAny, 0};
    case Family::Prism: return {ClassKind::PrismAny, 0};
    case Family::Star: return {role.kind == RoleKind::Hub ? ClassKind::Hub : ClassKind::StarLeaf, 0};
    case Family::Book: return {role.kind == RoleKind::Hub ? ClassKind::BookHub : ClassKind::BookPage, 0};
    case Family::Helm:
      if (role.kind == RoleKind::Hub) return {ClassKind::HelmCenter, 0};
      return {role.kind == RoleKind::Pendant ? ClassKind::HelmPendant : ClassKind::HelmRim, 0};
    case Family::CompleteSplit:
      return {role.kind == RoleKind::Clique ? ClassKind::SplitClique : ClassKind::SplitIndependent, 0};
    case Family::Complete: return {ClassKind::CompleteAny, 0};
  }
  throw ClosedFormError("unhandled family");
}

inline Rational vertex_centrality_closed(const FamilySpec& spec, const VertexClass& cls) {
  using detail::hn;
  using detail::q;
  detail::check_vertex_domain(spec);
  const auto m = static_cast<std::int64_t>(spec.first);
  const auto second = static_cast<std::int64_t>(spec.second);
  auto expect = [&](bool ok) {
    if (!ok) detail::class_mismatch(spec, cls);
  };

  switch (spec.family) {
    case Family::Path:
      if (cls.kind == ClassKind::PathEnd) return hn(m - 1) / q(m - 1);
      expect(cls.kind == ClassKind::PathInterior && cls.index >= 2 && static_cast<std::int64_t>(cls.index) < m);
      {
        const auto i = static_cast<std::int64_t>(cls.index);
        return (hn(i - 1) + hn(m - i)) / q(m - 1);
      }
    case Family::Cycle:
      expect(cls.kind == ClassKind::CycleAny);
      if (m % 2 == 1) return q(2, m - 1) * hn((m - 1) / 2);
      return q(2, m - 1) * (hn((m - 1) / 2) + q(1, m));
    case Family::Fan:
      if (cls.kind == ClassKind::Hub) return Rational(1);
      if (cls.kind == ClassKind::FanEnd) return q(m + 2, 2 * m);
      expect(cls.kind == ClassKind::FanInterior);
      return q(m + 3, 2 * m);
    case Family::Wheel:
      if (cls.kind == ClassKind::Hub) return Rational(1);
      expect(cls.kind == ClassKind::Rim);
      return q(m + 3, 2 * m);
    case Family::CompleteBipartite: {
      const auto n = second;
      if (cls.kind == ClassKind::BipartiteU) return q(m + 2 * n - 1, 2 * (m + n - 1));
      expect(cls.kind == ClassKind::BipartiteV);
      return q(2 * m + n - 1, 2 * (m + n - 1));
    }
    case Family::Ladder:
      expect(cls.kind == ClassKind::LadderColumn && cls.index >= 1 && static_cast<std::int64_t>(cls.index) <= m);
      return detail::ladder_column_sum(m, static_cast<std::int64_t>(cls.index)) / q(2 * m - 1);
    case Family::Crown:
      expect(cls.kind == ClassKind::CrownAny);
      return q(9 * m - 7, 12 * m - 6);
    case Family::Prism:
      expect(cls.kind == ClassKind::PrismAny);
      // See vertex_class_note().
      if (m % 2 == 1) return (4 * hn((m - 1) / 2) + q(3 - m, m + 1)) / q(2 * m - 1);
      return (4 * hn(m / 2) + q(2, m + 2) - q(m + 2, m)) / q(2 * m - 1);
    case Family::Star:
      if (cls.kind == ClassKind::Hub) return Rational(1);
      expect(cls.kind == ClassKind::StarLeaf);
      return q(m + 1, 2 * m);
    case Family::Book:
      if (cls.kind == ClassKind::BookHub) return q(3 * m + 2, 4 * m + 2);
      expect(cls.kind == ClassKind::BookPage);
      return q(5 * (m + 2), 6 * (2 * m + 1));
    case Family::Helm:
      if (cls.kind == ClassKind::HelmCenter) return q(3, 4);
      if (cls.kind == ClassKind::HelmRim) return q(5 * m + 15, 12 * m);
      expect(cls.kind == ClassKind::HelmPendant);
      return q(7 * m + 17, 24 * m);
    case Family::CompleteSplit: {
      const auto n = m;
      const auto k = second;
      if (cls.kind == ClassKind::SplitClique) return Rational(1);
      expect(cls.kind == ClassKind::SplitIndependent);
      return (q(n) + q(k - 1, 2)) / q(n + k - 1);
    }
    case Family::Complete:
      expect(cls.kind == ClassKind::CompleteAny);
      return Rational(1);
  }
  throw ClosedFormError("unhandled family");
}

// Largest vertex centrality. Path and ladder use their dedicated
// middle-vertex expressions; other families take the best class value.
inline Rational max_centrality_closed(const FamilySpec& spec) {
  using detail::hn;
  using detail::q;
  detail::check_vertex_domain(spec);
  const auto m = static_cast<std::int64_t>(spec.first);
  if (spec.family == Family::Path) {
    if (m % 2 == 1) return q(2, m - 1) * hn((m - 1) / 2);
    return q(1, m - 1) * (q(2, m) + 2 * hn((m - 2) / 2));
  }
  if (spec.family == Family::Ladder) {
    if (m % 2 == 1) return q(4, 2 * m - 1) * (hn((m - 1) / 2) + q(1, m + 1) - q(1, 4));
    return q(1, 2 * m - 1) * (4 * hn(m / 2) - q(m + 2, m) + q(2, m + 2));
  }
  Rational best;
  bool first = true;
  for (const auto& cls : vertex_classes(spec)) {
    Rational v = vertex_centrality_closed(spec, cls);
    if (first || v > best) best = v;
    first = false;
  }
  return best;
}

// Classes whose closed-form value equals the maximum.
inline std::vector<VertexClass> maximal_classes(const FamilySpec& spec) {
  Rational best = max_centrality_closed(spec);
  std::vector<VertexClass> out;
  for (const auto& cls : vertex_classes(spec)) {
    if (vertex_centrality_closed(spec, cls) == best) out.push_back(cls);
  }
  return out;
}

// Caveats on the implemented expression: known wrong variants, index
// readings, small-order edge cases. Empty when there is nothing to report.
inline std::string centralization_note(const FamilySpec& spec) {
  const std::size_t m = spec.first;
  switch (spec.family) {
    case Family::Ladder:
      if (m % 2 == 0) {
        return "even m: uses the prefactor 2/((2m-1)(m-1)); the variant with 1/((2m-1)(m-1)) gives half the "
               "brute-force value, and the sum needs H_{m/2} rather than H_{(m-1)/2}";
      }
      return "";
    case Family::Helm:
      if (m == 3) return "m=3: rim vertices (5/6) are maximal, not the hub (3/4)";
      return "";
    case Family::Wheel:
      if (m == 3) return "wheel:3 is K_4, below the classical domain m>3; formula gives 0 as does brute force";
      return "";
    default:
      return "";
  }
}

inline std::string vertex_class_note(const FamilySpec& spec, const VertexClass& cls) {
  const std::size_t m = spec.first;
  if (cls.kind == ClassKind::PrismAny) {
    if (m % 2 == 1) {
      return "odd m: prefactor is 1/(2m-1); the variant with 2/(m-1) disagrees with brute force";
    }
    return "even m: prefactor is 1/(2m-1) and the sum uses H_{m/2}; the variant with 2/(m-1) and "
           "H_{(m-1)/2} disagrees with brute force";
  }
  if (cls.kind == ClassKind::CycleAny && m % 2 == 0) return "even m: H_{(m-1)/2} read as H_{floor((m-1)/2)}";
  return "";
}

}  // namespace harmonic
