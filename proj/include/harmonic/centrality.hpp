#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "harmonic/distance.hpp"
#include "harmonic/graph.hpp"
#include "harmonic/rational.hpp"

namespace harmonic {

// Reciprocal-distance sums of every vertex over one shared denominator:
// R(u) = numerators[u] / denominator, with denominator = lcm(1..D) where D
// is the largest finite distance in the graph.
struct ReciprocalSums {
  BigInt denominator = 1;
  std::vector<BigInt> numerators;

  Rational at(Vertex u) const { return Rational(numerators[u], denominator); }
};

namespace detail {

inline BigInt lcm_up_to(std::size_t limit) {
  BigInt l = 1;
  for (std::size_t d = 2; d <= limit; ++d) {
    std::size_t r = static_cast<std::size_t>(l % d);
    std::size_t g = d;
    while (r != 0) {
      std::size_t t = g % r;
      g = r;
      r = t;
    }
    if (g != d) l *= d / g;
  }
  return l;
}

// quotients[d-1] = common / d, for d = 1..limit.
inline std::vector<BigInt> unit_fractions(const BigInt& common, std::size_t limit) {
  std::vector<BigInt> q(limit);
  for (std::size_t d = 1; d <= limit; ++d) q[d - 1] = common / d;
  return q;
}

inline BigInt weighted_sum(const std::vector<std::size_t>& histogram, const std::vector<BigInt>& quotients) {
  BigInt total = 0;
  for (std::size_t d = 0; d < histogram.size(); ++d) {
    if (histogram[d] != 0) total += quotients[d] * histogram[d];
  }
  return total;
}

inline void require_order_at_least(const Graph& g, std::size_t m, const char* what) {
  if (g.order() < m) {
    throw std::invalid_argument(std::string(what) + " needs a graph of order >= " + std::to_string(m) +
                                ", got " + std::to_string(g.order()));
  }
}

}  // namespace detail

// H_n = 1 + 1/2 + ... + 1/n, with H_0 = 0.
inline Rational harmonic_number(std::size_t n) {
  if (n == 0) return Rational(0);
  BigInt common = detail::lcm_up_to(n);
  BigInt num = 0;
  for (std::size_t k = 1; k <= n; ++k) num += common / k;
  return Rational(num, common);
}

// Sum over x != u of 1/d(x, u); unreachable vertices contribute nothing.
// The empty sum on a single vertex is 0.
inline Rational reciprocal_sum(const Graph& g, Vertex u) {
  auto histogram = distance_histogram(bfs_distances(g, u));
  BigInt common = detail::lcm_up_to(histogram.size());
  return Rational(detail::weighted_sum(histogram, detail::unit_fractions(common, histogram.size())), common);
}

inline ReciprocalSums reciprocal_sums(const Graph& g, unsigned threads = 1) {
  const std::size_t m = g.order();
  std::vector<std::vector<std::size_t>> histograms(m);
  parallel_for_index(m, threads, [&](std::size_t s) {
    histograms[s] = distance_histogram(bfs_distances(g, static_cast<Vertex>(s)));
  });

  std::size_t diameter = 0;
  for (const auto& h : histograms) diameter = std::max(diameter, h.size());

  ReciprocalSums sums;
  sums.denominator = detail::lcm_up_to(diameter);
  auto quotients = detail::unit_fractions(sums.denominator, diameter);
  sums.numerators.resize(m);
  parallel_for_index(m, threads, [&](std::size_t s) {
    sums.numerators[s] = detail::weighted_sum(histograms[s], quotients);
  });
  return sums;
}

// R(u) / (m - 1). Undefined on a single vertex.
inline Rational harmonic_centrality(const Graph& g, Vertex u) {
  detail::require_order_at_least(g, 2, "harmonic centrality");
  return reciprocal_sum(g, u) / Rational(static_cast<std::int64_t>(g.order() - 1));
}

inline std::vector<Rational> harmonic_centralities(const Graph& g, unsigned threads = 1) {
  detail::require_order_at_least(g, 2, "harmonic centrality");
  ReciprocalSums sums = reciprocal_sums(g, threads);
  BigInt scale = sums.denominator * (g.order() - 1);
  std::vector<Rational> out(g.order());
  parallel_for_index(g.order(), threads,
                     [&](std::size_t u) { out[u] = Rational(sums.numerators[u], scale); });
  return out;
}

// Total centrality gap of the star K_{1,m-1}, the largest possible over
// graphs of order m: (m-1)(1 - m/(2m-2)) = (m-2)/2.
inline Rational centralization_denominator(std::size_t m) {
  if (m <= 2) throw std::invalid_argument("centralization needs order > 2, got " + std::to_string(m));
  return Rational(static_cast<std::int64_t>(m - 2), 2);
}

namespace detail {

// sum_u (max - H(u)) / ((m-2)/2), evaluated on the integer numerators:
// 2 (m * maxN - sum N) / (L (m-1)(m-2)).
inline Rational centralization_from(const ReciprocalSums& sums) {
  const std::size_t m = sums.numerators.size();
  BigInt max_num = *std::max_element(sums.numerators.begin(), sums.numerators.end());
  BigInt gap = max_num * m;
  for (const BigInt& n : sums.numerators) gap -= n;
  return Rational(gap * 2, sums.denominator * (m - 1) * (m - 2));
}

}  // namespace detail

// Freeman centralization of harmonic centrality, normalised by the star.
inline Rational centralization(const Graph& g, unsigned threads = 1) {
  (void)centralization_denominator(g.order());
  return detail::centralization_from(reciprocal_sums(g, threads));
}

struct CentralityReport {
  std::size_t order = 0;
  std::size_t size = 0;
  std::vector<Rational> centrality;
  Rational max_value;
  std::vector<Vertex> argmax;
  std::optional<Rational> centralization;  // only for order > 2
};

inline CentralityReport full_report(const Graph& g, unsigned threads = 1) {
  detail::require_order_at_least(g, 2, "centrality report");
  ReciprocalSums sums = reciprocal_sums(g, threads);

  CentralityReport report;
  report.order = g.order();
  report.size = g.size();
  BigInt scale = sums.denominator * (g.order() - 1);
  report.centrality.resize(g.order());
  parallel_for_index(g.order(), threads,
                     [&](std::size_t u) { report.centrality[u] = Rational(sums.numerators[u], scale); });

  const BigInt& max_num = *std::max_element(sums.numerators.begin(), sums.numerators.end());
  for (Vertex u = 0; u < g.order(); ++u) {
    if (sums.numerators[u] == max_num) report.argmax.push_back(u);
  }
  report.max_value = report.centrality[report.argmax.front()];
  if (g.order() > 2) report.centralization = detail::centralization_from(sums);
  return report;
}

}  // namespace harmonic
