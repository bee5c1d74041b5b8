#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>
#include <vector>

#include "harmonic/graph.hpp"

namespace harmonic {

using Distance = std::uint32_t;
inline constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();

struct DistanceRow {
  Vertex source = 0;
  std::vector<Distance> dist;

  bool reachable(Vertex v) const { return dist[v] != kUnreachable; }
  friend bool operator==(const DistanceRow&, const DistanceRow&) = default;
};

// Unweighted single-source shortest paths. Vertices in other components
// get kUnreachable.
inline DistanceRow bfs_distances(const Graph& g, Vertex source) {
  (void)g.neighbors(source);  // range check
  DistanceRow row{source, std::vector<Distance>(g.order(), kUnreachable)};
  std::vector<Vertex> frontier;
  frontier.reserve(g.order());
  frontier.push_back(source);
  row.dist[source] = 0;
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    Vertex x = frontier[head];
    Distance next = row.dist[x] + 1;
    for (Vertex y : g.neighbors(x)) {
      if (row.dist[y] == kUnreachable) {
        row.dist[y] = next;
        frontier.push_back(y);
      }
    }
  }
  return row;
}

// Number of vertices at each finite distance d >= 1 from `source`;
// element d-1 holds the count for distance d. Trailing zeros are trimmed,
// so size() is the eccentricity within the source's component.
inline std::vector<std::size_t> distance_histogram(const DistanceRow& row) {
  std::vector<std::size_t> counts;
  for (Distance d : row.dist) {
    if (d == 0 || d == kUnreachable) continue;
    if (counts.size() < d) counts.resize(d, 0);
    ++counts[d - 1];
  }
  return counts;
}

inline unsigned default_thread_count() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

// Calls fn(i) for every i in [0, count), spreading indices across
// `threads` workers. fn must only write state owned by index i; callers
// then read results in index order, which makes the outcome independent
// of scheduling. The first exception thrown by any worker is rethrown.
template <typename Fn>
void parallel_for_index(std::size_t count, unsigned threads, Fn&& fn) {
  threads = std::max(1u, threads);
  if (threads == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = count;
    }
  };
  {
    std::vector<std::jthread> pool;
    unsigned spawn = static_cast<unsigned>(std::min<std::size_t>(threads, count));
    pool.reserve(spawn);
    for (unsigned t = 0; t < spawn; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
}

// One BFS per source, row i holding distances from vertex i.
inline std::vector<DistanceRow> all_pairs_distances(const Graph& g, unsigned threads = 1) {
  std::vector<DistanceRow> rows(g.order());
  parallel_for_index(g.order(), threads,
                     [&](std::size_t s) { rows[s] = bfs_distances(g, static_cast<Vertex>(s)); });
  return rows;
}

}  // namespace harmonic
