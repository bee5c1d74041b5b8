// Acceptance suite: one line per criterion, exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "harmonic/harmonic.hpp"
#include "harmonic/report_format.hpp"
#include "support/oracles.hpp"

using namespace harmonic;

namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
  void check(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
};

std::vector<FamilySpec> all_swept_specs() {
  std::vector<FamilySpec> specs;
  for (Family f : kAllFamilies) {
    auto part = default_sweep(f);
    specs.insert(specs.end(), part.begin(), part.end());
  }
  return specs;
}

Outcome golden_fixture() {
  Outcome o;
  auto f = caterpillar_fixture();
  double best_ms = 1e9;
  CentralityReport report;
  for (int i = 0; i < 5; ++i) {
    auto start = Clock::now();
    report = full_report(f.graph, 1);
    best_ms = std::min(best_ms, millis_since(start));
  }
  o.check(report.centrality[0] == Rational(2, 3), "H(u) != 2/3");
  o.check(report.centrality[5] == Rational(4, 9), "H(x5) != 4/9");
  o.check(report.centrality[1] == Rational(47, 108), "H(x1) != 47/108");
  o.check(report.centrality == f.centrality, "per-vertex multiset differs");
  o.check(reciprocal_sum(f.graph, 0) == Rational(6), "R(u) != 6");
  o.check(report.centralization && *report.centralization == Rational(29, 72), "C_H != 29/72");
  o.check(best_ms < 1.0, "runtime " + std::to_string(best_ms) + " ms >= 1 ms");
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(best_ms) + " ms";
  return o;
}

Outcome closed_form_sweeps() {
  Outcome o;
  auto start = Clock::now();
  SweepOptions opt;
  opt.threads = 1;
  auto records = verify_family(all_swept_specs(), opt);
  double seconds = millis_since(start) / 1000.0;

  std::size_t ladder_even = 0;
  for (const auto& r : records) {
    o.check(r.match, "mismatch at " + r.spec.to_string() + ": closed " + r.closed_value.to_string() + " vs engine " +
                         r.oracle_value.to_string());
    if (r.spec.family == Family::Ladder && r.spec.first % 2 == 0) {
      ++ladder_even;
      o.check(r.note.find("1/((2m-1)(m-1))") != std::string::npos,
              "ladder even record without prefactor note: " + r.spec.to_string());
    }
  }
  o.check(ladder_even == 14, "expected 14 even ladder records");
  o.check(seconds < 60.0, "sweep took " + std::to_string(seconds) + " s");
  if (o.pass) o.detail = std::to_string(records.size()) + " records in " + std::to_string(seconds) + " s";
  return o;
}

Outcome spot_values() {
  Outcome o;
  struct Spot {
    FamilySpec spec;
    Rational value;
  };
  const std::vector<Spot> spots = {
      {FamilySpec::of(Family::Fan, 3), {1, 3}},     {FamilySpec::of(Family::Wheel, 4), {1, 3}},
      {FamilySpec::of(Family::Helm, 3), {2, 5}},    {FamilySpec::of(Family::Book, 3), {8, 21}},
      {FamilySpec::bipartite(3, 2), {1, 4}},        {FamilySpec::of(Family::Ladder, 3), {4, 15}},
      {FamilySpec::of(Family::Ladder, 4), {11, 63}}, {FamilySpec::of(Family::Path, 4), {4, 9}},
      {FamilySpec::of(Family::Path, 5), {13, 36}},
      // k(k-1)/((n+k-1)(n+k-2)) at (4,3) = 6/30; brute force agrees.
      {FamilySpec::split(4, 3), {1, 5}},
  };
  for (const auto& s : spots) {
    Rational closed = centralization_closed(s.spec);
    Rational engine = centralization(generate(s.spec).graph);
    o.check(closed == s.value, s.spec.to_string() + " closed " + closed.to_string() + " != " + s.value.to_string());
    o.check(engine == s.value, s.spec.to_string() + " engine " + engine.to_string() + " != " + s.value.to_string());
  }
  return o;
}

Outcome zero_families() {
  Outcome o;
  for (Family f : {Family::Cycle, Family::Crown, Family::Prism, Family::Complete}) {
    for (const auto& spec : default_sweep(f)) {
      o.check(centralization_closed(spec).is_zero(), spec.to_string() + " closed form nonzero");
      o.check(centralization(generate(spec).graph).is_zero(), spec.to_string() + " engine nonzero");
    }
  }
  return o;
}

Outcome centralization_bounds() {
  Outcome o;
  auto in_range = [](const Rational& c) { return c >= Rational(0) && c <= Rational(1); };
  for (const auto& spec : all_swept_specs()) {
    o.check(in_range(centralization(generate(spec).graph)), spec.to_string() + " out of [0,1]");
  }
  std::size_t samples = 0, disconnected = 0;
  const double probabilities[] = {0.1, 0.3, 0.7};
  for (std::uint64_t seed = 0; seed < 510; ++seed) {
    std::size_t m = 3 + seed % 38;  // 3..40
    Graph g = reference::random_graph(m, probabilities[seed % 3], 1000 + seed);
    if (!reference::is_connected(g)) ++disconnected;
    o.check(in_range(centralization(g)), "random graph seed " + std::to_string(seed) + " out of [0,1]");
    ++samples;
  }
  o.check(samples >= 500, "fewer than 500 random samples");
  o.check(disconnected > 0, "no disconnected samples drawn");
  if (o.pass) o.detail = std::to_string(samples) + " random graphs, " + std::to_string(disconnected) + " disconnected";
  return o;
}

Outcome star_normalization() {
  Outcome o;
  for (std::size_t m = 2; m <= 25; ++m) {
    o.check(centralization(generate(FamilySpec::of(Family::Star, m)).graph) == Rational(1),
            "star:" + std::to_string(m) + " centralization != 1");
  }
  for (std::size_t m = 3; m <= 100; ++m) {
    auto h = harmonic_centralities(generate(FamilySpec::of(Family::Star, m - 1)).graph);
    Rational gap;
    for (const auto& v : h) gap += h[0] - v;
    Rational half(static_cast<std::int64_t>(m) - 2, 2);
    o.check(centralization_denominator(m) == half && gap == half,
            "denominator mismatch at order " + std::to_string(m));
  }
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::size_t graphs = 0;
  for (const auto& spec : all_swept_specs()) {
    Graph g = generate(spec).graph;
    if (g.order() > kOracleMaxOrder) continue;
    o.check(distance_oracle_crosscheck(g), "BFS != Floyd-Warshall on " + spec.to_string());
    ++graphs;
  }
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Graph g = reference::random_graph(5 + seed % 46, seed % 2 ? 0.08 : 0.3, 5000 + seed);
    o.check(distance_oracle_crosscheck(g), "BFS != Floyd-Warshall on random seed " + std::to_string(seed));
    ++graphs;
  }
  if (o.pass) o.detail = std::to_string(graphs) + " graphs";
  return o;
}

Outcome performance() {
  Outcome o;
  Graph prism = generate(FamilySpec::of(Family::Prism, 1000)).graph;
  RenderOptions text;
  auto start = Clock::now();
  std::string sequential = render_report(full_report(prism, 1), {}, text);
  double seq_s = millis_since(start) / 1000.0;

  start = Clock::now();
  std::string parallel = render_report(full_report(prism, 4), {}, text);
  double par_s = millis_since(start) / 1000.0;

  o.check(prism.order() == 2000, "prism order is not 2000");
  o.check(seq_s < 5.0, "single-threaded analysis took " + std::to_string(seq_s) + " s");
  o.check(sequential == parallel, "4-thread output differs from single-threaded");
  if (o.pass) {
    o.detail = "1 thread " + std::to_string(seq_s) + " s, 4 threads " + std::to_string(par_s) + " s, identical";
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"1 golden caterpillar fixture (exact, < 1 ms)", golden_fixture},
      {"2 closed form == engine over all sweeps (< 60 s)", closed_form_sweeps},
      {"3 spot values", spot_values},
      {"4 zero-centralization families", zero_families},
      {"5 0 <= C_H <= 1 on sweeps and 500+ random graphs", centralization_bounds},
      {"6 star normalization and (m-2)/2 denominator", star_normalization},
      {"7 BFS == Floyd-Warshall", oracle_equivalence},
      {"8 2000-vertex prism < 5 s, parallel output identical", performance},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    if (!o.pass) ++failures;
    std::printf("[%s] %s%s%s\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.empty() ? "" : " -- ", o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
