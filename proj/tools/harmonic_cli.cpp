// harmonic: command-line front end.
//
//   harmonic generate <family:params> [-o FILE]
//   harmonic analyze (<edge-list file> | --family <family:params>) [--centralization-only]
//   harmonic closed-form <family:params> [--classes]
//   harmonic verify [--family all|<name>] [--min N] [--max N] [--classes]
//
// Global: --format text|json|csv, -o/--output, --decimals N, --threads N.
// Exit codes: 0 ok, 1 verification mismatch, 2 usage or input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "harmonic/harmonic.hpp"
#include "harmonic/report_format.hpp"

namespace {

using namespace harmonic;

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  std::string format = "text";
  std::string output;
  std::optional<unsigned> decimals;
  unsigned threads = default_thread_count();

  RenderOptions render() const {
    RenderOptions r;
    r.format = format == "json" ? OutputFormat::Json : format == "csv" ? OutputFormat::Csv : OutputFormat::Text;
    r.decimals = decimals;
    return r;
  }
};

void emit(const GlobalOptions& g, const std::string& text) {
  if (g.output.empty() || g.output == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(g.output, std::ios::binary);
  if (!out) throw UsageError("cannot open '" + g.output + "' for writing");
  out << text;
  if (!out) throw UsageError("failed writing '" + g.output + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

FamilySpec parse_spec_warn(const std::string& text) {
  FamilySpec spec = parse_family_spec(text);
  if (auto warning = domain_warning(spec)) std::cerr << "warning: " << *warning << '\n';
  return spec;
}

std::vector<std::string> role_labels(const std::vector<VertexRole>& roles) {
  std::vector<std::string> out;
  out.reserve(roles.size());
  for (const auto& r : roles) out.push_back(r.to_string());
  return out;
}

int run_generate(const GlobalOptions& g, const std::string& spec_text) {
  FamilySpec spec = parse_spec_warn(spec_text);
  FamilyGraph fg = generate(spec);
  RenderOptions opt = g.render();
  std::string text;
  if (opt.format == OutputFormat::Json) {
    nlohmann::ordered_json j;
    j["family"] = spec.to_string();
    j["order"] = fg.graph.order();
    j["size"] = fg.graph.size();
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (auto [u, v] : fg.graph.edges()) edges.push_back({u, v});
    j["edges"] = edges;
    j["roles"] = role_labels(fg.roles);
    text = j.dump(2) + "\n";
  } else if (opt.format == OutputFormat::Csv) {
    std::ostringstream out;
    out << "u,v\n";
    for (auto [u, v] : fg.graph.edges()) out << u << ',' << v << '\n';
    text = out.str();
  } else {
    text = "# " + spec.to_string() + "\n" + serialize_edge_list(fg.graph);
  }
  emit(g, text);
  return 0;
}

int run_analyze(const GlobalOptions& g, const std::string& input, const std::string& family, bool only_centralization) {
  if (input.empty() == family.empty()) throw UsageError("analyze needs exactly one of <input file> or --family");

  std::optional<Graph> graph;
  ReportContext ctx;
  if (!family.empty()) {
    FamilySpec spec = parse_spec_warn(family);
    FamilyGraph fg = generate(spec);
    graph = std::move(fg.graph);
    ctx.source = spec.to_string();
    ctx.labels = role_labels(fg.roles);
  } else {
    graph = parse_edge_list(read_file(input));
    ctx.source = input;
  }
  if (graph->order() < 2) throw UsageError("harmonic centrality needs at least 2 vertices");

  RenderOptions opt = g.render();
  if (only_centralization) {
    std::optional<Rational> value;
    if (graph->order() > 2) value = centralization(*graph, g.threads);
    emit(g, render_value("centralization", value, ctx.source, opt));
    return 0;
  }
  emit(g, render_report(full_report(*graph, g.threads), ctx, opt));
  return 0;
}

int run_closed_form(const GlobalOptions& g, const std::string& spec_text, bool classes) {
  FamilySpec spec = parse_spec_warn(spec_text);
  Rational value = centralization_closed(spec);
  RenderOptions opt = g.render();
  if (!classes) {
    emit(g, render_value("centralization", value, spec.to_string(), opt));
    return 0;
  }

  std::ostringstream out;
  auto decimal = [&](const Rational& r) { return opt.decimals ? r.to_decimal(*opt.decimals) : std::string(); };
  if (opt.format == OutputFormat::Json) {
    nlohmann::ordered_json j;
    j["source"] = spec.to_string();
    j["centralization"] = value.to_string();
    j["max"] = max_centrality_closed(spec).to_string();
    nlohmann::ordered_json cls = nlohmann::ordered_json::object();
    for (const auto& c : vertex_classes(spec)) cls[c.to_string()] = vertex_centrality_closed(spec, c).to_string();
    j["classes"] = cls;
    out << j.dump(2) << '\n';
  } else if (opt.format == OutputFormat::Csv) {
    out << "quantity,value" << (opt.decimals ? ",decimal" : "") << '\n';
    auto row = [&](const std::string& q, const Rational& r) {
      out << csv_escape(q) << ',' << r.to_string();
      if (opt.decimals) out << ',' << decimal(r);
      out << '\n';
    };
    row("centralization", value);
    row("max", max_centrality_closed(spec));
    for (const auto& c : vertex_classes(spec)) row("vertex:" + c.to_string(), vertex_centrality_closed(spec, c));
  } else {
    auto line = [&](const std::string& q, const Rational& r) {
      out << q << ' ' << r.to_string();
      if (opt.decimals) out << " (" << decimal(r) << ')';
      out << '\n';
    };
    line("centralization", value);
    line("max", max_centrality_closed(spec));
    for (const auto& c : vertex_classes(spec)) line(c.to_string(), vertex_centrality_closed(spec, c));
  }
  emit(g, out.str());
  return 0;
}

int run_verify(const GlobalOptions& g, const std::string& family, std::optional<std::size_t> lo,
               std::optional<std::size_t> hi, bool classes) {
  std::vector<Family> families;
  if (family == "all") {
    families.assign(kAllFamilies.begin(), kAllFamilies.end());
  } else {
    bool found = false;
    for (Family f : kAllFamilies) {
      if (family_name(f) == family) {
        families.push_back(f);
        found = true;
      }
    }
    if (!found) throw UsageError("unknown family '" + family + "'");
  }
  if (lo && hi && *lo > *hi) throw UsageError("--min exceeds --max");

  std::vector<FamilySpec> specs;
  for (Family f : families) {
    std::vector<FamilySpec> part;
    if (!lo && !hi) {
      part = default_sweep(f);
    } else if (family_arity(f) == 1) {
      part = sweep_specs(f, {lo.value_or(3), hi.value_or(30)});
    } else {
      part = sweep_specs(f, {lo.value_or(2), hi.value_or(15)}, ParameterRange{lo.value_or(1), hi.value_or(15)});
    }
    specs.insert(specs.end(), part.begin(), part.end());
  }

  SweepOptions options;
  options.vertex_classes = classes;
  options.threads = g.threads;
  auto records = verify_family(specs, options);
  emit(g, render_records(records, g.render()));
  if (!all_match(records)) {
    std::cerr << "verification failed: closed form and engine disagree\n";
    return kExitMismatch;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact harmonic centrality and harmonic centralization of graphs"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("-o,--output", g.output, "Output path (default stdout)");
  app.add_option("--decimals", g.decimals, "Also render values as decimals with N digits");
  app.add_option("--threads", g.threads, "Worker threads for all-pairs BFS")->check(CLI::Range(1u, 1024u));

  std::string spec_text;
  auto* gen = app.add_subcommand("generate", "Write a family graph as an edge list");
  gen->add_option("spec", spec_text, "Family spec, e.g. wheel:6 or split:4,3")->required();

  std::string input;
  std::string family;
  bool only_centralization = false;
  auto* analyze = app.add_subcommand("analyze", "Harmonic centrality report of a graph");
  analyze->add_option("input", input, "Edge-list file");
  analyze->add_option("--family", family, "Analyze a generated family graph instead of a file");
  analyze->add_flag("--centralization-only", only_centralization, "Emit only the centralization");

  std::string closed_spec;
  bool closed_classes = false;
  auto* closed = app.add_subcommand("closed-form", "Closed-form centralization of a family member");
  closed->add_option("spec", closed_spec, "Family spec")->required();
  closed->add_flag("--classes", closed_classes, "Also list the per-vertex-class values");

  std::string verify_family_name = "all";
  std::optional<std::size_t> verify_min;
  std::optional<std::size_t> verify_max;
  bool verify_classes = false;
  auto* verify = app.add_subcommand("verify", "Compare closed forms against the brute-force engine");
  verify->add_option("--family", verify_family_name, "Family name or 'all'");
  verify->add_option("--min", verify_min, "Smallest parameter");
  verify->add_option("--max", verify_max, "Largest parameter");
  verify->add_flag("--classes", verify_classes, "Also check per-vertex-class and max centralities");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen) return run_generate(g, spec_text);
    if (*analyze) return run_analyze(g, input, family, only_centralization);
    if (*closed) return run_closed_form(g, closed_spec, closed_classes);
    if (*verify) return run_verify(g, verify_family_name, verify_min, verify_max, verify_classes);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
