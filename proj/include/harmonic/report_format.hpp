#pragma once

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "harmonic/centrality.hpp"
#include "harmonic/rational.hpp"
#include "harmonic/verify.hpp"

// Text, JSON and CSV renderings. Rationals are always written exactly as
// "p/q"; a decimal rendering is added alongside when `decimals` is set.

namespace harmonic {

enum class OutputFormat { Text, Json, Csv };

struct RenderOptions {
  OutputFormat format = OutputFormat::Text;
  std::optional<unsigned> decimals;
};

inline std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

namespace detail {

inline std::string text_value(const Rational& r, const RenderOptions& opt) {
  if (!opt.decimals) return r.to_string();
  return r.to_string() + " (" + r.to_decimal(*opt.decimals) + ")";
}

inline std::string join_params(const FamilySpec& spec) {
  std::string s;
  for (std::size_t p : spec.params()) s += (s.empty() ? "" : ",") + std::to_string(p);
  return s;
}

}  // namespace detail

// Optional per-vertex labels (family roles) travel with the report.
struct ReportContext {
  std::optional<std::string> source;  // family spec or file name
  std::vector<std::string> labels;
};

inline std::string render_report(const CentralityReport& report, const ReportContext& ctx, const RenderOptions& opt) {
  auto label = [&](std::size_t v) { return v < ctx.labels.size() ? ctx.labels[v] : std::string(); };
  std::ostringstream out;

  switch (opt.format) {
    case OutputFormat::Json: {
      nlohmann::ordered_json j;
      if (ctx.source) j["source"] = *ctx.source;
      j["order"] = report.order;
      j["size"] = report.size;
      std::vector<std::string> values;
      for (const auto& c : report.centrality) values.push_back(c.to_string());
      j["centralities"] = values;
      if (!ctx.labels.empty()) j["roles"] = ctx.labels;
      j["max"] = report.max_value.to_string();
      j["argmax"] = report.argmax;
      j["centralization"] = report.centralization ? report.centralization->to_string() : "undefined";
      if (opt.decimals) {
        std::vector<std::string> dec;
        for (const auto& c : report.centrality) dec.push_back(c.to_decimal(*opt.decimals));
        j["centralities_decimal"] = dec;
        j["max_decimal"] = report.max_value.to_decimal(*opt.decimals);
        if (report.centralization) j["centralization_decimal"] = report.centralization->to_decimal(*opt.decimals);
      }
      out << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv: {
      out << "quantity,vertex,role,value" << (opt.decimals ? ",decimal" : "") << '\n';
      auto row = [&](std::string_view q, std::string vertex, std::string role, const std::optional<Rational>& v) {
        out << q << ',' << vertex << ',' << csv_escape(role) << ',' << (v ? v->to_string() : "undefined");
        if (opt.decimals) out << ',' << (v ? v->to_decimal(*opt.decimals) : "");
        out << '\n';
      };
      for (std::size_t v = 0; v < report.centrality.size(); ++v) {
        row("centrality", std::to_string(v), label(v), report.centrality[v]);
      }
      for (Vertex v : report.argmax) row("argmax", std::to_string(v), label(v), report.max_value);
      row("max", "", "", report.max_value);
      row("centralization", "", "", report.centralization);
      break;
    }
    case OutputFormat::Text: {
      if (ctx.source) out << "source " << *ctx.source << '\n';
      out << "order " << report.order << '\n';
      out << "size " << report.size << '\n';
      out << "centralization "
          << (report.centralization ? detail::text_value(*report.centralization, opt) : "undefined") << '\n';
      out << "max " << detail::text_value(report.max_value, opt) << '\n';
      out << "argmax";
      for (Vertex v : report.argmax) out << ' ' << v;
      out << '\n';
      for (std::size_t v = 0; v < report.centrality.size(); ++v) {
        out << v;
        if (!label(v).empty()) out << ' ' << label(v);
        out << ' ' << detail::text_value(report.centrality[v], opt) << '\n';
      }
      break;
    }
  }
  return out.str();
}

// A single named value (centralization-only and closed-form output).
inline std::string render_value(std::string_view name, const std::optional<Rational>& value,
                                const std::optional<std::string>& source, const RenderOptions& opt) {
  std::ostringstream out;
  std::string exact = value ? value->to_string() : "undefined";
  switch (opt.format) {
    case OutputFormat::Json: {
      nlohmann::ordered_json j;
      if (source) j["source"] = *source;
      j[std::string(name)] = exact;
      if (opt.decimals && value) j[std::string(name) + "_decimal"] = value->to_decimal(*opt.decimals);
      out << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv:
      out << (source ? "source," : "") << name << (opt.decimals ? ",decimal" : "") << '\n';
      if (source) out << csv_escape(*source) << ',';
      out << exact;
      if (opt.decimals) out << ',' << (value ? value->to_decimal(*opt.decimals) : "");
      out << '\n';
      break;
    case OutputFormat::Text:
      out << (value ? detail::text_value(*value, opt) : exact) << '\n';
      break;
  }
  return out.str();
}

inline nlohmann::ordered_json records_to_json(const std::vector<VerificationRecord>& records,
                                              std::optional<unsigned> decimals = std::nullopt) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    nlohmann::ordered_json j;
    j["family"] = std::string(family_name(r.spec.family));
    j["params"] = r.spec.params();
    j["quantity"] = r.quantity_label();
    j["closed"] = r.closed_value.to_string();
    j["oracle"] = r.oracle_value.to_string();
    j["match"] = r.match;
    j["note"] = r.note;
    if (decimals) j["closed_decimal"] = r.closed_value.to_decimal(*decimals);
    arr.push_back(std::move(j));
  }
  return arr;
}

inline std::string render_records(const std::vector<VerificationRecord>& records, const RenderOptions& opt) {
  std::ostringstream out;
  switch (opt.format) {
    case OutputFormat::Json:
      out << records_to_json(records, opt.decimals).dump(2) << '\n';
      break;
    case OutputFormat::Csv:
      out << "family,params,quantity,closed,oracle,match,note" << (opt.decimals ? ",decimal" : "") << '\n';
      for (const auto& r : records) {
        out << family_name(r.spec.family) << ',' << csv_escape(detail::join_params(r.spec)) << ','
            << csv_escape(r.quantity_label()) << ',' << r.closed_value.to_string() << ','
            << r.oracle_value.to_string() << ',' << (r.match ? "true" : "false") << ',' << csv_escape(r.note);
        if (opt.decimals) out << ',' << r.closed_value.to_decimal(*opt.decimals);
        out << '\n';
      }
      break;
    case OutputFormat::Text: {
      std::size_t mismatches = 0;
      for (const auto& r : records) {
        if (!r.match) ++mismatches;
        out << r.spec.to_string() << ' ' << r.quantity_label() << " closed=" << detail::text_value(r.closed_value, opt)
            << " oracle=" << detail::text_value(r.oracle_value, opt) << ' ' << (r.match ? "ok" : "MISMATCH");
        if (!r.note.empty()) out << "  # " << r.note;
        out << '\n';
      }
      out << records.size() << " records, " << mismatches << " mismatches\n";
      break;
    }
  }
  return out.str();
}

}  // namespace harmonic
