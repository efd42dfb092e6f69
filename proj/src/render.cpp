#include "balgamma/render.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace balgamma {

using nlohmann::json;

json digraph_to_json(const Multidigraph& d) {
  json arcs = json::array();
  for (const auto& a : d.arcs())
    arcs.push_back({{"label", a.label}, {"source", d.vertex(a.source)}, {"target", d.vertex(a.target)}});
  return {{"vertices", d.vertices()}, {"arcs", std::move(arcs)}};
}

Multidigraph digraph_from_json(const json& j) {
  try {
    std::vector<std::string> vertices = j.at("vertices").get<std::vector<std::string>>();
    std::unordered_map<std::string, std::size_t> ids;
    for (std::size_t v = 0; v < vertices.size(); ++v) ids.emplace(vertices[v], v);
    std::vector<Arc> arcs;
    for (const auto& a : j.at("arcs")) {
      auto src = ids.find(a.at("source").get<std::string>());
      auto tgt = ids.find(a.at("target").get<std::string>());
      if (src == ids.end() || tgt == ids.end()) throw ParseError(0, "arc references an undeclared vertex");
      arcs.push_back({a.at("label").get<std::string>(), src->second, tgt->second});
    }
    return Multidigraph(std::move(vertices), std::move(arcs));
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("bad digraph JSON: ") + e.what());
  } catch (const PreconditionError& e) {
    throw ParseError(0, e.what());
  }
}

json gamma_to_json(const Multidigraph& d, const GammaTable& table) {
  json rows = json::array();
  for (std::size_t s = 0; s < table.num_vertices(); ++s) {
    json row = json::array();
    for (std::size_t k = 0; k <= table.max_k(); ++k) row.push_back(table.at(s, k));
    rows.push_back(std::move(row));
  }
  return {{"vertices", d.vertices()},
          {"max_k", table.max_k()},
          {"gamma", std::move(rows)},
          {"uniform_columns", table.uniform_columns()}};
}

std::pair<std::vector<std::string>, GammaTable> gamma_from_json(const json& j) {
  try {
    auto vertices = j.at("vertices").get<std::vector<std::string>>();
    const std::size_t max_k = j.at("max_k").get<std::size_t>();
    const auto& rows = j.at("gamma");
    if (rows.size() != vertices.size()) throw ParseError(0, "gamma has the wrong number of rows");
    GammaTable table(vertices.size(), max_k);
    for (std::size_t s = 0; s < vertices.size(); ++s) {
      if (rows[s].size() != max_k + 1) throw ParseError(0, "gamma row has the wrong length");
      for (std::size_t k = 0; k <= max_k; ++k) table.at(s, k) = rows[s][k].get<Count>();
    }
    return {std::move(vertices), std::move(table)};
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("bad gamma JSON: ") + e.what());
  }
}

std::string render_gamma(const Multidigraph& d, const GammaTable& table, Format format) {
  std::ostringstream os;
  const std::size_t n = table.num_vertices();
  const std::size_t kmax = table.max_k();
  const auto uniform = table.uniform_columns();
  switch (format) {
    case Format::json:
      os << gamma_to_json(d, table).dump(2) << '\n';
      break;
    case Format::csv:
      os << "vertex";
      for (std::size_t k = 0; k <= kmax; ++k) os << ",k" << k;
      os << '\n';
      for (std::size_t s = 0; s < n; ++s) {
        os << d.vertex(s);
        for (std::size_t k = 0; k <= kmax; ++k) os << ',' << table.at(s, k);
        os << '\n';
      }
      os << "uniform";
      for (std::size_t k = 0; k <= kmax; ++k) os << ',' << (uniform[k] ? "true" : "false");
      os << '\n';
      break;
    case Format::table: {
      std::size_t width = 3;
      std::size_t label_width = 7;
      for (std::size_t s = 0; s < n; ++s) {
        label_width = std::max(label_width, d.vertex(s).size());
        for (std::size_t k = 0; k <= kmax; ++k) width = std::max(width, std::to_string(table.at(s, k)).size() + 1);
      }
      os << "gamma_k(s)  rows: vertices s, columns: k\n";
      os << std::left << std::setw(static_cast<int>(label_width)) << "s\\k" << std::right;
      for (std::size_t k = 0; k <= kmax; ++k) os << std::setw(static_cast<int>(width)) << k;
      os << '\n';
      for (std::size_t s = 0; s < n; ++s) {
        os << std::left << std::setw(static_cast<int>(label_width)) << d.vertex(s) << std::right;
        for (std::size_t k = 0; k <= kmax; ++k) os << std::setw(static_cast<int>(width)) << table.at(s, k);
        os << '\n';
      }
      os << std::left << std::setw(static_cast<int>(label_width)) << "uniform" << std::right;
      for (std::size_t k = 0; k <= kmax; ++k) os << std::setw(static_cast<int>(width)) << (uniform[k] ? "y" : "n");
      os << '\n';
      os << "uniform: " << (table.all_uniform() ? "true" : "false") << '\n';
      break;
    }
  }
  return os.str();
}

json trace_to_json(const Multidigraph& d, const InvolutionTrace& trace) {
  json steps = json::array();
  for (const auto& step : trace.steps)
    steps.push_back({{"subset", subset_labels(d, step.subset)},
                     {"p", vertex_ids(d, step.partition.p)},
                     {"q", vertex_ids(d, step.partition.q)},
                     {"stripped", subset_labels(d, step.stripped)},
                     {"inserted", subset_labels(d, step.inserted)}});
  return steps;
}

json report_to_json(const VerifyReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    json entry = {{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}};
    if (!c.counterexample.empty()) entry["counterexample"] = c.counterexample;
    checks.push_back(std::move(entry));
  }
  return {{"passed", report.passed()}, {"checks", std::move(checks)}};
}

std::string render_report(const Multidigraph& d, const VerifyReport& report, Format format) {
  std::ostringstream os;
  if (format == Format::json) {
    json j = report_to_json(report);
    if (!report.passed()) j["digraph"] = digraph_to_json(d);
    os << j.dump(2) << '\n';
    return os.str();
  }
  if (format == Format::csv) {
    os << "check,status,detail\n";
    for (const auto& c : report.checks) os << c.name << ',' << to_string(c.status) << ",\"" << c.detail << "\"\n";
    return os.str();
  }
  for (const auto& c : report.checks) {
    os << '[' << to_string(c.status) << "] " << c.name << ": " << c.detail << '\n';
    if (!c.counterexample.empty()) os << "       counterexample: " << c.counterexample << '\n';
  }
  os << (report.passed() ? "verification passed\n" : "verification FAILED\n");
  if (!report.passed()) os << "# digraph\n" << format_digraph(d);
  return os.str();
}

}  // namespace balgamma
