#include "balgamma/commands.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <unordered_set>

#include "balgamma/bijections.hpp"
#include "balgamma/crosscheck.hpp"
#include "balgamma/enumeration.hpp"
#include "balgamma/random.hpp"
#include "balgamma/render.hpp"
#include "balgamma/verify.hpp"
#include "line_reader.hpp"

namespace balgamma {

namespace {

using nlohmann::json;

struct Input {
  Multidigraph digraph;
  std::optional<UndirectedMultigraph> undirected;  // set when the file has `e` records
};

struct Config {
  std::string input;
  std::string format = "table";
  std::uint64_t seed = 0;
  std::size_t workers = 1;
  std::uint64_t budget = std::uint64_t{1} << 34;
  std::optional<std::size_t> k;
  std::string from;
  std::string to;
  bool trace = false;
  bool break_beta = false;
  std::size_t vertices = 4;
  std::size_t circuits = 3;
  std::size_t max_length = 4;
};

std::string read_all(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw ParseError(0, "cannot open '" + path + "'");
    buf << file.rdbuf();
  }
  return buf.str();
}

Input load_input(const std::string& path, std::istream& in) {
  const std::string text = read_all(path, in);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ParseError(0, std::string("invalid JSON: ") + e.what());
    }
    return {digraph_from_json(j), std::nullopt};
  }
  bool has_edges = false;
  detail::for_each_record(text, [&](std::size_t, const std::vector<std::string>& tok) {
    has_edges = has_edges || tok[0] == "e";
  });
  if (has_edges) {
    UndirectedMultigraph g = parse_undirected(text);
    return {bidirect(g), std::move(g)};
  }
  return {parse_digraph(text), std::nullopt};
}

Format parse_format(const std::string& f) {
  if (f == "json") return Format::json;
  if (f == "csv") return Format::csv;
  return Format::table;
}

EnumerationOptions enumeration_options(const Config& c) {
  EnumerationOptions o;
  o.workers = c.workers;
  o.node_budget = c.budget;
  return o;
}

std::size_t vertex_flag(const Multidigraph& d, const std::string& id, const char* flag) {
  if (auto v = d.find_vertex(id)) return *v;
  throw ParseError(0, std::string(flag) + ": unknown vertex '" + id + "'");
}

// ---------------------------------------------------------------------------

int cmd_gamma(const Config& c, std::istream& in, std::ostream& out, std::ostream& err) {
  const Input input = load_input(c.input, in);
  const Multidigraph& d = input.digraph;
  const GammaTable table = gamma_table(d, enumeration_options(c));
  out << render_gamma(d, table, parse_format(c.format));
  if (!is_balanced(d)) {
    err << "warning: digraph is not balanced; gamma_k(s) need not be independent of s\n";
    return kExitOk;
  }
  if (!table.all_uniform()) {
    err << "error: gamma table of a balanced digraph is not uniform\n";
    return kExitVerificationFailed;
  }
  return kExitOk;
}

int cmd_verify(const Config& c, std::istream& in, std::ostream& out, std::ostream&) {
  const Input input = load_input(c.input, in);
  VerifyOptions opts;
  opts.enumeration = enumeration_options(c);
  opts.break_beta = c.break_beta;
  const VerifyReport report = verify_all(input.digraph, opts);
  out << render_report(input.digraph, report, parse_format(c.format));
  return report.passed() ? kExitOk : kExitVerificationFailed;
}

int cmd_bijection(const Config& c, std::istream& in, std::ostream& out, std::ostream& err) {
  const Input input = load_input(c.input, in);
  const Multidigraph& d = input.digraph;
  const std::size_t s = vertex_flag(d, c.from, "--from");
  const std::size_t t = vertex_flag(d, c.to, "--to");
  const std::size_t k = *c.k;
  if (!is_balanced(d)) {
    err << "error: the bijection needs a circuit decomposition, which requires a balanced digraph\n";
    return kExitVerificationFailed;
  }
  const EnumerationOptions opts = enumeration_options(c);
  const CircuitDecomposition dec = circuit_decomposition(d);
  const auto from = list_convergences(d, s, k, opts);
  const auto to = list_convergences(d, t, k, opts);

  std::vector<std::pair<ArcSubset, InvolutionTrace>> pairs;
  std::unordered_set<ArcSubset, ArcSubsetHash> image;
  for (const auto& b : from) {
    auto result = psi(d, dec, b, {s, t});
    image.insert(result.first);
    pairs.push_back(std::move(result));
  }
  const std::unordered_set<ArcSubset, ArcSubsetHash> target(to.begin(), to.end());
  const bool ok = image == target && image.size() == from.size();

  const Format format = parse_format(c.format);
  if (format == Format::json) {
    json list = json::array();
    for (const auto& [img, trace] : pairs) {
      json entry = {{"from", subset_labels(d, trace.start)}, {"to", subset_labels(d, img)}};
      if (c.trace) entry["trace"] = trace_to_json(d, trace);
      list.push_back(std::move(entry));
    }
    out << json{{"s", d.vertex(s)}, {"t", d.vertex(t)}, {"k", k}, {"pairs", std::move(list)}}.dump(2) << '\n';
  } else if (format == Format::csv) {
    out << "from,to,steps\n";
    for (const auto& [img, trace] : pairs)
      out << '"' << format_subset(d, trace.start) << "\",\"" << format_subset(d, img) << "\"," << trace.steps.size()
          << '\n';
  } else {
    out << "psi: Gamma_" << k << '(' << d.vertex(s) << ") -> Gamma_" << k << '(' << d.vertex(t) << "), "
        << pairs.size() << " pairs\n";
    for (const auto& [img, trace] : pairs) {
      out << format_subset(d, trace.start) << " -> " << format_subset(d, img) << '\n';
      if (!c.trace) continue;
      for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const auto& st = trace.steps[i];
        out << "  step " << i + 1 << ": P=" << format_vertices(d, st.partition.p)
            << " Q=" << format_vertices(d, st.partition.q) << " strip " << format_subset(d, st.stripped)
            << " insert " << format_subset(d, st.inserted) << " => " << format_subset(d, st.subset) << '\n';
      }
    }
    out << "circuits:";
    for (const auto& circ : dec.circuits) {
      out << " (";
      for (std::size_t i = 0; i < circ.size(); ++i) out << (i ? "," : "") << d.arc(circ[i]).label;
      out << ')';
    }
    out << '\n';
  }
  if (!ok) {
    err << "error: psi image differs from Gamma_k(t)\n";
    return kExitVerificationFailed;
  }
  return kExitOk;
}

int cmd_gen(const Config& c, std::ostream& out) {
  BalancedParams p;
  p.vertices = c.vertices;
  p.circuits = c.circuits;
  p.max_length = c.max_length;
  p.seed = c.seed;
  const Multidigraph d = random_balanced(p);
  if (parse_format(c.format) == Format::json) {
    out << digraph_to_json(d).dump(2) << '\n';
  } else {
    out << "# balanced digraph: vertices=" << p.vertices << " circuits=" << p.circuits
        << " max-length=" << p.max_length << " seed=" << p.seed << '\n'
        << format_digraph(d);
  }
  return kExitOk;
}

int cmd_crosscheck(const Config& c, std::istream& in, std::ostream& out) {
  const Input input = load_input(c.input, in);
  const Multidigraph& d = input.digraph;
  const std::size_t n = d.num_vertices();
  const EnumerationOptions opts = enumeration_options(c);
  const GammaTable gamma = gamma_table(d, opts);
  bool ok = true;
  json j = json::object();

  json mt = json::array();
  for (std::size_t s = 0; s < n; ++s) {
    const Count det = matrix_tree_to_root(d, s);
    const Count g = gamma.at(s, n - 1);
    ok = ok && det == g;
    mt.push_back({{"vertex", d.vertex(s)}, {"matrix_tree", det}, {"gamma", g}, {"match", det == g}});
  }
  j["matrix_tree"] = mt;

  if (input.undirected) {
    const auto& g = *input.undirected;
    const std::size_t e = g.edges.size();
    json orient = json::array();
    for (std::size_t s = 0; s < n; ++s) {
      const Count count = count_unique_sink_orientations(g, s);
      ok = ok && count == gamma.at(s, e);
      orient.push_back({{"vertex", d.vertex(s)}, {"orientations", count}, {"gamma", gamma.at(s, e)},
                        {"match", count == gamma.at(s, e)}});
    }
    j["orientations"] = orient;
    j["orientations_uniform"] = gamma.column_uniform(e);
  }

  const MaxAcyclic best = max_acyclic(d, opts);
  json mx = {{"max_acyclic_size", best.size}, {"max_acyclic_count", best.count},
             {"min_feedback_arc_set_size", d.num_arcs() - best.size}};
  if (n > 0 && is_balanced(d) && is_weakly_connected(d)) {
    const std::size_t conv = max_convergence_size(d, 0, opts);
    ok = ok && conv == best.size;
    mx["max_convergence_size"] = conv;
    mx["match"] = conv == best.size;
    // Reported only: how many minimum feedback arc sets vs. gamma at that size.
    mx["gamma_at_max"] = gamma.at(0, conv);
  } else {
    mx["match"] = nullptr;
    mx["note"] = "size comparison applies to weakly connected balanced digraphs only";
  }
  j["max_acyclic"] = mx;
  j["passed"] = ok;

  if (parse_format(c.format) == Format::json) {
    out << j.dump(2) << '\n';
  } else {
    for (const auto& row : j["matrix_tree"])
      out << "matrix-tree  s=" << row["vertex"].get<std::string>() << "  det=" << row["matrix_tree"]
          << "  gamma_" << (n - 1) << "=" << row["gamma"] << (row["match"].get<bool>() ? "  ok" : "  MISMATCH") << '\n';
    if (j.contains("orientations")) {
      for (const auto& row : j["orientations"])
        out << "orientations s=" << row["vertex"].get<std::string>() << "  unique-sink=" << row["orientations"]
            << "  gamma_" << input.undirected->edges.size() << "=" << row["gamma"]
            << (row["match"].get<bool>() ? "  ok" : "  MISMATCH") << '\n';
      out << "orientations uniform: " << (j["orientations_uniform"].get<bool>() ? "true" : "false") << '\n';
    }
    out << "max-acyclic  size=" << best.size << "  count=" << best.count
        << "  min-feedback-arc-set=" << d.num_arcs() - best.size;
    if (mx.contains("max_convergence_size"))
      out << "  max-convergence=" << mx["max_convergence_size"] << (mx["match"].get<bool>() ? "  ok" : "  MISMATCH")
          << "\nfeedback-arc-sets of size " << d.num_arcs() - best.size << ": " << best.count
          << " (gamma at that size: " << mx["gamma_at_max"] << ")";
    else
      out << "  (" << mx["note"].get<std::string>() << ")";
    out << '\n' << (ok ? "crosscheck passed\n" : "crosscheck FAILED\n");
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_maxacyclic(const Config& c, std::istream& in, std::ostream& out) {
  const Input input = load_input(c.input, in);
  const Multidigraph& d = input.digraph;
  const MaxAcyclic best = max_acyclic(d, enumeration_options(c));
  if (parse_format(c.format) == Format::json) {
    out << json{{"max_size", best.size}, {"count", best.count},
                {"min_feedback_arc_set_size", d.num_arcs() - best.size}}
               .dump(2)
        << '\n';
  } else {
    out << "max acyclic size: " << best.size << '\n'
        << "count: " << best.count << '\n'
        << "min feedback arc set size: " << d.num_arcs() - best.size << '\n';
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact enumeration of convergences in balanced multidigraphs"};
  app.require_subcommand(1);
  Config c;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", c.input, "Digraph file, or - for standard input")->required();
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
    sub->add_option("--workers", c.workers, "Search threads")->check(CLI::PositiveNumber);
    sub->add_option("--budget", c.budget, "Maximum search-tree nodes")->check(CLI::PositiveNumber);
  };

  auto* gamma = app.add_subcommand("gamma", "Print gamma_k(s) for every vertex s and size k");
  add_common(gamma);
  auto* verify = app.add_subcommand("verify", "Run every invariant suite on the input");
  add_common(verify);
  verify->add_flag("--break-beta", c.break_beta, "Corrupt the crossing bijection (tests the failure path)")
      ->group("");
  auto* bij = app.add_subcommand("bijection", "List the bijection psi: Gamma_k(from) -> Gamma_k(to)");
  add_common(bij);
  bij->add_option("--from", c.from, "Source vertex s")->required();
  bij->add_option("--to", c.to, "Target vertex t")->required();
  bij->add_option("--k", c.k, "Subset size")->required();
  bij->add_flag("--trace", c.trace, "Show every application of phi^-1");
  auto* gen = app.add_subcommand("gen", "Emit a random balanced digraph");
  gen->add_option("--vertices,-n", c.vertices, "Number of vertices")->check(CLI::PositiveNumber);
  gen->add_option("--circuits", c.circuits, "Number of closed walks");
  gen->add_option("--max-length", c.max_length, "Longest closed walk")->check(CLI::PositiveNumber);
  gen->add_option("--seed", c.seed, "Generator seed");
  gen->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"table", "json"}));
  auto* cross = app.add_subcommand("crosscheck", "Compare against Matrix-Tree, orientation and max-acyclic oracles");
  add_common(cross);
  auto* maxa = app.add_subcommand("maxacyclic", "Largest acyclic subset and minimum feedback arc set");
  add_common(maxa);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParseError;
  }

  try {
    if (gamma->parsed()) return cmd_gamma(c, in, out, err);
    if (verify->parsed()) return cmd_verify(c, in, out, err);
    if (bij->parsed()) return cmd_bijection(c, in, out, err);
    if (gen->parsed()) return cmd_gen(c, out);
    if (cross->parsed()) return cmd_crosscheck(c, in, out);
    if (maxa->parsed()) return cmd_maxacyclic(c, in, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParseError;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kExitBudgetExceeded;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerificationFailed;
  }
  return kExitParseError;
}

}  // namespace balgamma
