#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gorenstein/gorenstein.hpp"

namespace gorenstein::cli {

enum ExitCode : int { ok = 0, mismatch = 1, input_error = 2 };

/// Thrown for unreadable input; carries the text printed on stderr.
struct input_failure {
  std::string message;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_failure{path + ": cannot open file"};
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline Multigraph read_graph(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_edge_list(text);
  } catch (const parse_error& e) {
    throw input_failure{path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " + e.what()};
  }
}

inline Json read_json(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw input_failure{path + ": " + e.what()};
  }
}

/// GORENSTEIN_DELTA_MAX when set, otherwise the library default.
inline std::int64_t oracle_delta_max(const Multigraph& g) {
  if (const char* env = std::getenv("GORENSTEIN_DELTA_MAX")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end == env || *end != '\0' || v < 2) throw input_failure{"GORENSTEIN_DELTA_MAX must be an integer >= 2"};
    return v;
  }
  return default_delta_max(g);
}

inline void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

inline void print_graph(std::ostream& out, const Multigraph& g, const std::string& format) {
  if (format == "dot")
    out << to_dot(g);
  else if (format == "json")
    print_json(out, graph_json(g));
  else
    out << to_edge_list(g);
}

struct Options {
  std::string file;
  std::string format = "json";
  std::int64_t delta = 0;
  bool oracle = false;
  bool traces = false;
  unsigned threads = 0;
  CensusBounds bounds;
  std::string suite;
  std::vector<std::int64_t> deltas;
};

inline int run_check(const Options& o, std::ostream& out) {
  const Multigraph g = read_graph(o.file);
  Json j = check_json(g);
  if (o.oracle && is_two_connected(g) && g.edge_count() >= 2) {
    auto p = gorenstein_oracle(g, oracle_delta_max(g));
    j["oracle"] = p ? Json{{"delta", p->delta}, {"point", p->coordinates}} : Json();
  }
  if (o.format == "dot") {
    std::vector<std::string> labels;
    if (j.value("gorenstein", false))
      for (const Edge& e : g.edges()) labels.push_back(std::to_string(j["weights"][std::to_string(e.id.value)].get<int>()));
    out << to_dot(g, labels);
  } else {
    print_json(out, j);
  }
  return ok;
}

inline int run_weights(const Options& o, std::ostream& out) {
  const Multigraph g = read_graph(o.file);
  if (!is_two_connected(g)) {
    out << "none\n";
    return ok;
  }
  auto w = weight_function(g, o.delta);
  if (!w) {
    out << "none\n";
    return ok;
  }
  print_json(out, {{"delta", o.delta}, {"weights", weights_json(*w)}});
  return ok;
}

inline int run_facets(const Options& o, std::ostream& out) {
  const Multigraph g = read_graph(o.file);
  if (g.edge_count() < 2) throw precondition_error("need at least two edges");
  print_json(out, polytope_json(o.oracle ? oracle_polytope(g) : build_polytope(g)));
  return ok;
}

inline int run_glue(const Options& o, std::ostream& out) {
  const Json j = read_json(o.file);
  const Multigraph g = j.contains("seed") ? replay(trace_from_json(j)) : glue_from_json(j);
  print_graph(out, g, o.format == "json" ? "edges" : o.format);
  return ok;
}

inline int run_decompose(const Options& o, std::ostream& out) {
  const Multigraph g = read_graph(o.file);
  if (!is_two_connected(g)) {
    out << "none\n";
    return ok;
  }
  auto t = decompose(g, o.delta);
  if (!t)
    out << "none\n";
  else
    print_json(out, trace_json(*t));
  return ok;
}

inline int run_census(const Options& o, std::ostream& out) {
  auto records = census_records(o.bounds, o.traces, o.threads);
  Json j = census_json(o.bounds, records);
  print_json(out, j);
  return j["mismatches"].empty() ? ok : mismatch;
}

inline int run_verify(const Options& o, std::ostream& out, std::ostream& err) {
  Json j;
  bool clean = true;
  if (o.suite == "equivalence") {
    auto r = verify_equivalence(o.bounds, o.threads);
    clean = r.mismatches.empty();
    j = equivalence_json(r);
  } else if (o.suite == "duality") {
    auto r = verify_facet_duality(o.bounds, o.threads);
    clean = r.mismatches.empty();
    j = duality_json(r);
  } else {
    j = Json::array();
    for (auto d : o.deltas.empty() ? std::vector<std::int64_t>{2, 3, 4} : o.deltas) {
      auto r = verify_classification(d, o.bounds, o.threads);
      clean = clean && r.mismatches.empty();
      j.push_back(classification_json(r));
    }
  }
  print_json(out, j);
  if (!clean) err << "verification found mismatches\n";
  return clean ? ok : mismatch;
}

/// Parses `args` (without the program name) and runs one subcommand.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gorenstein tests for graphic matroid base polytopes", "gorenstein"};
  app.require_subcommand(1);
  Options o;
  auto formats = CLI::IsMember({"json", "dot", "edges"});

  auto* check = app.add_subcommand("check", "Gorenstein verdict of an edge-list file");
  check->add_option("file", o.file, "edge-list file")->required();
  check->add_flag("--oracle", o.oracle, "also run the polyhedral oracle");
  check->add_option("--format", o.format, "json or dot")->check(formats);

  auto* weights = app.add_subcommand("weights", "weight function at a fixed delta");
  weights->add_option("file", o.file, "edge-list file")->required();
  weights->add_option("--delta", o.delta, "dilation")->required()->check(CLI::Range(std::int64_t{2}, std::int64_t{1000}));

  auto* facets = app.add_subcommand("facets", "H-representation with reduced equations");
  facets->add_option("file", o.file, "edge-list file")->required();
  facets->add_flag("--oracle", o.oracle, "facets from the convex hull instead of the graph");

  auto* glue = app.add_subcommand("glue", "glue two graphs, or replay a trace");
  glue->add_option("spec", o.file, "gluing spec or trace (JSON)")->required();
  glue->add_option("--format", o.format, "edges, json or dot")->check(formats);

  auto* dec = app.add_subcommand("decompose", "construction trace for a graph");
  dec->add_option("file", o.file, "edge-list file")->required();
  dec->add_option("--delta", o.delta, "dilation")->required()->check(CLI::Range(std::int64_t{2}, std::int64_t{1000}));

  auto add_bounds = [&](CLI::App* sub) {
    sub->add_option("--max-v", o.bounds.max_vertices, "maximum vertex count")->check(CLI::Range(2, 8));
    sub->add_option("--max-e", o.bounds.max_edges, "maximum edge count")->check(CLI::Range(1, 16));
    sub->add_option("--max-mult", o.bounds.max_multiplicity, "maximum edge multiplicity")->check(CLI::Range(1, 16));
    sub->add_option("--threads", o.threads, "worker threads (0: all cores)");
  };

  auto* census = app.add_subcommand("census", "enumerate 2-connected multigraphs and their verdicts");
  add_bounds(census);
  census->add_flag("--traces", o.traces, "decompose every Gorenstein graph");

  auto* verify = app.add_subcommand("verify", "run a verification harness over the census");
  verify->add_option("suite", o.suite, "equivalence, classification or duality")
      ->required()
      ->check(CLI::IsMember({"equivalence", "classification", "duality"}));
  add_bounds(verify);
  verify->add_option("--delta", o.deltas, "deltas for classification (default 2 3 4)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return input_error;
  }

  try {
    if (check->parsed()) return run_check(o, out);
    if (weights->parsed()) return run_weights(o, out);
    if (facets->parsed()) return run_facets(o, out);
    if (glue->parsed()) return run_glue(o, out);
    if (dec->parsed()) return run_decompose(o, out);
    o.bounds.validate();
    if (census->parsed()) return run_census(o, out);
    return run_verify(o, out, err);
  } catch (const input_failure& e) {
    err << e.message << '\n';
  } catch (const precondition_error& e) {
    err << "precondition violated: " << e.what() << '\n';
  } catch (const Json::exception& e) {
    err << "bad JSON input: " << e.what() << '\n';
  } catch (const criterion_mismatch& e) {
    err << "criterion mismatch: " << e.what() << '\n';
    return mismatch;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << '\n';
  }
  return input_error;
}

}  // namespace gorenstein::cli
