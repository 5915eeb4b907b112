// Copyright 2026 The ecdel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: solve, detect, classify, generate, bench.
// Exit codes: 0 = yes/optimum/success, 1 = no, 2 = usage, parse, resource
// or disagreement errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ecdel/classify.hpp"
#include "ecdel/generate.hpp"
#include "ecdel/graph.hpp"
#include "ecdel/pattern.hpp"
#include "ecdel/solve.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace ecdel::cli {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SpecFlags {
  std::string pattern = "path";
  int len = 0;
  int colors = 0;
  std::string mode = "induced";

  bool given() const { return len > 0 || colors > 0; }

  PatternSpec build() const {
    if (len <= 0 || colors <= 0) throw UsageError("--len and --colors are required");
    PatternSpec s;
    s.kind = pattern == "cycle" ? PatternKind::Cycle : PatternKind::Path;
    s.length = len;
    s.colors = colors;
    s.mode = mode == "subgraph" ? OccurrenceMode::Subgraph : OccurrenceMode::Induced;
    s.validate();
    return s;
  }
};

void add_spec_flags(CLI::App* app, SpecFlags& f) {
  app->add_option("--pattern", f.pattern, "path or cycle")
      ->check(CLI::IsMember({"path", "cycle"}));
  app->add_option("--len", f.len, "pattern length (vertices)");
  app->add_option("--colors", f.colors, "exact number of distinct colors");
  app->add_option("--mode", f.mode, "induced or subgraph")
      ->check(CLI::IsMember({"induced", "subgraph"}));
}

void add_limit_flags(CLI::App* app, Limits& limits) {
  app->add_option("--max-occurrences", limits.occurrence_cap, "occurrence enumeration cap")
      ->capture_default_str();
  app->add_option("--max-brute-edges", limits.brute_edge_bound, "brute-force edge bound")
      ->capture_default_str();
  app->add_option("--max-cnd-bundles", limits.cnd_bundle_cap, "bundle count cap for cnd")
      ->capture_default_str();
  app->add_option("--max-branch-nodes", limits.branch_node_cap, "search tree node cap")
      ->capture_default_str();
  app->add_option("--cnd-gamma-threshold", limits.cnd_gamma_threshold,
                  "auto picks cnd only when gamma^2+gamma is at most this")
      ->capture_default_str();
}

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ColoredGraph read_graph(const std::string& path) { return parse_graph(read_text(path)); }

json spec_json(const PatternSpec& s) {
  json j;
  j["pattern"] = s.kind == PatternKind::Path ? "path" : "cycle";
  j["len"] = s.length;
  j["colors"] = s.colors;
  j["mode"] = s.mode == OccurrenceMode::Induced ? "induced" : "subgraph";
  return j;
}

PatternSpec spec_from_json(const json& j) {
  SpecFlags f;
  f.pattern = j.at("pattern").get<std::string>();
  f.len = j.at("len").get<int>();
  f.colors = j.at("colors").get<int>();
  f.mode = j.value("mode", std::string("induced"));
  return f.build();
}

std::string meta_path(const std::string& graph_path) { return graph_path + ".meta.json"; }

std::optional<json> load_meta(const std::string& graph_path) {
  if (graph_path == "-") return std::nullopt;
  auto p = meta_path(graph_path);
  if (!fs::exists(p)) return std::nullopt;
  return json::parse(read_text(p));
}

json edge_list(const DeletionSet& s) {
  json out = json::array();
  for (const auto& e : s) out.push_back({e.u + 1, e.v + 1});
  return out;
}

std::string edge_text(const DeletionSet& s) {
  std::string out;
  for (const auto& e : s) {
    if (!out.empty()) out += ' ';
    out += "{" + std::to_string(e.u + 1) + "," + std::to_string(e.v + 1) + "}";
  }
  return out.empty() ? "(none)" : out;
}

Algorithm parse_algorithm(const std::string& name) {
  if (name == "brute") return Algorithm::Brute;
  if (name == "branch") return Algorithm::Branch;
  if (name == "cnd") return Algorithm::Cnd;
  if (name == "t-class") return Algorithm::TClass;
  if (name == "auto") return Algorithm::Auto;
  throw UsageError("unknown algorithm '" + name + "'");
}

std::string status_text(SolveStatus s) {
  switch (s) {
    case SolveStatus::Yes: return "yes";
    case SolveStatus::No: return "no";
    case SolveStatus::Optimum: return "optimum";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// solve

struct SolveArgs {
  std::string input;
  SpecFlags spec;
  std::optional<int> k;
  std::string algo = "auto";
  std::string format = "human";
  Limits limits;
  bool no_restrict = false;
};

int run_solve(const SolveArgs& a) {
  SolveRequest req;
  req.graph = read_graph(a.input);
  auto meta = load_meta(a.input);
  if (a.spec.given()) {
    req.spec = a.spec.build();
  } else if (meta && meta->contains("spec")) {
    req.spec = spec_from_json(meta->at("spec"));
  } else {
    throw UsageError("no pattern given: pass --len/--colors or provide " + meta_path(a.input));
  }
  req.k = a.k;
  req.algorithm = parse_algorithm(a.algo);
  req.limits = a.limits;
  req.restrict_to_conflict_edges = !a.no_restrict;
  const Algorithm used = resolve_algorithm(req);
  req.algorithm = used;
  auto r = solve(req);
  if (a.format == "structured") {
    json out;
    out["status"] = status_text(r.status);
    out["algorithm"] = std::string(to_string(used));
    out["spec"] = spec_json(req.spec);
    out["k"] = a.k ? json(*a.k) : json(nullptr);
    out["size"] = r.feasible() ? json(r.solution.size()) : json(nullptr);
    out["solution"] = r.feasible() ? edge_list(r.solution) : json(nullptr);
    out["stats"] = {{"nodes_explored", r.stats.nodes_explored},
                    {"patterns_enumerated", r.stats.patterns_enumerated},
                    {"subsets_tried", r.stats.subsets_tried}};
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "spec: " << to_string(req.spec) << '\n'
              << "algorithm: " << to_string(used) << '\n'
              << "status: " << status_text(r.status) << '\n';
    if (r.feasible()) {
      std::cout << "size: " << r.solution.size() << '\n'
                << "solution: " << edge_text(r.solution) << '\n';
    }
    std::cout << "nodes: " << r.stats.nodes_explored
              << ", patterns: " << r.stats.patterns_enumerated
              << ", subsets: " << r.stats.subsets_tried << ", time: " << std::fixed
              << std::setprecision(1) << r.stats.elapsed_ms << " ms\n";
  }
  return r.feasible() ? kExitOk : kExitNo;
}

// ---------------------------------------------------------------------------
// detect

struct DetectArgs {
  std::string input;
  SpecFlags spec;
  std::string format = "human";
  bool count_only = false;
  bool first_only = false;
  std::size_t cap = kDefaultOccurrenceCap;
};

int run_detect(const DetectArgs& a) {
  auto g = read_graph(a.input);
  auto spec = a.spec.build();
  std::vector<Occurrence> occs;
  std::size_t count = 0;
  if (a.first_only) {
    if (auto o = find_one(g, spec)) occs.push_back(*o);
    count = occs.size();
  } else if (a.count_only) {
    count = count_occurrences(g, spec);
  } else {
    occs = enumerate(g, spec, a.cap);
    count = occs.size();
  }
  if (a.format == "structured") {
    json out;
    out["spec"] = spec_json(spec);
    out["count"] = count;
    if (!a.count_only) {
      json list = json::array();
      for (const auto& o : occs) {
        json vs = json::array();
        for (VertexId v : o.vertices) vs.push_back(v + 1);
        list.push_back(vs);
      }
      out["occurrences"] = list;
    }
    std::cout << out.dump(2) << '\n';
  } else if (a.count_only) {
    std::cout << count << '\n';
  } else {
    for (const auto& o : occs) std::cout << format_occurrence(o) << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// classify

struct ClassifyArgs {
  std::string input;
  SpecFlags spec;
  std::string format = "human";
};

json vertex_list(const std::vector<VertexId>& vs) {
  json out = json::array();
  for (VertexId v : vs) out.push_back(v + 1);
  return out;
}

int run_classify(const ClassifyArgs& a) {
  auto g = read_graph(a.input);
  auto part = colored_classes(g);
  json out;
  out["n"] = g.n();
  out["m"] = g.m();
  out["c"] = g.c();
  out["gamma"] = part.gamma();
  json classes = json::array();
  for (std::size_t i = 0; i < part.classes.size(); ++i) {
    json cls;
    cls["vertices"] = vertex_list(part.classes[i]);
    cls["kind"] = part.kinds[i].clique ? "clique" : "independent";
    if (part.kinds[i].clique) cls["color"] = part.kinds[i].color;
    classes.push_back(cls);
  }
  out["classes"] = classes;
  std::optional<PatternSpec> spec;
  if (a.spec.given()) spec = a.spec.build();
  if (!spec) {
    if (auto meta = load_meta(a.input); meta && meta->contains("spec")) {
      spec = spec_from_json(meta->at("spec"));
    }
  }
  if (spec) {
    auto st = cascade_status(g, *spec);
    json c;
    c["spec"] = spec_json(*spec);
    c["status"] = std::string(to_string(st.status));
    c["conflict_edges"] = st.conflict.size();
    if (st.witness) c["witness"] = format_occurrence(*st.witness);
    c["spec_color_diverse"] = spec_is_color_diverse(*spec);
    out["cascade"] = c;
  }
  bool bicolored = std::all_of(g.edges().begin(), g.edges().end(),
                               [](const ColoredEdge& e) { return e.color <= 2; });
  if (bicolored) {
    auto dec = recognize_T(g);
    json t;
    t["accepted"] = dec.accepted();
    json comps = json::array();
    for (const auto& d : dec.components) {
      json cj;
      cj["shape"] = std::string(to_string(d.shape));
      cj["vertices"] = vertex_list(d.vertices);
      if (d.shape == ComponentShape::RbFence) {
        cj["k1"] = vertex_list(d.k1);
        cj["k2"] = vertex_list(d.k2);
        DeletionSet m(d.matching.begin(), d.matching.end());
        cj["matching"] = edge_list(m);
      } else if (d.shape == ComponentShape::RbCliqueStar) {
        cj["red_clique"] = vertex_list(d.clique);
        json blues = json::array();
        for (const auto& b : d.blue_cliques) {
          blues.push_back({{"center", b.center + 1}, {"members", vertex_list(b.members)}});
        }
        cj["blue_cliques"] = blues;
      } else if (d.witness) {
        cj["witness"] = {{"type", std::string(1, d.witness->type)},
                         {"vertices", vertex_list(d.witness->vertices)}};
      }
      comps.push_back(cj);
    }
    t["components"] = comps;
    out["class_t"] = t;
  } else {
    out["class_t"] = nullptr;
  }

  if (a.format == "structured") {
    std::cout << out.dump(2) << '\n';
    return kExitOk;
  }
  std::cout << "vertices: " << g.n() << ", edges: " << g.m() << ", colors: " << g.c() << '\n';
  std::cout << "gamma: " << part.gamma() << '\n';
  for (std::size_t i = 0; i < part.classes.size(); ++i) {
    std::cout << "class " << i + 1 << ": {";
    for (std::size_t j = 0; j < part.classes[i].size(); ++j) {
      std::cout << (j ? " " : "") << part.classes[i][j] + 1;
    }
    std::cout << "} " << (part.kinds[i].clique ? "clique" : "independent");
    if (part.kinds[i].clique) std::cout << " color " << part.kinds[i].color;
    std::cout << '\n';
  }
  if (out.contains("cascade")) {
    const auto& c = out["cascade"];
    std::cout << "cascade (" << to_string(*spec) << "): " << c["status"].get<std::string>();
    if (c.contains("witness")) std::cout << ", witness " << c["witness"].get<std::string>();
    std::cout << '\n';
  }
  if (bicolored) {
    const auto& comps = out["class_t"]["components"];
    for (std::size_t i = 0; i < comps.size(); ++i) {
      std::cout << "component " << i + 1 << ": " << comps[i]["shape"].get<std::string>();
      if (comps[i].contains("witness")) {
        std::cout << " (forbidden " << comps[i]["witness"]["type"].get<std::string>() << " on";
        for (const auto& v : comps[i]["witness"]["vertices"]) std::cout << ' ' << v.get<int>();
        std::cout << ')';
      }
      std::cout << '\n';
    }
  } else {
    std::cout << "class T: not bicolored\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// generate

struct GenerateArgs {
  std::string reduction;
  std::string output;
  std::string format = "human";
  int len = 0;
  int colors = 0;
  int d = 1;
  std::optional<int> k;
  std::string cnf;
  std::string graph;
  std::string parts;
  bool subdivide = false;
  std::string sets;
  std::string hs_file;
  std::string fixed = "published";
};

json labels_json(const GeneratedInstance& inst) {
  json out;
  for (const auto& [name, v] : inst.labels) out[name] = v + 1;
  return out;
}

json meta_json(const GeneratedInstance& inst) {
  json m;
  m["format"] = "ecdel-meta/1";
  m["reduction"] = inst.reduction;
  m["spec"] = spec_json(inst.spec);
  m["k"] = inst.k;
  json params;
  for (const auto& [key, value] : inst.params) params[key] = value;
  m["params"] = params;
  json val;
  val["ok"] = inst.validation.ok();
  json facts;
  for (const auto& [key, value] : inst.validation.facts) facts[key] = value;
  val["facts"] = facts;
  val["failures"] = inst.validation.failures;
  m["validation"] = val;
  m["labels"] = labels_json(inst);
  return m;
}

HittingSetInstance load_hs(const GenerateArgs& a) {
  HittingSetInstance hs;
  if (!a.sets.empty()) {
    hs = parse_hitting_set(a.sets, 0, ';');
  } else if (!a.hs_file.empty()) {
    hs = parse_hitting_set(read_text(a.hs_file), 0);
  } else {
    throw UsageError("--sets or --hs is required");
  }
  hs.k = a.k ? *a.k : hs_brute(hs);
  hs.validate();
  return hs;
}

HsFixedEdges fixed_variant(const std::string& name) {
  return name == "closed" ? HsFixedEdges::Closed : HsFixedEdges::Published;
}

void require(bool cond, const std::string& what) {
  if (!cond) throw UsageError(what);
}

GeneratedInstance generate(const GenerateArgs& a) {
  const auto& r = a.reduction;
  if (r == "path-chain") {
    require(a.len > 0 && a.colors > 0, "--len and --colors are required");
    GeneratedInstance inst;
    inst.graph = gen_path_chain(a.colors, a.len, a.d);
    inst.spec = PatternSpec::path(a.len, a.colors);
    inst.k = a.d - 1;
    inst.reduction = r;
    inst.params = {{"c", std::to_string(a.colors)},
                   {"l", std::to_string(a.len)},
                   {"d", std::to_string(a.d)}};
    for (VertexId v = 0; v < inst.graph.n(); ++v) {
      inst.labels.emplace_back("v_" + std::to_string(v + 1), v);
    }
    return inst;
  }
  if (r == "cpld-b2sat") {
    require(!a.cnf.empty(), "--cnf is required");
    require(a.len > 0 && a.colors > 0, "--len and --colors are required");
    return gen_cpld_b2sat(parse_dimacs(read_text(a.cnf)), a.len, a.colors, a.d);
  }
  if (r == "2p4d-b2sat") {
    require(!a.cnf.empty(), "--cnf is required");
    return gen_2p4d_b2sat(parse_dimacs(read_text(a.cnf)));
  }
  if (r == "lift-2p3d") {
    require(!a.graph.empty(), "--graph is required");
    require(a.len > 0, "--len is required");
    return gen_lift_2p3d(read_graph(a.graph), a.k.value_or(0), a.len);
  }
  if (r == "ccld-vc") {
    require(!a.graph.empty(), "--graph is required");
    require(a.len > 0 && a.colors > 0, "--len and --colors are required");
    VertexCoverInstance h;
    auto g = read_graph(a.graph);
    if (a.subdivide) {
      auto sub = two_subdivision(recolor_to_c(g, 1));
      h.graph = sub.graph;
      h.parts = sub.parts;
    } else {
      h.graph = g;
      std::istringstream in(a.parts);
      int p = 0;
      while (in >> p) h.parts.push_back(p);
    }
    h.k = a.k ? *a.k : vc_brute(h.graph);
    return gen_ccld_vc(h, a.len, a.colors);
  }
  if (r == "cpd-hs") return gen_cpd_hs(load_hs(a), fixed_variant(a.fixed));
  if (r == "ccd-hs") return gen_ccd_hs(load_hs(a), fixed_variant(a.fixed));
  throw UsageError("unknown reduction '" + r + "'");
}

int run_generate(const GenerateArgs& a) {
  auto inst = generate(a);
  auto meta = meta_json(inst);
  const std::string ecg = serialize_graph(inst.graph);
  if (a.output.empty() || a.output == "-") {
    if (a.format == "structured") {
      meta["ecg"] = ecg;
      std::cout << meta.dump(2) << '\n';
    } else {
      std::cout << ecg;
    }
  } else {
    std::ofstream(a.output, std::ios::binary) << ecg;
    std::ofstream(meta_path(a.output), std::ios::binary) << meta.dump(2) << '\n';
    if (a.format == "structured") {
      json out;
      out["output"] = a.output;
      out["spec"] = meta["spec"];
      out["k"] = inst.k;
      out["n"] = inst.graph.n();
      out["m"] = inst.graph.m();
      out["validation"] = meta["validation"];
      std::cout << out.dump(2) << '\n';
    } else {
      std::cout << "spec: " << to_string(inst.spec) << '\n'
                << "k: " << inst.k << '\n'
                << "vertices: " << inst.graph.n() << ", edges: " << inst.graph.m() << '\n';
      for (const auto& [key, value] : inst.validation.facts) {
        std::cout << key << ": " << value << '\n';
      }
    }
  }
  for (const auto& f : inst.validation.failures) std::cerr << "validation failed: " << f << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------------------
// bench

struct BenchArgs {
  std::string corpus;
  std::string algos = "brute,branch";
  std::string format = "human";
  Limits limits;
};

struct BenchRow {
  std::string instance;
  std::string algorithm;
  std::string status;
  std::optional<std::size_t> size;
  std::uint64_t nodes = 0;
  double ms = 0;
  bool comparable = false;
};

int run_bench(const BenchArgs& a) {
  std::vector<Algorithm> algos;
  std::stringstream list(a.algos);
  std::string name;
  while (std::getline(list, name, ',')) {
    if (!name.empty()) algos.push_back(parse_algorithm(name));
  }
  require(!algos.empty(), "--algos is empty");
  if (!fs::is_directory(a.corpus)) throw UsageError("'" + a.corpus + "' is not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(a.corpus)) {
    if (entry.is_regular_file() && entry.path().extension() == ".ecg") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  std::vector<BenchRow> rows;
  std::vector<std::string> disagreements;
  for (const auto& file : files) {
    auto meta = load_meta(file.string());
    if (!meta) throw UsageError("missing sidecar " + meta_path(file.string()));
    SolveRequest req;
    req.graph = read_graph(file.string());
    req.spec = spec_from_json(meta->at("spec"));
    if (meta->contains("k") && !meta->at("k").is_null()) req.k = meta->at("k").get<int>();
    req.limits = a.limits;
    std::optional<std::string> reference;
    for (auto algo : algos) {
      BenchRow row;
      row.instance = file.filename().string();
      row.algorithm = std::string(to_string(algo));
      req.algorithm = algo;
      try {
        auto r = solve(req);
        row.status = status_text(r.status);
        if (r.feasible()) row.size = r.solution.size();
        row.nodes = r.stats.nodes_explored;
        row.ms = r.stats.elapsed_ms;
        row.comparable = true;
      } catch (const Error& e) {
        row.status = "n/a (" + std::string(to_string(e.kind())) + ")";
      }
      if (row.comparable) {
        // Decision runs compare statuses; optimizing runs compare sizes.
        std::string key = req.k ? row.status : std::to_string(row.size.value_or(0));
        if (!reference) {
          reference = key;
        } else if (*reference != key) {
          disagreements.push_back(row.instance + ": " + row.algorithm + " gives " + key +
                                  ", expected " + *reference);
        }
      }
      rows.push_back(row);
    }
  }

  if (a.format == "structured") {
    json out;
    json jrows = json::array();
    for (const auto& r : rows) {
      jrows.push_back({{"instance", r.instance},
                       {"algorithm", r.algorithm},
                       {"status", r.status},
                       {"size", r.size ? json(*r.size) : json(nullptr)},
                       {"nodes", r.nodes}});
    }
    out["rows"] = jrows;
    out["agree"] = disagreements.empty();
    out["disagreements"] = disagreements;
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << std::left << std::setw(28) << "instance" << std::setw(11) << "algorithm"
              << std::setw(30) << "status" << std::setw(6) << "size" << std::setw(12) << "nodes"
              << "time_ms\n";
    for (const auto& r : rows) {
      std::cout << std::left << std::setw(28) << r.instance << std::setw(11) << r.algorithm
                << std::setw(30) << r.status << std::setw(6)
                << (r.size ? std::to_string(*r.size) : "-") << std::setw(12) << r.nodes
                << std::fixed << std::setprecision(1) << r.ms << '\n';
    }
  }
  for (const auto& d : disagreements) std::cerr << "disagreement: " << d << '\n';
  return disagreements.empty() ? kExitOk : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Colored path and cycle edge deletion toolkit"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "decide or optimize a deletion instance");
  solve_cmd->add_option("input", solve_args.input, "ECG file or - for stdin")->required();
  add_spec_flags(solve_cmd, solve_args.spec);
  solve_cmd->add_option("-k,--budget", solve_args.k, "deletion budget; omit to optimize");
  solve_cmd->add_option("--algo", solve_args.algo, "brute, branch, cnd, t-class or auto")
      ->check(CLI::IsMember({"brute", "branch", "cnd", "t-class", "auto"}));
  solve_cmd->add_option("--format", solve_args.format)
      ->check(CLI::IsMember({"human", "structured"}));
  solve_cmd->add_flag("--no-conflict-restriction", solve_args.no_restrict,
                      "branch on every edge even for non-cascading inputs");
  add_limit_flags(solve_cmd, solve_args.limits);

  DetectArgs detect_args;
  auto* detect_cmd = app.add_subcommand("detect", "list pattern occurrences");
  detect_cmd->add_option("input", detect_args.input, "ECG file or - for stdin")->required();
  add_spec_flags(detect_cmd, detect_args.spec);
  detect_cmd->add_flag("--count", detect_args.count_only, "print only the number");
  detect_cmd->add_flag("--first", detect_args.first_only, "stop at the first occurrence");
  detect_cmd->add_option("--max-occurrences", detect_args.cap)->capture_default_str();
  detect_cmd->add_option("--format", detect_args.format)
      ->check(CLI::IsMember({"human", "structured"}));

  ClassifyArgs classify_args;
  auto* classify_cmd = app.add_subcommand("classify", "structural report");
  classify_cmd->add_option("input", classify_args.input, "ECG file or - for stdin")->required();
  add_spec_flags(classify_cmd, classify_args.spec);
  classify_cmd->add_option("--format", classify_args.format)
      ->check(CLI::IsMember({"human", "structured"}));

  GenerateArgs gen_args;
  auto* gen_cmd = app.add_subcommand("generate", "build a reduction instance");
  gen_cmd->add_option("reduction", gen_args.reduction,
                      "path-chain, cpld-b2sat, lift-2p3d, ccld-vc, cpd-hs, ccd-hs, 2p4d-b2sat")
      ->required()
      ->check(CLI::IsMember({"path-chain", "cpld-b2sat", "lift-2p3d", "ccld-vc", "cpd-hs",
                             "ccd-hs", "2p4d-b2sat"}));
  gen_cmd->add_option("-o,--output", gen_args.output,
                      "ECG output path; a .meta.json sidecar is written next to it");
  gen_cmd->add_option("--format", gen_args.format)->check(CLI::IsMember({"human", "structured"}));
  gen_cmd->add_option("--len", gen_args.len, "pattern length l");
  gen_cmd->add_option("--colors", gen_args.colors, "color count c");
  gen_cmd->add_option("--d", gen_args.d, "chain repetition d")->capture_default_str();
  gen_cmd->add_option("-k,--budget", gen_args.k, "source budget (default: source optimum)");
  gen_cmd->add_option("--cnf", gen_args.cnf, "DIMACS file of a (3,B2) formula");
  gen_cmd->add_option("--graph", gen_args.graph, "source ECG file");
  gen_cmd->add_option("--parts", gen_args.parts, "tripartition, one part (1-3) per vertex");
  gen_cmd->add_flag("--subdivide", gen_args.subdivide,
                    "2-subdivide the source graph and use the canonical tripartition");
  gen_cmd->add_option("--sets", gen_args.sets, "hitting-set family, e.g. \"1;1 2;3\"");
  gen_cmd->add_option("--hs", gen_args.hs_file, "hitting-set file, one set per line");
  gen_cmd->add_option("--fixed", gen_args.fixed, "inter-gadget edges: published or closed")
      ->check(CLI::IsMember({"published", "closed"}))
      ->capture_default_str();

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "run algorithms over a corpus and cross-check");
  bench_cmd->add_option("corpus", bench_args.corpus, "directory of .ecg files with sidecars")
      ->required();
  bench_cmd->add_option("--algos", bench_args.algos, "comma-separated algorithm list")
      ->capture_default_str();
  bench_cmd->add_option("--format", bench_args.format)
      ->check(CLI::IsMember({"human", "structured"}));
  add_limit_flags(bench_cmd, bench_args.limits);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (*solve_cmd) return run_solve(solve_args);
    if (*detect_cmd) return run_detect(detect_args);
    if (*classify_cmd) return run_classify(classify_args);
    if (*gen_cmd) return run_generate(gen_args);
    if (*bench_cmd) return run_bench(bench_args);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitError;
  } catch (const json::exception& e) {
    std::cerr << "metadata error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace ecdel::cli

int main(int argc, char** argv) { return ecdel::cli::main(argc, argv); }
