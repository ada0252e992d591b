#include "phylorient/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "phylorient/conditions.hpp"
#include "phylorient/constrained_orient.hpp"
#include "phylorient/families.hpp"
#include "phylorient/netio.hpp"
#include "phylorient/solver.hpp"

namespace phylorient::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  bool json = false;
  bool verbose = false;
  bool allow_single_leaf = false;
  unsigned threads = 1;
  std::uint64_t seed = 0;  // reserved; no command is randomized
  double max_candidates = 1e9;
  double max_placements = 1e6;

  std::string family;
  std::size_t k = 0;
  std::string file;
  std::string root;
  std::string reticulations;
  bool have_reticulations = false;
  std::size_t max_added = 0;
  bool solve = false;
};

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot read '" + path + "'");
  buffer << file.rdbuf();
  return buffer.str();
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> parts;
  if (text.empty()) return parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    parts.push_back(text.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return parts;
}

std::pair<std::string, std::string> parse_root(const std::string& text) {
  const auto parts = split_csv(text);
  if (parts.size() != 2 || parts[0].empty() || parts[1].empty())
    throw UsageError("--root expects two vertex names separated by a comma, got '" + text + "'");
  return {parts[0], parts[1]};
}

std::vector<std::string> parse_reticulations(const std::string& text) {
  auto parts = split_csv(text);
  for (const auto& p : parts)
    if (p.empty()) throw UsageError("--reticulations contains an empty name");
  return parts;
}

VertexId resolve(const UndirectedNetwork& net, const std::string& name) {
  auto v = net.find(name);
  if (!v) throw NetworkError(ErrorKind::UnknownVertex, "unknown vertex '" + name + "'", name);
  return *v;
}

SearchLimits limits_of(const Config& cfg, std::ostream& err) {
  SearchLimits limits;
  limits.max_candidates = cfg.max_candidates;
  limits.max_placements = cfg.max_placements;
  limits.threads = cfg.threads;
  if (cfg.verbose) limits.progress = &err;
  return limits;
}

UndirectedNetwork load_undirected(const Config& cfg, std::istream& in) {
  return parse_undirected(read_input(cfg.file, in), {.allow_single_leaf = cfg.allow_single_leaf});
}

std::string join(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) out += (out.empty() ? "" : " ") + n;
  return out;
}

std::vector<std::string> sorted_names(const UndirectedNetwork& net, const std::vector<VertexId>& ids) {
  std::vector<std::string> names;
  for (VertexId v : ids) names.push_back(net.name(v));
  std::sort(names.begin(), names.end());
  return names;
}

void print_json(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << '\n'; }

int cmd_generate(const Config& cfg, std::ostream& out) {
  if (cfg.family == "ladder" || cfg.family == "jellyfish") {
    const UndirectedNetwork net = cfg.family == "ladder" ? ladder(cfg.k) : jellyfish(cfg.k);
    if (cfg.json)
      print_json(out, {{"family", cfg.family}, {"k", cfg.k}, {"network", serialize(net)}});
    else
      out << serialize(net);
    return kDecided;
  }
  const auto [net, cert] = augmented_ladder(cfg.k);
  if (cfg.json) {
    auto j = report_to_json(cert);
    j["network"] = serialize(net);
    print_json(out, j);
    return kDecided;
  }
  auto reticulations = cert.reticulations;
  std::sort(reticulations.begin(), reticulations.end());
  out << "# root_edge " << cert.root_edge.first << ' ' << cert.root_edge.second << '\n';
  out << "# reticulations " << join(reticulations) << '\n';
  for (const auto& leaf : cert.added_leaves)
    out << "# added_leaf " << leaf.label << ' ' << leaf.host_u << ' ' << leaf.host_v << '\n';
  out << serialize(net);
  return kDecided;
}

int cmd_check(const Config& cfg, std::istream& in, std::ostream& out) {
  const UndirectedNetwork net = load_undirected(cfg, in);
  const ConditionReport report = condition_report(net);
  if (cfg.json) {
    print_json(out, report_to_json(report));
    return kDecided;
  }
  out << "outcome " << (report.passes() ? "passes" : "fails") << '\n';
  out << "edge_bound " << (report.edge_bound_ok ? "true" : "false") << '\n';
  out << "leaf_distance " << (report.leaf_distance_ok ? "true" : "false") << '\n';
  out << "reticulation_count " << report.reticulation_count << '\n';
  out << "leaves " << report.leaf_count << '\n';
  out << "edges " << report.edge_count << '\n';
  out << "vertices " << report.vertex_count << '\n';
  for (const auto& d : report.details) out << "# " << d << '\n';
  return kDecided;
}

int cmd_orient(const Config& cfg, std::istream& in, std::ostream& out) {
  // Flag syntax is checked before touching the input.
  const auto [ru, rv] = parse_root(cfg.root);
  const auto reticulation_names = parse_reticulations(cfg.reticulations);
  const UndirectedNetwork net = load_undirected(cfg, in);

  const VertexId u = resolve(net, ru);
  const VertexId v = resolve(net, rv);
  if (!net.has_edge(Edge::make(u, v)))
    throw NetworkError(ErrorKind::EdgeNotFound, "'" + ru + "' and '" + rv + "' are not adjacent");
  std::vector<VertexId> reticulations;
  for (const auto& name : reticulation_names) reticulations.push_back(resolve(net, name));
  std::sort(reticulations.begin(), reticulations.end());
  if (std::adjacent_find(reticulations.begin(), reticulations.end()) != reticulations.end())
    throw UsageError("--reticulations lists a vertex twice");

  const auto constraints = reticulation_constraints(net, Edge::make(u, v), reticulations);
  const OrientResult result = orient(net, constraints);

  if (const auto* directed = std::get_if<DirectedNetwork>(&result)) {
    if (cfg.json)
      print_json(out, {{"outcome", "orientable"}, {"network", serialize(*directed)}});
    else
      out << "# outcome orientable\n" << serialize(*directed);
    return kDecided;
  }

  const auto& failure = std::get<Infeasible>(result);
  const char* reason = failure.reason == InfeasibleReason::DegreeSumMismatch ? "degree_sum_mismatch"
                       : failure.reason == InfeasibleReason::DegreeCut       ? "degree_cut"
                                                                             : "unverified_cut";
  std::vector<std::string> cut_vertices;
  std::vector<std::pair<std::string, std::string>> cut_edges;
  if (failure.witness) {
    const RootedGraph rooted = insert_root(net, constraints.root_edge);
    for (VertexId w : failure.witness->cut_vertices) cut_vertices.push_back(rooted.names[w]);
    for (const Edge& e : failure.witness->cut_edges) cut_edges.push_back(std::minmax(rooted.names[e.u], rooted.names[e.v]));
    std::sort(cut_vertices.begin(), cut_vertices.end());
    std::sort(cut_edges.begin(), cut_edges.end());
  }
  if (cfg.json) {
    nlohmann::json j{{"outcome", "not_orientable"}, {"reason", reason}};
    if (failure.witness) j["witness"] = {{"cut_vertices", cut_vertices}, {"cut_edges", cut_edges}};
    print_json(out, j);
    return kDecided;
  }
  out << "# outcome not_orientable\n# reason " << reason << '\n';
  if (failure.witness) {
    out << "# cut_vertices " << join(cut_vertices) << '\n';
    out << "# cut_edges";
    for (const auto& [a, b] : cut_edges) out << ' ' << a << ',' << b;
    out << '\n';
  }
  return kDecided;
}

int cmd_tc_orient(const Config& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  const UndirectedNetwork net = load_undirected(cfg, in);
  const SolverReport report = tree_child_orient(net, limits_of(cfg, err));
  if (cfg.json) {
    auto j = report_to_json(report, net);
    if (report.solution) j["solution"] = serialize(*report.solution);
    print_json(out, j);
    return kDecided;
  }
  out << "# outcome " << (report.orientable() ? "orientable" : "not_orientable") << '\n';
  if (report.root_edge)
    out << "# root_edge " << net.name(report.root_edge->u) << ' ' << net.name(report.root_edge->v) << '\n';
  if (report.orientable()) out << "# reticulations " << join(sorted_names(net, report.reticulations)) << '\n';
  out << "# roots_tried " << report.roots_tried << '\n';
  out << "# reticulation_sets_tried " << report.reticulation_sets_tried << '\n';
  for (const auto& [key, count] : report.pruned_by) out << "# pruned_by " << key << ' ' << count << '\n';
  if (report.solution) out << serialize(*report.solution);
  return kDecided;
}

int cmd_min_augment(const Config& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  const UndirectedNetwork net = load_undirected(cfg, in);
  const auto found = minimum_leaf_augmentation(net, cfg.max_added, limits_of(cfg, err));
  if (cfg.json) {
    nlohmann::json j{{"outcome", found ? "found" : "not_found"}, {"max_added", cfg.max_added}};
    if (found) {
      j["added"] = found->added;
      j["added_leaves"] = nlohmann::json::array();
      for (const auto& p : found->placements)
        j["added_leaves"].push_back({{"label", p.label}, {"host", {p.host_u, p.host_v}}});
      j["report"] = report_to_json(found->report, found->network);
      j["network"] = serialize(found->network);
    }
    print_json(out, j);
    return kDecided;
  }
  if (!found) {
    out << "# outcome not_found\n# max_added " << cfg.max_added << '\n';
    return kDecided;
  }
  const auto& report = found->report;
  out << "# outcome found\n# added " << found->added << '\n';
  for (const auto& p : found->placements) out << "# added_leaf " << p.label << ' ' << p.host_u << ' ' << p.host_v << '\n';
  out << "# root_edge " << found->network.name(report.root_edge->u) << ' ' << found->network.name(report.root_edge->v)
      << '\n';
  out << "# reticulations " << join(sorted_names(found->network, report.reticulations)) << '\n';
  out << serialize(found->network);
  return kDecided;
}

int cmd_enumerate(const Config& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  const UndirectedNetwork net = load_undirected(cfg, in);
  const auto records = enumerate_tree_child_orientations(net, limits_of(cfg, err));
  if (cfg.json) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& r : records)
      list.push_back({{"root_edge", {net.name(r.root_edge.u), net.name(r.root_edge.v)}},
                      {"reticulations", sorted_names(net, r.reticulations)}});
    print_json(out, {{"outcome", records.empty() ? "not_orientable" : "orientable"},
                     {"counts", {{"orientations", records.size()}}},
                     {"orientations", list}});
    return kDecided;
  }
  out << "# orientations " << records.size() << '\n';
  for (const auto& r : records)
    out << "root_edge " << net.name(r.root_edge.u) << ' ' << net.name(r.root_edge.v) << " reticulations "
        << join(sorted_names(net, r.reticulations)) << '\n';
  return kDecided;
}

int cmd_export_dot(const Config& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  std::optional<std::pair<std::string, std::string>> root;
  if (!cfg.root.empty()) root = parse_root(cfg.root);
  const auto reticulation_names = parse_reticulations(cfg.reticulations);

  const ParsedNetwork parsed =
      parse_network(read_input(cfg.file, in), {.allow_single_leaf = cfg.allow_single_leaf});
  if (const auto* directed = std::get_if<DirectedNetwork>(&parsed)) {
    if (root || cfg.have_reticulations || cfg.solve)
      throw UsageError("highlight options apply to undirected input only");
    out << to_dot(*directed);
    return kDecided;
  }
  const auto& net = std::get<UndirectedNetwork>(parsed);
  if (cfg.solve) {
    const SolverReport report = tree_child_orient(net, limits_of(cfg, err));
    if (report.solution) {
      out << to_dot(*report.solution);
    } else {
      out << to_dot(net);
    }
    return kDecided;
  }
  DotHighlight highlight;
  if (root) highlight.root_edge = Edge::make(resolve(net, root->first), resolve(net, root->second));
  for (const auto& name : reticulation_names) highlight.reticulations.push_back(resolve(net, name));
  out << to_dot(net, highlight);
  return kDecided;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Orientations of undirected phylogenetic networks", "phylorient"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", cfg.json, "Print reports as JSON");
  app.add_flag("-v,--verbose", cfg.verbose, "Progress on stderr");
  app.add_flag("--allow-single-leaf", cfg.allow_single_leaf, "Accept networks with one leaf (e.g. J_1)");
  app.add_option("--threads", cfg.threads, "Worker threads for the solver")->check(CLI::Range(1u, 256u));
  app.add_option("--seed", cfg.seed, "Reserved; currently has no effect");
  app.add_option("--max-candidates", cfg.max_candidates, "Cap on the reticulation-set search space")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-placements", cfg.max_placements, "Cap on leaf placements per augmentation level")
      ->check(CLI::PositiveNumber);

  auto* generate = app.add_subcommand("generate", "Print a member of a graph family");
  generate->add_option("family", cfg.family, "jellyfish, ladder or augmented-ladder")
      ->required()
      ->check(CLI::IsMember({"jellyfish", "ladder", "augmented-ladder"}));
  generate->add_option("--k", cfg.k, "Family parameter")->required()->check(CLI::Range(std::size_t{1}, std::size_t{100000}));

  auto add_file = [&](CLI::App* sub) { sub->add_option("file", cfg.file, "Network document, or - for stdin")->required(); };

  auto* check = app.add_subcommand("check", "Necessary conditions for tree-child orientability");
  add_file(check);

  auto* orient_cmd = app.add_subcommand("orient", "Orientation for a given root edge and reticulation set");
  add_file(orient_cmd);
  orient_cmd->add_option("--root", cfg.root, "Root edge as U,V")->required();
  orient_cmd->add_option("--reticulations", cfg.reticulations, "Comma-separated reticulations");

  auto* tc = app.add_subcommand("tc-orient", "Decide tree-child orientability");
  add_file(tc);

  auto* augment = app.add_subcommand("min-augment", "Fewest added leaves making the network tree-child orientable");
  add_file(augment);
  augment->add_option("--max", cfg.max_added, "Largest number of leaves to try")->required();

  auto* enumerate = app.add_subcommand("enumerate", "List every tree-child orientation");
  add_file(enumerate);

  auto* dot = app.add_subcommand("export-dot", "Graphviz rendering");
  add_file(dot);
  auto* dot_root = dot->add_option("--root", cfg.root, "Highlight root edge U,V");
  auto* dot_ret = dot->add_option("--reticulations", cfg.reticulations, "Highlight reticulations");
  dot->add_flag("--solve", cfg.solve, "Draw the tree-child solution when there is one")
      ->excludes(dot_root)
      ->excludes(dot_ret);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const bool help = e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success);
    app.exit(e, out, err);
    return help ? kDecided : kUsage;
  }
  cfg.have_reticulations = orient_cmd->count("--reticulations") > 0 || dot->count("--reticulations") > 0;

  try {
    if (*generate) return cmd_generate(cfg, out);
    if (*check) return cmd_check(cfg, in, out);
    if (*orient_cmd) return cmd_orient(cfg, in, out);
    if (*tc) return cmd_tc_orient(cfg, in, out, err);
    if (*augment) return cmd_min_augment(cfg, in, out, err);
    if (*enumerate) return cmd_enumerate(cfg, in, out, err);
    return cmd_export_dot(cfg, in, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const SizeGuardExceeded& e) {
    err << "size guard: " << e.what() << '\n';
    return kSizeGuard;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const NetworkError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const InputError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
}

}  // namespace phylorient::cli
