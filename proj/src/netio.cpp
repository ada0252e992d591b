#include "phylorient/netio.hpp"

#include <algorithm>
#include <sstream>

namespace phylorient {

ParseError::ParseError(ParseErrorKind kind, std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      kind_(kind),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i == line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    tokens.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return tokens;
}

}  // namespace

ParsedNetwork parse_network(std::string_view text, ValidationOptions options) {
  bool have_header = false;
  bool directed = false;
  bool have_leaves = false;
  std::optional<std::string> root;
  std::vector<std::string> vertices;
  std::vector<std::string> leaves;
  std::vector<std::pair<std::string, std::string>> edges;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto tokens = tokenize(line);
    if (tokens.empty() || tokens[0].text.front() == '#') continue;

    const Token& keyword = tokens[0];
    if (!have_header) {
      if (keyword.text != "phylo-net" || tokens.size() != 3)
        throw ParseError(ParseErrorKind::Syntax, line_no, keyword.column,
                         "expected header 'phylo-net v1 {undirected|directed}'");
      if (tokens[1].text != "v1")
        throw ParseError(ParseErrorKind::UnknownVersion, line_no, tokens[1].column,
                         "unsupported format version '" + tokens[1].text + "'");
      if (tokens[2].text != "undirected" && tokens[2].text != "directed")
        throw ParseError(ParseErrorKind::Syntax, line_no, tokens[2].column,
                         "network kind must be 'undirected' or 'directed'");
      directed = tokens[2].text == "directed";
      have_header = true;
      continue;
    }

    if (keyword.text == "edge") {
      if (tokens.size() != 3)
        throw ParseError(ParseErrorKind::Syntax, line_no, keyword.column, "'edge' takes exactly two vertices");
      edges.emplace_back(tokens[1].text, tokens[2].text);
    } else if (keyword.text == "leaves") {
      if (have_leaves) throw ParseError(ParseErrorKind::Syntax, line_no, keyword.column, "duplicate 'leaves' line");
      have_leaves = true;
      for (std::size_t i = 1; i < tokens.size(); ++i) leaves.push_back(tokens[i].text);
    } else if (keyword.text == "vertices") {
      if (!vertices.empty()) throw ParseError(ParseErrorKind::Syntax, line_no, keyword.column, "duplicate 'vertices' line");
      for (std::size_t i = 1; i < tokens.size(); ++i) vertices.push_back(tokens[i].text);
    } else if (keyword.text == "root") {
      if (!directed)
        throw ParseError(ParseErrorKind::Syntax, line_no, keyword.column, "'root' is only allowed in directed documents");
      if (root) throw ParseError(ParseErrorKind::Syntax, line_no, keyword.column, "duplicate 'root' line");
      if (tokens.size() != 2)
        throw ParseError(ParseErrorKind::Syntax, line_no, keyword.column, "'root' takes exactly one vertex");
      root = tokens[1].text;
    } else {
      throw ParseError(ParseErrorKind::Syntax, line_no, keyword.column, "unknown keyword '" + keyword.text + "'");
    }
  }
  if (!have_header) throw ParseError(ParseErrorKind::Syntax, line_no, 1, "missing 'phylo-net' header");
  if (!have_leaves) throw ParseError(ParseErrorKind::Syntax, line_no, 1, "missing 'leaves' line");

  if (!directed) return UndirectedNetwork::from_raw({std::move(vertices), std::move(leaves), std::move(edges)}, options);
  if (!root) throw ParseError(ParseErrorKind::Syntax, line_no, 1, "directed document without 'root' line");
  return DirectedNetwork::from_raw({std::move(vertices), std::move(leaves), *root, std::move(edges)}, options);
}

UndirectedNetwork parse_undirected(std::string_view text, ValidationOptions options) {
  auto parsed = parse_network(text, options);
  if (auto* net = std::get_if<UndirectedNetwork>(&parsed)) return std::move(*net);
  throw ParseError(ParseErrorKind::WrongKind, 1, 1, "expected an undirected network");
}

DirectedNetwork parse_directed(std::string_view text, ValidationOptions options) {
  auto parsed = parse_network(text, options);
  if (auto* net = std::get_if<DirectedNetwork>(&parsed)) return std::move(*net);
  throw ParseError(ParseErrorKind::WrongKind, 1, 1, "expected a directed network");
}

namespace {

void write_names(std::ostringstream& out, std::string_view keyword, const std::vector<std::string>& names) {
  out << keyword;
  for (const auto& name : names) out << ' ' << name;
  out << '\n';
}

}  // namespace

std::string serialize(const UndirectedNetwork& net) {
  const RawGraph raw = net.to_raw();
  std::ostringstream out;
  out << "phylo-net v1 undirected\n";
  write_names(out, "vertices", raw.vertices);
  write_names(out, "leaves", raw.leaves);
  for (const auto& [u, v] : raw.edges) out << "edge " << u << ' ' << v << '\n';
  return out.str();
}

std::string serialize(const DirectedNetwork& net) {
  const RawDigraph raw = net.to_raw();
  std::ostringstream out;
  out << "phylo-net v1 directed\n";
  out << "root " << raw.root << '\n';
  write_names(out, "vertices", raw.vertices);
  write_names(out, "leaves", raw.leaves);
  for (const auto& [u, v] : raw.arcs) out << "edge " << u << ' ' << v << '\n';
  return out.str();
}

namespace {

std::string quote(std::string_view name) {
  std::string out = "\"";
  for (char ch : name) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

constexpr std::string_view kNodeDefaults =
    "  node [shape=circle, style=filled, fillcolor=black, label=\"\", width=0.12];\n";

std::string leaf_line(std::string_view name) {
  return "  " + quote(name) + " [shape=plaintext, style=\"\", label=" + quote(name) + "];\n";
}

}  // namespace

std::string to_dot(const UndirectedNetwork& net, const DotHighlight& highlight) {
  std::vector<char> reticulation(net.vertex_count(), 0);
  for (VertexId v : highlight.reticulations)
    if (v < net.vertex_count()) reticulation[v] = 1;
  std::ostringstream out;
  out << "graph phylo {\n" << kNodeDefaults;
  for (VertexId v = 0; v < net.vertex_count(); ++v) {
    if (net.is_leaf(v))
      out << leaf_line(net.name(v));
    else if (reticulation[v])
      out << "  " << quote(net.name(v)) << " [fillcolor=white];\n";
    else
      out << "  " << quote(net.name(v)) << ";\n";
  }
  for (const Edge& e : net.edges()) {
    out << "  " << quote(net.name(e.u)) << " -- " << quote(net.name(e.v));
    if (highlight.root_edge && Edge::make(highlight.root_edge->u, highlight.root_edge->v) == e)
      out << " [style=dashed, label=\"root\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const DirectedNetwork& net) {
  std::ostringstream out;
  out << "digraph phylo {\n" << kNodeDefaults;
  for (VertexId v = 0; v < net.vertex_count(); ++v) {
    if (v == net.root())
      out << "  " << quote(net.name(v)) << " [shape=pentagon];\n";
    else if (net.is_leaf(v))
      out << leaf_line(net.name(v));
    else if (net.is_reticulation(v))
      out << "  " << quote(net.name(v)) << " [fillcolor=white];\n";
    else
      out << "  " << quote(net.name(v)) << ";\n";
  }
  for (const Arc& a : net.arcs()) out << "  " << quote(net.name(a.tail)) << " -> " << quote(net.name(a.head)) << ";\n";
  out << "}\n";
  return out.str();
}

nlohmann::json report_to_json(const SolverReport& report, const UndirectedNetwork& input) {
  nlohmann::json j;
  j["outcome"] = report.orientable() ? "orientable" : "not_orientable";
  if (report.root_edge)
    j["root_edge"] = {input.name(report.root_edge->u), input.name(report.root_edge->v)};
  else
    j["root_edge"] = nullptr;
  std::vector<std::string> reticulations;
  for (VertexId v : report.reticulations) reticulations.push_back(input.name(v));
  std::sort(reticulations.begin(), reticulations.end());
  j["reticulations"] = reticulations;
  j["counts"] = {{"roots_tried", report.roots_tried},
                 {"reticulation_sets_tried", report.reticulation_sets_tried},
                 {"leaves", input.leaf_count()},
                 {"edges", input.edge_count()},
                 {"vertices", input.vertex_count()},
                 {"circuit_rank", circuit_rank(input)}};
  j["pruned_by"] = nlohmann::json::object();
  for (const auto& [reason, count] : report.pruned_by) j["pruned_by"][reason] = count;
  j["elapsed_ms"] = std::chrono::duration<double, std::milli>(report.elapsed).count();
  return j;
}

nlohmann::json report_to_json(const ConditionReport& report) {
  nlohmann::json j;
  j["outcome"] = report.passes() ? "passes" : "fails";
  j["edge_bound_ok"] = report.edge_bound_ok;
  j["leaf_distance_ok"] = report.leaf_distance_ok;
  j["reticulation_count"] = report.reticulation_count;
  auto failures = report.failures;
  std::sort(failures.begin(), failures.end());
  j["failures"] = failures;
  j["details"] = report.details;
  j["counts"] = {{"leaves", report.leaf_count}, {"edges", report.edge_count}, {"vertices", report.vertex_count}};
  return j;
}

nlohmann::json report_to_json(const AugmentationCertificate& cert) {
  nlohmann::json j;
  j["outcome"] = "certificate";
  j["root_edge"] = {cert.root_edge.first, cert.root_edge.second};
  auto reticulations = cert.reticulations;
  std::sort(reticulations.begin(), reticulations.end());
  j["reticulations"] = reticulations;
  j["added_leaves"] = nlohmann::json::array();
  for (const auto& leaf : cert.added_leaves)
    j["added_leaves"].push_back({{"label", leaf.label}, {"host", {leaf.host_u, leaf.host_v}}});
  j["counts"] = {{"added_leaves", cert.added_leaves.size()}, {"reticulations", cert.reticulations.size()}};
  return j;
}

}  // namespace phylorient
