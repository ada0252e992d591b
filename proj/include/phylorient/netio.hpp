#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"
#include "phylorient/conditions.hpp"
#include "phylorient/families.hpp"
#include "phylorient/graph.hpp"
#include "phylorient/solver.hpp"

// Text formats. A network document (.pnet) looks like
//
//   phylo-net v1 directed
//   # comment
//   root rho
//   vertices a b t1 rho
//   leaves a b
//   edge rho a
//   edge rho t1
//   ...
//
// `root` appears only in directed documents and `vertices` is optional; when
// present it fixes id order, otherwise ids follow first appearance (leaves line,
// then edge lines). Directed `edge u v` lines mean u -> v.
namespace phylorient {

enum class ParseErrorKind { Syntax, UnknownVersion, WrongKind };

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, std::size_t column, const std::string& message);
  ParseErrorKind kind() const { return kind_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
  std::size_t column_;
};

using ParsedNetwork = std::variant<UndirectedNetwork, DirectedNetwork>;

/// Structural problems surface as NetworkError from validation.
ParsedNetwork parse_network(std::string_view text, ValidationOptions options = {});
UndirectedNetwork parse_undirected(std::string_view text, ValidationOptions options = {});
DirectedNetwork parse_directed(std::string_view text, ValidationOptions options = {});

/// Canonical form: vertices in id order, edges sorted by id pair.
std::string serialize(const UndirectedNetwork& net);
std::string serialize(const DirectedNetwork& net);

struct DotHighlight {
  std::vector<VertexId> reticulations;
  std::optional<Edge> root_edge;
};

/// Reticulations are drawn as white circles, other internal vertices as black
/// dots, leaves as their labels, the root as a pentagon.
std::string to_dot(const UndirectedNetwork& net, const DotHighlight& highlight = {});
std::string to_dot(const DirectedNetwork& net);

/// `input` supplies names for the report's ids.
nlohmann::json report_to_json(const SolverReport& report, const UndirectedNetwork& input);
nlohmann::json report_to_json(const ConditionReport& report);
nlohmann::json report_to_json(const AugmentationCertificate& cert);

}  // namespace phylorient
