#pragma once

#include "graphcurv/graph.hpp"

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace graphcurv {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// {"vertices": [id,...], "edges": [[id,id],...], "labels": {"id": "text"}}
/// plus an optional "truncation": {"center": id, "radius": r}.
/// Ids are remapped to 0..n-1 in listed order; unlabelled vertices keep their id as label.
Graph read_graph_json(std::string_view text);
std::string write_graph_json(const Graph& g);

/// One "u v" pair per line; '#' starts a comment. Vertex tokens become labels,
/// numbered by first appearance.
Graph read_edge_list(std::string_view text);

/// Dispatches on extension: ".json" is JSON, anything else an edge list.
Graph load_graph_file(const std::filesystem::path& path);

}  // namespace graphcurv
