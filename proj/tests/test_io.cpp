#include "graphcurv/generators.hpp"
#include "graphcurv/graph_io.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace graphcurv;

namespace {

std::size_t error_line(const std::string& text, bool json) {
  try {
    if (json) {
      read_graph_json(text);
    } else {
      read_edge_list(text);
    }
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("json with string ids, labels and a truncation") {
  const std::string text = R"({
    "vertices": ["a", "b", 7],
    "edges": [["a", "b"], ["b", 7]],
    "labels": {"7": "seven"},
    "truncation": {"center": "b", "radius": 3}
  })";
  const Graph g = read_graph_json(text);
  CHECK(g.size() == 3);
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(1, 2));
  CHECK(g.label(0) == "a");
  CHECK(g.label(2) == "seven");
  REQUIRE(g.truncation().has_value());
  CHECK(g.truncation()->center == 1);
  CHECK(g.truncation()->radius == 3);
}

TEST_CASE("json round trip keeps structure, labels and truncation") {
  for (const Graph& g : {named_graph("heawood"), lattice_ball(2, 4), zigzag(labelled_hypercube(4), cycle(4))}) {
    const Graph back = read_graph_json(write_graph_json(g));
    CHECK(back.size() == g.size());
    CHECK(back.edges() == g.edges());
    for (VertexId v = 0; v < g.size(); ++v) CHECK(back.label(v) == g.label(v));
    CHECK(back.truncation().has_value() == g.truncation().has_value());
  }
}

TEST_CASE("json errors carry the offending line") {
  CHECK(error_line("{\n \"vertices\": [0, 1],\n \"edges\": [[0, 1],\n", true) == 4);
  CHECK(error_line("{\n \"vertices\": [0, 1, 2],\n \"edges\": [\n  [0, 1],\n  [1, 1]\n ]\n}", true) == 5);
  CHECK(error_line("{\n \"vertices\": [0, 1, 2],\n \"edges\": [\n  [0, 1],\n  [1, 0]\n ]\n}", true) == 5);
  CHECK(error_line("{\n \"vertices\": [0, 1],\n \"edges\": [[0, 1], [1, 9]]\n}", true) == 3);
  CHECK(error_line("{\n \"vertices\": [\n  0,\n  0\n ],\n \"edges\": []\n}", true) == 4);
  CHECK(error_line("[1, 2]", true) == 1);
}

TEST_CASE("edge lists") {
  const Graph g = read_edge_list("# square\na b\nb c\nc d  # closing\nd a\n\n");
  CHECK(g.size() == 4);
  CHECK(g.edge_count() == 4);
  CHECK(g.label(0) == "a");
  CHECK(g.adjacent(*g.find_label("d"), *g.find_label("a")));
  CHECK(error_line("a b\nb\n", false) == 2);
  CHECK(error_line("a b\nb c\nc c\n", false) == 3);
  CHECK(error_line("a b\nb a\n", false) == 2);
  CHECK(error_line("a b c\n", false) == 1);
}

TEST_CASE("files dispatch on extension") {
  const auto dir = std::filesystem::temp_directory_path() / "graphcurv_io_test";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "g.json") << write_graph_json(cycle(5));
  std::ofstream(dir / "g.txt") << "0 1\n1 2\n";
  CHECK(load_graph_file(dir / "g.json").edge_count() == 5);
  CHECK(load_graph_file(dir / "g.txt").edge_count() == 2);
  CHECK_THROWS(load_graph_file(dir / "missing.json"));
  std::filesystem::remove_all(dir);
}
