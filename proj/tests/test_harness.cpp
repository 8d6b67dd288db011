#include "graphcurv/generators.hpp"
#include "graphcurv/harness.hpp"
#include "graphcurv/spectral.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>

using namespace graphcurv;

namespace {

const TheoremFlag& flag(const CurvatureReport& r, const std::string& name) {
  for (const auto& f : r.flags)
    if (f.name == name) return f;
  throw std::logic_error("no flag " + name);
}

}  // namespace

TEST_CASE("graph sources") {
  CHECK(resolve_graph_source("gen:hypercube:4").size() == 16);
  CHECK(resolve_graph_source("gen:lattice:2").size() == 41);
  CHECK(resolve_graph_source("gen:lattice:2,3").size() == 25);
  CHECK(resolve_graph_source("gen:tree:3").size() == 46);
  CHECK(resolve_graph_source("gen:petersen").size() == 10);
  CHECK(resolve_graph_source("gen:incidence:7:0,1,3").size() == 14);
  CHECK(resolve_graph_source("gen:interchange:4:0-1,2-3").size() == 4);
  CHECK(resolve_graph_source("gen:zigzag:hypercube:4,cycle:4").size() == 64);
  CHECK(resolve_graph_source("gen:flip:6").size() == 14);
  CHECK_THROWS_AS(resolve_graph_source("hypercube:4"), std::invalid_argument);
  CHECK_THROWS_AS(resolve_graph_source("gen:hypercube:x"), std::invalid_argument);
  CHECK_THROWS_AS(resolve_graph_source("gen:hypercube"), std::invalid_argument);
  CHECK_THROWS_AS(resolve_graph_source("gen:hypercube:-1"), std::invalid_argument);
  CHECK_THROWS_AS(resolve_graph_source("gen:nothing"), std::invalid_argument);
}

TEST_CASE("vertex and edge addressing") {
  const Graph g = resolve_graph_source("gen:zigzag:hypercube:6,cycle:6");
  const auto [x, y] = resolve_edge(g, "(000000,1),(010000,3)");
  CHECK(g.label(x) == "(000000,1)");
  CHECK(g.label(y) == "(010000,3)");
  const Graph c = cycle(5);
  CHECK(resolve_vertex(c, "3") == 3);
  CHECK_THROWS_AS(resolve_vertex(c, "7"), std::invalid_argument);
  CHECK_THROWS_AS(resolve_edge(c, "0;1"), std::invalid_argument);
}

TEST_CASE("hypercube report") {
  const Graph g = hypercube(4);
  const CurvatureReport r = compute_report("gen:hypercube:4", g, {});
  CHECK(r.vertices.size() == 16);
  CHECK(r.edges.size() == 32);
  for (const auto& v : r.vertices) CHECK(v.rho == doctest::Approx(2.0).epsilon(1e-12));
  for (const auto& e : r.edges) CHECK(e.kappa == Rational(1, 4));
  CHECK(r.passed());
  CHECK(flag(r, "linkage-rho").checked == 16);
  CHECK(flag(r, "biclique-kappa").checked == 32);
  REQUIRE(r.diameter.has_value());
  CHECK(r.diameter->diameter == 4);
}

TEST_CASE("rows are sorted and independent of the worker count") {
  const Graph g = named_graph("dodecahedron");
  ReportOptions serial;
  ReportOptions parallel;
  parallel.jobs = 4;
  const auto a = compute_report("gen:dodecahedron", g, serial);
  const auto b = compute_report("gen:dodecahedron", g, parallel);
  CHECK(format_json(a, false) == format_json(b, false));
  CHECK(format_csv(a) == format_csv(b));
  for (std::size_t k = 1; k < a.edges.size(); ++k) {
    CHECK(Edge(a.edges[k - 1].x, a.edges[k - 1].y) < Edge(a.edges[k].x, a.edges[k].y));
  }
}

TEST_CASE("serialized reports reproduce exact kappas") {
  for (const char* spec : {"gen:star:5", "gen:zigzag:hypercube:4,cycle:4", "gen:flip:6"}) {
    const Graph g = resolve_graph_source(spec);
    const CurvatureReport r = compute_report(spec, g, {});
    const auto from_csv = read_report_csv_kappas(format_csv(r));
    const auto from_json = read_report_json_kappas(format_json(r));
    REQUIRE(from_csv.size() == r.edges.size());
    REQUIRE(from_json.size() == r.edges.size());
    for (const auto& e : r.edges) {
      CHECK(from_csv.at({e.x, e.y}) == e.kappa);
      CHECK(from_json.at({e.x, e.y}) == e.kappa);
    }
  }
}

TEST_CASE("CSV quoting survives labels with commas") {
  const Graph g = resolve_graph_source("gen:zigzag:hypercube:4,cycle:4");
  const CurvatureReport r = compute_report("zz", g, {});
  CHECK(format_csv(r).find("\"(0000,1)\"") != std::string::npos);
}

TEST_CASE("flags are recomputed from rows alone") {
  for (const char* spec : {"gen:petersen", "gen:cycle:5", "gen:hypercube:3", "gen:complete-bipartite:3", "gen:tree:3"}) {
    const Graph g = resolve_graph_source(spec);
    CurvatureReport r = compute_report(spec, g, {});
    const auto flags = r.flags;
    r.flags.clear();
    const auto again = summarize_flags(r, 1e-9);
    REQUIRE(again.size() == flags.size());
    for (std::size_t k = 0; k < flags.size(); ++k) {
      CHECK(again[k].name == flags[k].name);
      CHECK(again[k].checked == flags[k].checked);
      CHECK(again[k].failed == flags[k].failed);
    }
  }
}

TEST_CASE("K_{3,3}: sign theorems inapplicable, linkage theorem applied") {
  const CurvatureReport r = compute_report("k33", complete_bipartite(3), {});
  CHECK_FALSE(flag(r, "rho-sign").applicable());
  CHECK(flag(r, "linkage-rho").applicable());
  CHECK(flag(r, "linkage-rho").passed());
  CHECK(r.passed());
}

TEST_CASE("a perturbed kappa is reported as a violation") {
  ReportOptions options;
  options.inject_fault = true;
  const CurvatureReport r = compute_report("c5", cycle(5), options);
  CHECK_FALSE(r.passed());
  CHECK(flag(r, "kappa-quantization").failed == 1);
}

TEST_CASE("probes") {
  ReportOptions vertex;
  vertex.probe = ReportOptions::Probe::vertex;
  vertex.vertex = 0;
  const CurvatureReport r = compute_report("tree", regular_tree(3, 4), vertex);
  CHECK(r.vertices.size() == 1);
  CHECK(r.edges.size() == 3);
  CHECK(r.vertices[0].kappa_sign == true);
  vertex.vertex = regular_tree(3, 4).size() - 1;
  CHECK_THROWS_AS(compute_report("tree", regular_tree(3, 4), vertex), IncompleteBallError);

  ReportOptions edge;
  edge.probe = ReportOptions::Probe::edge;
  edge.edge = {0, 2};
  CHECK_THROWS_AS(compute_report("c5", cycle(5), edge), std::domain_error);
}

TEST_CASE("diameter bounds") {
  const DiameterReport q4 = diameter_bound(hypercube(4));
  CHECK(q4.diameter == 4);
  CHECK(q4.kappa_star == Rational(1, 4));
  CHECK(q4.curvature_bound == Rational(4));
  CHECK(q4.curvature_bound_holds == true);
  CHECK(q4.degree_bound == 8);
  const DiameterReport k33 = diameter_bound(complete_bipartite(3));
  CHECK(k33.diameter == 2);
  CHECK(k33.curvature_bound == Rational(3));
  const DiameterReport s5 = diameter_bound(star(5));
  CHECK(s5.diameter == 2);
  CHECK(s5.kappa_star == Rational(1, 5));
  CHECK_FALSE(s5.degree.has_value());
  CHECK(s5.degree_bound == 40);
  CHECK(s5.degree_bound_holds == true);
  const DiameterReport c6 = diameter_bound(cycle(6));
  CHECK_FALSE(c6.curvature_bound.has_value());
  CHECK_THROWS_AS(diameter_bound(Graph(4, std::vector<Edge>{{0, 1}, {2, 3}})), std::domain_error);
  CHECK_THROWS_AS(diameter_bound(lattice_ball(2, 4)), std::domain_error);
}

TEST_CASE("corpus verification") {
  const auto outcome = verify_corpus({"gen:hypercube:2..4", "gen:cycle:5"}, {});
  CHECK(outcome.passed);
  REQUIRE(outcome.reports.size() == 4);
  CHECK(outcome.reports[2].source == "gen:hypercube:4");

  const auto again = verify_corpus({"gen:hypercube:2..4", "gen:cycle:5"}, {});
  for (std::size_t k = 0; k < outcome.reports.size(); ++k) {
    CHECK(format_json(outcome.reports[k], false) == format_json(again.reports[k], false));
  }
}

TEST_CASE("failed corpus entries are written for replay") {
  const auto dir = std::filesystem::temp_directory_path() / "graphcurv_replay_test";
  std::filesystem::remove_all(dir);
  ::setenv("CURVATURE_CORPUS_DIR", dir.c_str(), 1);
  ReportOptions faulty;
  faulty.inject_fault = true;
  const auto outcome = verify_corpus({"gen:cycle:5"}, faulty);
  ::unsetenv("CURVATURE_CORPUS_DIR");
  CHECK_FALSE(outcome.passed);
  CHECK(std::filesystem::exists(dir / "gen_cycle_5.graph.json"));
  CHECK(std::filesystem::exists(dir / "gen_cycle_5.report.json"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("default corpus covers every family") {
  const auto corpus = default_corpus();
  for (const char* needle : {"hypercube", "complete-bipartite", "cycle", "lattice", "tree", "petersen", "dodecahedron",
                             "flip", "adjacent-transposition-cayley", "transposition-cayley", "interchange", "zigzag",
                             "fano-complement", "star"}) {
    CHECK(std::any_of(corpus.begin(), corpus.end(), [&](const std::string& s) { return s.find(needle) != std::string::npos; }));
  }
}
