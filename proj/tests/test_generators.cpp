#include "graphcurv/generators.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace graphcurv;

namespace {

std::size_t girth(const Graph& g) {
  std::size_t best = oracle::kFar;
  for (VertexId s = 0; s < g.size(); ++s) {
    std::vector<long> dist(g.size(), -1);
    std::vector<VertexId> parent(g.size(), s);
    std::vector<VertexId> queue{s};
    dist[s] = 0;
    for (std::size_t k = 0; k < queue.size(); ++k) {
      const VertexId v = queue[k];
      for (VertexId w : g.neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          queue.push_back(w);
        } else if (parent[v] != w) {
          best = std::min<std::size_t>(best, static_cast<std::size_t>(dist[v] + dist[w] + 1));
        }
      }
    }
  }
  return best;
}

bool isomorphic_small(const Graph& a, const Graph& b) {
  if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
  std::vector<VertexId> p(a.size());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (const Edge& e : a.edges()) {
      if (!b.adjacent(p[e.u], p[e.v])) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

void check_design(const Graph& g, std::size_t points, std::size_t k) {
  for (VertexId p = 0; p < points; ++p) {
    for (VertexId q = p + 1; q < points; ++q) CHECK(common_neighbors(g, p, q).size() == k);
  }
}

}  // namespace

TEST_CASE("hypercube") {
  for (std::size_t d = 1; d <= 6; ++d) {
    const Graph g = hypercube(d);
    CHECK(g.size() == (std::size_t{1} << d));
    CHECK(is_regular(g) == d);
  }
  const Graph q3 = hypercube(3);
  CHECK(q3.label(1) == "100");
  CHECK(q3.label(6) == "011");
  const RotationMap r = labelled_hypercube(4);
  for (VertexId a = 0; a < r.graph.size(); ++a) {
    for (std::size_t l = 0; l < 4; ++l) {
      CHECK(r.rotation[r.rotation[a][l]][l] == a);
      CHECK(r.graph.adjacent(a, r.rotation[a][l]));
    }
  }
}

TEST_CASE("cycles, stars and complete bipartite graphs") {
  CHECK_THROWS_AS(cycle(2), std::invalid_argument);
  CHECK(cycle(7).edge_count() == 7);
  CHECK(is_regular(cycle(7)) == std::size_t{2});
  const Graph s = star(5);
  CHECK(s.degree(0) == 5);
  CHECK(s.degree(3) == 1);
  const Graph k = complete_bipartite(4);
  CHECK(k.edge_count() == 16);
  CHECK(k.adjacent(0, 4));
  CHECK_FALSE(k.adjacent(0, 1));
}

TEST_CASE("lattice balls and trees") {
  const Graph z2 = lattice_ball(2, 4);
  CHECK(z2.size() == 41);
  CHECK(z2.degree(0) == 4);
  CHECK(z2.label(0) == "(0,0)");
  CHECK(lattice_ball(1, 4).size() == 9);
  CHECK(lattice_ball(3, 2).size() == 25);
  const Graph t = regular_tree(3, 4);
  CHECK(t.size() == 1 + 3 + 6 + 12 + 24);
  CHECK(t.edge_count() == t.size() - 1);
  CHECK(t.degree(0) == 3);
  CHECK(girth(t) == oracle::kFar);
}

TEST_CASE("Cayley graphs of the symmetric group") {
  const Graph t4 = transposition_cayley(4);
  CHECK(t4.size() == 24);
  CHECK(is_regular(t4) == std::size_t{6});
  CHECK(t4.label(0) == "1234");
  const Graph a4 = adjacent_transposition_cayley(4);
  CHECK(a4.size() == 24);
  CHECK(is_regular(a4) == std::size_t{3});
  CHECK(isomorphic_small(transposition_cayley(3), complete_bipartite(3)));
  CHECK(isomorphic_small(adjacent_transposition_cayley(3), cycle(6)));
}

TEST_CASE("interchange graphs") {
  const Graph matching = interchange_graph(Graph(4, std::vector<Edge>{{0, 1}, {2, 3}}));
  CHECK(matching.size() == 4);
  CHECK(isomorphic_small(matching, cycle(4)));
  const Graph path = interchange_graph(Graph(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}}));
  CHECK(path.size() == 24);
  CHECK(path.edges() == adjacent_transposition_cayley(4).edges());
  CHECK(interchange_graph(Graph(3, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}})).edges() ==
        transposition_cayley(3).edges());
  const Graph wide = interchange_graph(Graph(10, std::vector<Edge>{{0, 9}}));
  CHECK(wide.size() == 2);
  CHECK(wide.label(1) == "10,2,3,4,5,6,7,8,9,1");
}

TEST_CASE("flip graphs") {
  CHECK(isomorphic_small(flip_graph(5), cycle(5)));
  const Graph f6 = flip_graph(6);
  CHECK(f6.size() == 14);
  CHECK(is_regular(f6) == std::size_t{3});
  const Graph f7 = flip_graph(7);
  CHECK(f7.size() == 42);
  CHECK(is_regular(f7) == std::size_t{4});
  CHECK(flip_graph(4).size() == 2);
  CHECK_THROWS_AS(flip_graph(3), std::invalid_argument);
}

TEST_CASE("incidence graphs of designs") {
  const Graph fano = named_graph("fano-complement");
  CHECK(fano.size() == 14);
  CHECK(is_regular(fano) == std::size_t{4});
  check_design(fano, 7, 2);
  const Graph biplane = named_graph("biplane-11");
  CHECK(biplane.size() == 22);
  CHECK(is_regular(biplane) == std::size_t{5});
  check_design(biplane, 11, 2);
  const Graph fano_lines = cyclic_incidence_graph(7, {0, 1, 3});
  check_design(fano_lines, 7, 1);
  CHECK(isomorphic_small(cyclic_incidence_graph(3, {0, 1}), cycle(6)));
}

TEST_CASE("named graphs") {
  const Graph p = named_graph("petersen");
  CHECK(p.size() == 10);
  CHECK(is_regular(p) == std::size_t{3});
  CHECK(girth(p) == 5);
  const Graph d = named_graph("dodecahedron");
  CHECK(d.size() == 20);
  CHECK(is_regular(d) == std::size_t{3});
  CHECK(girth(d) == 5);
  CHECK(diameter(d) == 5);
  const Graph h = named_graph("heawood");
  CHECK(h.size() == 14);
  CHECK(girth(h) == 6);
  CHECK_THROWS_AS(named_graph("nope"), std::invalid_argument);
}

TEST_CASE("zig-zag product") {
  const Graph g = zigzag(labelled_hypercube(6), cycle(6));
  CHECK(g.size() == 64 * 6);
  CHECK(is_regular(g) == std::size_t{4});
  CHECK(g.label(0) == "(000000,1)");
  CHECK(g.adjacent(*g.find_label("(000000,1)"), *g.find_label("(010000,3)")));
  CHECK(zigzag(labelled_hypercube(8), cycle(8)).size() == 256 * 8);
  CHECK_THROWS_AS(zigzag(labelled_hypercube(5), cycle(6)), std::invalid_argument);
}
