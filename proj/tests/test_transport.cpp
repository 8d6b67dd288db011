#include "graphcurv/generators.hpp"
#include "graphcurv/structure.hpp"
#include "graphcurv/transport.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace graphcurv;

namespace {

Graph random_graph(std::size_t n, double p, unsigned seed) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

std::size_t max_degree(const Graph& g) {
  std::size_t d = 0;
  for (VertexId v = 0; v < g.size(); ++v) d = std::max(d, g.degree(v));
  return d;
}

}  // namespace

TEST_CASE("lazy measures") {
  const LazyMeasure mu = lazy_measure(hypercube(3), 0);
  CHECK(mu.total() == 1);
  CHECK(mu.mass(0) == Rational(1, 2));
  CHECK(mu.mass(1) == Rational(1, 6));
  CHECK(mu.mass(7) == 0);
  const Graph lonely(1, std::vector<Edge>{});
  CHECK_THROWS_AS(lazy_measure(lonely, 0), std::domain_error);
}

TEST_CASE("kappa of a single edge is 1") {
  const std::vector<Edge> edge{{0, 1}};
  const Graph k2(2, edge);
  CHECK(ollivier_kappa(k2, 0, 1) == 1);
  CHECK(oracle::kappa_by_enumeration(k2, 0, 1) == 1);
}

TEST_CASE("closed forms on standard families") {
  for (long d = 2; d <= 6; ++d) CHECK(ollivier_kappa(hypercube(d), 0, 1) == Rational(1, d));
  for (long n = 2; n <= 6; ++n) CHECK(ollivier_kappa(complete_bipartite(n), 0, n) == Rational(1, n));
  CHECK(ollivier_kappa(cycle(6), 0, 1) == 0);
  CHECK(ollivier_kappa(named_graph("dodecahedron"), 0, 1) == 0);
  CHECK(ollivier_kappa(transposition_cayley(4), 0, transposition_cayley(4).neighbors(0)[0]) == Rational(1, 6));
}

TEST_CASE("min-cost flow agrees with exhaustive transport search") {
  std::vector<Graph> graphs{cycle(5), cycle(7), named_graph("petersen"), hypercube(3), star(4), flip_graph(5),
                            adjacent_transposition_cayley(3), named_graph("heawood")};
  for (unsigned seed = 0; seed < 12; ++seed) graphs.push_back(random_graph(9, 0.3, seed));
  for (const Graph& g : graphs) {
    if (max_degree(g) > 4) continue;
    for (const Edge& e : g.edges()) {
      CHECK(ollivier_kappa(g, e.u, e.v) == oracle::kappa_by_enumeration(g, e.u, e.v));
    }
  }
}

TEST_CASE("optimal plan and potential certify each other") {
  for (const Graph& g : {named_graph("petersen"), hypercube(4), star(5), cycle(5), zigzag(labelled_hypercube(4), cycle(4))}) {
    for (const Edge& e : g.edges()) {
      const OllivierResult r = ollivier_curvature(g, e.u, e.v);
      const auto mu = lazy_measure(g, e.u);
      const auto nu = lazy_measure(g, e.v);
      CHECK(plan_is_feasible(r.transport.plan, mu, nu));
      CHECK(r.transport.plan.total_cost == r.transport.distance);
      CHECK(r.transport.certificate.gap == 0);
      CHECK(dual_value(r.transport.certificate.values, mu, nu) == r.transport.distance);
      CHECK(is_one_lipschitz(g, r.transport.certificate.values));
      const auto extended = extend_certificate(g, r.transport.certificate, e.u, e.v);
      CHECK(is_one_lipschitz(g, extended.values));
      CHECK(dual_value(extended.values, mu, nu) == r.transport.distance);
      CHECK(r.kappa == 1 - r.transport.distance);
    }
  }
}

TEST_CASE("kappa is symmetric") {
  const Graph g = named_graph("dodecahedron");
  const Graph s = star(4);
  for (const Graph* h : {&g, &s}) {
    for (const Edge& e : h->edges()) CHECK(ollivier_kappa(*h, e.u, e.v) == ollivier_kappa(*h, e.v, e.u));
  }
}

TEST_CASE("kappa sits on the 1/(2d) grid for regular graphs") {
  for (const Graph& g : {named_graph("petersen"), flip_graph(6), hypercube(5), cycle(8)}) {
    const long d = static_cast<long>(*is_regular(g));
    for (const Edge& e : g.edges()) {
      CHECK(boost::multiprecision::denominator(ollivier_kappa(g, e.u, e.v) * 2 * d) == 1);
    }
  }
}

TEST_CASE("constructive witnesses bracket W1") {
  for (const Graph& g : {named_graph("petersen"), hypercube(4), complete_bipartite(3), named_graph("heawood"), cycle(5)}) {
    for (const Edge& e : g.edges()) {
      const Rational w1 = ollivier_curvature(g, e.u, e.v).transport.distance;
      const auto mu = lazy_measure(g, e.u);
      const auto nu = lazy_measure(g, e.v);
      if (const auto plan = kappa_lower_witness(g, e.u, e.v)) {
        CHECK(plan_is_feasible(*plan, mu, nu));
        CHECK(plan->total_cost >= w1);
      }
      if (const auto cert = kappa_upper_witness(g, e.u, e.v)) {
        CHECK(is_one_lipschitz(g, cert->values));
        CHECK(cert->value <= w1);
        CHECK(cert->gap == w1 - cert->value);
      }
    }
  }
  // Decomposable edges: the biclique plan is optimal, W1 = 1 - 1/d.
  const auto plan = kappa_lower_witness(hypercube(4), 0, 1);
  REQUIRE(plan.has_value());
  CHECK(plan->total_cost == Rational(3, 4));
  // Petersen (N = 2): the potential reaches 1 + (N - 2)/(2d) = 1 = W1.
  const auto cert = kappa_upper_witness(named_graph("petersen"), 0, 1);
  REQUIRE(cert.has_value());
  CHECK(cert->value == 1);
  CHECK(cert->gap == 0);
}

TEST_CASE("zig-zag edge with negative curvature") {
  const Graph g = zigzag(labelled_hypercube(6), cycle(6));
  const auto x = *g.find_label("(000000,1)");
  const auto y = *g.find_label("(010000,3)");
  REQUIRE(g.adjacent(x, y));
  CHECK(ollivier_kappa(g, x, y) == Rational(-1, 4));
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(ollivier_kappa(hypercube(3), 0, 3), std::domain_error);
  const Graph tree = regular_tree(3, 4);
  const VertexId leaf = tree.size() - 1;
  CHECK_THROWS_AS(ollivier_kappa(tree, leaf, tree.neighbors(leaf)[0]), std::domain_error);
}
