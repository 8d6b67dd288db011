// Randomized and exhaustive checks of structural invariants.

#include "graphcurv/generators.hpp"
#include "graphcurv/spectral.hpp"
#include "graphcurv/structure.hpp"
#include "graphcurv/transport.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace graphcurv;

namespace {

Graph random_graph(std::size_t n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

// Every graph on n labelled vertices, indexed by the bitmask of its edges.
Graph graph_from_mask(std::size_t n, unsigned mask) {
  std::vector<Edge> edges;
  unsigned bit = 0;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v, ++bit)
      if (mask & (1u << bit)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

bool brute_k23(const Graph& g) {
  for (VertexId a = 0; a < g.size(); ++a) {
    for (VertexId b = a + 1; b < g.size(); ++b) {
      std::size_t common = 0;
      for (VertexId c = 0; c < g.size(); ++c)
        if (g.adjacent(a, c) && g.adjacent(b, c)) ++common;
      if (common >= 3) return true;
    }
  }
  return false;
}

bool brute_k3(const Graph& g) {
  for (VertexId a = 0; a < g.size(); ++a)
    for (VertexId b = a + 1; b < g.size(); ++b)
      for (VertexId c = b + 1; c < g.size(); ++c)
        if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c)) return true;
  return false;
}

}  // namespace

TEST_CASE("subgraph detection agrees with brute force") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_graph(9, 0.15 + 0.003 * trial, rng);
    CHECK(contains_k23(g) == brute_k23(g));
    CHECK(contains_k3(g) == brute_k3(g));
  }
}

TEST_CASE("interchange hypothesis matches the generated Cayley graph for every H on <= 5 vertices") {
  for (std::size_t n = 2; n <= 5; ++n) {
    const unsigned pairs = static_cast<unsigned>(n * (n - 1) / 2);
    for (unsigned mask = 1; mask < (1u << pairs); ++mask) {
      const Graph h = graph_from_mask(n, mask);
      const Graph cayley = interchange_graph(h);
      const ClassVerdict verdict = classify_vertex(cayley, 0);
      const InterchangeClass predicted = interchange_hypothesis(h);
      CAPTURE(n);
      CAPTURE(mask);
      switch (predicted) {
        case InterchangeClass::class_i: CHECK(verdict.hypothesis_class == HypothesisClass::class_i); break;
        case InterchangeClass::class_ii: CHECK(verdict.hypothesis_class == HypothesisClass::class_ii); break;
        case InterchangeClass::class_iii: CHECK(verdict.hypothesis_class == HypothesisClass::class_iii); break;
        case InterchangeClass::k23_present:
          CHECK(verdict.hypothesis_class == HypothesisClass::inapplicable);
          CHECK(contains_k23(cayley));
          break;
      }
    }
  }
}

TEST_CASE("strong duality and symmetry on random graphs") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    const Graph g = random_graph(12, 0.3, rng);
    for (const Edge& e : g.edges()) {
      const OllivierResult forward = ollivier_curvature(g, e.u, e.v);
      const OllivierResult backward = ollivier_curvature(g, e.v, e.u);
      CHECK(forward.kappa == backward.kappa);
      CHECK(forward.transport.certificate.gap == 0);
      CHECK(plan_is_feasible(forward.transport.plan, lazy_measure(g, e.u), lazy_measure(g, e.v)));
      CHECK(is_one_lipschitz(g, extend_certificate(g, forward.transport.certificate, e.u, e.v).values));
    }
  }
}

TEST_CASE("kappa grid: multiples of 1/(2 lcm(dx, dy))") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = random_graph(10, 0.4, rng);
    for (const Edge& e : g.edges()) {
      const long dx = static_cast<long>(g.degree(e.u));
      const long dy = static_cast<long>(g.degree(e.v));
      const long l = std::lcm(dx, dy);
      CHECK(boost::multiprecision::denominator(ollivier_kappa(g, e.u, e.v) * 2 * l) == 1);
    }
  }
}

TEST_CASE("exact and floating Gamma_2 forms coincide") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = random_graph(10, 0.35, rng);
    for (VertexId x = 0; x < g.size(); ++x) {
      const LocalBall ball = extract_ball(g, x);
      const auto exact = gamma2_form<Rational>(ball);
      const auto approx = gamma2_form<double>(ball);
      for (Eigen::Index i = 0; i < exact.matrix.rows(); ++i)
        for (Eigen::Index j = 0; j < exact.matrix.cols(); ++j)
          CHECK(to_double(exact.matrix(i, j)) == approx.matrix(i, j));
    }
  }
}

TEST_CASE("rho is attained by the returned minimizer") {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 15; ++trial) {
    const Graph g = random_graph(10, 0.4, rng);
    for (VertexId x = 0; x < g.size(); ++x) {
      if (g.degree(x) == 0) continue;
      const LocalBall ball = extract_ball(g, x);
      const CdResult cd = cd_curvature(ball);
      const auto full = gamma2_form<double>(ball);
      const auto n1 = static_cast<Eigen::Index>(ball.sphere1.size());
      CHECK(cd.minimizer.head(n1).norm() == doctest::Approx(1.0));
      CHECK((optimal_extension(ball, Vector<double>(cd.minimizer.head(n1))) - cd.minimizer).norm() < 1e-12);
      // 2 Gamma f(x) = |f|^2 = 1 on sphere 1.
      CHECK(full(cd.minimizer) == doctest::Approx(cd.rho).epsilon(1e-9).scale(1.0));
    }
  }
}
