#pragma once

// Exact L1-Wasserstein distances between finitely supported measures on a graph, and the
// Ollivier curvature kappa(x,y) = 1 - W1(mu_x, mu_y) built on them.
//
// Masses are scaled by the lcm of their denominators and moved by an integral min-cost
// flow, so W1 comes out as an exact rational. The node potentials of the final residual
// network give an integer 1-Lipschitz dual certificate.

#include "graphcurv/graph.hpp"
#include "graphcurv/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace graphcurv {

/// Probability measure with finite support; masses are positive and sum to 1.
struct LazyMeasure {
  std::map<VertexId, Rational> support;

  Rational mass(VertexId v) const {
    const auto it = support.find(v);
    return it == support.end() ? Rational(0) : it->second;
  }
  Rational total() const;
};

/// mu_x: 1/2 at x and 1/(2 deg x) at each neighbor. Throws std::domain_error for an
/// unknown or isolated vertex.
LazyMeasure lazy_measure(const Graph& g, VertexId x);

/// Two measures on a common sorted point set with the hop distances between the points.
struct TransportProblem {
  std::vector<VertexId> points;
  Vector<Rational> mu;
  Vector<Rational> nu;
  Matrix<long> cost;
};

/// Throws std::domain_error if the supports are not mutually reachable in g.
TransportProblem make_transport_problem(const Graph& g, const LazyMeasure& mu, const LazyMeasure& nu);

struct Flow {
  VertexId from = 0;
  VertexId to = 0;
  Rational mass;
  long distance = 0;
};

struct TransportPlan {
  std::vector<Flow> flows;
  Rational total_cost;
};

/// Integer potential f with |f(a) - f(b)| <= d(a,b) on its domain.
/// `value` = sum f dnu - sum f dmu; `gap` = W1 - value (zero for an optimal certificate).
struct LipschitzCertificate {
  std::map<VertexId, long> values;
  Rational value;
  Rational gap;
};

struct WassersteinResult {
  Rational distance;
  TransportPlan plan;
  LipschitzCertificate certificate;
};

/// Throws std::domain_error if the two measures have different total mass.
WassersteinResult wasserstein(const TransportProblem& problem);

/// sum f dnu - sum f dmu for a potential defined on both supports.
Rational dual_value(const std::map<VertexId, long>& potential, const LazyMeasure& mu, const LazyMeasure& nu);

/// Extends a certificate to every vertex within distance 2 of x or y by
/// f(z) = min_a (f(a) + d(a, z)); keeps 1-Lipschitz-ness.
LipschitzCertificate extend_certificate(const Graph& g, const LipschitzCertificate& cert, VertexId x, VertexId y);

/// True when |f(a) - f(b)| <= 1 on every edge with both ends in the domain.
bool is_one_lipschitz(const Graph& g, const std::map<VertexId, long>& potential);

/// True when the plan's marginals are exactly mu and nu and total_cost matches its flows.
bool plan_is_feasible(const TransportPlan& plan, const LazyMeasure& mu, const LazyMeasure& nu);

struct OllivierResult {
  Rational kappa;
  WassersteinResult transport;
};

/// Throws std::domain_error if x, y are not adjacent or the edge is too close to a
/// truncation boundary for exact distances.
OllivierResult ollivier_curvature(const Graph& g, VertexId x, VertexId y);
Rational ollivier_kappa(const Graph& g, VertexId x, VertexId y);

/// Explicit transport plan bounding W1 from above. Uses the biclique blocks when the
/// edge decomposes into them; otherwise (regular, K3-free, K_{2,3}-free) sends x -> y,
/// each linked neighbor of x to its linking vertex, and pairs the rest arbitrarily.
/// nullopt when neither construction applies.
std::optional<TransportPlan> kappa_lower_witness(const Graph& g, VertexId x, VertexId y);

/// Potential bounding W1 from below for a regular triangle-free graph: 0 at x and its other
/// neighbors, 1 at y, at vertices linking y to N(x), and elsewhere, 2 at the remaining
/// neighbors of y. Its value is 1 + (N_x(y) - 2) / (2d) when the graph is also K_{2,3}-free.
/// nullopt when the hypotheses fail or the potential is not 1-Lipschitz.
std::optional<LipschitzCertificate> kappa_upper_witness(const Graph& g, VertexId x, VertexId y);

}  // namespace graphcurv
