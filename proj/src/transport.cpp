#include "graphcurv/transport.hpp"

#include "graphcurv/structure.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>

namespace graphcurv {

namespace {

using boost::multiprecision::cpp_int;

constexpr long kInfinity = std::numeric_limits<long>::max() / 4;

long to_units(const Rational& mass, const cpp_int& scale) {
  const Rational scaled = mass * scale;
  if (boost::multiprecision::denominator(scaled) != 1) throw std::logic_error("mass not on the scaling grid");
  return boost::multiprecision::numerator(scaled).convert_to<long>();
}

// Integral transportation problem: move supply[i] units from source i to meet demand[j]
// at sink j, cost[i][j] per unit, by successive shortest augmenting paths.
struct FlowNetwork {
  std::vector<long> supply;
  std::vector<long> demand;
  Matrix<long> cost;
  Matrix<long> flow;

  std::size_t sources() const { return supply.size(); }
  std::size_t sinks() const { return demand.size(); }
  std::size_t nodes() const { return sources() + sinks(); }

  // Bellman-Ford over the residual network. Node k < sources() is source k, otherwise
  // sink k - sources(). Forward arcs source->sink have infinite capacity; backward arcs
  // exist where flow is positive.
  void shortest_paths(std::vector<long>& dist, std::vector<long>& parent) const {
    const auto m = static_cast<Eigen::Index>(sources());
    const auto n = static_cast<Eigen::Index>(sinks());
    parent.assign(nodes(), -1);
    for (std::size_t round = 0; round < nodes(); ++round) {
      bool changed = false;
      for (Eigen::Index i = 0; i < m; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
          const auto sink = static_cast<std::size_t>(m + j);
          const auto src = static_cast<std::size_t>(i);
          if (dist[src] < kInfinity && dist[src] + cost(i, j) < dist[sink]) {
            dist[sink] = dist[src] + cost(i, j);
            parent[sink] = static_cast<long>(src);
            changed = true;
          }
          if (flow(i, j) > 0 && dist[sink] < kInfinity && dist[sink] - cost(i, j) < dist[src]) {
            dist[src] = dist[sink] - cost(i, j);
            parent[src] = static_cast<long>(sink);
            changed = true;
          }
        }
      }
      if (!changed) return;
    }
    throw std::logic_error("negative cycle in residual network");
  }

  void solve() {
    const auto m = static_cast<Eigen::Index>(sources());
    flow = Matrix<long>::Zero(m, static_cast<Eigen::Index>(sinks()));
    std::vector<long> left = supply;
    std::vector<long> need = demand;
    std::vector<long> dist;
    std::vector<long> parent;
    while (std::accumulate(left.begin(), left.end(), 0L) > 0) {
      dist.assign(nodes(), kInfinity);
      for (std::size_t i = 0; i < sources(); ++i) {
        if (left[i] > 0) dist[i] = 0;
      }
      shortest_paths(dist, parent);
      std::size_t target = nodes();
      for (std::size_t j = 0; j < sinks(); ++j) {
        const std::size_t node = sources() + j;
        if (need[j] > 0 && dist[node] < kInfinity && (target == nodes() || dist[node] < dist[target])) {
          target = node;
        }
      }
      if (target == nodes()) throw std::logic_error("no augmenting path");

      long amount = need[target - sources()];
      std::size_t node = target;
      while (parent[node] >= 0) {
        const auto prev = static_cast<std::size_t>(parent[node]);
        if (node < sources()) {  // backward arc sink(prev) -> source(node)
          amount = std::min(amount, flow(static_cast<Eigen::Index>(node), static_cast<Eigen::Index>(prev - sources())));
        }
        node = prev;
      }
      amount = std::min(amount, left[node]);

      const std::size_t origin = node;
      node = target;
      while (parent[node] >= 0) {
        const auto prev = static_cast<std::size_t>(parent[node]);
        if (node >= sources()) {
          flow(static_cast<Eigen::Index>(prev), static_cast<Eigen::Index>(node - sources())) += amount;
        } else {
          flow(static_cast<Eigen::Index>(node), static_cast<Eigen::Index>(prev - sources())) -= amount;
        }
        node = prev;
      }
      left[origin] -= amount;
      need[target - sources()] -= amount;
    }
  }

  // Potentials from a virtual root joined to every node by zero-cost arcs.
  std::vector<long> potentials() const {
    std::vector<long> dist(nodes(), 0);
    std::vector<long> parent;
    shortest_paths(dist, parent);
    return dist;
  }
};

}  // namespace

Rational LazyMeasure::total() const {
  Rational sum(0);
  for (const auto& [v, m] : support) sum += m;
  return sum;
}

LazyMeasure lazy_measure(const Graph& g, VertexId x) {
  if (!g.contains(x)) throw std::domain_error("unknown vertex " + std::to_string(x));
  const std::size_t d = g.degree(x);
  if (d == 0) throw std::domain_error("vertex " + std::to_string(x) + " is isolated");
  LazyMeasure mu;
  mu.support[x] = Rational(1, 2);
  for (VertexId v : g.neighbors(x)) mu.support[v] = Rational(1, 2 * static_cast<long>(d));
  return mu;
}

TransportProblem make_transport_problem(const Graph& g, const LazyMeasure& mu, const LazyMeasure& nu) {
  std::set<VertexId> point_set;
  for (const auto& [v, m] : mu.support) point_set.insert(v);
  for (const auto& [v, m] : nu.support) point_set.insert(v);

  TransportProblem problem;
  problem.points.assign(point_set.begin(), point_set.end());
  const auto p = static_cast<Eigen::Index>(problem.points.size());
  problem.mu.resize(p);
  problem.nu.resize(p);
  problem.cost.resize(p, p);
  for (Eigen::Index a = 0; a < p; ++a) {
    const VertexId va = problem.points[static_cast<std::size_t>(a)];
    problem.mu(a) = mu.mass(va);
    problem.nu(a) = nu.mass(va);
    const auto dist = distances_from(g, va);
    for (Eigen::Index b = 0; b < p; ++b) {
      const std::size_t d = dist[problem.points[static_cast<std::size_t>(b)]];
      if (d == kUnreachable) throw std::domain_error("measure supports lie in different components");
      problem.cost(a, b) = static_cast<long>(d);
    }
  }
  return problem;
}

WassersteinResult wasserstein(const TransportProblem& problem) {
  const auto p = static_cast<Eigen::Index>(problem.points.size());
  if (problem.mu.sum() != problem.nu.sum()) throw std::domain_error("measures have different total mass");

  cpp_int scale = 1;
  for (Eigen::Index a = 0; a < p; ++a) {
    scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(Rational(problem.mu(a))));
    scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(Rational(problem.nu(a))));
  }

  std::vector<Eigen::Index> src;
  std::vector<Eigen::Index> dst;
  FlowNetwork net;
  for (Eigen::Index a = 0; a < p; ++a) {
    if (problem.mu(a) > 0) {
      src.push_back(a);
      net.supply.push_back(to_units(problem.mu(a), scale));
    }
    if (problem.nu(a) > 0) {
      dst.push_back(a);
      net.demand.push_back(to_units(problem.nu(a), scale));
    }
  }
  const auto m = static_cast<Eigen::Index>(src.size());
  const auto n = static_cast<Eigen::Index>(dst.size());
  net.cost.resize(m, n);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) net.cost(i, j) = problem.cost(src[i], dst[j]);
  }
  net.solve();

  WassersteinResult result;
  long scaled_cost = 0;
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (net.flow(i, j) == 0) continue;
      scaled_cost += net.flow(i, j) * net.cost(i, j);
      result.plan.flows.push_back(Flow{problem.points[static_cast<std::size_t>(src[i])],
                                       problem.points[static_cast<std::size_t>(dst[j])],
                                       Rational(cpp_int(net.flow(i, j)), scale), net.cost(i, j)});
    }
  }
  result.plan.total_cost = Rational(cpp_int(scaled_cost), scale);
  result.distance = result.plan.total_cost;

  // c-transform of the source potentials: f(z) = min_i (pi_i + d(s_i, z)).
  const auto pi = net.potentials();
  std::vector<long> f(static_cast<std::size_t>(p), kInfinity);
  for (Eigen::Index a = 0; a < p; ++a) {
    for (Eigen::Index i = 0; i < m; ++i) {
      f[static_cast<std::size_t>(a)] = std::min(f[static_cast<std::size_t>(a)], pi[static_cast<std::size_t>(i)] + problem.cost(src[i], a));
    }
  }
  const long floor = p > 0 ? *std::min_element(f.begin(), f.end()) : 0;
  Rational value(0);
  for (Eigen::Index a = 0; a < p; ++a) {
    const long fa = f[static_cast<std::size_t>(a)] - floor;
    result.certificate.values[problem.points[static_cast<std::size_t>(a)]] = fa;
    value += Rational(fa) * (problem.nu(a) - problem.mu(a));
  }
  result.certificate.value = value;
  result.certificate.gap = result.distance - value;
  return result;
}

Rational dual_value(const std::map<VertexId, long>& potential, const LazyMeasure& mu, const LazyMeasure& nu) {
  Rational value(0);
  for (const auto& [v, m] : nu.support) value += Rational(potential.at(v)) * m;
  for (const auto& [v, m] : mu.support) value -= Rational(potential.at(v)) * m;
  return value;
}

LipschitzCertificate extend_certificate(const Graph& g, const LipschitzCertificate& cert, VertexId x, VertexId y) {
  std::set<VertexId> region;
  for (const auto& [v, d] : bfs_distances(g, x, 2)) region.insert(v);
  for (const auto& [v, d] : bfs_distances(g, y, 2)) region.insert(v);
  std::map<VertexId, long> extended;
  for (const auto& [a, fa] : cert.values) {
    const auto dist = distances_from(g, a);
    for (VertexId z : region) {
      if (dist[z] == kUnreachable) continue;
      const long candidate = fa + static_cast<long>(dist[z]);
      auto [it, inserted] = extended.emplace(z, candidate);
      if (!inserted) it->second = std::min(it->second, candidate);
    }
  }
  LipschitzCertificate out = cert;
  out.values = std::move(extended);
  return out;
}

bool is_one_lipschitz(const Graph& g, const std::map<VertexId, long>& potential) {
  for (const auto& [v, fv] : potential) {
    for (VertexId w : g.neighbors(v)) {
      const auto it = potential.find(w);
      if (it != potential.end() && std::abs(it->second - fv) > 1) return false;
    }
  }
  return true;
}

bool plan_is_feasible(const TransportPlan& plan, const LazyMeasure& mu, const LazyMeasure& nu) {
  std::map<VertexId, Rational> out;
  std::map<VertexId, Rational> in;
  Rational cost(0);
  for (const Flow& f : plan.flows) {
    if (f.mass <= 0) return false;
    out[f.from] += f.mass;
    in[f.to] += f.mass;
    cost += f.mass * f.distance;
  }
  return out == mu.support && in == nu.support && cost == plan.total_cost;
}

OllivierResult ollivier_curvature(const Graph& g, VertexId x, VertexId y) {
  if (!g.contains(x) || !g.contains(y) || !g.adjacent(x, y)) {
    throw std::domain_error("vertices " + std::to_string(x) + " and " + std::to_string(y) + " are not adjacent");
  }
  if (!g.edge_probe_safe(x, y)) {
    throw std::domain_error("edge " + g.label(x) + " - " + g.label(y) +
                            " is too close to the truncation boundary for exact distances");
  }
  const auto problem = make_transport_problem(g, lazy_measure(g, x), lazy_measure(g, y));
  OllivierResult result;
  result.transport = wasserstein(problem);
  result.kappa = Rational(1) - result.transport.distance;
  return result;
}

Rational ollivier_kappa(const Graph& g, VertexId x, VertexId y) { return ollivier_curvature(g, x, y).kappa; }

std::optional<TransportPlan> kappa_lower_witness(const Graph& g, VertexId x, VertexId y) {
  if (!g.contains(x) || !g.contains(y) || !g.adjacent(x, y)) {
    throw std::domain_error("kappa_lower_witness needs an edge");
  }
  const long d = static_cast<long>(g.degree(x));
  if (static_cast<long>(g.degree(y)) != d) return std::nullopt;
  const Rational unit(1, 2 * d);

  TransportPlan plan;
  auto send = [&](VertexId from, VertexId to, const Rational& mass, long distance) {
    plan.flows.push_back(Flow{from, to, mass, distance});
    plan.total_cost += mass * distance;
  };
  send(x, x, unit, 0);
  send(y, y, unit, 0);
  if (d > 1) send(x, y, Rational(1, 2) - unit, 1);

  std::optional<std::vector<BicliquePart>> blocks;
  try {
    blocks = bipartite_decomposition(g, x, y);
  } catch (const std::domain_error&) {
  }
  if (blocks) {
    for (const BicliquePart& part : *blocks) {
      for (std::size_t k = 0; k < part.s.size(); ++k) send(part.s[k], part.t[k], unit, 1);
    }
    return plan;
  }

  if (!analyze_hypotheses(g).sign_theorems_apply()) return std::nullopt;
  std::vector<VertexId> unlinked;
  std::set<VertexId> used;
  for (VertexId v : g.neighbors(x)) {
    if (v == y) continue;
    std::optional<VertexId> link;
    for (VertexId w : common_neighbors(g, v, y)) {
      if (w != x) link = w;
    }
    if (link) {
      send(v, *link, unit, 1);
      used.insert(*link);
    } else {
      unlinked.push_back(v);
    }
  }
  std::vector<VertexId> spare;
  for (VertexId u : g.neighbors(y)) {
    if (u != x && !used.count(u)) spare.push_back(u);
  }
  if (spare.size() != unlinked.size()) return std::nullopt;
  for (std::size_t k = 0; k < unlinked.size(); ++k) {
    const auto dist = distances_from(g, unlinked[k]);
    send(unlinked[k], spare[k], unit, static_cast<long>(dist[spare[k]]));
  }
  return plan;
}

std::optional<LipschitzCertificate> kappa_upper_witness(const Graph& g, VertexId x, VertexId y) {
  if (!g.contains(x) || !g.contains(y) || !g.adjacent(x, y)) {
    throw std::domain_error("kappa_upper_witness needs an edge");
  }
  const GraphHypotheses h = analyze_hypotheses(g);
  if (!h.degree || h.has_k3 || !g.edge_probe_safe(x, y)) return std::nullopt;

  LipschitzCertificate cert;
  for (const auto& [v, dist] : bfs_distances(g, x, 2)) cert.values[v] = 1;
  for (const auto& [v, dist] : bfs_distances(g, y, 2)) cert.values[v] = 1;
  cert.values[x] = 0;
  for (VertexId v : g.neighbors(x)) {
    if (v != y) cert.values[v] = 0;
  }
  for (VertexId u : g.neighbors(y)) {
    if (u == x) continue;
    const bool links = std::any_of(g.neighbors(u).begin(), g.neighbors(u).end(),
                                   [&](VertexId v) { return v != y && g.adjacent(v, x); });
    cert.values[u] = links ? 1 : 2;
  }
  if (!is_one_lipschitz(g, cert.values)) return std::nullopt;

  const LazyMeasure mu = lazy_measure(g, x);
  const LazyMeasure nu = lazy_measure(g, y);
  cert.value = dual_value(cert.values, mu, nu);
  cert.gap = wasserstein(make_transport_problem(g, mu, nu)).distance - cert.value;
  return cert;
}

}  // namespace graphcurv
