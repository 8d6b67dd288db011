#include "graphcurv/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace graphcurv {

Graph::Graph(std::size_t vertex_count, std::span<const Edge> edges,
             std::vector<std::string> labels, std::optional<Truncation> truncation)
    : adjacency_(vertex_count),
      edges_(edges.begin(), edges.end()),
      labels_(std::move(labels)),
      truncation_(truncation) {
  if (!labels_.empty() && labels_.size() != vertex_count) {
    throw std::invalid_argument("label count does not match vertex count");
  }
  for (const Edge& e : edges_) {
    if (e.u == e.v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    }
    if (e.v >= vertex_count) {
      throw std::invalid_argument("edge endpoint " + std::to_string(e.v) + " out of range");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw std::invalid_argument("repeated edge");
  }
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& row : adjacency_) std::sort(row.begin(), row.end());

  if (truncation_) {
    if (truncation_->center >= vertex_count) {
      throw std::invalid_argument("truncation center out of range");
    }
    center_depth_ = distances_from(*this, truncation_->center);
  }
}

bool Graph::adjacent(VertexId u, VertexId v) const {
  const auto& row = adjacency_.at(u);
  return std::binary_search(row.begin(), row.end(), v);
}

std::string Graph::label(VertexId v) const {
  if (labels_.empty()) return std::to_string(v);
  return labels_.at(v);
}

std::optional<VertexId> Graph::find_label(const std::string& label) const {
  for (VertexId v = 0; v < size(); ++v) {
    if (this->label(v) == label) return v;
  }
  return std::nullopt;
}

bool Graph::vertex_probe_safe(VertexId v) const {
  if (!truncation_) return contains(v);
  const std::size_t depth = center_depth_.at(v);
  return depth != kUnreachable && depth + 2 <= truncation_->radius;
}

bool Graph::edge_probe_safe(VertexId x, VertexId y) const {
  if (!truncation_) return contains(x) && contains(y);
  if (truncation_->radius < 4) return false;
  const std::size_t depth = std::max(center_depth_.at(x), center_depth_.at(y));
  return depth != kUnreachable && depth + 3 <= truncation_->radius;
}

std::vector<std::size_t> distances_from(const Graph& g, VertexId source) {
  if (!g.contains(source)) {
    throw std::domain_error("unknown vertex " + std::to_string(source));
  }
  std::vector<std::size_t> dist(g.size(), kUnreachable);
  std::deque<VertexId> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    for (VertexId w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::map<VertexId, std::size_t> bfs_distances(const Graph& g, VertexId source, std::size_t radius) {
  if (!g.contains(source)) {
    throw std::domain_error("unknown vertex " + std::to_string(source));
  }
  std::map<VertexId, std::size_t> dist{{source, 0}};
  std::deque<VertexId> queue{source};
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    const std::size_t du = dist[u];
    if (du == radius) continue;
    for (VertexId w : g.neighbors(u)) {
      if (dist.emplace(w, du + 1).second) queue.push_back(w);
    }
  }
  return dist;
}

LocalBall extract_ball(const Graph& g, VertexId x) {
  if (!g.contains(x)) {
    throw std::domain_error("unknown vertex " + std::to_string(x));
  }
  LocalBall ball;
  ball.base = x;
  for (const auto& [v, d] : bfs_distances(g, x, 2)) {
    if (d == 1) ball.sphere1.push_back(v);
    if (d == 2) ball.sphere2.push_back(v);
  }
  ball.vertices.push_back(x);
  ball.vertices.insert(ball.vertices.end(), ball.sphere1.begin(), ball.sphere1.end());
  ball.vertices.insert(ball.vertices.end(), ball.sphere2.begin(), ball.sphere2.end());
  for (std::size_t i = 0; i < ball.vertices.size(); ++i) ball.local[ball.vertices[i]] = i;

  ball.adjacency.resize(ball.vertices.size());
  for (std::size_t i = 0; i < ball.vertices.size(); ++i) {
    const VertexId v = ball.vertices[i];
    ball.degrees.push_back(g.degree(v));
    for (VertexId w : g.neighbors(v)) {
      auto it = ball.local.find(w);
      if (it == ball.local.end()) continue;
      ball.adjacency[i].push_back(it->second);
      if (v < w) ball.edges.emplace_back(v, w);
    }
  }
  std::sort(ball.edges.begin(), ball.edges.end());
  ball.complete = g.vertex_probe_safe(x);
  return ball;
}

Graph LocalBall::as_graph() const {
  std::vector<Edge> local_edges;
  local_edges.reserve(edges.size());
  for (const Edge& e : edges) local_edges.emplace_back(local.at(e.u), local.at(e.v));
  std::vector<std::string> names;
  names.reserve(vertices.size());
  for (VertexId v : vertices) names.push_back(std::to_string(v));
  return Graph(vertices.size(), local_edges, std::move(names));
}

std::vector<VertexId> common_neighbors(const Graph& g, VertexId u, VertexId v) {
  std::vector<VertexId> out;
  const auto a = g.neighbors(u);
  const auto b = g.neighbors(v);
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool contains_k3(const Graph& g) {
  for (const Edge& e : g.edges()) {
    if (!common_neighbors(g, e.u, e.v).empty()) return true;
  }
  return false;
}

bool contains_k23(const Graph& g) {
  // Count 2-paths u - m - w for each u; a pair reached through three middles is a K_{2,3}.
  std::vector<std::size_t> hits(g.size(), 0);
  for (VertexId u = 0; u < g.size(); ++u) {
    std::vector<VertexId> touched;
    for (VertexId m : g.neighbors(u)) {
      for (VertexId w : g.neighbors(m)) {
        if (w == u) continue;
        if (hits[w]++ == 0) touched.push_back(w);
        if (hits[w] >= 3) {
          for (VertexId t : touched) hits[t] = 0;
          return true;
        }
      }
    }
    for (VertexId t : touched) hits[t] = 0;
  }
  return false;
}

std::optional<std::size_t> is_regular(const Graph& g) {
  if (g.size() == 0) return std::nullopt;
  const std::size_t d = g.degree(0);
  for (VertexId v = 1; v < g.size(); ++v) {
    if (g.degree(v) != d) return std::nullopt;
  }
  return d;
}

bool is_connected(const Graph& g) {
  if (g.size() == 0) return false;
  const auto dist = distances_from(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](std::size_t d) { return d == kUnreachable; });
}

std::size_t diameter(const Graph& g) {
  if (!is_connected(g)) throw std::domain_error("diameter of a disconnected graph");
  std::size_t best = 0;
  for (VertexId v = 0; v < g.size(); ++v) {
    const auto dist = distances_from(g, v);
    best = std::max(best, *std::max_element(dist.begin(), dist.end()));
  }
  return best;
}

}  // namespace graphcurv
