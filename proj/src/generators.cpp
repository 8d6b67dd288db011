#include "graphcurv/generators.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>

namespace graphcurv {

namespace {

using Permutation = std::vector<std::size_t>;

std::string permutation_label(const Permutation& p) {
  std::string out;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p.size() > 9 && k > 0) out += ',';
    out += std::to_string(p[k] + 1);
  }
  return out;
}

// Dense ids for arbitrary keys, in insertion order.
template <typename Key>
class Interner {
 public:
  std::pair<VertexId, bool> intern(const Key& key) {
    auto [it, inserted] = ids_.emplace(key, keys_.size());
    if (inserted) keys_.push_back(key);
    return {it->second, inserted};
  }
  std::optional<VertexId> find(const Key& key) const {
    const auto it = ids_.find(key);
    if (it == ids_.end()) return std::nullopt;
    return it->second;
  }
  const std::vector<Key>& keys() const { return keys_; }

 private:
  std::map<Key, VertexId> ids_;
  std::vector<Key> keys_;
};

std::vector<Edge> dedupe(std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

using Diagonal = std::pair<std::size_t, std::size_t>;
using Triangulation = std::vector<Diagonal>;

// All triangulations of the sub-polygon i, i+1, ..., j (with side i-j present).
std::vector<Triangulation> triangulations(std::size_t i, std::size_t j) {
  if (j < i + 2) return {Triangulation{}};
  std::vector<Triangulation> out;
  for (std::size_t k = i + 1; k < j; ++k) {
    for (const auto& left : triangulations(i, k)) {
      for (const auto& right : triangulations(k, j)) {
        Triangulation t = left;
        t.insert(t.end(), right.begin(), right.end());
        if (k > i + 1) t.emplace_back(i, k);
        if (j > k + 1) t.emplace_back(k, j);
        std::sort(t.begin(), t.end());
        out.push_back(std::move(t));
      }
    }
  }
  return out;
}

}  // namespace

Graph hypercube(std::size_t d) { return labelled_hypercube(d).graph; }

RotationMap labelled_hypercube(std::size_t d) {
  if (d >= 8 * sizeof(VertexId) - 1) throw std::invalid_argument("hypercube dimension too large");
  const std::size_t n = std::size_t{1} << d;
  RotationMap out;
  out.rotation.assign(n, std::vector<VertexId>(d));
  std::vector<Edge> edges;
  std::vector<std::string> labels(n);
  for (VertexId a = 0; a < n; ++a) {
    for (std::size_t i = 0; i < d; ++i) {
      labels[a] += ((a >> i) & 1U) ? '1' : '0';
      const VertexId b = a ^ (VertexId{1} << i);
      out.rotation[a][i] = b;
      if (a < b) edges.emplace_back(a, b);
    }
  }
  out.graph = Graph(n, edges, std::move(labels));
  return out;
}

Graph cycle(std::size_t k) {
  if (k < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (VertexId v = 0; v < k; ++v) edges.emplace_back(v, (v + 1) % k);
  return Graph(k, edges);
}

Graph lattice_ball(std::size_t n, std::size_t radius) {
  if (n == 0) throw std::invalid_argument("lattice dimension must be positive");
  Interner<std::vector<long>> points;
  const auto r = static_cast<long>(radius);
  // Breadth-first from the origin keeps the origin at id 0.
  std::deque<std::vector<long>> queue{std::vector<long>(n, 0)};
  points.intern(queue.front());
  std::vector<Edge> edges;
  auto norm = [](const std::vector<long>& p) {
    return std::accumulate(p.begin(), p.end(), 0L, [](long s, long c) { return s + std::labs(c); });
  };
  while (!queue.empty()) {
    const auto p = queue.front();
    queue.pop_front();
    const VertexId id = *points.find(p);
    for (std::size_t axis = 0; axis < n; ++axis) {
      for (long step : {-1L, 1L}) {
        auto q = p;
        q[axis] += step;
        if (norm(q) > r) continue;
        const auto [qid, inserted] = points.intern(q);
        if (inserted) queue.push_back(q);
        if (id < qid) edges.emplace_back(id, qid);
      }
    }
  }
  std::vector<std::string> labels;
  for (const auto& p : points.keys()) {
    std::string s = "(";
    for (std::size_t k = 0; k < p.size(); ++k) s += (k ? "," : "") + std::to_string(p[k]);
    labels.push_back(s + ")");
  }
  return Graph(points.keys().size(), dedupe(std::move(edges)), std::move(labels), Truncation{0, radius});
}

Graph regular_tree(std::size_t d, std::size_t depth) {
  if (d < 1) throw std::invalid_argument("tree degree must be positive");
  std::vector<Edge> edges;
  std::vector<VertexId> frontier{0};
  std::size_t count = 1;
  for (std::size_t level = 0; level < depth; ++level) {
    std::vector<VertexId> next;
    for (VertexId v : frontier) {
      const std::size_t children = (v == 0) ? d : d - 1;
      for (std::size_t c = 0; c < children; ++c) {
        edges.emplace_back(v, count);
        next.push_back(count++);
      }
    }
    frontier = std::move(next);
  }
  return Graph(count, edges, {}, Truncation{0, depth});
}

Graph complete_bipartite(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = 0; b < n; ++b) edges.emplace_back(a, n + b);
  }
  return Graph(2 * n, edges);
}

Graph star(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId leaf = 1; leaf <= n; ++leaf) edges.emplace_back(0, leaf);
  return Graph(n + 1, edges);
}

Graph interchange_graph(const Graph& h) {
  Permutation identity(h.size());
  std::iota(identity.begin(), identity.end(), 0);
  Interner<Permutation> states;
  states.intern(identity);
  std::deque<Permutation> queue{identity};
  std::vector<Edge> edges;
  while (!queue.empty()) {
    const Permutation p = queue.front();
    queue.pop_front();
    const VertexId id = *states.find(p);
    for (const Edge& e : h.edges()) {
      Permutation q = p;
      std::swap(q[e.u], q[e.v]);
      const auto [qid, inserted] = states.intern(q);
      if (inserted) queue.push_back(q);
      if (id < qid) edges.emplace_back(id, qid);
    }
  }
  std::vector<std::string> labels;
  for (const auto& p : states.keys()) labels.push_back(permutation_label(p));
  return Graph(states.keys().size(), dedupe(std::move(edges)), std::move(labels));
}

Graph transposition_cayley(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return interchange_graph(Graph(n, edges));
}

Graph adjacent_transposition_cayley(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return interchange_graph(Graph(n, edges));
}

Graph flip_graph(std::size_t n) {
  if (n < 4) throw std::invalid_argument("flip graph needs a polygon with at least 4 sides");
  const auto all = triangulations(0, n - 1);
  Interner<Triangulation> ids;
  for (const auto& t : all) ids.intern(t);

  std::vector<Edge> edges;
  for (const auto& t : ids.keys()) {
    std::set<Diagonal> present(t.begin(), t.end());
    for (std::size_t k = 0; k < n; ++k) present.emplace(std::min(k, (k + 1) % n), std::max(k, (k + 1) % n));
    auto has = [&](std::size_t a, std::size_t b) { return present.count({std::min(a, b), std::max(a, b)}) > 0; };
    for (const auto& [a, b] : t) {
      std::vector<std::size_t> apex;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != a && c != b && has(a, c) && has(b, c)) apex.push_back(c);
      }
      if (apex.size() != 2) throw std::logic_error("diagonal not shared by exactly two triangles");
      Triangulation flipped;
      for (const auto& diag : t) {
        if (diag != Diagonal{a, b}) flipped.push_back(diag);
      }
      flipped.emplace_back(std::min(apex[0], apex[1]), std::max(apex[0], apex[1]));
      std::sort(flipped.begin(), flipped.end());
      const auto other = ids.find(flipped);
      if (!other) throw std::logic_error("flip produced an unknown triangulation");
      const VertexId self = *ids.find(t);
      if (self < *other) edges.emplace_back(self, *other);
    }
  }
  std::vector<std::string> labels;
  for (const auto& t : ids.keys()) {
    std::string s;
    for (const auto& [a, b] : t) s += (s.empty() ? "" : " ") + std::to_string(a) + "-" + std::to_string(b);
    labels.push_back("{" + s + "}");
  }
  return Graph(ids.keys().size(), dedupe(std::move(edges)), std::move(labels));
}

Graph cyclic_incidence_graph(std::size_t n, const std::vector<std::size_t>& difference_set) {
  std::set<std::size_t> offsets;
  for (std::size_t d : difference_set) offsets.insert(d % n);
  std::vector<Edge> edges;
  for (VertexId point = 0; point < n; ++point) {
    for (std::size_t d : offsets) edges.emplace_back(point, n + (point + d) % n);
  }
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < n; ++k) labels.push_back("p" + std::to_string(k));
  for (std::size_t k = 0; k < n; ++k) labels.push_back("B" + std::to_string(k));
  return Graph(2 * n, edges, std::move(labels));
}

Graph zigzag(const RotationMap& g1, const Graph& g2) {
  const std::size_t n2 = g2.size();
  const auto d1 = is_regular(g1.graph);
  if (!d1 || *d1 != n2) throw std::invalid_argument("zigzag: g1 must be regular with degree |V(g2)|");
  if (!is_regular(g2)) throw std::invalid_argument("zigzag: g2 must be regular");
  for (VertexId a = 0; a < g1.graph.size(); ++a) {
    if (g1.rotation.at(a).size() != n2) throw std::invalid_argument("zigzag: rotation map has wrong width");
    for (std::size_t l = 0; l < n2; ++l) {
      const VertexId b = g1.rotation[a][l];
      if (!g1.graph.adjacent(a, b) || g1.rotation.at(b).at(l) != a) {
        throw std::invalid_argument("zigzag: edge labels must be symmetric and name real edges");
      }
    }
  }

  std::vector<Edge> edges;
  for (VertexId a = 0; a < g1.graph.size(); ++a) {
    for (VertexId u = 0; u < n2; ++u) {
      for (VertexId v : g2.neighbors(u)) {
        for (VertexId w : g2.neighbors(v)) edges.emplace_back(a * n2 + u, g1.rotation[a][v] * n2 + w);
      }
    }
  }
  std::vector<std::string> labels;
  for (VertexId a = 0; a < g1.graph.size(); ++a) {
    for (VertexId u = 0; u < n2; ++u) labels.push_back("(" + g1.graph.label(a) + "," + std::to_string(u + 1) + ")");
  }
  return Graph(g1.graph.size() * n2, dedupe(std::move(edges)), std::move(labels));
}

Graph named_graph(const std::string& name) {
  if (name == "petersen") {
    std::vector<Edge> edges;
    for (VertexId i = 0; i < 5; ++i) {
      edges.emplace_back(i, (i + 1) % 5);
      edges.emplace_back(5 + i, 5 + (i + 2) % 5);
      edges.emplace_back(i, 5 + i);
    }
    return Graph(10, edges);
  }
  if (name == "dodecahedron") {
    // LCF [10, 7, 4, -4, -7, 10, -4, 7, -7, 4]^2
    const long jumps[] = {10, 7, 4, -4, -7, 10, -4, 7, -7, 4};
    std::vector<Edge> edges;
    for (long v = 0; v < 20; ++v) {
      edges.emplace_back(static_cast<VertexId>(v), static_cast<VertexId>((v + 1) % 20));
      const long w = ((v + jumps[v % 10]) % 20 + 20) % 20;
      if (v < w) edges.emplace_back(static_cast<VertexId>(v), static_cast<VertexId>(w));
    }
    return Graph(20, edges);
  }
  if (name == "heawood") return cyclic_incidence_graph(7, {0, 1, 3});
  if (name == "fano-complement") return cyclic_incidence_graph(7, {2, 4, 5, 6});
  if (name == "biplane-11") return cyclic_incidence_graph(11, {1, 3, 4, 5, 9});
  throw std::invalid_argument("unknown named graph '" + name + "'");
}

}  // namespace graphcurv
