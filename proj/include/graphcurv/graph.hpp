#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace graphcurv {

using VertexId = std::size_t;

inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

/// Undirected edge, normalized so that u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  Edge() = default;
  Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A finite piece of an infinite graph: every vertex within `radius` hops of `center`.
/// Distances in such a truncation are only trusted near the center.
struct Truncation {
  VertexId center = 0;
  std::size_t radius = 0;
};

/// Finite simple undirected graph. Vertices are 0..n-1; adjacency lists are sorted.
/// Immutable after construction.
class Graph {
 public:
  Graph() = default;

  /// Throws std::invalid_argument on self-loops, repeated edges, or out-of-range endpoints.
  Graph(std::size_t vertex_count, std::span<const Edge> edges,
        std::vector<std::string> labels = {},
        std::optional<Truncation> truncation = std::nullopt);

  std::size_t size() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }
  std::span<const VertexId> neighbors(VertexId v) const { return adjacency_.at(v); }
  bool adjacent(VertexId u, VertexId v) const;
  bool contains(VertexId v) const { return v < size(); }

  /// All edges, sorted lexicographically.
  const std::vector<Edge>& edges() const { return edges_; }

  /// Display label; falls back to the decimal id.
  std::string label(VertexId v) const;
  bool has_labels() const { return !labels_.empty(); }
  std::optional<VertexId> find_label(const std::string& label) const;

  const std::optional<Truncation>& truncation() const { return truncation_; }

  /// True when the radius-2 ball at v coincides with the ball in the untruncated host.
  bool vertex_probe_safe(VertexId v) const;

  /// True when every distance among the lazy-walk supports of x and y is exact.
  /// Truncations need radius >= 4 and both endpoints within radius - 3 of the center.
  bool edge_probe_safe(VertexId x, VertexId y) const;

 private:
  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
  std::optional<Truncation> truncation_;
  std::vector<std::size_t> center_depth_;
};

/// Hop distances from `source` to every vertex within `radius`.
/// Throws std::domain_error if source is not a vertex of g.
std::map<VertexId, std::size_t> bfs_distances(const Graph& g, VertexId source, std::size_t radius);

/// Full single-source distances; kUnreachable for other components.
std::vector<std::size_t> distances_from(const Graph& g, VertexId source);

/// Closed radius-2 ball around a base vertex.
///
/// `vertices` lists base, then sphere1, then sphere2; `local` maps each retained host
/// vertex to its position there. `adjacency` is in local indices and holds every host
/// edge with both endpoints retained. `degrees` are host degrees.
struct LocalBall {
  VertexId base = 0;
  std::vector<VertexId> sphere1;
  std::vector<VertexId> sphere2;
  std::vector<VertexId> vertices;
  std::map<VertexId, std::size_t> local;
  std::vector<std::vector<std::size_t>> adjacency;
  std::vector<std::size_t> degrees;
  std::vector<Edge> edges;
  bool complete = false;

  std::size_t local_index(VertexId v) const { return local.at(v); }

  /// The ball as a standalone graph on local indices (base = 0), labelled with host ids.
  Graph as_graph() const;
};

/// Throws std::domain_error for an unknown vertex.
LocalBall extract_ball(const Graph& g, VertexId x);

std::vector<VertexId> common_neighbors(const Graph& g, VertexId u, VertexId v);

bool contains_k3(const Graph& g);

/// Some pair of distinct vertices with at least three common neighbors.
bool contains_k23(const Graph& g);

/// Common degree, or nullopt when degrees differ (or the graph is empty).
std::optional<std::size_t> is_regular(const Graph& g);

bool is_connected(const Graph& g);

/// Throws std::domain_error when g is disconnected or empty.
std::size_t diameter(const Graph& g);

}  // namespace graphcurv
