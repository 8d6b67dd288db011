#include "graphcurv/structure.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace graphcurv {

LinkProfile link_profile(const LocalBall& ball) {
  const std::size_t n1 = ball.sphere1.size();
  const auto n = static_cast<Eigen::Index>(n1);
  LinkProfile profile;
  profile.base = ball.base;
  profile.neighbors = ball.sphere1;
  profile.linked = Matrix<int>::Zero(n, n);
  profile.linkage = Matrix<Rational>::Zero(n, n);

  // Every linking vertex z != base lies in sphere1 or sphere2 (ball-local index >= 1).
  for (std::size_t local_z = 1; local_z < ball.vertices.size(); ++local_z) {
    std::vector<Eigen::Index> touched;
    for (std::size_t local_v : ball.adjacency[local_z]) {
      if (local_v >= 1 && local_v <= n1) touched.push_back(static_cast<Eigen::Index>(local_v - 1));
    }
    if (touched.size() < 2) continue;
    const Rational share(1, static_cast<long>(touched.size()));
    for (std::size_t a = 0; a < touched.size(); ++a) {
      for (std::size_t b = a + 1; b < touched.size(); ++b) {
        const Eigen::Index i = touched[a];
        const Eigen::Index j = touched[b];
        profile.linked(i, j) = profile.linked(j, i) = 1;
        profile.linkage(i, j) += share;
        profile.linkage(j, i) += share;
      }
    }
  }

  profile.nonlink_counts.assign(n1, 0);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i != j && !profile.linked(i, j)) ++profile.nonlink_counts[static_cast<std::size_t>(i)];
    }
  }
  if (n1 > 0) {
    profile.max_nonlink = *std::max_element(profile.nonlink_counts.begin(), profile.nonlink_counts.end());
  }
  return profile;
}

GraphHypotheses analyze_hypotheses(const Graph& g) {
  GraphHypotheses h;
  h.has_k3 = contains_k3(g);
  h.has_k23 = contains_k23(g);
  if (!g.truncation()) {
    h.degree = is_regular(g);
    return h;
  }
  const auto depth = distances_from(g, g.truncation()->center);
  const std::size_t radius = g.truncation()->radius;
  for (VertexId v = 0; v < g.size(); ++v) {
    if (depth[v] == kUnreachable || depth[v] + 1 > radius) continue;
    if (!h.degree) {
      h.degree = g.degree(v);
    } else if (*h.degree != g.degree(v)) {
      h.degree.reset();
      break;
    }
  }
  return h;
}

ClassVerdict classify_vertex(const Graph& g, VertexId x) {
  return classify_vertex(g, x, analyze_hypotheses(g));
}

ClassVerdict classify_vertex(const Graph& g, VertexId x, const GraphHypotheses& hypotheses) {
  ClassVerdict verdict;
  verdict.vertex = x;
  if (!hypotheses.degree) {
    verdict.reason = "graph is not regular";
  } else if (*hypotheses.degree == 0) {
    verdict.reason = "graph has no edges";
  } else if (hypotheses.has_k3) {
    verdict.reason = "graph contains K3";
  } else if (hypotheses.has_k23) {
    verdict.reason = "graph contains K_{2,3}";
  } else if (!g.vertex_probe_safe(x)) {
    verdict.reason = "vertex is too close to the truncation boundary";
  }
  if (!verdict.reason.empty()) return verdict;

  const LinkProfile profile = link_profile(extract_ball(g, x));
  verdict.max_nonlink = profile.max_nonlink;
  switch (profile.max_nonlink) {
    case 0:
      verdict.hypothesis_class = HypothesisClass::class_i;
      verdict.cd_prediction = CdPrediction::positive;
      verdict.ollivier_prediction = OllivierPrediction::strictly_positive;
      break;
    case 1:
      verdict.hypothesis_class = HypothesisClass::class_ii;
      verdict.cd_prediction = CdPrediction::flat;
      verdict.ollivier_prediction = OllivierPrediction::nonnegative;
      break;
    default:
      verdict.hypothesis_class = HypothesisClass::class_iii;
      verdict.cd_prediction = CdPrediction::negative;
      verdict.ollivier_prediction = OllivierPrediction::nonpositive;
      break;
  }
  return verdict;
}

std::string to_string(HypothesisClass c) {
  switch (c) {
    case HypothesisClass::class_i: return "class_i";
    case HypothesisClass::class_ii: return "class_ii";
    case HypothesisClass::class_iii: return "class_iii";
    case HypothesisClass::inapplicable: return "inapplicable";
  }
  return "?";
}

std::string to_string(CdPrediction p) {
  switch (p) {
    case CdPrediction::positive: return "positive";
    case CdPrediction::flat: return "flat";
    case CdPrediction::negative: return "negative";
    case CdPrediction::none: return "none";
  }
  return "?";
}

std::string to_string(OllivierPrediction p) {
  switch (p) {
    case OllivierPrediction::strictly_positive: return "strictly_positive";
    case OllivierPrediction::nonnegative: return "nonnegative";
    case OllivierPrediction::nonpositive: return "nonpositive";
    case OllivierPrediction::none: return "none";
  }
  return "?";
}

std::string to_string(InterchangeClass c) {
  switch (c) {
    case InterchangeClass::class_i: return "class_i";
    case InterchangeClass::class_ii: return "class_ii";
    case InterchangeClass::class_iii: return "class_iii";
    case InterchangeClass::k23_present: return "k23_present";
  }
  return "?";
}

std::optional<bool> sign_implications_check(const GraphHypotheses& hypotheses, const CdResult& cd,
                                      const std::map<VertexId, Rational>& kappas, double tolerance) {
  if (!hypotheses.sign_theorems_apply()) return std::nullopt;
  const bool rho_positive = cd.rho > tolerance;
  const bool rho_negative = cd.rho < -tolerance;
  const bool all_positive = std::all_of(kappas.begin(), kappas.end(), [](const auto& kv) { return kv.second > 0; });
  const bool all_nonnegative = std::all_of(kappas.begin(), kappas.end(), [](const auto& kv) { return kv.second >= 0; });
  const bool some_nonpositive = !all_positive;
  const bool some_negative = !all_nonnegative;

  const bool part_i = !rho_positive || all_positive;
  const bool part_ii = rho_negative || all_nonnegative;
  const bool part_iii = (!rho_negative || some_nonpositive) && (!some_negative || rho_negative);
  return part_i && part_ii && part_iii;
}

namespace {

std::vector<VertexId> common_neighbors_of(const Graph& g, const std::vector<VertexId>& set) {
  std::vector<VertexId> out(g.neighbors(set.front()).begin(), g.neighbors(set.front()).end());
  for (std::size_t k = 1; k < set.size() && !out.empty(); ++k) {
    std::vector<VertexId> next;
    const auto nb = g.neighbors(set[k]);
    std::set_intersection(out.begin(), out.end(), nb.begin(), nb.end(), std::back_inserter(next));
    out = std::move(next);
  }
  return out;
}

struct Biclique {
  std::vector<VertexId> left;   // contains the hub
  std::vector<VertexId> right;  // contains the pair
};

// Closure of the pair {a, b} of neighbors of a hub: left = CN({a,b}), right = CN(left).
Biclique closure(const Graph& g, VertexId a, VertexId b) {
  Biclique c;
  c.left = common_neighbors_of(g, {a, b});
  c.right = common_neighbors_of(g, c.left);
  return c;
}

std::vector<VertexId> without(std::vector<VertexId> set, VertexId v) {
  set.erase(std::remove(set.begin(), set.end(), v), set.end());
  return set;
}

}  // namespace

std::optional<std::vector<BicliquePart>> bipartite_decomposition(const Graph& g, VertexId x, VertexId y) {
  if (!g.contains(x) || !g.contains(y) || !g.adjacent(x, y)) {
    throw std::domain_error("bipartite_decomposition needs an edge");
  }
  std::set<VertexId> region{x, y};
  for (VertexId v : g.neighbors(x)) region.insert(v);
  for (VertexId v : g.neighbors(y)) region.insert(v);
  for (VertexId v : region) {
    for (VertexId u : g.neighbors(v)) {
      if (!common_neighbors(g, u, v).empty()) {
        throw std::domain_error("triangle through vertex " + std::to_string(v));
      }
    }
  }

  std::vector<BicliquePart> parts;
  std::set<VertexId> seen_s;
  std::set<VertexId> seen_t;
  for (VertexId w : g.neighbors(x)) {
    if (w == y || seen_s.count(w)) continue;
    const Biclique c = closure(g, y, w);  // left contains x, right contains y and w
    if (c.left.size() != c.right.size() || c.left.size() < 2) return std::nullopt;
    BicliquePart part{without(c.right, y), without(c.left, x)};
    for (VertexId s : part.s) {
      if (!seen_s.insert(s).second) return std::nullopt;
      const Biclique again = closure(g, y, s);
      if (again.left != c.left || again.right != c.right) return std::nullopt;
    }
    for (VertexId t : part.t) {
      if (!seen_t.insert(t).second) return std::nullopt;
      const Biclique mirror = closure(g, x, t);  // left contains y, right contains x and t
      if (mirror.left != c.right || mirror.right != c.left) return std::nullopt;
    }
    parts.push_back(std::move(part));
  }
  if (seen_s.size() + 1 != g.degree(x) || seen_t.size() + 1 != g.degree(y)) return std::nullopt;
  return parts;
}

InterchangeClass interchange_hypothesis(const Graph& h) {
  if (contains_k3(h)) return InterchangeClass::k23_present;
  std::size_t max_degree = 0;
  for (VertexId v = 0; v < h.size(); ++v) max_degree = std::max(max_degree, h.degree(v));
  if (max_degree >= 3) return InterchangeClass::class_iii;

  // Max degree <= 2: components are paths or cycles (cycles have >= 4 edges here).
  std::vector<bool> visited(h.size(), false);
  std::size_t longest = 0;
  for (VertexId s = 0; s < h.size(); ++s) {
    if (visited[s]) continue;
    std::size_t degree_sum = 0;
    std::vector<VertexId> stack{s};
    visited[s] = true;
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      degree_sum += h.degree(v);
      for (VertexId w : h.neighbors(v)) {
        if (!visited[w]) {
          visited[w] = true;
          stack.push_back(w);
        }
      }
    }
    longest = std::max(longest, degree_sum / 2);
  }
  if (longest >= 3) return InterchangeClass::class_iii;
  if (longest == 2) return InterchangeClass::class_ii;
  return InterchangeClass::class_i;
}

std::optional<Vector<Rational>> flat_test_function(const LocalBall& ball, const LinkProfile& profile) {
  const auto n = static_cast<Eigen::Index>(profile.neighbors.size());
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (profile.linked(i, j)) continue;
      Vector<Rational> on_sphere1 = Vector<Rational>::Zero(n);
      on_sphere1(i) = 1;
      on_sphere1(j) = -1;
      return optimal_extension<Rational>(ball, on_sphere1);
    }
  }
  return std::nullopt;
}

std::optional<Vector<Rational>> negative_test_function(const LocalBall& ball, const LinkProfile& profile) {
  if (profile.max_nonlink < 2) return std::nullopt;
  const auto n = static_cast<Eigen::Index>(profile.neighbors.size());
  const auto peak = std::max_element(profile.nonlink_counts.begin(), profile.nonlink_counts.end()) -
                    profile.nonlink_counts.begin();
  Vector<Rational> on_sphere1 = Vector<Rational>::Constant(n, Rational(-1));
  on_sphere1(static_cast<Eigen::Index>(peak)) = Rational(static_cast<long>(n - 1));
  return optimal_extension<Rational>(ball, on_sphere1);
}

}  // namespace graphcurv
