#pragma once

// Combinatorial structure around a vertex: linked neighbor pairs, non-linking numbers,
// linkage, and the curvature class they predict for regular graphs without K3 or K_{2,3}.

#include "graphcurv/graph.hpp"
#include "graphcurv/rational.hpp"
#include "graphcurv/spectral.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace graphcurv {

/// Link structure at ball.base. Matrices are indexed by position in `neighbors`.
struct LinkProfile {
  VertexId base = 0;
  std::vector<VertexId> neighbors;
  /// linked(i,j): some w != base is adjacent to both neighbors i and j.
  Matrix<int> linked;
  /// N_x(y): other neighbors of base not linked to neighbors[i].
  std::vector<std::size_t> nonlink_counts;
  /// max of nonlink_counts (0 for an isolated base).
  std::size_t max_nonlink = 0;
  /// l(u,w) = sum over z != base with u~z~w of 1 / |{y : base~y~z}|.
  Matrix<Rational> linkage;
};

LinkProfile link_profile(const LocalBall& ball);

/// Global hypotheses gating the sign theorems. For truncations, regularity is judged on
/// vertices at depth <= radius - 1, since the cut removes edges only at the boundary.
struct GraphHypotheses {
  std::optional<std::size_t> degree;
  bool has_k3 = false;
  bool has_k23 = false;

  bool sign_theorems_apply() const { return degree && *degree >= 1 && !has_k3 && !has_k23; }
};

GraphHypotheses analyze_hypotheses(const Graph& g);

enum class HypothesisClass { class_i, class_ii, class_iii, inapplicable };
enum class CdPrediction { positive, flat, negative, none };
enum class OllivierPrediction { strictly_positive, nonnegative, nonpositive, none };

struct ClassVerdict {
  VertexId vertex = 0;
  HypothesisClass hypothesis_class = HypothesisClass::inapplicable;
  CdPrediction cd_prediction = CdPrediction::none;
  OllivierPrediction ollivier_prediction = OllivierPrediction::none;
  std::size_t max_nonlink = 0;
  std::string reason;
};

ClassVerdict classify_vertex(const Graph& g, VertexId x);
ClassVerdict classify_vertex(const Graph& g, VertexId x, const GraphHypotheses& hypotheses);

std::string to_string(HypothesisClass c);
std::string to_string(CdPrediction p);
std::string to_string(OllivierPrediction p);

/// Checks, with rho signs decided at `tolerance` and kappa signs exactly:
///   rho > 0  =>  every kappa > 0
///   rho >= 0 =>  every kappa >= 0
///   rho < 0  =>  some kappa <= 0,   and   some kappa < 0  =>  rho < 0.
/// nullopt when the graph is not regular, K3-free and K_{2,3}-free.
std::optional<bool> sign_implications_check(const GraphHypotheses& hypotheses, const CdResult& cd,
                                      const std::map<VertexId, Rational>& kappas,
                                      double tolerance = 1e-9);

struct BicliquePart {
  /// Neighbors of x (other than y) in this block.
  std::vector<VertexId> s;
  /// Neighbors of y (other than x) in this block.
  std::vector<VertexId> t;
};

/// Splits N(x)\{y} and N(y)\{x} into the blocks of the unique equal-sided maximal bicliques
/// that contain the adjacent edge pairs at x and y. nullopt if some pair lies in no such
/// biclique or the blocks do not partition both neighborhoods.
/// Throws std::domain_error if x, y are not adjacent or a triangle touches their neighborhoods.
std::optional<std::vector<BicliquePart>> bipartite_decomposition(const Graph& g, VertexId x, VertexId y);

enum class InterchangeClass { class_i, class_ii, class_iii, k23_present };

/// Class of the interchange-process Cayley graph, read off the underlying graph h.
InterchangeClass interchange_hypothesis(const Graph& h);

std::string to_string(InterchangeClass c);

/// f(y) = 1, f(z) = -1 for an unlinked pair, 0 on other neighbors, optimal on sphere2.
/// Indexed like gamma2_form. nullopt when every neighbor pair is linked.
std::optional<Vector<Rational>> flat_test_function(const LocalBall& ball, const LinkProfile& profile);

/// f(y) = d - 1 at a neighbor with the largest N_x(y) >= 2, f = -1 on the other neighbors,
/// optimal on sphere2. nullopt when max N_x(y) < 2.
std::optional<Vector<Rational>> negative_test_function(const LocalBall& ball, const LinkProfile& profile);

}  // namespace graphcurv
