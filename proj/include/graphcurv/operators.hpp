#pragma once

// Pointwise graph operators on functions f : V -> Scalar, stored as vectors indexed by
// vertex id. Non-normalized Laplacian throughout.

#include "graphcurv/graph.hpp"
#include "graphcurv/rational.hpp"

namespace graphcurv {

template <typename Scalar>
Scalar laplacian(const Graph& g, const Vector<Scalar>& f, VertexId x) {
  Scalar sum(0);
  for (VertexId y : g.neighbors(x)) sum += f(y) - f(x);
  return sum;
}

/// Gamma(f,h)(x) = 1/2 sum_{y~x} (f(y)-f(x)) (h(y)-h(x)).
template <typename Scalar>
Scalar carre_du_champ(const Graph& g, const Vector<Scalar>& f, const Vector<Scalar>& h, VertexId x) {
  Scalar sum(0);
  for (VertexId y : g.neighbors(x)) sum += (f(y) - f(x)) * (h(y) - h(x));
  return sum / Scalar(2);
}

template <typename Scalar>
Scalar carre_du_champ(const Graph& g, const Vector<Scalar>& f, VertexId x) {
  return carre_du_champ(g, f, f, x);
}

/// Gamma_2 f(x) = 1/2 Delta(Gamma f)(x) - Gamma(f, Delta f)(x), evaluated from the
/// definitions. Only values of f within distance 2 of x are read.
template <typename Scalar>
Scalar gamma2(const Graph& g, const Vector<Scalar>& f, VertexId x) {
  const Scalar gamma_x = carre_du_champ(g, f, x);
  const Scalar lap_x = laplacian(g, f, x);
  Scalar lap_of_gamma(0);
  Scalar mixed(0);
  for (VertexId y : g.neighbors(x)) {
    lap_of_gamma += carre_du_champ(g, f, y) - gamma_x;
    mixed += (f(y) - f(x)) * (laplacian(g, f, y) - lap_x);
  }
  return lap_of_gamma / Scalar(2) - mixed / Scalar(2);
}

}  // namespace graphcurv
