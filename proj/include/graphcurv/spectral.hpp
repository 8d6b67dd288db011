#pragma once

// Bakry-Emery CD(rho, inf) curvature at a vertex.
//
// With f(x) = 0, Gamma f(x) and 2 Gamma_2 f(x) are quadratic forms in the values of f on
// the first and second spheres around x. Second-sphere variables only couple to the first
// sphere, so their block is diagonal and can be eliminated exactly; the curvature is then
// the smallest eigenvalue of the reduced 2 Gamma_2 matrix, since 2 Gamma f(x) = |f|^2 on
// the first sphere.

#include "graphcurv/graph.hpp"
#include "graphcurv/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace graphcurv {

template <typename Scalar>
struct QuadraticForm {
  std::vector<VertexId> index;
  Matrix<Scalar> matrix;

  // Written out: Eigen's scalar promotion trips over Boost rationals in matrix * vector.
  Scalar operator()(const Vector<Scalar>& f) const {
    Scalar total(0);
    for (Eigen::Index i = 0; i < matrix.rows(); ++i) {
      Scalar row(0);
      for (Eigen::Index j = 0; j < matrix.cols(); ++j) row += matrix(i, j) * f(j);
      total += f(i) * row;
    }
    return total;
  }
  std::size_t dimension() const { return index.size(); }
};

struct IncompleteBallError : std::domain_error {
  using std::domain_error::domain_error;
};

namespace detail {
inline void require_complete(const LocalBall& ball) {
  if (!ball.complete) {
    throw IncompleteBallError("ball around vertex " + std::to_string(ball.base) +
                              " is cut by a truncation boundary; curvature would be wrong");
  }
}
}  // namespace detail

/// Gamma f(x) over {base} + sphere1.
template <typename Scalar>
QuadraticForm<Scalar> gamma_form(const LocalBall& ball) {
  const std::size_t n1 = ball.sphere1.size();
  QuadraticForm<Scalar> form;
  form.index.push_back(ball.base);
  form.index.insert(form.index.end(), ball.sphere1.begin(), ball.sphere1.end());
  form.matrix = Matrix<Scalar>::Zero(n1 + 1, n1 + 1);
  const Scalar half = Scalar(1) / Scalar(2);
  for (std::size_t i = 1; i <= n1; ++i) {
    form.matrix(0, 0) += half;
    form.matrix(i, i) += half;
    form.matrix(0, i) -= half;
    form.matrix(i, 0) -= half;
  }
  return form;
}

/// 2 Gamma_2 f(x) over sphere1 + sphere2 (in that order), assuming f(base) = 0:
///
///   1/2 sum_{u~v~x, d(x,u)=2} (f(u) - 2 f(v))^2 + (sum_{v~x} f(v))^2
///     + sum_{v~x} (4 - deg x - deg v)/2 f(v)^2
///     + sum_{triangles x,v,u} [2 (f(v) - f(u))^2 + 1/2 (f(v)^2 + f(u)^2)]
///
/// with each triangle through x counted once.
template <typename Scalar>
QuadraticForm<Scalar> gamma2_form(const LocalBall& ball) {
  detail::require_complete(ball);
  const std::size_t n1 = ball.sphere1.size();
  const std::size_t n = n1 + ball.sphere2.size();
  QuadraticForm<Scalar> form;
  form.index.insert(form.index.end(), ball.sphere1.begin(), ball.sphere1.end());
  form.index.insert(form.index.end(), ball.sphere2.begin(), ball.sphere2.end());
  form.matrix = Matrix<Scalar>::Ones(n, n);
  form.matrix.bottomRows(n - n1).setZero();
  form.matrix.rightCols(n - n1).setZero();

  const Scalar half = Scalar(1) / Scalar(2);
  const auto deg_x = static_cast<long>(ball.degrees[0]);
  // Ball-local index k maps to form index k - 1 (the base occupies local slot 0).
  for (std::size_t i = 0; i < n1; ++i) {
    const std::size_t local_v = i + 1;
    const auto deg_v = static_cast<long>(ball.degrees[local_v]);
    form.matrix(i, i) += Scalar(4 - deg_x - deg_v) / Scalar(2);
    for (std::size_t local_u : ball.adjacency[local_v]) {
      if (local_u == 0) continue;
      const std::size_t j = local_u - 1;
      if (local_u <= n1) {
        // Triangle x, v, u is visited once from each of v and u.
        form.matrix(i, i) += Scalar(5) / Scalar(2);
        form.matrix(i, j) -= Scalar(2);
      } else {
        form.matrix(i, i) += Scalar(2);
        form.matrix(j, j) += half;
        form.matrix(i, j) -= Scalar(1);
        form.matrix(j, i) -= Scalar(1);
      }
    }
  }
  return form;
}

/// Minimizes the form over the sphere2 variables (Schur complement of the sphere2 block).
/// Throws std::logic_error if that block is singular or not diagonal.
template <typename Scalar>
QuadraticForm<Scalar> eliminate_second_neighbors(const QuadraticForm<Scalar>& g2, const LocalBall& ball) {
  const auto n1 = static_cast<Eigen::Index>(ball.sphere1.size());
  const auto n2 = static_cast<Eigen::Index>(ball.sphere2.size());
  if (g2.matrix.rows() != n1 + n2) throw std::logic_error("form does not match ball");

  const Matrix<Scalar> block = g2.matrix.bottomRightCorner(n2, n2);
  Vector<Scalar> inverse_diagonal(n2);
  for (Eigen::Index k = 0; k < n2; ++k) {
    for (Eigen::Index l = 0; l < n2; ++l) {
      if (k != l && block(k, l) != Scalar(0)) {
        throw std::logic_error("second-sphere block is not diagonal");
      }
    }
    if (!(block(k, k) > Scalar(0))) {
      throw std::logic_error("second-sphere vertex " + std::to_string(ball.sphere2[k]) +
                             " has no first-sphere neighbor");
    }
    inverse_diagonal(k) = Scalar(1) / block(k, k);
  }
  QuadraticForm<Scalar> reduced;
  reduced.index = ball.sphere1;
  reduced.matrix = g2.matrix.topLeftCorner(n1, n1);
  for (Eigen::Index k = 0; k < n2; ++k) {
    for (Eigen::Index i = 0; i < n1; ++i) {
      const Scalar b_ik = g2.matrix(i, n1 + k);
      if (b_ik == Scalar(0)) continue;
      for (Eigen::Index j = 0; j < n1; ++j) {
        reduced.matrix(i, j) -= b_ik * g2.matrix(j, n1 + k) * inverse_diagonal(k);
      }
    }
  }
  return reduced;
}

/// Extends sphere1 values to sphere2 by f(u) = 2 * mean of f over the first-sphere
/// neighbors of u; this is the pointwise minimizer of 2 Gamma_2 f(x).
template <typename Scalar>
Vector<Scalar> optimal_extension(const LocalBall& ball, const Vector<Scalar>& on_sphere1) {
  const std::size_t n1 = ball.sphere1.size();
  Vector<Scalar> f(n1 + ball.sphere2.size());
  f.head(n1) = on_sphere1;
  for (std::size_t k = 0; k < ball.sphere2.size(); ++k) {
    const std::size_t local_u = n1 + 1 + k;
    Scalar sum(0);
    long count = 0;
    for (std::size_t local_v : ball.adjacency[local_u]) {
      if (local_v >= 1 && local_v <= n1) {
        sum += on_sphere1(static_cast<Eigen::Index>(local_v - 1));
        ++count;
      }
    }
    f(static_cast<Eigen::Index>(n1 + k)) = Scalar(2) * sum / Scalar(count);
  }
  return f;
}

struct CdResult {
  enum class Method { eigensolve, exact_special_case };

  VertexId vertex = 0;
  double rho = 0.0;
  /// Values over sphere1 + sphere2; unit norm on sphere1.
  Vector<double> minimizer;
  std::vector<VertexId> index;
  Method method = Method::eigensolve;
};

/// Largest rho with Gamma_2 f(x) >= rho Gamma f(x) for all f.
/// Throws IncompleteBallError for an incomplete ball, std::domain_error for an isolated vertex.
CdResult cd_curvature(const LocalBall& ball);

bool satisfies_cd(const LocalBall& ball, double rho, double tolerance = 1e-9);

}  // namespace graphcurv
