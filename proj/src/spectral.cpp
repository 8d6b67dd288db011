#include "graphcurv/spectral.hpp"

#include <Eigen/Eigenvalues>

namespace graphcurv {

CdResult cd_curvature(const LocalBall& ball) {
  detail::require_complete(ball);
  if (ball.sphere1.empty()) {
    throw std::domain_error("vertex " + std::to_string(ball.base) + " is isolated");
  }
  const auto reduced = eliminate_second_neighbors(gamma2_form<double>(ball), ball);

  CdResult result;
  result.vertex = ball.base;
  result.index = ball.sphere1;
  result.index.insert(result.index.end(), ball.sphere2.begin(), ball.sphere2.end());

  Vector<double> direction(1);
  if (reduced.dimension() == 1) {
    result.method = CdResult::Method::exact_special_case;
    result.rho = reduced.matrix(0, 0);
    direction(0) = 1.0;
  } else {
    Eigen::SelfAdjointEigenSolver<Matrix<double>> solver(reduced.matrix);
    result.rho = solver.eigenvalues()(0);
    direction = solver.eigenvectors().col(0);
  }
  result.minimizer = optimal_extension<double>(ball, direction);
  return result;
}

bool satisfies_cd(const LocalBall& ball, double rho, double tolerance) {
  return cd_curvature(ball).rho >= rho - tolerance;
}

}  // namespace graphcurv
