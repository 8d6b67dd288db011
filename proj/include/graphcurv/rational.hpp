#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Dense>

#include <string>
#include <string_view>

namespace graphcurv {

/// Exact rational scalar. Eigen picks up NumTraits from boost/multiprecision/eigen.hpp,
/// so dense Eigen matrices can be instantiated over it directly.
using Rational = boost::multiprecision::cpp_rational;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// "p/q" (or "p" when q == 1).
std::string to_fraction_string(const Rational& r);

/// Inverse of to_fraction_string. Throws std::invalid_argument on malformed input.
Rational parse_fraction(std::string_view text);

/// 15 significant digits.
std::string to_decimal_string(const Rational& r);

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

template <typename Scalar>
Scalar scalar_cast(const Rational& r) {
  if constexpr (std::is_same_v<Scalar, Rational>) {
    return r;
  } else {
    return static_cast<Scalar>(r.convert_to<double>());
  }
}

}  // namespace graphcurv
