#include "graphcurv/rational.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace graphcurv {

std::string to_fraction_string(const Rational& r) {
  const auto num = boost::multiprecision::numerator(r);
  const auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_fraction(std::string_view text) {
  auto parse_int = [&](std::string_view part) {
    if (part.empty()) throw std::invalid_argument("malformed fraction: '" + std::string(text) + "'");
    std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) throw std::invalid_argument("malformed fraction: '" + std::string(text) + "'");
    for (; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') {
        throw std::invalid_argument("malformed fraction: '" + std::string(text) + "'");
      }
    }
    return boost::multiprecision::cpp_int(std::string(part));
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const auto den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

std::string to_decimal_string(const Rational& r) {
  std::ostringstream out;
  out << std::setprecision(15) << to_double(r);
  return out.str();
}

}  // namespace graphcurv
