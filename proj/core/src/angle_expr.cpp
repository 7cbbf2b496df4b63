#include "groverphase/angle_expr.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "groverphase/model.hpp"

namespace grover {

namespace {

std::string trim(const std::string& s) {
  const std::string ws = " \t";
  const std::size_t first = s.find_first_not_of(ws);
  if (first == std::string::npos) {
    return "";
  }
  return s.substr(first, s.find_last_not_of(ws) - first + 1);
}

double parse_decimal(const std::string& text, const std::string& whole) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() || !std::isfinite(v)) {
    throw std::invalid_argument("cannot parse '" + whole + "' as an angle");
  }
  return v;
}

}  // namespace

double parse_angle_expression(const std::string& text) {
  std::string body = trim(text);
  double sign = 1.0;
  if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
    sign = body[0] == '-' ? -1.0 : 1.0;
    body = body.substr(1);
  }
  if (body.empty()) {
    throw std::invalid_argument("cannot parse '" + text + "' as an angle");
  }
  if (body == "pi") {
    return sign * kPi;
  }
  if (body.starts_with("pi/")) {
    const double k = parse_decimal(body.substr(3), text);
    if (k == 0.0) {
      throw std::invalid_argument("division by zero in '" + text + "'");
    }
    return sign * kPi / k;
  }
  if (body.starts_with("pi*")) {
    return sign * kPi * parse_decimal(body.substr(3), text);
  }
  if (body.ends_with("*pi")) {
    return sign * parse_decimal(body.substr(0, body.size() - 3), text) * kPi;
  }
  return sign * parse_decimal(body, text);
}

}  // namespace grover
