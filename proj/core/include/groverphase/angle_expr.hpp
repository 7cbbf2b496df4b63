#pragma once

#include <string>

namespace grover {

// Parses an angle in radians from "pi", "pi/K", "pi*K", "K*pi" (K a decimal
// number) or a plain decimal literal. The result is not canonicalized.
// Throws std::invalid_argument, naming the offending text, on anything else.
double parse_angle_expression(const std::string& text);

}  // namespace grover
