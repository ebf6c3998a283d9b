// Text form for polynomials: signed terms `coeff*x1^e1*...*xn^en`, rationals as p/q.
// Canonical names are x1..xn; x,y,z are accepted for n <= 3 and t for n = 1.
// Printing and parsing round-trip.
#pragma once

#include "canonfan/polynomial.hpp"

#include <string>
#include <vector>

namespace canonfan {

/// Default display names: t | x,y,z | x1..xn.
std::vector<std::string> default_variable_names(int n);

/// Parse with explicit names; the canonical aliases are accepted as well.
Polynomial parse_polynomial(const std::string& text, int n,
                            const std::vector<std::string>& names);
Polynomial parse_polynomial(const std::string& text, int n);

std::string to_string(const Polynomial& f, const std::vector<std::string>& names);
std::string to_string(const Polynomial& f);

}  // namespace canonfan
