// Exact rational scalars for the whole engine. No floating point anywhere.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace canonfan {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Weighted valuations live in Q ∪ {+∞}; nullopt encodes +∞ (the valuation of 0).
using Valuation = std::optional<Rational>;

// "p", "-p", "p/q" with q > 0 after normalization. Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

// Canonical form: "p" when q == 1, else "p/q".
std::string to_string(const Rational& value);

std::string to_string(const Valuation& value);  // "inf" for +∞

}  // namespace canonfan
