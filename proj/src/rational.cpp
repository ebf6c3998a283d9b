#include "canonfan/rational.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace canonfan {

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty rational literal");

    auto parse_int = [](const std::string& t) -> Integer {
        if (t.empty()) throw std::invalid_argument("empty integer literal");
        std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
        if (i == t.size()) throw std::invalid_argument("sign without digits: '" + t + "'");
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i])))
                throw std::invalid_argument("bad integer literal: '" + t + "'");
        return Integer(t);
    };

    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_int(s));
    Integer num = parse_int(s.substr(0, slash));
    Integer den = parse_int(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    return Rational(num, den);
}

std::string to_string(const Rational& value) {
    std::ostringstream out;
    out << numerator(value);
    if (denominator(value) != 1) out << '/' << denominator(value);
    return out.str();
}

std::string to_string(const Valuation& value) {
    return value ? to_string(*value) : std::string("inf");
}

}  // namespace canonfan
