#include "canonfan/polynomial_io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace canonfan {

namespace {

// Print order: total degree ascending (series-like), then x1-heavy terms first.
bool print_before(const Exponent& a, const Exponent& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    return a.coords() > b.coords();
}

struct Tokenizer {
    const std::string& text;
    std::size_t pos = 0;

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_space();
        return pos >= text.size();
    }
    char peek() {
        skip_space();
        return pos < text.size() ? text[pos] : '\0';
    }
    char take() {
        skip_space();
        return text[pos++];
    }
    [[noreturn]] void fail(const std::string& what) const {
        std::ostringstream msg;
        msg << "parse error at position " << pos << ": " << what << " in '" << text << "'";
        throw std::invalid_argument(msg.str());
    }

    std::string take_integer() {
        skip_space();
        std::string digits;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            digits += text[pos++];
        if (digits.empty()) fail("expected digits");
        return digits;
    }

    std::string take_name() {
        skip_space();
        std::string name;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            name += text[pos++];
        if (name.empty() || std::isdigit(static_cast<unsigned char>(name[0])))
            fail("expected a variable name");
        return name;
    }
};

std::map<std::string, int> build_lookup(int n, const std::vector<std::string>& names) {
    std::map<std::string, int> lookup;
    for (int i = 0; i < n; ++i) lookup["x" + std::to_string(i + 1)] = i;
    if (n == 1) lookup["t"] = 0;
    if (n <= 3) {
        const char* alias[] = {"x", "y", "z"};
        for (int i = 0; i < n; ++i) lookup[alias[i]] = i;
    }
    for (int i = 0; i < static_cast<int>(names.size()) && i < n; ++i) lookup[names[static_cast<std::size_t>(i)]] = i;
    return lookup;
}

}  // namespace

std::vector<std::string> default_variable_names(int n) {
    std::vector<std::string> names;
    if (n == 1) return {"t"};
    if (n <= 3) {
        const char* alias[] = {"x", "y", "z"};
        for (int i = 0; i < n; ++i) names.emplace_back(alias[i]);
        return names;
    }
    for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
    return names;
}

Polynomial parse_polynomial(const std::string& text, int n,
                            const std::vector<std::string>& names) {
    const auto lookup = build_lookup(n, names);
    Tokenizer tok{text};
    Polynomial out(n);

    bool first = true;
    while (!tok.done()) {
        // Sign of the term.
        Rational sign = 1;
        char c = tok.peek();
        if (c == '+' || c == '-') {
            tok.take();
            if (c == '-') sign = -1;
        } else if (!first) {
            tok.fail("expected '+' or '-' between terms");
        }
        first = false;

        // Factors: a rational and/or variable powers, '*'-joined (juxtaposition allowed).
        Rational coeff = 1;
        std::vector<int> exps(static_cast<std::size_t>(n), 0);
        bool saw_factor = false;
        for (;;) {
            char f = tok.peek();
            if (f == '\0' || f == '+' || f == '-') break;
            if (f == '*') {
                if (!saw_factor) tok.fail("unexpected '*'");
                tok.take();
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(f))) {
                std::string num = tok.take_integer();
                if (tok.peek() == '/') {
                    tok.take();
                    std::string den = tok.take_integer();
                    coeff *= parse_rational(num + "/" + den);
                } else {
                    coeff *= parse_rational(num);
                }
                saw_factor = true;
                continue;
            }
            std::string name = tok.take_name();
            auto it = lookup.find(name);
            if (it == lookup.end()) tok.fail("unknown variable '" + name + "'");
            int exponent = 1;
            if (tok.peek() == '^') {
                tok.take();
                exponent = std::stoi(tok.take_integer());
            }
            exps[static_cast<std::size_t>(it->second)] += exponent;
            saw_factor = true;
        }
        if (!saw_factor) tok.fail("empty term");
        out = out + Polynomial::monomial(Exponent(exps), sign * coeff);
    }
    return out;
}

Polynomial parse_polynomial(const std::string& text, int n) {
    return parse_polynomial(text, n, default_variable_names(n));
}

std::string to_string(const Polynomial& f, const std::vector<std::string>& names) {
    if (f.is_zero()) return "0";
    std::vector<const std::pair<const Exponent, Rational>*> entries;
    for (const auto& entry : f.terms()) entries.push_back(&entry);
    std::sort(entries.begin(), entries.end(),
              [](auto* a, auto* b) { return print_before(a->first, b->first); });

    std::string out;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto& [alpha, coeff] = *entries[i];
        Rational mag = coeff < 0 ? Rational(-coeff) : coeff;
        if (i == 0) {
            if (coeff < 0) out += "-";
        } else {
            out += coeff < 0 ? " - " : " + ";
        }
        std::string vars;
        for (int v = 0; v < alpha.dim(); ++v) {
            if (alpha[v] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += names[static_cast<std::size_t>(v)];
            if (alpha[v] > 1) vars += "^" + std::to_string(alpha[v]);
        }
        if (vars.empty()) {
            out += to_string(mag);
        } else if (mag == 1) {
            out += vars;
        } else {
            out += to_string(mag) + "*" + vars;
        }
    }
    return out;
}

std::string to_string(const Polynomial& f) {
    return to_string(f, default_variable_names(f.dim()));
}

}  // namespace canonfan
