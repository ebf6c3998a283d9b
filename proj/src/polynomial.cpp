#include "canonfan/polynomial.hpp"

#include <stdexcept>

namespace canonfan {

void Polynomial::check_dim(int n) {
    if (n < 1) throw std::invalid_argument("polynomial dimension must be >= 1");
}

Polynomial::Polynomial(int n, std::map<Exponent, Rational> terms) : n_(n) {
    check_dim(n);
    for (auto& [alpha, coeff] : terms) {
        require_same_dim(alpha.dim(), n_, "polynomial term");
        if (coeff != 0) terms_.emplace(alpha, coeff);
    }
}

Polynomial Polynomial::monomial(Exponent alpha, Rational coeff) {
    Polynomial p(alpha.dim());
    if (coeff != 0) p.terms_.emplace(std::move(alpha), std::move(coeff));
    return p;
}

Polynomial Polynomial::constant(int n, const Rational& c) {
    return monomial(Exponent::zero(n), c);
}

std::set<Exponent> Polynomial::support() const {
    std::set<Exponent> supp;
    for (const auto& [alpha, coeff] : terms_) supp.insert(alpha);
    return supp;
}

Rational Polynomial::coefficient(const Exponent& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponent& alpha, const Rational& coeff) {
    auto [it, fresh] = terms_.emplace(alpha, coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    require_same_dim(n_, other.n_, "polynomial sum");
    Polynomial out(*this);
    for (const auto& [alpha, coeff] : other.terms_) out.add_term(alpha, coeff);
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(n_);
    for (const auto& [alpha, coeff] : terms_) out.terms_.emplace(alpha, -coeff);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial Polynomial::operator*(const Polynomial& other) const {
    require_same_dim(n_, other.n_, "polynomial product");
    Polynomial out(n_);
    for (const auto& [alpha, ca] : terms_)
        for (const auto& [beta, cb] : other.terms_) out.add_term(alpha + beta, ca * cb);
    return out;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial out(n_);
    if (c == 0) return out;
    for (const auto& [alpha, coeff] : terms_) out.terms_.emplace(alpha, coeff * c);
    return out;
}

Polynomial Polynomial::pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative polynomial power");
    Polynomial acc = constant(n_, 1);
    Polynomial base(*this);
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

Valuation Polynomial::valuation(const WeightVector& a) const {
    require_same_dim(n_, a.dim(), "valuation");
    Valuation best;
    for (const auto& [alpha, coeff] : terms_) {
        Rational w = a.weight_of(alpha);
        if (!best || w < *best) best = w;
    }
    return best;
}

Polynomial Polynomial::initial_form(const WeightVector& a) const {
    if (is_zero()) throw std::invalid_argument("initial form of the zero polynomial");
    const Rational nu = *valuation(a);
    Polynomial out(n_);
    for (const auto& [alpha, coeff] : terms_)
        if (a.weight_of(alpha) == nu) out.terms_.emplace(alpha, coeff);
    return out;
}

bool Polynomial::is_homogeneous(const WeightVector& a) const {
    if (is_zero()) throw std::invalid_argument("homogeneity of the zero polynomial");
    const Rational nu = *valuation(a);
    for (const auto& [alpha, coeff] : terms_)
        if (a.weight_of(alpha) != nu) return false;
    return true;
}

Exponent Polynomial::leading_exponent(const WeightedOrder& ord) const {
    return leading_term(ord).exponent;
}

Term Polynomial::leading_term(const WeightedOrder& ord) const {
    if (is_zero()) throw std::invalid_argument("leading term of the zero polynomial");
    require_same_dim(n_, ord.dim(), "leading term");
    const Rational nu = *valuation(ord.weight());
    const std::pair<const Exponent, Rational>* best = nullptr;
    for (const auto& entry : terms_) {
        if (ord.weight().weight_of(entry.first) != nu) continue;
        if (!best || ord.tie().compare(entry.first, best->first) > 0) best = &entry;
    }
    return Term{best->first, best->second};
}

std::set<Exponent> Polynomial::minimal_support_elements() const {
    if (is_zero()) throw std::invalid_argument("minimal support of the zero polynomial");
    std::set<Exponent> out;
    for (const auto& [alpha, ca] : terms_) {
        bool dominated = false;
        for (const auto& [beta, cb] : terms_)
            if (beta != alpha && beta.divides(alpha)) {
                dominated = true;
                break;
            }
        if (!dominated) out.insert(alpha);
    }
    return out;
}

Polynomial Polynomial::truncated_above(const WeightVector& a, const Rational& bound) const {
    require_same_dim(n_, a.dim(), "truncation");
    Polynomial out(n_);
    for (const auto& [alpha, coeff] : terms_)
        if (a.weight_of(alpha) <= bound) out.terms_.emplace(alpha, coeff);
    return out;
}

}  // namespace canonfan
