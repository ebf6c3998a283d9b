// Exact multivariate polynomials over ℚ: supports, weighted valuations, initial forms,
// leading data. Values are immutable in spirit: every operation returns a fresh value.
#pragma once

#include "canonfan/exponent.hpp"
#include "canonfan/orders.hpp"

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace canonfan {

struct Term {
    Exponent exponent;
    Rational coefficient;
};

/// Finite map Exponent → nonzero coefficient. The zero polynomial is the empty map.
/// Terms are stored under the structural exponent order, so equality and printing
/// are deterministic.
class Polynomial {
public:
    explicit Polynomial(int n) : n_(n) { check_dim(n); }
    Polynomial(int n, std::map<Exponent, Rational> terms);

    static Polynomial zero(int n) { return Polynomial(n); }
    static Polynomial monomial(Exponent alpha, Rational coeff);
    static Polynomial constant(int n, const Rational& c);
    static Polynomial variable(int n, int axis) { return monomial(Exponent::unit(n, axis), 1); }

    int dim() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Exponent, Rational>& terms() const { return terms_; }

    /// Supp(f): exponents with nonzero coefficient; empty iff f = 0.
    std::set<Exponent> support() const;

    /// Coefficient of x^alpha (0 when absent).
    Rational coefficient(const Exponent& alpha) const;

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial scaled(const Rational& c) const;
    Polynomial pow(int k) const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// ν(f,a) = min ⟨a,α⟩ over Supp(f); +∞ (nullopt) for f = 0.
    Valuation valuation(const WeightVector& a) const;

    /// Sum of the terms achieving ν(f,a). Requires f ≠ 0.
    Polynomial initial_form(const WeightVector& a) const;

    /// True iff all support exponents share one weight value. Requires f ≠ 0.
    bool is_homogeneous(const WeightVector& a) const;

    /// exp(f,a): the ≺-maximum of Supp(in(f,a)). Requires f ≠ 0.
    Exponent leading_exponent(const WeightedOrder& ord) const;

    /// M(f,a): leading exponent together with its coefficient. Requires f ≠ 0.
    Term leading_term(const WeightedOrder& ord) const;

    /// The componentwise-minimal elements of Supp(f): an antichain every support
    /// point dominates. Requires f ≠ 0.
    std::set<Exponent> minimal_support_elements() const;

    /// Drops every term of weight strictly above the bound; returns what was kept.
    Polynomial truncated_above(const WeightVector& a, const Rational& bound) const;

private:
    static void check_dim(int n);
    void add_term(const Exponent& alpha, const Rational& coeff);

    int n_ = 0;
    std::map<Exponent, Rational> terms_;
};

}  // namespace canonfan
