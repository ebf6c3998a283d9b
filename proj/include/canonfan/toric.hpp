// Binomial generators of the kernel of a monomial map φ(X_i) = x^{θ^i}, and
// evaluation of such relations on actual generators.
#pragma once

#include "canonfan/polynomial.hpp"

#include <string>
#include <vector>

namespace canonfan {

/// X^plus - X^minus with Σ plus_i·θ^i = Σ minus_i·θ^i. Canonical orientation: plus is
/// the larger side under total degree, then lex with X1 ≻ X2 ≻ ....
struct BinomialRelation {
    std::vector<int> plus;
    std::vector<int> minus;

    int arity() const { return static_cast<int>(plus.size()); }
    std::string to_string() const;  // "X1*X3 - X2^2"

    friend bool operator==(const BinomialRelation&, const BinomialRelation&) = default;
    friend auto operator<=>(const BinomialRelation&, const BinomialRelation&) = default;
};

/// A finite binomial generating set of Ker(φ). The result is the reduced Gröbner
/// basis of the lattice ideal for a fixed internal order (kernel lattice basis,
/// lifted to binomials and saturated with respect to X1···Xs by a binomial
/// Buchberger loop with one auxiliary variable). Sorted by total degree of the plus
/// side, then lexicographically. Independent monomials yield the empty list.
std::vector<BinomialRelation> toric_kernel(const std::vector<Exponent>& thetas);

/// Π gens_i^{plus_i} − Π gens_i^{minus_i}, expanded exactly.
Polynomial evaluate_relation(const BinomialRelation& rel, const std::vector<Polynomial>& gens);

/// Normal form of the monomial X^mono modulo the relations, rewriting plus → minus.
/// Well-defined (confluent) because toric_kernel returns a reduced Gröbner basis.
std::vector<int> relation_normal_form(std::vector<int> mono,
                                      const std::vector<BinomialRelation>& relations);

}  // namespace canonfan
