// Subduction: divide F against generators, factoring each leading term through the
// generators' leading monomials or shipping it to the remainder.
#pragma once

#include "canonfan/polynomial.hpp"

#include <map>
#include <optional>
#include <vector>

namespace canonfan {

/// Multiplicities (m_1,...,m_s): Σ m_i · exp(F_i,a) equals the factored exponent.
using Factorization = std::vector<int>;

/// Deterministic membership of an exponent in the semigroup generated by `gens`:
/// returns the lexicographically smallest multiplicity vector, or nullopt.
std::optional<Factorization> monomial_membership(const Exponent& beta,
                                                 const std::vector<Exponent>& gens);

/// Shared-memo variant used by the division loop and the semigroup module.
class MembershipSolver {
public:
    explicit MembershipSolver(std::vector<Exponent> gens);

    bool member(const Exponent& beta);
    std::optional<Factorization> factorization(const Exponent& beta);

    const std::vector<Exponent>& generators() const { return gens_; }

private:
    bool solvable(std::size_t from, const Exponent& residual);

    std::vector<Exponent> gens_;
    int dim_ = 0;
    std::map<std::pair<std::size_t, Exponent>, bool> memo_;
};

struct QuotientTerm {
    Rational coefficient;
    Factorization powers;  // one multiplicity per generator
};

enum class DivisionStatus { Exact, Truncated };

struct DivisionResult {
    Polynomial remainder;
    std::vector<QuotientTerm> quotient_terms;
    DivisionStatus status;
    Rational cap;
    /// True when the remainder is provably final: either the loop ended at zero, or
    /// every exponent above the stopping valuation lies in the leading-exponent
    /// semigroup (its gap set is finite and exhausted), so no remainder term can
    /// ever be emitted past that point.
    bool remainder_certified;
};

/// Divide F by gens under ord, discarding working terms of weighted valuation
/// strictly above cap. Exact status means the loop reached zero, in which case
/// F = Σ c_i · Π gens_j^{m_ij} + remainder holds term-for-term.
DivisionResult subduct(const Polynomial& F, const std::vector<Polynomial>& gens,
                       const WeightedOrder& ord, const Rational& cap);

}  // namespace canonfan
