#include "canonfan/division.hpp"

#include "canonfan/semigroup.hpp"

#include <cassert>
#include <stdexcept>

namespace canonfan {

MembershipSolver::MembershipSolver(std::vector<Exponent> gens) : gens_(std::move(gens)) {
    if (gens_.empty()) throw std::invalid_argument("membership needs at least one generator");
    dim_ = gens_.front().dim();
    for (const Exponent& g : gens_) require_same_dim(g.dim(), dim_, "membership generators");
}

bool MembershipSolver::solvable(std::size_t from, const Exponent& residual) {
    if (residual.is_zero()) return true;
    if (from == gens_.size()) return false;
    auto key = std::make_pair(from, residual);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    bool ok = false;
    const Exponent& g = gens_[from];
    Exponent rest = residual;
    // Multiplicity 0, 1, ... of gens_[from]; the zero generator only admits 0.
    for (;;) {
        if (solvable(from + 1, rest)) {
            ok = true;
            break;
        }
        if (g.is_zero() || !g.divides(rest)) break;
        rest = rest - g;
    }
    memo_.emplace(key, ok);
    return ok;
}

bool MembershipSolver::member(const Exponent& beta) {
    require_same_dim(beta.dim(), dim_, "membership query");
    return solvable(0, beta);
}

std::optional<Factorization> MembershipSolver::factorization(const Exponent& beta) {
    if (!member(beta)) return std::nullopt;
    // Reconstruct the lexicographically smallest multiplicity vector from the
    // solvability table: smallest m_1 first, then m_2, and so on.
    Factorization mult(gens_.size(), 0);
    Exponent rest = beta;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        const Exponent& g = gens_[i];
        int m = 0;
        Exponent r = rest;
        while (!solvable(i + 1, r)) {
            if (g.is_zero() || !g.divides(r))
                throw std::logic_error("membership table inconsistent");
            r = r - g;
            ++m;
        }
        mult[i] = m;
        rest = r;
    }
    assert(rest.is_zero() || solvable(gens_.size(), rest));
    return mult;
}

std::optional<Factorization> monomial_membership(const Exponent& beta,
                                                 const std::vector<Exponent>& gens) {
    MembershipSolver solver(gens);
    return solver.factorization(beta);
}

namespace {

// Power cache: products of generator powers dominate the cost of a division.
class PowerTable {
public:
    explicit PowerTable(const std::vector<Polynomial>& gens) : gens_(gens) {}

    const Polynomial& power(std::size_t i, int k) {
        auto key = std::make_pair(i, k);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        Polynomial value = (k == 0) ? Polynomial::constant(gens_[i].dim(), 1)
                                    : power(i, k - 1) * gens_[i];
        return cache_.emplace(key, std::move(value)).first->second;
    }

    Polynomial product(const Factorization& mult) {
        Polynomial acc = Polynomial::constant(gens_.front().dim(), 1);
        for (std::size_t i = 0; i < mult.size(); ++i)
            if (mult[i] > 0) acc = acc * power(i, mult[i]);
        return acc;
    }

private:
    const std::vector<Polynomial>& gens_;
    std::map<std::pair<std::size_t, int>, Polynomial> cache_;
};

}  // namespace

DivisionResult subduct(const Polynomial& F, const std::vector<Polynomial>& gens,
                       const WeightedOrder& ord, const Rational& cap) {
    if (gens.empty()) throw std::invalid_argument("division needs at least one generator");
    const int n = ord.dim();
    require_same_dim(F.dim(), n, "division input");
    std::vector<Exponent> thetas;
    std::vector<Rational> leading_coeffs;
    thetas.reserve(gens.size());
    for (const Polynomial& g : gens) {
        if (g.is_zero()) throw std::invalid_argument("division by a zero generator");
        require_same_dim(g.dim(), n, "division generators");
        Term lt = g.leading_term(ord);
        thetas.push_back(lt.exponent);
        leading_coeffs.push_back(lt.coefficient);
    }

    DivisionResult result{Polynomial::zero(n), {}, DivisionStatus::Exact, cap, true};
    if (F.is_zero()) return result;
    if (*F.valuation(ord.weight()) > cap)
        throw std::invalid_argument("division cap lies below the valuation of the input");

    MembershipSolver solver(thetas);
    PowerTable powers(gens);
    Polynomial work = F;
    Valuation stop_valuation;  // set when the cap cuts the loop
    Valuation prev_valuation;
    std::optional<Exponent> prev_exponent;

    while (!work.is_zero()) {
        const Rational nu = *work.valuation(ord.weight());
        if (nu > cap) {
            stop_valuation = nu;
            result.status = DivisionStatus::Truncated;
            break;
        }
        const Term lt = work.leading_term(ord);

        // Progress invariant of the loop: the valuation strictly grows, or it stays
        // and the leading exponent strictly ≺-decreases (this is what guarantees
        // termination below the cap).
        assert(!prev_valuation || nu > *prev_valuation ||
               (nu == *prev_valuation && ord.tie().compare(lt.exponent, *prev_exponent) < 0));
        prev_valuation = nu;
        prev_exponent = lt.exponent;

        if (auto mult = solver.factorization(lt.exponent)) {
            Rational c = lt.coefficient;
            for (std::size_t i = 0; i < mult->size(); ++i)
                for (int k = 0; k < (*mult)[i]; ++k) c /= leading_coeffs[i];
            work = work - powers.product(*mult).scaled(c);
            result.quotient_terms.push_back(QuotientTerm{c, *mult});
        } else {
            work = work - Polynomial::monomial(lt.exponent, lt.coefficient);
            result.remainder = result.remainder + Polynomial::monomial(lt.exponent, lt.coefficient);
        }
    }

    if (result.status == DivisionStatus::Exact) {
        result.remainder_certified = true;
    } else {
        // The discarded tail only has exponents of valuation >= stop_valuation. If
        // the generator-exponent semigroup misses at most finitely many points and
        // all of them weigh less than that, no further remainder term can exist.
        GapReport gaps = gap_report(AffineSemigroup(n, thetas));
        result.remainder_certified = false;
        if (gaps.cofinite) {
            bool all_below = true;
            for (const Exponent& gamma : gaps.gaps)
                if (ord.weight().weight_of(gamma) >= *stop_valuation) {
                    all_below = false;
                    break;
                }
            result.remainder_certified = all_below;
        }
    }
    return result;
}

}  // namespace canonfan
