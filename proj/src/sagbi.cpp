#include "canonfan/sagbi.hpp"

#include "canonfan/toric.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace canonfan {

AlgebraPresentation::AlgebraPresentation(int n_, std::vector<Polynomial> gens_)
    : n(n_), gens(std::move(gens_)) {
    if (gens.empty()) throw std::invalid_argument("algebra needs at least one generator");
    for (const Polynomial& g : gens) {
        require_same_dim(g.dim(), n, "algebra generators");
        if (g.is_zero()) throw std::invalid_argument("algebra generators must be nonzero");
    }
}

std::vector<Exponent> CanonicalBasis::leading_exponents() const {
    WeightedOrder ord = order();
    std::vector<Exponent> exps;
    exps.reserve(elements.size());
    for (const Polynomial& g : elements) exps.push_back(g.leading_exponent(ord));
    return exps;
}

AffineSemigroup CanonicalBasis::exponent_semigroup() const {
    return AffineSemigroup(weight.dim(), leading_exponents());
}

namespace {

// One criterion round: evaluate every kernel relation of the leading monomials
// and subduct it. Leading coefficients are divided out of each product so the
// heads cancel even for non-monic generators.
struct RoundOutcome {
    std::vector<DivisionResult> nonzero;  // remainders, in relation order
    bool unknown_zero = false;            // some zero remainder only verified to cap
    bool over_cap = false;                // some relation's value lies above the cap
};

Polynomial relation_value(const BinomialRelation& rel, const std::vector<Polynomial>& gens,
                          const std::vector<Rational>& leading_coeffs) {
    const int n = gens.front().dim();
    Polynomial pos = Polynomial::constant(n, 1), neg = Polynomial::constant(n, 1);
    Rational cpos = 1, cneg = 1;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (rel.plus[i] > 0) {
            pos = pos * gens[i].pow(rel.plus[i]);
            for (int k = 0; k < rel.plus[i]; ++k) cpos *= leading_coeffs[i];
        }
        if (rel.minus[i] > 0) {
            neg = neg * gens[i].pow(rel.minus[i]);
            for (int k = 0; k < rel.minus[i]; ++k) cneg *= leading_coeffs[i];
        }
    }
    return pos.scaled(Rational(1) / cpos) - neg.scaled(Rational(1) / cneg);
}

RoundOutcome run_round(const std::vector<Polynomial>& gens, const WeightedOrder& ord,
                       const Rational& cap) {
    std::vector<Exponent> thetas;
    std::vector<Rational> leading_coeffs;
    for (const Polynomial& g : gens) {
        Term lt = g.leading_term(ord);
        thetas.push_back(lt.exponent);
        leading_coeffs.push_back(lt.coefficient);
    }

    // When the exponent semigroup misses only finitely many points, anything whose
    // valuation exceeds every gap weight subducts to zero: each leading exponent it
    // ever exposes is expressible, so nothing can reach the remainder.
    GapReport gaps = gap_report(AffineSemigroup(ord.dim(), thetas));
    std::optional<Rational> settled_above;
    if (gaps.cofinite) {
        Rational max_gap = 0;
        for (const Exponent& gamma : gaps.gaps)
            max_gap = std::max(max_gap, ord.weight().weight_of(gamma));
        settled_above = max_gap;
    }

    RoundOutcome outcome;
    for (const BinomialRelation& rel : toric_kernel(thetas)) {
        Polynomial value = relation_value(rel, gens, leading_coeffs);
        if (value.is_zero()) continue;
        const Rational nu = *value.valuation(ord.weight());
        if (settled_above && nu > *settled_above) continue;  // certified zero remainder
        if (nu > cap) {
            outcome.over_cap = true;
            continue;
        }
        DivisionResult division = subduct(value, gens, ord, cap);
        if (division.remainder.is_zero()) {
            if (!division.remainder_certified) outcome.unknown_zero = true;
        } else {
            outcome.nonzero.push_back(std::move(division));
        }
    }
    return outcome;
}

Polynomial monic(const Polynomial& f, const WeightedOrder& ord) {
    return f.scaled(Rational(1) / f.leading_term(ord).coefficient);
}

}  // namespace

CanonicalCheck is_canonical(const AlgebraPresentation& A, const WeightedOrder& ord,
                            const Rational& cap) {
    require_same_dim(A.n, ord.dim(), "canonical check");
    RoundOutcome outcome = run_round(A.gens, ord, cap);
    CanonicalCheck check;
    if (!outcome.nonzero.empty()) {
        check.answer = CanonicalAnswer::No;
        check.witness = outcome.nonzero.front().remainder;
    } else if (outcome.unknown_zero || outcome.over_cap) {
        check.answer = CanonicalAnswer::UnknownCap;
    }
    return check;
}

CanonicalBasis complete(const AlgebraPresentation& A, const WeightedOrder& ord,
                        const Rational& cap) {
    require_same_dim(A.n, ord.dim(), "completion");
    for (const Polynomial& g : A.gens)
        if (*g.valuation(ord.weight()) > cap)
            throw std::invalid_argument("completion cap lies below a generator valuation");

    CanonicalBasis basis{A.gens, ord.weight(), ord.tie(), BasisStatus::Exact, cap, false};
    bool capped = false;

    for (;;) {
        RoundOutcome outcome = run_round(basis.elements, ord, cap);
        capped = capped || outcome.over_cap;

        // Collect this round's candidates: monic remainders, one per new leading
        // exponent, inserted in <_a order. Candidates at or above the cap are
        // blocked; an uncertified remainder may be missing terms above the cap, so
        // it taints the final status but is still adjoined.
        std::vector<std::pair<Exponent, Polynomial>> candidates;
        for (const DivisionResult& division : outcome.nonzero) {
            Polynomial candidate = monic(division.remainder, ord);
            Exponent exp = candidate.leading_exponent(ord);
            if (*candidate.valuation(ord.weight()) >= cap) {
                capped = true;
                continue;
            }
            if (!division.remainder_certified) capped = true;
            bool seen = false;
            for (const auto& [e, p] : candidates)
                if (e == exp) seen = true;
            if (!seen) candidates.emplace_back(std::move(exp), std::move(candidate));
        }

        if (candidates.empty()) {
            bool verified = outcome.nonzero.empty() && !outcome.unknown_zero && !outcome.over_cap;
            basis.status = (verified && !capped) ? BasisStatus::Exact : BasisStatus::CapReached;
            return basis;
        }

        std::sort(candidates.begin(), candidates.end(),
                  [&](const auto& lhs, const auto& rhs) {
                      return ord.compare(lhs.first, rhs.first) < 0;
                  });
        std::vector<Exponent> exps = basis.leading_exponents();
        bool adjoined = false;
        for (auto& [exp, candidate] : candidates) {
            // Remainder purity makes the exponent fresh relative to the basis the
            // round ran against, but an earlier batch-mate may already express it;
            // such a candidate is redundant and the next round re-derives whatever
            // is still missing.
            if (MembershipSolver(exps).member(exp)) continue;
            exps.push_back(exp);
            basis.elements.push_back(std::move(candidate));
            adjoined = true;
        }
        // The <_a-first candidate is always fresh, so every pass makes progress and
        // the finitely many exponents below the cap bound the loop.
        assert(adjoined);
        (void)adjoined;
    }
}

CanonicalBasis minimalize(CanonicalBasis basis) {
    if (basis.status != BasisStatus::Exact)
        throw std::invalid_argument("minimalize needs an exact basis");
    WeightedOrder ord = basis.order();
    std::vector<Exponent> exps = basis.leading_exponents();

    std::vector<std::size_t> scan(basis.elements.size());
    for (std::size_t i = 0; i < scan.size(); ++i) scan[i] = i;
    std::sort(scan.begin(), scan.end(), [&](std::size_t a, std::size_t b) {
        if (auto c = ord.compare(exps[a], exps[b]); c != 0) return c < 0;
        return a < b;
    });

    std::vector<bool> alive(basis.elements.size(), true);
    for (std::size_t i : scan) {
        std::vector<Exponent> others;
        for (std::size_t j = 0; j < exps.size(); ++j)
            if (alive[j] && j != i) others.push_back(exps[j]);
        if (!others.empty() && MembershipSolver(others).member(exps[i])) alive[i] = false;
    }

    CanonicalBasis out{{}, basis.weight, basis.tie, BasisStatus::Exact, basis.cap, false};
    for (std::size_t i = 0; i < basis.elements.size(); ++i)
        if (alive[i]) out.elements.push_back(basis.elements[i]);
    return out;
}

CanonicalBasis reduce(CanonicalBasis basis) {
    if (basis.status != BasisStatus::Exact)
        throw std::invalid_argument("reduce needs an exact basis");
    WeightedOrder ord = basis.order();
    std::vector<Exponent> exps = basis.leading_exponents();
    for (std::size_t i = 0; i < exps.size(); ++i) {
        std::vector<Exponent> others;
        for (std::size_t j = 0; j < exps.size(); ++j)
            if (j != i) others.push_back(exps[j]);
        if (!others.empty() && MembershipSolver(others).member(exps[i]))
            throw std::invalid_argument("reduce needs a minimal basis");
    }

    for (Polynomial& g : basis.elements) g = monic(g, ord);

    // Replace each g by M(g) + R_a(g - M(g), basis); a certified-final remainder is
    // the true reduction even when the quotient series is infinite.
    bool uncertified = false;
    for (std::size_t i = 0; i < basis.elements.size(); ++i) {
        Term head = basis.elements[i].leading_term(ord);
        Polynomial tail = basis.elements[i] - Polynomial::monomial(head.exponent, head.coefficient);
        if (tail.is_zero()) continue;
        DivisionResult division = subduct(tail, basis.elements, ord, basis.cap);
        if (!division.remainder_certified) uncertified = true;
        basis.elements[i] =
            Polynomial::monomial(head.exponent, 1) + division.remainder;
    }

    basis.reduced = true;
    basis.status = uncertified ? BasisStatus::CapReached : BasisStatus::Exact;
    return basis;
}

}  // namespace canonfan
