// a-canonical bases: the S-relation membership criterion, the completion loop,
// minimalization, and the unique reduced basis.
#pragma once

#include "canonfan/division.hpp"
#include "canonfan/orders.hpp"
#include "canonfan/polynomial.hpp"
#include "canonfan/semigroup.hpp"

#include <optional>
#include <vector>

namespace canonfan {

/// A = K[[g_1,...,g_s]]: nonzero generators of one ambient dimension.
struct AlgebraPresentation {
    int n = 0;
    std::vector<Polynomial> gens;

    AlgebraPresentation(int n_, std::vector<Polynomial> gens_);
};

enum class BasisStatus { Exact, CapReached };

struct CanonicalBasis {
    std::vector<Polynomial> elements;
    WeightVector weight;
    TieBreakOrder tie;
    BasisStatus status = BasisStatus::Exact;
    Rational cap;
    bool reduced = false;

    WeightedOrder order() const { return WeightedOrder(weight, tie); }
    std::vector<Exponent> leading_exponents() const;
    AffineSemigroup exponent_semigroup() const;
};

enum class CanonicalAnswer { Yes, No, UnknownCap };

struct CanonicalCheck {
    CanonicalAnswer answer = CanonicalAnswer::Yes;
    /// First nonzero relation remainder, when answer == No.
    std::optional<Polynomial> witness;
};

/// The S-relation criterion: evaluate every kernel relation of the leading
/// monomials and subduct. Yes when every remainder is provably zero; No with the
/// first nonzero remainder; UnknownCap when some zero remainder was only verified
/// up to the cap.
CanonicalCheck is_canonical(const AlgebraPresentation& A, const WeightedOrder& ord,
                            const Rational& cap);

/// Completion: adjoin nonzero relation remainders (made monic, inserted by <_a on
/// their leading exponents) and restart until the criterion holds. A candidate is
/// adjoined only when its valuation is strictly below the cap; otherwise the run
/// stops with status CapReached.
CanonicalBasis complete(const AlgebraPresentation& A, const WeightedOrder& ord,
                        const Rational& cap);

/// Drops every element whose leading exponent factors through the remaining ones.
/// Requires an exact basis; idempotent.
CanonicalBasis minimalize(CanonicalBasis basis);

/// Monic scaling plus tail reduction against the whole basis; the result is the
/// unique reduced basis when every tail reduction is certified final. Requires an
/// exact, minimal basis.
CanonicalBasis reduce(CanonicalBasis basis);

}  // namespace canonfan
