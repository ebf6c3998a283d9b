// Tie-break well-orders ≺ on ℕⁿ and the weighted total order <_a built on top of them.
#pragma once

#include "canonfan/exponent.hpp"

#include <compare>
#include <string>
#include <vector>

namespace canonfan {

enum class TieBreakKind { GradedLex, Lex, GradedRevLex };

/// A total well-order on ℕⁿ compatible with sums: graded-lex, lex, or graded-revlex,
/// with a variable precedence permutation. Default precedence x1 ≻ x2 ≻ ... ≻ xn.
class TieBreakOrder {
public:
    TieBreakOrder() = default;
    explicit TieBreakOrder(TieBreakKind kind, std::vector<int> precedence = {});

    /// α ≺ β ⟹ less. Total, sum-compatible, well-founded.
    std::strong_ordering compare(const Exponent& alpha, const Exponent& beta) const;

    TieBreakKind kind() const { return kind_; }
    /// precedence()[r] is the variable index with precedence rank r (0 = most significant);
    /// empty means identity.
    const std::vector<int>& precedence() const { return precedence_; }

    std::string to_string() const;  // "grlex", "lex", "grevlex"

    friend bool operator==(const TieBreakOrder&, const TieBreakOrder&) = default;

private:
    int rank_var(int rank, int n) const;

    TieBreakKind kind_ = TieBreakKind::GradedLex;
    std::vector<int> precedence_;
};

TieBreakKind parse_tie_break_kind(const std::string& name);  // "grlex" | "lex" | "grevlex"

/// <_a : compare weights ⟨a,·⟩ first, ties broken by ≺.
class WeightedOrder {
public:
    WeightedOrder() = default;
    WeightedOrder(WeightVector weight, TieBreakOrder tie)
        : weight_(std::move(weight)), tie_(std::move(tie)) {}

    const WeightVector& weight() const { return weight_; }
    const TieBreakOrder& tie() const { return tie_; }
    int dim() const { return weight_.dim(); }

    /// α <_a β ⟺ ⟨a,α⟩ < ⟨a,β⟩, or equal weights and α ≺ β. Equal only when α = β.
    std::strong_ordering compare(const Exponent& alpha, const Exponent& beta) const;

private:
    WeightVector weight_;
    TieBreakOrder tie_;
};

}  // namespace canonfan
