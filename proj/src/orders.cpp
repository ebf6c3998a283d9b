#include "canonfan/orders.hpp"

#include <algorithm>
#include <stdexcept>

namespace canonfan {

TieBreakOrder::TieBreakOrder(TieBreakKind kind, std::vector<int> precedence)
    : kind_(kind), precedence_(std::move(precedence)) {
    if (!precedence_.empty()) {
        std::vector<int> sorted(precedence_);
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i)
            if (sorted[i] != static_cast<int>(i))
                throw std::invalid_argument("variable precedence is not a permutation of 0..n-1");
    }
}

int TieBreakOrder::rank_var(int rank, int n) const {
    if (precedence_.empty()) return rank;
    if (static_cast<int>(precedence_.size()) != n)
        throw std::invalid_argument("variable precedence length does not match dimension");
    return precedence_[static_cast<std::size_t>(rank)];
}

std::strong_ordering TieBreakOrder::compare(const Exponent& alpha, const Exponent& beta) const {
    require_same_dim(alpha.dim(), beta.dim(), "tie-break comparison");
    const int n = alpha.dim();

    if (kind_ != TieBreakKind::Lex) {
        if (auto c = alpha.total_degree() <=> beta.total_degree(); c != 0) return c;
    }
    if (kind_ == TieBreakKind::GradedRevLex) {
        // Scan least significant variable first; smaller exponent there means larger monomial.
        for (int r = n - 1; r >= 0; --r) {
            int v = rank_var(r, n);
            if (alpha[v] != beta[v]) return beta[v] <=> alpha[v];
        }
        return std::strong_ordering::equal;
    }
    for (int r = 0; r < n; ++r) {
        int v = rank_var(r, n);
        if (alpha[v] != beta[v]) return alpha[v] <=> beta[v];
    }
    return std::strong_ordering::equal;
}

std::string TieBreakOrder::to_string() const {
    switch (kind_) {
        case TieBreakKind::GradedLex: return "grlex";
        case TieBreakKind::Lex: return "lex";
        case TieBreakKind::GradedRevLex: return "grevlex";
    }
    return "?";
}

TieBreakKind parse_tie_break_kind(const std::string& name) {
    if (name == "grlex") return TieBreakKind::GradedLex;
    if (name == "lex") return TieBreakKind::Lex;
    if (name == "grevlex") return TieBreakKind::GradedRevLex;
    throw std::invalid_argument("unknown order '" + name + "' (expected grlex|lex|grevlex)");
}

std::strong_ordering WeightedOrder::compare(const Exponent& alpha, const Exponent& beta) const {
    require_same_dim(alpha.dim(), weight_.dim(), "weighted comparison");
    require_same_dim(alpha.dim(), beta.dim(), "weighted comparison");
    const Rational wa = weight_.weight_of(alpha);
    const Rational wb = weight_.weight_of(beta);
    if (wa < wb) return std::strong_ordering::less;
    if (wb < wa) return std::strong_ordering::greater;
    return tie_.compare(alpha, beta);
}

}  // namespace canonfan
