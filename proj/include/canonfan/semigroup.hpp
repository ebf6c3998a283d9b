// Affine subsemigroups of ℕⁿ: membership, equality, and exact gap enumeration for
// the cofinite case.
#pragma once

#include "canonfan/exponent.hpp"

#include <set>
#include <string>
#include <vector>

namespace canonfan {

/// Finitely generated subsemigroup of ℕⁿ; zero generators are discarded and the
/// rest stored sorted.
class AffineSemigroup {
public:
    AffineSemigroup(int n, std::vector<Exponent> gens);

    int dim() const { return n_; }
    const std::vector<Exponent>& generators() const { return gens_; }

    friend bool operator==(const AffineSemigroup&, const AffineSemigroup&) = default;

private:
    int n_ = 0;
    std::vector<Exponent> gens_;
};

bool member(const Exponent& beta, const AffineSemigroup& S);

/// Equality as sets: mutual membership of the generators.
bool semigroup_equals(const AffineSemigroup& S1, const AffineSemigroup& S2);

struct GapReport {
    bool cofinite = false;
    /// ℕⁿ \ S exactly, valid iff cofinite. The gap count is a colength proxy only:
    /// it is reported as the gap count of the exponent semigroup, nothing more.
    std::set<Exponent> gaps;
    /// Exclusive upper corner of the box that provably contains every gap.
    std::vector<int> box;
    /// Minimal pure power m_i with m_i·e_i ∈ S, per axis (0 when none exists).
    std::vector<int> axis_steps;
    /// "" on a definitive answer; "no pure power on axis i" when non-cofiniteness is
    /// proved; "bound-limited" when the ladder search ran out of budget.
    std::string note;
};

/// Decides cofiniteness and enumerates all gaps when cofinite. `ladder_bound`
/// limits the per-residue-class search along each axis.
GapReport gap_report(const AffineSemigroup& S, int ladder_bound = 64);

}  // namespace canonfan
