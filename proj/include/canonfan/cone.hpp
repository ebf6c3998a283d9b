// Rational polyhedral cones inside the closed positive orthant, for n <= 3.
// Built by double description from equality/inequality constraints; the extreme
// rays of the closure are the canonical key.
#pragma once

#include "canonfan/exponent.hpp"

#include <vector>

namespace canonfan {

using IntVec = std::vector<Integer>;

struct Cone {
    int n = 0;
    /// ⟨b,v⟩ = 0 on the cone; HNF-canonicalized basis of the active equalities.
    std::vector<IntVec> equalities;
    /// ⟨b,w⟩ > 0 strictly inside; irredundant, primitive, sorted. Positivity of the
    /// ambient orthant is implicit and never listed.
    std::vector<IntVec> inequalities;
    /// Extreme rays of the closure, primitive and sorted: the canonical key.
    std::vector<IntVec> rays;
    int dim = 0;
    /// Sum of the extreme rays: a relative-interior, strictly positive point.
    WeightVector interior_point;

    /// Closure membership (equalities hold, inequalities >= 0).
    bool contains(const WeightVector& b) const;
    /// Relative-interior membership (inequalities strictly positive).
    bool contains_strictly(const WeightVector& b) const;

    friend bool operator==(const Cone& a, const Cone& b) { return a.rays == b.rays; }
};

/// Intersects the constraints with the closed orthant and normalizes. Throws when
/// the result misses U^n entirely (no strictly positive point).
Cone make_cone(int n, const std::vector<IntVec>& equalities,
               const std::vector<IntVec>& inequalities);

/// gcd-normalized copy with the same direction (first nonzero positive when `sign_canonical`).
IntVec primitive(IntVec v, bool sign_canonical);

Rational dot(const IntVec& v, const WeightVector& b);

}  // namespace canonfan
