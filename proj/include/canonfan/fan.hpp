// The standard fan: cones of weight space on which the reduced basis, the initial
// algebra, and the exponent semigroup stay constant. Supports n in {1,2,3}.
#pragma once

#include "canonfan/cone.hpp"
#include "canonfan/sagbi.hpp"

#include <utility>
#include <vector>

namespace canonfan {

struct FanCell {
    Cone cone;
    CanonicalBasis basis;  // reduced at the cone's interior point when exact
    AffineSemigroup semigroup;
    std::vector<Polynomial> initial_forms;  // of the basis elements at the interior point
    bool multihomogeneous = false;
};

struct StandardFan {
    AlgebraPresentation algebra;
    TieBreakOrder tie;
    Rational cap;
    std::vector<FanCell> cells;  // deterministic order: dimension descending, rays ascending
    bool complete_flag = false;  // every cell's basis is exact
};

/// The cone {b : in(g_i, b) = in(g_i, a) for every basis element}: equality vectors
/// from pairs inside each initial support, inequality vectors from tail terms
/// against the initial support. Requires an exact reduced basis.
Cone equivalence_cone(const CanonicalBasis& basis, const WeightVector& a);

/// Enumerates every cell of the fan for n in {1,2,3}: sector sweep for n = 2,
/// facet-crossing plus wall and ray sampling (iterated to a fixpoint) for n = 3.
StandardFan traverse(const AlgebraPresentation& A, const TieBreakOrder& tie,
                     const Rational& cap);

/// True iff every initial form of the cell is a monomial; equals (dim == n).
bool is_multihomogeneous(const FanCell& cell);

/// Deduplicated union of all reduced bases; a canonical basis for every positive
/// weight. Refuses (refusal_error) unless the fan is complete.
std::vector<Polynomial> universal_basis(const StandardFan& fan);

/// The distinct initial forms of a single polynomial over U^n, each with its cone.
std::vector<std::pair<Cone, Polynomial>> single_poly_fan(const Polynomial& f);

}  // namespace canonfan
