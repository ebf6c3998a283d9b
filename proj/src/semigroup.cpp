#include "canonfan/semigroup.hpp"

#include "canonfan/division.hpp"

#include <algorithm>
#include <stdexcept>

namespace canonfan {

AffineSemigroup::AffineSemigroup(int n, std::vector<Exponent> gens) : n_(n) {
    if (n < 1) throw std::invalid_argument("semigroup dimension must be >= 1");
    for (Exponent& g : gens) {
        require_same_dim(g.dim(), n, "semigroup generators");
        if (!g.is_zero()) gens_.push_back(std::move(g));
    }
    std::sort(gens_.begin(), gens_.end());
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
}

bool member(const Exponent& beta, const AffineSemigroup& S) {
    require_same_dim(beta.dim(), S.dim(), "semigroup membership");
    if (beta.is_zero()) return true;
    if (S.generators().empty()) return false;
    MembershipSolver solver(S.generators());
    return solver.member(beta);
}

bool semigroup_equals(const AffineSemigroup& S1, const AffineSemigroup& S2) {
    require_same_dim(S1.dim(), S2.dim(), "semigroup equality");
    for (const Exponent& g : S1.generators())
        if (!member(g, S2)) return false;
    for (const Exponent& g : S2.generators())
        if (!member(g, S1)) return false;
    return true;
}

GapReport gap_report(const AffineSemigroup& S, int ladder_bound) {
    const int n = S.dim();
    GapReport report;
    report.axis_steps.assign(static_cast<std::size_t>(n), 0);
    report.box.assign(static_cast<std::size_t>(n), 0);

    // A pure power m·e_i lies in S exactly when some generator is itself a multiple
    // of e_i: no combination touching another axis can cancel back off it.
    for (int axis = 0; axis < n; ++axis) {
        int best = 0;
        for (const Exponent& g : S.generators()) {
            bool pure = g[axis] > 0;
            for (int v = 0; v < n && pure; ++v)
                if (v != axis && g[v] != 0) pure = false;
            if (pure && (best == 0 || g[axis] < best)) best = g[axis];
        }
        if (best == 0) {
            report.cofinite = false;
            report.note = "no pure power on axis " + std::to_string(axis + 1);
            return report;
        }
        report.axis_steps[static_cast<std::size_t>(axis)] = best;
    }

    MembershipSolver solver(S.generators());
    const std::vector<int>& steps = report.axis_steps;

    // Residue classes of the grid ∏ ℤ/m_i. For class r and axis j, once some
    // r + K·m_j·e_j is a member, every grid point with k_j >= K is as well, so the
    // non-members of the class sit inside the finite box ∏ [0, K_j).
    std::vector<int> residue(static_cast<std::size_t>(n), 0);
    auto advance = [&](std::vector<int>& v, const std::vector<int>& limit) {
        std::size_t i = 0;
        while (i < v.size() && v[i] + 1 >= limit[i]) v[i++] = 0;
        if (i == v.size()) return false;
        ++v[i];
        return true;
    };

    report.cofinite = true;
    do {
        std::vector<int> ladder(static_cast<std::size_t>(n), -1);
        for (int axis = 0; axis < n; ++axis) {
            for (int k = 0; k <= ladder_bound; ++k) {
                std::vector<int> probe(residue);
                probe[static_cast<std::size_t>(axis)] +=
                    k * steps[static_cast<std::size_t>(axis)];
                if (solver.member(Exponent(probe))) {
                    ladder[static_cast<std::size_t>(axis)] = k;
                    break;
                }
            }
            if (ladder[static_cast<std::size_t>(axis)] < 0) {
                report.cofinite = false;
                report.gaps.clear();
                report.note = "bound-limited";
                return report;
            }
        }

        // Enumerate the class box and record non-members.
        std::vector<int> k(static_cast<std::size_t>(n), 0);
        bool box_empty = std::any_of(ladder.begin(), ladder.end(),
                                     [](int K) { return K == 0; });
        if (!box_empty) {
            do {
                std::vector<int> point(residue);
                for (int axis = 0; axis < n; ++axis)
                    point[static_cast<std::size_t>(axis)] +=
                        k[static_cast<std::size_t>(axis)] * steps[static_cast<std::size_t>(axis)];
                Exponent p(point);
                if (!solver.member(p)) report.gaps.insert(p);
            } while (advance(k, ladder));
        }
        for (int axis = 0; axis < n; ++axis) {
            int corner = residue[static_cast<std::size_t>(axis)] +
                         ladder[static_cast<std::size_t>(axis)] *
                             steps[static_cast<std::size_t>(axis)];
            report.box[static_cast<std::size_t>(axis)] =
                std::max(report.box[static_cast<std::size_t>(axis)], corner);
        }
    } while (advance(residue, steps));

    return report;
}

}  // namespace canonfan
