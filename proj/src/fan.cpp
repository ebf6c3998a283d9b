#include "canonfan/fan.hpp"

#include "canonfan/errors.hpp"
#include "canonfan/polynomial_io.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

namespace canonfan {

namespace {

IntVec exponent_diff(const Exponent& a, const Exponent& b) {
    IntVec v(static_cast<std::size_t>(a.dim()));
    for (int i = 0; i < a.dim(); ++i) v[static_cast<std::size_t>(i)] = a[i] - b[i];
    return v;
}

bool all_nonneg(const IntVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x >= 0; });
}

// The constraints pinning in(g, ·) = in(g, a) for every listed polynomial.
Cone equivalence_cone_of(const std::vector<Polynomial>& elements, const WeightVector& a) {
    const int n = a.dim();
    std::set<IntVec> eqs, ineqs;
    for (const Polynomial& g : elements) {
        Polynomial in = g.initial_form(a);
        std::set<Exponent> in_support = in.support();
        std::vector<Exponent> inside(in_support.begin(), in_support.end());
        const Exponent& rep = inside.front();
        for (std::size_t i = 1; i < inside.size(); ++i)
            eqs.insert(primitive(exponent_diff(inside[i], rep), true));
        for (const Exponent& beta : g.support()) {
            if (in.coefficient(beta) != 0) continue;
            IntVec w = primitive(exponent_diff(beta, rep), false);
            if (!all_nonneg(w)) ineqs.insert(std::move(w));  // dominating tails always hold
        }
    }
    return make_cone(n, {eqs.begin(), eqs.end()}, {ineqs.begin(), ineqs.end()});
}

// Hyperplane normals that could cut weight space: mixed-sign support differences.
std::vector<IntVec> wall_normals(const std::vector<Polynomial>& elements) {
    std::set<IntVec> walls;
    for (const Polynomial& g : elements) {
        std::set<Exponent> support = g.support();
        std::vector<Exponent> supp(support.begin(), support.end());
        for (std::size_t i = 0; i < supp.size(); ++i)
            for (std::size_t j = i + 1; j < supp.size(); ++j) {
                IntVec v = primitive(exponent_diff(supp[i], supp[j]), true);
                bool pos = false, neg = false;
                for (const Integer& x : v) {
                    if (x > 0) pos = true;
                    if (x < 0) neg = true;
                }
                if (pos && neg) walls.insert(std::move(v));
            }
    }
    return {walls.begin(), walls.end()};
}

std::string weight_key(const WeightVector& w) { return w.to_string(); }

template <typename Payload>
struct LocalData {
    Cone cone;
    std::vector<IntVec> walls;
    Payload payload;
};

template <typename Payload>
struct CellRecord {
    Cone cone;
    WeightVector sample;
    Payload payload;
};

// --- n = 2: sector sweep --------------------------------------------------------

// Wall rays sorted by slope; one exact rational sample per sector and per wall.
std::vector<WeightVector> sector_samples(const std::set<IntVec>& walls) {
    std::vector<IntVec> rays;
    for (const IntVec& v : walls) {
        // v = (v1,v2) mixed-sign; the wall ray solves q·v1 + p·v2 = 0.
        Integer v1 = v[0], v2 = v[1];
        IntVec r{v2 < 0 ? -v2 : v2, v1 < 0 ? -v1 : v1};
        rays.push_back(primitive(std::move(r), false));
    }
    std::sort(rays.begin(), rays.end(), [](const IntVec& a, const IntVec& b) {
        return a[1] * b[0] < b[1] * a[0];  // slope a[1]/a[0] ascending
    });
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());

    auto to_weight = [](const IntVec& r) {
        return WeightVector({Rational(r[0]), Rational(r[1])});
    };
    std::vector<WeightVector> samples;
    if (rays.empty()) {
        samples.push_back(WeightVector({1, 1}));
        return samples;
    }
    samples.push_back(to_weight({rays.front()[0] + 1, rays.front()[1]}));  // below first
    for (std::size_t i = 0; i < rays.size(); ++i) {
        samples.push_back(to_weight(rays[i]));
        if (i + 1 < rays.size())
            samples.push_back(to_weight({rays[i][0] + rays[i + 1][0],
                                         rays[i][1] + rays[i + 1][1]}));  // mediant
    }
    samples.push_back(to_weight({rays.back()[0], rays.back()[1] + 1}));  // above last
    return samples;
}

// --- n = 3: facet crossing ------------------------------------------------------

std::optional<IntVec> cross_product(const IntVec& u, const IntVec& v) {
    IntVec d{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
    if (std::all_of(d.begin(), d.end(), [](const Integer& x) { return x == 0; }))
        return std::nullopt;
    return d;
}

std::optional<WeightVector> strictly_positive_ray(IntVec d) {
    bool all_pos = std::all_of(d.begin(), d.end(), [](const Integer& x) { return x > 0; });
    bool all_neg = std::all_of(d.begin(), d.end(), [](const Integer& x) { return x < 0; });
    if (!all_pos && !all_neg) return std::nullopt;
    if (all_neg)
        for (Integer& x : d) x = -x;
    d = primitive(std::move(d), false);
    std::vector<Rational> coords;
    for (const Integer& x : d) coords.emplace_back(x);
    return WeightVector(std::move(coords));
}

// Relative-interior point of the facet of `cone` supported by `w`, when the facet
// meets the open orthant.
std::optional<WeightVector> facet_point(const Cone& cone, const IntVec& w) {
    std::vector<Rational> sum(static_cast<std::size_t>(cone.n), 0);
    bool any = false;
    for (const IntVec& r : cone.rays) {
        Integer s = 0;
        for (std::size_t i = 0; i < r.size(); ++i) s += r[i] * w[i];
        if (s != 0) continue;
        any = true;
        for (std::size_t i = 0; i < r.size(); ++i) sum[i] += Rational(r[i]);
    }
    if (!any) return std::nullopt;
    for (const Rational& c : sum)
        if (c <= 0) return std::nullopt;  // facet rides the orthant boundary
    return WeightVector(std::move(sum));
}

// Step from p along the integer direction d, far enough to leave any wall through p
// but keeping every coordinate positive and never reaching a wall p is strictly off.
WeightVector nudge(const WeightVector& p, const IntVec& d, const std::set<IntVec>& walls) {
    Rational eps(1);
    auto bound = [&eps](const Rational& num, const Rational& den) {
        if (den > 0 && num > 0) eps = std::min(eps, Rational(num / (2 * den)));
    };
    for (int i = 0; i < p.dim(); ++i)
        bound(p[i], Rational(-d[static_cast<std::size_t>(i)]));  // shrinking coordinates
    for (const IntVec& v : walls) {
        Rational pv = dot(v, p);
        Rational dv = 0;  // ⟨v,d⟩: how fast the move approaches the wall v
        for (std::size_t i = 0; i < v.size(); ++i) dv += Rational(v[i] * d[i]);
        if (pv > 0) bound(pv, -dv);
        if (pv < 0) bound(-pv, dv);
    }
    std::vector<Rational> coords;
    for (int i = 0; i < p.dim(); ++i)
        coords.push_back(p[i] + eps * Rational(d[static_cast<std::size_t>(i)]));
    return WeightVector(std::move(coords));
}

// --- generic driver --------------------------------------------------------------

template <typename Payload>
std::vector<CellRecord<Payload>> enumerate_cells(
    int n, const std::function<LocalData<Payload>(const WeightVector&)>& local) {
    std::map<std::vector<IntVec>, CellRecord<Payload>> cells;  // keyed by rays
    std::set<std::string> visited;
    std::set<IntVec> walls;

    auto visit = [&](const WeightVector& w) {
        if (!visited.insert(weight_key(w)).second) return false;
        LocalData<Payload> data = local(w);
        for (IntVec& v : data.walls) walls.insert(std::move(v));
        auto key = data.cone.rays;
        bool fresh = !cells.count(key);
        if (fresh)
            cells.emplace(std::move(key),
                          CellRecord<Payload>{std::move(data.cone), w, std::move(data.payload)});
        return fresh;
    };

    if (n == 1) {
        visit(WeightVector({1}));
    } else if (n == 2) {
        for (;;) {
            std::size_t walls_before = walls.size();
            bool fresh = false;
            for (const WeightVector& w : sector_samples(walls))
                fresh = visit(w) || fresh;
            if (!fresh && walls.size() == walls_before) break;
        }
    } else {
        // Full passes until no new cell and no new wall appears: probe both sides
        // of every facet of every known cell, every wall-pair ray, and the seed.
        for (;;) {
            std::size_t cells_before = cells.size();
            std::size_t walls_before = walls.size();

            std::vector<WeightVector> probes;
            probes.push_back(WeightVector({1, 1, 1}));
            for (const auto& [key, record] : cells) {
                // Both sides of every facet.
                for (const IntVec& facet : record.cone.inequalities)
                    if (auto p = facet_point(record.cone, facet)) {
                        probes.push_back(*p);
                        IntVec inward(facet);
                        for (Integer& x : inward) x = -x;
                        probes.push_back(nudge(*p, inward, walls));
                    }
                // Lateral steps off lower-dimensional cells: walk both ways along
                // every wall normal vanishing on the cell.
                if (record.cone.dim < n)
                    for (const IntVec& v : walls) {
                        if (dot(v, record.cone.interior_point) != 0) continue;
                        IntVec minus(v);
                        for (Integer& x : minus) x = -x;
                        probes.push_back(nudge(record.cone.interior_point, v, walls));
                        probes.push_back(nudge(record.cone.interior_point, minus, walls));
                    }
            }
            std::vector<IntVec> wall_list(walls.begin(), walls.end());
            for (std::size_t i = 0; i < wall_list.size(); ++i)
                for (std::size_t j = i + 1; j < wall_list.size(); ++j)
                    if (auto d = cross_product(wall_list[i], wall_list[j]))
                        if (auto ray = strictly_positive_ray(*d)) probes.push_back(*ray);

            for (const WeightVector& w : probes) visit(w);
            if (cells.size() == cells_before && walls.size() == walls_before) break;
        }
    }

    std::vector<CellRecord<Payload>> out;
    for (auto& [key, record] : cells) out.push_back(std::move(record));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.cone.dim != b.cone.dim) return a.cone.dim > b.cone.dim;
        return a.cone.rays < b.cone.rays;
    });
    return out;
}

}  // namespace

Cone equivalence_cone(const CanonicalBasis& basis, const WeightVector& a) {
    if (basis.status != BasisStatus::Exact || !basis.reduced)
        throw std::invalid_argument("equivalence cone needs an exact reduced basis");
    return equivalence_cone_of(basis.elements, a);
}

bool is_multihomogeneous(const FanCell& cell) {
    return std::all_of(cell.initial_forms.begin(), cell.initial_forms.end(),
                       [](const Polynomial& f) { return f.is_monomial(); });
}

StandardFan traverse(const AlgebraPresentation& A, const TieBreakOrder& tie,
                     const Rational& cap) {
    if (A.n > 3) throw std::invalid_argument("fan traversal supports n in {1,2,3}");

    auto basis_at = [&](const WeightVector& w) {
        CanonicalBasis basis = complete(A, WeightedOrder(w, tie), cap);
        if (basis.status == BasisStatus::Exact) basis = reduce(minimalize(basis));
        return basis;
    };

    std::function<LocalData<CanonicalBasis>(const WeightVector&)> local =
        [&](const WeightVector& w) {
            CanonicalBasis basis = basis_at(w);
            return LocalData<CanonicalBasis>{equivalence_cone_of(basis.elements, w),
                                             wall_normals(basis.elements), std::move(basis)};
        };

    StandardFan fan{A, tie, cap, {}, true};
    for (auto& record : enumerate_cells<CanonicalBasis>(A.n, local)) {
        const WeightVector& w = record.sample;
        std::vector<Polynomial> forms;
        for (const Polynomial& g : record.payload.elements)
            forms.push_back(g.initial_form(w));
        if (record.payload.status != BasisStatus::Exact) fan.complete_flag = false;
        AffineSemigroup semigroup = record.payload.exponent_semigroup();
        FanCell cell{std::move(record.cone), std::move(record.payload), std::move(semigroup),
                     std::move(forms), false};
        cell.multihomogeneous = is_multihomogeneous(cell);
        fan.cells.push_back(std::move(cell));
    }
    return fan;
}

std::vector<Polynomial> universal_basis(const StandardFan& fan) {
    if (!fan.complete_flag)
        throw refusal_error("universal basis needs a complete fan (some cell hit the cap)");
    std::vector<Polynomial> out;
    for (const FanCell& cell : fan.cells)
        for (const Polynomial& g : cell.basis.elements)
            if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
    std::sort(out.begin(), out.end(), [](const Polynomial& a, const Polynomial& b) {
        return to_string(a) < to_string(b);
    });
    return out;
}

std::vector<std::pair<Cone, Polynomial>> single_poly_fan(const Polynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("single-polynomial fan of zero");
    if (f.dim() > 3) throw std::invalid_argument("fan decomposition supports n in {1,2,3}");

    std::function<LocalData<Polynomial>(const WeightVector&)> local =
        [&](const WeightVector& w) {
            return LocalData<Polynomial>{equivalence_cone_of({f}, w), wall_normals({f}),
                                         f.initial_form(w)};
        };
    std::vector<std::pair<Cone, Polynomial>> out;
    for (auto& record : enumerate_cells<Polynomial>(f.dim(), local))
        out.emplace_back(std::move(record.cone), std::move(record.payload));
    return out;
}

}  // namespace canonfan
