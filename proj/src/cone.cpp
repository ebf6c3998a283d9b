#include "canonfan/cone.hpp"

#include "int_linalg.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace canonfan {

namespace {

Integer idot(const IntVec& a, const IntVec& b) {
    Integer acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

bool is_zero_vec(const IntVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

// Is r a non-negative combination of two or three of the other rays? For pointed
// cones of dimension <= 3 this detects every redundant generator.
bool in_cone_of_others(const IntVec& r, const std::vector<IntVec>& rays, std::size_t skip) {
    const std::size_t n = r.size();
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < rays.size(); ++i)
        if (i != skip) idx.push_back(i);

    auto solve = [&](const std::vector<std::size_t>& cols) -> bool {
        // Solve r = Σ λ_k rays[cols_k] exactly; accept when all λ_k >= 0.
        const std::size_t m = cols.size();
        std::vector<std::vector<Rational>> M(n, std::vector<Rational>(m + 1));
        for (std::size_t row = 0; row < n; ++row) {
            for (std::size_t k = 0; k < m; ++k) M[row][k] = Rational(rays[cols[k]][row]);
            M[row][m] = Rational(r[row]);
        }
        // Gaussian elimination.
        std::size_t pr = 0;
        std::vector<std::size_t> pivot_of_col(m, n);
        for (std::size_t col = 0; col < m && pr < n; ++col) {
            std::size_t best = n;
            for (std::size_t i = pr; i < n; ++i)
                if (M[i][col] != 0) {
                    best = i;
                    break;
                }
            if (best == n) continue;
            std::swap(M[pr], M[best]);
            for (std::size_t i = 0; i < n; ++i) {
                if (i == pr || M[i][col] == 0) continue;
                Rational f = M[i][col] / M[pr][col];
                for (std::size_t j = col; j <= m; ++j) M[i][j] -= f * M[pr][j];
            }
            pivot_of_col[col] = pr;
            ++pr;
        }
        // Inconsistent rows?
        for (std::size_t i = pr; i < n; ++i)
            if (M[i][m] != 0) return false;
        std::vector<Rational> lambda(m, 0);
        for (std::size_t col = 0; col < m; ++col) {
            std::size_t p = pivot_of_col[col];
            if (p == n) continue;  // free variable: take 0
            lambda[col] = M[p][m] / M[p][col];
        }
        // Verify (free variables may make the residual nonzero).
        for (std::size_t row = 0; row < n; ++row) {
            Rational acc = 0;
            for (std::size_t k = 0; k < m; ++k) acc += lambda[k] * Rational(rays[cols[k]][row]);
            if (acc != Rational(r[row])) return false;
        }
        return std::all_of(lambda.begin(), lambda.end(), [](const Rational& l) { return l >= 0; });
    };

    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = a + 1; b < idx.size(); ++b)
            if (solve({idx[a], idx[b]})) return true;
    if (n >= 3)
        for (std::size_t a = 0; a < idx.size(); ++a)
            for (std::size_t b = a + 1; b < idx.size(); ++b)
                for (std::size_t c = b + 1; c < idx.size(); ++c)
                    if (solve({idx[a], idx[b], idx[c]})) return true;
    return false;
}

std::vector<IntVec> prune_to_extreme(std::vector<IntVec> rays) {
    for (IntVec& r : rays) r = primitive(std::move(r), false);
    std::sort(rays.begin(), rays.end());
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
    rays.erase(std::remove_if(rays.begin(), rays.end(), is_zero_vec), rays.end());
    for (;;) {
        bool dropped = false;
        for (std::size_t i = 0; i < rays.size(); ++i)
            if (rays.size() > 1 && in_cone_of_others(rays[i], rays, i)) {
                rays.erase(rays.begin() + static_cast<std::ptrdiff_t>(i));
                dropped = true;
                break;
            }
        if (!dropped) return rays;
    }
}

std::vector<IntVec> apply_halfspace(const std::vector<IntVec>& rays, const IntVec& c) {
    std::vector<IntVec> kept;
    std::vector<std::pair<IntVec, Integer>> pos, neg;
    for (const IntVec& r : rays) {
        Integer s = idot(r, c);
        if (s >= 0) kept.push_back(r);
        if (s > 0) pos.emplace_back(r, s);
        if (s < 0) neg.emplace_back(r, s);
    }
    for (const auto& [p, sp] : pos)
        for (const auto& [q, sq] : neg) {
            IntVec combo(p.size());
            for (std::size_t i = 0; i < p.size(); ++i) combo[i] = sp * q[i] - sq * p[i];
            kept.push_back(std::move(combo));
        }
    return prune_to_extreme(std::move(kept));
}

}  // namespace

IntVec primitive(IntVec v, bool sign_canonical) {
    Integer g = 0;
    for (const Integer& x : v) g = gcd(g, x);
    if (g > 1)
        for (Integer& x : v) x /= g;
    if (sign_canonical)
        for (const Integer& x : v) {
            if (x == 0) continue;
            if (x < 0)
                for (Integer& y : v) y = -y;
            break;
        }
    return v;
}

Rational dot(const IntVec& v, const WeightVector& b) {
    Rational acc = 0;
    for (std::size_t i = 0; i < v.size(); ++i) acc += Rational(v[i]) * b[static_cast<int>(i)];
    return acc;
}

bool Cone::contains(const WeightVector& b) const {
    for (const IntVec& v : equalities)
        if (dot(v, b) != 0) return false;
    for (const IntVec& w : inequalities)
        if (dot(w, b) < 0) return false;
    return true;
}

bool Cone::contains_strictly(const WeightVector& b) const {
    for (const IntVec& v : equalities)
        if (dot(v, b) != 0) return false;
    for (const IntVec& w : inequalities)
        if (dot(w, b) <= 0) return false;
    return true;
}

Cone make_cone(int n, const std::vector<IntVec>& equalities,
               const std::vector<IntVec>& inequalities) {
    if (n < 1 || n > 3) throw std::invalid_argument("cones are supported for n in {1,2,3}");

    std::vector<IntVec> rays;
    for (int i = 0; i < n; ++i) {
        IntVec e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = 1;
        rays.push_back(std::move(e));
    }
    for (const IntVec& v : equalities) {
        IntVec minus(v);
        for (Integer& x : minus) x = -x;
        rays = apply_halfspace(rays, v);
        rays = apply_halfspace(rays, minus);
    }
    for (const IntVec& w : inequalities) rays = apply_halfspace(rays, w);
    rays = prune_to_extreme(std::move(rays));  // canonical: primitive, sorted, extreme
    if (rays.empty()) throw std::invalid_argument("cone has no rays inside the orthant");

    Cone cone;
    cone.n = n;
    cone.rays = rays;

    std::vector<detail::IntRow> ray_rows(rays.begin(), rays.end());
    cone.dim = detail::rank(ray_rows);

    // Interior point: the sum of the extreme rays. A zero coordinate would mean the
    // whole cone sits on the orthant boundary, i.e. the cell misses U^n.
    std::vector<Rational> interior(static_cast<std::size_t>(n), 0);
    for (const IntVec& r : rays)
        for (std::size_t i = 0; i < r.size(); ++i) interior[i] += Rational(r[i]);
    for (const Rational& x : interior)
        if (x <= 0) throw std::invalid_argument("cone misses the open orthant");
    cone.interior_point = WeightVector(std::move(interior));

    // Canonical equalities: HNF basis of the integer orthogonal complement of the rays.
    auto complement = detail::kernel_lattice([&] {
        std::vector<detail::IntRow> cols;
        // kernel_lattice computes left-kernels; transpose so unknowns pair with rays.
        cols.resize(static_cast<std::size_t>(n), detail::IntRow(rays.size()));
        for (std::size_t i = 0; i < rays.size(); ++i)
            for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j)
                cols[j][i] = rays[i][j];
        return cols;
    }());
    cone.equalities = detail::hermite_normal_form(std::move(complement));

    // Facet inequalities drawn from the inputs: primitive, strictly supporting, with
    // a (dim-1)-dimensional contact set. Constraints that are non-negative on the
    // whole orthant never display (positivity is implicit).
    std::set<IntVec> seen;
    for (IntVec w : inequalities) {
        w = primitive(std::move(w), false);
        if (std::all_of(w.begin(), w.end(), [](const Integer& x) { return x >= 0; })) continue;
        if (seen.count(w)) continue;
        std::vector<detail::IntRow> contact;
        bool strict_somewhere = false;
        for (const IntVec& r : rays) {
            Integer s = idot(r, w);
            if (s == 0) contact.push_back(r);
            if (s > 0) strict_somewhere = true;
        }
        if (!strict_somewhere) continue;  // implied equality, already canonicalized
        if (detail::rank(contact) != cone.dim - 1) continue;
        seen.insert(w);
    }
    cone.inequalities.assign(seen.begin(), seen.end());
    return cone;
}

}  // namespace canonfan
