#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "canonfan/errors.hpp"
#include "canonfan/fan.hpp"
#include "canonfan/polynomial_io.hpp"
#include "test_util.hpp"

using namespace canonfan;

namespace {

Polynomial P(const std::string& text, int n) { return parse_polynomial(text, n); }

AlgebraPresentation algebra(int n, std::vector<std::string> texts) {
    std::vector<Polynomial> gens;
    for (const auto& t : texts) gens.push_back(P(t, n));
    return AlgebraPresentation(n, std::move(gens));
}

IntVec IV(std::vector<long long> v) { return IntVec(v.begin(), v.end()); }

// Random relative-interior point: a strictly positive rational combination of rays.
WeightVector random_interior(const Cone& cone) {
    std::vector<Rational> coords(static_cast<std::size_t>(cone.n), 0);
    for (const IntVec& r : cone.rays) {
        Rational lambda(testutil::rand_int(1, 9), testutil::rand_int(1, 9));
        for (std::size_t i = 0; i < r.size(); ++i) coords[i] += lambda * Rational(r[i]);
    }
    return WeightVector(std::move(coords));
}

const FanCell* locate(const StandardFan& fan, const WeightVector& w) {
    const FanCell* hit = nullptr;
    for (const FanCell& cell : fan.cells)
        if (cell.cone.contains_strictly(w)) {
            if (hit) return nullptr;  // two strict containers: not a partition
            hit = &cell;
        }
    return hit;
}

CanonicalBasis reduced_at(const AlgebraPresentation& A, const WeightVector& w,
                          const Rational& cap) {
    return reduce(minimalize(complete(A, WeightedOrder(w, TieBreakOrder{}), cap)));
}

// Weights proportional up to scaling give the same fan data; normalizing by the
// largest coordinate keeps valuations commensurate with the caps used here.
WeightVector normalized(const WeightVector& w) {
    Rational top = 0;
    for (int i = 0; i < w.dim(); ++i) top = std::max(top, w[i]);
    std::vector<Rational> coords;
    for (int i = 0; i < w.dim(); ++i) coords.push_back(w[i] / top);
    return WeightVector(std::move(coords));
}

WeightVector random_unit_weight(int n) { return normalized(testutil::random_weight(n, 9)); }

}  // namespace

TEST_CASE("equivalence cones from the three canonical shapes") {
    WeightedOrder ord12(WeightVector({1, 2}), TieBreakOrder{});
    CanonicalBasis monos{{P("x^2", 2), P("y^3", 2), P("x*y", 2)},
                         ord12.weight(), ord12.tie(), BasisStatus::Exact, Rational(20), true};
    Cone full = equivalence_cone(monos, WeightVector({1, 2}));
    CHECK(full.dim == 2);
    CHECK(full.equalities.empty());
    CHECK(full.inequalities.empty());
    CHECK(full.rays == std::vector<IntVec>{IV({0, 1}), IV({1, 0})});

    CanonicalBasis half{{P("x + y", 2)},
                        ord12.weight(), ord12.tie(), BasisStatus::Exact, Rational(20), true};
    Cone sector = equivalence_cone(half, WeightVector({1, 2}));
    CHECK(sector.dim == 2);
    CHECK(sector.equalities.empty());
    CHECK(sector.inequalities == std::vector<IntVec>{IV({-1, 1})});

    WeightedOrder ord11(WeightVector({1, 1}), TieBreakOrder{});
    CanonicalBasis wall{{P("x^2 + x*y", 2)},
                        ord11.weight(), ord11.tie(), BasisStatus::Exact, Rational(20), true};
    Cone ray = equivalence_cone(wall, WeightVector({1, 1}));
    CHECK(ray.dim == 1);
    CHECK(ray.equalities == std::vector<IntVec>{IV({1, -1})});
    CHECK(ray.rays == std::vector<IntVec>{IV({1, 1})});

    CanonicalBasis truncated = monos;
    truncated.status = BasisStatus::CapReached;
    CHECK_THROWS_AS(equivalence_cone(truncated, WeightVector({1, 1})), std::invalid_argument);
}

TEST_CASE("a monomial-canonical algebra yields the single full cell") {
    auto fan = traverse(algebra(2, {"x^2", "y^3", "x*y"}), TieBreakOrder{}, Rational(24));
    CHECK(fan.complete_flag);
    REQUIRE(fan.cells.size() == 1);
    CHECK(fan.cells[0].cone.dim == 2);
    CHECK(fan.cells[0].multihomogeneous);
    CHECK(fan.cells[0].cone.inequalities.empty());
}

TEST_CASE("n = 1 always gives one cell") {
    auto fan = traverse(algebra(1, {"t^4", "t^6 + t^7"}), TieBreakOrder{}, Rational(30));
    CHECK(fan.complete_flag);
    REQUIRE(fan.cells.size() == 1);
    CHECK(fan.cells[0].cone.dim == 1);
}

TEST_CASE("the wall fan of K[[x+y, x*y, y^3]]") {
    auto A = algebra(2, {"x + y", "x*y", "y^3"});
    auto fan = traverse(A, TieBreakOrder{}, Rational(40));
    REQUIRE(fan.complete_flag);
    REQUIRE(fan.cells.size() == 3);

    // Deterministic order: full-dimensional cells first, then the wall.
    const FanCell& left = fan.cells[0];   // b1 < b2
    const FanCell& right = fan.cells[1];  // b1 > b2
    const FanCell& wall = fan.cells[2];
    CHECK(left.cone.rays == std::vector<IntVec>{IV({0, 1}), IV({1, 1})});
    CHECK(right.cone.rays == std::vector<IntVec>{IV({1, 0}), IV({1, 1})});
    CHECK(wall.cone.rays == std::vector<IntVec>{IV({1, 1})});
    CHECK(wall.cone.dim == 1);

    CHECK(semigroup_equals(left.semigroup,
                           AffineSemigroup(2, {Exponent({1, 0}), Exponent({1, 1}),
                                               Exponent({0, 3})})));
    CHECK(semigroup_equals(right.semigroup,
                           AffineSemigroup(2, {Exponent({0, 1}), Exponent({1, 1}),
                                               Exponent({3, 0})})));
    // The wall shares the left side's semigroup (E_S is a union of cells).
    CHECK(semigroup_equals(wall.semigroup, left.semigroup));

    // Completion on the right adjoins x^3 first: check via the reduced basis.
    bool has_x3 = false;
    for (const Polynomial& g : right.basis.elements)
        if (g == P("x^3", 2)) has_x3 = true;
    CHECK(has_x3);

    // Mutual non-inclusion of the two distinct semigroups.
    bool left_not_in_right = false, right_not_in_left = false;
    for (const Exponent& g : left.semigroup.generators())
        if (!member(g, right.semigroup)) left_not_in_right = true;
    for (const Exponent& g : right.semigroup.generators())
        if (!member(g, left.semigroup)) right_not_in_left = true;
    CHECK(left_not_in_right);
    CHECK(right_not_in_left);

    CHECK(left.multihomogeneous);
    CHECK(right.multihomogeneous);
    CHECK(!wall.multihomogeneous);
}

TEST_CASE("cell labels are consistent under resampling") {
    auto A = algebra(2, {"x + y", "x*y", "y^3"});
    auto fan = traverse(A, TieBreakOrder{}, Rational(40));
    for (const FanCell& cell : fan.cells)
        for (int trial = 0; trial < 25; ++trial) {
            WeightVector w = normalized(random_interior(cell.cone));
            CHECK(cell.cone.contains_strictly(w));
            auto basis = reduced_at(A, w, Rational(40));
            CHECK(basis.elements == cell.basis.elements);
            CHECK(semigroup_equals(basis.exponent_semigroup(), cell.semigroup));
        }
}

TEST_CASE("random weights land in exactly one cell") {
    auto A = algebra(2, {"x + y", "x*y", "y^3"});
    auto fan = traverse(A, TieBreakOrder{}, Rational(40));
    for (int trial = 0; trial < 200; ++trial) {
        WeightVector w = random_unit_weight(2);
        const FanCell* cell = locate(fan, w);
        REQUIRE(cell != nullptr);
        auto basis = reduced_at(A, w, Rational(40));
        CHECK(basis.elements == cell->basis.elements);
    }
}

TEST_CASE("multihomogeneous iff full-dimensional, across fans") {
    for (auto& fan : {traverse(algebra(2, {"x + y", "x*y", "y^3"}), TieBreakOrder{}, Rational(40)),
                      traverse(algebra(2, {"x^2", "y^3", "x*y"}), TieBreakOrder{}, Rational(24)),
                      traverse(algebra(2, {"x + y", "x*y"}), TieBreakOrder{}, Rational(24))}) {
        for (const FanCell& cell : fan.cells) {
            CHECK(is_multihomogeneous(cell) == (cell.cone.dim == 2));
            CHECK(cell.multihomogeneous == is_multihomogeneous(cell));
            // Full-dimensional cells carry no equality constraints.
            if (cell.cone.dim == 2) CHECK(cell.cone.equalities.empty());
        }
    }
}

TEST_CASE("universal basis") {
    auto single = traverse(algebra(2, {"x^2", "y^3", "x*y"}), TieBreakOrder{}, Rational(24));
    auto uni = universal_basis(single);
    CHECK(uni == std::vector<Polynomial>{P("x*y", 2), P("x^2", 2), P("y^3", 2)});

    auto A = algebra(2, {"x + y", "x*y", "y^3"});
    auto fan = traverse(A, TieBreakOrder{}, Rational(40));
    auto universal = universal_basis(fan);
    // A canonical basis for every sampled weight: its leading exponents generate
    // each cell's semigroup.
    for (int trial = 0; trial < 50; ++trial) {
        WeightVector w = random_unit_weight(2);
        WeightedOrder ord(w, TieBreakOrder{});
        std::vector<Exponent> exps;
        for (const Polynomial& g : universal) exps.push_back(g.leading_exponent(ord));
        AffineSemigroup from_universal(2, exps);
        auto basis = reduced_at(A, w, Rational(40));
        CHECK(semigroup_equals(from_universal, basis.exponent_semigroup()));
    }

    auto capped = traverse(algebra(2, {"x + y", "x*y", "x*y^2"}), TieBreakOrder{}, Rational(12));
    CHECK(!capped.complete_flag);
    CHECK_THROWS_AS(universal_basis(capped), refusal_error);
}

TEST_CASE("convexity: same-semigroup cells agree on convex combinations") {
    auto A = algebra(2, {"x + y", "x*y", "y^3"});
    auto fan = traverse(A, TieBreakOrder{}, Rational(40));
    for (const FanCell& a : fan.cells)
        for (const FanCell& b : fan.cells) {
            if (!semigroup_equals(a.semigroup, b.semigroup)) continue;
            for (int trial = 0; trial < 20; ++trial) {
                Rational lambda(testutil::rand_int(1, 9), 10);
                std::vector<Rational> coords;
                for (int i = 0; i < 2; ++i)
                    coords.push_back(lambda * a.cone.interior_point[i] +
                                     (1 - lambda) * b.cone.interior_point[i]);
                WeightVector w(std::move(coords));
                auto basis = reduced_at(A, w, Rational(40));
                CHECK(semigroup_equals(basis.exponent_semigroup(), a.semigroup));
            }
        }
}

TEST_CASE("single-polynomial fans") {
    auto mono = single_poly_fan(P("3*x^2*y", 2));
    REQUIRE(mono.size() == 1);
    CHECK(mono[0].first.dim == 2);
    CHECK(mono[0].second == P("3*x^2*y", 2));

    auto pair = single_poly_fan(P("x + y", 2));
    REQUIRE(pair.size() == 3);
    CHECK(pair[0].second == P("x", 2));       // b1 < b2 sector (rays sorted)
    CHECK(pair[1].second == P("y", 2));       // b1 > b2 sector
    CHECK(pair[2].second == P("x + y", 2));   // the wall
    CHECK(pair[2].first.dim == 1);

    auto dominated = single_poly_fan(P("x + x^2", 1));
    REQUIRE(dominated.size() == 1);
    CHECK(dominated[0].second == P("x", 1));

    CHECK_THROWS_AS(single_poly_fan(Polynomial::zero(2)), std::invalid_argument);
}

TEST_CASE("single-polynomial fan matches recomputed initial forms") {
    for (int trial = 0; trial < 40; ++trial) {
        int n = testutil::rand_int(1, 2);
        Polynomial f = testutil::random_polynomial(n, 4, 5, 9);
        auto cells = single_poly_fan(f);
        std::set<std::string> distinct;
        for (const auto& [cone, form] : cells) {
            CHECK(form == f.initial_form(cone.interior_point));
            distinct.insert(to_string(form));
        }
        CHECK(distinct.size() == cells.size());
        // Coverage: random weights find their form among the cells.
        for (int probe = 0; probe < 20; ++probe) {
            WeightVector w = testutil::random_weight(n, 7);
            Polynomial in = f.initial_form(w);
            bool found = false;
            for (const auto& [cone, form] : cells)
                if (cone.contains(w) && form == in) found = true;
            CHECK(found);
        }
    }
}

TEST_CASE("three variables: the fan of x+y+z has all seven cells") {
    auto cells = single_poly_fan(P("x + y + z", 3));
    REQUIRE(cells.size() == 7);
    int full = 0, walls = 0, rays = 0;
    for (const auto& [cone, form] : cells) {
        if (cone.dim == 3) {
            ++full;
            CHECK(form.is_monomial());
        }
        if (cone.dim == 2) {
            ++walls;
            CHECK(form.term_count() == 2);
        }
        if (cone.dim == 1) {
            ++rays;
            CHECK(form == P("x + y + z", 3));
        }
    }
    CHECK(full == 3);
    CHECK(walls == 3);
    CHECK(rays == 1);
}

TEST_CASE("three variables: traverse matches the single-polynomial picture") {
    auto A = algebra(3, {"x + y + z"});
    auto fan = traverse(A, TieBreakOrder{}, Rational(10));
    CHECK(fan.complete_flag);
    CHECK(fan.cells.size() == 7);
    for (const FanCell& cell : fan.cells)
        CHECK(is_multihomogeneous(cell) == (cell.cone.dim == 3));

    // Coverage with random rational weights.
    for (int trial = 0; trial < 100; ++trial) {
        WeightVector w = random_unit_weight(3);
        const FanCell* cell = locate(fan, w);
        REQUIRE(cell != nullptr);
        CHECK(cell->basis.elements.front().initial_form(w) ==
              cell->initial_forms.front()
                  .initial_form(w));  // same slice regardless of representative
    }
}

TEST_CASE("dimension above three is rejected loudly") {
    CHECK_THROWS_AS(traverse(algebra(4, {"x1 + x2*x3*x4"}), TieBreakOrder{}, Rational(10)),
                    std::invalid_argument);
    CHECK_THROWS_AS(single_poly_fan(P("x1 + x2 + x3 + x4", 4)), std::invalid_argument);
}
