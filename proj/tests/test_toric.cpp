#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "canonfan/toric.hpp"
#include "canonfan/polynomial_io.hpp"
#include "test_util.hpp"

#include <map>

using namespace canonfan;

namespace {

Polynomial P(const std::string& text, int n) { return parse_polynomial(text, n); }
Exponent E(std::vector<int> c) { return Exponent(std::move(c)); }

}  // namespace

TEST_CASE("the running example's kernel is a single binomial") {
    auto rels = toric_kernel({E({1, 0}), E({1, 1}), E({1, 2})});
    REQUIRE(rels.size() == 1);
    CHECK(rels[0].plus == std::vector<int>{1, 0, 1});
    CHECK(rels[0].minus == std::vector<int>{0, 2, 0});
    CHECK(rels[0].to_string() == "X1*X3 - X2^2");
}

TEST_CASE("independent monomials have no relations") {
    CHECK(toric_kernel({E({1, 0}), E({0, 1})}).empty());
    CHECK(toric_kernel({E({2, 3})}).empty());
}

TEST_CASE("numerical-semigroup kernel in one variable") {
    auto rels = toric_kernel({E({4}), E({6})});
    REQUIRE(rels.size() == 1);
    CHECK(rels[0].to_string() == "X1^3 - X2^2");
}

TEST_CASE("repeated monomials produce the obvious relation") {
    auto rels = toric_kernel({E({1, 1}), E({1, 1})});
    REQUIRE(rels.size() == 1);
    CHECK(rels[0].to_string() == "X1 - X2");
}

TEST_CASE("relation evaluation") {
    BinomialRelation r13{{1, 0, 1}, {0, 2, 0}};
    CHECK(evaluate_relation(r13, {P("x + y", 2), P("x*y", 2), P("x*y^2", 2)}) ==
          P("x*y^3", 2));

    BinomialRelation curve{{3, 0}, {0, 2}};
    CHECK(evaluate_relation(curve, {P("t^4", 1), P("t^6 + t^7", 1)}) ==
          P("-2*t^13 - t^14", 1));

    BinomialRelation square{{3, 2, 0}, {0, 0, 6}};
    CHECK(evaluate_relation(square, {P("x^2", 2), P("y^3", 2), P("x*y", 2)}).is_zero());

    CHECK_THROWS_AS(evaluate_relation(r13, {P("x", 2)}), std::invalid_argument);
}

TEST_CASE("returned relations are sound") {
    for (int trial = 0; trial < 40; ++trial) {
        int n = testutil::rand_int(1, 3);
        int s = testutil::rand_int(2, 4);
        std::vector<Exponent> thetas;
        for (int i = 0; i < s; ++i) thetas.push_back(testutil::random_exponent(n, 5));
        for (const BinomialRelation& rel : toric_kernel(thetas)) {
            Exponent lhs = Exponent::zero(n), rhs = Exponent::zero(n);
            for (int i = 0; i < s; ++i) {
                lhs = lhs + thetas[static_cast<std::size_t>(i)].scaled(rel.plus[static_cast<std::size_t>(i)]);
                rhs = rhs + thetas[static_cast<std::size_t>(i)].scaled(rel.minus[static_cast<std::size_t>(i)]);
            }
            CHECK(lhs == rhs);
            CHECK(rel.plus != rel.minus);
        }
    }
}

TEST_CASE("desk-scale completeness: enumerated relations rewrite to zero") {
    for (int trial = 0; trial < 10; ++trial) {
        int n = testutil::rand_int(1, 2);
        int s = testutil::rand_int(2, 3);
        std::vector<Exponent> thetas;
        for (int i = 0; i < s; ++i) {
            Exponent t = testutil::random_exponent(n, 4);
            thetas.push_back(t);
        }
        auto rels = toric_kernel(thetas);

        // Bucket all monomials with multiplicities <= 6 by their image.
        std::map<Exponent, std::vector<std::vector<int>>> buckets;
        std::vector<int> mult(static_cast<std::size_t>(s), 0);
        for (;;) {
            Exponent image = Exponent::zero(n);
            for (int i = 0; i < s; ++i)
                image = image + thetas[static_cast<std::size_t>(i)].scaled(mult[static_cast<std::size_t>(i)]);
            buckets[image].push_back(mult);
            std::size_t i = 0;
            while (i < mult.size() && mult[i] == 6) mult[i++] = 0;
            if (i == mult.size()) break;
            ++mult[i];
        }
        for (const auto& [image, monos] : buckets)
            for (std::size_t i = 0; i < monos.size(); ++i)
                for (std::size_t j = i + 1; j < monos.size(); ++j)
                    CHECK(relation_normal_form(monos[i], rels) ==
                          relation_normal_form(monos[j], rels));
    }
}

TEST_CASE("kernel relations strictly advance the leading data on monic generators") {
    // The two products share their leading term, which cancels; what survives sits
    // strictly later in the division's processing order: larger valuation, or the
    // same valuation with a strictly smaller tie-break exponent.
    WeightVector a({1, 2});
    WeightedOrder ord(a, TieBreakOrder{});
    for (int trial = 0; trial < 50; ++trial) {
        int s = testutil::rand_int(2, 3);
        std::vector<Polynomial> gens;
        std::vector<Exponent> thetas;
        for (int i = 0; i < s; ++i) {
            Polynomial g = testutil::random_polynomial(2, 3, 3, 4);
            g = g.scaled(Rational(1) / g.leading_term(ord).coefficient);
            gens.push_back(g);
            thetas.push_back(g.leading_exponent(ord));
        }
        for (const BinomialRelation& rel : toric_kernel(thetas)) {
            Polynomial value = evaluate_relation(rel, gens);
            if (value.is_zero()) continue;
            Exponent shared_exp = Exponent::zero(2);
            for (int i = 0; i < s; ++i)
                shared_exp = shared_exp +
                             thetas[static_cast<std::size_t>(i)].scaled(rel.plus[static_cast<std::size_t>(i)]);
            Rational shared = a.weight_of(shared_exp);
            Rational nu = *value.valuation(a);
            CHECK(nu >= shared);
            if (nu == shared)
                CHECK(ord.tie().compare(value.leading_exponent(ord), shared_exp) < 0);
        }
    }
}
