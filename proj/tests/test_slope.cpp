#include <doctest.h>

#include <random>

#include "dehnkit/slope.hpp"
#include "oracles.hpp"

using namespace dehnkit;

TEST_CASE("slope validation and normal form") {
    CHECK_THROWS_AS(Slope(0, 0), InvalidSlopeError);
    CHECK_THROWS_AS(Slope(2, 4), InvalidSlopeError);
    CHECK(Slope(-1, -2) == Slope(1, 2));
    CHECK(Slope(-1, 0) == Slope(1, 0));
    CHECK(Slope(3, -2) == Slope(-3, 2));
    CHECK(Slope(1, 2).to_string() == "1/2");
    CHECK(Slope::parse("2/3") == Slope(2, 3));
    CHECK_THROWS_AS(Slope::parse("2:3"), ParseError);
    CHECK_THROWS_AS(Slope::parse("a/b"), ParseError);
    CHECK_THROWS_AS(Slope::parse("4/2"), InvalidSlopeError);
}

TEST_CASE("delta on the standard basis") {
    CHECK(delta(Slope(1, 0), Slope(0, 1)) == 1);
    CHECK(delta(Slope(1, 0), Slope(1, 0)) == 0);
    // frozen from the grid oracle below
    CHECK(delta(Slope(2, 3), Slope(1, 2)) == 1);
    CHECK(delta(Slope(1, 2), Slope(3, 1)) == 5);
    CHECK(oracles::grid_intersections(Slope(2, 3), Slope(1, 2)) == 1);
    CHECK(oracles::grid_intersections(Slope(1, 2), Slope(3, 1)) == 5);
}

TEST_CASE("delta agrees with transverse straight-line crossings") {
    for (long long p = -4; p <= 4; ++p)
        for (long long q = -4; q <= 4; ++q)
            for (long long r = -4; r <= 4; ++r)
                for (long long s = -4; s <= 4; ++s) {
                    if ((p == 0 && q == 0) || (r == 0 && s == 0)) continue;
                    if (std::gcd(std::abs(p), std::abs(q)) != 1) continue;
                    if (std::gcd(std::abs(r), std::abs(s)) != 1) continue;
                    Slope a(p, q), b(r, s);
                    INFO("slopes (", p, ",", q, ") (", r, ",", s, ")");
                    CHECK(delta(a, b) == oracles::grid_intersections(a, b));
                }
}

TEST_CASE("delta symmetry and unimodular invariance") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long long> coord(-9, 9);
    auto random_slope = [&] {
        for (;;) {
            long long p = coord(rng), q = coord(rng);
            if ((p || q) && std::gcd(std::abs(p), std::abs(q)) == 1) return Slope(p, q);
        }
    };
    // determinant +-1 matrices [[a,b],[c,d]]
    const long long mats[][4] = {{1, 0, 0, 1}, {0, 1, 1, 0},  {1, 1, 0, 1},
                                 {2, 1, 1, 1}, {1, -1, 0, 1}, {3, 2, 1, 1}};
    for (int i = 0; i < 300; ++i) {
        Slope a = random_slope(), b = random_slope();
        CHECK(delta(a, b) == delta(b, a));
        CHECK((delta(a, b) == 0) == (a == b));
        for (const auto& m : mats) {
            Slope a2 = change_basis(a, m[0], m[1], m[2], m[3]);
            Slope b2 = change_basis(b, m[0], m[1], m[2], m[3]);
            CHECK(delta(a2, b2) == delta(a, b));
        }
    }
    CHECK_THROWS_AS(change_basis(Slope(1, 0), 2, 0, 0, 2), PreconditionError);
}

TEST_CASE("multicurve normalization") {
    OrientedMulticurve c({{Slope(1, 0), 1, 1}, {Slope(1, 0), 2, 1}, {Slope(0, 1), 1, -1}});
    REQUIRE(c.terms().size() == 2);
    CHECK(c.terms()[0].slope == Slope(0, 1));
    CHECK(c.terms()[1].multiplicity == 3);
    CHECK(c.homology_class() == std::pair<long long, long long>(3, -1));
    CHECK_THROWS_AS(OrientedMulticurve({{Slope(1, 0), 0, 1}}), StructureError);
    CHECK_THROWS_AS(OrientedMulticurve({{Slope(1, 0), 1, 2}}), StructureError);
}

TEST_CASE("double curve sum: basic resolutions") {
    OrientedMulticurve m10({{Slope(1, 0), 1, 1}});
    OrientedMulticurve m01({{Slope(0, 1), 1, 1}});
    auto r = double_curve_sum_torus(m10, m01);
    REQUIRE(r.terms().size() == 1);
    CHECK(r.terms()[0].slope == Slope(1, 1));
    CHECK(r.terms()[0].multiplicity == 1);
    CHECK(r.terms()[0].orientation == 1);

    OrientedMulticurve m2x({{Slope(1, 0), 2, 1}});
    OrientedMulticurve m2y({{Slope(0, 1), 2, 1}});
    r = double_curve_sum_torus(m2x, m2y);
    REQUIRE(r.terms().size() == 1);
    CHECK(r.terms()[0].slope == Slope(1, 1));
    CHECK(r.terms()[0].multiplicity == 2);

    // parallel representatives: disjoint union, no crossings to resolve
    r = double_curve_sum_torus(m10, m10);
    REQUIRE(r.terms().size() == 1);
    CHECK(r.terms()[0].slope == Slope(1, 0));
    CHECK(r.terms()[0].multiplicity == 2);
}

TEST_CASE("double curve sum: mixed-orientation parallel input is kept, zero class rejected") {
    OrientedMulticurve plus({{Slope(1, 2), 2, 1}});
    OrientedMulticurve minus({{Slope(1, 2), 3, -1}});
    auto r = double_curve_sum_torus(plus, minus);
    REQUIRE(r.terms().size() == 2);
    CHECK(r.total_components() == 5);

    // intersecting inputs with vanishing total class resolve to trivial curves
    OrientedMulticurve diag({{Slope(1, 1), 1, 1}});
    OrientedMulticurve anti({{Slope(1, 0), 1, -1}, {Slope(0, 1), 1, -1}});
    CHECK_THROWS_AS(double_curve_sum_torus(diag, anti), PreconditionError);
}

TEST_CASE("double curve sum matches the grid resolution oracle") {
    // frozen single examples first
    {
        OrientedMulticurve a({{Slope(1, 0), 1, 1}});
        OrientedMulticurve b({{Slope(0, 1), 1, 1}});
        auto fam = oracles::grid_resolution(a, b);
        CHECK(fam.components == 1);
        REQUIRE(fam.classes.size() == 1);
        CHECK(fam.classes[0] == std::pair<long long, long long>(1, 1));
    }
    std::vector<Slope> slopes;
    for (long long p = -3; p <= 3; ++p)
        for (long long q = 0; q <= 3; ++q) {
            if (p == 0 && q == 0) continue;
            if (q == 0 && p != 1) continue;
            if (std::gcd(std::abs(p), std::abs(q)) != 1) continue;
            slopes.push_back(Slope(p, q));
        }
    for (const auto& s1 : slopes)
        for (const auto& s2 : slopes)
            for (long long m1 : {1, 2})
                for (long long m2 : {1, 3}) {
                    OrientedMulticurve a({{s1, m1, 1}});
                    OrientedMulticurve b({{s2, m2, 1}});
                    auto fam = oracles::grid_resolution(a, b);
                    auto r = double_curve_sum_torus(a, b);
                    INFO(s1.to_string(), " ", s2.to_string(), " mults ", m1, " ", m2);
                    CHECK(r.total_components() == fam.components);
                    long long xr = 0, yr = 0;
                    for (auto [x, y] : fam.classes) {
                        xr += x;
                        yr += y;
                    }
                    CHECK(r.homology_class() == std::pair(xr, yr));
                }
}
