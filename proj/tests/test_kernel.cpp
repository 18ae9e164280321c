#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "cxm/basics.hpp"
#include "cxm/normal.hpp"
#include "cxm/overlay.hpp"
#include "cxm/tri.hpp"

using namespace cxm;

namespace {

// Normal coordinates of the slope-p/q curve on the square-torus model of
// S_{1,1}: (|p|, |q|, |p-q|) on edges (x, y, z).
Weights s11_slope(std::int64_t p, std::int64_t q) {
    return {std::abs(p), std::abs(q), std::abs(p - q)};
}

std::int64_t det2(std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s) {
    return p * s - q * r;
}

}  // namespace

TEST_CASE("triangulation tables are consistent") {
    for (Surface s : {surface_11(), surface_04(), surface_05()}) {
        const Triangulation& T = triangulation_for(s);
        CHECK(T.num_vertices == s.punctures);
    }
}

TEST_CASE("S11 slope curves trace to single essential components") {
    const Triangulation& T = triangulation_for(surface_11());
    std::int64_t slopes[][2] = {{0, 1}, {1, 0}, {1, 1}, {1, 2}, {2, 1}, {3, 5}, {-2, 5}, {7, 3}};
    for (auto [p, q] : slopes) {
        Multicurve c(T, s11_slope(p, q));
        CAPTURE(p);
        CAPTURE(q);
        REQUIRE(c.is_single_curve());
        CHECK(!c.components()[0].peripheral(T));
    }
}

TEST_CASE("S11 vertex link is peripheral") {
    const Triangulation& T = triangulation_for(surface_11());
    // The link of the puncture crosses each edge twice.
    Multicurve link(T, {2, 2, 2});
    REQUIRE(link.is_single_curve());
    CHECK(link.components()[0].peripheral(T));
}

TEST_CASE("S11 intersection numbers match the Farey determinant") {
    const Triangulation& T = triangulation_for(surface_11());
    Rng rng(20250809);
    int checked = 0;
    while (checked < 250) {
        std::int64_t p = rng.range(-12, 12), q = rng.range(0, 12);
        std::int64_t r = rng.range(-12, 12), s = rng.range(0, 12);
        if (std::gcd(p, q) != 1 || std::gcd(r, s) != 1) continue;
        Multicurve a(T, s11_slope(p, q));
        Multicurve b(T, s11_slope(r, s));
        CAPTURE(p);
        CAPTURE(q);
        CAPTURE(r);
        CAPTURE(s);
        CHECK(intersection_number(T, a, b) == std::abs(det2(p, q, r, s)));
        CHECK(intersection_number(T, b, a) == std::abs(det2(p, q, r, s)));
        ++checked;
    }
}

TEST_CASE("self-intersection of an isotopy class is zero") {
    const Triangulation& T = triangulation_for(surface_11());
    Multicurve a(T, s11_slope(2, 5));
    CHECK(intersection_number(T, a, a) == 0);
}

TEST_CASE("single-curve overlay has consecutive ranks") {
    const Triangulation& T = triangulation_for(surface_05());
    // gamma_34 together with gamma_12 (disjoint separating curves)
    Multicurve g12(T, {0, 1, 0, 0, 1, 1, 1, 1, 1});
    Multicurve g34(T, {0, 1, 0, 1, 0, 1, 1, 1, 1});
    REQUIRE(g12.is_single_curve());
    REQUIRE(g34.is_single_curve());
    Overlay ov(T, {&g12.components()[0], &g34.components()[0]});
    CHECK(ov.crossings_between(0, 1) == 0);
}

TEST_CASE("S05 standard curves intersect as expected") {
    const Triangulation& T = triangulation_for(surface_05());
    Multicurve g12(T, {0, 1, 0, 0, 1, 1, 1, 1, 1});
    Multicurve g23(T, {1, 0, 1, 0, 0, 1, 0, 1, 0});
    Multicurve g34(T, {0, 1, 0, 1, 0, 1, 1, 1, 1});
    Multicurve g45(T, {0, 0, 1, 0, 1, 0, 1, 0, 1});
    Multicurve g51(T, {1, 0, 0, 1, 0, 1, 1, 1, 1});
    for (const Multicurve* m : {&g12, &g23, &g34, &g45, &g51})
        REQUIRE(m->is_single_curve());

    CHECK(intersection_number(T, g12, g34) == 0);
    CHECK(intersection_number(T, g12, g45) == 0);
    CHECK(intersection_number(T, g23, g45) == 0);
    CHECK(intersection_number(T, g23, g51) == 0);
    CHECK(intersection_number(T, g34, g51) == 0);

    CHECK(intersection_number(T, g12, g23) == 2);
    CHECK(intersection_number(T, g23, g34) == 2);
    CHECK(intersection_number(T, g34, g45) == 2);
    CHECK(intersection_number(T, g45, g51) == 2);
    CHECK(intersection_number(T, g51, g12) == 2);
}

TEST_CASE("S04 horizontal and vertical circles meet twice") {
    const Triangulation& T = triangulation_for(surface_04());
    Multicurve u0(T, {0, 1, 0, 1, 1, 1});
    Multicurve uinf(T, {1, 0, 1, 0, 1, 1});
    REQUIRE(u0.is_single_curve());
    REQUIRE(uinf.is_single_curve());
    CHECK(intersection_number(T, u0, uinf) == 2);
}
