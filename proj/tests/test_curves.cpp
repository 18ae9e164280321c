#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "cxm/curves.hpp"

using namespace cxm;

TEST_CASE("whole-surface chart roundtrip on S11 and S04") {
    for (Surface s : {surface_11(), surface_04()}) {
        const Ctx& ctx = Ctx::get(s);
        int ch = ctx.chart_of_whole();
        Rng rng(5);
        int done = 0;
        while (done < 15) {
            std::int64_t p = rng.range(-6, 6), q = rng.range(0, 6);
            if (std::gcd(p, q) != 1) continue;
            if (q == 0 && p != 1) continue;
            Slope sl(p, q);
            Multicurve c = ctx.curve_of_slope(ch, sl);
            CHECK(ctx.slope_of_curve(ch, c) == sl);
            ++done;
        }
    }
}

TEST_CASE("piece chart on S05 and projection slopes") {
    const Ctx& ctx = Ctx::get(surface_05());
    const Triangulation& T = *ctx.T;
    Multicurve g12(T, {0, 1, 0, 0, 1, 1, 1, 1, 1});
    std::vector<const TracedComponent*> wc{&g12.components()[0]};
    Regions R(T, wc);
    int piece = -1;
    for (int r = 0; r < R.num_regions(); ++r)
        if (R.info(r).xi() == 4) piece = r;
    REQUIRE(piece >= 0);
    int ch = ctx.chart_of_piece(g12, piece);

    // roundtrip slopes through ambient curves in the piece
    Rng rng(11);
    int done = 0;
    while (done < 12) {
        std::int64_t p = rng.range(-5, 5), q = rng.range(0, 5);
        if (std::gcd(p, q) != 1) continue;
        if (q == 0 && p != 1) continue;
        Slope sl(p, q);
        Multicurve c = ctx.curve_of_slope(ch, sl);
        CHECK(ctx.slope_of_curve(ch, c) == sl);
        CHECK(intersection_number(T, c, g12) == 0);
        ++done;
    }

    // intersection numbers in the chart follow the Farey rule i = 2|det|
    Slope a(1, 2), b(3, 1);
    Multicurve ca = ctx.curve_of_slope(ch, a), cb = ctx.curve_of_slope(ch, b);
    Big det = Slope::det(a, b);
    CHECK(intersection_number(T, ca, cb) == 2 * (std::int64_t)boost::multiprecision::abs(det));
}

TEST_CASE("bfs geodesic on S05") {
    const Ctx& ctx = Ctx::get(surface_05());
    const Triangulation& T = *ctx.T;
    Multicurve g12(T, {0, 1, 0, 0, 1, 1, 1, 1, 1});
    Multicurve g45(T, {0, 0, 1, 0, 1, 0, 1, 0, 1});
    Multicurve g23(T, {1, 0, 1, 0, 0, 1, 0, 1, 0});

    auto r0 = bfs_geodesic(ctx, g12, g12, 3);
    CHECK(r0.path.size() == 1);
    auto r1 = bfs_geodesic(ctx, g12, g45, 3);
    CHECK(r1.path.size() == 2);
    auto r2 = bfs_geodesic(ctx, g12, g23, 4);
    REQUIRE(r2.status == BfsResult::Found);
    CHECK(r2.path.size() == 3);  // distance 2 via g45
    // endpoints and adjacency
    for (size_t i = 0; i + 1 < r2.path.size(); ++i)
        CHECK(intersection_number(T, r2.path[i], r2.path[i + 1]) == 0);
}

TEST_CASE("tighten is idempotent and preserves endpoints") {
    const Ctx& ctx = Ctx::get(surface_05());
    const Triangulation& T = *ctx.T;
    Multicurve g12(T, {0, 1, 0, 0, 1, 1, 1, 1, 1});
    // a twisted curve at distance >= 2 from g12
    Multicurve far = dehn_twist(T, Multicurve(T, {1, 0, 1, 0, 0, 1, 0, 1, 0}), g12, 2);
    auto r = bfs_geodesic(ctx, g12, far, 4);
    REQUIRE(r.status == BfsResult::Found);
    if (r.path.size() >= 3) {
        auto t1 = tighten(ctx, r.path);
        auto t2 = tighten(ctx, t1);
        CHECK(t1 == t2);
        CHECK(t1.front() == r.path.front());
        CHECK(t1.back() == r.path.back());
        CHECK(t1.size() == r.path.size());
    }
}

TEST_CASE("annulus geodesics by twist difference") {
    CHECK(annulus_geodesic(0, 0).size() == 1);
    CHECK(annulus_geodesic(0, 3).size() == 4);
    CHECK(annulus_geodesic(-2, 2).size() == 5);
}

TEST_CASE("annular twist shift via ctx") {
    const Ctx& ctx = Ctx::get(surface_05());
    const Triangulation& T = *ctx.T;
    Multicurve v(T, {0, 1, 0, 0, 1, 1, 1, 1, 1});
    Multicurve c(T, {1, 0, 1, 0, 0, 1, 0, 1, 0});
    std::int64_t t0 = ctx.twist_around(v, c);
    Multicurve c2 = dehn_twist(T, c, v, 3);
    CHECK(ctx.twist_around(v, c2) == t0 + 3);
}
