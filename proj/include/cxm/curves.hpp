#pragma once

#include <map>
#include <memory>
#include <optional>

#include "cxm/ops.hpp"
#include "cxm/slope.hpp"

namespace cxm {

// Cached per-surface kernel context: the triangulation, standard curves, a
// canonical marking, and the chart table for Farey-coordinatized pieces.
class Ctx;

// Identification of the curve complex of a xi=4 surface or piece with the
// Farey graph.  The references are ambient curves with i(u0,uinf) =
// i(u0,u1) = i(uinf,u1) = delta (1 on S11, 2 on four-holed domains) and
// u1 = T_{u0}(uinf).
struct Chart {
    int id = -1;
    // Empty walls = the whole surface (xi=4 surfaces only).
    Multicurve walls;
    int region = -1;  // region id w.r.t. Regions(T, walls components)
    Multicurve u0, uinf, u1;
    std::int64_t delta = 2;  // intersection of the reference pair

    // Separation pattern bookkeeping for four-holed domains: for each
    // (p,q) mod 2 class, the set of holes on the u-side of the slope.
    // Holes are labeled 0..3 in a fixed order (punctures then wall sides).
    std::array<std::array<int, 2>, 3> split;  // index by parity class
};

// A vertex of some curve complex in the hierarchy: an ambient curve, or a
// slope in a chart.
struct CurveRef {
    std::optional<Multicurve> ambient;  // single essential curve
    int chart = -1;
    Slope slope;

    bool is_ambient() const { return ambient.has_value(); }
};

class Ctx {
  public:
    static const Ctx& get(const Surface& s);

    Surface surface;
    const Triangulation* T;
    int xi;

    // Standard pants curves / base data.
    std::vector<Multicurve> standard;  // curve family used for generation
    Multicurve standard_base;          // a maximal simplex
    Multicurve alt_base;               // a disjoint-from-nothing second base

    // Chart management (lazily built, canonical by construction order).
    int chart_of_whole() const;                       // xi=4 surfaces
    int chart_of_piece(const Multicurve& walls, int region) const;
    const Chart& chart(int id) const;

    // Conversions.
    Multicurve curve_of_slope(int chart, const Slope& s) const;  // may be huge
    Slope slope_of_curve(int chart, const Multicurve& c) const;
    bool slope_small(const Slope& s, std::int64_t cap = 1 << 20) const;

    // Canonical reference curve for the annular complex at v.
    const Multicurve& annular_ref(const Multicurve& v) const;

    // Canonical twist coordinate of an ambient curve c around vertex v.
    std::int64_t twist_around(const Multicurve& v, const Multicurve& c) const;

    // Candidate curves with pointwise weight cap (cached).
    const std::vector<Multicurve>& curve_pool(std::int64_t maxw) const;

  private:
    explicit Ctx(const Surface& s);
    mutable std::vector<Chart> charts_;
    mutable std::map<std::pair<Weights, int>, int> chart_index_;
    mutable std::map<Weights, Multicurve> ann_refs_;
    mutable std::map<std::int64_t, std::vector<Multicurve>> pools_;
};

// --- Spec-facing operations -----------------------------------------------

inline int complexity(const Surface& s) { return s.complexity(); }

std::int64_t intersection_number(const Surface& s, const Multicurve& a, const Multicurve& b);

// Farey geodesic between chart slopes (any xi=4 chart); endpoints included.
// Already tight: every simplex of a Farey geodesic is a single vertex.
std::vector<Slope> chart_geodesic(const Slope& a, const Slope& b);

// BFS geodesic in the curve complex of S05 between single curves, searching
// candidate curves whose weights are bounded by growing caps up to max_cap.
struct BfsResult {
    enum Status { Found, Exceeded, CapOverflow } status;
    std::vector<Multicurve> path;  // vertices, when found
};
BfsResult bfs_geodesic(const Ctx& ctx, const Multicurve& a, const Multicurve& b, int max_d,
                       std::int64_t max_cap = 64);

// Tighten an S05 vertex path: replace interior simplices by the boundary of
// the subsurface filled by their neighbors.  Idempotent.
std::vector<Multicurve> tighten(const Ctx& ctx, std::vector<Multicurve> seq);

// Annulus geodesic between twist coordinates: consecutive integers.
std::vector<std::int64_t> annulus_geodesic(std::int64_t a, std::int64_t b);

}  // namespace cxm
