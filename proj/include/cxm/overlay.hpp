#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <vector>

#include "cxm/normal.hpp"

namespace cxm {

using Big = boost::multiprecision::cpp_int;

// 2x2 integer Mobius matrix.
struct Mat {
    Big a, b, c, d;
    Mat operator*(const Mat& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Mat adjugate() const { return {d, -b, -c, a}; }
    Big det() const { return a * d - b * c; }
    Big trace() const { return a + d; }
};

// Minimal-position realization of pairwise non-isotopic traced components.
//
// The triangulation is realized as the shear-0 (symmetric) complete
// hyperbolic structure; each component becomes its geodesic representative.
// Strand crossings along an edge are ordered by their exact height in the
// frame where the edge is the geodesic (0,infinity), tail at 0: a strand
// with holonomy [[A,B],[C,D]] in that frame crosses at height^2 = B/C,
// a rational number.  Geodesics intersect minimally, so crossings inside
// triangles (linked chord pairs) count geometric intersection numbers.
class Overlay {
  public:
    struct Point {
        int comp;
        int k;  // crossing index along the component
        bool operator==(const Point&) const = default;
    };

    Overlay(const Triangulation& T, std::vector<const TracedComponent*> comps);

    const Triangulation& tri() const { return *T_; }
    const std::vector<const TracedComponent*>& comps() const { return comps_; }

    const std::vector<Point>& edge_points(int e) const { return edge_points_[e]; }
    std::int64_t rank(int comp, int k) const { return rank_[comp][k]; }
    std::int64_t edge_size(int e) const { return (std::int64_t)edge_points_[e].size(); }
    int edge_of(int comp, int k) const;

    // Crossings between components, located in triangles.  arc_a / arc_b are
    // the arc indices whose chords cross.
    struct Crossing {
        int tri;
        int comp_a, arc_a;
        int comp_b, arc_b;
    };
    const std::vector<Crossing>& crossings() const;
    std::int64_t crossings_between(int ci, int cj) const;

    // Boundary coordinate of an arc endpoint around its triangle.
    struct BCoord {
        int side;
        std::int64_t idx;
        auto operator<=>(const BCoord&) const = default;
    };
    BCoord bcoord(int comp, int k, bool entry) const;

  private:
    struct StrandGeo {
        Mat m;       // holonomy in the edge frame of its crossing
        Big h2_num;  // height^2 = h2_num / h2_den, both positive
        Big h2_den;
    };
    void compute_geometry();
    const StrandGeo& geo(int comp, int k) const { return geo_[comp][k]; }
    bool before(const Point& p, const Point& q) const;

    const Triangulation* T_;
    std::vector<const TracedComponent*> comps_;
    std::vector<std::vector<StrandGeo>> geo_;
    std::vector<std::vector<Point>> edge_points_;
    std::vector<std::vector<std::int64_t>> rank_;
    mutable std::vector<Crossing> crossings_;
    mutable bool crossings_done_ = false;
};

// Geometric intersection number of canonical multicurves.
std::int64_t intersection_number(const Triangulation& T, const Multicurve& a,
                                 const Multicurve& b);

}  // namespace cxm
