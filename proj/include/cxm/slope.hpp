#pragma once

#include <optional>
#include <vector>

#include "cxm/overlay.hpp"

namespace cxm {

// A slope p/q in lowest terms, canonical sign: q >= 0, and p = 1 when q = 0.
// Vertices of the Farey graph; the curve complex of a xi=4 surface.
struct Slope {
    Big p{0}, q{1};

    Slope() = default;
    Slope(Big pp, Big qq);

    bool operator==(const Slope&) const = default;
    bool operator<(const Slope& o) const;  // by (q, p), the tie-break order

    static Big det(const Slope& a, const Slope& b) { return a.p * b.q - a.q * b.p; }
};

// Farey distance-1 test.
inline bool farey_adjacent(const Slope& a, const Slope& b) {
    Big d = Slope::det(a, b);
    return d == 1 || d == -1;
}

// Twist of slope c along slope d, right-handed positive:
// T_d^n(c) = c + n * det(c, d) * d.
Slope slope_twist(const Slope& c, const Slope& d, const Big& n);

// A geodesic in the Farey graph from a to b, computed by Stern-Brocot
// descent to collect the tessellation strip between the endpoints and then
// breadth-first search inside it.  Deterministic: ties broken by smaller
// denominator, then smaller numerator.
std::vector<Slope> farey_geodesic(const Slope& a, const Slope& b);

// Farey distance (length of the geodesic).
std::int64_t farey_distance(const Slope& a, const Slope& b);

// Brute-force BFS over all slopes with |p|,|q| below the given bound;
// test oracle for farey_geodesic.
std::optional<std::int64_t> farey_distance_bfs(const Slope& a, const Slope& b,
                                               std::int64_t denom_bound);

// Twist coordinate of slope s in the annular chart of core v with reference
// r: normalize v to infinity by an SL(2,Z) map, where the twist acts as a
// unit translation; the coordinate is floor(s) - floor(r) there.
Big annular_twist(const Slope& s, const Slope& core, const Slope& ref);

}  // namespace cxm
