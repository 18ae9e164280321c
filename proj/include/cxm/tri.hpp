#pragma once

#include <array>
#include <vector>

#include "cxm/basics.hpp"

namespace cxm {

// Ideal triangulation of a punctured surface.  Each triangle lists its three
// sides in ccw order as (edge, sign): sign +1 means the ccw traversal of the
// triangle boundary runs along the edge's global orientation, -1 against.
// On an oriented surface every edge appears exactly once with each sign.
//
// Corner k of a triangle sits between side k and side k+1 (the ccw end of
// side k).  Corner arcs of a normal curve cutting corner k join side k and
// side k+1.
struct Triangulation {
    struct Side {
        int edge = -1;
        int sign = 0;  // +1 or -1
    };

    Surface surface;
    int num_edges = 0;
    std::vector<std::array<Side, 3>> tris;

    // Derived tables, filled by finish().
    // side_of[e][0] = (tri,pos) with sign +1, side_of[e][1] with sign -1.
    std::vector<std::array<std::pair<int, int>, 2>> side_of;
    // vertex id at each corner (t,k); vertices enumerate the punctures.
    std::vector<std::array<int, 3>> corner_vertex;
    int num_vertices = 0;

    int edge_at(int t, int pos) const { return tris[t][pos].edge; }
    int sign_at(int t, int pos) const { return tris[t][pos].sign; }

    // The glued partner of side (t,pos): the side of the same edge carrying
    // the opposite sign.
    std::pair<int, int> glued(int t, int pos) const {
        const Side& s = tris[t][pos];
        return side_of[s.edge][s.sign > 0 ? 1 : 0];
    }

    // Corner indices of side pos: corner pos-1 at the ccw start, corner pos
    // at the ccw end.
    static int corner_before(int pos) { return (pos + 2) % 3; }
    static int corner_after(int pos) { return pos; }

    // Which end of the side's edge a corner sits at ("tail" = edge start).
    // Corner at ccw start of the side: tail if sign>0 else head; ccw end the
    // other way round.
    bool corner_is_tail(int t, int pos, int corner) const {
        bool at_ccw_start = (corner == corner_before(pos));
        return (sign_at(t, pos) > 0) == at_ccw_start;
    }

    // Vertex at the tail/head of an edge.
    int edge_end_vertex(int e, bool tail) const;

    // Normal coordinates of the link of a vertex: each edge is crossed once
    // per endpoint at that vertex.
    std::vector<std::int64_t> vertex_link_weights(int v) const;

    void finish();
    void validate() const;
};

const Triangulation& triangulation_for(const Surface& s);

}  // namespace cxm
