#include "cxm/tri.hpp"

#include <numeric>

namespace cxm {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

void Triangulation::finish() {
    side_of.assign(num_edges, {std::pair<int, int>{-1, -1}, {-1, -1}});
    for (int t = 0; t < (int)tris.size(); ++t) {
        for (int pos = 0; pos < 3; ++pos) {
            const Side& s = tris[t][pos];
            auto& slot = side_of[s.edge][s.sign > 0 ? 0 : 1];
            if (slot.first != -1) throw invalid_argument("triangulation: duplicate edge side");
            slot = {t, pos};
        }
    }
    for (int e = 0; e < num_edges; ++e)
        if (side_of[e][0].first == -1 || side_of[e][1].first == -1)
            throw invalid_argument("triangulation: edge missing a side");

    // Identify vertices: corner (t,k) touches an end of the edges of side k
    // and side k+1.  Glue the (edge,end) slots that meet at each corner and
    // across each edge (an edge's end is one point).
    auto slot_id = [&](int e, bool tail) { return 2 * e + (tail ? 0 : 1); };
    UnionFind uf(2 * num_edges);
    for (int t = 0; t < (int)tris.size(); ++t) {
        for (int k = 0; k < 3; ++k) {
            int posA = k, posB = (k + 1) % 3;  // corner k = ccw end of side k = ccw start of side k+1
            int eA = edge_at(t, posA), eB = edge_at(t, posB);
            bool tailA = corner_is_tail(t, posA, k);
            bool tailB = corner_is_tail(t, posB, k);
            uf.unite(slot_id(eA, tailA), slot_id(eB, tailB));
        }
    }
    std::vector<int> vertex_of_slot(2 * num_edges, -1);
    num_vertices = 0;
    for (int s = 0; s < 2 * num_edges; ++s)
        if (uf.find(s) == s) vertex_of_slot[s] = num_vertices++;
    corner_vertex.assign(tris.size(), {-1, -1, -1});
    for (int t = 0; t < (int)tris.size(); ++t) {
        for (int k = 0; k < 3; ++k) {
            int e = edge_at(t, k);
            bool tail = corner_is_tail(t, k, k);
            corner_vertex[t][k] = vertex_of_slot[uf.find(slot_id(e, tail))];
        }
    }
    validate();
}

int Triangulation::edge_end_vertex(int e, bool tail) const {
    auto [t, pos] = side_of[e][0];
    for (int k : {corner_before(pos), corner_after(pos)})
        if (corner_is_tail(t, pos, k) == tail) return corner_vertex[t][k];
    throw invalid_argument("edge_end_vertex");
}

std::vector<std::int64_t> Triangulation::vertex_link_weights(int v) const {
    std::vector<std::int64_t> w(num_edges, 0);
    for (int e = 0; e < num_edges; ++e) {
        if (edge_end_vertex(e, true) == v) w[e] += 1;
        if (edge_end_vertex(e, false) == v) w[e] += 1;
    }
    return w;
}

void Triangulation::validate() const {
    int F = (int)tris.size(), E = num_edges, V = num_vertices;
    if (V != surface.punctures)
        throw invalid_argument("triangulation: vertex count != punctures");
    // Euler characteristic of the closed-up complex.
    if (V - E + F != 2 - 2 * surface.genus)
        throw invalid_argument("triangulation: Euler characteristic mismatch");
    if (3 * F != 2 * E) throw invalid_argument("triangulation: side count mismatch");
}

namespace {

Triangulation make_s11() {
    // Square torus, one puncture at the corner; edges x=0 (bottom=top),
    // y=1 (left=right), z=2 (diagonal (0,0)->(1,1)).
    Triangulation T;
    T.surface = surface_11();
    T.num_edges = 3;
    T.tris = {
        {Triangulation::Side{0, +1}, {1, +1}, {2, -1}},
        {Triangulation::Side{2, +1}, {0, -1}, {1, -1}},
    };
    T.finish();
    return T;
}

Triangulation make_s04() {
    // Pillowcase: front and back unit squares glued along their sides,
    // punctures at the four corners.  Edges: b=0, r=1, t=2, l=3, front
    // diagonal dF=4, back diagonal dB=5 (both (0,0)->(1,1)).
    Triangulation T;
    T.surface = surface_04();
    T.num_edges = 6;
    T.tris = {
        {Triangulation::Side{0, +1}, {1, +1}, {4, -1}},  // front lower
        {Triangulation::Side{4, +1}, {2, -1}, {3, -1}},  // front upper
        {Triangulation::Side{5, +1}, {1, -1}, {0, -1}},  // back lower
        {Triangulation::Side{3, +1}, {2, +1}, {5, -1}},  // back upper
    };
    T.finish();
    return T;
}

Triangulation make_s05() {
    // Doubled pentagon with punctures p1..p5 at the corners.  Sides
    // s_i = (p_i, p_{i+1}): s1=0..s5=4; front diagonals d13=5, d14=6;
    // back diagonals e13=7, e14=8.
    Triangulation T;
    T.surface = surface_05();
    T.num_edges = 9;
    T.tris = {
        {Triangulation::Side{0, +1}, {1, +1}, {5, -1}},  // front (p1,p2,p3)
        {Triangulation::Side{5, +1}, {2, +1}, {6, -1}},  // front (p1,p3,p4)
        {Triangulation::Side{6, +1}, {3, +1}, {4, +1}},  // front (p1,p4,p5)
        {Triangulation::Side{7, +1}, {1, -1}, {0, -1}},  // back (p1,p3,p2)
        {Triangulation::Side{8, +1}, {2, -1}, {7, -1}},  // back (p1,p4,p3)
        {Triangulation::Side{4, -1}, {3, -1}, {8, -1}},  // back (p1,p5,p4)
    };
    T.finish();
    return T;
}

}  // namespace

const Triangulation& triangulation_for(const Surface& s) {
    static const Triangulation t11 = make_s11();
    static const Triangulation t04 = make_s04();
    static const Triangulation t05 = make_s05();
    if (s == surface_11()) return t11;
    if (s == surface_04()) return t04;
    if (s == surface_05()) return t05;
    throw invalid_argument("no triangulation kernel for " + s.name());
}

}  // namespace cxm
