#include "cxm/ops.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>
#include <functional>

namespace cxm {

namespace {

std::int64_t bpos(const Overlay::BCoord& b, const std::array<std::int64_t, 3>& sizes) {
    std::int64_t off = 0;
    for (int s = 0; s < b.side; ++s) off += sizes[s];
    return off + b.idx;
}

// Crossing of a directed chord (A_in -> A_out) with a directed chord
// (D_in -> D_out) inside one triangle.
struct ChordCross {
    Overlay::BCoord a_in, a_out, d_in, d_out;
    std::int64_t total;

    // position of x in the cyclic order measured from a_in
    std::int64_t from_a(const Overlay::BCoord& x, const std::array<std::int64_t, 3>& sz) const {
        std::int64_t pa = bpos(a_in, sz), px = bpos(x, sz);
        std::int64_t d = px - pa;
        if (d < 0) d += total;
        return d;
    }
    // the D endpoint lying on the ccw arc (a_in .. a_out)
    bool d_in_first(const std::array<std::int64_t, 3>& sz) const {
        return from_a(d_in, sz) < from_a(a_out, sz);
    }
    // Key for ordering crossings along the A chord from a_in: the position
    // of the D endpoint on the near arc.
    std::int64_t order_key(const std::array<std::int64_t, 3>& sz) const {
        const Overlay::BCoord& x = d_in_first(sz) ? d_in : d_out;
        return from_a(x, sz);
    }
    // After passing the crossing (heading to a_out), is the A strand on the
    // left of the directed D chord?  Left = the side holding the ccw arc
    // from d_out back to d_in.
    bool a_exits_left(const std::array<std::int64_t, 3>& sz) const {
        std::int64_t po = from_a(a_out, sz);
        std::int64_t pdi = from_a(d_in, sz), pdo = from_a(d_out, sz);
        // measure from d_out: the ccw arc (d_out .. d_in) is "left"
        std::int64_t rel_out = po - pdo, rel_di = pdi - pdo;
        std::int64_t t = total;
        auto norm = [&](std::int64_t v) { return ((v % t) + t) % t; };
        return norm(rel_out) < norm(rel_di) && norm(rel_out) > 0;
    }
};

std::array<std::int64_t, 3> tri_sizes(const Overlay& ov, int t) {
    const Triangulation& T = ov.tri();
    return {ov.edge_size(T.edge_at(t, 0)), ov.edge_size(T.edge_at(t, 1)),
            ov.edge_size(T.edge_at(t, 2))};
}

}  // namespace

// ---------------------------------------------------------------------------
// Dehn twists by splicing
// ---------------------------------------------------------------------------

namespace {

// One crossing event along the curve being twisted.
struct SpliceEvent {
    int c_arc;              // arc of c carrying the crossing
    std::int64_t key;       // order along that arc
    int d_arc;              // arc of d at the crossing
    bool left;              // c exits to the left of d's direction
};

TracedComponent twist_component(const Triangulation& T, const TracedComponent& gamma,
                                const TracedComponent& delta, std::int64_t n) {
    Overlay ov(T, {&gamma, &delta});
    std::vector<std::vector<SpliceEvent>> per_arc(gamma.arcs.size());
    for (const auto& x : ov.crossings()) {
        int ca = x.comp_a == 0 ? x.arc_a : x.arc_b;
        int da = x.comp_a == 0 ? x.arc_b : x.arc_a;
        auto sz = tri_sizes(ov, x.tri);
        ChordCross cc{ov.bcoord(0, ca, true), ov.bcoord(0, ca, false), ov.bcoord(1, da, true),
                      ov.bcoord(1, da, false), sz[0] + sz[1] + sz[2] + 0};
        // boundary coordinates also include corners? no: only strand points;
        // cyclic positions among points are enough for relative order.
        per_arc[ca].push_back({ca, cc.order_key(sz), da, cc.a_exits_left(sz)});
    }
    if (ov.crossings().empty()) return gamma;

    for (auto& v : per_arc)
        std::sort(v.begin(), v.end(),
                  [](const SpliceEvent& a, const SpliceEvent& b) { return a.key < b.key; });

    std::int64_t m = n < 0 ? -n : n;
    int Ld = (int)delta.arcs.size();

    RawWord word;
    for (int k = 0; k < (int)gamma.arcs.size(); ++k) {
        const TriArc& arc = gamma.arcs[k];
        int cur_in = arc.in_pos;
        for (const SpliceEvent& ev : per_arc[k]) {
            const TriArc& da = delta.arcs[ev.d_arc];
            // Direction along delta: the twist drags every strand the same
            // way around the annulus; with the crossing transverse
            // orientation this means the turn direction depends on which
            // side c exits.  Calibrated so that positive n matches
            // T_d(c) = c + n det(c,d) d in Farey coordinates.
            bool forward = (n > 0) == ev.left;
            if (forward) {
                word.arcs.push_back({arc.tri, cur_in, da.out_pos});
                for (std::int64_t wind = 0; wind < m; ++wind) {
                    for (int j = 1; j < Ld; ++j) {
                        const TriArc& x = delta.arcs[(ev.d_arc + j) % Ld];
                        word.arcs.push_back(x);
                    }
                    if (wind + 1 < m) word.arcs.push_back({da.tri, da.in_pos, da.out_pos});
                }
                cur_in = da.in_pos;
            } else {
                word.arcs.push_back({arc.tri, cur_in, da.in_pos});
                for (std::int64_t wind = 0; wind < m; ++wind) {
                    for (int j = 1; j < Ld; ++j) {
                        const TriArc& x = delta.arcs[(ev.d_arc - j + Ld) % Ld];
                        word.arcs.push_back({x.tri, x.out_pos, x.in_pos});
                    }
                    if (wind + 1 < m) word.arcs.push_back({da.tri, da.out_pos, da.in_pos});
                }
                cur_in = da.out_pos;
            }
        }
        word.arcs.push_back({arc.tri, cur_in, arc.out_pos});
    }

    auto reduced = reduce(T, word);
    if (!reduced) throw invalid_argument("dehn_twist: twisted curve reduced to nothing");
    return *reduced;
}

}  // namespace

Multicurve dehn_twist(const Triangulation& T, const Multicurve& c, const Multicurve& d,
                      std::int64_t n) {
    if (n == 0) return c;
    Weights total(T.num_edges, 0);
    for (const auto& gamma : c.components()) {
        TracedComponent cur = gamma;
        for (const auto& delta : d.components()) {
            if (cur.w == delta.w) continue;  // disjoint, twist acts trivially
            cur = twist_component(T, cur, delta, n);
        }
        for (int e = 0; e < T.num_edges; ++e) total[e] += cur.w[e];
    }
    return Multicurve(T, total);
}

// ---------------------------------------------------------------------------
// Regions of disjoint multicurve systems
// ---------------------------------------------------------------------------

namespace {

struct UF {
    std::vector<int> p;
    explicit UF(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

Regions::Regions(const Triangulation& T, std::vector<const TracedComponent*> walls,
                 std::vector<const TracedComponent*> ghosts) {
    std::vector<const TracedComponent*> all = walls;
    for (auto* g : ghosts) all.push_back(g);
    int nw = (int)walls.size();
    Overlay ov(T, all);

    // Wall-wall crossings must not exist.
    for (const auto& x : ov.crossings())
        if (x.comp_a < nw && x.comp_b < nw)
            throw invalid_argument("Regions: walls are not disjoint");

    // Per-triangle items in ccw order: corner k, then side-k points.
    // Cells are found by a parenthesis scan over wall chords.
    struct ArcCells {
        int left = -1, right = -1;
    };
    std::vector<std::vector<ArcCells>> arc_cells(all.size());
    for (size_t i = 0; i < all.size(); ++i) arc_cells[i].resize(all[i]->arcs.size());
    corner_region_.assign(T.tris.size(), {-1, -1, -1});

    int next_cell = 0;
    // cell id at each gap; gaps indexed by (tri, item index); we only keep
    // what we need: per side, the cells of its w+1 boundary gaps.
    std::vector<std::array<std::vector<int>, 3>> side_gap_cells(T.tris.size());

    for (int t = 0; t < (int)T.tris.size(); ++t) {
        // Build item list: (kind, data). kind 0 = corner k; kind 1 = point.
        struct Item {
            int kind;
            int corner;
            Overlay::Point pt;
            int chord_arc = -1;  // arc index if this is a wall point (within comp)
        };
        std::vector<Item> items;
        for (int k = 0; k < 3; ++k) {
            // The corner preceding side k's points along the ccw boundary is
            // the one between side k-1 and side k, i.e. corner (k+2)%3.
            items.push_back({0, (k + 2) % 3, {}, -1});
            int e = T.edge_at(t, k);
            const auto& pts = ov.edge_points(e);
            std::int64_t w = (std::int64_t)pts.size();
            for (std::int64_t j = 0; j < w; ++j) {
                std::int64_t r = T.sign_at(t, k) > 0 ? j : w - 1 - j;
                Overlay::Point p = pts[r];
                // Does this point belong to a chord of this triangle on side k?
                // It does iff the adjacent arc (entry or exit) lies in t.
                items.push_back({1, -1, p, -1});
            }
        }
        // Identify wall chords in t: map from item positions.
        // For each wall comp arc in t, find its entry/exit item indices.
        auto item_of = [&](int comp, int cross) -> int {
            // locate the item carrying crossing `cross` of comp on the side
            // it meets in this triangle
            for (int i = 0; i < (int)items.size(); ++i)
                if (items[i].kind == 1 && items[i].pt.comp == comp && items[i].pt.k == cross)
                    return i;
            return -1;
        };
        // chord matching for wall points
        std::map<int, std::pair<int, int>> open_close;  // open item -> (close item, comp arc id)
        std::vector<int> chord_at_item(items.size(), -1);
        struct ChordRef {
            int comp, arc, in_item, out_item;
        };
        std::vector<ChordRef> chords;
        for (int ci = 0; ci < nw; ++ci) {
            const auto& arcs = all[ci]->arcs;
            for (int a = 0; a < (int)arcs.size(); ++a) {
                if (arcs[a].tri != t) continue;
                int n = (int)arcs.size();
                int under = item_of(ci, a);
                int out = item_of(ci, (a + 1) % n);
                if (under < 0 || out < 0) throw invalid_argument("Regions: chord item missing");
                chords.push_back({ci, a, under, out});
                chord_at_item[under] = (int)chords.size() - 1;
                chord_at_item[out] = (int)chords.size() - 1;
            }
        }
        (void)open_close;

        // Parenthesis scan.
        std::vector<int> gap_cell(items.size(), -1);
        std::vector<std::pair<int, int>> stack;  // (chord id, outer cell)
        int cur = next_cell++;
        int first_cell = cur;
        std::vector<int> chord_inner(chords.size(), -1), chord_outer(chords.size(), -1);
        std::vector<char> seen(chords.size(), 0);
        for (int i = 0; i < (int)items.size(); ++i) {
            const Item& it = items[i];
            if (it.kind == 1 && chord_at_item[i] >= 0) {
                int ch = chord_at_item[i];
                if (!seen[ch]) {
                    seen[ch] = 1;
                    chord_outer[ch] = cur;
                    stack.push_back({ch, cur});
                    cur = next_cell++;
                } else {
                    chord_inner[ch] = cur;
                    if (stack.empty() || stack.back().first != ch)
                        throw invalid_argument("Regions: chord nesting broken");
                    cur = stack.back().second;
                    stack.pop_back();
                }
            }
            if (it.kind == 0) corner_region_[t][it.corner] = cur;
            gap_cell[i] = cur;
        }
        if (!stack.empty()) throw invalid_argument("Regions: unbalanced chords");
        // The scan started in the middle of the boundary cycle; the cell
        // before item 0 equals the final cell.
        if (cur != first_cell) throw invalid_argument("Regions: cell scan did not close");

        // record side gap cells: side k has w+1 gaps: from the corner item
        // of k through its points.
        {
            int idx = 0;
            for (int k = 0; k < 3; ++k) {
                int e = T.edge_at(t, k);
                std::int64_t w = ov.edge_size(e);
                auto& v = side_gap_cells[t][k];
                v.resize(w + 1);
                // gap after corner item = gap 0
                v[0] = gap_cell[idx];  // corner item index = idx
                for (std::int64_t j = 1; j <= w; ++j) v[j] = gap_cell[idx + j];
                idx += 1 + (int)w;
            }
        }

        // chord side cells -> left/right of the directed arc
        for (size_t chi = 0; chi < chords.size(); ++chi) {
            const ChordRef& ch = chords[chi];
            bool open_is_in = false;
            // which endpoint came first in the scan: the one whose item
            // index is smaller
            open_is_in = ch.in_item < ch.out_item;
            int inner = chord_inner[chi], outer = chord_outer[chi];
            // left of in->out = cell of ccw arc (out .. in) = outer if the
            // scan opened at in (interval (in..out) is inner)
            int left = open_is_in ? outer : inner;
            int right = open_is_in ? inner : outer;
            arc_cells[ch.comp][ch.arc] = {left, right};
        }

        // ghost arcs: cell of the gap at the entry item
        for (int ci = nw; ci < (int)all.size(); ++ci) {
            const auto& arcs = all[ci]->arcs;
            for (int a = 0; a < (int)arcs.size(); ++a) {
                if (arcs[a].tri != t) continue;
                int it = item_of(ci, a);
                if (it < 0) throw invalid_argument("Regions: ghost item missing");
                arc_cells[ci][a] = {gap_cell[it], gap_cell[it]};
            }
        }
    }

    if (getenv("CXM_REGIONS_DEBUG")) {
        for (int t = 0; t < (int)T.tris.size(); ++t) {
            fprintf(stderr, "tri %d gaps:", t);
            for (int k = 0; k < 3; ++k) {
                fprintf(stderr, " side%d[", k);
                for (int c : side_gap_cells[t][k]) fprintf(stderr, "%d ", c);
                fprintf(stderr, "]");
            }
            fprintf(stderr, " corners %d %d %d\n", corner_region_[t][0], corner_region_[t][1],
                    corner_region_[t][2]);
        }
    }

    // Glue cells across edges.
    UF uf(next_cell);
    std::vector<std::pair<int, int>> glued_segments;
    for (int e = 0; e < T.num_edges; ++e) {
        auto [tp, pp] = T.side_of[e][0];
        auto [tm, pm] = T.side_of[e][1];
        std::int64_t w = ov.edge_size(e);
        const auto& gp = side_gap_cells[tp][pp];
        const auto& gm = side_gap_cells[tm][pm];
        for (std::int64_t s = 0; s <= w; ++s) {
            // + side: gap k corresponds to segment k; - side: segment w-k.
            uf.unite(gp[s], gm[w - s]);
            glued_segments.push_back({gp[s], gm[w - s]});
        }
    }

    // Compact region ids.
    std::map<int, int> rid;
    auto region_id = [&](int cell) {
        int root = uf.find(cell);
        auto it = rid.find(root);
        if (it != rid.end()) return it->second;
        int id = (int)rid.size();
        rid[root] = id;
        return id;
    };

    // Collect infos.
    for (int t = 0; t < (int)T.tris.size(); ++t)
        for (int k = 0; k < 3; ++k) corner_region_[t][k] = region_id(corner_region_[t][k]);

    wall_side_region_.assign(nw, {-1, -1});
    for (int ci = 0; ci < nw; ++ci) {
        int left = -1, right = -1;
        for (int a = 0; a < (int)all[ci]->arcs.size(); ++a) {
            int l = region_id(arc_cells[ci][a].left);
            int r = region_id(arc_cells[ci][a].right);
            if (left == -1) {
                left = l;
                right = r;
            }
            if (l != left || r != right)
                throw invalid_argument("Regions: inconsistent wall sides");
        }
        wall_side_region_[ci] = {right, left};
    }
    ghost_region_.assign(ghosts.size(), -1);
    for (int gi = 0; gi < (int)ghosts.size(); ++gi) {
        int ci = nw + gi;
        int reg = -1;
        for (int a = 0; a < (int)all[ci]->arcs.size(); ++a) {
            int r = region_id(arc_cells[ci][a].left);
            if (reg == -1) reg = r;
            if (r != reg) throw invalid_argument("Regions: ghost crosses walls");
        }
        ghost_region_[gi] = reg;
    }

    infos_.resize(rid.size());
    // Euler characteristic per region: cells minus glued edge segments.
    {
        std::vector<int> chi(rid.size(), 0);
        for (int c = 0; c < next_cell; ++c) chi[region_id(c)] += 1;
        for (auto& [x, y] : glued_segments) chi[region_id(x)] -= 1;
        // Ghost strand points subdivide interior edges; count them as
        // interior vertices so they do not perturb chi.
        for (int e = 0; e < T.num_edges; ++e) {
            auto [tp, pp] = T.side_of[e][0];
            const auto& pts = ov.edge_points(e);
            const auto& gaps = side_gap_cells[tp][pp];
            for (std::int64_t r = 0; r < (std::int64_t)pts.size(); ++r) {
                if (pts[r].comp < nw) continue;
                std::int64_t ccw = r;  // + side
                chi[region_id(gaps[ccw + 1])] += 1;
            }
        }
        for (size_t r = 0; r < infos_.size(); ++r) infos_[r].chi = chi[r];
    }
    for (int t = 0; t < (int)T.tris.size(); ++t)
        for (int k = 0; k < 3; ++k) {
            int r = corner_region_[t][k];
            int v = T.corner_vertex[t][k];
            auto& ps = infos_[r].punctures;
            if (std::find(ps.begin(), ps.end(), v) == ps.end()) ps.push_back(v);
        }
    for (int ci = 0; ci < nw; ++ci) {
        infos_[wall_side_region_[ci][0]].sides.push_back({ci, false});
        infos_[wall_side_region_[ci][1]].sides.push_back({ci, true});
    }
    for (auto& info : infos_) {
        std::sort(info.punctures.begin(), info.punctures.end());
        std::sort(info.sides.begin(), info.sides.end());
    }

    // Euler characteristic bookkeeping: cutting along curves preserves chi,
    // and each region's genus must be a non-negative integer.
    int chi_total = 0;
    for (auto& info : infos_) {
        chi_total += info.chi;
        int denom = 2 - info.chi - (int)info.punctures.size() - (int)info.sides.size();
        if (denom < 0 || denom % 2 != 0)
            throw invalid_argument("Regions: inconsistent region Euler characteristic");
        info.genus = denom / 2;
    }
    if (chi_total != T.surface.euler())
        throw invalid_argument("Regions: total Euler characteristic mismatch");
}

int Regions::region_of_side(int wall_comp, bool left) const {
    return wall_side_region_[wall_comp][left ? 1 : 0];
}
int Regions::region_of_ghost(int gi) const { return ghost_region_[gi]; }
int Regions::region_of_corner(int t, int k) const { return corner_region_[t][k]; }

// ---------------------------------------------------------------------------
// Curve enumeration
// ---------------------------------------------------------------------------

std::vector<Multicurve> enumerate_curves(const Triangulation& T, const Weights& cap) {
    // DFS over weight vectors; whenever all three edges of a triangle are
    // set, enforce parity and the triangle inequalities.
    int E = T.num_edges;
    std::vector<int> order;
    {
        std::vector<char> assigned(E, 0);
        std::vector<char> tri_done(T.tris.size(), 0);
        while ((int)order.size() < E) {
            int best = -1, best_gain = -1;
            for (int e = 0; e < E; ++e) {
                if (assigned[e]) continue;
                int gain = 0;
                for (int t = 0; t < (int)T.tris.size(); ++t) {
                    if (tri_done[t]) continue;
                    int missing = 0;
                    for (int k = 0; k < 3; ++k)
                        if (!assigned[T.edge_at(t, k)] && T.edge_at(t, k) != e) ++missing;
                    if (missing == 0) ++gain;
                }
                if (gain > best_gain) {
                    best_gain = gain;
                    best = e;
                }
            }
            assigned[best] = 1;
            order.push_back(best);
            for (int t = 0; t < (int)T.tris.size(); ++t) {
                bool done = true;
                for (int k = 0; k < 3; ++k)
                    if (!assigned[T.edge_at(t, k)]) done = false;
                if (done) tri_done[t] = 1;
            }
        }
    }
    // triangles completed at each position
    std::vector<std::vector<int>> completes(E);
    {
        std::vector<int> pos_of(E, 0);
        for (int i = 0; i < E; ++i) pos_of[order[i]] = i;
        for (int t = 0; t < (int)T.tris.size(); ++t) {
            int last = 0;
            for (int k = 0; k < 3; ++k) last = std::max(last, pos_of[T.edge_at(t, k)]);
            completes[last].push_back(t);
        }
    }

    std::vector<Multicurve> out;
    Weights w(E, 0);
    std::vector<char> set(E, 0);

    auto tri_ok = [&](int t) {
        std::int64_t a = w[T.edge_at(t, 0)], b = w[T.edge_at(t, 1)], c = w[T.edge_at(t, 2)];
        if ((a + b + c) % 2 != 0) return false;
        return a <= b + c && b <= a + c && c <= a + b;
    };

    std::function<void(int)> dfs = [&](int i) {
        if (i == E) {
            bool zero = true;
            for (auto x : w)
                if (x) zero = false;
            if (zero) return;
            Multicurve m(T, w);
            if (!m.is_single_curve()) return;
            if (m.components()[0].peripheral(T)) return;
            out.push_back(std::move(m));
            return;
        }
        int e = order[i];
        for (std::int64_t v = 0; v <= cap[e]; ++v) {
            w[e] = v;
            bool ok = true;
            for (int t : completes[i])
                if (!tri_ok(t)) ok = false;
            if (ok) dfs(i + 1);
        }
        w[e] = 0;
    };
    dfs(0);
    std::sort(out.begin(), out.end(),
              [](const Multicurve& a, const Multicurve& b) { return a.weights() < b.weights(); });
    return out;
}

// ---------------------------------------------------------------------------
// Fills
// ---------------------------------------------------------------------------

FillResult fill_boundary(const Triangulation& T, const std::vector<const Multicurve*>& parts) {
    Weights cap(T.num_edges, 0);
    for (auto* p : parts)
        for (int e = 0; e < T.num_edges; ++e) cap[e] += 2 * p->weights()[e];

    std::vector<Multicurve> candidates = enumerate_curves(T, cap);
    std::vector<const Multicurve*> D;
    std::set<Weights> part_comp_weights;
    for (auto* p : parts)
        for (const auto& comp : p->components()) part_comp_weights.insert(comp.w);
    std::vector<Multicurve> kept;
    for (auto& g : candidates) {
        if (part_comp_weights.count(g.weights())) continue;
        bool disjoint = true;
        for (auto* p : parts)
            if (intersection_number(T, g, *p) != 0) disjoint = false;
        if (disjoint) kept.push_back(std::move(g));
    }
    for (auto& g : kept) D.push_back(&g);

    // Greedily cut along candidates that are essential in a region meeting
    // the union.
    std::vector<const Multicurve*> walls_mc;
    std::set<Weights> wall_weights;

    auto build = [&](std::vector<const TracedComponent*>* ghost_list,
                     std::vector<int>* ghost_comp_of) {
        std::vector<const TracedComponent*> wcomps, gcomps;
        for (auto* m : walls_mc)
            for (const auto& c : m->components()) wcomps.push_back(&c);
        int gi = 0;
        for (auto* p : parts)
            for (const auto& c : p->components()) {
                gcomps.push_back(&c);
                if (ghost_comp_of) ghost_comp_of->push_back(gi);
                ++gi;
            }
        if (ghost_list) *ghost_list = gcomps;
        return Regions(T, wcomps, gcomps);
    };

    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<const TracedComponent*> gl;
        Regions R = build(&gl, nullptr);
        // regions meeting the union
        std::set<int> hot;
        for (int gi = 0; gi < (int)gl.size(); ++gi) hot.insert(R.region_of_ghost(gi));

        for (auto* g : D) {
            if (wall_weights.count(g->weights())) continue;
            // g must be disjoint from all walls and located in a hot region
            bool ok = true;
            for (auto* wmc : walls_mc)
                if (intersection_number(T, *g, *wmc) != 0) ok = false;
            if (!ok) continue;
            // locate g
            std::vector<const TracedComponent*> wcomps;
            for (auto* m : walls_mc)
                for (const auto& c : m->components()) wcomps.push_back(&c);
            Regions R2(T, wcomps, {&g->components()[0]});
            int reg = R2.region_of_ghost(0);
            // same wall list, so region numbering of R2 matches R only up to
            // relabeling; recompute hot regions in R2.
            std::set<int> hot2;
            {
                std::vector<const TracedComponent*> gg = {&g->components()[0]};
                for (auto* p : parts)
                    for (const auto& c : p->components()) gg.push_back(&c);
                Regions R3(T, wcomps, gg);
                reg = R3.region_of_ghost(0);
                for (int gi = 1; gi < (int)gg.size(); ++gi) hot2.insert(R3.region_of_ghost(gi));
            }
            if (!hot2.count(reg)) continue;
            walls_mc.push_back(g);
            wall_weights.insert(g->weights());
            changed = true;
            break;
        }
        (void)hot;
    }

    // Final region structure; boundary = wall curves adjacent to hot regions.
    FillResult res;
    std::vector<const TracedComponent*> wcomps, gcomps;
    std::vector<const Multicurve*> comp_owner;
    for (auto* m : walls_mc)
        for (const auto& c : m->components()) {
            wcomps.push_back(&c);
            comp_owner.push_back(m);
        }
    for (auto* p : parts)
        for (const auto& c : p->components()) gcomps.push_back(&c);
    Regions R(T, wcomps, gcomps);
    std::set<int> hot;
    for (int gi = 0; gi < (int)gcomps.size(); ++gi) hot.insert(R.region_of_ghost(gi));
    std::set<Weights> emitted;
    for (int ci = 0; ci < (int)wcomps.size(); ++ci) {
        bool adjacent = hot.count(R.region_of_side(ci, false)) || hot.count(R.region_of_side(ci, true));
        if (!adjacent) continue;
        if (emitted.insert(wcomps[ci]->w).second) res.boundary.push_back(Multicurve(T, wcomps[ci]->w));
    }
    res.fills_surface = res.boundary.empty() && walls_mc.empty();
    return res;
}

// ---------------------------------------------------------------------------
// Subsurface projection by arc surgery
// ---------------------------------------------------------------------------

namespace {

// A crossing of the projected curve with a wall strand.
struct PEvent {
    int c_arc;
    std::int64_t key_on_c;
    int wall;      // wall component index
    int wall_arc;  // arc of the wall at the crossing
    std::int64_t key_on_w;
    bool left_after;  // after the crossing, c sits on the wall's left
};

// Arcs of the wall cycle strictly between arc a and arc b, walking in
// direction dir, emitted in traversal orientation.
void emit_wall_path(std::vector<TriArc>& out, const TracedComponent& w, int a, int b, int dir) {
    int L = (int)w.arcs.size();
    if (dir > 0) {
        for (int j = (a + 1) % L; j != b; j = (j + 1) % L) out.push_back(w.arcs[j]);
    } else {
        for (int j = (a - 1 + L) % L; j != b; j = (j - 1 + L) % L) {
            const TriArc& x = w.arcs[j];
            out.push_back({x.tri, x.out_pos, x.in_pos});
        }
    }
}

}  // namespace

std::vector<Multicurve> project_to_piece(const Triangulation& T, const Multicurve& walls,
                                         int piece_id, const Multicurve& c) {
    std::vector<const TracedComponent*> wcomps;
    for (const auto& w : walls.components()) wcomps.push_back(&w);
    std::set<Weights> wall_weights;
    for (const auto& w : walls.components()) wall_weights.insert(w.w);

    std::vector<Multicurve> out;
    std::set<Weights> emitted;
    auto emit = [&](const TracedComponent& comp) {
        if (comp.peripheral(T)) return;
        if (wall_weights.count(comp.w)) return;
        Multicurve m(T, comp.w);
        if (intersection_number(T, m, walls) != 0)
            throw invalid_argument("project_to_piece: surgered curve meets walls");
        if (emitted.insert(m.weights()).second) out.push_back(std::move(m));
    };
    auto emit_word = [&](const RawWord& word) {
        auto red = reduce(T, word);
        if (red) emit(*red);
    };

    for (const auto& gamma : c.components()) {
        if (wall_weights.count(gamma.w)) continue;  // isotopic to a wall
        std::vector<const TracedComponent*> comps = wcomps;
        comps.push_back(&gamma);
        int gi = (int)comps.size() - 1;
        Overlay ov(T, comps);

        std::vector<PEvent> events;
        for (const auto& x : ov.crossings()) {
            int wc, wa, ca;
            if (x.comp_a == gi) {
                wc = x.comp_b;
                wa = x.arc_b;
                ca = x.arc_a;
            } else {
                wc = x.comp_a;
                wa = x.arc_a;
                ca = x.arc_b;
            }
            auto sz = tri_sizes(ov, x.tri);
            std::int64_t total = sz[0] + sz[1] + sz[2];
            ChordCross on_c{ov.bcoord(gi, ca, true), ov.bcoord(gi, ca, false),
                            ov.bcoord(wc, wa, true), ov.bcoord(wc, wa, false), total};
            ChordCross on_w{ov.bcoord(wc, wa, true), ov.bcoord(wc, wa, false),
                            ov.bcoord(gi, ca, true), ov.bcoord(gi, ca, false), total};
            events.push_back(
                {ca, on_c.order_key(sz), wc, wa, on_w.order_key(sz), on_c.a_exits_left(sz)});
        }

        if (events.empty()) {
            Regions R(T, wcomps, {&gamma});
            if (R.region_of_ghost(0) == piece_id) emit(gamma);
            continue;
        }

        std::sort(events.begin(), events.end(), [](const PEvent& a, const PEvent& b) {
            if (a.c_arc != b.c_arc) return a.c_arc < b.c_arc;
            return a.key_on_c < b.key_on_c;
        });

        Regions R(T, wcomps);
        int n = (int)events.size();
        int Lc = (int)gamma.arcs.size();
        for (int i = 0; i < n; ++i) {
            const PEvent& ev = events[i];
            const PEvent& ev2 = events[(i + 1) % n];
            int region = R.region_of_side(ev.wall, ev.left_after);
            if (R.region_of_side(ev2.wall, !ev2.left_after) != region)
                throw invalid_argument("project_to_piece: inconsistent region walk");
            if (region != piece_id) continue;

            const TracedComponent& W1 = *wcomps[ev.wall];
            const TracedComponent& W2 = *wcomps[ev2.wall];

            std::vector<TriArc> alpha;
            alpha.push_back(gamma.arcs[ev.c_arc]);
            bool same_arc_ahead = (ev2.c_arc == ev.c_arc) && (ev2.key_on_c > ev.key_on_c) &&
                                  (i + 1 < n || n == 1);
            if (!(ev2.c_arc == ev.c_arc && ev2.key_on_c > ev.key_on_c)) {
                int j = ev.c_arc;
                do {
                    j = (j + 1) % Lc;
                    alpha.push_back(gamma.arcs[j]);
                } while (j != ev2.c_arc);
            }
            (void)same_arc_ahead;

            int m = (int)alpha.size();
            int t_i = alpha.front().tri, t_j = alpha.back().tri;
            const TriArc& wa1 = W1.arcs[ev.wall_arc];
            const TriArc& wa2 = W2.arcs[ev2.wall_arc];

            if (ev.wall != ev2.wall) {
                // Single band curve around alpha and both walls; loop
                // directions follow the sides of the walls facing the piece.
                int d1 = ev.left_after ? +1 : -1;
                int d2 = !ev2.left_after ? +1 : -1;
                int dep1 = d1 > 0 ? wa1.out_pos : wa1.in_pos;
                int ret1 = d1 > 0 ? wa1.in_pos : wa1.out_pos;
                int dep2 = d2 > 0 ? wa2.out_pos : wa2.in_pos;
                int ret2 = d2 > 0 ? wa2.in_pos : wa2.out_pos;
                RawWord word;
                if (m == 1) {
                    word.arcs.push_back({t_i, ret1, dep2});
                    emit_wall_path(word.arcs, W2, ev2.wall_arc, ev2.wall_arc, d2);
                    word.arcs.push_back({t_j, ret2, dep1});
                    emit_wall_path(word.arcs, W1, ev.wall_arc, ev.wall_arc, d1);
                } else {
                    word.arcs.push_back({t_i, ret1, alpha.front().out_pos});
                    for (int j = 1; j + 1 < m; ++j) word.arcs.push_back(alpha[j]);
                    word.arcs.push_back({t_j, alpha.back().in_pos, dep2});
                    emit_wall_path(word.arcs, W2, ev2.wall_arc, ev2.wall_arc, d2);
                    word.arcs.push_back({t_j, ret2, alpha.back().in_pos});
                    for (int j = m - 2; j >= 1; --j)
                        word.arcs.push_back({alpha[j].tri, alpha[j].out_pos, alpha[j].in_pos});
                    word.arcs.push_back({t_i, alpha.front().out_pos, dep1});
                    emit_wall_path(word.arcs, W1, ev.wall_arc, ev.wall_arc, d1);
                }
                emit_word(word);
            } else {
                // Both surgeries along the one wall.
                for (int dir : {+1, -1}) {
                    bool degenerate = (ev.wall_arc == ev2.wall_arc) &&
                                      (dir > 0 ? ev.key_on_w > ev2.key_on_w
                                               : ev.key_on_w < ev2.key_on_w);
                    RawWord word;
                    if (degenerate) {
                        if (m == 1) continue;  // closed curve inside one triangle: trivial
                        for (int j = 1; j + 1 < m; ++j) word.arcs.push_back(alpha[j]);
                        word.arcs.push_back({t_j, alpha.back().in_pos, alpha.front().out_pos});
                        emit_word(word);
                        continue;
                    }
                    int dep = dir > 0 ? wa2.out_pos : wa2.in_pos;
                    int ret = dir > 0 ? wa1.in_pos : wa1.out_pos;
                    if (m == 1) {
                        word.arcs.push_back({t_i, ret, dep});
                        emit_wall_path(word.arcs, W2, ev2.wall_arc, ev.wall_arc, dir);
                    } else {
                        word.arcs.push_back({t_i, ret, alpha.front().out_pos});
                        for (int j = 1; j + 1 < m; ++j) word.arcs.push_back(alpha[j]);
                        word.arcs.push_back({t_j, alpha.back().in_pos, dep});
                        emit_wall_path(word.arcs, W2, ev2.wall_arc, ev.wall_arc, dir);
                    }
                    emit_word(word);
                }
            }
        }
    }
    return out;
}

std::int64_t annular_twist_of(const Triangulation& T, const Multicurve& c,
                              const Multicurve& core, const Multicurve& ref) {
    if (intersection_number(T, c, core) == 0 || intersection_number(T, ref, core) == 0)
        throw invalid_argument("annular_twist_of: curve or reference misses the core");
    std::map<std::int64_t, std::int64_t> memo;
    auto f = [&](std::int64_t n) {
        auto it = memo.find(n);
        if (it != memo.end()) return it->second;
        std::int64_t v = intersection_number(T, dehn_twist(T, c, core, -n), ref);
        memo[n] = v;
        return v;
    };
    std::int64_t n = 0, cur = f(0);
    for (int guard = 0; guard < 1000000; ++guard) {
        if (f(n - 1) < cur) {
            --n;
            cur = f(n);
        } else if (f(n + 1) < cur) {
            ++n;
            cur = f(n);
        } else {
            break;
        }
    }
    while (f(n - 1) == cur) --n;  // smallest argmin on the plateau
    return n;
}

}  // namespace cxm
