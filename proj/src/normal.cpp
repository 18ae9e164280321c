#include "cxm/normal.hpp"

#include <algorithm>
#include <cassert>
#include <list>

namespace cxm {

int TracedComponent::corner_cut(const Triangulation&, int k) const {
    const TriArc& a = arcs[k];
    // Corner joining sides in_pos and out_pos.
    if (a.out_pos == (a.in_pos + 1) % 3) return a.in_pos;
    assert(a.in_pos == (a.out_pos + 1) % 3);
    return a.out_pos;
}

bool TracedComponent::peripheral(const Triangulation& T, int* vertex) const {
    // A normal multicurve is determined by its weights, so a component is a
    // vertex link exactly when its weight vector is the link's.
    for (int v = 0; v < T.num_vertices; ++v) {
        if (w == T.vertex_link_weights(v)) {
            if (vertex) *vertex = v;
            return true;
        }
    }
    return false;
}

std::array<std::int64_t, 3> corner_counts(const Triangulation& T, const Weights& w, int tri) {
    std::array<std::int64_t, 3> ww{};
    for (int pos = 0; pos < 3; ++pos) ww[pos] = w[T.edge_at(tri, pos)];
    std::array<std::int64_t, 3> n{};
    for (int k = 0; k < 3; ++k) {
        std::int64_t v = ww[k] + ww[(k + 1) % 3] - ww[(k + 2) % 3];
        if (v < 0 || v % 2 != 0) throw invalid_argument("weights not realizable in triangle");
        n[k] = v / 2;
    }
    return n;
}

bool weights_valid(const Triangulation& T, const Weights& w) {
    if ((int)w.size() != T.num_edges) return false;
    for (auto x : w)
        if (x < 0) return false;
    for (int t = 0; t < (int)T.tris.size(); ++t) {
        std::array<std::int64_t, 3> ww{};
        for (int pos = 0; pos < 3; ++pos) ww[pos] = w[T.edge_at(t, pos)];
        for (int k = 0; k < 3; ++k) {
            std::int64_t v = ww[k] + ww[(k + 1) % 3] - ww[(k + 2) % 3];
            if (v < 0 || v % 2 != 0) return false;
        }
    }
    return true;
}

namespace {

// ccw index of edge rank r seen from side (t,pos).
std::int64_t ccw_of_rank(const Triangulation& T, const Weights& w, int t, int pos, std::int64_t r) {
    std::int64_t m = w[T.edge_at(t, pos)];
    return T.sign_at(t, pos) > 0 ? r : m - 1 - r;
}

std::int64_t rank_of_ccw(const Triangulation& T, const Weights& w, int t, int pos, std::int64_t c) {
    std::int64_t m = w[T.edge_at(t, pos)];
    return T.sign_at(t, pos) > 0 ? c : m - 1 - c;
}

}  // namespace

std::vector<TracedComponent> trace(const Triangulation& T, const Weights& w) {
    if (!weights_valid(T, w)) throw invalid_argument("invalid normal coordinates");
    std::vector<std::array<std::int64_t, 3>> corners(T.tris.size());
    for (int t = 0; t < (int)T.tris.size(); ++t) corners[t] = corner_counts(T, w, t);

    // Step through one triangle: entering side (t,pos) at ccw index c, find
    // the exit side and ccw index there.
    auto step = [&](int t, int pos, std::int64_t c) -> std::pair<int, std::int64_t> {
        std::int64_t n_before = corners[t][Triangulation::corner_before(pos)];
        if (c < n_before) {
            // corner pos-1, arc index j = c, other side is pos-1 (corner at
            // its ccw end, arc j at ccw index w-1-j).
            int pos2 = (pos + 2) % 3;
            std::int64_t m2 = w[T.edge_at(t, pos2)];
            return {pos2, m2 - 1 - c};
        }
        std::int64_t m = w[T.edge_at(t, pos)];
        std::int64_t j = m - 1 - c;  // corner pos, arc index j
        assert(j >= 0 && j < corners[t][Triangulation::corner_after(pos)]);
        int pos2 = (pos + 1) % 3;
        return {pos2, j};
    };

    std::vector<std::int64_t> offset(T.num_edges + 1, 0);
    for (int e = 0; e < T.num_edges; ++e) offset[e + 1] = offset[e] + w[e];
    std::vector<char> visited(offset[T.num_edges], 0);

    std::vector<TracedComponent> out;
    for (int e0 = 0; e0 < T.num_edges; ++e0) {
        for (std::int64_t r0 = 0; r0 < w[e0]; ++r0) {
            if (visited[offset[e0] + r0]) continue;
            TracedComponent comp;
            comp.w.assign(T.num_edges, 0);
            int e = e0;
            std::int64_t r = r0;
            auto [t, pos] = T.side_of[e0][1];  // start into the minus side
            std::int64_t c = ccw_of_rank(T, w, t, pos, r0);
            do {
                visited[offset[e] + r] = 1;
                comp.w[e] += 1;
                auto [pos2, c2] = step(t, pos, c);
                comp.arcs.push_back({t, pos, pos2});
                e = T.edge_at(t, pos2);
                r = rank_of_ccw(T, w, t, pos2, c2);
                std::tie(t, pos) = T.glued(t, pos2);
                c = ccw_of_rank(T, w, t, pos, r);
            } while (!(e == e0 && r == r0));
            out.push_back(std::move(comp));
        }
    }
    return out;
}

std::optional<TracedComponent> reduce(const Triangulation& T, const RawWord& word) {
    std::list<TriArc> arcs(word.arcs.begin(), word.arcs.end());

    auto next_it = [&](std::list<TriArc>::iterator it) {
        auto n = std::next(it);
        return n == arcs.end() ? arcs.begin() : n;
    };
    auto prev_it = [&](std::list<TriArc>::iterator it) {
        return it == arcs.begin() ? std::prev(arcs.end()) : std::prev(it);
    };

    bool changed = true;
    while (changed && !arcs.empty()) {
        changed = false;
        for (auto it = arcs.begin(); it != arcs.end();) {
            if (it->in_pos != it->out_pos) {
                ++it;
                continue;
            }
            if (arcs.size() == 1) {
                arcs.clear();
                break;
            }
            auto p = prev_it(it), n = next_it(it);
            if (p == n) {
                // Two-arc cycle with a same-side return: the partner arc
                // becomes a one-arc cycle crossing one edge; it bounds
                // nothing only in self-glued triangulations, which we do not
                // have, so the whole curve is trivial.
                arcs.clear();
                break;
            }
            // p exits through the glued partner of (it->tri, it->in_pos);
            // n enters through the same side.  Fuse p and n.
            assert(T.glued(it->tri, it->in_pos) == std::make_pair(p->tri, p->out_pos));
            assert(T.glued(it->tri, it->out_pos) == std::make_pair(n->tri, n->in_pos));
            p->out_pos = n->out_pos;
            arcs.erase(n);
            it = arcs.erase(it);
            changed = true;
        }
    }
    if (arcs.empty()) return std::nullopt;

    TracedComponent comp;
    comp.w.assign(T.num_edges, 0);
    comp.arcs.assign(arcs.begin(), arcs.end());
    for (size_t k = 0; k < comp.arcs.size(); ++k) {
        const TriArc& a = comp.arcs[k];
        const TriArc& b = comp.arcs[(k + 1) % comp.arcs.size()];
        int e = T.edge_at(a.tri, a.out_pos);
        if (T.glued(a.tri, a.out_pos) != std::make_pair(b.tri, b.in_pos))
            throw invalid_argument("reduce: disconnected raw word");
        comp.w[e] += 1;
    }
    return comp;
}

Multicurve::Multicurve(const Triangulation& T, Weights w) : w_(std::move(w)) {
    comps_ = trace(T, w_);
}

}  // namespace cxm
