#include "cxm/curves.hpp"

#include <algorithm>
#include <cassert>
#include <queue>

namespace cxm {

namespace {

Weights s11_slope_weights(const Slope& s) {
    using boost::multiprecision::abs;
    Big p = abs(s.p), q = abs(s.q), d = abs(s.p - s.q);
    return {(std::int64_t)p, (std::int64_t)q, (std::int64_t)d};
}

}  // namespace

Ctx::Ctx(const Surface& s) : surface(s), T(&triangulation_for(s)), xi(s.complexity()) {
    if (s == surface_11()) {
        standard = {Multicurve(*T, {0, 1, 1}), Multicurve(*T, {1, 0, 1}), Multicurve(*T, {1, 1, 0})};
        standard_base = standard[0];
        alt_base = standard[1];
    } else if (s == surface_04()) {
        standard = {Multicurve(*T, {0, 1, 0, 1, 1, 1}), Multicurve(*T, {1, 0, 1, 0, 1, 1})};
        standard_base = standard[0];
        alt_base = standard[1];
    } else if (s == surface_05()) {
        standard = {Multicurve(*T, {0, 1, 0, 0, 1, 1, 1, 1, 1}),
                    Multicurve(*T, {1, 0, 1, 0, 0, 1, 0, 1, 0}),
                    Multicurve(*T, {0, 1, 0, 1, 0, 1, 1, 1, 1}),
                    Multicurve(*T, {0, 0, 1, 0, 1, 0, 1, 0, 1}),
                    Multicurve(*T, {1, 0, 0, 1, 0, 1, 1, 1, 1})};
        // pants base {g12, g45}
        Weights b(T->num_edges, 0);
        for (int e = 0; e < T->num_edges; ++e)
            b[e] = standard[0].weights()[e] + standard[3].weights()[e];
        standard_base = Multicurve(*T, b);
        Weights b2(T->num_edges, 0);
        for (int e = 0; e < T->num_edges; ++e)
            b2[e] = standard[1].weights()[e] + standard[2].weights()[e];  // {g23, g34}
        alt_base = Multicurve(*T, b2);
    } else {
        throw invalid_argument("no curve kernel for " + s.name());
    }
}

const Ctx& Ctx::get(const Surface& s) {
    static std::map<Surface, std::unique_ptr<Ctx>> cache;
    auto it = cache.find(s);
    if (it == cache.end()) it = cache.emplace(s, std::unique_ptr<Ctx>(new Ctx(s))).first;
    return *it->second;
}

const std::vector<Multicurve>& Ctx::curve_pool(std::int64_t maxw) const {
    auto it = pools_.find(maxw);
    if (it == pools_.end()) {
        it = pools_.emplace(maxw, enumerate_curves(*T, Weights(T->num_edges, maxw))).first;
    }
    return it->second;
}

namespace {

// Deterministic choice: the weight-lexicographically least element.
template <typename Pred>
std::optional<Multicurve> least_curve(const std::vector<Multicurve>& pool, Pred&& pred) {
    for (const auto& c : pool)
        if (pred(c)) return c;
    return std::nullopt;
}

}  // namespace

int Ctx::chart_of_whole() const {
    if (xi != 4) throw invalid_argument("chart_of_whole: not a xi=4 surface");
    Weights none(T->num_edges, 0);
    auto key = std::make_pair(none, -1);
    auto it = chart_index_.find(key);
    if (it != chart_index_.end()) return it->second;

    Chart ch;
    ch.id = (int)charts_.size();
    ch.region = -1;
    std::int64_t delta = (surface == surface_11()) ? 1 : 2;
    ch.delta = delta;
    ch.u0 = standard[0];
    ch.uinf = standard[1];
    ch.u1 = dehn_twist(*T, ch.uinf, ch.u0, 1);
    if (::cxm::intersection_number(*T, ch.u0, ch.uinf) != delta ||
        ::cxm::intersection_number(*T, ch.u0, ch.u1) != delta ||
        ::cxm::intersection_number(*T, ch.uinf, ch.u1) != delta)
        throw invalid_argument("chart_of_whole: reference triple inconsistent");
    if (surface == surface_04()) {
        // Hole separation patterns: holes are the four punctures 0..3.
        auto split_of = [&](const Multicurve& u) {
            Regions R(*T, {&u.components()[0]});
            int left = R.region_of_side(0, true);
            const auto& ps = R.info(left).punctures;
            if (ps.size() != 2) throw invalid_argument("S04 split: unexpected piece");
            return std::array<int, 2>{ps[0], ps[1]};
        };
        // parity classes: (p,q) = (0,1) -> u0, (1,0) -> uinf, (1,1) -> u1
        ch.split[0] = split_of(ch.u0);
        ch.split[1] = split_of(ch.uinf);
        ch.split[2] = split_of(ch.u1);
    }
    charts_.push_back(ch);
    chart_index_[key] = ch.id;
    return ch.id;
}

int Ctx::chart_of_piece(const Multicurve& walls, int region) const {
    auto key = std::make_pair(walls.weights(), region);
    auto it = chart_index_.find(key);
    if (it != chart_index_.end()) return it->second;

    std::vector<const TracedComponent*> wc;
    for (const auto& c : walls.components()) wc.push_back(&c);
    Regions R(*T, wc);
    if (R.info(region).xi() != 4)
        throw invalid_argument("chart_of_piece: region is not four-holed");

    // Reference curves: weight-least essential curves inside the region.
    auto in_region = [&](const Multicurve& c) {
        if (!c.is_single_curve()) return false;
        if (::cxm::intersection_number(*T, c, walls) != 0) return false;
        for (const auto& w : walls.components())
            if (w.w == c.weights()) return false;
        Regions R2(*T, wc, {&c.components()[0]});
        return R2.region_of_ghost(0) == region;
    };
    std::optional<Multicurve> u0, uinf;
    for (std::int64_t cap = 4; cap <= 64 && !uinf; cap *= 2) {
        const auto& pool = curve_pool(cap);
        if (!u0) u0 = least_curve(pool, in_region);
        if (u0 && !uinf)
            uinf = least_curve(pool, [&](const Multicurve& c) {
                return in_region(c) && ::cxm::intersection_number(*T, c, *u0) == 2;
            });
    }
    if (!u0 || !uinf) throw invalid_argument("chart_of_piece: no reference curves found");

    Chart ch;
    ch.id = (int)charts_.size();
    ch.walls = walls;
    ch.region = region;
    ch.delta = 2;
    ch.u0 = *u0;
    ch.uinf = *uinf;
    ch.u1 = dehn_twist(*T, ch.uinf, ch.u0, 1);
    if (::cxm::intersection_number(*T, ch.u0, ch.u1) != 2 ||
        ::cxm::intersection_number(*T, ch.uinf, ch.u1) != 2)
        throw invalid_argument("chart_of_piece: reference triple inconsistent");

    // Hole labels: punctures of the region (ascending ids), then wall sides
    // (by Regions::Side order).  Compute the separation pattern of each
    // reference curve by cutting the region along it.
    const auto& info = R.info(region);
    std::vector<std::pair<int, int>> holes;  // (kind 0=puncture,1=side, id)
    for (int p : info.punctures) holes.push_back({0, p});
    for (size_t si = 0; si < info.sides.size(); ++si) holes.push_back({1, (int)si});
    if (holes.size() != 4) throw invalid_argument("chart_of_piece: not four holes");

    auto split_of = [&](const Multicurve& u) {
        std::vector<const TracedComponent*> wc2 = wc;
        wc2.push_back(&u.components()[0]);
        Regions R2(*T, wc2);
        int uidx = (int)wc.size();
        int side_region = R2.region_of_side(uidx, true);
        std::array<int, 2> out{};
        int n = 0;
        for (int hi = 0; hi < 4; ++hi) {
            auto [kind, id] = holes[hi];
            bool on_side;
            if (kind == 0) {
                // puncture: find any corner with that vertex inside the region
                on_side = false;
                for (int t = 0; t < (int)T->tris.size() && !on_side; ++t)
                    for (int k = 0; k < 3; ++k)
                        if (T->corner_vertex[t][k] == id &&
                            R2.region_of_corner(t, k) == side_region)
                            on_side = true;
            } else {
                auto side = info.sides[id];
                on_side = (R2.region_of_side(side.comp, side.left) == side_region);
            }
            if (on_side) {
                if (n >= 2) throw invalid_argument("chart split: more than two holes on a side");
                out[n++] = hi;
            }
        }
        if (n != 2) throw invalid_argument("chart split: expected two holes on the left");
        return out;
    };
    ch.split[0] = split_of(ch.u0);
    ch.split[1] = split_of(ch.uinf);
    ch.split[2] = split_of(ch.u1);

    charts_.push_back(ch);
    chart_index_[key] = ch.id;
    return ch.id;
}

const Chart& Ctx::chart(int id) const { return charts_.at(id); }

Multicurve Ctx::curve_of_slope(int chart_id, const Slope& s) const {
    const Chart& ch = chart(chart_id);
    if (s == Slope(0, 1)) return ch.u0;
    if (s == Slope(1, 0)) return ch.uinf;
    // Build the SL2 word taking 0/1 to s with the twist generators
    // L = T_{u0}: (p,q) -> (p, q+p),  R^{-1} = T_{uinf}: (p,q) -> (p-q, q).
    // Work backwards from s by applying inverses until reaching 0/1 or 1/0.
    struct Step {
        int gen;  // 0 = T_{u0}^k, 1 = T_{uinf}^k
        std::int64_t k;
    };
    std::vector<Step> steps;
    Big p = s.p, q = s.q;
    int guard = 0;
    while (!((p == 0 && (q == 1 || q == -1)) || (q == 0 && (p == 1 || p == -1)))) {
        using boost::multiprecision::abs;
        if (abs(p) >= abs(q) && q != 0) {
            // undo T_{uinf}^k: p -> p + k q  (T_uinf^k: p -> p - k q)
            Big k = p / q;  // truncated
            if (k == 0) k = p > 0 == (q > 0) ? 1 : -1;
            p -= k * q;
            steps.push_back({1, (std::int64_t)k});
        } else if (q != 0 && p != 0) {
            Big k = q / p;
            if (k == 0) k = (q > 0) == (p > 0) ? 1 : -1;
            q -= k * p;
            steps.push_back({0, (std::int64_t)k});
        } else {
            throw invalid_argument("curve_of_slope: reduction stuck");
        }
        if (++guard > 10000) throw invalid_argument("curve_of_slope: runaway");
    }
    Multicurve cur = (q == 0) ? ch.uinf : ch.u0;
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        // redo the step: T_{u0}^k adds to q, T_{uinf}^k subtracts from p.
        // In ambient terms the calibrated twists act the same way on chart
        // slopes, because det(c, u0) = p and det(c, uinf) = -q.
        const Multicurve& axis = it->gen == 0 ? ch.u0 : ch.uinf;
        std::int64_t k = it->gen == 0 ? it->k : -it->k;
        cur = dehn_twist(*T, cur, axis, k);
    }
    Slope check = slope_of_curve(chart_id, cur);
    if (!(check == s))
        throw invalid_argument("curve_of_slope: roundtrip mismatch");
    return cur;
}

Slope Ctx::slope_of_curve(int chart_id, const Multicurve& c) const {
    const Chart& ch = chart(chart_id);
    std::int64_t d = ch.delta;
    std::int64_t i0 = ::cxm::intersection_number(*T, c, ch.u0);
    std::int64_t iinf = ::cxm::intersection_number(*T, c, ch.uinf);
    std::int64_t i1 = ::cxm::intersection_number(*T, c, ch.u1);
    if (i0 % d || iinf % d || i1 % d)
        throw invalid_argument("slope_of_curve: intersections not multiples of delta");
    std::int64_t pa = i0 / d, qa = iinf / d, ra = i1 / d;
    if (pa == 0 && qa == 0) {
        // disjoint from both references: c is u-something itself?
        throw invalid_argument("slope_of_curve: curve disjoint from both references");
    }
    if (pa == 0) return Slope(0, 1);
    if (qa == 0) return Slope(1, 0);
    // r^2 = (p - q)^2 => sign(pq) from p^2+q^2-r^2 = 2pq
    std::int64_t lhs = pa * pa + qa * qa - ra * ra;
    if (lhs % 2 != 0 || std::abs(lhs) != 2 * pa * qa)
        throw invalid_argument("slope_of_curve: incompatible intersection triple");
    bool same_sign = lhs > 0;
    return Slope(same_sign ? pa : -pa, qa);
}

bool Ctx::slope_small(const Slope& s, std::int64_t cap) const {
    using boost::multiprecision::abs;
    return abs(s.p) <= cap && abs(s.q) <= cap;
}

const Multicurve& Ctx::annular_ref(const Multicurve& v) const {
    auto it = ann_refs_.find(v.weights());
    if (it != ann_refs_.end()) return it->second;
    std::optional<Multicurve> best;
    std::int64_t best_i = -1;
    for (std::int64_t cap = 2; cap <= 64; cap *= 2) {
        for (const auto& c : curve_pool(cap)) {
            std::int64_t i = ::cxm::intersection_number(*T, c, v);
            if (i == 0) continue;
            if (!best || i < best_i || (i == best_i && c.weights() < best->weights())) {
                best = c;
                best_i = i;
            }
        }
        if (best) break;
    }
    if (!best) throw invalid_argument("annular_ref: none found");
    return ann_refs_.emplace(v.weights(), *best).first->second;
}

std::int64_t Ctx::twist_around(const Multicurve& v, const Multicurve& c) const {
    return annular_twist_of(*T, c, v, annular_ref(v));
}

std::int64_t intersection_number(const Surface& s, const Multicurve& a, const Multicurve& b) {
    return intersection_number(triangulation_for(s), a, b);
}

std::vector<Slope> chart_geodesic(const Slope& a, const Slope& b) { return farey_geodesic(a, b); }

BfsResult bfs_geodesic(const Ctx& ctx, const Multicurve& a, const Multicurve& b, int max_d,
                       std::int64_t max_cap) {
    if (ctx.xi != 5) throw invalid_argument("bfs_geodesic: xi=5 kernels only");
    if (!a.is_single_curve() || !b.is_single_curve())
        throw invalid_argument("bfs_geodesic: endpoints must be single curves");
    const Triangulation& T = *ctx.T;
    if (a == b) return {BfsResult::Found, {a}};
    if (intersection_number(T, a, b) == 0) return {BfsResult::Found, {a, b}};

    std::int64_t need = 2;
    for (auto w : a.weights()) need = std::max(need, w);
    for (auto w : b.weights()) need = std::max(need, w);

    for (std::int64_t cap = std::max<std::int64_t>(4, need); cap <= std::max(max_cap, need);
         cap *= 2) {
        const auto& pool = ctx.curve_pool(std::min(cap, max_cap));
        std::map<Weights, int> index;
        for (int i = 0; i < (int)pool.size(); ++i) index[pool[i].weights()] = i;
        if (!index.count(a.weights()) || !index.count(b.weights())) continue;
        int src = index.at(a.weights()), dst = index.at(b.weights());
        std::vector<int> dist(pool.size(), -1), parent(pool.size(), -1);
        std::queue<int> q;
        dist[src] = 0;
        q.push(src);
        bool found = false;
        while (!q.empty() && !found) {
            int cur = q.front();
            q.pop();
            if (dist[cur] >= max_d) continue;
            for (int nxt = 0; nxt < (int)pool.size(); ++nxt) {
                if (dist[nxt] != -1) continue;
                if (intersection_number(T, pool[cur], pool[nxt]) != 0) continue;
                dist[nxt] = dist[cur] + 1;
                parent[nxt] = cur;
                if (nxt == dst) {
                    found = true;
                    break;
                }
                q.push(nxt);
            }
        }
        if (found) {
            std::vector<Multicurve> path;
            for (int v = dst; v != -1; v = parent[v]) path.push_back(pool[v]);
            std::reverse(path.begin(), path.end());
            return {BfsResult::Found, path};
        }
        if (cap >= max_cap) break;
    }
    return {BfsResult::Exceeded, {}};
}

std::vector<Multicurve> tighten(const Ctx& ctx, std::vector<Multicurve> seq) {
    const Triangulation& T = *ctx.T;
    if (seq.size() < 3) return seq;
    bool changed = true;
    int guard = 0;
    while (changed) {
        changed = false;
        for (size_t i = 1; i + 1 < seq.size(); ++i) {
            auto fill = fill_boundary(T, {&seq[i - 1], &seq[i + 1]});
            if (fill.boundary.empty())
                throw invalid_argument("tighten: neighbors fill the surface");
            Weights sum(T.num_edges, 0);
            for (const auto& b : fill.boundary)
                for (int e = 0; e < T.num_edges; ++e) sum[e] += b.weights()[e];
            Multicurve tight(T, sum);
            if (!(tight == seq[i])) {
                seq[i] = tight;
                changed = true;
            }
        }
        if (++guard > 100) throw invalid_argument("tighten: did not stabilize");
    }
    return seq;
}

std::vector<std::int64_t> annulus_geodesic(std::int64_t a, std::int64_t b) {
    std::vector<std::int64_t> out;
    if (a <= b)
        for (std::int64_t t = a; t <= b; ++t) out.push_back(t);
    else
        for (std::int64_t t = a; t >= b; --t) out.push_back(t);
    return out;
}

}  // namespace cxm
