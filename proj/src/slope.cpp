#include "cxm/slope.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace cxm {

Slope::Slope(Big pp, Big qq) : p(std::move(pp)), q(std::move(qq)) {
    if (p == 0 && q == 0) throw invalid_argument("slope 0/0");
    Big g = boost::multiprecision::gcd(boost::multiprecision::abs(p),
                                       boost::multiprecision::abs(q));
    if (g > 1) {
        p /= g;
        q /= g;
    }
    if (q < 0 || (q == 0 && p < 0)) {
        p = -p;
        q = -q;
    }
}

bool Slope::operator<(const Slope& o) const {
    if (q != o.q) return q < o.q;
    return p < o.p;
}

Slope slope_twist(const Slope& c, const Slope& d, const Big& n) {
    Big k = n * Slope::det(c, d);
    return Slope(c.p + k * d.p, c.q + k * d.q);
}

namespace {

// An SL(2,Z) matrix sending b to infinity; columns (b, b') with det 1.
Mat to_infinity(const Slope& b) {
    // Find (u,v) with b.p * v - b.q * u = 1.
    Big g, u, v;
    // extended gcd on (b.p, b.q)
    Big old_r = b.p, r = b.q, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        Big quo = old_r / r;
        std::swap(old_r -= quo * r, r);
        std::swap(old_s -= quo * s, s);
        std::swap(old_t -= quo * t, t);
    }
    // old_r = gcd = ±1, old_s * p + old_t * q = old_r
    Big sgn = old_r;  // ±1
    u = -old_t * sgn;
    v = old_s * sgn;
    // matrix M = [[v, -u], [-b.q, b.p]] sends (p,q) -> (vp - uq, -qp + pq) = (1, 0)
    return Mat{v, -u, -b.q, b.p};
}

Slope apply(const Mat& m, const Slope& s) { return Slope(m.a * s.p + m.b * s.q, m.c * s.p + m.d * s.q); }

}  // namespace

std::vector<Slope> farey_geodesic(const Slope& a, const Slope& b) {
    if (a == b) return {a};
    if (farey_adjacent(a, b)) return {a, b};

    // Normalize b -> infinity, a -> p/q with q >= 2.
    Mat M = to_infinity(b);
    Mat Minv = M.adjugate();
    Slope a2 = apply(M, a);
    Big p = a2.p, q = a2.q;
    if (q < 0) {
        p = -p;
        q = -q;
    }
    if (q == 0) throw invalid_argument("farey_geodesic: equal slopes");

    // Stern-Brocot strip: triangles of the Farey tessellation crossed by the
    // vertical from p/q to infinity.  Record vertices and triangle edges.
    std::map<Slope, size_t> index;
    std::vector<Slope> vlist;
    auto vid = [&](const Slope& s) {
        auto it = index.find(s);
        if (it != index.end()) return it->second;
        size_t id = vlist.size();
        index[s] = id;
        vlist.push_back(s);
        return id;
    };
    std::vector<std::pair<size_t, size_t>> edges;
    auto add_tri = [&](const Slope& x, const Slope& y, const Slope& z) {
        size_t i = vid(x), j = vid(y), k = vid(z);
        edges.push_back({i, j});
        edges.push_back({i, k});
        edges.push_back({j, k});
    };

    Big f = p / q;
    if (p < 0 && p % q != 0) f -= 1;  // floor for negatives
    Slope inf(1, 0), lo(f, 1), hi(f + 1, 1);
    add_tri(inf, lo, hi);
    while (true) {
        Slope med(lo.p + hi.p, lo.q + hi.q);
        add_tri(lo, hi, med);
        if (med == a2) break;
        if (p * med.q < med.p * q)
            hi = med;
        else
            lo = med;
        if (vlist.size() > 2000000) throw invalid_argument("farey strip overflow");
    }

    std::vector<Slope> orig(vlist.size());
    for (size_t i = 0; i < vlist.size(); ++i) orig[i] = apply(Minv, vlist[i]);

    std::vector<std::vector<size_t>> adj(vlist.size());
    for (auto [i, j] : edges) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    for (auto& nbrs : adj) {
        std::sort(nbrs.begin(), nbrs.end(),
                  [&](size_t x, size_t y) { return orig[x] < orig[y]; });
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }

    size_t start = index.at(a2), goal = index.at(inf);
    std::vector<int> parent(vlist.size(), -1);
    std::vector<int> dist(vlist.size(), -1);
    std::queue<size_t> bfs;
    dist[start] = 0;
    bfs.push(start);
    while (!bfs.empty()) {
        size_t cur = bfs.front();
        bfs.pop();
        if (cur == goal) break;
        for (size_t oi : adj[cur]) {
            if (dist[oi] != -1) continue;
            dist[oi] = dist[cur] + 1;
            parent[oi] = (int)cur;
            bfs.push(oi);
        }
    }
    if (dist[goal] == -1) throw invalid_argument("farey_geodesic: strip search failed");

    std::vector<Slope> path;
    for (int v = (int)goal; v != -1; v = parent[v]) path.push_back(orig[v]);
    std::reverse(path.begin(), path.end());
    return path;
}

std::int64_t farey_distance(const Slope& a, const Slope& b) {
    return (std::int64_t)farey_geodesic(a, b).size() - 1;
}

std::optional<std::int64_t> farey_distance_bfs(const Slope& a, const Slope& b,
                                               std::int64_t bound) {
    std::vector<Slope> verts;
    for (std::int64_t q = 0; q <= bound; ++q)
        for (std::int64_t p = -bound; p <= bound; ++p) {
            if (boost::multiprecision::gcd(Big(std::abs(p)), Big(q)) != 1) continue;
            if (q == 0 && p != 1) continue;
            verts.push_back(Slope(p, q));
        }
    std::map<Slope, size_t> index;
    for (size_t i = 0; i < verts.size(); ++i) index[verts[i]] = i;
    if (!index.count(a) || !index.count(b)) return std::nullopt;
    std::vector<int> dist(verts.size(), -1);
    std::queue<size_t> bfs;
    dist[index.at(a)] = 0;
    bfs.push(index.at(a));
    while (!bfs.empty()) {
        size_t cur = bfs.front();
        bfs.pop();
        if (verts[cur] == b) return dist[cur];
        for (size_t i = 0; i < verts.size(); ++i)
            if (dist[i] == -1 && farey_adjacent(verts[cur], verts[i])) {
                dist[i] = dist[cur] + 1;
                bfs.push(i);
            }
    }
    return std::nullopt;
}

Big annular_twist(const Slope& s, const Slope& core, const Slope& ref) {
    if (s == core || ref == core) throw invalid_argument("annular_twist: core has no twist");
    Mat M = to_infinity(core);
    Slope s2 = apply(M, s), r2 = apply(M, ref);
    auto floor_of = [](const Slope& x) {
        if (x.q == 0) throw invalid_argument("annular_twist: slope equals core");
        Big f = x.p / x.q;
        if (x.p < 0 && x.p % x.q != 0) f -= 1;
        return f;
    };
    return floor_of(s2) - floor_of(r2);
}

}  // namespace cxm
