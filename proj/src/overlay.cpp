#include "cxm/overlay.hpp"

#include <algorithm>
#include <cassert>

namespace cxm {

namespace {

int sgn(const Big& x) { return x == 0 ? 0 : (x > 0 ? 1 : -1); }

// sign of p + q*sqrt(D), D >= 0
int sign_root(const Big& p, const Big& q, const Big& D) {
    if (q == 0 || D == 0) return sgn(p);
    if (p == 0) return sgn(q);
    if (p > 0 && q > 0) return 1;
    if (p < 0 && q < 0) return -1;
    Big lhs = p * p, rhs = q * q * D;
    if (lhs == rhs) return 0;
    return lhs > rhs ? sgn(p) : sgn(q);
}

// sign of A + B*sqrt(D) + C*sqrt(D2)
int sign_two_roots(const Big& A, const Big& B, const Big& D, const Big& C, const Big& D2) {
    if (B == 0 || D == 0) return sign_root(A, C, D2);
    if (C == 0 || D2 == 0) return sign_root(A, B, D);
    int st = sign_root(A, B, D);
    int su = sgn(C);
    if (st == su) return st;
    if (st == 0) return su;
    if (su == 0) return st;
    // compare (A + B*sqrt(D))^2 against C^2*D2
    Big p = A * A + B * B * D - C * C * D2;
    Big q = 2 * A * B;
    int diff = sign_root(p, q, D);
    return diff == 0 ? 0 : diff * st;
}

// Projective point on the boundary circle.
struct PPoint {
    Big p, q;  // p/q, infinity = (1,0)
};

// Mobius matrix sending x1 -> 0, x2 -> infinity, x3 -> w (w = +-1).
void strip_content(Mat& m) {
    Big g = 0;
    for (const Big* v : {&m.a, &m.b, &m.c, &m.d})
        g = boost::multiprecision::gcd(g, boost::multiprecision::abs(*v));
    if (g > 1) {
        m.a /= g;
        m.b /= g;
        m.c /= g;
        m.d /= g;
    }
}

Mat mobius3(const PPoint& x1, const PPoint& x2, const PPoint& x3, int w) {
    Big r1 = x1.q * x3.p - x1.p * x3.q;  // row1 applied to x3
    Big r2 = x2.q * x3.p - x2.p * x3.q;  // row2 applied to x3
    // N = [[w*r2*q1, -w*r2*p1], [r1*q2, -r1*p2]]
    Mat N{Big(w) * r2 * x1.q, Big(-w) * r2 * x1.p, r1 * x2.q, -r1 * x2.p};
    strip_content(N);
    if (N.det() == 0) throw invalid_argument("mobius3: degenerate");
    return N;
}


const PPoint kZero{0, 1};
const PPoint kInf{1, 0};

}  // namespace

int Overlay::edge_of(int comp, int k) const {
    const TriArc& a = comps_[comp]->arcs[k];
    return T_->edge_at(a.tri, a.in_pos);
}

// Walk one arc inside its triangle, in the frame where the entry edge is
// (0, infinity) with the edge tail at 0 and the triangle's third vertex at
// v3 = -sign(entry side).  Returns the transition matrix mapping the next
// edge's frame into the current frame, and updates v3 for the next step.
namespace {

struct StepResult {
    Mat next_to_cur;
};

StepResult walk_step(const Triangulation& T, const TriArc& arc) {
    int t = arc.tri, s = arc.in_pos, s2 = arc.out_pos;
    int v3 = -T.sign_at(t, s);
    // Corner shared by entry and exit sides, and whether it sits at the
    // tail (drawing point 0) or head (infinity) of the entry edge.
    int k_sh = (s2 == (s + 1) % 3) ? s : s2;
    bool sh_at_tail = T.corner_is_tail(t, s, k_sh);

    PPoint vp{Big(v3), Big(1)};
    // Exit edge endpoints in the drawing: the shared corner's point and v3.
    PPoint sh_pt = sh_at_tail ? kZero : kInf;
    PPoint rem_pt = sh_at_tail ? kInf : kZero;  // remaining vertex of t

    // Which endpoint of the exit edge is the exit edge's global tail.
    int k_oth = (k_sh == s2) ? (s2 + 2) % 3 : s2;  // the other corner of side s2
    (void)k_oth;
    bool sh_is_exit_tail = T.corner_is_tail(t, s2, k_sh);
    PPoint z_tail = sh_is_exit_tail ? sh_pt : vp;
    PPoint z_head = sh_is_exit_tail ? vp : sh_pt;

    // Behind the new edge sits t, whose remaining vertex goes to -sign of
    // t's side at the exit edge.
    int w = -T.sign_at(t, s2);
    Mat N = mobius3(z_tail, z_head, rem_pt, w);
    Mat back = N.adjugate();
    strip_content(back);
    return {back};
}

}  // namespace

void Overlay::compute_geometry() {
    const Triangulation& T = *T_;
    geo_.resize(comps_.size());
    for (int ci = 0; ci < (int)comps_.size(); ++ci) {
        const TracedComponent& c = *comps_[ci];
        int L = (int)c.arcs.size();
        geo_[ci].resize(L);
        for (int k = 0; k < L; ++k) {
            Mat M{1, 0, 0, 1};
            for (int step = 0; step < L; ++step) {
                const TriArc& arc = c.arcs[(k + step) % L];
                Mat t = walk_step(T, arc).next_to_cur;
                M = M * t;
                strip_content(M);
            }
            // Fixed points: cz^2 + (d-a)z - b = 0.  Height^2 = b/c.
            Big b = M.b, cc = M.c;
            Big tr = M.trace(), det = M.det();
            if (tr * tr <= 4 * det)
                throw invalid_argument("overlay: non-hyperbolic strand (peripheral curve?)");
            if (cc == 0 || sgn(b) * sgn(cc) <= 0)
                throw invalid_argument("overlay: strand does not cross its edge");
            Big num = b, den = cc;
            if (den < 0) {
                num = -num;
                den = -den;
            }
            geo_[ci][k] = {M, num, den};
        }
    }
}

bool Overlay::before(const Point& p, const Point& q) const {
    const StrandGeo& gp = geo(p.comp, p.k);
    const StrandGeo& gq = geo(q.comp, q.k);
    Big lhs = gp.h2_num * gq.h2_den, rhs = gq.h2_num * gp.h2_den;
    if (lhs != rhs) return lhs < rhs;
    // Equal heights: the two geodesics cross exactly on the edge.  Break the
    // tie by the ordered endpoint pairs (min root, then max root) of the
    // fixed-point quadratics; this perturbs the crossing consistently.
    auto quad = [](const Mat& m) {
        // c z^2 + (d-a) z - b with c normalized positive
        Big c = m.c, s = m.a - m.d, b = m.b;
        if (c < 0) {
            c = -c;
            s = -s;
            b = -b;
        }
        Big D = (m.d - m.a) * (m.d - m.a) + 4 * m.b * m.c;
        return std::tuple<Big, Big, Big>(c, s, D);
    };
    auto [c1, s1, D1] = quad(gp.m);
    auto [c2, s2, D2] = quad(gq.m);
    // min roots: (s - sqrt(D)) / (2c)
    int cm = sign_two_roots(s1 * c2 - s2 * c1, -c2, D1, c1, D2);
    if (cm != 0) return cm < 0;
    int cM = sign_two_roots(s1 * c2 - s2 * c1, c2, D1, -c1, D2);
    if (cM != 0) return cM < 0;
    throw invalid_argument("overlay: coincident strands");
}

Overlay::Overlay(const Triangulation& T, std::vector<const TracedComponent*> comps)
    : T_(&T), comps_(std::move(comps)) {
    for (size_t i = 0; i < comps_.size(); ++i)
        for (size_t j = i + 1; j < comps_.size(); ++j)
            if (comps_[i]->w == comps_[j]->w)
                throw invalid_argument("overlay: isotopic components");

    compute_geometry();

    edge_points_.assign(T.num_edges, {});
    for (int ci = 0; ci < (int)comps_.size(); ++ci)
        for (int k = 0; k < (int)comps_[ci]->arcs.size(); ++k)
            edge_points_[edge_of(ci, k)].push_back({ci, k});

    rank_.resize(comps_.size());
    for (int ci = 0; ci < (int)comps_.size(); ++ci)
        rank_[ci].assign(comps_[ci]->arcs.size(), -1);

    for (int e = 0; e < T.num_edges; ++e) {
        auto& pts = edge_points_[e];
        std::sort(pts.begin(), pts.end(), [&](const Point& a, const Point& b) {
            if (a == b) return false;
            return before(a, b);
        });
        for (std::int64_t r = 0; r < (std::int64_t)pts.size(); ++r)
            rank_[pts[r].comp][pts[r].k] = r;
    }
}

Overlay::BCoord Overlay::bcoord(int comp, int k, bool entry) const {
    const Triangulation& T = *T_;
    const TriArc& a = comps_[comp]->arcs[k];
    int n = (int)comps_[comp]->arcs.size();
    int side = entry ? a.in_pos : a.out_pos;
    int cross = entry ? k : (k + 1) % n;
    std::int64_t r = rank_[comp][cross];
    int e = T.edge_at(a.tri, side);
    std::int64_t m = (std::int64_t)edge_points_[e].size();
    std::int64_t ccw = T.sign_at(a.tri, side) > 0 ? r : m - 1 - r;
    return {side, ccw};
}

namespace {

bool linked(const Overlay::BCoord& a1, const Overlay::BCoord& a2, const Overlay::BCoord& b1,
            const Overlay::BCoord& b2) {
    Overlay::BCoord lo = std::min(a1, a2), hi = std::max(a1, a2);
    auto inside = [&](const Overlay::BCoord& x) { return lo < x && x < hi; };
    return inside(b1) != inside(b2);
}

}  // namespace

const std::vector<Overlay::Crossing>& Overlay::crossings() const {
    if (crossings_done_) return crossings_;
    const Triangulation& T = *T_;

    struct Chord {
        int comp, arc;
        BCoord in, out;
    };
    std::vector<std::vector<Chord>> per_tri(T.tris.size());
    for (int ci = 0; ci < (int)comps_.size(); ++ci)
        for (int k = 0; k < (int)comps_[ci]->arcs.size(); ++k)
            per_tri[comps_[ci]->arcs[k].tri].push_back(
                {ci, k, bcoord(ci, k, true), bcoord(ci, k, false)});

    for (int t = 0; t < (int)T.tris.size(); ++t) {
        auto& chords = per_tri[t];
        for (size_t i = 0; i < chords.size(); ++i)
            for (size_t j = i + 1; j < chords.size(); ++j) {
                if (chords[i].comp == chords[j].comp) continue;
                if (linked(chords[i].in, chords[i].out, chords[j].in, chords[j].out))
                    crossings_.push_back(
                        {t, chords[i].comp, chords[i].arc, chords[j].comp, chords[j].arc});
            }
    }
    crossings_done_ = true;
    return crossings_;
}

std::int64_t Overlay::crossings_between(int ci, int cj) const {
    std::int64_t total = 0;
    for (const auto& x : crossings())
        if ((x.comp_a == ci && x.comp_b == cj) || (x.comp_a == cj && x.comp_b == ci)) ++total;
    return total;
}

std::int64_t intersection_number(const Triangulation& T, const Multicurve& a,
                                 const Multicurve& b) {
    std::int64_t total = 0;
    for (const auto& ca : a.components()) {
        for (const auto& cb : b.components()) {
            if (ca.w == cb.w) continue;  // isotopic components are disjoint
            Overlay ov(T, {&ca, &cb});
            total += ov.crossings_between(0, 1);
        }
    }
    return total;
}

}  // namespace cxm
