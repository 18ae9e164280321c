#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cxm/tri.hpp"

namespace cxm {

using Weights = std::vector<std::int64_t>;  // per-edge crossing numbers

// One arc of a curve inside a triangle, entering via side in_pos and leaving
// via side out_pos.  After reduction in_pos != out_pos (a corner arc).
struct TriArc {
    int tri = -1;
    int in_pos = -1;
    int out_pos = -1;
    bool operator==(const TriArc&) const = default;
};

// A traced component of a normal multicurve: cyclic arc word plus its own
// weight vector.  Crossing k of the cycle is the one preceding arcs[k].
struct TracedComponent {
    Weights w;
    std::vector<TriArc> arcs;

    int corner_cut(const Triangulation& T, int k) const;  // corner index of arc k
    bool peripheral(const Triangulation& T, int* vertex = nullptr) const;
};

// Corner counts of a triangle for a weight vector; throws if the vector is
// not realizable (parity or triangle inequality failure).
std::array<std::int64_t, 3> corner_counts(const Triangulation& T, const Weights& w, int tri);

bool weights_valid(const Triangulation& T, const Weights& w);

// Trace a valid weight vector into components.
std::vector<TracedComponent> trace(const Triangulation& T, const Weights& w);

// A closed curve as an unreduced cyclic arc word (in_pos == out_pos allowed).
// reduce() isotopes away same-side returns, yielding the canonical normal
// form of the free homotopy class; empty means the curve is trivial.
struct RawWord {
    std::vector<TriArc> arcs;
};

std::optional<TracedComponent> reduce(const Triangulation& T, const RawWord& word);

// Canonical multicurve handle: a weight vector together with its trace.
class Multicurve {
  public:
    Multicurve() = default;
    Multicurve(const Triangulation& T, Weights w);

    const Weights& weights() const { return w_; }
    const std::vector<TracedComponent>& components() const { return comps_; }
    bool empty() const { return comps_.empty(); }
    bool is_single_curve() const { return comps_.size() == 1; }

    bool operator==(const Multicurve& o) const { return w_ == o.w_; }
    bool operator<(const Multicurve& o) const { return w_ < o.w_; }

  private:
    Weights w_;
    std::vector<TracedComponent> comps_;
};

}  // namespace cxm
