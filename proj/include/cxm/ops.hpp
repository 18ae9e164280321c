#pragma once

#include "cxm/overlay.hpp"

namespace cxm {

// Dehn twist of c along the multicurve d (components twisted independently;
// they are disjoint so the order is immaterial).  Positive n is the
// right-handed twist under the repository convention, which is calibrated
// so that on xi=4 surfaces it matches T_d(c) = c + n det(c,d) d in slope
// coordinates.
Multicurve dehn_twist(const Triangulation& T, const Multicurve& c, const Multicurve& d,
                      std::int64_t n);

// Complementary regions of a system of pairwise disjoint multicurves
// ("walls").  Additional disjoint "ghost" curves may be located within the
// regions without contributing boundary.
class Regions {
  public:
    struct Side {
        int comp;   // wall component index (over the flattened wall list)
        bool left;  // side w.r.t. the component's cyclic orientation
        auto operator<=>(const Side&) const = default;
    };
    struct Info {
        std::vector<int> punctures;  // vertex ids, deduplicated
        std::vector<Side> sides;     // wall incidences, one per boundary circle
        int chi = 0;
        int genus = 0;
        int xi() const { return 3 * genus + (int)punctures.size() + (int)sides.size(); }
    };

    Regions(const Triangulation& T, std::vector<const TracedComponent*> walls,
            std::vector<const TracedComponent*> ghosts = {});

    int num_regions() const { return (int)infos_.size(); }
    const Info& info(int r) const { return infos_[r]; }
    int region_of_side(int wall_comp, bool left) const;
    int region_of_ghost(int ghost_index) const;
    int region_of_corner(int tri, int corner) const;

  private:
    std::vector<Info> infos_;
    std::vector<std::array<int, 2>> wall_side_region_;  // [right, left]
    std::vector<int> ghost_region_;
    std::vector<std::array<int, 3>> corner_region_;
};

// All connected essential non-peripheral curves whose weights are bounded
// pointwise by cap.  Deterministic order (by weight vector).
std::vector<Multicurve> enumerate_curves(const Triangulation& T, const Weights& cap);

// The boundary of the subsurface filled by a union of multicurves: the
// essential non-peripheral boundary classes, deduplicated, or empty when the
// union fills the surface.  Also reports the filled subsurface's complexity.
struct FillResult {
    std::vector<Multicurve> boundary;  // one entry per isotopy class
    bool fills_surface = false;
};
FillResult fill_boundary(const Triangulation& T, const std::vector<const Multicurve*>& parts);

// Subsurface projection onto a non-annular piece of the walls' complement:
// the essential curves obtained by surgering the arcs of c through the
// piece (plus any component of c lying wholly inside), deduplicated.
// piece_id refers to Regions(T, wall components).
std::vector<Multicurve> project_to_piece(const Triangulation& T, const Multicurve& walls,
                                         int piece_id, const Multicurve& c);

// Twist coordinate of c in the annular complex of the core curve, relative
// to a reference curve crossing the core: the integer n at which
// i(T_core^-n(c), ref) is minimal (smallest such n on ties).
std::int64_t annular_twist_of(const Triangulation& T, const Multicurve& c,
                              const Multicurve& core, const Multicurve& ref);

}  // namespace cxm
