#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "chainlet/poly_chain.hpp"

namespace chainlet {

/// Open region oracle: point membership plus a closed-cube inclusion test.
/// The cube test must be conservative (never claim inclusion falsely).
class Region {
  public:
    virtual ~Region() = default;
    virtual int dim() const = 0;
    virtual bool contains(const Vec& p) const = 0;
    virtual bool cube_inside(const Vec& lo, double edge) const = 0;
    /// Conservative overlap test: must not report false for a cube that
    /// meets the region.
    virtual bool cube_intersects(const Vec& lo, double edge) const = 0;
    virtual std::pair<Vec, Vec> bounding_box() const = 0;
};

/// Region from a bare point predicate; cube inclusion is decided by sampling
/// a sub-grid of each cube, so it is only as reliable as the region is tame
/// at the sampling scale.
std::shared_ptr<Region> predicate_region(int n, std::function<bool(const Vec&)> pred,
                                         Vec lo, Vec hi, int samples_per_axis = 5);

/// Open axis-aligned box (exact cube test).
std::shared_ptr<Region> box_region(Vec lo, Vec hi);

/// Open interior of a simple polygon in the plane (exact cube test via
/// segment/box intersection; grid-accelerated point-in-polygon).
std::shared_ptr<Region> polygon_region(std::vector<Vec> vertices);

/// One binary cube of the Whitney decomposition, kept in exact lattice
/// coordinates: corner = index * 2^-scale.
struct WhitneyCube {
    int scale;                     // edge length 2^-scale
    std::vector<std::int64_t> index;
};

struct WhitneyResult {
    int k0 = 0;                          // coarsest acceptable scale
    std::vector<std::vector<WhitneyCube>> stages;  // stage s: cubes at scale k0+s

    PolyChain stage_chain(int n, int s) const;
    PolyChain chain(int n) const;        // R_s: all stages combined
    double stage_mass(int n, int s) const;
};

/// Whitney decomposition by binary cubes acceptable to the region, staged
/// from the coarsest acceptable scale k0 (k_s = k0 + s).  Scale search is
/// capped at 30 halvings below the bounding-box scale.
WhitneyResult whitney_decompose(const Region& region, int max_stage);

/// Convenience wrapper returning the combined chain R_s.
PolyChain whitney_chain(const Region& region, int max_stage);

/// Pixel-count area oracle: fraction of pixel centers inside, times box area.
double pixel_area(const Region& region, int resolution);

}  // namespace chainlet
