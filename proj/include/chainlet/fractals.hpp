#pragma once

#include <memory>
#include <vector>

#include "chainlet/norms.hpp"
#include "chainlet/poly_chain.hpp"
#include "chainlet/region.hpp"

namespace chainlet {

struct KochData {
    int depth = 0;
    std::vector<Vec> polygon;        // counterclockwise vertex loop
    PolyChain boundary;              // oriented edge chain (one 1-simplex per edge)
    std::shared_ptr<Region> region;  // open interior
};

/// Snowflake of side 1 on the base triangle (0,0), (1,0), (1/2, sqrt(3)/2).
KochData build_koch(int depth);

/// Perimeter chain with every edge split in thirds; cancels exactly against
/// the next depth's perimeter.
PolyChain koch_boundary_subdivided(int depth);

/// The outward bump triangles T_d with boundary(T_d) = P_d - P_{d+1}.
PolyChain koch_bump_triangles(int depth);

/// Certified natural-norm (order 1) bound on P_d - P_{d+1}: verified
/// decomposition through the bump triangles, value M(T_d).
struct KochCauchyStep {
    PolyChain difference;  // P_d (subdivided) - P_{d+1}
    Decomposition dec;
    double bound = 0.0;
};
KochCauchyStep koch_cauchy_step(int depth);

/// Triangulation of the depth-d snowflake region: base triangle plus all bump
/// triangles of earlier depths; boundary equals the (subdivided) perimeter.
PolyChain koch_filling(int depth);

struct CantorData {
    int depth = 0;
    PolyChain segments;   // C_k: 2^k segments of length 3^-k
    PolyChain boundary;   // 2^{k+1} signed endpoints
};
CantorData build_cantor(int depth);

}  // namespace chainlet
