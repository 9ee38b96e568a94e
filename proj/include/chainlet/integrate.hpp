#pragma once

#include <utility>
#include <vector>

#include "chainlet/element_chain.hpp"
#include "chainlet/form.hpp"
#include "chainlet/poly_chain.hpp"

namespace chainlet {

/// Gauss-Legendre nodes/weights on [0,1], exact through degree 2m-1.
std::pair<std::vector<double>, std::vector<double>> gauss_legendre01(int m);

struct QuadPoint {
    Vec x;
    double w;
};

/// Quadrature rule over a cell, exact for polynomial integrands of the given
/// degree; weights sum to the cell measure.  Parallelepipeds use tensor
/// Gauss-Legendre; simplices a collapsed (Duffy) map of the same.
std::vector<QuadPoint> cell_rule(const Cell& c, int degree);

/// Integral of a discrete form over an element chain: exact pointwise jet
/// pairing, no quadrature.
double integrate(const ElementChain& a, const FormJet& w);

/// Integral over a polyhedral chain: the order-0 jet against the cell's unit
/// direction, times k-measure, by degree-exact quadrature per cell.
double integrate(const PolyChain& p, const FormJet& w, int quad_degree = 10);

inline double integrate(const PolyChain& p, const PolyForm& w, int quad_degree = 10) {
    return integrate(p, w.to_jet(), quad_degree);
}
inline double integrate(const ElementChain& a, const PolyForm& w) {
    return integrate(a, w.to_jet());
}

enum class TheoremMode { stokes, divergence, curl, star };

struct ResidualReport {
    TheoremMode mode;
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0;
};

/// |LHS - RHS| of the named identity.  On element chains every mode uses the
/// exact jet pairing on both sides; on polyhedral chains the two sides follow
/// independent routes (boundary quadrature vs. derived-form quadrature).
ResidualReport stokes_residual(const PolyChain& p, const FormJet& w, TheoremMode mode,
                               int quad_degree = 10);
ResidualReport stokes_residual(const ElementChain& a, const FormJet& w, TheoremMode mode);

/// Discrete quantization of a form over an axis-aligned cube chain: binary
/// subdivide to the requested depth and place M(cube) * sharp(order-0 jet) at
/// each midpoint.
ElementChain quantize_form(const FormJet& w, const PolyChain& region_cubes, int depth);

/// Integral of the pointwise inner product <eta, omega> against volume over
/// an axis-aligned cube chain, by quadrature.
double inner_product_integral(const FormJet& eta, const FormJet& omega,
                              const PolyChain& region_cubes, int quad_degree = 10);

}  // namespace chainlet
