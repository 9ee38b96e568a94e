#pragma once

#include <memory>
#include <string>
#include <vector>

#include "chainlet/form.hpp"
#include "chainlet/poly_chain.hpp"

namespace chainlet {

/// Generator of a j-difference k-chain: coeff * (Id - T_{u_j}) ... (Id - T_{u_1}) base.
struct DiffGen {
    Cell base;
    std::vector<Vec> vectors;
    double coeff = 1.0;

    int order() const { return static_cast<int>(vectors.size()); }
};

/// Expanded signed translates (2^j of them before cancellation).
PolyChain expand(const DiffGen& g);

/// Generator norm |coeff| * M(base) * prod |u_i|; an upper bound on the
/// difference-chain norm of the expansion.
double difference_norm(const DiffGen& g);

/// A certificate P = sum_j D^j + boundary(B), with B recursively decomposed.
struct Decomposition {
    int r = 0;
    std::vector<std::vector<DiffGen>> layers;  // layers[j]: order-j generators
    std::shared_ptr<const Decomposition> boundary_term;  // grade k+1, order r-1

    Decomposition() = default;
    explicit Decomposition(int order) : r(order), layers(order + 1) {}
};

/// The chain realized by the decomposition (canonicalized).
PolyChain realize(const Decomposition& dec, int n, int k);

/// Sum of generator norms plus the recursive boundary-term value; the value
/// of the trivial decomposition is the chain mass.
double decomposition_value(const Decomposition& dec, int n, int k);

/// D^0 = P: the decomposition every chain admits.
Decomposition trivial_decomposition(const PolyChain& p, int r = 0);

struct NormBound {
    enum class Kind { upper, lower };
    Kind kind = Kind::upper;
    int r = 0;
    double value = 0.0;
    std::string certificate;
    bool heuristic = false;  // set when the certificate norm was sampled
};

/// Certified upper bound from an explicit decomposition; throws (with the
/// residual chain size in the message) when the decomposition does not
/// realize the target exactly.
NormBound upper_bound(const PolyChain& target, const Decomposition& dec, int r);

/// Dual lower bound |integral of omega over the target| / certified norm.
NormBound lower_bound(const PolyChain& target, const FormJet& w, double certified_norm, int r,
                      int quad_degree = 10);
NormBound lower_bound(const ElementChain& target, const FormJet& w, double certified_norm, int r);

/// Transforms a decomposition of P into one of P - T_v P (order r+1),
/// mapping each generator (base, U, a) to (base, U + (v), a).
Decomposition translate_decomposition(const Decomposition& dec, const Vec& v);

/// Decomposition of P - T_v P built from the trivial decomposition of P,
/// iterated to reach the requested order r >= 1.
Decomposition translation_decomposition(const PolyChain& p, const Vec& v, int r);

struct StaircaseFamily {
    PolyChain staircase;   // 2^i axis steps across the unit square
    PolyChain diagonal;    // the diagonal, subdivided at the staircase scale
    Decomposition between; // staircase - diagonal = boundary(triangles)
    double bound = 0.0;    // certified natural-norm upper bound (order 1)
};
StaircaseFamily staircase_decomposition(int i);

struct DipoleStep {
    PolyChain p_i;        // 2^{2i} sigma_i, subdivided for exact pairing
    PolyChain p_next;     // 2^{2(i+1)} sigma_{i+1}
    Decomposition diff;   // realizes p_i - p_next
    double bound = 0.0;
};
DipoleStep dipole_sequence(int i);

struct ScalingReport {
    double lambda = 0.0;
    int r = 0;
    double base_value = 0.0;     // upper bound for P
    double scaled_value = 0.0;   // upper bound for the scaled chain
    double factor_limit = 0.0;   // max(1, lambda^{k+r})
    bool ok = false;
};

/// Transforms a decomposition of P into one of the lambda-scaled chain and
/// checks the scaling inequality on the certified values.
ScalingReport scaling_check(const PolyChain& p, double lambda, int r);

/// Scales a decomposition: bases through phi_lambda, vectors by lambda.
Decomposition scale_decomposition(const Decomposition& dec, double lambda);

}  // namespace chainlet
