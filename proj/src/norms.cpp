#include "chainlet/norms.hpp"

#include <cmath>
#include <stdexcept>

#include "chainlet/integrate.hpp"

namespace chainlet {

PolyChain expand(const DiffGen& g) {
    const int j = g.order();
    PolyChain out(g.base.dim(), g.base.grade());
    for (int mask = 0; mask < (1 << j); ++mask) {
        Vec shift(g.base.dim(), 0.0);
        int bits = 0;
        for (int i = 0; i < j; ++i)
            if ((mask >> i) & 1) {
                shift = add(shift, g.vectors[i]);
                ++bits;
            }
        out.append(g.base.translated(shift), (bits % 2 == 0 ? 1.0 : -1.0) * g.coeff);
    }
    return canonicalize(out);
}

double difference_norm(const DiffGen& g) {
    double v = std::fabs(g.coeff) * g.base.measure();
    for (const Vec& u : g.vectors) v *= norm2(u);
    return v;
}

PolyChain realize(const Decomposition& dec, int n, int k) {
    PolyChain out(n, k);
    for (const auto& layer : dec.layers)
        for (const DiffGen& g : layer) out.append(expand(g));
    if (dec.boundary_term) {
        const PolyChain b = realize(*dec.boundary_term, n, k + 1);
        out.append(boundary_chain(b));
    }
    return canonicalize(out);
}

double decomposition_value(const Decomposition& dec, int n, int k) {
    std::vector<double> parts;
    for (const auto& layer : dec.layers)
        for (const DiffGen& g : layer) parts.push_back(difference_norm(g));
    double v = pairwise_sum(parts);
    if (dec.boundary_term) v += decomposition_value(*dec.boundary_term, n, k + 1);
    return v;
}

Decomposition trivial_decomposition(const PolyChain& p, int r) {
    Decomposition dec(r);
    for (const auto& [a, c] : p.terms()) dec.layers[0].push_back(DiffGen{c, {}, a});
    return dec;
}

NormBound upper_bound(const PolyChain& target, const Decomposition& dec, int r) {
    for (const auto& layer : dec.layers)
        for (const DiffGen& g : layer)
            if (g.order() > r)
                throw std::invalid_argument("upper_bound: generator order exceeds r");
    if (dec.boundary_term && r < 1)
        throw std::invalid_argument("upper_bound: boundary term needs r >= 1");
    const PolyChain realized = realize(dec, target.dim(), target.grade());
    const PolyChain residual = canonicalize(realized - target);
    if (!residual.empty())
        throw std::invalid_argument("upper_bound: decomposition does not realize target (" +
                                    std::to_string(residual.size()) + " residual terms)");
    NormBound b;
    b.kind = NormBound::Kind::upper;
    b.r = r;
    b.value = decomposition_value(dec, target.dim(), target.grade());
    b.certificate = "decomposition";
    return b;
}

NormBound lower_bound(const PolyChain& target, const FormJet& w, double certified_norm, int r,
                      int quad_degree) {
    if (certified_norm <= 0.0) throw std::invalid_argument("lower_bound: certificate must be positive");
    NormBound b;
    b.kind = NormBound::Kind::lower;
    b.r = r;
    b.value = std::fabs(integrate(target, w, quad_degree)) / certified_norm;
    b.certificate = "form";
    b.heuristic = !w.certified_norm(r).has_value();
    return b;
}

NormBound lower_bound(const ElementChain& target, const FormJet& w, double certified_norm, int r) {
    if (certified_norm <= 0.0) throw std::invalid_argument("lower_bound: certificate must be positive");
    NormBound b;
    b.kind = NormBound::Kind::lower;
    b.r = r;
    b.value = std::fabs(integrate(target, w)) / certified_norm;
    b.certificate = "form";
    b.heuristic = !w.certified_norm(r).has_value();
    return b;
}

Decomposition translate_decomposition(const Decomposition& dec, const Vec& v) {
    Decomposition out(dec.r + 1);
    for (std::size_t j = 0; j < dec.layers.size(); ++j)
        for (const DiffGen& g : dec.layers[j]) {
            DiffGen lifted = g;
            lifted.vectors.push_back(v);
            out.layers[j + 1].push_back(std::move(lifted));
        }
    if (dec.boundary_term) {
        out.boundary_term = std::make_shared<Decomposition>(
            translate_decomposition(*dec.boundary_term, v));
    }
    return out;
}

Decomposition translation_decomposition(const PolyChain& p, const Vec& v, int r) {
    if (r < 1) throw std::invalid_argument("translation_decomposition: r >= 1");
    Decomposition dec = trivial_decomposition(p, 0);
    for (int i = 0; i < r; ++i) dec = translate_decomposition(dec, v);
    return dec;
}

StaircaseFamily staircase_decomposition(int i) {
    if (i < 0) throw std::invalid_argument("staircase_decomposition: i >= 0");
    const long steps = 1L << i;
    const double h = std::ldexp(1.0, -i);
    StaircaseFamily fam;
    fam.staircase = PolyChain(2, 1);
    fam.diagonal = PolyChain(2, 1);
    PolyChain triangles(2, 2);
    for (long s = 0; s < steps; ++s) {
        const double x = s * h, y = s * h;
        const Vec a{x, y}, b{x + h, y}, c{x + h, y + h};
        fam.staircase.append(Cell::simplex({a, b}), 1.0);
        fam.staircase.append(Cell::simplex({b, c}), 1.0);
        fam.diagonal.append(Cell::simplex({a, c}), 1.0);
        triangles.append(Cell::simplex({a, b, c}), 1.0);
    }
    fam.between = Decomposition(1);
    fam.between.boundary_term =
        std::make_shared<Decomposition>(trivial_decomposition(triangles, 0));
    fam.bound = mass_chain(triangles);
    return fam;
}

DipoleStep dipole_sequence(int i) {
    if (i < 0) throw std::invalid_argument("dipole_sequence: i >= 0");
    const double h = std::ldexp(1.0, -i);          // edge of sigma_i
    const double hh = 0.5 * h;                      // edge of sigma_{i+1}
    const double w_i = std::ldexp(1.0, 2 * i);      // weight 2^{2i}
    const std::vector<Vec> axes{{hh, 0.0}, {0.0, hh}};
    const Cell small = Cell::parallelepiped({-0.5 * hh, -0.5 * hh}, axes);

    DipoleStep step;
    step.p_next = PolyChain::single(small, 4.0 * w_i);
    step.p_i = PolyChain(2, 2);
    step.diff = Decomposition(1);
    for (int qx = 0; qx < 2; ++qx)
        for (int qy = 0; qy < 2; ++qy) {
            const Vec t{(qx - 0.5) * hh, (qy - 0.5) * hh};
            step.p_i.append(small.translated(t), w_i);
            // (Id - T_t) small enters with coefficient -w_i so the expansion
            // sums to T_t small - small per quadrant
            step.diff.layers[1].push_back(DiffGen{small, {t}, -w_i});
        }
    step.bound = 0.0;
    for (const DiffGen& g : step.diff.layers[1]) step.bound += difference_norm(g);
    return step;
}

Decomposition scale_decomposition(const Decomposition& dec, double lambda) {
    Decomposition out(dec.r);
    Mat A;
    for (std::size_t j = 0; j < dec.layers.size(); ++j)
        for (const DiffGen& g : dec.layers[j]) {
            const int n = g.base.dim();
            if (A.rows != static_cast<std::size_t>(n)) {
                A = Mat::identity(n);
                for (int d = 0; d < n; ++d) A(d, d) = lambda;
            }
            DiffGen scaled{g.base.transformed(A, Vec(n, 0.0)), g.vectors, g.coeff};
            for (Vec& u : scaled.vectors) u = chainlet::scaled(u, lambda);
            out.layers[j].push_back(std::move(scaled));
        }
    if (dec.boundary_term)
        out.boundary_term =
            std::make_shared<Decomposition>(scale_decomposition(*dec.boundary_term, lambda));
    return out;
}

ScalingReport scaling_check(const PolyChain& p, double lambda, int r) {
    if (lambda <= 0.0) throw std::invalid_argument("scaling_check: lambda > 0");
    ScalingReport rep;
    rep.lambda = lambda;
    rep.r = r;
    const Decomposition dec = trivial_decomposition(p, r);
    const Decomposition scaled_dec = scale_decomposition(dec, lambda);
    const PolyChain scaled_chain = scale_map(p, lambda);
    rep.base_value = upper_bound(p, dec, r).value;
    rep.scaled_value = upper_bound(scaled_chain, scaled_dec, r).value;
    rep.factor_limit = std::max(1.0, std::pow(lambda, p.grade() + r));
    rep.ok = rep.scaled_value <= rep.factor_limit * rep.base_value * (1.0 + 1e-9);
    return rep;
}

}  // namespace chainlet
