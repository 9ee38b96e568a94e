#include "chainlet/integrate.hpp"

#include <cmath>
#include <stdexcept>

namespace chainlet {

double integrate(const ElementChain& a, const FormJet& w) {
    if (a.dim() != w.dim()) throw std::invalid_argument("integrate: dimension mismatch");
    if (a.grade() != w.grade()) throw std::invalid_argument("integrate: grade mismatch");
    std::vector<double> parts;
    for (const auto& [p, e] : a.entries()) {
        const int top = e.max_order();
        double s = 0.0;
        for (int j = 0; j <= top; ++j) s += pair(w.jet(p, j), e);
        parts.push_back(s);
    }
    return pairwise_sum(parts);
}

double integrate(const PolyChain& p, const FormJet& w, int quad_degree) {
    if (p.dim() != w.dim()) throw std::invalid_argument("integrate: dimension mismatch");
    if (p.grade() != w.grade()) throw std::invalid_argument("integrate: grade mismatch");
    std::vector<double> parts;
    parts.reserve(p.size());
    for (const auto& [a, c] : p.terms()) {
        const Element u = c.unit_direction();
        double s = 0.0;
        for (const QuadPoint& q : cell_rule(c, quad_degree)) s += q.w * pair(w.jet(q.x, 0), u);
        parts.push_back(a * s);
    }
    return pairwise_sum(parts);
}

namespace {

double star_sign(int n, int k) { return (k * (n - k)) % 2 == 0 ? 1.0 : -1.0; }

/// Quadrature of a form against the perp of each cell direction: the
/// polyhedral realization of integrating over perp of the chain.
double integrate_perp(const PolyChain& p, const FormJet& w, int quad_degree) {
    std::vector<double> parts;
    parts.reserve(p.size());
    for (const auto& [a, c] : p.terms()) {
        const Element u = hodge_perp(c.unit_direction());
        double s = 0.0;
        for (const QuadPoint& q : cell_rule(c, quad_degree)) s += q.w * pair(w.jet(q.x, 0), u);
        parts.push_back(a * s);
    }
    return pairwise_sum(parts);
}

}  // namespace

ResidualReport stokes_residual(const PolyChain& p, const FormJet& w, TheoremMode mode,
                               int quad_degree) {
    const int n = p.dim();
    const int k = p.grade();
    ResidualReport rep;
    rep.mode = mode;
    switch (mode) {
        case TheoremMode::stokes: {
            if (w.grade() != k - 1) throw std::invalid_argument("stokes: form grade must be k-1");
            rep.lhs = integrate(p, d_form(w), quad_degree);
            rep.rhs = integrate(boundary_chain(p), w, quad_degree);
            break;
        }
        case TheoremMode::divergence: {
            // integral over perp(boundary) of omega = integral over the chain
            // of d(star omega)
            if (w.grade() != n - k + 1)
                throw std::invalid_argument("divergence: form grade must be n-k+1");
            rep.lhs = integrate_perp(boundary_chain(p), w, quad_degree);
            rep.rhs = integrate(p, d_form(star_form(w)), quad_degree);
            break;
        }
        case TheoremMode::curl: {
            // integral over perp(chain) of star(d omega) = integral over the
            // boundary of omega; the left side unwinds through star twice.
            if (w.grade() != k - 1) throw std::invalid_argument("curl: form grade must be k-1");
            rep.lhs = star_sign(n, k) * integrate(p, star_form(star_form(d_form(w))), quad_degree);
            rep.rhs = integrate(boundary_chain(p), w, quad_degree);
            break;
        }
        case TheoremMode::star: {
            if (w.grade() != n - k) throw std::invalid_argument("star: form grade must be n-k");
            rep.lhs = integrate_perp(p, w, quad_degree);
            rep.rhs = integrate(p, star_form(w), quad_degree);
            break;
        }
    }
    rep.residual = std::fabs(rep.lhs - rep.rhs);
    return rep;
}

ResidualReport stokes_residual(const ElementChain& a, const FormJet& w, TheoremMode mode) {
    const int n = a.dim();
    const int k = a.grade();
    ResidualReport rep;
    rep.mode = mode;
    switch (mode) {
        case TheoremMode::stokes: {
            if (w.grade() != k - 1) throw std::invalid_argument("stokes: form grade must be k-1");
            rep.lhs = integrate(a, d_form(w));
            rep.rhs = integrate(boundary(a), w);
            break;
        }
        case TheoremMode::divergence: {
            if (w.grade() != n - k + 1)
                throw std::invalid_argument("divergence: form grade must be n-k+1");
            rep.lhs = integrate(hodge_perp(boundary(a)), w);
            rep.rhs = integrate(a, d_form(star_form(w)));
            break;
        }
        case TheoremMode::curl: {
            // discrete curl identity: integral over boundary(perp A) of omega
            // equals integral over A of star(d omega)
            if (w.grade() != n - k - 1)
                throw std::invalid_argument("curl: form grade must be n-k-1");
            rep.lhs = integrate(boundary(hodge_perp(a)), w);
            rep.rhs = integrate(a, star_form(d_form(w)));
            break;
        }
        case TheoremMode::star: {
            if (w.grade() != n - k) throw std::invalid_argument("star: form grade must be n-k");
            rep.lhs = integrate(hodge_perp(a), w);
            rep.rhs = integrate(a, star_form(w));
            break;
        }
    }
    rep.residual = std::fabs(rep.lhs - rep.rhs);
    return rep;
}

ElementChain quantize_form(const FormJet& w, const PolyChain& region_cubes, int depth) {
    if (w.dim() != region_cubes.dim())
        throw std::invalid_argument("quantize_form: dimension mismatch");
    if (region_cubes.grade() != region_cubes.dim())
        throw std::invalid_argument("quantize_form: region must be a chain of n-cubes");
    const PolyChain fine = subdivide(region_cubes, depth);
    ElementChain out(w.dim(), w.grade());
    for (const auto& [a, c] : fine.terms()) {
        const Vec mid = c.midpoint();
        out.accumulate(mid, sharp(w.jet(mid, 0)) * (a * c.measure()));
    }
    return out;
}

double inner_product_integral(const FormJet& eta, const FormJet& omega,
                              const PolyChain& region_cubes, int quad_degree) {
    if (eta.grade() != omega.grade() || eta.dim() != omega.dim())
        throw std::invalid_argument("inner_product_integral: form mismatch");
    std::vector<double> parts;
    for (const auto& [a, c] : region_cubes.terms()) {
        double s = 0.0;
        for (const QuadPoint& q : cell_rule(c, quad_degree))
            s += q.w * inner(sharp(eta.jet(q.x, 0)), sharp(omega.jet(q.x, 0)));
        parts.push_back(a * s);
    }
    return pairwise_sum(parts);
}

}  // namespace chainlet
