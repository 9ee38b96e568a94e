#include <cmath>
#include <stdexcept>

#include "chainlet/integrate.hpp"

namespace chainlet {

std::pair<std::vector<double>, std::vector<double>> gauss_legendre01(int m) {
    if (m < 1) throw std::invalid_argument("gauss_legendre01: m >= 1");
    std::vector<double> x(m), w(m);
    const double eps = 1e-15;
    for (int i = 0; i < (m + 1) / 2; ++i) {
        // Newton iteration on P_m from the Chebyshev initial guess.
        double r = std::cos(M_PI * (i + 0.75) / (m + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < m; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * r * p1 - j * p2) / (j + 1.0);
            }
            dp = m * (r * p0 - p1) / (r * r - 1.0);
            const double dr = p0 / dp;
            r -= dr;
            if (std::fabs(dr) < eps) break;
        }
        const double weight = 2.0 / ((1.0 - r * r) * dp * dp);
        x[i] = 0.5 * (1.0 - r);
        w[i] = 0.5 * weight;
        x[m - 1 - i] = 0.5 * (1.0 + r);
        w[m - 1 - i] = 0.5 * weight;
    }
    return {x, w};
}

namespace {

std::vector<QuadPoint> parallelepiped_rule(const Parallelepiped& p, double measure, int degree) {
    const int k = static_cast<int>(p.edges.size());
    const int m = degree / 2 + 1;
    auto [xs, ws] = gauss_legendre01(m);
    std::vector<QuadPoint> out;
    std::vector<int> idx(k, 0);
    while (true) {
        Vec x = p.base;
        double w = measure;
        for (int i = 0; i < k; ++i) {
            x = axpy(xs[idx[i]], p.edges[i], x);
            w *= ws[idx[i]];
        }
        out.push_back(QuadPoint{std::move(x), w});
        int i = 0;
        while (i < k && ++idx[i] == m) idx[i++] = 0;
        if (i == k || k == 0) break;
    }
    return out;
}

std::vector<QuadPoint> simplex_rule(const Simplex& s, double gram_vol, int degree) {
    const int k = static_cast<int>(s.pts.size()) - 1;
    if (k == 0) return {QuadPoint{s.pts[0], 1.0}};
    // Collapsed map from the unit cube: u_i = t_i * prod_{j<i} (1 - t_j),
    // with Jacobian prod (1 - t_i)^(k - 1 - i).  Each u_i is affine per axis,
    // so the mapped integrand has per-axis degree <= degree + k - 1.
    const int m = (degree + k) / 2 + 1;
    auto [xs, ws] = gauss_legendre01(m);
    std::vector<QuadPoint> out;
    std::vector<int> idx(k, 0);
    while (true) {
        double w = gram_vol;
        double rem = 1.0;
        Vec x = s.pts[0];
        for (int i = 0; i < k; ++i) {
            const double t = xs[idx[i]];
            const double u = t * rem;
            x = axpy(u, sub(s.pts[i + 1], s.pts[0]), x);
            w *= ws[idx[i]];
            // Jacobian factor (1 - t_i)^(k-1-i) folded in incrementally
            for (int e = 0; e < k - 1 - i; ++e) w *= (1.0 - t);
            rem *= (1.0 - t);
        }
        out.push_back(QuadPoint{std::move(x), w});
        int i = 0;
        while (i < k && ++idx[i] == m) idx[i++] = 0;
        if (i == k) break;
    }
    return out;
}

}  // namespace

std::vector<QuadPoint> cell_rule(const Cell& c, int degree) {
    if (c.grade() == 0) {
        const Vec p = c.is_simplex() ? c.as_simplex().pts[0] : c.as_parallelepiped().base;
        return {QuadPoint{p, 1.0}};
    }
    if (c.is_simplex()) return simplex_rule(c.as_simplex(), gram_volume(c.spanning_edges()), degree);
    return parallelepiped_rule(c.as_parallelepiped(), c.measure(), degree);
}

}  // namespace chainlet
