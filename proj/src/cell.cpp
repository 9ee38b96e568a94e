#include "chainlet/cell.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace chainlet {

namespace {

long factorial(int k) {
    long f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

/// Relative non-degeneracy: Gram volume against the product of edge norms.
bool edges_independent(const std::vector<Vec>& edges) {
    if (edges.empty()) return true;
    double scale = 1.0;
    for (const Vec& e : edges) {
        const double len = norm2(e);
        if (len == 0.0) return false;
        scale *= len;
    }
    return gram_volume(edges) / scale > 1e-10;
}

}  // namespace

Cell::Cell(Simplex s, int n) : n_(n), k_(static_cast<int>(s.pts.size()) - 1), shape_(std::move(s)) {}
Cell::Cell(Parallelepiped p, int n)
    : n_(n), k_(static_cast<int>(p.edges.size())), shape_(std::move(p)) {}

Cell Cell::simplex(std::vector<Vec> pts) {
    if (pts.empty()) throw std::invalid_argument("simplex: needs at least one vertex");
    const int n = static_cast<int>(pts[0].size());
    for (const Vec& p : pts)
        if (static_cast<int>(p.size()) != n) throw std::invalid_argument("simplex: mixed dimensions");
    return Cell(Simplex{std::move(pts)}, n);
}

Cell Cell::parallelepiped(Vec base, std::vector<Vec> edges) {
    const int n = static_cast<int>(base.size());
    for (const Vec& e : edges)
        if (static_cast<int>(e.size()) != n)
            throw std::invalid_argument("parallelepiped: mixed dimensions");
    return Cell(Parallelepiped{std::move(base), std::move(edges)}, n);
}

Cell Cell::point(Vec p) { return simplex({std::move(p)}); }

Cell make_simplex(std::vector<Vec> pts) {
    Cell c = Cell::simplex(std::move(pts));
    if (c.grade() > c.dim() || !edges_independent(c.spanning_edges()))
        throw std::invalid_argument("degenerate cell");
    return c;
}

Cell make_parallelepiped(Vec base, std::vector<Vec> edges) {
    Cell c = Cell::parallelepiped(std::move(base), std::move(edges));
    if (c.grade() > c.dim() || !edges_independent(c.as_parallelepiped().edges))
        throw std::invalid_argument("degenerate cell");
    return c;
}

std::vector<Vec> Cell::spanning_edges() const {
    if (is_simplex()) {
        const auto& s = as_simplex();
        std::vector<Vec> e;
        e.reserve(s.pts.size() - 1);
        for (std::size_t i = 1; i < s.pts.size(); ++i) e.push_back(sub(s.pts[i], s.pts[0]));
        return e;
    }
    return as_parallelepiped().edges;
}

double Cell::measure() const {
    if (k_ == 0) return 1.0;
    const double vol = gram_volume(spanning_edges());
    return is_simplex() ? vol / static_cast<double>(factorial(k_)) : vol;
}

Vec Cell::midpoint() const {
    if (is_simplex()) {
        const auto& s = as_simplex();
        Vec m(n_, 0.0);
        for (const Vec& p : s.pts) m = add(m, p);
        return scaled(m, 1.0 / static_cast<double>(s.pts.size()));
    }
    const auto& p = as_parallelepiped();
    Vec m = p.base;
    for (const Vec& e : p.edges) m = axpy(0.5, e, m);
    return m;
}

Element Cell::direction() const {
    if (k_ == 0) return scalar_element(n_);
    Element e = element_simple(n_, spanning_edges());
    if (is_simplex()) e *= 1.0 / static_cast<double>(factorial(k_));
    return e;
}

Element Cell::unit_direction() const {
    Element e = direction();
    const double m = mass(e);
    if (m == 0.0) return e;
    e *= 1.0 / m;
    return e;
}

Cell Cell::translated(const Vec& v) const {
    if (is_simplex()) {
        Simplex s = as_simplex();
        for (Vec& p : s.pts) p = add(p, v);
        return Cell(std::move(s), n_);
    }
    Parallelepiped p = as_parallelepiped();
    p.base = add(p.base, v);
    return Cell(std::move(p), n_);
}

Cell Cell::transformed(const Mat& A, const Vec& b) const {
    if (is_simplex()) {
        Simplex s = as_simplex();
        for (Vec& p : s.pts) p = add(A.apply(p), b);
        return Cell(std::move(s), static_cast<int>(A.rows));
    }
    Parallelepiped p = as_parallelepiped();
    p.base = add(A.apply(p.base), b);
    for (Vec& e : p.edges) e = A.apply(e);
    return Cell(std::move(p), static_cast<int>(A.rows));
}

std::vector<std::pair<double, Cell>> Cell::facets() const {
    std::vector<std::pair<double, Cell>> out;
    if (k_ == 0) return out;
    if (is_simplex()) {
        const auto& s = as_simplex();
        for (std::size_t i = 0; i < s.pts.size(); ++i) {
            std::vector<Vec> pts;
            pts.reserve(s.pts.size() - 1);
            for (std::size_t j = 0; j < s.pts.size(); ++j)
                if (j != i) pts.push_back(s.pts[j]);
            out.emplace_back(i % 2 == 0 ? 1.0 : -1.0, Cell::simplex(std::move(pts)));
        }
        return out;
    }
    const auto& p = as_parallelepiped();
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
        std::vector<Vec> edges;
        for (std::size_t j = 0; j < p.edges.size(); ++j)
            if (j != i) edges.push_back(p.edges[j]);
        const double sgn = i % 2 == 0 ? 1.0 : -1.0;
        out.emplace_back(sgn, Cell::parallelepiped(add(p.base, p.edges[i]), edges));
        out.emplace_back(-sgn, Cell::parallelepiped(p.base, edges));
    }
    return out;
}

namespace {

/// Children of the standard Kuhn simplex scaled by two: the lattice Kuhn
/// simplices of the unit grid that fit inside.  Returned in barycentric-free
/// coordinates (vertex j of the reference is e_1 + ... + e_j).
struct KuhnChild {
    std::vector<std::vector<int>> verts;  // k+1 lattice vertices in Z^k
    int sign;                             // permutation parity
};

std::vector<KuhnChild> kuhn_children(int k) {
    std::vector<KuhnChild> out;
    std::vector<int> base(k, 0);
    std::vector<int> perm(k);
    for (int i = 0; i < k; ++i) perm[i] = i;
    auto inside = [&](const std::vector<int>& x) {
        if (x[0] > 2 || x[k - 1] < 0) return false;
        for (int i = 0; i + 1 < k; ++i)
            if (x[i] < x[i + 1]) return false;
        return x[0] <= 2 && x[k - 1] >= 0;
    };
    // Enumerate base corners in {0,1}^k and vertex-insertion orders.
    for (int mask = 0; mask < (1 << k); ++mask) {
        for (int i = 0; i < k; ++i) base[i] = (mask >> i) & 1;
        std::sort(perm.begin(), perm.end());
        do {
            std::vector<std::vector<int>> verts = {base};
            bool ok = inside(base);
            int parity = 0;
            for (int i = 0; ok && i < k; ++i) {
                std::vector<int> v = verts.back();
                v[perm[i]] += 1;
                ok = inside(v);
                verts.push_back(std::move(v));
            }
            if (!ok) continue;
            // permutation parity
            parity = 0;
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j)
                    if (perm[i] > perm[j]) ++parity;
            out.push_back(KuhnChild{std::move(verts), parity % 2 == 0 ? 1 : -1});
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return out;
}

}  // namespace

std::vector<Cell> Cell::subdivide_once() const {
    std::vector<Cell> out;
    if (k_ == 0) {
        out.push_back(*this);
        return out;
    }
    if (!is_simplex()) {
        const auto& p = as_parallelepiped();
        std::vector<Vec> half;
        half.reserve(k_);
        for (const Vec& e : p.edges) half.push_back(scaled(e, 0.5));
        for (int mask = 0; mask < (1 << k_); ++mask) {
            Vec base = p.base;
            for (int i = 0; i < k_; ++i)
                if ((mask >> i) & 1) base = add(base, half[i]);
            out.push_back(Cell::parallelepiped(base, half));
        }
        return out;
    }
    // Edgewise subdivision through the Kuhn reference simplex: scale the
    // reference by two, tile with unit lattice Kuhn simplices, and map back.
    const auto& s = as_simplex();
    const std::vector<KuhnChild> children = kuhn_children(k_);
    // Reference vertex u_j = e_1 + ... + e_j maps to s.pts[j]; a lattice point
    // x in 2K maps through barycentric differences of x/2.
    auto map_point = [&](const std::vector<int>& x) {
        // coordinates x_1 >= x_2 >= ... ; point = v0 + sum (x_i/2)(v_i - v_0)
        Vec p = s.pts[0];
        for (int i = 0; i < k_; ++i)
            p = axpy(0.5 * x[i], sub(s.pts[i + 1], s.pts[0]), p);
        return p;
    };
    for (const KuhnChild& ch : children) {
        std::vector<Vec> pts;
        pts.reserve(k_ + 1);
        for (const auto& v : ch.verts) pts.push_back(map_point(v));
        if (ch.sign < 0 && k_ >= 1) std::swap(pts[k_ - 1], pts[k_]);
        out.push_back(Cell::simplex(std::move(pts)));
    }
    return out;
}

}  // namespace chainlet
