#include "chainlet/poly_chain.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace chainlet {

namespace {

/// Canonical key for like-term collection: cell kind plus its defining points
/// in a sorted order, with the parity sign of the sort.  Matching is exact
/// (bitwise) on coordinates; geometric coincidence of distinct
/// representations is not detected.
struct CellKey {
    int kind;  // 0 simplex, 1 parallelepiped
    std::vector<Vec> data;
    bool operator<(const CellKey& o) const {
        if (kind != o.kind) return kind < o.kind;
        return data < o.data;
    }
};

std::pair<CellKey, int> canonical_key(const Cell& c) {
    if (c.is_simplex()) {
        std::vector<Vec> pts = c.as_simplex().pts;
        // insertion-sort counting swaps for the permutation parity
        int swaps = 0;
        for (std::size_t i = 1; i < pts.size(); ++i)
            for (std::size_t j = i; j > 0 && pts[j] < pts[j - 1]; --j) {
                std::swap(pts[j], pts[j - 1]);
                ++swaps;
            }
        return {CellKey{0, std::move(pts)}, swaps % 2 == 0 ? 1 : -1};
    }
    const auto& p = c.as_parallelepiped();
    std::vector<Vec> data;
    data.push_back(p.base);
    std::vector<Vec> edges = p.edges;
    int swaps = 0;
    for (std::size_t i = 1; i < edges.size(); ++i)
        for (std::size_t j = i; j > 0 && edges[j] < edges[j - 1]; --j) {
            std::swap(edges[j], edges[j - 1]);
            ++swaps;
        }
    for (Vec& e : edges) data.push_back(std::move(e));
    return {CellKey{1, std::move(data)}, swaps % 2 == 0 ? 1 : -1};
}

}  // namespace

PolyChain PolyChain::single(const Cell& c, double coeff) {
    PolyChain p(c.dim(), c.grade());
    p.append(c, coeff);
    return p;
}

void PolyChain::append(const Cell& c, double coeff) {
    if (terms_.empty() && n_ == 0 && k_ == 0) {
        n_ = c.dim();
        k_ = c.grade();
    }
    if (c.dim() != n_ || c.grade() != k_)
        throw std::invalid_argument("PolyChain: cell dimension/grade mismatch");
    if (coeff != 0.0) terms_.emplace_back(coeff, c);
}

void PolyChain::append(const PolyChain& other, double coeff) {
    for (const auto& [a, c] : other.terms()) append(c, a * coeff);
}

PolyChain PolyChain::operator*(double s) const {
    PolyChain r(n_, k_);
    if (s != 0.0)
        for (const auto& [a, c] : terms_) r.append(c, a * s);
    return r;
}

PolyChain PolyChain::operator+(const PolyChain& other) const {
    PolyChain r = *this;
    r.append(other);
    return canonicalize(r);
}

PolyChain PolyChain::operator-(const PolyChain& other) const {
    PolyChain r = *this;
    r.append(other, -1.0);
    return canonicalize(r);
}

PolyChain canonicalize(const PolyChain& p) {
    std::map<CellKey, std::pair<double, Cell>> acc;
    for (const auto& [a, c] : p.terms()) {
        auto [key, sgn] = canonical_key(c);
        auto it = acc.find(key);
        if (it == acc.end()) {
            acc.emplace(std::move(key), std::make_pair(sgn * a, c));
        } else {
            it->second.first += sgn * a;
        }
    }
    PolyChain out(p.dim(), p.grade());
    for (auto& [key, entry] : acc) {
        (void)key;
        if (std::fabs(entry.first) > kZeroTol) {
            auto [ckey, sgn] = canonical_key(entry.second);
            (void)ckey;
            out.append(entry.second, entry.first * sgn);
        }
    }
    return out;
}

PolyChain boundary_chain(const PolyChain& p) {
    PolyChain out(p.dim(), p.grade() > 0 ? p.grade() - 1 : 0);
    if (p.grade() == 0) return out;
    for (const auto& [a, c] : p.terms())
        for (const auto& [s, f] : c.facets()) out.append(f, a * s);
    return canonicalize(out);
}

double mass_chain(const PolyChain& p) {
    std::vector<double> parts;
    parts.reserve(p.size());
    for (const auto& [a, c] : p.terms()) parts.push_back(std::fabs(a) * c.measure());
    return pairwise_sum(parts);
}

PolyChain subdivide(const PolyChain& p, int depth) {
    if (depth < 0) throw std::invalid_argument("subdivide: negative depth");
    PolyChain cur = p;
    for (int d = 0; d < depth; ++d) {
        PolyChain next(cur.dim(), cur.grade());
        for (const auto& [a, c] : cur.terms())
            for (const Cell& child : c.subdivide_once()) next.append(child, a);
        cur = std::move(next);
    }
    return cur;
}

Element vec_of(const PolyChain& p) {
    Element out(p.dim(), p.grade());
    for (const auto& [a, c] : p.terms()) out = combine(out, 1.0, c.direction(), a);
    return out;
}

PolyChain affine_transform(const PolyChain& p, const Mat& A, const Vec& b) {
    PolyChain out(static_cast<int>(A.rows), p.grade());
    for (const auto& [a, c] : p.terms()) out.append(c.transformed(A, b), a);
    return out;
}

PolyChain translate(const PolyChain& p, const Vec& v) {
    PolyChain out(p.dim(), p.grade());
    for (const auto& [a, c] : p.terms()) out.append(c.translated(v), a);
    return out;
}

PolyChain scale_map(const PolyChain& p, double lambda) {
    Mat A = Mat::identity(p.dim());
    for (std::size_t i = 0; i < A.rows; ++i) A(i, i) = lambda;
    return affine_transform(p, A, Vec(p.dim(), 0.0));
}

}  // namespace chainlet
