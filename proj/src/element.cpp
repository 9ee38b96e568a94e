#include "chainlet/element.hpp"

#include <algorithm>
#include <cmath>

namespace chainlet {

int shuffle_sign(const MultiIndex& a, const MultiIndex& b) {
    // Count inversions between the two increasing lists.
    long inv = 0;
    for (int x : a)
        for (int y : b)
            if (x > y) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

int complement_sign(const MultiIndex& h, int n) {
    // Parity of (H, H^c) as a permutation of (1..n): sum (h_i - i).
    long s = 0;
    for (std::size_t i = 0; i < h.size(); ++i) s += h[i] - static_cast<long>(i + 1);
    return s % 2 == 0 ? 1 : -1;
}

MultiIndex complement(const MultiIndex& h, int n) {
    MultiIndex c;
    c.reserve(n - h.size());
    std::size_t pos = 0;
    for (int i = 1; i <= n; ++i) {
        if (pos < h.size() && h[pos] == i) {
            ++pos;
        } else {
            c.push_back(i);
        }
    }
    return c;
}

int Element::max_order() const {
    int m = 0;
    for (const auto& [key, c] : coeffs_) m = std::max(m, key_order(key));
    return m;
}

double Element::coeff(const ElemKey& key) const {
    auto it = coeffs_.find(key);
    return it == coeffs_.end() ? 0.0 : it->second;
}

void Element::accumulate(ElemKey key, double c) {
    if (c == 0.0) return;
    if (static_cast<int>(key.dir.size()) != k_)
        throw std::invalid_argument("Element: direction grade mismatch");
    std::sort(key.deriv.begin(), key.deriv.end());
    for (int i : key.deriv)
        if (i < 1 || i > n_) throw std::invalid_argument("Element: derivative index out of range");
    for (std::size_t i = 0; i < key.dir.size(); ++i) {
        if (key.dir[i] < 1 || key.dir[i] > n_)
            throw std::invalid_argument("Element: direction index out of range");
        if (i > 0 && key.dir[i] <= key.dir[i - 1])
            throw std::invalid_argument("Element: direction indices must strictly increase");
    }
    double& slot = coeffs_[key];
    slot += c;
    if (std::fabs(slot) <= kZeroTol) coeffs_.erase(key);
}

void Element::prune() {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (std::fabs(it->second) <= kZeroTol)
            it = coeffs_.erase(it);
        else
            ++it;
    }
}

Element& Element::operator*=(double s) {
    if (s == 0.0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [key, c] : coeffs_) c *= s;
    prune();
    return *this;
}

Element element_simple(int n, const std::vector<Vec>& edges) {
    const int k = static_cast<int>(edges.size());
    for (const Vec& v : edges)
        if (static_cast<int>(v.size()) != n)
            throw std::invalid_argument("element_simple: vector dimension mismatch");
    Element out(n, k);
    if (k > n) return out;  // no k-subsets of 1..n: the zero element
    // Enumerate k-subsets H of 1..n and take the minor on rows H.
    MultiIndex h(k);
    for (int i = 0; i < k; ++i) h[i] = i + 1;
    while (true) {
        Mat m(k, k);
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < k; ++c) m(r, c) = edges[c][h[r] - 1];
        out.accumulate(ElemKey{{}, h}, det(m));
        // next k-subset
        int i = k - 1;
        while (i >= 0 && h[i] == n - (k - 1 - i)) --i;
        if (i < 0) break;
        ++h[i];
        for (int j = i + 1; j < k; ++j) h[j] = h[j - 1] + 1;
    }
    out.prune();
    return out;
}

Element volume_element(int n) {
    Element v(n, n);
    MultiIndex full(n);
    for (int i = 0; i < n; ++i) full[i] = i + 1;
    v.accumulate(ElemKey{{}, full}, 1.0);
    return v;
}

Element scalar_element(int n, double value) {
    Element v(n, 0);
    v.accumulate(ElemKey{{}, {}}, value);
    return v;
}

Element combine(const Element& a, double s, const Element& b, double t) {
    if (a.dim() != b.dim()) throw std::invalid_argument("combine: dimension mismatch");
    if (a.grade() != b.grade()) throw std::invalid_argument("combine: grade mismatch");
    Element out(a.dim(), a.grade());
    for (const auto& [key, c] : a.coeffs()) out.accumulate(key, s * c);
    for (const auto& [key, c] : b.coeffs()) out.accumulate(key, t * c);
    out.prune();
    return out;
}

Coelement combine(const Coelement& a, double s, const Coelement& b, double t) {
    return Coelement(combine(a.rep(), s, b.rep(), t));
}

Element wedge(const Element& a, const Element& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("wedge: dimension mismatch");
    const int n = a.dim();
    const int k = a.grade() + b.grade();
    Element out(n, k);
    if (k > n) return out;  // grade overflow: the zero element
    for (const auto& [ka, ca] : a.coeffs()) {
        for (const auto& [kb, cb] : b.coeffs()) {
            // dir parts must be disjoint
            MultiIndex merged;
            merged.reserve(ka.dir.size() + kb.dir.size());
            std::merge(ka.dir.begin(), ka.dir.end(), kb.dir.begin(), kb.dir.end(),
                       std::back_inserter(merged));
            bool dup = false;
            for (std::size_t i = 0; i + 1 < merged.size(); ++i)
                if (merged[i] == merged[i + 1]) {
                    dup = true;
                    break;
                }
            if (dup) continue;
            const int sgn = shuffle_sign(ka.dir, kb.dir);
            DerivKey dmerged;
            dmerged.reserve(ka.deriv.size() + kb.deriv.size());
            std::merge(ka.deriv.begin(), ka.deriv.end(), kb.deriv.begin(), kb.deriv.end(),
                       std::back_inserter(dmerged));
            out.accumulate(ElemKey{dmerged, merged}, sgn * ca * cb);
        }
    }
    out.prune();
    return out;
}

double inner(const Element& a, const Element& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("inner: dimension mismatch");
    if (a.grade() != b.grade()) throw std::invalid_argument("inner: grade mismatch");
    double s = 0.0;
    const auto& ca = a.coeffs();
    const auto& cb = b.coeffs();
    auto ia = ca.begin();
    auto ib = cb.begin();
    while (ia != ca.end() && ib != cb.end()) {
        if (ia->first < ib->first)
            ++ia;
        else if (ib->first < ia->first)
            ++ib;
        else {
            s += ia->second * ib->second;
            ++ia;
            ++ib;
        }
    }
    return s;
}

double mass(const Element& a) { return std::sqrt(std::max(0.0, inner(a, a))); }

Element hodge_perp(const Element& a) {
    const int n = a.dim();
    Element out(n, n - a.grade());
    for (const auto& [key, c] : a.coeffs()) {
        const int sgn = complement_sign(key.dir, n);
        out.accumulate(ElemKey{key.deriv, complement(key.dir, n)}, sgn * c);
    }
    out.prune();
    return out;
}

Element boundary(const Element& a) {
    const int n = a.dim();
    if (a.grade() == 0) return Element(n, 0);
    Element out(n, a.grade() - 1);
    for (const auto& [key, c] : a.coeffs()) {
        for (std::size_t i = 0; i < key.dir.size(); ++i) {
            DerivKey d = key.deriv;
            d.push_back(key.dir[i]);
            MultiIndex h;
            h.reserve(key.dir.size() - 1);
            for (std::size_t j = 0; j < key.dir.size(); ++j)
                if (j != i) h.push_back(key.dir[j]);
            out.accumulate(ElemKey{std::move(d), std::move(h)}, (i % 2 == 0 ? 1.0 : -1.0) * c);
        }
    }
    out.prune();
    return out;
}

Element nabla(const Vec& u, const Element& a) {
    if (static_cast<int>(u.size()) != a.dim())
        throw std::invalid_argument("nabla: dimension mismatch");
    Element out(a.dim(), a.grade());
    for (const auto& [key, c] : a.coeffs()) {
        for (int m = 1; m <= a.dim(); ++m) {
            if (u[m - 1] == 0.0) continue;
            DerivKey d = key.deriv;
            d.push_back(m);
            out.accumulate(ElemKey{std::move(d), key.dir}, u[m - 1] * c);
        }
    }
    out.prune();
    return out;
}

Element coboundary(const Element& a) { return hodge_perp(boundary(hodge_perp(a))); }

Element laplace(const Element& a) {
    return add(boundary(coboundary(a)), coboundary(boundary(a)));
}

Element derived_product(ProductKind kind, const Element& a, const Element& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("derived_product: dimension mismatch");
    switch (kind) {
        case ProductKind::cross:
            return hodge_perp(wedge(a, b));
        case ProductKind::interior:
            return hodge_perp(wedge(b, hodge_perp(a)));
        case ProductKind::intersection:
            return hodge_perp(wedge(hodge_perp(a), hodge_perp(b)));
        case ProductKind::projection: {
            const Element step = hodge_perp(derived_product(ProductKind::intersection,
                                                            hodge_perp(b), a));
            return derived_product(ProductKind::intersection, step, a);
        }
    }
    throw std::logic_error("derived_product: unknown kind");
}

Element pushforward_linear(const Mat& L, const Element& a) {
    if (static_cast<int>(L.cols) != a.dim())
        throw std::invalid_argument("pushforward_linear: dimension mismatch");
    const int m = static_cast<int>(L.rows);
    Element out(m, a.grade());
    if (a.grade() > m) return out;  // grade overflow: the zero element
    for (const auto& [key, c] : a.coeffs()) {
        // Direction part: image coefficients are minors of L's columns H.
        std::vector<Vec> cols;
        cols.reserve(key.dir.size());
        for (int h : key.dir) {
            Vec col(m);
            for (int r = 0; r < m; ++r) col[r] = L(r, h - 1);
            cols.push_back(std::move(col));
        }
        Element dir_part = element_simple(m, cols);
        // Derivative part: each slot d maps to sum_i L(i,d) nabla_{e_i},
        // expanded as a product over the multiset.
        std::vector<std::pair<DerivKey, double>> expansion = {{DerivKey{}, 1.0}};
        for (int d : key.deriv) {
            std::vector<std::pair<DerivKey, double>> next;
            for (const auto& [dk, w] : expansion) {
                for (int i = 1; i <= m; ++i) {
                    const double lv = L(i - 1, d - 1);
                    if (lv == 0.0) continue;
                    DerivKey nd = dk;
                    nd.push_back(i);
                    next.emplace_back(std::move(nd), w * lv);
                }
            }
            expansion = std::move(next);
        }
        for (const auto& [dk, w] : expansion) {
            for (const auto& [dkey, dc] : dir_part.coeffs()) {
                DerivKey merged = dk;
                out.accumulate(ElemKey{merged, dkey.dir}, c * w * dc);
            }
        }
    }
    out.prune();
    return out;
}

double pair(const Coelement& g, const Element& a) {
    if (g.dim() != a.dim()) throw std::invalid_argument("pair: dimension mismatch");
    if (g.grade() != a.grade()) return 0.0;
    return inner(g.rep(), a);
}

Coelement d_co(const Coelement& g) {
    const int n = g.dim();
    const int k = g.grade();
    Coelement out(n, k + 1);
    if (k + 1 > n) return out;
    // Adjoint of boundary: (d g)[K] = sum over g-keys reachable as a boundary
    // term of the candidate key K.
    for (const auto& [key, c] : g.coeffs()) {
        if (key.deriv.empty()) continue;  // order-0 components map to zero
        int prev = 0;
        for (std::size_t s = 0; s < key.deriv.size(); ++s) {
            const int d = key.deriv[s];
            if (d == prev) continue;  // distinct slot values only
            prev = d;
            if (std::binary_search(key.dir.begin(), key.dir.end(), d)) continue;
            DerivKey dk;
            dk.reserve(key.deriv.size() - 1);
            bool removed = false;
            for (int x : key.deriv) {
                if (!removed && x == d) {
                    removed = true;
                    continue;
                }
                dk.push_back(x);
            }
            MultiIndex h = key.dir;
            auto pos = std::lower_bound(h.begin(), h.end(), d);
            const int idx = static_cast<int>(pos - h.begin());
            h.insert(pos, d);
            out.accumulate(ElemKey{std::move(dk), std::move(h)},
                           (idx % 2 == 0 ? 1.0 : -1.0) * c);
        }
    }
    out.prune();
    return out;
}

Coelement star_co(const Coelement& g) {
    const int n = g.dim();
    Coelement out(n, n - g.grade());
    for (const auto& [key, c] : g.coeffs()) {
        const MultiIndex h = complement(key.dir, n);
        out.accumulate(ElemKey{key.deriv, h}, complement_sign(h, n) * c);
    }
    out.prune();
    return out;
}

Coelement pullback_linear(const Mat& L, const Coelement& g) {
    // (L* g)(e_K) = g(L_* e_K), enumerated over candidate keys K in the
    // source algebra of matching grade and orders.
    const int n_src = static_cast<int>(L.cols);
    const int k = g.grade();
    Coelement out(n_src, k);
    if (k > n_src) return out;
    std::vector<int> orders;
    {
        int prev = -1;
        for (const auto& [key, c] : g.coeffs()) {
            (void)c;
            const int j = key_order(key);
            if (j != prev) orders.push_back(j), prev = j;
        }
        std::sort(orders.begin(), orders.end());
        orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
    }
    // Enumerate increasing k-subsets of 1..n_src.
    std::vector<MultiIndex> subsets;
    MultiIndex h(k);
    for (int i = 0; i < k; ++i) h[i] = i + 1;
    if (k == 0) subsets.push_back({});
    while (k > 0) {
        subsets.push_back(h);
        int i = k - 1;
        while (i >= 0 && h[i] == n_src - (k - 1 - i)) --i;
        if (i < 0) break;
        ++h[i];
        for (int j = i + 1; j < k; ++j) h[j] = h[j - 1] + 1;
    }
    // Enumerate non-decreasing derivative multisets of a given order.
    auto for_each_multiset = [&](int order, auto&& fn) {
        DerivKey d(order, 1);
        if (order == 0) {
            fn(DerivKey{});
            return;
        }
        while (true) {
            fn(d);
            int i = order - 1;
            while (i >= 0 && d[i] == n_src) --i;
            if (i < 0) break;
            ++d[i];
            for (int j = i + 1; j < order; ++j) d[j] = d[i];
        }
    };
    for (int j : orders) {
        for_each_multiset(j, [&](const DerivKey& d) {
            for (const MultiIndex& hh : subsets) {
                Element basis(n_src, k);
                basis.accumulate(ElemKey{d, hh}, 1.0);
                const double v = pair(g, pushforward_linear(L, basis));
                if (v != 0.0) out.accumulate(ElemKey{d, hh}, v);
            }
        });
    }
    out.prune();
    return out;
}

Coelement nabla_co(const Vec& u, const Coelement& g) {
    // Adjoint of nabla: strip one derivative slot weighted by u.
    Coelement out(g.dim(), g.grade());
    for (const auto& [key, c] : g.coeffs()) {
        int prev = 0;
        for (int d : key.deriv) {
            if (d == prev) continue;
            prev = d;
            if (u[d - 1] == 0.0) continue;
            DerivKey dk;
            bool removed = false;
            for (int x : key.deriv) {
                if (!removed && x == d) {
                    removed = true;
                    continue;
                }
                dk.push_back(x);
            }
            out.accumulate(ElemKey{std::move(dk), key.dir}, u[d - 1] * c);
        }
    }
    out.prune();
    return out;
}

Coelement flat(const Element& a) { return Coelement(a); }
Element sharp(const Coelement& g) { return g.rep(); }

double norm_order(const Element& a, int j) {
    double s = 0.0;
    for (const auto& [key, c] : a.coeffs())
        if (key_order(key) == j) s += std::fabs(c);
    return s;
}

double norm_total(const Element& a) {
    double s = 0.0;
    for (const auto& [key, c] : a.coeffs()) s += std::fabs(c);
    return s;
}

double norm_order(const Coelement& g, int j) { return norm_order(g.rep(), j); }
double norm_total(const Coelement& g) { return norm_total(g.rep()); }

}  // namespace chainlet
