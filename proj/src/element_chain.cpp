#include "chainlet/element_chain.hpp"

#include <stdexcept>

namespace chainlet {

MapDiff identity_map(int n) {
    return MapDiff{n, n, [](const Vec& p) { return p; },
                   [n](const Vec&) { return Mat::identity(n); }};
}

MapDiff linear_map(const Mat& A) {
    return MapDiff{static_cast<int>(A.cols), static_cast<int>(A.rows),
                   [A](const Vec& p) { return A.apply(p); }, [A](const Vec&) { return A; }};
}

void ElementChain::accumulate(const Vec& p, const Element& e) {
    if (static_cast<int>(p.size()) != n_ || e.dim() != n_ || e.grade() != k_)
        throw std::invalid_argument("ElementChain: dimension/grade mismatch");
    if (e.is_zero()) return;
    auto it = entries_.find(p);
    if (it == entries_.end()) {
        entries_.emplace(p, e);
    } else {
        it->second = add(it->second, e);
        if (it->second.is_zero()) entries_.erase(it);
    }
}

ElementChain ElementChain::operator*(double s) const {
    ElementChain r(n_, k_);
    if (s != 0.0)
        for (const auto& [p, e] : entries_) r.accumulate(p, e * s);
    return r;
}

ElementChain ElementChain::operator+(const ElementChain& o) const {
    ElementChain r = *this;
    for (const auto& [p, e] : o.entries()) r.accumulate(p, e);
    return r;
}

ElementChain ElementChain::operator-(const ElementChain& o) const {
    ElementChain r = *this;
    for (const auto& [p, e] : o.entries()) r.accumulate(p, e * -1.0);
    return r;
}

double ElementChain::total_mass() const {
    std::vector<double> parts;
    parts.reserve(entries_.size());
    for (const auto& [p, e] : entries_) {
        (void)p;
        parts.push_back(mass(e));
    }
    return pairwise_sum(parts);
}

ElementChain apply_pointwise(const ElementChain& a,
                             const std::function<Element(const Element&)>& op) {
    ElementChain out;
    bool first = true;
    for (const auto& [p, e] : a.entries()) {
        Element img = op(e);
        if (first) {
            out = ElementChain(a.dim(), img.grade());
            first = false;
        }
        out.accumulate(p, img);
    }
    if (first) return ElementChain(a.dim(), a.grade());
    return out;
}

ElementChain boundary(const ElementChain& a) {
    ElementChain out(a.dim(), a.grade() > 0 ? a.grade() - 1 : 0);
    for (const auto& [p, e] : a.entries()) out.accumulate(p, boundary(e));
    return out;
}

ElementChain hodge_perp(const ElementChain& a) {
    ElementChain out(a.dim(), a.dim() - a.grade());
    for (const auto& [p, e] : a.entries()) out.accumulate(p, hodge_perp(e));
    return out;
}

ElementChain pushforward(const MapDiff& f, const ElementChain& a) {
    if (!f.value || !f.jacobian) throw std::invalid_argument("pushforward: map incomplete");
    if (f.dim_from != a.dim()) throw std::invalid_argument("pushforward: dimension mismatch");
    ElementChain out(f.dim_to, a.grade());
    for (const auto& [p, e] : a.entries())
        out.accumulate(f.value(p), pushforward_linear(f.jacobian(p), e));
    return out;
}

ElementChain multiply_by_function(const std::function<double(const Vec&)>& f,
                                  const ElementChain& a) {
    ElementChain out(a.dim(), a.grade());
    for (const auto& [p, e] : a.entries()) out.accumulate(p, e * f(p));
    return out;
}

ElementChain element_approximation(const PolyChain& p, int depth) {
    const PolyChain fine = subdivide(p, depth);
    ElementChain out(p.dim(), p.grade());
    for (const auto& [a, c] : fine.terms()) out.accumulate(c.midpoint(), c.direction() * a);
    return out;
}

}  // namespace chainlet
