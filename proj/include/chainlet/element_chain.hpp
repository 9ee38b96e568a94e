#pragma once

#include <functional>
#include <map>
#include <vector>

#include "chainlet/element.hpp"
#include "chainlet/poly_chain.hpp"

namespace chainlet {

/// Differentiable map given by value and Jacobian closures.
struct MapDiff {
    int dim_from = 0;
    int dim_to = 0;
    std::function<Vec(const Vec&)> value;
    std::function<Mat(const Vec&)> jacobian;
};

MapDiff identity_map(int n);
MapDiff linear_map(const Mat& A);

/// Point-indexed element chain A = sum a_i alpha_{p_i}; entries merge on
/// exact point match.  Coefficients are folded into the elements.
class ElementChain {
  public:
    ElementChain() = default;
    ElementChain(int n, int k) : n_(n), k_(k) {}

    int dim() const { return n_; }
    int grade() const { return k_; }
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }
    const std::map<Vec, Element>& entries() const { return entries_; }

    void accumulate(const Vec& p, const Element& e);

    ElementChain operator*(double s) const;
    ElementChain operator+(const ElementChain& o) const;
    ElementChain operator-(const ElementChain& o) const;

    double total_mass() const;  // sum of entry masses

  private:
    int n_ = 0;
    int k_ = 0;
    std::map<Vec, Element> entries_;
};

/// Apply an element operator entry-wise (boundary, perp, nabla, ...).
ElementChain apply_pointwise(const ElementChain& a,
                             const std::function<Element(const Element&)>& op);

ElementChain boundary(const ElementChain& a);
ElementChain hodge_perp(const ElementChain& a);

/// f_* on discrete chains: each element is pushed through the Jacobian at its
/// base point and re-supported at f(p).
ElementChain pushforward(const MapDiff& f, const ElementChain& a);

/// f alpha_p := f(p) alpha_p.
ElementChain multiply_by_function(const std::function<double(const Vec&)>& f,
                                  const ElementChain& a);

/// One simple k-element per subdivided cell, placed at the cell midpoint with
/// the cell's mass and k-direction.
ElementChain element_approximation(const PolyChain& p, int depth);

}  // namespace chainlet
