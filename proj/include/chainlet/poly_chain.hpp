#pragma once

#include <utility>
#include <vector>

#include "chainlet/cell.hpp"
#include "chainlet/element.hpp"

namespace chainlet {

/// Formal linear combination of oriented cells, kept in canonical form:
/// like terms (same cell up to vertex/edge permutation, bitwise point
/// equality) are collected with permutation-parity signs, zero terms dropped.
class PolyChain {
  public:
    PolyChain() = default;
    PolyChain(int n, int k) : n_(n), k_(k) {}

    static PolyChain single(const Cell& c, double coeff = 1.0);

    int dim() const { return n_; }
    int grade() const { return k_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::vector<std::pair<double, Cell>>& terms() const { return terms_; }

    void append(const Cell& c, double coeff);
    void append(const PolyChain& other, double coeff = 1.0);

    PolyChain operator*(double s) const;
    PolyChain operator+(const PolyChain& other) const;
    PolyChain operator-(const PolyChain& other) const;

  private:
    int n_ = 0;
    int k_ = 0;
    std::vector<std::pair<double, Cell>> terms_;
};

PolyChain canonicalize(const PolyChain& p);

PolyChain boundary_chain(const PolyChain& p);

/// Sum of |a_i| m(sigma_i) over the terms; valid when the representative is
/// non-overlapping (true for every construction in this library).
double mass_chain(const PolyChain& p);

PolyChain subdivide(const PolyChain& p, int depth);

Element vec_of(const PolyChain& p);

PolyChain affine_transform(const PolyChain& p, const Mat& A, const Vec& b);
PolyChain translate(const PolyChain& p, const Vec& v);

/// Linear contraction/expansion about the origin by factor lambda.
PolyChain scale_map(const PolyChain& p, double lambda);

}  // namespace chainlet
