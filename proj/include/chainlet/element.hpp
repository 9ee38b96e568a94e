#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "chainlet/linalg.hpp"

namespace chainlet {

/// Coefficients below this threshold are pruned from canonical coordinate maps.
inline constexpr double kZeroTol = 1e-12;

/// Strictly increasing index set H = {h_1 < ... < h_k}, entries in 1..n.
using MultiIndex = std::vector<int>;

/// Non-decreasing multiset of directional-derivative slots, entries in 1..n.
/// The slots are unordered; the sorted form is the canonical representative.
using DerivKey = std::vector<int>;

struct ElemKey {
    DerivKey deriv;
    MultiIndex dir;
    auto operator<=>(const ElemKey&) const = default;
};

inline int key_order(const ElemKey& k) { return static_cast<int>(k.deriv.size()); }

/// Sign of the permutation sorting the concatenation (A, B) of two disjoint
/// increasing index sets into one increasing set.
int shuffle_sign(const MultiIndex& a, const MultiIndex& b);

/// Sign of the permutation (H, complement of H) of (1..n).
int complement_sign(const MultiIndex& h, int n);

MultiIndex complement(const MultiIndex& h, int n);

/// A chain of j-differential k-elements at a point: canonical coordinates in
/// the monomial basis nabla_{e_D} alpha(e_H).  Orders may mix; the grade k is
/// uniform across all keys.
class Element {
  public:
    Element() = default;
    Element(int n, int k) : n_(n), k_(k) {
        if (k < 0 || n < 0) throw std::invalid_argument("Element: negative dimension");
    }

    int dim() const { return n_; }
    int grade() const { return k_; }
    bool is_zero() const { return coeffs_.empty(); }
    int max_order() const;

    const std::map<ElemKey, double>& coeffs() const { return coeffs_; }
    double coeff(const ElemKey& key) const;

    /// Accumulates c into the coefficient at key; validates and canonicalizes
    /// the key (sorts deriv slots, requires dir strictly increasing of grade k).
    void accumulate(ElemKey key, double c);

    void prune();

    Element& operator*=(double s);
    Element operator*(double s) const {
        Element r(*this);
        r *= s;
        return r;
    }
    Element operator-() const { return *this * -1.0; }

  private:
    int n_ = 0;
    int k_ = 0;
    std::map<ElemKey, double> coeffs_;
};

/// Dual coordinates with the same canonical indexing as Element.
class Coelement {
  public:
    Coelement() = default;
    Coelement(int n, int k) : rep_(n, k) {}
    explicit Coelement(Element rep) : rep_(std::move(rep)) {}

    int dim() const { return rep_.dim(); }
    int grade() const { return rep_.grade(); }
    bool is_zero() const { return rep_.is_zero(); }
    int max_order() const { return rep_.max_order(); }
    const std::map<ElemKey, double>& coeffs() const { return rep_.coeffs(); }
    double coeff(const ElemKey& key) const { return rep_.coeff(key); }
    void accumulate(ElemKey key, double c) { rep_.accumulate(std::move(key), c); }
    void prune() { rep_.prune(); }
    Coelement operator*(double s) const { return Coelement(rep_ * s); }

    const Element& rep() const { return rep_; }

  private:
    Element rep_;
};

// ---- constructions -------------------------------------------------------

/// Simple k-element alpha(V^k): coefficient of e_H is the k x k minor of the
/// edge matrix on rows H.  A linearly dependent list yields the zero element.
Element element_simple(int n, const std::vector<Vec>& edges);

/// Order-0 volume element alpha(e_1,...,e_n).
Element volume_element(int n);

/// The unit 0-element at a point (coefficient 1 on the empty key).
Element scalar_element(int n, double value = 1.0);

// ---- vector-space structure ----------------------------------------------

Element combine(const Element& a, double s, const Element& b, double t);
inline Element add(const Element& a, const Element& b) { return combine(a, 1.0, b, 1.0); }
inline Element sub(const Element& a, const Element& b) { return combine(a, 1.0, b, -1.0); }

Coelement combine(const Coelement& a, double s, const Coelement& b, double t);
inline Coelement add(const Coelement& a, const Coelement& b) { return combine(a, 1.0, b, 1.0); }

// ---- products and operators ----------------------------------------------

Element wedge(const Element& a, const Element& b);
double inner(const Element& a, const Element& b);
double mass(const Element& a);
Element hodge_perp(const Element& a);
Element boundary(const Element& a);
Element nabla(const Vec& u, const Element& a);

/// Geometric coboundary on elements, composed as perp . boundary . perp.
Element coboundary(const Element& a);

/// Laplace operator (boundary + coboundary)^2 = boundary.coboundary + coboundary.boundary.
Element laplace(const Element& a);

enum class ProductKind { cross, interior, intersection, projection };
Element derived_product(ProductKind kind, const Element& a, const Element& b);

/// Pushforward through a linear map: each basis direction and derivative slot
/// is mapped through L and the result expanded multilinearly.  L may be
/// rectangular (rows = target dimension, cols = source dimension).
Element pushforward_linear(const Mat& L, const Element& a);

// ---- coelement side --------------------------------------------------------

/// Evaluation gamma(alpha): dot product over matching keys.  Mismatched order
/// or grade contributes zero.
double pair(const Coelement& g, const Element& a);

/// Exterior derivative, the adjoint of the element boundary operator.
Coelement d_co(const Coelement& g);

/// Hodge star, the adjoint of perp.
Coelement star_co(const Coelement& g);

/// Linear pullback L* gamma (A) := gamma(L_* A).  L may be rectangular.
Coelement pullback_linear(const Mat& L, const Coelement& g);

/// Directional derivative of a coelement: adjoint of nabla on elements.
Coelement nabla_co(const Vec& u, const Coelement& g);

/// Riesz isomorphisms: in the declared-orthonormal monomial basis these copy
/// coordinates between the algebra and its dual.
Coelement flat(const Element& a);
Element sharp(const Coelement& g);

// ---- norms ------------------------------------------------------------------

/// Norm of the order-j part: sum of |c| over keys of order j (basis monomials
/// are unit difference elements).
double norm_order(const Element& a, int j);

/// Sum over orders of the order norms.
double norm_total(const Element& a);

double norm_order(const Coelement& g, int j);
double norm_total(const Coelement& g);

}  // namespace chainlet
