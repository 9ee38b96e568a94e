#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chainlet/element.hpp"
#include "chainlet/element_chain.hpp"

namespace chainlet {

/// Polynomial in n variables as a sparse list of monomials.
struct Monomial {
    std::vector<int> exps;
    double c = 0.0;
};

class Polynomial {
  public:
    Polynomial() = default;
    Polynomial(int n, std::vector<Monomial> terms);

    int vars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::vector<Monomial>& terms() const { return terms_; }
    int degree() const;

    double eval(const Vec& p) const;
    Polynomial derivative(int axis) const;  // axis in 1..n
    Polynomial derivative(const DerivKey& slots) const;

  private:
    int n_ = 0;
    std::vector<Monomial> terms_;
};

enum class JetProvenance { analytic, finite_difference, pulled_back };

/// A differential k-form as a point-indexed jet of coelements: the order-j
/// component at p acts on order-j differential k-elements.  Analytic forms
/// differentiate their coefficient functions exactly; a finite-difference
/// evaluator is available as a fallback oracle.
class FormJet {
  public:
    FormJet() = default;
    FormJet(int n, int k, std::function<Coelement(const Vec&, int)> eval,
            JetProvenance prov = JetProvenance::analytic);

    int dim() const { return n_; }
    int grade() const { return k_; }
    JetProvenance provenance() const { return prov_; }

    Coelement jet(const Vec& p, int order) const;

    /// Caller-certified upper bound on the r-natural form norm, when known.
    std::optional<double> certified_norm(int r) const;
    void certify_norm(int r, double value);

  private:
    int n_ = 0, k_ = 0;
    std::function<Coelement(const Vec&, int)> eval_;
    JetProvenance prov_ = JetProvenance::analytic;
    std::map<int, double> certified_;
};

/// Polynomial form: one polynomial coefficient per increasing index set H.
class PolyForm {
  public:
    PolyForm() = default;
    PolyForm(int n, int k) : n_(n), k_(k) {}

    int dim() const { return n_; }
    int grade() const { return k_; }
    const std::map<MultiIndex, Polynomial>& comps() const { return comps_; }

    void set(MultiIndex h, Polynomial p);
    Coelement jet(const Vec& p, int order) const;
    FormJet to_jet() const;

    PolyForm d() const;     // symbolic exterior derivative
    PolyForm star() const;  // symbolic Hodge star (adjoint of perp)

  private:
    int n_ = 0, k_ = 0;
    std::map<MultiIndex, Polynomial> comps_;
};

/// Factory for the form DSL: terms are (H, polynomial coefficient).
PolyForm form_polynomial(int n, int k,
                         const std::vector<std::pair<MultiIndex, Polynomial>>& terms);

/// The volume form dx^1...dx^n.
PolyForm volume_form(int n);

/// Constant form with the given coelement value everywhere.
FormJet constant_form(const Coelement& value);

/// Constant direction form flat(eta) for a unit simple eta; certified
/// |.|-natural norm 1 at every order.
FormJet direction_form(const Element& unit_direction);

// ---- jet-level operators ----------------------------------------------------

FormJet d_form(const FormJet& w);
FormJet star_form(const FormJet& w);

/// Chainlet pullback through a differentiable map: jets are pulled back
/// through the pointwise Jacobian, the exact adjoint of the discrete
/// pushforward.
FormJet pullback_form(const MapDiff& f, const FormJet& w);

/// f * omega for a scalar field f (adjoint of multiply_by_function).
FormJet multiply_form(const std::function<double(const Vec&)>& f, const FormJet& w);

/// Finite-difference jet oracle: order-j jets of an order-0 evaluator by
/// iterated central differences with step h.
FormJet finite_difference_jets(int n, int k, std::function<Coelement(const Vec&)> order0,
                               double h = 1e-4);

/// Sampled lower estimate of the order-j form seminorm over a box region;
/// deterministic in (seed, budget) and monotone non-decreasing in budget.
double form_norm_estimate(const FormJet& w, const Vec& lo, const Vec& hi, int order,
                          int sample_budget, unsigned seed = 2005);

}  // namespace chainlet
