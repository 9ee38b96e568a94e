#include "chainlet/form.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace chainlet {

Polynomial::Polynomial(int n, std::vector<Monomial> terms) : n_(n) {
    std::map<std::vector<int>, double> acc;
    for (Monomial& m : terms) {
        if (static_cast<int>(m.exps.size()) != n)
            throw std::invalid_argument("Polynomial: exponent arity mismatch");
        for (int e : m.exps)
            if (e < 0) throw std::invalid_argument("Polynomial: negative exponent");
        acc[m.exps] += m.c;
    }
    for (auto& [e, c] : acc)
        if (c != 0.0) terms_.push_back(Monomial{e, c});
}

int Polynomial::degree() const {
    int d = 0;
    for (const Monomial& m : terms_) {
        int s = 0;
        for (int e : m.exps) s += e;
        d = std::max(d, s);
    }
    return d;
}

double Polynomial::eval(const Vec& p) const {
    double s = 0.0;
    for (const Monomial& m : terms_) {
        double t = m.c;
        for (int i = 0; i < n_; ++i)
            for (int e = 0; e < m.exps[i]; ++e) t *= p[i];
        s += t;
    }
    return s;
}

Polynomial Polynomial::derivative(int axis) const {
    std::vector<Monomial> out;
    for (const Monomial& m : terms_) {
        if (m.exps[axis - 1] == 0) continue;
        Monomial d = m;
        d.c *= d.exps[axis - 1];
        d.exps[axis - 1] -= 1;
        out.push_back(std::move(d));
    }
    return Polynomial(n_, std::move(out));
}

Polynomial Polynomial::derivative(const DerivKey& slots) const {
    Polynomial p = *this;
    for (int s : slots) p = p.derivative(s);
    return p;
}

FormJet::FormJet(int n, int k, std::function<Coelement(const Vec&, int)> eval, JetProvenance prov)
    : n_(n), k_(k), eval_(std::move(eval)), prov_(prov) {}

Coelement FormJet::jet(const Vec& p, int order) const {
    if (!eval_) return Coelement(n_, k_);
    if (static_cast<int>(p.size()) != n_)
        throw std::invalid_argument("FormJet: point dimension mismatch");
    return eval_(p, order);
}

std::optional<double> FormJet::certified_norm(int r) const {
    auto it = certified_.find(r);
    if (it == certified_.end()) return std::nullopt;
    return it->second;
}

void FormJet::certify_norm(int r, double value) { certified_[r] = value; }

void PolyForm::set(MultiIndex h, Polynomial p) {
    if (static_cast<int>(h.size()) != k_) throw std::invalid_argument("PolyForm: index grade mismatch");
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (h[i] < 1 || h[i] > n_) throw std::invalid_argument("PolyForm: index out of range");
        if (i > 0 && h[i] <= h[i - 1])
            throw std::invalid_argument("PolyForm: index must strictly increase");
    }
    if (p.vars() != n_) throw std::invalid_argument("PolyForm: polynomial arity mismatch");
    if (p.is_zero())
        comps_.erase(h);
    else
        comps_[std::move(h)] = std::move(p);
}

Coelement PolyForm::jet(const Vec& p, int order) const {
    // gamma^j coordinates: the j-fold directional derivative of each
    // coefficient function, one slot per derivative multiset.
    Coelement out(n_, k_);
    if (order < 0) return out;
    DerivKey d(order, 1);
    auto emit = [&](const DerivKey& dk) {
        for (const auto& [h, poly] : comps_) {
            const double v = poly.derivative(dk).eval(p);
            if (v != 0.0) out.accumulate(ElemKey{dk, h}, v);
        }
    };
    if (order == 0) {
        emit({});
        return out;
    }
    while (true) {
        emit(d);
        int i = order - 1;
        while (i >= 0 && d[i] == n_) --i;
        if (i < 0) break;
        ++d[i];
        for (int j = i + 1; j < order; ++j) d[j] = d[i];
    }
    out.prune();
    return out;
}

FormJet PolyForm::to_jet() const {
    PolyForm self = *this;
    return FormJet(n_, k_, [self](const Vec& p, int order) { return self.jet(p, order); },
                   JetProvenance::analytic);
}

PolyForm PolyForm::d() const {
    PolyForm out(n_, k_ + 1);
    if (k_ + 1 > n_) return out;
    std::map<MultiIndex, std::map<std::vector<int>, double>> acc;
    for (const auto& [h, poly] : comps_) {
        for (int i = 1; i <= n_; ++i) {
            if (std::binary_search(h.begin(), h.end(), i)) continue;
            const Polynomial dp = poly.derivative(i);
            if (dp.is_zero()) continue;
            MultiIndex hh = h;
            auto pos = std::lower_bound(hh.begin(), hh.end(), i);
            const int idx = static_cast<int>(pos - hh.begin());
            hh.insert(pos, i);
            const double sgn = idx % 2 == 0 ? 1.0 : -1.0;
            for (const Monomial& m : dp.terms()) acc[hh][m.exps] += sgn * m.c;
        }
    }
    for (auto& [h, mono] : acc) {
        std::vector<Monomial> terms;
        for (auto& [e, c] : mono)
            if (c != 0.0) terms.push_back(Monomial{e, c});
        if (!terms.empty()) out.set(h, Polynomial(n_, std::move(terms)));
    }
    return out;
}

PolyForm PolyForm::star() const {
    PolyForm out(n_, n_ - k_);
    for (const auto& [h, poly] : comps_) {
        const MultiIndex hc = complement(h, n_);
        std::vector<Monomial> terms = poly.terms();
        const double sgn = complement_sign(hc, n_);
        for (Monomial& m : terms) m.c *= sgn;
        out.set(hc, Polynomial(n_, std::move(terms)));
    }
    return out;
}

PolyForm form_polynomial(int n, int k,
                         const std::vector<std::pair<MultiIndex, Polynomial>>& terms) {
    PolyForm f(n, k);
    for (const auto& [h, p] : terms) f.set(h, p);
    return f;
}

PolyForm volume_form(int n) {
    MultiIndex full(n);
    for (int i = 0; i < n; ++i) full[i] = i + 1;
    PolyForm f(n, n);
    f.set(full, Polynomial(n, {Monomial{std::vector<int>(n, 0), 1.0}}));
    return f;
}

FormJet constant_form(const Coelement& value) {
    const int n = value.dim();
    const int k = value.grade();
    FormJet w(n, k,
              [value, n, k](const Vec&, int order) {
                  if (order == 0) return value;
                  return Coelement(n, k);
              },
              JetProvenance::analytic);
    return w;
}

FormJet direction_form(const Element& unit_direction) {
    FormJet w = constant_form(flat(unit_direction));
    // Constant simple coelement of unit comass: every order norm above zero
    // vanishes, so the r-natural norm is 1 for every r.
    for (int r = 0; r <= 8; ++r) w.certify_norm(r, 1.0);
    return w;
}

FormJet d_form(const FormJet& w) {
    return FormJet(w.dim(), w.grade() + 1,
                   [w](const Vec& p, int order) { return d_co(w.jet(p, order + 1)); },
                   w.provenance());
}

FormJet star_form(const FormJet& w) {
    return FormJet(w.dim(), w.dim() - w.grade(),
                   [w](const Vec& p, int order) { return star_co(w.jet(p, order)); },
                   w.provenance());
}

FormJet pullback_form(const MapDiff& f, const FormJet& w) {
    if (!f.value || !f.jacobian) throw std::invalid_argument("pullback_form: map incomplete");
    if (f.dim_to != w.dim()) throw std::invalid_argument("pullback_form: dimension mismatch");
    const int n_src = f.dim_from;
    return FormJet(n_src, w.grade(),
                   [f, w](const Vec& p, int order) {
                       // build the source-order jet by pulling the matching
                       // target jet through the Jacobian at p
                       Coelement target = w.jet(f.value(p), order);
                       return pullback_linear(f.jacobian(p), target);
                   },
                   JetProvenance::pulled_back);
}

FormJet multiply_form(const std::function<double(const Vec&)>& f, const FormJet& w) {
    return FormJet(w.dim(), w.grade(),
                   [f, w](const Vec& p, int order) { return w.jet(p, order) * f(p); },
                   w.provenance());
}

FormJet finite_difference_jets(int n, int k, std::function<Coelement(const Vec&)> order0,
                               double h) {
    // order-j coordinates by iterated central differences of the order-0
    // coefficients along each derivative slot
    auto eval = [n, k, order0, h](const Vec& p, int order) {
        std::function<Coelement(const Vec&, const DerivKey&)> diff =
            [&](const Vec& q, const DerivKey& slots) -> Coelement {
            if (slots.empty()) return order0(q);
            DerivKey rest(slots.begin(), slots.end() - 1);
            const int axis = slots.back();
            Vec qp = q, qm = q;
            qp[axis - 1] += h;
            qm[axis - 1] -= h;
            return combine(diff(qp, rest), 0.5 / h, diff(qm, rest), -0.5 / h);
        };
        Coelement out(n, k);
        if (order == 0) return order0(p);
        DerivKey d(order, 1);
        while (true) {
            const Coelement c = diff(p, d);
            for (const auto& [key, v] : c.coeffs()) {
                if (!key.deriv.empty()) continue;  // order-0 coordinates only
                out.accumulate(ElemKey{d, key.dir}, v);
            }
            int i = order - 1;
            while (i >= 0 && d[i] == n) --i;
            if (i < 0) break;
            ++d[i];
            for (int j = i + 1; j < order; ++j) d[j] = d[i];
        }
        out.prune();
        return out;
    };
    return FormJet(n, k, eval, JetProvenance::finite_difference);
}

double form_norm_estimate(const FormJet& w, const Vec& lo, const Vec& hi, int order,
                          int sample_budget, unsigned seed) {
    const int n = w.dim();
    const int k = w.grade();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::normal_distribution<double> gauss(0.0, 1.0);
    double span = 0.0;
    for (int i = 0; i < n; ++i) span = std::max(span, hi[i] - lo[i]);

    auto random_point = [&]() {
        Vec p(n);
        for (int i = 0; i < n; ++i) p[i] = lo[i] + unit(rng) * (hi[i] - lo[i]);
        return p;
    };
    auto inside = [&](const Vec& p) {
        for (int i = 0; i < n; ++i)
            if (p[i] < lo[i] || p[i] > hi[i]) return false;
        return true;
    };

    double best = 0.0;
    for (int s = 0; s < sample_budget; ++s) {
        // random unit simple k-direction
        std::vector<Vec> frame(k, Vec(n));
        for (int j = 0; j < k; ++j)
            for (int i = 0; i < n; ++i) frame[j][i] = gauss(rng);
        Element alpha = element_simple(n, frame);
        const double m = mass(alpha);
        if (m <= 1e-9) continue;
        alpha *= 1.0 / m;

        const Vec p = random_point();
        if (order == 0) {
            best = std::max(best, std::fabs(pair(w.jet(p, 0), alpha)));
            continue;
        }
        // difference element: 2^order signed translates through random
        // vectors, a fresh length scale per sample
        std::vector<Vec> u(order, Vec(n));
        double denom = 1.0;
        const double scale = span * std::pow(2.0, -static_cast<double>(s % 24));
        for (int j = 0; j < order; ++j) {
            double len = 0.0;
            for (int i = 0; i < n; ++i) {
                u[j][i] = gauss(rng);
                len += u[j][i] * u[j][i];
            }
            len = std::sqrt(len);
            for (int i = 0; i < n; ++i) u[j][i] *= scale / len;
            denom *= scale;
        }
        double val = 0.0;
        bool ok = true;
        for (int mask = 0; ok && mask < (1 << order); ++mask) {
            Vec q = p;
            int bits = 0;
            for (int j = 0; j < order; ++j)
                if ((mask >> j) & 1) {
                    q = add(q, u[j]);
                    ++bits;
                }
            if (!inside(q)) {
                ok = false;
                break;
            }
            val += (bits % 2 == 0 ? 1.0 : -1.0) * pair(w.jet(q, 0), alpha);
        }
        if (ok) best = std::max(best, std::fabs(val) / denom);
    }
    return best;
}

}  // namespace chainlet
