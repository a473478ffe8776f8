#pragma once

#include <algorithm>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "folia/polynomial.hpp"

namespace folia {

// Strictly increasing variable indices naming a basis k-form dz_{i1}^...^dz_{ik}.
using IndexTuple = std::vector<int>;

// Polynomial vector field: one component per variable.
class VectorField {
  public:
    explicit VectorField(int nvars)
        : nvars_(nvars), comps_(static_cast<size_t>(nvars), MultiPoly::zero(nvars)) {}
    VectorField(int nvars, std::vector<MultiPoly> comps) : nvars_(nvars), comps_(std::move(comps)) {
        if (static_cast<int>(comps_.size()) != nvars_)
            throw VarCountMismatch("vector field component count mismatch");
        for (const auto& c : comps_)
            if (c.nvars() != nvars_) throw VarCountMismatch("vector field component ring mismatch");
    }

    int nvars() const { return nvars_; }
    const MultiPoly& component(int i) const { return comps_[static_cast<size_t>(i)]; }
    const std::vector<MultiPoly>& components() const { return comps_; }

    bool is_zero() const {
        for (const auto& c : comps_)
            if (!c.is_zero()) return false;
        return true;
    }

    VectorField operator+(const VectorField& o) const {
        check(o);
        std::vector<MultiPoly> c;
        c.reserve(comps_.size());
        for (size_t i = 0; i < comps_.size(); ++i) c.push_back(comps_[i] + o.comps_[i]);
        return VectorField(nvars_, std::move(c));
    }
    VectorField operator-(const VectorField& o) const {
        check(o);
        std::vector<MultiPoly> c;
        c.reserve(comps_.size());
        for (size_t i = 0; i < comps_.size(); ++i) c.push_back(comps_[i] - o.comps_[i]);
        return VectorField(nvars_, std::move(c));
    }
    VectorField operator*(const Rational& s) const {
        std::vector<MultiPoly> c;
        c.reserve(comps_.size());
        for (const auto& x : comps_) c.push_back(x * s);
        return VectorField(nvars_, std::move(c));
    }
    bool operator==(const VectorField& o) const { return nvars_ == o.nvars_ && comps_ == o.comps_; }

    // Directional derivative v(f).
    MultiPoly apply(const MultiPoly& f) const {
        if (f.nvars() != nvars_) throw VarCountMismatch("field/function ring mismatch");
        MultiPoly r = MultiPoly::zero(nvars_);
        for (int i = 0; i < nvars_; ++i)
            r = r + comps_[static_cast<size_t>(i)] * f.partial_derivative(i);
        return r;
    }

  private:
    void check(const VectorField& o) const {
        if (nvars_ != o.nvars_) throw VarCountMismatch("vector field variable count mismatch");
    }
    int nvars_;
    std::vector<MultiPoly> comps_;
};

// The radial (Euler) field R = sum_i z_i d/dz_i.
inline VectorField radial_field(int nvars) {
    std::vector<MultiPoly> c;
    c.reserve(static_cast<size_t>(nvars));
    for (int i = 0; i < nvars; ++i) c.push_back(MultiPoly::variable(nvars, i));
    return VectorField(nvars, std::move(c));
}

// Exterior form of degree k with polynomial coefficients. Index tuples are
// kept strictly increasing; signs are normalized eagerly at insertion so
// equality is a plain map comparison. A k greater than nvars is allowed and
// forces the zero form.
class KForm {
  public:
    KForm(int nvars, int k) : nvars_(nvars), k_(k) {
        if (nvars < 0 || k < 0) throw std::invalid_argument("bad form parameters");
    }

    static KForm zero(int nvars, int k) { return KForm(nvars, k); }

    static KForm from_poly(const MultiPoly& p) {
        KForm f(p.nvars(), 0);
        if (!p.is_zero()) f.coeffs_[{}] = p;
        return f;
    }

    // Basis 1-form dz_i.
    static KForm d_var(int nvars, int i) {
        KForm f(nvars, 1);
        f.add_term({i}, MultiPoly::constant(nvars, Rational(1)));
        return f;
    }

    // Volume form dx0^dx1^dx2 in three variables.
    static KForm volume3() {
        KForm f(3, 3);
        f.add_term({0, 1, 2}, MultiPoly::constant(3, Rational(1)));
        return f;
    }

    int nvars() const { return nvars_; }
    int k() const { return k_; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::map<IndexTuple, MultiPoly>& coeffs() const { return coeffs_; }

    MultiPoly coeff(const IndexTuple& idx) const {
        auto it = coeffs_.find(idx);
        if (it == coeffs_.end()) return MultiPoly::zero(nvars_);
        return it->second;
    }

    // Adds coeff * dz_{idx}; idx in any order, duplicates annihilate. The
    // permutation sign is folded into the coefficient.
    void add_term(IndexTuple idx, MultiPoly c) {
        if (static_cast<int>(idx.size()) != k_) throw Error("index tuple length != form degree");
        if (c.nvars() != nvars_) throw VarCountMismatch("coefficient ring mismatch");
        if (c.is_zero()) return;
        int sign = 1;
        for (size_t i = 1; i < idx.size(); ++i) {
            size_t j = i;
            while (j > 0 && idx[j - 1] > idx[j]) {
                std::swap(idx[j - 1], idx[j]);
                sign = -sign;
                --j;
            }
        }
        for (size_t i = 0; i + 1 < idx.size(); ++i)
            if (idx[i] == idx[i + 1]) return;
        for (int i : idx)
            if (i < 0 || i >= nvars_) throw IndexOutOfRange("form index out of range");
        if (sign < 0) c = -c;
        auto it = coeffs_.find(idx);
        if (it == coeffs_.end()) {
            coeffs_.emplace(std::move(idx), std::move(c));
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    KForm operator+(const KForm& o) const {
        check_compatible(o);
        KForm r = *this;
        for (const auto& [idx, c] : o.coeffs_) r.add_term(idx, c);
        return r;
    }
    KForm operator-(const KForm& o) const {
        check_compatible(o);
        KForm r = *this;
        for (const auto& [idx, c] : o.coeffs_) r.add_term(idx, -c);
        return r;
    }
    KForm operator*(const MultiPoly& p) const {
        KForm r(nvars_, k_);
        if (p.is_zero()) return r;
        for (const auto& [idx, c] : coeffs_) {
            MultiPoly cp = c * p;
            if (!cp.is_zero()) r.coeffs_.emplace(idx, std::move(cp));
        }
        return r;
    }
    KForm operator*(const Rational& s) const {
        KForm r(nvars_, k_);
        if (folia::is_zero(s)) return r;
        for (const auto& [idx, c] : coeffs_) r.coeffs_.emplace(idx, c * s);
        return r;
    }
    KForm operator-() const { return *this * Rational(-1); }

    bool operator==(const KForm& o) const {
        return nvars_ == o.nvars_ && k_ == o.k_ && coeffs_ == o.coeffs_;
    }
    bool operator!=(const KForm& o) const { return !(*this == o); }

    // Common homogeneous degree of the nonzero coefficients; nullopt when the
    // coefficients are inhomogeneous or of mixed degrees; -1 for zero forms.
    std::optional<int> common_coefficient_degree() const {
        int deg = -1;
        for (const auto& [idx, c] : coeffs_) {
            auto d = c.homogeneous_degree();
            if (!d) return std::nullopt;
            if (deg == -1)
                deg = *d;
            else if (*d != deg)
                return std::nullopt;
        }
        return deg;
    }

    std::vector<MultiPoly> coefficient_list() const {
        std::vector<MultiPoly> v;
        v.reserve(coeffs_.size());
        for (const auto& [idx, c] : coeffs_) v.push_back(c);
        return v;
    }

  private:
    void check_compatible(const KForm& o) const {
        if (nvars_ != o.nvars_) throw VarCountMismatch("form variable count mismatch");
        if (k_ != o.k_) throw Error("form degree mismatch");
    }

    int nvars_;
    int k_;
    std::map<IndexTuple, MultiPoly> coeffs_;
};

inline KForm wedge(const KForm& a, const KForm& b) {
    if (a.nvars() != b.nvars()) throw VarCountMismatch("wedge variable count mismatch");
    KForm r(a.nvars(), a.k() + b.k());
    for (const auto& [ia, ca] : a.coeffs()) {
        for (const auto& [ib, cb] : b.coeffs()) {
            IndexTuple idx = ia;
            idx.insert(idx.end(), ib.begin(), ib.end());
            r.add_term(std::move(idx), ca * cb);
        }
    }
    return r;
}

inline KForm exterior_derivative(const KForm& a) {
    KForm r(a.nvars(), a.k() + 1);
    for (const auto& [idx, c] : a.coeffs()) {
        for (int v = 0; v < a.nvars(); ++v) {
            MultiPoly dc = c.partial_derivative(v);
            if (dc.is_zero()) continue;
            IndexTuple t;
            t.reserve(idx.size() + 1);
            t.push_back(v);
            t.insert(t.end(), idx.begin(), idx.end());
            r.add_term(std::move(t), std::move(dc));
        }
    }
    return r;
}

// Interior product i_v a; a must have degree >= 1.
inline KForm contract(const VectorField& v, const KForm& a) {
    if (v.nvars() != a.nvars()) throw VarCountMismatch("contraction variable count mismatch");
    if (a.k() < 1) throw Error("contraction of a 0-form");
    KForm r(a.nvars(), a.k() - 1);
    for (const auto& [idx, c] : a.coeffs()) {
        for (size_t j = 0; j < idx.size(); ++j) {
            const MultiPoly& vq = v.component(idx[j]);
            if (vq.is_zero()) continue;
            IndexTuple t;
            t.reserve(idx.size() - 1);
            for (size_t i = 0; i < idx.size(); ++i)
                if (i != j) t.push_back(idx[i]);
            MultiPoly prod = vq * c;
            if (j % 2 == 1) prod = -prod;
            r.add_term(std::move(t), std::move(prod));
        }
    }
    return r;
}

// Lie derivative by Cartan's formula L_v a = i_v(da) + d(i_v a).
inline KForm lie_derivative(const VectorField& v, const KForm& a) {
    if (v.nvars() != a.nvars()) throw VarCountMismatch("Lie derivative variable count mismatch");
    KForm term1 = contract(v, exterior_derivative(a));
    if (a.k() == 0) return term1;
    KForm term2 = exterior_derivative(contract(v, a));
    return term1 + term2;
}

inline VectorField lie_bracket(const VectorField& v, const VectorField& w) {
    if (v.nvars() != w.nvars()) throw VarCountMismatch("bracket variable count mismatch");
    const int n = v.nvars();
    std::vector<MultiPoly> comps;
    comps.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        comps.push_back(v.apply(w.component(i)) - w.apply(v.component(i)));
    return VectorField(n, std::move(comps));
}

// The unique Z with i_Z(dx0^dx1^dx2) = w, for a 2-form in three variables.
inline VectorField rot3(const KForm& w) {
    if (w.nvars() != 3 || w.k() != 2) throw Error("rot3 needs a 2-form in three variables");
    std::vector<MultiPoly> comps{w.coeff({1, 2}), -w.coeff({0, 2}), w.coeff({0, 1})};
    return VectorField(3, std::move(comps));
}

// Pull-back of a form under the polynomial map whose components are given in
// the target ring order: result = sum_T (c_T o f) df_{t1} ^ ... ^ df_{tk}.
inline KForm pullback_form(const KForm& a, std::span<const MultiPoly> comps) {
    if (static_cast<int>(comps.size()) != a.nvars())
        throw ArityMismatch("pullback: component count != form variable count");
    const int m = comps.empty() ? 0 : comps[0].nvars();
    for (const auto& c : comps)
        if (c.nvars() != m) throw VarCountMismatch("pullback: mixed component rings");
    // Differentials of the components.
    std::vector<KForm> dcomp;
    dcomp.reserve(comps.size());
    for (const auto& c : comps) dcomp.push_back(exterior_derivative(KForm::from_poly(c)));
    std::vector<MultiPoly> subs(comps.begin(), comps.end());
    KForm r(m, a.k());
    for (const auto& [idx, c] : a.coeffs()) {
        KForm term = KForm::from_poly(c.compose(subs));
        for (int i : idx) term = wedge(term, dcomp[static_cast<size_t>(i)]);
        r = r + term;
    }
    return r;
}

inline KForm pullback_form(const KForm& a, const std::vector<MultiPoly>& comps) {
    return pullback_form(a, std::span<const MultiPoly>(comps));
}

}  // namespace folia
