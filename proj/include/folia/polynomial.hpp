#pragma once

#include <algorithm>
#include <complex>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "folia/errors.hpp"
#include "folia/monomial.hpp"
#include "folia/rational.hpp"

namespace folia {

// Sparse multivariate polynomial over the rationals. Terms are kept sorted in
// descending grevlex order with no zero coefficients, so equality is a plain
// term-by-term comparison. Values are immutable in practice: every operation
// returns a fresh polynomial.
class MultiPoly {
  public:
    struct Term {
        Monomial mono;
        Rational coeff;
    };

    MultiPoly() : nvars_(0) {}
    explicit MultiPoly(int nvars) : nvars_(nvars) {
        if (nvars < 0) throw std::invalid_argument("negative variable count");
    }

    static MultiPoly zero(int nvars) { return MultiPoly(nvars); }

    static MultiPoly constant(int nvars, Rational c) {
        MultiPoly p(nvars);
        if (!folia::is_zero(c)) p.terms_.push_back({Monomial(nvars), std::move(c)});
        return p;
    }

    static MultiPoly variable(int nvars, int i) {
        if (i < 0 || i >= nvars) throw IndexOutOfRange("variable index out of range");
        std::vector<int> e(static_cast<size_t>(nvars), 0);
        e[static_cast<size_t>(i)] = 1;
        MultiPoly p(nvars);
        p.terms_.push_back({Monomial(std::move(e)), Rational(1)});
        return p;
    }

    static MultiPoly from_term(Monomial m, Rational c) {
        MultiPoly p(m.nvars());
        if (!folia::is_zero(c)) p.terms_.push_back({std::move(m), std::move(c)});
        return p;
    }

    // Terms in arbitrary order, possibly with repeats and zeros; normalizes.
    static MultiPoly from_terms(int nvars, std::vector<Term> terms) {
        MultiPoly p(nvars);
        std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
            return grevlex_cmp(a.mono, b.mono) > 0;
        });
        for (auto& t : terms) {
            if (t.mono.nvars() != nvars) throw VarCountMismatch("term variable count mismatch");
            if (!p.terms_.empty() && p.terms_.back().mono == t.mono)
                p.terms_.back().coeff += t.coeff;
            else
                p.terms_.push_back(std::move(t));
            if (!p.terms_.empty() && folia::is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
        }
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    // Leading term under grevlex; polynomial must be nonzero.
    const Term& leading_term() const {
        if (terms_.empty()) throw Error("leading term of zero polynomial");
        return terms_.front();
    }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_constant());
    }

    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        if (!is_constant()) throw Error("not a constant polynomial");
        return terms_[0].coeff;
    }

    // Total degree; -1 for the zero polynomial.
    int degree() const {
        int d = -1;
        for (const auto& t : terms_) d = std::max(d, t.mono.degree());
        return d;
    }

    int degree_in(int var) const {
        int d = 0;
        for (const auto& t : terms_) d = std::max(d, t.mono.exp(var));
        return d;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        const int d = terms_[0].mono.degree();
        for (const auto& t : terms_)
            if (t.mono.degree() != d) return false;
        return true;
    }

    // Degree of a homogeneous polynomial; nullopt when mixed. Zero counts as
    // homogeneous of every degree and reports -1.
    std::optional<int> homogeneous_degree() const {
        if (terms_.empty()) return -1;
        if (!is_homogeneous()) return std::nullopt;
        return terms_[0].mono.degree();
    }

    bool depends_on(int var) const {
        for (const auto& t : terms_)
            if (t.mono.exp(var) > 0) return true;
        return false;
    }

    MultiPoly operator-() const {
        MultiPoly r = *this;
        for (auto& t : r.terms_) t.coeff = -t.coeff;
        return r;
    }

    MultiPoly operator+(const MultiPoly& o) const {
        check_same_vars(o);
        MultiPoly r(nvars_);
        r.terms_.reserve(terms_.size() + o.terms_.size());
        size_t i = 0, j = 0;
        while (i < terms_.size() && j < o.terms_.size()) {
            const int c = grevlex_cmp(terms_[i].mono, o.terms_[j].mono);
            if (c > 0) {
                r.terms_.push_back(terms_[i++]);
            } else if (c < 0) {
                r.terms_.push_back(o.terms_[j++]);
            } else {
                Rational s = terms_[i].coeff + o.terms_[j].coeff;
                if (!folia::is_zero(s)) r.terms_.push_back({terms_[i].mono, std::move(s)});
                ++i;
                ++j;
            }
        }
        for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
        for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
        return r;
    }

    MultiPoly operator-(const MultiPoly& o) const { return *this + (-o); }

    MultiPoly operator*(const MultiPoly& o) const {
        check_same_vars(o);
        if (is_zero() || o.is_zero()) return MultiPoly(nvars_);
        // Hash-accumulate the product, then sort once.
        std::unordered_map<Monomial, Rational, MonomialHash> acc;
        acc.reserve(std::min<size_t>(terms_.size() * o.terms_.size(), size_t(1) << 20));
        for (const auto& a : terms_) {
            for (const auto& b : o.terms_) {
                Monomial m = a.mono * b.mono;
                auto [it, inserted] = acc.try_emplace(std::move(m));
                if (inserted)
                    it->second = a.coeff * b.coeff;
                else
                    it->second += a.coeff * b.coeff;
            }
        }
        MultiPoly r(nvars_);
        r.terms_.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (!folia::is_zero(c)) r.terms_.push_back({m, std::move(c)});
        std::sort(r.terms_.begin(), r.terms_.end(),
                  [](const Term& a, const Term& b) { return grevlex_cmp(a.mono, b.mono) > 0; });
        return r;
    }

    MultiPoly operator*(const Rational& c) const {
        if (folia::is_zero(c)) return MultiPoly(nvars_);
        MultiPoly r = *this;
        for (auto& t : r.terms_) t.coeff *= c;
        return r;
    }

    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly pow(int e) const {
        if (e < 0) throw std::invalid_argument("negative exponent");
        MultiPoly r = constant(nvars_, Rational(1));
        MultiPoly base = *this;
        while (e > 0) {
            if (e & 1) r = r * base;
            base = (e >>= 1) > 0 ? base * base : base;
        }
        return r;
    }

    bool operator==(const MultiPoly& o) const {
        if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
        for (size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff)
                return false;
        return true;
    }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly partial_derivative(int var) const {
        if (var < 0 || var >= nvars_) throw IndexOutOfRange("derivative index out of range");
        MultiPoly r(nvars_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            const int e = t.mono.exp(var);
            if (e == 0) continue;
            std::vector<int> exps = t.mono.exps();
            exps[static_cast<size_t>(var)] = e - 1;
            r.terms_.push_back({Monomial(std::move(exps)), t.coeff * e});
        }
        // Derivatives preserve grevlex order within the surviving terms of a
        // common degree drop only; re-sort to stay canonical.
        std::sort(r.terms_.begin(), r.terms_.end(),
                  [](const Term& a, const Term& b) { return grevlex_cmp(a.mono, b.mono) > 0; });
        return r;
    }

    // Substitute subs[i] for variable i. All substituents share one variable
    // count, which becomes the result's.
    MultiPoly compose(std::span<const MultiPoly> subs) const {
        if (static_cast<int>(subs.size()) != nvars_)
            throw ArityMismatch("compose: substituent count != variable count");
        int out_vars = subs.empty() ? 0 : subs[0].nvars();
        for (const auto& s : subs)
            if (s.nvars() != out_vars) throw VarCountMismatch("compose: mixed variable counts");
        // Cache powers of each substituent up to the max exponent used.
        std::vector<std::vector<MultiPoly>> pows(subs.size());
        for (size_t i = 0; i < subs.size(); ++i) {
            int maxe = 0;
            for (const auto& t : terms_) maxe = std::max(maxe, t.mono.exp(static_cast<int>(i)));
            pows[i].reserve(static_cast<size_t>(maxe) + 1);
            pows[i].push_back(MultiPoly::constant(out_vars, Rational(1)));
            for (int e = 1; e <= maxe; ++e) pows[i].push_back(pows[i].back() * subs[i]);
        }
        MultiPoly r(out_vars);
        for (const auto& t : terms_) {
            MultiPoly term = MultiPoly::constant(out_vars, t.coeff);
            for (int i = 0; i < nvars_; ++i) {
                const int e = t.mono.exp(i);
                if (e > 0) term = term * pows[static_cast<size_t>(i)][static_cast<size_t>(e)];
            }
            r = r + term;
        }
        return r;
    }
    MultiPoly compose(const std::vector<MultiPoly>& subs) const {
        return compose(std::span<const MultiPoly>(subs));
    }

    Rational evaluate(std::span<const Rational> point) const {
        if (static_cast<int>(point.size()) != nvars_)
            throw ArityMismatch("evaluate: point length != variable count");
        std::vector<std::vector<Rational>> pows(point.size());
        for (size_t i = 0; i < point.size(); ++i) {
            int maxe = 0;
            for (const auto& t : terms_) maxe = std::max(maxe, t.mono.exp(static_cast<int>(i)));
            pows[i].reserve(static_cast<size_t>(maxe) + 1);
            pows[i].push_back(Rational(1));
            for (int e = 1; e <= maxe; ++e) pows[i].push_back(pows[i].back() * point[i]);
        }
        Rational acc(0);
        for (const auto& t : terms_) {
            Rational v = t.coeff;
            for (int i = 0; i < nvars_; ++i) {
                const int e = t.mono.exp(i);
                if (e > 0) v *= pows[static_cast<size_t>(i)][static_cast<size_t>(e)];
            }
            acc += v;
        }
        return acc;
    }
    Rational evaluate(const std::vector<Rational>& point) const {
        return evaluate(std::span<const Rational>(point));
    }

    std::complex<double> evaluate_complex(std::span<const std::complex<double>> point) const {
        if (static_cast<int>(point.size()) != nvars_)
            throw ArityMismatch("evaluate: point length != variable count");
        std::complex<double> acc(0.0, 0.0);
        for (const auto& t : terms_) {
            std::complex<double> v(to_double(t.coeff), 0.0);
            for (int i = 0; i < nvars_; ++i)
                for (int e = 0; e < t.mono.exp(i); ++e) v *= point[static_cast<size_t>(i)];
            acc += v;
        }
        return acc;
    }
    std::complex<double> evaluate_complex(const std::vector<std::complex<double>>& point) const {
        return evaluate_complex(std::span<const std::complex<double>>(point));
    }

    // Substitute a single variable by a polynomial in the same ring.
    MultiPoly substitute(int var, const MultiPoly& value) const {
        if (var < 0 || var >= nvars_) throw IndexOutOfRange("substitute index out of range");
        std::vector<MultiPoly> subs;
        subs.reserve(static_cast<size_t>(nvars_));
        for (int i = 0; i < nvars_; ++i)
            subs.push_back(i == var ? value : MultiPoly::variable(nvars_, i));
        return compose(subs);
    }

    // Remove a variable slot (its exponent must be zero everywhere).
    MultiPoly drop_variable(int var) const {
        MultiPoly r(nvars_ - 1);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            if (t.mono.exp(var) != 0) throw Error("drop_variable: variable still present");
            std::vector<int> exps;
            exps.reserve(static_cast<size_t>(nvars_ - 1));
            for (int i = 0; i < nvars_; ++i)
                if (i != var) exps.push_back(t.mono.exp(i));
            r.terms_.push_back({Monomial(std::move(exps)), t.coeff});
        }
        std::sort(r.terms_.begin(), r.terms_.end(),
                  [](const Term& a, const Term& b) { return grevlex_cmp(a.mono, b.mono) > 0; });
        return r;
    }

    // Insert a fresh variable slot (exponent zero) at position var.
    MultiPoly insert_variable(int var) const {
        MultiPoly r(nvars_ + 1);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            std::vector<int> exps;
            exps.reserve(static_cast<size_t>(nvars_ + 1));
            for (int i = 0; i <= nvars_; ++i) {
                if (i == var) exps.push_back(0);
                if (i < nvars_) exps.push_back(t.mono.exp(i));
            }
            exps.resize(static_cast<size_t>(nvars_ + 1));
            r.terms_.push_back({Monomial(std::move(exps)), t.coeff});
        }
        std::sort(r.terms_.begin(), r.terms_.end(),
                  [](const Term& a, const Term& b) { return grevlex_cmp(a.mono, b.mono) > 0; });
        return r;
    }

    // Division with remainder by a single divisor: *this = q*d + r where no
    // term of r is divisible by the leading monomial of d.
    std::pair<MultiPoly, MultiPoly> divrem(const MultiPoly& d) const {
        check_same_vars(d);
        if (d.is_zero()) throw Error("division by zero polynomial");
        MultiPoly q(nvars_), r(nvars_), rest = *this;
        const Monomial& lm = d.leading_term().mono;
        const Rational& lc = d.leading_term().coeff;
        while (!rest.is_zero()) {
            const Term& lt = rest.leading_term();
            if (lm.divides(lt.mono)) {
                MultiPoly t = from_term(lm.quotient_of(lt.mono), lt.coeff / lc);
                q = q + t;
                rest = rest - t * d;
            } else {
                MultiPoly t = from_term(lt.mono, lt.coeff);
                r = r + t;
                rest = rest - t;
            }
        }
        return {std::move(q), std::move(r)};
    }

    // Exact quotient; nullopt when the division leaves a remainder.
    std::optional<MultiPoly> divide_exact(const MultiPoly& d) const {
        auto [q, r] = divrem(d);
        if (!r.is_zero()) return std::nullopt;
        return q;
    }

    void check_same_vars(const MultiPoly& o) const {
        if (nvars_ != o.nvars_) throw VarCountMismatch("variable count mismatch");
    }

  private:
    int nvars_;
    std::vector<Term> terms_;
};

inline MultiPoly operator*(const Rational& c, const MultiPoly& p) { return p * c; }

}  // namespace folia
