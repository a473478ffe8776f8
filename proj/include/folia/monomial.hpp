#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace folia {

// Exponent vector of a power product, one slot per variable.
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(int nvars) : exps_(static_cast<size_t>(nvars), 0) {
        if (nvars < 0) throw std::invalid_argument("negative variable count");
    }
    explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
        for (int e : exps_)
            if (e < 0) throw std::invalid_argument("negative exponent");
    }

    int nvars() const { return static_cast<int>(exps_.size()); }
    int exp(int i) const { return exps_[static_cast<size_t>(i)]; }
    const std::vector<int>& exps() const { return exps_; }

    int degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }
    bool is_constant() const {
        for (int e : exps_)
            if (e != 0) return false;
        return true;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r = *this;
        for (size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += o.exps_[i];
        return r;
    }
    bool divides(const Monomial& o) const {
        for (size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > o.exps_[i]) return false;
        return true;
    }
    // Quotient o / this; caller guarantees divisibility.
    Monomial quotient_of(const Monomial& o) const {
        Monomial r = o;
        for (size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= exps_[i];
        return r;
    }

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

  private:
    std::vector<int> exps_;
};

// Graded reverse lexicographic comparison: higher total degree wins; on ties
// the rightmost differing exponent decides, smaller exponent ranking higher.
// Returns <0, 0, >0 as a is below, equal to, or above b.
inline int grevlex_cmp(const Monomial& a, const Monomial& b) {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    for (int i = a.nvars() - 1; i >= 0; --i) {
        const int ea = a.exp(i), eb = b.exp(i);
        if (ea != eb) return ea > eb ? -1 : 1;
    }
    return 0;
}

struct GrevlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_cmp(a, b) < 0; }
};

struct MonomialHash {
    size_t operator()(const Monomial& m) const {
        uint64_t h = 1469598103934665603ull;
        for (int e : m.exps()) {
            h ^= static_cast<uint64_t>(e);
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};

}  // namespace folia
