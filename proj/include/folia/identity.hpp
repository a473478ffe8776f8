#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "folia/polynomial.hpp"

namespace folia {

// Schwartz–Zippel style pre-filter: evaluate at pseudo-random points over a
// large prime field. A nonzero value proves the polynomial is nonzero; zero
// values prove nothing and callers must fall through to the exact check.

namespace modp {

constexpr uint64_t prime = (uint64_t(1) << 61) - 1;

inline uint64_t mul(uint64_t a, uint64_t b) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % prime);
}

inline uint64_t add(uint64_t a, uint64_t b) {
    uint64_t s = a + b;
    if (s >= prime) s -= prime;
    return s;
}

inline uint64_t pow(uint64_t a, uint64_t e) {
    uint64_t r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

inline uint64_t inv(uint64_t a) { return pow(a, prime - 2); }

inline uint64_t reduce_integer(const Integer& z) {
    Integer m = z % Integer(static_cast<unsigned long>(prime));
    if (m < 0) m += Integer(static_cast<unsigned long>(prime));
    return m.get_ui();
}

// Reduce a rational mod p; nullopt when the denominator vanishes mod p.
inline std::optional<uint64_t> reduce(const Rational& r) {
    const uint64_t den = reduce_integer(r.get_den());
    if (den == 0) return std::nullopt;
    return mul(reduce_integer(r.get_num()), inv(den));
}

}  // namespace modp

inline std::optional<uint64_t> eval_mod_p(const MultiPoly& p, const std::vector<uint64_t>& point) {
    uint64_t acc = 0;
    for (const auto& t : p.terms()) {
        auto c = modp::reduce(t.coeff);
        if (!c) return std::nullopt;
        uint64_t v = *c;
        for (int i = 0; i < p.nvars(); ++i) {
            const int e = t.mono.exp(i);
            if (e > 0) v = modp::mul(v, modp::pow(point[static_cast<size_t>(i)], e));
        }
        acc = modp::add(acc, v);
    }
    return acc;
}

// Looks for a point witnessing p != 0. Returns the witness point if one is
// found within the trial budget; nullopt otherwise (p may still be nonzero —
// only the exact expansion decides).
inline std::optional<std::vector<uint64_t>> fast_nonzero_witness(const MultiPoly& p,
                                                                 int trials = 4,
                                                                 uint64_t seed = 0x5a69707065ull) {
    if (p.is_zero()) return std::nullopt;
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        std::vector<uint64_t> pt(static_cast<size_t>(p.nvars()));
        for (auto& x : pt) x = rng() % modp::prime;
        auto v = eval_mod_p(p, pt);
        if (v && *v != 0) return pt;
    }
    return std::nullopt;
}

}  // namespace folia
