#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "folia/polynomial.hpp"

namespace folia {

namespace detail {

// Univariate view of p in variable v: dense coefficient list, entries are
// polynomials in the remaining variables (slot v zeroed, same ring).
inline std::vector<MultiPoly> univariate_view(const MultiPoly& p, int v) {
    std::vector<MultiPoly> coeffs(static_cast<size_t>(p.degree_in(v)) + 1,
                                  MultiPoly::zero(p.nvars()));
    for (const auto& t : p.terms()) {
        std::vector<int> e = t.mono.exps();
        const int dv = e[static_cast<size_t>(v)];
        e[static_cast<size_t>(v)] = 0;
        coeffs[static_cast<size_t>(dv)] =
            coeffs[static_cast<size_t>(dv)] + MultiPoly::from_term(Monomial(std::move(e)), t.coeff);
    }
    while (coeffs.size() > 1 && coeffs.back().is_zero()) coeffs.pop_back();
    return coeffs;
}

inline MultiPoly from_univariate_view(const std::vector<MultiPoly>& coeffs, int v, int nvars) {
    MultiPoly r = MultiPoly::zero(nvars);
    MultiPoly xv = MultiPoly::variable(nvars, v);
    MultiPoly xpow = MultiPoly::constant(nvars, Rational(1));
    for (size_t d = 0; d < coeffs.size(); ++d) {
        if (d > 0) xpow = xpow * xv;
        if (!coeffs[d].is_zero()) r = r + coeffs[d] * xpow;
    }
    return r;
}

// Pseudo-remainder in v: lc(g)^(deg f - deg g + 1) * f = q*g + rem.
// Requires deg_v f >= deg_v g >= 1.
inline MultiPoly pseudo_rem(const MultiPoly& f, const MultiPoly& g, int v) {
    auto fc = univariate_view(f, v);
    auto gc = univariate_view(g, v);
    const int df = static_cast<int>(fc.size()) - 1;
    const int dg = static_cast<int>(gc.size()) - 1;
    const MultiPoly lg = gc.back();
    std::vector<MultiPoly> r = std::move(fc);
    for (int k = df; k >= dg; --k) {
        const MultiPoly lead = r[static_cast<size_t>(k)];
        for (auto& c : r) c = c * lg;
        if (lead.is_zero()) continue;
        for (int i = 0; i <= dg; ++i)
            r[static_cast<size_t>(k - dg + i)] -= lead * gc[static_cast<size_t>(i)];
    }
    return from_univariate_view(r, v, f.nvars());
}

}  // namespace detail

MultiPoly gcd_pair(const MultiPoly& a, const MultiPoly& b);

// Gcd of a list, normalized so the grevlex-leading coefficient is 1. The gcd
// of {p} is p normalized; an all-zero list gives the zero polynomial.
inline MultiPoly content_gcd(std::span<const MultiPoly> polys);

namespace detail {

inline MultiPoly normalize_leading(const MultiPoly& p) {
    if (p.is_zero()) return p;
    return p * (Rational(1) / p.leading_term().coeff);
}

inline MultiPoly content_in(const MultiPoly& p, int v) {
    auto coeffs = univariate_view(p, v);
    coeffs.erase(std::remove_if(coeffs.begin(), coeffs.end(),
                                [](const MultiPoly& c) { return c.is_zero(); }),
                 coeffs.end());
    return content_gcd(coeffs);
}

// Subresultant polynomial remainder sequence on v-primitive inputs. Returns
// the gcd of the primitive parts (itself primitive in v, up to a constant).
inline MultiPoly prs_gcd(MultiPoly f, MultiPoly g, int v) {
    if (f.degree_in(v) < g.degree_in(v)) std::swap(f, g);
    MultiPoly h = MultiPoly::constant(f.nvars(), Rational(1));
    MultiPoly s = h;
    while (true) {
        const int delta = f.degree_in(v) - g.degree_in(v);
        MultiPoly rem = pseudo_rem(f, g, v);
        if (rem.is_zero()) break;
        if (rem.degree_in(v) == 0) {
            // Nonzero remainder free of v: the primitive parts are coprime.
            return MultiPoly::constant(f.nvars(), Rational(1));
        }
        MultiPoly divisor = s * h.pow(delta);
        auto next = rem.divide_exact(divisor);
        if (!next) throw Error("subresultant division failed");
        f = std::move(g);
        g = std::move(*next);
        s = detail::univariate_view(f, v).back();
        if (delta >= 1) {
            auto hn = s.pow(delta).divide_exact(h.pow(delta - 1));
            if (!hn) throw Error("subresultant h-update failed");
            h = std::move(*hn);
        }
    }
    MultiPoly cont = content_in(g, v);
    auto pp = g.divide_exact(cont);
    if (!pp) throw Error("primitive part division failed");
    return *pp;
}

}  // namespace detail

inline MultiPoly gcd_pair(const MultiPoly& a, const MultiPoly& b) {
    a.check_same_vars(b);
    if (a.is_zero()) return detail::normalize_leading(b);
    if (b.is_zero()) return detail::normalize_leading(a);
    if (a.is_constant() || b.is_constant())
        return MultiPoly::constant(a.nvars(), Rational(1));
    // Main variable: present in both, minimal combined degree.
    int best = -1, best_score = 0;
    for (int v = 0; v < a.nvars(); ++v) {
        const int da = a.degree_in(v), db = b.degree_in(v);
        if (da == 0 || db == 0) continue;
        const int score = da + db;
        if (best < 0 || score < best_score) {
            best = v;
            best_score = score;
        }
    }
    if (best < 0) return MultiPoly::constant(a.nvars(), Rational(1));
    const int v = best;
    MultiPoly ca = detail::content_in(a, v), cb = detail::content_in(b, v);
    auto pa = a.divide_exact(ca), pb = b.divide_exact(cb);
    if (!pa || !pb) throw Error("content division failed");
    MultiPoly cg = gcd_pair(ca, cb);
    MultiPoly pg = detail::prs_gcd(*pa, *pb, v);
    return detail::normalize_leading(cg * pg);
}

inline MultiPoly content_gcd(std::span<const MultiPoly> polys) {
    if (polys.empty()) throw Error("content_gcd of empty list");
    MultiPoly g = MultiPoly::zero(polys[0].nvars());
    for (const auto& p : polys) {
        g = gcd_pair(g, p);
        if (!g.is_zero() && g.is_constant()) return detail::normalize_leading(g);
    }
    return detail::normalize_leading(g);
}

inline MultiPoly content_gcd(const std::vector<MultiPoly>& polys) {
    return content_gcd(std::span<const MultiPoly>(polys));
}

// ---------------------------------------------------------------------------
// Fast coprimality certificate.
//
// For a pair (p, q) and a variable v, specializing all other variables at a
// point where the leading v-coefficient of p (or q) does not vanish bounds
// deg_v gcd(p, q) by the degree of the univariate gcd of the specializations.
// A constant univariate gcd for every shared variable certifies that
// gcd(p, q) is constant — exactly, with no probabilistic gap.
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<Rational> univ_specialize(const MultiPoly& p, int v,
                                             const std::vector<Rational>& point) {
    std::vector<Rational> coeffs(static_cast<size_t>(p.degree_in(v)) + 1, Rational(0));
    for (const auto& t : p.terms()) {
        Rational val = t.coeff;
        for (int i = 0; i < p.nvars(); ++i) {
            if (i == v) continue;
            for (int e = 0; e < t.mono.exp(i); ++e) val *= point[static_cast<size_t>(i)];
        }
        coeffs[static_cast<size_t>(t.mono.exp(v))] += val;
    }
    while (coeffs.size() > 1 && folia::is_zero(coeffs.back())) coeffs.pop_back();
    return coeffs;
}

inline int univ_gcd_degree(std::vector<Rational> f, std::vector<Rational> g) {
    auto deg = [](const std::vector<Rational>& p) { return static_cast<int>(p.size()) - 1; };
    auto zero = [](const std::vector<Rational>& p) {
        return p.size() == 1 && folia::is_zero(p[0]);
    };
    if (zero(f)) std::swap(f, g);
    while (!zero(g)) {
        const Rational inv = Rational(1) / g.back();
        while (!zero(f) && deg(f) >= deg(g)) {
            const int shift = deg(f) - deg(g);
            const Rational c = f.back() * inv;
            for (size_t i = 0; i < g.size(); ++i)
                f[static_cast<size_t>(shift) + i] -= c * g[i];
            while (f.size() > 1 && folia::is_zero(f.back())) f.pop_back();
            if (f.size() == 1 && folia::is_zero(f[0])) break;
        }
        std::swap(f, g);
    }
    return deg(f);
}

}  // namespace detail

// True certifies gcd(p, q) is constant. False means "not certified" (the gcd
// may or may not be trivial); callers fall back to the exact gcd.
inline bool gcd_is_trivial_certified(const MultiPoly& p, const MultiPoly& q,
                                     uint64_t seed = 0x466f6c6961ull) {
    if (p.is_zero() || q.is_zero()) return false;
    if (p.is_constant() || q.is_constant()) return true;
    std::mt19937_64 rng(seed);
    auto small_int = [&rng]() { return Rational(static_cast<long>(rng() % 41) - 20); };
    for (int v = 0; v < p.nvars(); ++v) {
        if (!p.depends_on(v) || !q.depends_on(v)) continue;
        bool done = false;
        for (int attempt = 0; attempt < 6 && !done; ++attempt) {
            std::vector<Rational> point(static_cast<size_t>(p.nvars()), Rational(0));
            for (int i = 0; i < p.nvars(); ++i)
                if (i != v) point[static_cast<size_t>(i)] = small_int();
            // The leading-coefficient condition makes the degree bound valid.
            auto lead_ok = [&](const MultiPoly& a) {
                auto view = detail::univariate_view(a, v);
                return !folia::is_zero(view.back().evaluate(point));
            };
            if (!lead_ok(p) && !lead_ok(q)) continue;
            auto fu = detail::univ_specialize(p, v, point);
            auto gu = detail::univ_specialize(q, v, point);
            if (detail::univ_gcd_degree(std::move(fu), std::move(gu)) == 0) done = true;
        }
        if (!done) return false;
    }
    return true;
}

// Certifies that the gcd of the whole list is constant by finding one
// certified-coprime pair.
inline bool content_is_trivial_certified(std::span<const MultiPoly> polys,
                                         uint64_t seed = 0x466f6c6961ull) {
    std::vector<size_t> nz;
    for (size_t i = 0; i < polys.size(); ++i)
        if (!polys[i].is_zero()) nz.push_back(i);
    if (nz.empty()) return false;
    for (size_t i : nz)
        if (polys[i].is_constant()) return true;
    for (size_t i = 0; i + 1 < nz.size() && i < 3; ++i)
        for (size_t j = i + 1; j < nz.size() && j < i + 4; ++j)
            if (gcd_is_trivial_certified(polys[nz[i]], polys[nz[j]], seed + i * 7 + j)) return true;
    return false;
}

inline bool content_is_trivial_certified(const std::vector<MultiPoly>& polys,
                                         uint64_t seed = 0x466f6c6961ull) {
    return content_is_trivial_certified(std::span<const MultiPoly>(polys), seed);
}

}  // namespace folia
