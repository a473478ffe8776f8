#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace folia {

// Exact rational scalar. mpq_class keeps values canonical: lowest terms,
// positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline double to_double(const Rational& r) { return r.get_d(); }

inline std::string to_string(const Rational& r) { return r.get_str(); }

// Exact square root of a nonnegative rational, if it is a perfect square.
inline std::optional<Rational> exact_sqrt(const Rational& r) {
    if (sgn(r) < 0) return std::nullopt;
    const Integer num = r.get_num(), den = r.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
    Integer sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    Rational root(sn, sd);
    root.canonicalize();
    return root;
}

// Round a double to a nearby rational with bounded denominator (continued
// fractions). Returns nullopt when no convergent hits the tolerance. Results
// are candidates only; callers must re-verify exactly.
inline std::optional<Rational> rationalize(double x, unsigned long max_den = 1000000,
                                           double tol = 1e-9) {
    if (!std::isfinite(x)) return std::nullopt;
    double v = x;
    long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    for (int it = 0; it < 64; ++it) {
        const double fl = std::floor(v);
        if (fl > 9e17 || fl < -9e17) return std::nullopt;
        const long long a = static_cast<long long>(fl);
        const long long p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 < 0 || static_cast<unsigned long long>(q2) > max_den) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        const double approx = static_cast<double>(p1) / static_cast<double>(q1);
        if (std::abs(approx - x) <= tol * std::max(1.0, std::abs(x))) {
            Rational r(static_cast<long>(p1), static_cast<long>(q1));
            r.canonicalize();
            return r;
        }
        const double frac = v - fl;
        if (frac < 1e-15) break;
        v = 1.0 / frac;
    }
    return std::nullopt;
}

inline std::optional<Rational> rationalize_complex(const std::complex<double>& z,
                                                   unsigned long max_den = 1000000,
                                                   double tol = 1e-9) {
    if (std::abs(z.imag()) > tol) return std::nullopt;
    return rationalize(z.real(), max_den, tol);
}

}  // namespace folia
