#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <random>

#include "folia/gcd.hpp"
#include "folia/identity.hpp"
#include "folia/parse.hpp"
#include "folia/polynomial.hpp"

using namespace folia;

namespace {

MultiPoly P(const char* s, int nvars = -1) { return parse_poly(s, nvars); }

MultiPoly random_poly(int nvars, int maxdeg, std::mt19937_64& rng, double density = 0.5) {
    MultiPoly p = MultiPoly::zero(nvars);
    // Walk all monomials of degree <= maxdeg.
    std::vector<int> exps(static_cast<size_t>(nvars), 0);
    auto coeff = [&rng]() { return Rational(static_cast<long>(rng() % 11) - 5); };
    std::function<void(int, int)> rec = [&](int var, int budget) {
        if (var == nvars) {
            if (static_cast<double>(rng() % 1000) < density * 1000.0) {
                Rational c = coeff();
                if (sgn(c) != 0) p = p + MultiPoly::from_term(Monomial(exps), c);
            }
            return;
        }
        for (int e = 0; e <= budget; ++e) {
            exps[static_cast<size_t>(var)] = e;
            rec(var + 1, budget - e);
        }
        exps[static_cast<size_t>(var)] = 0;
    };
    rec(0, maxdeg);
    return p;
}

}  // namespace

TEST_CASE("rational scalars are exact and canonical") {
    Rational a = rat(1, 2), b = rat(1, 3);
    CHECK(a + b == rat(5, 6));
    CHECK(rat(2, 4) == rat(1, 2));
    CHECK(rat(-1, 2).get_den() == 2);  // positive denominator
    CHECK(sgn(rat(-1, 2)) < 0);
    CHECK(to_string(rat(-3, 4)) == "-3/4");
}

TEST_CASE("addition: cancellation, identity, rational coefficients") {
    MultiPoly x0 = MultiPoly::variable(2, 0);
    MultiPoly x1 = MultiPoly::variable(2, 1);
    CHECK((x0 + x1) + (-x0) == x1);
    MultiPoly zero = MultiPoly::zero(2);
    MultiPoly p = P("x0^2 + 3*x1", 2);
    CHECK(zero + p == p);
    // (1/2)x0^2 + (1/3)x0^2 = (5/6)x0^2
    MultiPoly h = P("1/2*x0^2", 2) + P("1/3*x0^2", 2);
    CHECK(h == P("5/6*x0^2", 2));
    CHECK_THROWS_AS(P("x0", 1) + P("x0", 2), VarCountMismatch);
}

TEST_CASE("multiplication: basic, annihilator, difference of squares") {
    CHECK(P("x0", 2) * P("x1", 2) == P("x0*x1", 2));
    MultiPoly p = P("x0^2 - 2*x1 + 1", 2);
    CHECK((p * MultiPoly::zero(2)).is_zero());
    CHECK(P("x0 + x1", 2) * P("x0 - x1", 2) == P("x0^2 - x1^2", 2));
    // degree additivity
    CHECK((P("x0^2 + x1", 2) * P("x0^3 - x1", 2)).degree() == 5);
}

TEST_CASE("partial derivatives") {
    CHECK(P("x0^3", 1).partial_derivative(0) == P("3*x0^2", 1));
    CHECK(P("x0^3", 2).partial_derivative(1).is_zero());
    CHECK(P("x0^2*x1 + x1^2", 2).partial_derivative(0) == P("2*x0*x1", 2));
    CHECK_THROWS_AS(P("x0", 1).partial_derivative(2), IndexOutOfRange);
}

TEST_CASE("compose: substitution, projection, constants") {
    // X*Y with [z0^2, z1^2, z2] -> z0^2*z1^2
    MultiPoly xy = P("X*Y");
    std::vector<MultiPoly> subs{P("z0^2", 3), P("z1^2", 3), P("z2", 3)};
    CHECK(xy.compose(subs) == P("z0^2*z1^2", 3));
    MultiPoly x = P("X");
    CHECK(x.compose(subs) == subs[0]);
    MultiPoly c = MultiPoly::constant(3, rat(7, 2));
    CHECK(c.compose(subs) == MultiPoly::constant(3, rat(7, 2)));
    CHECK_THROWS_AS(xy.compose(std::vector<MultiPoly>{P("z0", 2)}), ArityMismatch);
}

TEST_CASE("compose respects homogeneous degrees") {
    std::mt19937_64 rng(11);
    MultiPoly p = P("X^2*Y - Z^3 + X*Y*Z");  // homogeneous degree 3
    std::vector<MultiPoly> subs{P("z0^2 - z1*z2", 3), P("z1^2 + z0*z2", 3), P("z0*z1 - z2^2", 3)};
    MultiPoly q = p.compose(subs);
    REQUIRE(q.is_homogeneous());
    CHECK(q.homogeneous_degree() == 6);
}

TEST_CASE("evaluate: exact values, homogeneity scaling") {
    MultiPoly p = P("x0^2 + x1", 2);
    CHECK(p.evaluate(std::vector<Rational>{Rational(2), Rational(3)}) == Rational(7));
    MultiPoly h = P("X^2*Y - 2*Z^3");
    std::vector<Rational> v{rat(1, 2), Rational(3), Rational(-1)};
    Rational t = rat(5, 7);
    std::vector<Rational> tv;
    for (const auto& c : v) tv.push_back(t * c);
    CHECK(h.evaluate(tv) == t * t * t * h.evaluate(v));
    CHECK(P("x0*x1", 2).evaluate(std::vector<Rational>{Rational(0), Rational(9)}) == Rational(0));
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(2024);
    for (int it = 0; it < 30; ++it) {
        const int nvars = 1 + static_cast<int>(rng() % 4);
        MultiPoly a = random_poly(nvars, 3, rng, 0.4);
        MultiPoly b = random_poly(nvars, 3, rng, 0.4);
        MultiPoly c = random_poly(nvars, 2, rng, 0.4);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("Euler identity for homogeneous polynomials") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 20; ++it) {
        const int nvars = 2 + static_cast<int>(rng() % 3);
        const int deg = 1 + static_cast<int>(rng() % 4);
        // Random homogeneous polynomial of exact degree deg.
        MultiPoly p = MultiPoly::zero(nvars);
        for (int tries = 0; tries < 20; ++tries) {
            MultiPoly q = random_poly(nvars, deg, rng, 0.6);
            MultiPoly h = MultiPoly::zero(nvars);
            for (const auto& t : q.terms())
                if (t.mono.degree() == deg) h = h + MultiPoly::from_term(t.mono, t.coeff);
            if (!h.is_zero()) {
                p = h;
                break;
            }
        }
        if (p.is_zero()) continue;
        MultiPoly euler = MultiPoly::zero(nvars);
        for (int i = 0; i < nvars; ++i)
            euler = euler + MultiPoly::variable(nvars, i) * p.partial_derivative(i);
        CHECK(euler == p * Rational(deg));
    }
}

TEST_CASE("compose respects products") {
    std::mt19937_64 rng(99);
    for (int it = 0; it < 10; ++it) {
        MultiPoly p = random_poly(2, 3, rng, 0.5);
        MultiPoly q = random_poly(2, 3, rng, 0.5);
        std::vector<MultiPoly> subs{random_poly(3, 2, rng, 0.5), random_poly(3, 2, rng, 0.5)};
        CHECK((p * q).compose(subs) == p.compose(subs) * q.compose(subs));
    }
}

TEST_CASE("content gcd: shared factor, zero entry, hand example") {
    MultiPoly y = P("Y");
    MultiPoly a = P("X^2 + Z*Y");  // coprime pair
    MultiPoly b = P("X*Z - Y^2");
    std::vector<MultiPoly> polys{y * a, y * b};
    CHECK(content_gcd(polys) == y);

    std::vector<MultiPoly> with_zero{P("2*X^2 - 2*Y^2"), MultiPoly::zero(3)};
    CHECK(content_gcd(with_zero) == P("X^2 - Y^2"));  // normalized leading 1

    std::vector<MultiPoly> pair{P("X^2 - Y^2"), P("X - Y")};
    CHECK(content_gcd(pair) == P("X - Y"));

    CHECK_THROWS_AS(content_gcd(std::vector<MultiPoly>{}), Error);
}

TEST_CASE("content gcd divides every input exactly") {
    std::mt19937_64 rng(5150);
    for (int it = 0; it < 8; ++it) {
        const int nvars = 2 + static_cast<int>(rng() % 2);
        MultiPoly common = random_poly(nvars, 2, rng, 0.5);
        if (common.is_zero()) continue;
        std::vector<MultiPoly> polys;
        for (int j = 0; j < 3; ++j) polys.push_back(common * random_poly(nvars, 2, rng, 0.5));
        MultiPoly g = content_gcd(polys);
        if (g.is_zero()) continue;
        for (const auto& p : polys) {
            auto q = p.divide_exact(g);
            REQUIRE(q.has_value());
            CHECK(*q * g == p);
        }
    }
}

TEST_CASE("coprimality certificate") {
    CHECK(gcd_is_trivial_certified(P("X^2 + Y"), P("X*Y - 1")));
    // Shared factor: must never certify.
    MultiPoly f = P("X + Y") * P("X^2 - Y");
    MultiPoly g = P("X + Y") * P("Y^3 + X");
    CHECK_FALSE(gcd_is_trivial_certified(f, g));
    CHECK(content_is_trivial_certified(std::vector<MultiPoly>{P("Z*Y^2"), P("Z*X^2"),
                                                              P("X*Y^2 + X^2*Y + X^3")}));
}

TEST_CASE("mod-p prefilter finds witnesses for nonzero polynomials") {
    MultiPoly p = P("X^3*Y - 17/5*Z^4 + X*Y*Z^2");
    auto w = fast_nonzero_witness(p);
    REQUIRE(w.has_value());
    auto v = eval_mod_p(p, *w);
    REQUIRE(v.has_value());
    CHECK(*v != 0);
    CHECK_FALSE(fast_nonzero_witness(MultiPoly::zero(3)).has_value());
    // (X+Y)^2 - X^2 - 2XY - Y^2 == 0: the filter must never report nonzero.
    MultiPoly zero = P("X + Y") * P("X + Y") - P("X^2 + 2*X*Y + Y^2");
    CHECK_FALSE(fast_nonzero_witness(zero).has_value());
}

TEST_CASE("division with remainder") {
    MultiPoly p = P("X^2 - Y^2");
    auto q = p.divide_exact(P("X - Y"));
    REQUIRE(q.has_value());
    CHECK(*q == P("X + Y"));
    CHECK_FALSE(P("X^2 + 1", 3).divide_exact(P("X - Y")).has_value());
}
