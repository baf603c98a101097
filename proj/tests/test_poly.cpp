#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "frob/errors.hpp"
#include "frob/multipoly.hpp"
#include "frob/polynomial.hpp"
#include "frob/quadext.hpp"

using namespace frob;

namespace {

PolyQ random_poly(std::mt19937& rng, int max_deg) {
    std::uniform_int_distribution<int> dd(0, max_deg);
    std::uniform_int_distribution<long> cc(-9, 9);
    int d = dd(rng);
    std::vector<Rational> c(static_cast<size_t>(d) + 1);
    for (auto& x : c) x = Rational(cc(rng));
    return PolyQ(c);
}

MultiPoly random_mpoly(std::mt19937& rng, int nvars) {
    std::uniform_int_distribution<int> nt(0, 4), ee(0, 3);
    std::uniform_int_distribution<long> cc(-5, 5);
    MultiPoly p(nvars);
    int terms = nt(rng);
    for (int t = 0; t < terms; ++t) {
        MultiPoly m(nvars, Rational(cc(rng)));
        for (int v = 0; v < nvars; ++v) {
            int e = ee(rng);
            for (int k = 0; k < e; ++k) m = m * MultiPoly::variable(v, nvars);
        }
        p += m;
    }
    return p;
}

} // namespace

TEST_CASE("polynomial normal form and accessors") {
    PolyQ p({Rational(1), Rational(2), Rational(0), Rational(0)});
    CHECK(p.degree() == 1);
    CHECK(PolyQ({Rational(0), Rational(0)}).is_zero());
    CHECK(PolyQ().degree() == -1);
    CHECK(PolyQ::X().degree() == 1);
    CHECK(PolyQ::linear(Rational(3)).coeff(0) == Rational(-3));
    CHECK(PolyQ::constant(Rational(5)).degree() == 0);
    CHECK(p.coeff(7) == Rational(0));
    CHECK(p.leading() == Rational(2));
    CHECK(p.monic() == PolyQ({Rational(1, 2), Rational(1)}));
    CHECK_THROWS_AS(PolyQ().monic(), MathError);
    CHECK_THROWS_AS(p.pow(-1), MathError);
    CHECK(p.pow(0).is_one());
}

TEST_CASE("polynomial ring operations") {
    PolyQ x = PolyQ::X();
    PolyQ p = x * x - PolyQ::constant(Rational(2)); // X^2 - 2
    PolyQ q = x + PolyQ::constant(Rational(1));     // X + 1
    CHECK((p + q) == PolyQ({Rational(-1), Rational(1), Rational(1)}));
    CHECK((p * q).degree() == 3);
    CHECK((p - p).is_zero());
    CHECK((p * Rational(0)).is_zero());
    CHECK(p.derivative() == PolyQ({Rational(0), Rational(2)}));
    CHECK(PolyQ::constant(Rational(7)).derivative().is_zero());
    CHECK(PolyQ::linear(Rational(2)).pow(2) == PolyQ({Rational(4), Rational(-4), Rational(1)}));
}

TEST_CASE("division with remainder: randomized round trip") {
    std::mt19937 rng(424242);
    for (int t = 0; t < 100; ++t) {
        PolyQ p = random_poly(rng, 8);
        PolyQ d = random_poly(rng, 4);
        if (d.is_zero()) {
            CHECK_THROWS_AS(divmod(p, d), MathError);
            continue;
        }
        auto [q, r] = divmod(p, d);
        CHECK(q * d + r == p);
        CHECK(r.degree() < d.degree());
    }
}

TEST_CASE("exact division and divisibility") {
    PolyQ a = PolyQ::linear(Rational(1)) * PolyQ::linear(Rational(-2));
    CHECK(exact_div(a, PolyQ::linear(Rational(1))) == PolyQ::linear(Rational(-2)));
    CHECK_THROWS_AS(exact_div(a, PolyQ::linear(Rational(5))), MathError);
    CHECK(divides(PolyQ::linear(Rational(-2)), a));
    CHECK_FALSE(divides(PolyQ::linear(Rational(3)), a));
}

TEST_CASE("gcd: monic, commutative, divides both") {
    std::mt19937 rng(777);
    CHECK_THROWS_AS(poly_gcd(PolyQ(), PolyQ()), MathError);
    CHECK(poly_gcd(PolyQ(), PolyQ::X() * Rational(3)) == PolyQ::X());
    for (int t = 0; t < 60; ++t) {
        PolyQ a = random_poly(rng, 5), b = random_poly(rng, 5);
        if (a.is_zero() && b.is_zero()) continue;
        PolyQ g = poly_gcd(a, b);
        CHECK(g == poly_gcd(b, a));
        CHECK(g.is_monic());
        if (!a.is_zero()) CHECK(divides(g, a));
        if (!b.is_zero()) CHECK(divides(g, b));
    }
    // common factor is detected
    PolyQ f = PolyQ::linear(Rational(4));
    CHECK(divides(f, poly_gcd(f * PolyQ::linear(Rational(1)), f * PolyQ::linear(Rational(2)))));
}

TEST_CASE("squarefree decomposition reconstructs the input") {
    std::mt19937 rng(90210);
    std::uniform_int_distribution<long> roots(-4, 4);
    std::uniform_int_distribution<int> mult(1, 3);
    for (int t = 0; t < 40; ++t) {
        // product of (X - a_i)^{e_i} with distinct a_i, times a scalar
        std::vector<long> used;
        PolyQ p = PolyQ::constant(Rational(roots(rng) == 0 ? 3 : 2));
        int factors = 1 + (t % 3);
        for (int f = 0; f < factors; ++f) {
            long a = roots(rng);
            bool dup = false;
            for (long u : used) dup = dup || (u == a);
            if (dup) continue;
            used.push_back(a);
            p = p * PolyQ::linear(Rational(a)).pow(mult(rng));
        }
        auto dec = square_free_decomposition(p);
        PolyQ rebuilt = PolyQ::constant(p.leading());
        int prev = 0;
        for (const auto& [fi, mi] : dec) {
            CHECK(mi > prev);
            prev = mi;
            CHECK(fi.is_monic());
            CHECK(fi.degree() >= 1);
            CHECK(poly_gcd(fi, fi.derivative()).is_one());
            rebuilt = rebuilt * fi.pow(mi);
        }
        CHECK(rebuilt == p);
    }
    CHECK_THROWS_AS(square_free_decomposition(PolyQ()), MathError);
}

TEST_CASE("evaluation over different coefficient rings") {
    PolyQ p = PolyQ({Rational(-2), Rational(0), Rational(1)}); // X^2 - 2
    CHECK(p(Rational(3)) == Rational(7));
    QuadExt s2 = QuadExt::sqrt_of(Rational(2));
    CHECK(p.eval<QuadExt>(s2).is_zero());
    CHECK(p.eval<QuadExt>(QuadExt(Rational(1), Rational(1), Rational(2))) ==
          QuadExt(Rational(1), Rational(2), Rational(2)));
}

TEST_CASE("real root counting") {
    PolyQ x = PolyQ::X();
    PolyQ x2m2({Rational(-2), Rational(0), Rational(1)});
    PolyQ x2p1({Rational(1), Rational(0), Rational(1)});
    CHECK(count_real_roots(x2m2) == 2);
    CHECK(count_real_roots(x2p1) == 0);
    CHECK(count_real_roots(x * x2m2 * Rational(5)) == 3); // X^3 - 2X, roots 0, +-sqrt2
    CHECK(count_real_roots(PolyQ::linear(Rational(9))) == 1);
    CHECK_THROWS_AS(count_real_roots(PolyQ::linear(Rational(1)).pow(2)), MathError);
    CHECK_THROWS_AS(count_real_roots(PolyQ::constant(Rational(1))), MathError);

    CHECK(count_real_roots_in(x2m2, Rational(0), Rational(2)) == 1);
    CHECK(count_real_roots_in(x2m2, Rational(-2), Rational(2)) == 2);
    CHECK(count_real_roots_in(x2m2, Rational(2), Rational(3)) == 0);
    CHECK_THROWS_AS(count_real_roots_in(x2m2, Rational(2), Rational(1)), MathError);
}

TEST_CASE("root bound dominates all rational roots") {
    std::mt19937 rng(1618);
    std::uniform_int_distribution<long> roots(-20, 20);
    for (int t = 0; t < 50; ++t) {
        long a = roots(rng), b = roots(rng);
        PolyQ p = PolyQ::linear(Rational(a)) * PolyQ::linear(Rational(b)) * Rational(2);
        Rational r = root_bound(p);
        CHECK(Rational(a).abs() <= r);
        CHECK(Rational(b).abs() <= r);
    }
}

TEST_CASE("multivariate ring axioms hold on random samples") {
    std::mt19937 rng(5150);
    for (int t = 0; t < 100; ++t) {
        MultiPoly a = random_mpoly(rng, 3), b = random_mpoly(rng, 3), c = random_mpoly(rng, 3);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        CHECK(a * MultiPoly(3, Rational(1)) == a);
    }
}

TEST_CASE("multivariate evaluation agrees with substitution") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<long> vv(-4, 4);
    for (int t = 0; t < 50; ++t) {
        MultiPoly p = random_mpoly(rng, 3);
        std::vector<Rational> x = {Rational(vv(rng)), Rational(vv(rng)), Rational(vv(rng))};
        MultiPoly q = p;
        for (int i = 0; i < 3; ++i) q = q.substitute(i, x[static_cast<size_t>(i)]);
        CHECK(q.is_constant());
        CHECK(q.constant_term() == p.eval(x));
    }
}

TEST_CASE("multivariate printing is deterministic and named") {
    MultiPoly r = MultiPoly::variable(0, 2), s = MultiPoly::variable(1, 2);
    MultiPoly p = r * r * Rational(3) - s * Rational(2) + MultiPoly(2, Rational(1));
    std::string once = p.to_string({"r", "s"});
    CHECK(once == p.to_string({"r", "s"}));
    CHECK(once.find("r") != std::string::npos);
    CHECK(once.find("s") != std::string::npos);
    CHECK(MultiPoly(2).to_string() == "0");
    CHECK(p.total_degree() == 2);
    CHECK(MultiPoly(2).total_degree() == -1);
}
