#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <unordered_set>

#include "frob/errors.hpp"
#include "frob/quadext.hpp"
#include "frob/rational.hpp"

using namespace frob;

TEST_CASE("rational construction and normal form") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(-6, 4) == Rational(3, -2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK_THROWS_AS(Rational(1, 0), MathError);
    CHECK(Rational::from_string("22/7") == Rational(22, 7));
    CHECK(Rational::from_string("-5") == Rational(-5));
    CHECK_THROWS_AS(Rational::from_string("1/0"), MathError);
    CHECK_THROWS_AS(Rational::from_string("x"), MathError);
    CHECK(Rational(3, 2).to_string() == "3/2");
    CHECK(Rational(-4, 2).to_string() == "-2");
}

TEST_CASE("rational arithmetic and order") {
    Rational a(3, 4), b(-5, 6);
    CHECK(a + b == Rational(-1, 12));
    CHECK(a - b == Rational(19, 12));
    CHECK(a * b == Rational(-5, 8));
    CHECK(a / b == Rational(-9, 10));
    CHECK_THROWS_AS(a / Rational(0), MathError);
    CHECK(a.pow(3) == Rational(27, 64));
    CHECK(a.pow(-2) == Rational(16, 9));
    CHECK(Rational(0).pow(0) == Rational(1));
    CHECK_THROWS_AS(Rational(0).inverse(), MathError);
    CHECK(b < a);
    CHECK(b.abs() == Rational(5, 6));
    CHECK(b.sign() == -1);
    CHECK(Rational(4, 2).is_integer());
    CHECK_FALSE(a.is_integer());
}

TEST_CASE("rational hashing is consistent with equality") {
    std::unordered_set<size_t> seen;
    CHECK(Rational(1, 2).hash() == Rational(2, 4).hash());
    // sanity: a few distinct values produce at least a few distinct hashes
    for (long k = 1; k <= 8; ++k) seen.insert(Rational(k, 3).hash());
    CHECK(seen.size() > 1);
}

TEST_CASE("square detection in Q") {
    CHECK(*is_square_rational(Rational(4, 9)) == Rational(2, 3));
    CHECK(*is_square_rational(Rational(0)) == Rational(0));
    CHECK(*is_square_rational(Rational(49)) == Rational(7));
    CHECK_FALSE(is_square_rational(Rational(8)).has_value());
    CHECK_FALSE(is_square_rational(Rational(2, 3)).has_value());
    CHECK_FALSE(is_square_rational(Rational(-4)).has_value());
}

TEST_CASE("binomial values and Pascal identity") {
    CHECK(binomial(0, 0) == Rational(1));
    CHECK(binomial(5, 2) == Rational(10));
    CHECK(binomial(5, 7) == Rational(0));
    for (long n = 1; n <= 12; ++n)
        for (long k = 0; k <= n; ++k)
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("quadratic extension canonical form") {
    QuadExt zero_b(Rational(3), Rational(0), Rational(5));
    CHECK(zero_b.is_rational());
    CHECK(zero_b.d() == Rational(0));
    QuadExt x(Rational(1), Rational(2), Rational(3));
    CHECK_FALSE(x.is_rational());
    CHECK(QuadExt::sqrt_of(Rational(2)).to_string() == "sqrt(2)");
}

TEST_CASE("quadratic extension arithmetic") {
    const Rational d(5);
    QuadExt x(Rational(1), Rational(2), d);   // 1 + 2 sqrt(5)
    QuadExt y(Rational(-3), Rational(1), d);  // -3 + sqrt(5)
    CHECK(x + y == QuadExt(Rational(-2), Rational(3), d));
    CHECK(x - y == QuadExt(Rational(4), Rational(1), d));
    // (1 + 2 sqrt5)(-3 + sqrt5) = -3 + sqrt5 - 6 sqrt5 + 2*5 = 7 - 5 sqrt5
    CHECK(x * y == QuadExt(Rational(7), Rational(-5), d));
    CHECK(x.conj() == QuadExt(Rational(1), Rational(-2), d));
    CHECK(x.norm() == Rational(1 - 4 * 5));
    CHECK(x * x.inverse() == QuadExt(Rational(1)));
    CHECK_THROWS_AS(QuadExt(Rational(0)).inverse(), MathError);
    QuadExt other_d(Rational(1), Rational(1), Rational(7));
    CHECK_THROWS_AS(x + other_d, MathError);
    CHECK_THROWS_AS(x * other_d, MathError);
}

TEST_CASE("quadratic extension interacts with rationals") {
    QuadExt x(Rational(1, 2), Rational(1, 3), Rational(2));
    QuadExt r(Rational(3));
    CHECK(x * r == QuadExt(Rational(3, 2), Rational(1), Rational(2)));
    CHECK((x - x).is_zero());
    CHECK((x - x).is_rational());
    // norm is multiplicative (randomized)
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<long> u(-6, 6);
    for (int t = 0; t < 100; ++t) {
        QuadExt a(Rational(u(rng)), Rational(u(rng)), Rational(3));
        QuadExt b(Rational(u(rng)), Rational(u(rng)), Rational(3));
        CHECK((a * b).norm() == a.norm() * b.norm());
    }
}
