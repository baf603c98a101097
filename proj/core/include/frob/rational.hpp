#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>

#include "frob/errors.hpp"

namespace frob {

// Arbitrary-precision rational number, always held in canonical form:
// gcd(num, den) = 1 and den >= 1.  Backed by GMP; every construction path
// canonicalizes, so two equal values always compare bitwise equal and hash
// alike.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(static_cast<long>(n)) {}
    Rational(long n, long d);
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    explicit Rational(const mpz_class& z) : v_(z) {}

    // Parses "p", "-p", "p/q" (base 10).  Throws MathError on anything else.
    static Rational from_string(const std::string& s);
    std::string to_string() const; // "p" or "p/q", canonical

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }
    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational pow(long e) const;
    Rational inverse() const;

    std::size_t hash() const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class v_;
};

// Exact square root: returns sqrt(r) if r is the square of a rational,
// std::nullopt otherwise (in particular for every negative r).
std::optional<Rational> is_square_rational(const Rational& r);

// n choose k as an exact rational (n >= 0; zero when k < 0 or k > n).
Rational binomial(long n, long k);

} // namespace frob

template <>
struct std::hash<frob::Rational> {
    std::size_t operator()(const frob::Rational& r) const { return r.hash(); }
};
