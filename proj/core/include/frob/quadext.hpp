#pragma once

#include <string>

#include "frob/rational.hpp"

namespace frob {

// Element a + b*s of the real quadratic extension Q(s), s = sqrt(d), for a
// fixed positive non-square rational d.  Every element carries its d; mixing
// two elements whose d values differ is an error.  Canonical form: whenever
// b == 0 the element is a plain rational and d is dropped (stored as 0), so
// rational values interoperate between contexts and s*s == d holds as plain
// Rational equality.
class QuadExt {
public:
    QuadExt() : a_(0), b_(0), d_(0) {}
    QuadExt(long n) : a_(n), b_(0), d_(0) {}
    QuadExt(const Rational& a) : a_(a), b_(0), d_(0) {}
    QuadExt(const Rational& a, const Rational& b, const Rational& d);

    // s itself, i.e. 0 + 1*sqrt(d).
    static QuadExt sqrt_of(const Rational& d) { return QuadExt(Rational(0), Rational(1), d); }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& d() const { return d_; } // 0 when no extension attached
    bool is_rational() const { return b_.is_zero(); }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    QuadExt conj() const { return QuadExt(a_, -b_, d_); }
    Rational norm() const { return a_ * a_ - b_ * b_ * d_; }

    QuadExt operator-() const { return QuadExt(-a_, -b_, d_); }
    QuadExt& operator+=(const QuadExt& o);
    QuadExt& operator-=(const QuadExt& o);
    QuadExt& operator*=(const QuadExt& o);
    QuadExt& operator/=(const QuadExt& o);

    friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
    friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
    friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
    friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_.is_zero() || x.d_ == y.d_);
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

    QuadExt inverse() const;
    std::string to_string() const;

private:
    // Common d for a binary operation; throws on a genuine mismatch.
    static Rational merge_d(const QuadExt& x, const QuadExt& y);
    void normalize() { if (b_.is_zero()) d_ = Rational(0); }

    Rational a_, b_, d_;
};

} // namespace frob
