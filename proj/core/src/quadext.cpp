#include "frob/quadext.hpp"

namespace frob {

QuadExt::QuadExt(const Rational& a, const Rational& b, const Rational& d)
    : a_(a), b_(b), d_(d) {
    if (b_.is_zero()) {
        d_ = Rational(0);
        return;
    }
    if (d_.sign() <= 0)
        throw MathError("quadratic extension requires positive d, got d = " + d_.to_string());
    if (is_square_rational(d_))
        throw MathError("d = " + d_.to_string() +
                        " is a perfect square; use plain rationals instead of Q(sqrt(d))");
}

Rational QuadExt::merge_d(const QuadExt& x, const QuadExt& y) {
    if (x.d_.is_zero()) return y.d_;
    if (y.d_.is_zero() || x.d_ == y.d_) return x.d_;
    throw MathError("mixed quadratic extensions: sqrt(" + x.d_.to_string() +
                    ") vs sqrt(" + y.d_.to_string() + ")");
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
    d_ = merge_d(*this, o);
    a_ += o.a_;
    b_ += o.b_;
    normalize();
    return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
    d_ = merge_d(*this, o);
    a_ -= o.a_;
    b_ -= o.b_;
    normalize();
    return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
    Rational d = merge_d(*this, o);
    Rational a = a_ * o.a_ + b_ * o.b_ * d;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = a;
    b_ = b;
    d_ = d;
    normalize();
    return *this;
}

QuadExt QuadExt::inverse() const {
    if (is_zero()) throw MathError("inverse of zero");
    if (is_rational()) return QuadExt(a_.inverse());
    Rational n = norm();
    // n == 0 with (a,b) != 0 would mean d = (a/b)^2, a square -- excluded at
    // construction, so this cannot fire for well-formed elements.
    if (n.is_zero()) throw MathError("zero norm in quadratic extension (d is a square?)");
    return QuadExt(a_ / n, -b_ / n, d_);
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
    return *this *= o.inverse();
}

std::string QuadExt::to_string() const {
    if (is_rational()) return a_.to_string();
    std::string s;
    if (!a_.is_zero()) s += a_.to_string();
    if (b_ == Rational(1)) {
        s += s.empty() ? "" : "+";
    } else if (b_ == Rational(-1)) {
        s += "-";
    } else {
        if (!s.empty() && b_.sign() > 0) s += "+";
        s += b_.to_string() + "*";
    }
    s += "sqrt(" + d_.to_string() + ")";
    return s;
}

} // namespace frob
