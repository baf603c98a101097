#include "frob/rational.hpp"

#include <cctype>
#include <ostream>

namespace frob {

Rational::Rational(long n, long d) {
    if (d == 0) throw MathError("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw MathError("division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::from_string(const std::string& s) {
    if (s.empty()) throw MathError("empty string is not a rational");
    // mpq_class's string constructor accepts forms we do not want (hex,
    // whitespace-embedded); validate the shape ourselves.
    std::size_t i = 0;
    auto digits = [&](std::size_t from) {
        std::size_t j = from;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        return j;
    };
    if (s[i] == '+' || s[i] == '-') ++i;
    std::size_t after_num = digits(i);
    if (after_num == i) throw MathError("malformed rational literal: '" + s + "'");
    if (after_num != s.size()) {
        if (s[after_num] != '/') throw MathError("malformed rational literal: '" + s + "'");
        std::size_t j = after_num + 1;
        if (j < s.size() && (s[j] == '+' || s[j] == '-')) ++j;
        std::size_t after_den = digits(j);
        if (after_den == j || after_den != s.size())
            throw MathError("malformed rational literal: '" + s + "'");
    }
    mpq_class q(s, 10);
    if (q.get_den() == 0) throw MathError("rational with zero denominator: '" + s + "'");
    q.canonicalize();
    return Rational(q);
}

std::string Rational::to_string() const {
    return v_.get_str();
}

Rational Rational::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), static_cast<unsigned long>(e));
    return Rational(mpq_class(num, den)); // already canonical: gcd(n,d)=1 implies gcd(n^e,d^e)=1
}

Rational Rational::inverse() const {
    if (is_zero()) throw MathError("inverse of zero");
    return Rational(mpq_class(v_.get_den(), v_.get_num()));
}

std::size_t Rational::hash() const {
    // Fold the limbs of numerator and denominator.
    auto fold = [](const mpz_class& z, std::size_t seed) {
        std::size_t h = seed ^ static_cast<std::size_t>(mpz_sgn(z.get_mpz_t()) + 2);
        std::size_t n = mpz_size(z.get_mpz_t());
        for (std::size_t i = 0; i < n; ++i) {
            mp_limb_t limb = mpz_getlimbn(z.get_mpz_t(), static_cast<mp_size_t>(i));
            h ^= static_cast<std::size_t>(limb) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    };
    return fold(v_.get_den(), fold(v_.get_num(), 0xfeedULL));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

std::optional<Rational> is_square_rational(const Rational& r) {
    if (r.sign() < 0) return std::nullopt;
    mpz_class n = r.num(), d = r.den();
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(d.get_mpz_t()) == 0) return std::nullopt;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    return Rational(mpq_class(sn, sd));
}

Rational binomial(long n, long k) {
    if (n < 0) throw MathError("binomial with negative n");
    if (k < 0 || k > n) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(b);
}

} // namespace frob
