#pragma once

#include <string>
#include <utility>
#include <vector>

#include "frob/rational.hpp"

namespace frob {

// Univariate polynomial over Q.  Coefficients ascending (coeffs[k] multiplies
// X^k); invariant: no trailing zero coefficient, the zero polynomial has an
// empty coefficient vector and degree() == -1.
class PolyQ {
public:
    PolyQ() = default;
    explicit PolyQ(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }
    static PolyQ constant(const Rational& r) { return PolyQ({r}); }
    static PolyQ X() { return PolyQ({Rational(0), Rational(1)}); }
    // (X - lambda)
    static PolyQ linear(const Rational& lambda) { return PolyQ({-lambda, Rational(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == Rational(1); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Rational(0);
    }
    Rational leading() const { return is_zero() ? Rational(0) : c_.back(); }
    bool is_monic() const { return !is_zero() && c_.back() == Rational(1); }
    PolyQ monic() const;

    PolyQ operator-() const;
    friend PolyQ operator+(const PolyQ& p, const PolyQ& q);
    friend PolyQ operator-(const PolyQ& p, const PolyQ& q);
    friend PolyQ operator*(const PolyQ& p, const PolyQ& q);
    PolyQ operator*(const Rational& s) const;
    friend bool operator==(const PolyQ& p, const PolyQ& q) { return p.c_ == q.c_; }
    friend bool operator!=(const PolyQ& p, const PolyQ& q) { return p.c_ != q.c_; }

    PolyQ derivative() const;
    PolyQ pow(int e) const;

    // Evaluation over any commutative ring elements constructible from
    // Rational (Rational, QuadExt, MultiPoly, square matrices...).
    template <class K>
    K eval(const K& x) const {
        K acc = K(Rational(0));
        for (int k = degree(); k >= 0; --k) acc = acc * x + K(c_[static_cast<size_t>(k)]);
        return acc;
    }
    Rational operator()(const Rational& x) const { return eval<Rational>(x); }

    std::string to_string(const std::string& var = "X") const;

private:
    void normalize();
    std::vector<Rational> c_;
};

// Euclidean division p = q*d + r with deg r < deg d; d must be nonzero.
std::pair<PolyQ, PolyQ> divmod(const PolyQ& p, const PolyQ& d);
// Exact quotient; throws if the remainder is nonzero.
PolyQ exact_div(const PolyQ& p, const PolyQ& d);
// Monic gcd; throws MathError when both arguments are zero.
PolyQ poly_gcd(PolyQ a, PolyQ b);
bool divides(const PolyQ& d, const PolyQ& p);

// Yun's square-free decomposition of a nonzero p: returns (f_i, m_i) with the
// m_i strictly increasing, the f_i monic, squarefree, pairwise coprime and
// nonconstant, and lc(p) * prod f_i^{m_i} == p.
std::vector<std::pair<PolyQ, int>> square_free_decomposition(const PolyQ& p);

// Number of distinct real roots via Sturm chains, evaluated at -inf/+inf.
// Requires a squarefree nonconstant input (gcd(p, p') constant); throws
// MathError otherwise.
int count_real_roots(const PolyQ& p);

// Number of distinct real roots in the half-open interval (a, b], a < b,
// for squarefree p with p(a) != 0 and p(b) != 0.
int count_real_roots_in(const PolyQ& p, const Rational& a, const Rational& b);

// Cauchy bound: every real root lies in [-R, R].
Rational root_bound(const PolyQ& p);

} // namespace frob
