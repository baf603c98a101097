#pragma once

#include <map>
#include <string>
#include <vector>

#include "frob/rational.hpp"

namespace frob {

// Sparse multivariate polynomial over Q in a fixed number of variables.
// Terms are keyed by exponent vectors in a std::map, so iteration order (and
// everything derived from it) is deterministic.
class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(int nvars) : n_(nvars) {}
    MultiPoly(int nvars, const Rational& c);
    explicit MultiPoly(const Rational& c) : MultiPoly(0, c) {}

    static MultiPoly variable(int i, int nvars);

    int num_vars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == std::vector<int>(static_cast<size_t>(n_), 0)); }
    Rational constant_term() const;
    int total_degree() const; // -1 for the zero polynomial
    size_t num_terms() const { return terms_.size(); }
    const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { a += b; return a; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { a -= b; return a; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly operator*(const Rational& s) const;
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    Rational eval(const std::vector<Rational>& x) const;
    // Substitutes a single variable by a rational constant; the variable count
    // is unchanged (the slot just stops appearing in exponents).
    MultiPoly substitute(int i, const Rational& value) const;

    std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    void add_term(const std::vector<int>& exp, const Rational& c);
    int n_ = 0;
    std::map<std::vector<int>, Rational> terms_;
};

} // namespace frob
