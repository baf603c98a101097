#include "frob/multipoly.hpp"

#include <numeric>
#include <sstream>

#include "frob/errors.hpp"

namespace frob {

MultiPoly::MultiPoly(int nvars, const Rational& c) : n_(nvars) {
    if (!c.is_zero()) terms_.emplace(std::vector<int>(static_cast<size_t>(nvars), 0), c);
}

MultiPoly MultiPoly::variable(int i, int nvars) {
    if (i < 0 || i >= nvars) throw MathError("MultiPoly::variable: index out of range");
    MultiPoly p(nvars);
    std::vector<int> e(static_cast<size_t>(nvars), 0);
    e[static_cast<size_t>(i)] = 1;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

Rational MultiPoly::constant_term() const {
    auto it = terms_.find(std::vector<int>(static_cast<size_t>(n_), 0));
    return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

void MultiPoly::add_term(const std::vector<int>& exp, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(n_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (n_ != o.n_) throw MathError("MultiPoly: mixed variable counts");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (n_ != o.n_) throw MathError("MultiPoly: mixed variable counts");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.n_ != b.n_) throw MathError("MultiPoly: mixed variable counts");
    MultiPoly r(a.n_);
    std::vector<int> e(static_cast<size_t>(a.n_));
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
            r.add_term(e, ca * cb);
        }
    return r;
}

MultiPoly MultiPoly::operator*(const Rational& s) const {
    if (s.is_zero()) return MultiPoly(n_);
    MultiPoly r(n_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * s);
    return r;
}

Rational MultiPoly::eval(const std::vector<Rational>& x) const {
    if (static_cast<int>(x.size()) != n_) throw MathError("MultiPoly::eval: wrong arity");
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (size_t k = 0; k < e.size(); ++k)
            if (e[k] != 0) t *= x[k].pow(e[k]);
        acc += t;
    }
    return acc;
}

MultiPoly MultiPoly::substitute(int i, const Rational& value) const {
    if (i < 0 || i >= n_) throw MathError("MultiPoly::substitute: index out of range");
    MultiPoly r(n_);
    for (const auto& [e0, c0] : terms_) {
        std::vector<int> e = e0;
        Rational c = c0;
        if (e[static_cast<size_t>(i)] != 0) {
            c *= value.pow(e[static_cast<size_t>(i)]);
            e[static_cast<size_t>(i)] = 0;
        }
        r.add_term(e, c);
    }
    return r;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool has_var = false;
        for (int v : e)
            if (v != 0) { has_var = true; break; }
        if (!has_var || mag != Rational(1)) os << mag.to_string();
        bool prev = !has_var || mag != Rational(1);
        for (size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (prev) os << "*";
            if (k < names.size()) os << names[k];
            else os << "x" << (k + 1);
            if (e[k] > 1) os << "^" << e[k];
            prev = true;
        }
    }
    return os.str();
}

} // namespace frob
