#include "frob/polynomial.hpp"

#include <sstream>

#include "frob/errors.hpp"

namespace frob {

void PolyQ::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

PolyQ PolyQ::monic() const {
    if (is_zero()) throw MathError("monic(): zero polynomial");
    return *this * leading().inverse();
}

PolyQ PolyQ::operator-() const {
    std::vector<Rational> r(c_.size());
    for (size_t k = 0; k < c_.size(); ++k) r[k] = -c_[k];
    return PolyQ(std::move(r));
}

PolyQ operator+(const PolyQ& p, const PolyQ& q) {
    std::vector<Rational> r(std::max(p.c_.size(), q.c_.size()));
    for (size_t k = 0; k < r.size(); ++k) r[k] = p.coeff(static_cast<int>(k)) + q.coeff(static_cast<int>(k));
    return PolyQ(std::move(r));
}

PolyQ operator-(const PolyQ& p, const PolyQ& q) {
    std::vector<Rational> r(std::max(p.c_.size(), q.c_.size()));
    for (size_t k = 0; k < r.size(); ++k) r[k] = p.coeff(static_cast<int>(k)) - q.coeff(static_cast<int>(k));
    return PolyQ(std::move(r));
}

PolyQ operator*(const PolyQ& p, const PolyQ& q) {
    if (p.is_zero() || q.is_zero()) return PolyQ();
    std::vector<Rational> r(p.c_.size() + q.c_.size() - 1);
    for (size_t i = 0; i < p.c_.size(); ++i)
        for (size_t j = 0; j < q.c_.size(); ++j) r[i + j] += p.c_[i] * q.c_[j];
    return PolyQ(std::move(r));
}

PolyQ PolyQ::operator*(const Rational& s) const {
    std::vector<Rational> r(c_.size());
    for (size_t k = 0; k < c_.size(); ++k) r[k] = c_[k] * s;
    return PolyQ(std::move(r));
}

PolyQ PolyQ::derivative() const {
    if (degree() < 1) return PolyQ();
    std::vector<Rational> r(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) r[k - 1] = c_[k] * Rational(static_cast<long>(k));
    return PolyQ(std::move(r));
}

PolyQ PolyQ::pow(int e) const {
    if (e < 0) throw MathError("PolyQ::pow: negative exponent");
    PolyQ acc = PolyQ::constant(Rational(1));
    for (int i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

std::string PolyQ::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& a = c_[static_cast<size_t>(k)];
        if (a.is_zero()) continue;
        Rational mag = a.abs();
        if (first) {
            if (a.sign() < 0) os << "-";
            first = false;
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
        }
        if (k == 0 || mag != Rational(1)) os << mag.to_string();
        if (k > 0) {
            if (mag != Rational(1)) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

std::pair<PolyQ, PolyQ> divmod(const PolyQ& p, const PolyQ& d) {
    if (d.is_zero()) throw MathError("polynomial division by zero");
    std::vector<Rational> rem = p.coeffs();
    int dd = d.degree();
    if (p.degree() < dd) return {PolyQ(), p};
    std::vector<Rational> quot(static_cast<size_t>(p.degree() - dd + 1));
    Rational inv_lead = d.leading().inverse();
    for (int k = p.degree(); k >= dd; --k) {
        Rational q = rem[static_cast<size_t>(k)] * inv_lead;
        if (!q.is_zero()) {
            quot[static_cast<size_t>(k - dd)] = q;
            for (int j = 0; j <= dd; ++j)
                rem[static_cast<size_t>(k - dd + j)] -= q * d.coeff(j);
        }
    }
    return {PolyQ(std::move(quot)), PolyQ(std::move(rem))};
}

PolyQ exact_div(const PolyQ& p, const PolyQ& d) {
    auto [q, r] = divmod(p, d);
    if (!r.is_zero()) throw MathError("exact_div: division is not exact");
    return q;
}

bool divides(const PolyQ& d, const PolyQ& p) {
    if (d.is_zero()) return p.is_zero();
    return divmod(p, d).second.is_zero();
}

PolyQ poly_gcd(PolyQ a, PolyQ b) {
    if (a.is_zero() && b.is_zero()) throw MathError("poly_gcd: both arguments are zero");
    while (!b.is_zero()) {
        PolyQ r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

std::vector<std::pair<PolyQ, int>> square_free_decomposition(const PolyQ& p) {
    if (p.is_zero()) throw MathError("square_free_decomposition: zero polynomial");
    std::vector<std::pair<PolyQ, int>> out;
    if (p.degree() == 0) return out;
    // Yun's algorithm over a characteristic-0 field.
    PolyQ f = p.monic();
    PolyQ fp = f.derivative();
    PolyQ a = poly_gcd(f, fp);
    PolyQ b = exact_div(f, a);
    PolyQ c = exact_div(fp, a);
    int m = 1;
    while (b.degree() > 0) {
        PolyQ d = c - b.derivative();
        PolyQ g = poly_gcd(b, d);
        if (g.degree() > 0) out.emplace_back(g, m);
        b = exact_div(b, g);
        c = exact_div(d, g);
        ++m;
    }
    return out;
}

namespace {

std::vector<PolyQ> sturm_chain(const PolyQ& p) {
    std::vector<PolyQ> chain;
    chain.push_back(p);
    chain.push_back(p.derivative());
    while (!chain.back().is_zero()) {
        PolyQ r = divmod(chain[chain.size() - 2], chain.back()).second;
        chain.push_back(-r);
    }
    chain.pop_back(); // drop the trailing zero
    return chain;
}

int sign_changes(const std::vector<int>& signs) {
    int changes = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

void require_squarefree(const PolyQ& p) {
    if (p.degree() < 1) throw MathError("count_real_roots: constant polynomial");
    if (poly_gcd(p, p.derivative()).degree() != 0)
        throw MathError("count_real_roots: polynomial is not squarefree");
}

} // namespace

int count_real_roots(const PolyQ& p) {
    require_squarefree(p);
    auto chain = sturm_chain(p);
    std::vector<int> at_minus, at_plus;
    for (const PolyQ& q : chain) {
        int lc = q.leading().sign();
        at_plus.push_back(lc);
        at_minus.push_back(q.degree() % 2 == 0 ? lc : -lc);
    }
    return sign_changes(at_minus) - sign_changes(at_plus);
}

int count_real_roots_in(const PolyQ& p, const Rational& a, const Rational& b) {
    require_squarefree(p);
    if (!(a < b)) throw MathError("count_real_roots_in: empty interval");
    if (p(a).is_zero() || p(b).is_zero())
        throw MathError("count_real_roots_in: endpoint is a root");
    auto chain = sturm_chain(p);
    std::vector<int> at_a, at_b;
    for (const PolyQ& q : chain) {
        at_a.push_back(q(a).sign());
        at_b.push_back(q(b).sign());
    }
    return sign_changes(at_a) - sign_changes(at_b);
}

Rational root_bound(const PolyQ& p) {
    if (p.degree() < 1) return Rational(1);
    Rational lead = p.leading().abs();
    Rational best(0);
    for (int k = 0; k < p.degree(); ++k) {
        Rational t = p.coeff(k).abs() / lead;
        if (t > best) best = t;
    }
    return best + Rational(1);
}

} // namespace frob
