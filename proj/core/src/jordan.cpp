#include <algorithm>
#include <map>
#include <sstream>

#include "frob/classify.hpp"
#include "frob/errors.hpp"

namespace frob {

using MatE = Matrix<QuadExt>;

namespace {

MatE to_quadext(const MatQ& m) {
    MatE out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = QuadExt(m(i, j));
    return out;
}

template <class K>
K pow_k(const K& x, int e) {
    K acc(Rational(1));
    for (int i = 0; i < e; ++i) acc = acc * x;
    return acc;
}

// Appendix case (A): lower unit-triangular P with
// p_{kl} = (-lambda)^{k-l} C(n-l, k-l) for k >= l.
template <class K>
Matrix<K> casea_p_t(int n, const K& lambda) {
    Matrix<K> p(n, n);
    for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= k; ++l)
            p(k - 1, l - 1) = pow_k(-lambda, k - l) * K(binomial(n - l, k - l));
    return p;
}

// chi = ((X - r)^2 + s2)^{n/2}; rational because s only appears squared.
std::vector<Rational> casec_chi_coeffs(int n, const Rational& r, const Rational& s2) {
    PolyQ quad({r * r + s2, Rational(-2) * r, Rational(1)});
    PolyQ chi = quad.pow(n / 2);
    std::vector<Rational> d(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) d[static_cast<size_t>(k)] = chi.coeff(k);
    return d;
}

// Shared recurrence fill for the case-C transition matrix; entries of any
// commutative ring R (QuadExt for numeric work, MultiPoly for symbolic).
// first_row has length n; D holds the characteristic coefficients D_{n,k}.
template <class R>
std::vector<std::vector<R>> casec_fill(int n, const std::vector<R>& first_row, const R& r,
                                       const R& s, const std::vector<R>& d) {
    const R zero = r - r; // zero of the ring, with the right arity for MultiPoly
    std::vector<std::vector<R>> p(static_cast<size_t>(n), std::vector<R>(static_cast<size_t>(n), zero));
    p[0] = first_row;
    auto at = [&](int k, int l) -> R& { return p[static_cast<size_t>(k - 1)][static_cast<size_t>(l - 1)]; };
    for (int k = 1; k <= n - 1; ++k) {
        const R& dn = d[static_cast<size_t>(n - k)];
        at(k + 1, 1) = at(1, 1) * dn + r * at(k, 1) + s * at(k, 2);
        at(k + 1, 2) = at(1, 2) * dn + r * at(k, 2) - s * at(k, 1);
        for (int j = 0; j <= n / 2 - 2; ++j) {
            at(k + 1, 2 * j + 3) =
                at(1, 2 * j + 3) * dn + r * at(k, 2 * j + 3) + s * at(k, 2 * j + 4) + at(k, 2 * j + 1);
            at(k + 1, 2 * j + 4) =
                at(1, 2 * j + 4) * dn + r * at(k, 2 * j + 4) - s * at(k, 2 * j + 3) + at(k, 2 * j + 2);
        }
    }
    return p;
}

Rational square_of(const QuadExt& s) {
    QuadExt sq = s * s;
    if (!sq.is_rational())
        throw MathError("case C: s must square to a rational");
    return sq.a();
}

} // namespace

MatQ casea_p(int n, const Rational& lambda) {
    return casea_p_t<Rational>(n, lambda);
}

MatE casec_p(int n, const Rational& r, const QuadExt& s, const Rational& p11,
             const Rational& p12) {
    if (n < 4 || n % 2 != 0) throw MathError("casec_p: n must be even and >= 4");
    std::vector<Rational> d = casec_chi_coeffs(n, r, square_of(s));
    std::vector<QuadExt> first(static_cast<size_t>(n), QuadExt());
    first[0] = QuadExt(p11);
    first[1] = QuadExt(p12);
    std::vector<QuadExt> de;
    for (const auto& x : d) de.emplace_back(x);
    auto rows = casec_fill<QuadExt>(n, first, QuadExt(r), s, de);
    MatE p(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) p(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return p;
}

MatE mz_matrix(int n, const Rational& r, const QuadExt& s) {
    if (n < 2 || n % 2 != 0) throw MathError("mz_matrix: n must be even and >= 2");
    MatE m(n, n);
    for (int j = 0; j < n / 2; ++j) {
        m(2 * j, 2 * j + 1) = -s;
        m(2 * j + 1, 2 * j) = s;
    }
    for (int i = 0; i < n; ++i) {
        m(i, i) += QuadExt(r);
        if (i + 2 < n) m(i, i + 2) += QuadExt(Rational(1));
    }
    return m;
}

std::vector<std::vector<MultiPoly>> casec_p_symbolic(int n, const Rational& p11,
                                                     const Rational& p12) {
    if (n < 4 || n % 2 != 0) throw MathError("casec_p_symbolic: n must be even and >= 4");
    const MultiPoly r = MultiPoly::variable(0, 2);
    const MultiPoly s = MultiPoly::variable(1, 2);
    // chi = ((X - r)^2 + s^2)^{n/2}, coefficients in Q[r, s].
    std::vector<MultiPoly> chi{MultiPoly(2, Rational(1))};
    std::vector<MultiPoly> quad{r * r + s * s, r * Rational(-2), MultiPoly(2, Rational(1))};
    for (int rep = 0; rep < n / 2; ++rep) {
        std::vector<MultiPoly> next(chi.size() + 2, MultiPoly(2));
        for (size_t i = 0; i < chi.size(); ++i)
            for (size_t j = 0; j < 3; ++j) next[i + j] += chi[i] * quad[j];
        chi = std::move(next);
    }
    std::vector<MultiPoly> first(static_cast<size_t>(n), MultiPoly(2));
    first[0] = MultiPoly(2, p11);
    first[1] = MultiPoly(2, p12);
    return casec_fill<MultiPoly>(n, first, r, s, chi);
}

namespace {

MultiPoly det_rec(const std::vector<std::vector<MultiPoly>>& a, uint32_t rowmask, int col,
                  std::map<uint32_t, MultiPoly>& memo) {
    const int n = static_cast<int>(a.size());
    if (col == n) return MultiPoly(2, Rational(1));
    auto it = memo.find(rowmask);
    if (it != memo.end()) return it->second;
    MultiPoly acc(2);
    int pos = 0;
    for (int row = 0; row < n; ++row) {
        if (!(rowmask & (uint32_t{1} << row))) continue;
        const MultiPoly& entry = a[static_cast<size_t>(row)][static_cast<size_t>(col)];
        if (!entry.is_zero()) {
            MultiPoly sub = det_rec(a, rowmask & ~(uint32_t{1} << row), col + 1, memo);
            MultiPoly term = entry * sub;
            if (pos % 2 == 0) acc += term;
            else acc -= term;
        }
        ++pos;
    }
    memo.emplace(rowmask, acc);
    return acc;
}

} // namespace

MultiPoly casec_detp_symbolic(int n, const Rational& p11, const Rational& p12) {
    auto p = casec_p_symbolic(n, p11, p12);
    std::map<uint32_t, MultiPoly> memo;
    return det_rec(p, (uint32_t{1} << n) - 1, 0, memo);
}

namespace {

// Scalar factor q_n in det(P) = s^{n^2/4} (p11^2 + p12^2)^{n/2} q_n; the value
// is forced by the recurrence that builds P.
Rational casec_qn(int n) {
    return Rational(2).pow((n / 2) * (n / 2 - 1)) * Rational(n / 2 % 2 == 0 ? 1 : -1);
}

} // namespace

MultiPoly casec_detp_formula(int n, const Rational& p11, const Rational& p12) {
    if (n < 4 || n % 2 != 0) throw MathError("casec_detp_formula: n must be even and >= 4");
    Rational scale = (p11 * p11 + p12 * p12).pow(n / 2) * casec_qn(n);
    MultiPoly s = MultiPoly::variable(1, 2);
    MultiPoly spow(2, Rational(1));
    for (int i = 0; i < n * n / 4; ++i) spow = spow * s;
    return spow * scale;
}

QuadExt detP_formula_check(int n, const Rational& r, const QuadExt& s, const Rational& p11,
                           const Rational& p12) {
    if (n % 2 != 0) throw MathError("detP_formula_check: n must be even");
    MatE p = casec_p(n, r, s, p11, p12);
    QuadExt direct = det(p);
    QuadExt formula =
        pow_k(s, n * n / 4) * QuadExt((p11 * p11 + p12 * p12).pow(n / 2) * casec_qn(n));
    if (direct != formula)
        throw CrossCheckError("detP_formula_check: closed formula disagrees with det(P)");
    return direct;
}

// --- rational factor extraction -------------------------------------------

namespace {

// Integer roots of a monic squarefree integer polynomial, via Sturm-driven
// bisection down to unit-width intervals plus exact candidate evaluation.
std::vector<Rational> integer_roots(const PolyQ& g) {
    std::vector<Rational> roots;
    if (g.degree() < 1) return roots;
    Rational bound = root_bound(g);
    struct Iv { Rational a, b; int count; };
    std::vector<Iv> todo;
    int total = count_real_roots_in(g, -bound, bound);
    if (total > 0) todo.push_back({-bound, bound, total});
    while (!todo.empty()) {
        Iv iv = todo.back();
        todo.pop_back();
        if (iv.b - iv.a <= Rational(1)) {
            // Any integer root in (a, b] is one of at most two candidates.
            // floor(x) for rational x.
            auto floor_of = [](const Rational& x) {
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), x.raw().get_num_mpz_t(), x.raw().get_den_mpz_t());
                return q;
            };
            mpz_class lo = floor_of(iv.a) + 1, hi = floor_of(iv.b);
            for (mpz_class k = lo; k <= hi; ++k) {
                Rational cand{mpq_class(k)};
                if (g(cand).is_zero()) roots.push_back(cand);
            }
            continue;
        }
        Rational mid = (iv.a + iv.b) / Rational(2);
        while (g(mid).is_zero()) mid = (iv.a + mid) / Rational(2);
        int left = count_real_roots_in(g, iv.a, mid);
        if (left > 0) todo.push_back({iv.a, mid, left});
        if (iv.count - left > 0) todo.push_back({mid, iv.b, iv.count - left});
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

bool divisible(const Rational& value, const Rational& divisor) {
    if (divisor.is_zero()) return false;
    return (value / divisor).is_integer();
}

} // namespace

SquarefreeFactors factor_squarefree_rational(const PolyQ& f) {
    if (f.is_zero() || !f.is_monic())
        throw MathError("factor_squarefree_rational: monic nonzero polynomial required");
    if (poly_gcd(f, f.derivative()).degree() != 0 && f.degree() > 1)
        throw MathError("factor_squarefree_rational: input must be squarefree");
    SquarefreeFactors out;
    if (f.degree() == 0) return out;

    // Rescale to a monic integer polynomial: g(Y) = t^deg f(Y/t) with t the
    // lcm of the coefficient denominators; rational roots of f are y/t for
    // integer roots y of g, and monic factors of g stay integral.
    mpz_class t = 1;
    for (const auto& c : f.coeffs()) mpz_lcm(t.get_mpz_t(), t.get_mpz_t(), c.raw().get_den_mpz_t());
    Rational tq{mpq_class(t)};
    const int deg = f.degree();
    std::vector<Rational> gc(static_cast<size_t>(deg) + 1);
    for (int k = 0; k <= deg; ++k) gc[static_cast<size_t>(k)] = f.coeff(k) * tq.pow(deg - k);
    PolyQ g(gc);

    PolyQ h = g;
    for (const auto& y : integer_roots(g)) {
        out.roots.push_back(y / tq);
        h = exact_div(h, PolyQ::linear(y));
    }

    if (h.degree() >= 2) {
        // Monic integer quadratics Y^2 + bY + c dividing h; all roots of h lie
        // strictly inside |z| < bound, so |b| < 2*bound and |c| < bound^2.
        Rational bound = root_bound(h);
        long bmax = static_cast<long>(mpz_get_si(mpz_class(2 * bound.raw().get_num() / bound.raw().get_den()).get_mpz_t())) + 1;
        Rational c2 = bound * bound;
        long cmax = static_cast<long>(mpz_get_si(mpz_class(c2.raw().get_num() / c2.raw().get_den()).get_mpz_t())) + 1;
        Rational h0 = h(Rational(0)), h1 = h(Rational(1)), hm1 = h(Rational(-1));
        for (long c = -cmax; c <= cmax && h.degree() >= 2; ++c) {
            if (c == 0 || !divisible(h0, Rational(c))) continue;
            for (long b = -bmax; b <= bmax && h.degree() >= 2; ++b) {
                if (!divisible(h1, Rational(1 + b + c)) || !divisible(hm1, Rational(1 - b + c)))
                    continue;
                PolyQ q({Rational(c), Rational(b), Rational(1)});
                auto [quot, rem] = divmod(h, q);
                if (!rem.is_zero()) continue;
                out.quads.emplace_back(Rational(b) / tq, Rational(c) / (tq * tq));
                h = quot;
                h0 = h(Rational(0));
                h1 = h(Rational(1));
                hm1 = h(Rational(-1));
            }
        }
    }
    if (h.degree() > 0)
        throw MathError("irreducible factor of degree > 2 unsupported");
    std::sort(out.quads.begin(), out.quads.end());
    return out;
}

// --- full Jordanization -----------------------------------------------------

namespace {

// Writes sqrt(d) as f * sqrt(d0) with d0 a positive squarefree integer.
// Square factors are extracted by trial division up to 10^6 followed by a
// perfect-square test; a square prime factor beyond that bound stays in d0
// (still a correct radicand, just not minimal).
std::pair<Rational, Rational> squarefree_part(const Rational& d) {
    mpz_class den = d.raw().get_den();
    mpz_class big = mpz_class(d.raw().get_num()) * den;  // sqrt(n/m) = sqrt(nm)/m
    mpz_class f = 1;
    for (unsigned long p = 2; p <= 1000000UL; ++p) {
        mpz_class pp = mpz_class(p) * p;
        if (pp > big) break;
        while (mpz_divisible_p(big.get_mpz_t(), pp.get_mpz_t())) {
            big /= pp;
            f *= p;
        }
    }
    if (mpz_perfect_square_p(big.get_mpz_t())) {
        mpz_class rt;
        mpz_sqrt(rt.get_mpz_t(), big.get_mpz_t());
        f *= rt;
        big = 1;
    }
    return {Rational{mpq_class(f)} / Rational{mpq_class(den)}, Rational{mpq_class(big)}};
}

// Unifies every square root the blocks need into a single extension Q(sqrt(d)).
class ExtField {
public:
    QuadExt sqrt(const Rational& d) {
        if (d.sign() <= 0) throw MathError("jordanize: square root of a nonpositive value");
        if (auto r = is_square_rational(d)) return QuadExt(*r);
        auto [coef, d0] = squarefree_part(d);
        if (!dstar_) {
            dstar_ = d0;
            return QuadExt(Rational(0), coef, d0);
        }
        if (auto ratio = is_square_rational(d0 / *dstar_))
            return QuadExt(Rational(0), coef * *ratio, *dstar_);
        throw MathError("jordanize: incompatible quadratic extensions sqrt(" + dstar_->to_string() +
                        ") and sqrt(" + d.to_string() + ")");
    }
    const std::optional<Rational>& d() const { return dstar_; }

private:
    std::optional<Rational> dstar_;
};

// Deterministic cyclic-vector search over integer coordinate vectors in a
// growing box (lattice points are Zariski-dense, so this terminates).
std::vector<QuadExt> cyclic_vector(const MatE& r) {
    const int k = r.rows();
    std::vector<long> c(static_cast<size_t>(k), 0);
    for (long radius = 1;; ++radius) {
        // Odometer over [-radius, radius]^k, restricted to max-norm == radius.
        std::vector<long> v(static_cast<size_t>(k), -radius);
        while (true) {
            long maxabs = 0;
            for (long x : v) maxabs = std::max(maxabs, std::abs(x));
            if (maxabs == radius) {
                std::vector<QuadExt> cand(static_cast<size_t>(k));
                for (int i = 0; i < k; ++i) cand[static_cast<size_t>(i)] = QuadExt(Rational(v[static_cast<size_t>(i)]));
                MatE krylov(k, k);
                std::vector<QuadExt> w = cand;
                for (int j = k - 1; j >= 0; --j) {
                    for (int i = 0; i < k; ++i) krylov(i, j) = w[static_cast<size_t>(i)];
                    if (j > 0) w = r.apply(w);
                }
                if (rank(krylov) == k) return cand;
            }
            int pos = 0;
            while (pos < k && v[static_cast<size_t>(pos)] == radius) {
                v[static_cast<size_t>(pos)] = -radius;
                ++pos;
            }
            if (pos == k) break;
            ++v[static_cast<size_t>(pos)];
        }
    }
}

struct BlockSpec {
    bool complex_pair = false;
    QuadExt lambda;  // case A eigenvalue
    Rational r, s2;  // case B/C data
    QuadExt s;
    int mult = 1;
    PolyQ qpow; // rational polynomial whose kernel is the block (complex case)
};

} // namespace

JordanResult jordanize(const MatQ& m) {
    if (!is_nonderogatory(m)) throw MathError("jordanize: derogatory input");
    const int n = m.rows();
    ExtField ext;
    std::vector<BlockSpec> specs;
    for (const auto& [f, mult] : square_free_decomposition(char_poly(m))) {
        SquarefreeFactors fac = factor_squarefree_rational(f);
        for (const auto& root : fac.roots) {
            BlockSpec sp;
            sp.lambda = QuadExt(root);
            sp.mult = mult;
            specs.push_back(std::move(sp));
        }
        for (const auto& [b, c] : fac.quads) {
            Rational disc = b * b - c * Rational(4);
            if (disc.sign() > 0) {
                // Two conjugate real irrational eigenvalues (-b -+ sqrt(disc))/2.
                QuadExt half_root = ext.sqrt(disc) * QuadExt(Rational(1, 2));
                for (int sign : {-1, 1}) {
                    BlockSpec sp;
                    sp.lambda = QuadExt(-b / Rational(2)) +
                                (sign < 0 ? -half_root : half_root);
                    sp.mult = mult;
                    sp.qpow = PolyQ({c, b, Rational(1)}).pow(mult);
                    sp.complex_pair = false;
                    specs.push_back(std::move(sp));
                }
            } else {
                BlockSpec sp;
                sp.complex_pair = true;
                sp.r = -b / Rational(2);
                sp.s2 = c - b * b / Rational(4);
                sp.s = ext.sqrt(sp.s2);
                sp.mult = mult;
                sp.qpow = PolyQ({c, b, Rational(1)}).pow(mult);
                specs.push_back(std::move(sp));
            }
        }
    }

    MatE mk = to_quadext(m);
    MatE t(n, n);
    MatE j(n, n);
    JordanResult res;
    int off = 0;
    for (const auto& sp : specs) {
        const int kb = sp.complex_pair ? 2 * sp.mult : sp.mult;
        // Primary component: kernel of q(M)^mult (for irrational real pairs,
        // of (M - lambda)^mult over the extension).
        MatE power;
        if (!sp.complex_pair && sp.qpow.is_zero()) {
            MatQ base = m;
            Rational lam = sp.lambda.a();
            for (int i = 0; i < n; ++i) base(i, i) -= lam;
            MatQ acc = MatQ::identity(n);
            for (int e = 0; e < sp.mult; ++e) acc = acc * base;
            power = to_quadext(acc);
        } else if (!sp.complex_pair) {
            MatE base = mk;
            for (int i = 0; i < n; ++i) base(i, i) -= sp.lambda;
            power = MatE::identity(n);
            for (int e = 0; e < sp.mult; ++e) power = power * base;
        } else {
            power = to_quadext(poly_at(sp.qpow, m));
        }
        auto ker = kernel(power);
        if (static_cast<int>(ker.size()) != kb)
            throw CrossCheckError("jordanize: primary component has unexpected dimension");
        MatE bw(n, kb);
        for (int c = 0; c < kb; ++c)
            for (int i = 0; i < n; ++i) bw(i, c) = ker[static_cast<size_t>(c)][static_cast<size_t>(i)];
        // Restriction of M to the component, in the kernel basis.
        MatE rmat(kb, kb);
        for (int c = 0; c < kb; ++c) {
            std::vector<QuadExt> col(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i) col[static_cast<size_t>(i)] = bw(i, c);
            auto sol = solve(bw, mk.apply(col));
            if (!sol) throw CrossCheckError("jordanize: component is not invariant");
            for (int i = 0; i < kb; ++i) rmat(i, c) = (*sol)[static_cast<size_t>(i)];
        }
        MatE tb(kb, kb);
        MatE jb(kb, kb);
        std::string tag;
        if (!sp.complex_pair) {
            std::vector<QuadExt> x = cyclic_vector(rmat);
            MatE kr(kb, kb);
            std::vector<QuadExt> w = x;
            for (int col = kb - 1; col >= 0; --col) {
                for (int i = 0; i < kb; ++i) kr(i, col) = w[static_cast<size_t>(i)];
                if (col > 0) w = rmat.apply(w);
            }
            tb = kr * casea_p_t<QuadExt>(kb, sp.lambda);
            jb = MatE(kb, kb);
            for (int i = 0; i < kb; ++i) {
                jb(i, i) = sp.lambda;
                if (i + 1 < kb) jb(i, i + 1) = QuadExt(Rational(1));
            }
            tag = (kb == 1) ? "diag" : "A";
        } else if (sp.mult == 1) {
            std::vector<QuadExt> u = cyclic_vector(rmat);
            std::vector<QuadExt> ru = rmat.apply(u);
            QuadExt sinv = sp.s.inverse();
            std::vector<QuadExt> v(static_cast<size_t>(kb));
            for (int i = 0; i < kb; ++i)
                v[static_cast<size_t>(i)] = (ru[static_cast<size_t>(i)] - QuadExt(sp.r) * u[static_cast<size_t>(i)]) * sinv;
            for (int i = 0; i < kb; ++i) {
                tb(i, 0) = u[static_cast<size_t>(i)];
                tb(i, 1) = v[static_cast<size_t>(i)];
            }
            jb = mz_matrix(2, sp.r, sp.s);
            tag = "B";
        } else {
            std::vector<QuadExt> x = cyclic_vector(rmat);
            MatE kr(kb, kb);
            std::vector<QuadExt> w = x;
            for (int col = kb - 1; col >= 0; --col) {
                for (int i = 0; i < kb; ++i) kr(i, col) = w[static_cast<size_t>(i)];
                if (col > 0) w = rmat.apply(w);
            }
            tb = kr * casec_p(kb, sp.r, sp.s, Rational(1), Rational(0));
            jb = mz_matrix(kb, sp.r, sp.s);
            tag = "C";
        }
        MatE tfull = bw * tb;
        for (int c = 0; c < kb; ++c)
            for (int i = 0; i < n; ++i) t(i, off + c) = tfull(i, c);
        for (int a = 0; a < kb; ++a)
            for (int b2 = 0; b2 < kb; ++b2) j(off + a, off + b2) = jb(a, b2);
        res.case_tags.push_back(tag);
        off += kb;
    }
    if (off != n) throw CrossCheckError("jordanize: block sizes do not sum to n");
    if (mk * t != t * j)
        throw CrossCheckError("jordanize: similarity M*P != P*J");
    res.det_p = det(t);
    if (res.det_p.is_zero()) throw CrossCheckError("jordanize: transition matrix is singular");
    res.j = std::move(j);
    res.p = std::move(t);
    res.ext_d = ext.d();
    return res;
}

} // namespace frob
