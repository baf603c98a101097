#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "frob/matrix.hpp"
#include "frob/polynomial.hpp"

namespace frob {

template <class K>
struct RrefResult {
    Matrix<K> R;
    std::vector<int> pivot_cols;
};

// Reduced row echelon form (exact Gauss-Jordan, first-nonzero pivoting).
template <class K>
RrefResult<K> rref(Matrix<K> m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int p = -1;
        for (int i = row; i < m.rows(); ++i)
            if (!m(i, col).is_zero()) { p = i; break; }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
        K inv = m(row, col).inverse();
        for (int j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            K f = m(i, col);
            for (int j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

template <class K>
int rank(const Matrix<K>& m) {
    return static_cast<int>(rref(m).pivot_cols.size());
}

// Basis of the right null space {v : Mv = 0}; free variables in ascending
// column order, so the result is deterministic.
template <class K>
std::vector<std::vector<K>> kernel(const Matrix<K>& m) {
    auto [R, pivots] = rref(m);
    std::vector<std::vector<K>> basis;
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
    for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
    for (int freec = 0; freec < m.cols(); ++freec) {
        if (is_pivot[static_cast<size_t>(freec)]) continue;
        std::vector<K> v(static_cast<size_t>(m.cols()));
        v[static_cast<size_t>(freec)] = K(Rational(1));
        for (size_t i = 0; i < pivots.size(); ++i)
            v[static_cast<size_t>(pivots[i])] = -R(static_cast<int>(i), freec);
        basis.push_back(std::move(v));
    }
    return basis;
}

// One solution of Ax = b (free variables set to zero), or nullopt.
template <class K>
std::optional<std::vector<K>> solve(const Matrix<K>& a, const std::vector<K>& b) {
    if (static_cast<int>(b.size()) != a.rows()) throw MathError("solve: size mismatch");
    Matrix<K> aug(a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[static_cast<size_t>(i)];
    }
    auto [R, pivots] = rref(std::move(aug));
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    std::vector<K> x(static_cast<size_t>(a.cols()));
    for (size_t i = 0; i < pivots.size(); ++i)
        x[static_cast<size_t>(pivots[i])] = R(static_cast<int>(i), a.cols());
    return x;
}

template <class K>
K det(Matrix<K> m) {
    if (!m.is_square()) throw MathError("det: matrix is not square");
    K d = K(Rational(1));
    int n = m.rows();
    for (int col = 0; col < n; ++col) {
        int p = -1;
        for (int i = col; i < n; ++i)
            if (!m(i, col).is_zero()) { p = i; break; }
        if (p < 0) return K{};
        if (p != col) {
            for (int j = 0; j < n; ++j) std::swap(m(p, j), m(col, j));
            d = -d;
        }
        d = d * m(col, col);
        K inv = m(col, col).inverse();
        for (int i = col + 1; i < n; ++i) {
            if (m(i, col).is_zero()) continue;
            K f = m(i, col) * inv;
            for (int j = col; j < n; ++j) m(i, j) -= f * m(col, j);
        }
    }
    return d;
}

template <class K>
Matrix<K> inverse(const Matrix<K>& m) {
    if (!m.is_square()) throw MathError("inverse: matrix is not square");
    int n = m.rows();
    Matrix<K> aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = K(Rational(1));
    }
    auto [R, pivots] = rref(std::move(aug));
    if (static_cast<int>(pivots.size()) < n || pivots[static_cast<size_t>(n) - 1] != n - 1)
        throw MathError("inverse: matrix is singular");
    return R.submatrix(0, n, n, n);
}

// g A g^{-1}.
template <class K>
Matrix<K> conjugate_by(const Matrix<K>& a, const Matrix<K>& g) {
    return g * a * inverse(g);
}

// Linear subspace of K^n held as a canonical (rref) row basis, so two
// subspaces are equal iff their representations compare equal.
template <class K>
class Subspace {
public:
    Subspace() = default;
    static Subspace span(const std::vector<std::vector<K>>& gens, int ambient_dim) {
        Subspace s;
        s.ambient_ = ambient_dim;
        Matrix<K> m(static_cast<int>(gens.size()), ambient_dim);
        for (size_t i = 0; i < gens.size(); ++i) {
            if (static_cast<int>(gens[i].size()) != ambient_dim)
                throw MathError("Subspace: generator has wrong length");
            for (int j = 0; j < ambient_dim; ++j) m(static_cast<int>(i), j) = gens[i][static_cast<size_t>(j)];
        }
        auto [R, pivots] = rref(std::move(m));
        for (size_t i = 0; i < pivots.size(); ++i) {
            std::vector<K> row(static_cast<size_t>(ambient_dim));
            for (int j = 0; j < ambient_dim; ++j) row[static_cast<size_t>(j)] = R(static_cast<int>(i), j);
            s.basis_.push_back(std::move(row));
        }
        return s;
    }

    int dim() const { return static_cast<int>(basis_.size()); }
    int ambient() const { return ambient_; }
    const std::vector<std::vector<K>>& basis() const { return basis_; }

    bool contains(const std::vector<K>& v) const {
        if (static_cast<int>(v.size()) != ambient_) throw MathError("Subspace::contains: wrong length");
        std::vector<K> r = v;
        for (const auto& row : basis_) {
            int lead = leading_index(row);
            if (!r[static_cast<size_t>(lead)].is_zero()) {
                K f = r[static_cast<size_t>(lead)];
                for (int j = 0; j < ambient_; ++j) r[static_cast<size_t>(j)] -= f * row[static_cast<size_t>(j)];
            }
        }
        for (const auto& x : r)
            if (!x.is_zero()) return false;
        return true;
    }

    Subspace sum(const Subspace& o) const {
        if (ambient_ != o.ambient_) throw MathError("Subspace::sum: mixed ambient dimensions");
        std::vector<std::vector<K>> gens = basis_;
        gens.insert(gens.end(), o.basis_.begin(), o.basis_.end());
        return span(gens, ambient_);
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    static int leading_index(const std::vector<K>& row) {
        for (size_t j = 0; j < row.size(); ++j)
            if (!row[j].is_zero()) return static_cast<int>(j);
        throw MathError("Subspace: zero basis row");
    }
    int ambient_ = 0;
    std::vector<std::vector<K>> basis_;
};

template <class K>
Subspace<K> matrix_span(const std::vector<Matrix<K>>& mats) {
    if (mats.empty()) throw MathError("matrix_span: no matrices");
    int ambient = mats[0].rows() * mats[0].cols();
    std::vector<std::vector<K>> gens;
    gens.reserve(mats.size());
    for (const auto& m : mats) {
        if (m.rows() != mats[0].rows() || m.cols() != mats[0].cols())
            throw MathError("matrix_span: mixed shapes");
        gens.push_back(m.vec());
    }
    return Subspace<K>::span(gens, ambient);
}

// Characteristic polynomial det(X*I - M) by the Faddeev-LeVerrier recursion
// (exact, division only by integers).
inline PolyQ char_poly(const MatQ& m) {
    if (!m.is_square()) throw MathError("char_poly: matrix is not square");
    int n = m.rows();
    std::vector<Rational> c(static_cast<size_t>(n) + 1);
    c[static_cast<size_t>(n)] = Rational(1);
    MatQ mk = MatQ::identity(n);
    for (int k = 1; k <= n; ++k) {
        mk = m * mk;
        Rational ck = -(mk.trace() / Rational(k));
        c[static_cast<size_t>(n - k)] = ck;
        for (int i = 0; i < n; ++i) mk(i, i) += ck;
    }
    return PolyQ(std::move(c));
}

// Monic minimal polynomial: least k with M^k in span(I, M, ..., M^{k-1}).
inline PolyQ min_poly(const MatQ& m) {
    if (!m.is_square()) throw MathError("min_poly: matrix is not square");
    int n = m.rows();
    int nn = n * n;
    std::vector<VecQ> powers; // vec(M^0), vec(M^1), ...
    MatQ p = MatQ::identity(n);
    for (int k = 0; k <= n; ++k) {
        powers.push_back(p.vec());
        MatQ a(nn, k + 1);
        for (int j = 0; j <= k; ++j)
            for (int i = 0; i < nn; ++i) a(i, j) = powers[static_cast<size_t>(j)][static_cast<size_t>(i)];
        if (k >= 1) {
            MatQ lhs = a.submatrix(0, 0, nn, k);
            auto sol = solve(lhs, powers[static_cast<size_t>(k)]);
            if (sol) {
                std::vector<Rational> coef(static_cast<size_t>(k) + 1);
                for (int j = 0; j < k; ++j) coef[static_cast<size_t>(j)] = -(*sol)[static_cast<size_t>(j)];
                coef[static_cast<size_t>(k)] = Rational(1);
                return PolyQ(std::move(coef));
            }
        }
        p = p * m;
    }
    throw MathError("min_poly: no dependency up to degree n (unreachable)");
}

template <class K>
Matrix<K> poly_at(const PolyQ& p, const Matrix<K>& m) {
    if (!m.is_square()) throw MathError("poly_at: matrix is not square");
    Matrix<K> acc(m.rows(), m.cols());
    Matrix<K> id = Matrix<K>::identity(m.rows());
    for (int k = p.degree(); k >= 0; --k) acc = acc * m + id * K(p.coeff(k));
    return acc;
}

inline bool is_nilpotent(const MatQ& m) {
    if (!m.is_square()) throw MathError("is_nilpotent: matrix is not square");
    MatQ p = m;
    for (int k = 1; k < m.rows(); ++k) {
        if (p.is_zero()) return true;
        p = p * m;
    }
    return p.is_zero();
}

// Basis of {X : XM = MX} inside gl(n), via the kernel of ad(M).
inline std::vector<MatQ> centralizer_basis(const MatQ& m) {
    if (!m.is_square()) throw MathError("centralizer_basis: matrix is not square");
    int n = m.rows();
    int nn = n * n;
    MatQ ad(nn, nn);
    // Column (a,b) holds vec([E_ab, M]).
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            MatQ c = commutator(MatQ::unit(n, n, a, b), m);
            VecQ w = c.vec();
            for (int i = 0; i < nn; ++i) ad(i, a * n + b) = w[static_cast<size_t>(i)];
        }
    std::vector<MatQ> out;
    for (const auto& v : kernel(ad)) out.push_back(MatQ::unvec(v, n, n));
    return out;
}

// {X in gl(n) : [X, A] = 0 for all A in s}, as a subspace of the n^2 ambient.
inline Subspace<Rational> centralizer(const std::vector<MatQ>& s) {
    if (s.empty()) throw MathError("centralizer: empty matrix family");
    const int n = s[0].rows();
    for (const auto& a : s)
        if (!a.is_square() || a.rows() != n) throw MathError("centralizer: size mismatch");
    const int nn = n * n;
    MatQ sys(static_cast<int>(s.size()) * nn, nn);
    int off = 0;
    for (const auto& a : s) {
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q) {
                VecQ w = commutator(MatQ::unit(n, n, p, q), a).vec();
                for (int i = 0; i < nn; ++i) sys(off + i, p * n + q) = w[static_cast<size_t>(i)];
            }
        off += nn;
    }
    return Subspace<Rational>::span(kernel(sys), nn);
}

// Span of all k-fold products of elements of s (k >= 1), computed on basis
// products only (bilinearity makes that sufficient).
inline Subspace<Rational> subalgebra_powers(const std::vector<MatQ>& s, int k) {
    if (k < 1) throw MathError("subalgebra_powers: k must be >= 1");
    if (s.empty()) throw MathError("subalgebra_powers: empty matrix family");
    const int n = s[0].rows();
    std::vector<VecQ> gens;
    for (const auto& a : s) gens.push_back(a.vec());
    Subspace<Rational> cur = Subspace<Rational>::span(gens, n * n);
    for (int step = 2; step <= k; ++step) {
        std::vector<VecQ> next;
        for (const auto& a : s)
            for (const auto& v : cur.basis())
                next.push_back((a * MatQ::unvec(v, n, n)).vec());
        cur = Subspace<Rational>::span(next, n * n);
    }
    return cur;
}

// {X in sub : tr(X) = 0} for a subspace of flattened n x n matrices.
inline Subspace<Rational> intersect_traceless(const Subspace<Rational>& sub, int n) {
    if (sub.ambient() != n * n) throw MathError("intersect_traceless: ambient mismatch");
    MatQ row(1, sub.dim());
    for (int j = 0; j < sub.dim(); ++j) {
        Rational tr(0);
        for (int i = 0; i < n; ++i) tr += sub.basis()[static_cast<size_t>(j)][static_cast<size_t>(i * n + i)];
        row(0, j) = tr;
    }
    std::vector<VecQ> gens;
    for (const auto& c : kernel(row)) {
        VecQ v(static_cast<size_t>(n) * n);
        for (int j = 0; j < sub.dim(); ++j)
            for (int i = 0; i < n * n; ++i)
                v[static_cast<size_t>(i)] += c[static_cast<size_t>(j)] * sub.basis()[static_cast<size_t>(j)][static_cast<size_t>(i)];
        gens.push_back(std::move(v));
    }
    return Subspace<Rational>::span(gens, n * n);
}

// Basis of span(I, M, M^2, ...) = Q[M], ending at deg(min_poly).
inline std::vector<MatQ> power_span_basis(const MatQ& m) {
    int d = min_poly(m).degree();
    std::vector<MatQ> out;
    MatQ p = MatQ::identity(m.rows());
    for (int k = 0; k < d; ++k) {
        out.push_back(p);
        p = p * m;
    }
    return out;
}

// Basis of the associative subalgebra of gl(n) generated by gens (plus the
// identity when unital).  Worklist closure: multiply known basis elements by
// generators until the span stops growing.
inline std::vector<MatQ> associative_closure(const std::vector<MatQ>& gens, bool unital) {
    if (gens.empty()) throw MathError("associative_closure: no generators");
    int n = gens[0].rows();
    std::vector<MatQ> basis;
    Subspace<Rational> sp = Subspace<Rational>::span({}, n * n);
    auto try_add = [&](const MatQ& x) {
        if (x.is_zero() || sp.contains(x.vec())) return false;
        basis.push_back(x);
        std::vector<VecQ> gv;
        for (const auto& b : basis) gv.push_back(b.vec());
        sp = Subspace<Rational>::span(gv, n * n);
        return true;
    };
    if (unital) try_add(MatQ::identity(n));
    for (const auto& g : gens) try_add(g);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<MatQ> snapshot = basis;
        for (const auto& b : snapshot)
            for (const auto& g : gens) {
                if (try_add(b * g)) grew = true;
                if (try_add(g * b)) grew = true;
            }
    }
    return basis;
}

// Basis of the normalizer {X in gl(n) : [X, s] in span(S) for all s in S}.
// Functionals vanishing on span(S) turn membership into linear conditions.
inline std::vector<MatQ> normalizer_of_span(const std::vector<MatQ>& span_basis) {
    if (span_basis.empty()) throw MathError("normalizer_of_span: empty span");
    int n = span_basis[0].rows();
    int nn = n * n;
    MatQ rows(static_cast<int>(span_basis.size()), nn);
    for (size_t i = 0; i < span_basis.size(); ++i) {
        VecQ v = span_basis[i].vec();
        for (int j = 0; j < nn; ++j) rows(static_cast<int>(i), j) = v[static_cast<size_t>(j)];
    }
    std::vector<VecQ> functionals = kernel(rows); // f with S . f = 0
    // Constraint rows: one per (span element, functional) pair.
    MatQ cons(static_cast<int>(span_basis.size() * functionals.size()), nn);
    int r = 0;
    for (const auto& s : span_basis) {
        std::vector<VecQ> bracket(static_cast<size_t>(nn));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                bracket[static_cast<size_t>(a * n + b)] = commutator(MatQ::unit(n, n, a, b), s).vec();
        for (const auto& f : functionals) {
            for (int ab = 0; ab < nn; ++ab) {
                Rational dot(0);
                const VecQ& w = bracket[static_cast<size_t>(ab)];
                for (int i = 0; i < nn; ++i) dot += f[static_cast<size_t>(i)] * w[static_cast<size_t>(i)];
                cons(r, ab) = dot;
            }
            ++r;
        }
    }
    std::vector<MatQ> out;
    if (functionals.empty()) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) out.push_back(MatQ::unit(n, n, a, b));
        return out;
    }
    for (const auto& v : kernel(cons)) out.push_back(MatQ::unvec(v, n, n));
    return out;
}

} // namespace frob
