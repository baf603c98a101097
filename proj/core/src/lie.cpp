#include "frob/lie.hpp"

#include <cstdint>
#include <map>
#include <sstream>

#include "frob/errors.hpp"

namespace frob {

namespace {
VecQ unit(int dim, int k) {
    VecQ v(static_cast<size_t>(dim));
    v[static_cast<size_t>(k)] = Rational(1);
    return v;
}
} // namespace

Rational LinearForm::operator()(const VecQ& v) const {
    if (v.size() != coeffs.size()) throw MathError("LinearForm: length mismatch");
    Rational acc(0);
    for (size_t k = 0; k < v.size(); ++k) acc += coeffs[k] * v[k];
    return acc;
}

std::string LinearForm::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < coeffs.size(); ++k) {
        const Rational& c = coeffs[k];
        if (c.is_zero()) continue;
        Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        if (mag != Rational(1)) os << mag.to_string() << "*";
        os << "e" << (k + 1) << "*";
    }
    return first ? "0" : os.str();
}

VecQ LieAlgebra::bracket(const VecQ& x, const VecQ& y) const {
    if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
        throw MathError("LieAlgebra::bracket: vector length mismatch");
    VecQ out(static_cast<size_t>(dim_));
    for (int i = 0; i < dim_; ++i) {
        if (x[static_cast<size_t>(i)].is_zero()) continue;
        for (int j = 0; j < dim_; ++j) {
            if (y[static_cast<size_t>(j)].is_zero() || i == j) continue;
            Rational f = x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)];
            const VecQ& b = bracket_basis(i, j);
            for (int k = 0; k < dim_; ++k)
                if (!b[static_cast<size_t>(k)].is_zero()) out[static_cast<size_t>(k)] += f * b[static_cast<size_t>(k)];
        }
    }
    return out;
}

void LieAlgebra::check_jacobi() const {
    for (int i = 0; i < dim_; ++i)
        for (int j = i + 1; j < dim_; ++j)
            for (int k = j + 1; k < dim_; ++k) {
                VecQ s = bracket(bracket_basis(i, j), unit(dim_, k));
                VecQ t = bracket(bracket_basis(j, k), unit(dim_, i));
                VecQ u = bracket(bracket_basis(k, i), unit(dim_, j));
                for (int c = 0; c < dim_; ++c) {
                    Rational sum = s[static_cast<size_t>(c)] + t[static_cast<size_t>(c)] + u[static_cast<size_t>(c)];
                    if (!sum.is_zero()) {
                        std::ostringstream os;
                        os << "Jacobi identity fails on basis triple (e" << (i + 1)
                           << ", e" << (j + 1) << ", e" << (k + 1) << ")";
                        throw MathError(os.str());
                    }
                }
            }
}

LieAlgebra LieAlgebra::make(int dim, const std::vector<BracketEntry>& brackets,
                            std::vector<std::string> basis_names) {
    if (dim < 0) throw MathError("LieAlgebra: negative dimension");
    LieAlgebra g;
    g.dim_ = dim;
    g.table_.assign(static_cast<size_t>(dim) * dim, VecQ(static_cast<size_t>(dim)));
    for (const auto& e : brackets) {
        if (e.i < 0 || e.j < 0 || e.i >= dim || e.j >= dim || e.i >= e.j)
            throw MathError("LieAlgebra: bracket indices must satisfy 0 <= i < j < dim");
        VecQ v(static_cast<size_t>(dim));
        for (const auto& [k, c] : e.terms) {
            if (k < 0 || k >= dim) throw MathError("LieAlgebra: bracket target index out of range");
            v[static_cast<size_t>(k)] += c;
        }
        g.table_[static_cast<size_t>(e.i) * dim + e.j] = v;
        for (auto& x : v) x = -x;
        g.table_[static_cast<size_t>(e.j) * dim + e.i] = v;
    }
    if (basis_names.empty()) {
        for (int k = 1; k <= dim; ++k) basis_names.push_back("e" + std::to_string(k));
    } else if (static_cast<int>(basis_names.size()) != dim) {
        throw MathError("LieAlgebra: wrong number of basis names");
    }
    g.names_ = std::move(basis_names);
    g.check_jacobi();
    return g;
}

LieAlgebra semidirect_sum(const std::vector<MatQ>& b, int n) {
    const int m = static_cast<int>(b.size());
    if (m == 0) throw MathError("semidirect_sum: empty matrix family");
    for (const auto& a : b)
        if (!a.is_square() || a.rows() != n)
            throw MathError("semidirect_sum: generators must be n x n");
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (!commutator(b[static_cast<size_t>(i)], b[static_cast<size_t>(j)]).is_zero()) {
                std::ostringstream os;
                os << "semidirect_sum: generators " << (i + 1) << " and " << (j + 1)
                   << " do not commute";
                throw MathError(os.str());
            }
    {
        std::vector<VecQ> vecs;
        for (const auto& a : b) vecs.push_back(a.vec());
        if (Subspace<Rational>::span(vecs, n * n).dim() != m)
            throw MathError("semidirect_sum: generators are linearly dependent");
    }
    std::vector<BracketEntry> entries;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            BracketEntry e{i, m + j, {}};
            for (int k = 0; k < n; ++k) {
                const Rational& c = b[static_cast<size_t>(i)](k, j);
                if (!c.is_zero()) e.terms.emplace_back(m + k, c);
            }
            if (!e.terms.empty()) entries.push_back(std::move(e));
        }
    LieAlgebra g = LieAlgebra::make(m + n, entries);
    g.split_ = SemidirectData{b, n};
    g.nilradical_ = nilradical_split(b, n);
    return g;
}

LieAlgebra direct_sum(const std::vector<LieAlgebra>& gs) {
    int dim = 0;
    for (const auto& g : gs) dim += g.dim();
    std::vector<BracketEntry> entries;
    int off = 0;
    for (const auto& g : gs) {
        for (int i = 0; i < g.dim(); ++i)
            for (int j = i + 1; j < g.dim(); ++j) {
                const VecQ& v = g.bracket_basis(i, j);
                BracketEntry e{off + i, off + j, {}};
                for (int k = 0; k < g.dim(); ++k)
                    if (!v[static_cast<size_t>(k)].is_zero()) e.terms.emplace_back(off + k, v[static_cast<size_t>(k)]);
                if (!e.terms.empty()) entries.push_back(std::move(e));
            }
        off += g.dim();
    }
    LieAlgebra out = LieAlgebra::make(dim, entries);
    // The nilradical of a direct sum is the direct sum of the nilradicals, so
    // split-derived provenance survives summation.
    bool all_nil = true;
    for (const auto& g : gs)
        if (!g.nilradical()) { all_nil = false; break; }
    if (all_nil && !gs.empty()) {
        std::vector<VecQ> gens;
        off = 0;
        for (const auto& g : gs) {
            for (const auto& v : g.nilradical()->basis()) {
                VecQ w(static_cast<size_t>(dim));
                for (int k = 0; k < g.dim(); ++k) w[static_cast<size_t>(off + k)] = v[static_cast<size_t>(k)];
                gens.push_back(std::move(w));
            }
            off += g.dim();
        }
        out.nilradical_ = Subspace<Rational>::span(gens, dim);
    }
    return out;
}

Subspace<Rational> nilradical_split(const std::vector<MatQ>& b, int n) {
    const int m = static_cast<int>(b.size());
    if (m == 0) throw MathError("nilradical_split: empty matrix family");
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (!commutator(b[static_cast<size_t>(i)], b[static_cast<size_t>(j)]).is_zero())
                throw MathError("nilradical_split: generators do not commute");
    std::vector<MatQ> closure = associative_closure(b, /*unital=*/true);
    MatQ cond(static_cast<int>(closure.size()), m);
    for (size_t r = 0; r < closure.size(); ++r)
        for (int i = 0; i < m; ++i)
            cond(static_cast<int>(r), i) = (b[static_cast<size_t>(i)] * closure[r]).trace();
    std::vector<VecQ> gens;
    for (const auto& t : kernel(cond)) {
        MatQ x(n, n);
        for (int i = 0; i < m; ++i) x += b[static_cast<size_t>(i)] * t[static_cast<size_t>(i)];
        if (!is_nilpotent(x))
            throw CrossCheckError("nilradical_split: trace-kernel element is not nilpotent");
        VecQ v(static_cast<size_t>(m + n));
        for (int i = 0; i < m; ++i) v[static_cast<size_t>(i)] = t[static_cast<size_t>(i)];
        gens.push_back(std::move(v));
    }
    for (int j = 0; j < n; ++j) gens.push_back(unit(m + n, m + j));
    return Subspace<Rational>::span(gens, m + n);
}

Subspace<Rational> full_space(const LieAlgebra& g) {
    std::vector<VecQ> gens;
    for (int k = 0; k < g.dim(); ++k) gens.push_back(unit(g.dim(), k));
    return Subspace<Rational>::span(gens, g.dim());
}

Subspace<Rational> bracket_space(const LieAlgebra& g, const Subspace<Rational>& a,
                                 const Subspace<Rational>& b) {
    std::vector<VecQ> gens;
    for (const auto& x : a.basis())
        for (const auto& y : b.basis()) gens.push_back(g.bracket(x, y));
    return Subspace<Rational>::span(gens, g.dim());
}

namespace {

std::vector<int> series_dims(const LieAlgebra& g, bool derived) {
    std::vector<int> dims;
    Subspace<Rational> whole = full_space(g);
    Subspace<Rational> cur = bracket_space(g, whole, whole);
    dims.push_back(cur.dim());
    while (dims.back() != 0) {
        Subspace<Rational> next = derived ? bracket_space(g, cur, cur)
                                          : bracket_space(g, whole, cur);
        if (next.dim() == dims.back()) break;
        dims.push_back(next.dim());
        cur = std::move(next);
    }
    return dims;
}

} // namespace

std::vector<int> derived_series_dims(const LieAlgebra& g) { return series_dims(g, true); }
std::vector<int> lower_central_dims(const LieAlgebra& g) { return series_dims(g, false); }

bool is_two_solvable(const LieAlgebra& g) {
    auto d = derived_series_dims(g);
    return d.size() == 1 ? d[0] == 0 : (d.size() == 2 && d[1] == 0);
}

Subspace<Rational> center(const LieAlgebra& g) {
    const int n = g.dim();
    MatQ a(n * n, n);
    for (int j = 0; j < n; ++j)
        for (int c = 0; c < n; ++c)
            for (int i = 0; i < n; ++i)
                a(j * n + c, i) = g.bracket_basis(i, j)[static_cast<size_t>(c)];
    return Subspace<Rational>::span(kernel(a), n);
}

Subspace<Rational> derivation_algebra(const LieAlgebra& g) {
    const int n = g.dim();
    const int nn = n * n;
    std::vector<VecQ> rows;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const VecQ& w = g.bracket_basis(i, j);
            for (int c = 0; c < n; ++c) {
                VecQ row(static_cast<size_t>(nn));
                // (D w)_c
                for (int l = 0; l < n; ++l) row[static_cast<size_t>(c * n + l)] += w[static_cast<size_t>(l)];
                // -[D e_i, e_j]_c  and  -[e_i, D e_j]_c
                for (int k = 0; k < n; ++k) {
                    row[static_cast<size_t>(k * n + i)] -= g.bracket_basis(k, j)[static_cast<size_t>(c)];
                    row[static_cast<size_t>(k * n + j)] -= g.bracket_basis(i, k)[static_cast<size_t>(c)];
                }
                rows.push_back(std::move(row));
            }
        }
    MatQ a(static_cast<int>(rows.size()), nn);
    for (size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < nn; ++c) a(static_cast<int>(r), c) = rows[r][static_cast<size_t>(c)];
    return Subspace<Rational>::span(kernel(a), nn);
}

bool verify_isomorphism(const MatQ& psi, const LieAlgebra& g1, const LieAlgebra& g2) {
    if (g1.dim() != g2.dim()) throw MathError("verify_isomorphism: dimension mismatch");
    if (psi.rows() != g1.dim() || psi.cols() != g1.dim())
        throw MathError("verify_isomorphism: matrix shape mismatch");
    if (det(psi).is_zero()) return false;
    const int n = g1.dim();
    std::vector<VecQ> cols(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        VecQ c(static_cast<size_t>(n));
        for (int k = 0; k < n; ++k) c[static_cast<size_t>(k)] = psi(k, i);
        cols[static_cast<size_t>(i)] = std::move(c);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            VecQ lhs = psi.apply(g1.bracket_basis(i, j));
            VecQ rhs = g2.bracket(cols[static_cast<size_t>(i)], cols[static_cast<size_t>(j)]);
            if (lhs != rhs) return false;
        }
    return true;
}

Rational PfaffianPoly::eval(const VecQ& alpha) const {
    if (static_cast<int>(alpha.size()) != dim) throw MathError("PfaffianPoly::eval: length mismatch");
    return poly.eval(alpha);
}

std::string PfaffianPoly::to_string() const {
    std::vector<std::string> names;
    for (int k = 1; k <= dim; ++k) names.push_back("a" + std::to_string(k));
    return poly.to_string(names);
}

namespace {

MultiPoly pfaffian_rec(uint64_t mask, int dim, const std::vector<MultiPoly>& s,
                       std::map<uint64_t, MultiPoly>& memo) {
    if (mask == 0) return MultiPoly(dim, Rational(1));
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    MultiPoly acc(dim);
    int i = -1;
    for (int k = 0; k < dim; ++k)
        if (mask & (uint64_t{1} << k)) { i = k; break; }
    int t = 1;
    for (int j = i + 1; j < dim; ++j) {
        if (!(mask & (uint64_t{1} << j))) continue;
        ++t;
        const MultiPoly& sij = s[static_cast<size_t>(i) * dim + j];
        if (sij.is_zero()) continue;
        MultiPoly sub = pfaffian_rec(mask & ~((uint64_t{1} << i) | (uint64_t{1} << j)), dim, s, memo);
        if (sub.is_zero()) continue;
        MultiPoly term = sij * sub;
        if (t % 2 == 0) acc += term;
        else acc -= term;
    }
    memo.emplace(mask, acc);
    return acc;
}

} // namespace

PfaffianPoly pfaffian_of_dalpha(const LieAlgebra& g) {
    const int n = g.dim();
    if (n > 62) throw MathError("pfaffian_of_dalpha: dimension too large");
    PfaffianPoly out;
    out.dim = n;
    out.poly = MultiPoly(n);
    if (n % 2 != 0) return out; // identically zero: odd-dimensional skew form
    std::vector<MultiPoly> s(static_cast<size_t>(n) * n, MultiPoly(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const VecQ& v = g.bracket_basis(i, j);
            MultiPoly e(n);
            for (int k = 0; k < n; ++k)
                if (!v[static_cast<size_t>(k)].is_zero())
                    e -= MultiPoly::variable(k, n) * v[static_cast<size_t>(k)];
            s[static_cast<size_t>(i) * n + j] = e;
        }
    std::map<uint64_t, MultiPoly> memo;
    uint64_t full = (n == 62) ? ~uint64_t{0} >> 2 : (uint64_t{1} << n) - 1;
    out.poly = pfaffian_rec(full, n, s, memo);
    return out;
}

FrobeniusResult frobenius_decide(const LieAlgebra& g) {
    FrobeniusResult res;
    res.pfaffian = pfaffian_of_dalpha(g);
    if (res.pfaffian.identically_zero()) return res;
    const int n = g.dim();
    auto found = [&](VecQ alpha) {
        if (res.pfaffian.eval(alpha).is_zero())
            throw CrossCheckError("frobenius_decide: certificate evaluation is zero");
        res.frobenius = true;
        res.certificate = LinearForm{std::move(alpha)};
    };
    // Stage 1: dual-basis vectors e_k^*.
    for (int k = 0; k < n; ++k) {
        VecQ a = unit(n, k);
        if (!res.pfaffian.eval(a).is_zero()) { found(std::move(a)); return res; }
    }
    // Stage 2: two-coordinate integer points in a growing box.
    for (int r = 1; r <= 2; ++r)
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (long x = -r; x <= r; ++x)
                    for (long y = -r; y <= r; ++y) {
                        if (std::max(std::abs(x), std::abs(y)) != r) continue;
                        VecQ a(static_cast<size_t>(n));
                        a[static_cast<size_t>(i)] = Rational(x);
                        a[static_cast<size_t>(j)] = Rational(y);
                        if (!res.pfaffian.eval(a).is_zero()) { found(std::move(a)); return res; }
                    }
    // Stage 3: pin variables one at a time.  A nonzero polynomial stays
    // nonzero for some value in {0, ±1, ±2, ...} of each variable (at most
    // deg+1 candidates fail), so this terminates with a full certificate.
    MultiPoly p = res.pfaffian.poly;
    VecQ a(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        for (long v = 0;; v = (v > 0 ? -v : -v + 1)) {
            MultiPoly sub = p.substitute(i, Rational(v));
            if (!sub.is_zero()) {
                a[static_cast<size_t>(i)] = Rational(v);
                p = std::move(sub);
                break;
            }
        }
    }
    found(std::move(a));
    return res;
}

int open_orbit_rank(const std::vector<MatQ>& b, const LinearForm& alpha) {
    if (b.empty()) throw MathError("open_orbit_rank: empty matrix family");
    const int n = b[0].rows();
    if (static_cast<int>(alpha.coeffs.size()) != n)
        throw MathError("open_orbit_rank: functional length must match matrix size");
    MatQ rows(static_cast<int>(b.size()), n);
    for (size_t i = 0; i < b.size(); ++i)
        for (int c = 0; c < n; ++c) {
            Rational acc(0);
            for (int k = 0; k < n; ++k) acc += alpha.coeffs[static_cast<size_t>(k)] * b[i](k, c);
            rows(static_cast<int>(i), c) = -acc;
        }
    return rank(rows);
}

std::string Fingerprint::to_string() const {
    std::ostringstream os;
    os << "dim=" << dim << " derived=[";
    for (size_t k = 0; k < derived_dims.size(); ++k) os << (k ? "," : "") << derived_dims[k];
    os << "] der_dim=" << derivation_dim << " center=" << center_dim;
    if (nil_available) {
        os << " nil{dim=" << nilradical_dim << " lcs=[";
        for (size_t k = 0; k < nil_lower_central_dims.size(); ++k)
            os << (k ? "," : "") << nil_lower_central_dims[k];
        os << "] class=" << nil_class << " derived=" << nil_derived_dim << "}";
    } else {
        os << " nil{unavailable}";
    }
    return os.str();
}

Fingerprint fingerprint(const LieAlgebra& g, const std::optional<SemidirectData>& split_data) {
    Fingerprint f;
    f.dim = g.dim();
    f.derived_dims = derived_series_dims(g);
    f.derivation_dim = derivation_algebra(g).dim();
    f.center_dim = center(g).dim();
    std::optional<Subspace<Rational>> nil;
    if (split_data) nil = nilradical_split(split_data->b, split_data->v_dim);
    else if (g.nilradical()) nil = g.nilradical();
    if (nil) {
        if (nil->ambient() != g.dim())
            throw MathError("fingerprint: split data does not match the algebra dimension");
        f.nil_available = true;
        f.nilradical_dim = nil->dim();
        Subspace<Rational> cur = *nil;
        while (true) {
            cur = bracket_space(g, *nil, cur);
            f.nil_lower_central_dims.push_back(cur.dim());
            if (cur.dim() == 0) break;
            if (f.nil_lower_central_dims.size() > static_cast<size_t>(g.dim()))
                throw CrossCheckError("fingerprint: nilradical lower central series does not vanish");
        }
        f.nil_class = static_cast<int>(f.nil_lower_central_dims.size());
        f.nil_derived_dim = f.nil_lower_central_dims.front();
    }
    return f;
}

} // namespace frob
