#include "frob/classify.hpp"

#include <algorithm>
#include <sstream>

#include "frob/errors.hpp"

namespace frob {

bool is_nonderogatory(const MatQ& m) {
    if (!m.is_square()) throw MathError("is_nonderogatory: matrix is not square");
    const int n = m.rows();
    bool via_polys = (min_poly(m) == char_poly(m));
    std::vector<MatQ> cent = centralizer_basis(m);
    bool commutative = true;
    for (size_t i = 0; i < cent.size() && commutative; ++i)
        for (size_t j = i + 1; j < cent.size(); ++j)
            if (!commutator(cent[i], cent[j]).is_zero()) { commutative = false; break; }
    bool via_centralizer = (static_cast<int>(cent.size()) == n) && commutative;
    if (via_polys != via_centralizer)
        throw CrossCheckError("is_nonderogatory: polynomial and centralizer criteria disagree");
    return via_polys;
}

namespace {
void require_nonderogatory(const MatQ& m, const char* op) {
    if (!is_nonderogatory(m)) throw MathError(std::string(op) + ": derogatory input");
}
} // namespace

EigenSignature eigen_signature(const MatQ& m) {
    require_nonderogatory(m, "eigen_signature");
    EigenSignature sig;
    for (const auto& [f, mult] : square_free_decomposition(char_poly(m))) {
        int real = count_real_roots(f);
        int complex_pairs = (f.degree() - real) / 2;
        for (int k = 0; k < real; ++k) sig.real_blocks.push_back(mult);
        for (int k = 0; k < complex_pairs; ++k) sig.complex_blocks.push_back(mult);
    }
    std::sort(sig.real_blocks.rbegin(), sig.real_blocks.rend());
    std::sort(sig.complex_blocks.rbegin(), sig.complex_blocks.rend());
    return sig;
}

std::vector<std::string> ClassificationLabel::block_names() const {
    std::vector<std::string> out;
    for (int k : d0)
        out.push_back(k == 1 ? "aff(R)" : "D0(" + std::to_string(k) + ")");
    for (int k : d01)
        out.push_back(k == 2 ? "aff(C)" : "D01(" + std::to_string(k) + ")");
    return out;
}

std::string ClassificationLabel::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& b : block_names()) {
        os << (first ? "" : "+") << b;
        first = false;
    }
    return os.str();
}

ClassificationLabel classify_G_phi(const MatQ& m) {
    EigenSignature sig = eigen_signature(m); // includes the nonderogatory check
    ClassificationLabel label;
    label.d0 = sig.real_blocks;
    for (int mult : sig.complex_blocks) label.d01.push_back(2 * mult);
    label.indecomposable = (label.d0.size() + label.d01.size() == 1);
    return label;
}

CartanResult cartan_test(const MatQ& m) {
    require_nonderogatory(m, "cartan_test");
    CartanResult res;
    PolyQ chi = char_poly(m);
    res.via_distinct_eigenvalues = (poly_gcd(chi, chi.derivative()).degree() == 0);
    std::vector<MatQ> span = power_span_basis(m);
    res.via_normalizer = (matrix_span(normalizer_of_span(span)) == matrix_span(span));
    if (res.via_normalizer != res.via_distinct_eigenvalues)
        throw CrossCheckError("cartan_test: normalizer and eigenvalue criteria disagree");
    res.is_cartan = res.via_normalizer;
    return res;
}

VandermondeResult vandermonde_isomorphism(const std::vector<Rational>& lambdas) {
    const int n = static_cast<int>(lambdas.size());
    if (n < 1) throw MathError("vandermonde_isomorphism: empty eigenvalue list");
    for (int i = 0; i < n; ++i) {
        if (lambdas[static_cast<size_t>(i)].is_zero())
            throw MathError("vandermonde_isomorphism: eigenvalues must be nonzero");
        for (int j = i + 1; j < n; ++j)
            if (lambdas[static_cast<size_t>(i)] == lambdas[static_cast<size_t>(j)])
                throw MathError("vandermonde_isomorphism: eigenvalues must be distinct");
    }
    VandermondeResult res;
    res.n_matrix = MatQ(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 1; j <= n; ++j)
            res.n_matrix(i, j - 1) = lambdas[static_cast<size_t>(i)].pow(j);
    res.det_value = det(res.n_matrix);
    Rational formula(1);
    for (const auto& l : lambdas) formula *= l;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            formula *= lambdas[static_cast<size_t>(j)] - lambdas[static_cast<size_t>(i)];
    if (formula != res.det_value)
        throw CrossCheckError("vandermonde_isomorphism: determinant formula mismatch");

    // chi = prod (X - lambda_i), for reducing phi^n to the power basis.
    PolyQ chi = PolyQ::constant(Rational(1));
    for (const auto& l : lambdas) chi = chi * PolyQ::linear(l);
    MatQ ninv = inverse(res.n_matrix);
    res.psi = MatQ(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        // a_i (source index 2i) maps to sum_{s=1..n} v_s phi^s with Nv = delta_i.
        VecQ coeff(static_cast<size_t>(n));
        for (int s = 1; s <= n; ++s) {
            const Rational& vs = ninv(s - 1, i);
            if (s <= n - 1) coeff[static_cast<size_t>(s)] += vs;
            else
                for (int j = 0; j < n; ++j) coeff[static_cast<size_t>(j)] -= vs * chi.coeff(j);
        }
        for (int k = 0; k < n; ++k) res.psi(k, 2 * i) = coeff[static_cast<size_t>(k)];
        // x_i (source index 2i+1) maps to the i-th standard vector of V.
        res.psi(n + i, 2 * i + 1) = Rational(1);
    }
    return res;
}

MatQ principal_nilpotent(int n) {
    if (n < 1) throw MathError("principal_nilpotent: n must be positive");
    MatQ m(n, n);
    for (int i = 0; i + 1 < n; ++i) m(i, i + 1) = Rational(1);
    return m;
}

MatQ ms_matrix(int n) {
    if (n < 2 || n % 2 != 0) throw MathError("ms_matrix: n must be even and >= 2");
    MatQ m(n, n);
    for (int j = 0; j < n / 2; ++j) {
        m(2 * j, 2 * j + 1) = Rational(-1);
        m(2 * j + 1, 2 * j) = Rational(1);
    }
    return m;
}

MatQ mn_matrix(int n) {
    if (n < 2) throw MathError("mn_matrix: n must be >= 2");
    MatQ m(n, n);
    for (int i = 0; i + 2 < n; ++i) m(i, i + 2) = Rational(1);
    return m;
}

MatQ m01_matrix(int n) {
    if (n < 2 || n % 2 != 0) throw MathError("m01_matrix: n must be even and >= 2");
    return ms_matrix(n) + mn_matrix(n);
}

MatQ circular_permutation(int n) {
    if (n < 1) throw MathError("circular_permutation: n must be positive");
    MatQ m(n, n);
    for (int i = 0; i < n; ++i) m((i + 1) % n, i) = Rational(1);
    return m;
}

MatQ krylov_companion(const PolyQ& chi) {
    if (!chi.is_monic() || chi.degree() < 1)
        throw MathError("krylov_companion: monic nonconstant polynomial required");
    const int n = chi.degree();
    MatQ m(n, n);
    for (int j = 0; j + 1 < n; ++j) m(j, j + 1) = Rational(1);
    for (int j = 1; j <= n; ++j) m(j - 1, 0) = -chi.coeff(n - j);
    return m;
}

} // namespace frob
