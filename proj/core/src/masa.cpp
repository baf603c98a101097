#include "frob/masa.hpp"

#include "frob/errors.hpp"

namespace frob {

namespace {

void require_abelian(const std::vector<MatQ>& s, const char* op) {
    if (s.empty()) throw MathError(std::string(op) + ": empty matrix family");
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (!commutator(s[i], s[j]).is_zero())
                throw MathError(std::string(op) + ": generators do not commute");
}

void require_nilpotent(const std::vector<MatQ>& s, const char* op) {
    for (const auto& a : s)
        if (!is_nilpotent(a))
            throw MathError(std::string(op) + ": non-nilpotent generator");
}

// Column space of [A_1 | A_2 | ...].
int image_dim(const std::vector<MatQ>& s) {
    const int n = s[0].rows();
    MatQ stacked(n, static_cast<int>(s.size()) * n);
    for (size_t k = 0; k < s.size(); ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) stacked(i, static_cast<int>(k) * n + j) = s[k](i, j);
    return rank(stacked);
}

// Common kernel of all generators, as column vectors.
std::vector<VecQ> common_kernel(const std::vector<MatQ>& s) {
    const int n = s[0].rows();
    MatQ stacked(static_cast<int>(s.size()) * n, n);
    for (size_t k = 0; k < s.size(); ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) stacked(static_cast<int>(k) * n + i, j) = s[k](i, j);
    return kernel(stacked);
}

} // namespace

bool is_masa(const std::vector<MatQ>& s, Ambient ambient) {
    require_abelian(s, "is_masa");
    const int n = s[0].rows();
    Subspace<Rational> cent = centralizer(s);
    if (ambient == Ambient::sl) cent = intersect_traceless(cent, n);
    return cent == matrix_span(s);
}

KravchukSignature kravchuk_signature(const std::vector<MatQ>& s) {
    require_abelian(s, "kravchuk_signature");
    require_nilpotent(s, "kravchuk_signature");
    KravchukSignature sig;
    sig.n = s[0].rows();
    sig.nu = sig.n - image_dim(s);
    sig.mu = static_cast<int>(common_kernel(s).size());
    sig.m = sig.n - sig.nu - sig.mu;
    return sig;
}

int nilpotency_class(const std::vector<MatQ>& s) {
    require_abelian(s, "nilpotency_class");
    require_nilpotent(s, "nilpotency_class");
    const int n = s[0].rows();
    for (int p = 1; p <= n + 1; ++p)
        if (subalgebra_powers(s, p).dim() == 0) return p;
    throw MathError("nilpotency_class: products do not vanish (non-nilpotent family)");
}

std::optional<MatQ> recognize_class2_mans(const std::vector<MatQ>& s) {
    require_abelian(s, "recognize_class2_mans");
    require_nilpotent(s, "recognize_class2_mans");
    const int n = s[0].rows();
    if (matrix_span(s).dim() != n - 1)
        throw MathError("recognize_class2_mans: family must span dimension n-1");
    if (nilpotency_class(s) != 2)
        throw MathError("recognize_class2_mans: family must have class 2");
    if (image_dim(s) != 1) return std::nullopt;

    // The common image line, taken from the echelonized column space.
    MatQ stacked(n, static_cast<int>(s.size()) * n);
    for (size_t k = 0; k < s.size(); ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) stacked(i, static_cast<int>(k) * n + j) = s[k](i, j);
    auto cols = rref(stacked.transpose());
    VecQ e1(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) e1[static_cast<size_t>(j)] = cols.R(0, j);

    // Complete {e1} to a basis with standard vectors, lowest index first.
    MatQ q(n, n);
    for (int i = 0; i < n; ++i) q(i, 0) = e1[static_cast<size_t>(i)];
    int used = 1;
    for (int cand = 0; cand < n && used < n; ++cand) {
        MatQ trial = q.submatrix(0, 0, n, used + 1);
        for (int i = 0; i < n; ++i) trial(i, used) = Rational(i == cand ? 1 : 0);
        if (rank(trial) == used + 1) {
            q(cand, used) = Rational(1);
            ++used;
        }
    }
    MatQ p = inverse(q);
    // Verify: P span(S) P^{-1} must equal span{E_{1,j} : j >= 2}.
    std::vector<MatQ> conjugated;
    for (const auto& a : s) conjugated.push_back(p * a * q);
    std::vector<MatQ> canonical;
    for (int j = 1; j < n; ++j) canonical.push_back(MatQ::unit(n, n, 0, j));
    if (matrix_span(conjugated) != matrix_span(canonical))
        throw CrossCheckError("recognize_class2_mans: conjugated span is not the canonical model");
    return p;
}

} // namespace frob
