#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frob/linalg.hpp"
#include "frob/matrix.hpp"
#include "frob/multipoly.hpp"
#include "frob/polynomial.hpp"
#include "frob/quadext.hpp"

namespace frob {

// min_poly == char_poly, cross-checked against the centralizer criterion
// (dim cent = n and cent commutative).  The two routes are computed
// independently; a disagreement raises CrossCheckError.
bool is_nonderogatory(const MatQ& m);

// Multiplicities of the distinct eigenvalues of a nonderogatory matrix:
// real_blocks gets one entry k per distinct real eigenvalue of multiplicity
// k, complex_blocks one entry m per conjugate pair of multiplicity m.
// Both are sorted descending.
struct EigenSignature {
    std::vector<int> real_blocks;
    std::vector<int> complex_blocks;
    friend bool operator==(const EigenSignature&, const EigenSignature&) = default;
};

EigenSignature eigen_signature(const MatQ& m);

// Decomposition label: one D0(k) per real eigenvalue of multiplicity k, one
// D01(2m) per complex pair of multiplicity m.  Canonical order: D0 blocks by
// descending k, then D01 by descending 2m.  D0(1) prints as aff(R), D01(2)
// as aff(C); blocks are joined with "+".
struct ClassificationLabel {
    std::vector<int> d0;  // k values, descending
    std::vector<int> d01; // 2m values, descending
    bool indecomposable = false;
    std::vector<std::string> block_names() const;
    std::string to_string() const;
    friend bool operator==(const ClassificationLabel&, const ClassificationLabel&) = default;
};

ClassificationLabel classify_G_phi(const MatQ& m);

// Cartan criterion for R[M] inside gl(n), two independent routes:
// self-normalizing span vs squarefree characteristic polynomial.  They must
// agree (CrossCheckError otherwise).
struct CartanResult {
    bool is_cartan = false;
    bool via_normalizer = false;
    bool via_distinct_eigenvalues = false;
};

CartanResult cartan_test(const MatQ& m);

// N_{ij} = lambda_i^j (j = 1..n); det(N) is computed directly and checked
// against (prod lambda_i) * prod_{i<j} (lambda_j - lambda_i), and psi is the
// basis change from aff(R)^n (basis a_1, x_1, ..., a_n, x_n) to the
// semidirect algebra of diag(lambda) powers (basis I, phi, ..., phi^{n-1},
// then the standard vectors).
struct VandermondeResult {
    MatQ n_matrix;
    Rational det_value;
    MatQ psi;
};

VandermondeResult vandermonde_isomorphism(const std::vector<Rational>& lambdas);

// --- exact Jordanization (see jordan.cpp) ---

// J and P are carried over QuadExt so a single result type covers both the
// all-rational case (ext_d absent, every entry has b = 0) and the quadratic
// extension case.  Convention: P^{-1} M P = J, verified exactly.
struct JordanResult {
    Matrix<QuadExt> j;
    Matrix<QuadExt> p;
    std::vector<std::string> case_tags; // per block: "A", "B", "C" or "diag"
    QuadExt det_p;
    std::optional<Rational> ext_d; // s^2 (or discriminant) when irrational
};

JordanResult jordanize(const MatQ& m);

// Closed determinant formula for the case-C transition matrix with first row
// (p11, p12, 0, ..., 0): det(P) = s^{n^2/4} (p11^2+p12^2)^{n/2} q_n with
// q_n = (-1)^{n/2} 2^{(n/2)(n/2-1)}.  Returns the value and checks it against
// the determinant of the recurrence-built P (CrossCheckError on mismatch).
QuadExt detP_formula_check(int n, const Rational& r, const QuadExt& s,
                           const Rational& p11 = Rational(1),
                           const Rational& p12 = Rational(0));

// Closed-form transition matrix for a single eigenvalue lambda of full
// multiplicity n: lower unit-triangular, p_{kl} = (-lambda)^{k-l} C(n-l, k-l),
// so det = 1.  Satisfies Mtilde_lambda P = P (lambda I + M_0) in the Krylov
// basis.
MatQ casea_p(int n, const Rational& lambda);

// Recurrence-built case-C transition matrix for chi = ((X-r)^2 + s^2)^{n/2}
// with first row (p11, p12, 0, ..., 0), and the target normal form
// M_z = r I + s M_s + M_n it conjugates onto.
Matrix<QuadExt> casec_p(int n, const Rational& r, const QuadExt& s, const Rational& p11,
                        const Rational& p12);
Matrix<QuadExt> mz_matrix(int n, const Rational& r, const QuadExt& s);

// Symbolic case-C machinery over Q[r, s] (variable 0 = r, variable 1 = s).
// Rows/cols are 1-based in the math; containers are 0-based.
std::vector<std::vector<MultiPoly>> casec_p_symbolic(int n, const Rational& p11,
                                                     const Rational& p12);
MultiPoly casec_detp_symbolic(int n, const Rational& p11, const Rational& p12);
MultiPoly casec_detp_formula(int n, const Rational& p11, const Rational& p12);

// Building blocks shared with the catalog: the principal nilpotent M_0, the
// complex-structure pair M_s / M_n, and M_{0,1} = M_s + M_n.
MatQ principal_nilpotent(int n);          // sum E_{i,i+1}
MatQ ms_matrix(int n);                    // -sum (E_{2j+1,2j+2} - E_{2j+2,2j+1}), n even
MatQ mn_matrix(int n);                    // sum E_{j,j+2}, n even
MatQ m01_matrix(int n);                   // M_s + M_n
MatQ circular_permutation(int n);         // e_i -> e_{i+1} cyclically

// Companion-style matrix of a monic polynomial chi in the Krylov basis
// (phi^{n-1} x, ..., phi x, x): sum E_{j,j+1} - sum chi_{n-j} E_{j,1}.
MatQ krylov_companion(const PolyQ& chi);

// Rational-coefficient factor extraction for a squarefree monic polynomial:
// all rational roots and all irreducible quadratic factors X^2 + b X + c.
// Throws MathError when an irreducible factor of degree > 2 remains.
struct SquarefreeFactors {
    std::vector<Rational> roots;                        // ascending
    std::vector<std::pair<Rational, Rational>> quads;   // (b, c), lex ascending
};
SquarefreeFactors factor_squarefree_rational(const PolyQ& f);

} // namespace frob
