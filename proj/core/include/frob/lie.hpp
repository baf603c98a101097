#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "frob/linalg.hpp"
#include "frob/matrix.hpp"
#include "frob/multipoly.hpp"

namespace frob {

// Linear functional on a Lie algebra, in dual-basis coordinates.
struct LinearForm {
    VecQ coeffs;
    Rational operator()(const VecQ& v) const;
    // "e3*" / "2 e1* - e4*" style rendering, 1-based.
    std::string to_string() const;
};

// Provenance of a semidirect sum B ⋉ V: commuting matrices acting on V.
struct SemidirectData {
    std::vector<MatQ> b;
    int v_dim = 0;
};

// One structure-constant entry: [e_i, e_j] = sum of c * e_k (0-based, i < j).
struct BracketEntry {
    int i, j;
    std::vector<std::pair<int, Rational>> terms;
};

// Finite-dimensional real Lie algebra given by structure constants.
// Antisymmetry is implicit in storage; the Jacobi identity is validated at
// construction.  Values are immutable afterwards.
class LieAlgebra {
public:
    static LieAlgebra make(int dim, const std::vector<BracketEntry>& brackets,
                           std::vector<std::string> basis_names = {});

    int dim() const { return dim_; }
    const std::vector<std::string>& basis_names() const { return names_; }

    // [e_i, e_j] as a coefficient vector (any i, j).
    const VecQ& bracket_basis(int i, int j) const { return table_[static_cast<size_t>(i) * dim_ + j]; }
    // Bilinear extension.
    VecQ bracket(const VecQ& x, const VecQ& y) const;

    const std::optional<SemidirectData>& split() const { return split_; }
    const std::optional<Subspace<Rational>>& nilradical() const { return nilradical_; }

    // Re-runs the construction-time Jacobi check (throws MathError naming a
    // violating triple, 1-based).
    void check_jacobi() const;

    friend LieAlgebra semidirect_sum(const std::vector<MatQ>& b, int n);
    friend LieAlgebra direct_sum(const std::vector<LieAlgebra>& gs);

private:
    LieAlgebra() = default;
    int dim_ = 0;
    std::vector<VecQ> table_; // dim*dim coefficient vectors, antisymmetric
    std::vector<std::string> names_;
    std::optional<SemidirectData> split_;
    std::optional<Subspace<Rational>> nilradical_;
};

// B ⋉ V for commuting n×n matrices B = (A_1..A_m): [a,x] = ax, [a,b] = 0,
// [x,y] = 0; basis ordered (A_1..A_m, then the standard basis of V).
LieAlgebra semidirect_sum(const std::vector<MatQ>& b, int n);

LieAlgebra direct_sum(const std::vector<LieAlgebra>& gs);

// Nilradical of the semidirect sum built from (B, n): Nil(B) ⊕ V, where
// Nil(B) = {b in span(B) : b nilpotent} is cut out by the linear conditions
// tr(b u) = 0 over a basis u of the unital associative closure of B (for
// commuting matrices, all power traces vanishing is equivalent to nilpotency,
// and the condition set is closed under addition).  Each kernel vector is
// re-verified nilpotent; a failure raises CrossCheckError.
Subspace<Rational> nilradical_split(const std::vector<MatQ>& b, int n);

// Whole algebra as a subspace of itself.
Subspace<Rational> full_space(const LieAlgebra& g);
// span{[x, y] : x in basis(a), y in basis(b)}.
Subspace<Rational> bracket_space(const LieAlgebra& g, const Subspace<Rational>& a,
                                 const Subspace<Rational>& b);

// Dims of [g,g], [[g,g],[g,g]], ... until 0 or stabilization.
std::vector<int> derived_series_dims(const LieAlgebra& g);
// Dims of [g,g], [g,[g,g]], ... until 0 or stabilization.
std::vector<int> lower_central_dims(const LieAlgebra& g);
// Second derived ideal vanishes.
bool is_two_solvable(const LieAlgebra& g);

// {x : [x, g] = 0} as a subspace of g.
Subspace<Rational> center(const LieAlgebra& g);

// Der(g) = {D in gl(dim) : D[x,y] = [Dx,y] + [x,Dy]}, as a subspace of the
// dim^2-dimensional ambient (row-major vectorization).
Subspace<Rational> derivation_algebra(const LieAlgebra& g);

// true iff psi is invertible and psi[x,y]_1 = [psi x, psi y]_2 on all basis
// pairs (psi maps coordinates of g1 to coordinates of g2).
bool verify_isomorphism(const MatQ& psi, const LieAlgebra& g1, const LieAlgebra& g2);

// Pfaffian of the skew matrix S(alpha)_{ij} = -alpha([e_i, e_j]) as an exact
// polynomial in the dual coordinates alpha_1..alpha_dim.
struct PfaffianPoly {
    int dim = 0;
    MultiPoly poly;
    bool identically_zero() const { return poly.is_zero(); }
    Rational eval(const VecQ& alpha) const;
    std::string to_string() const;
};

// Odd dim yields the identically-zero verdict (skew forms on odd-dimensional
// spaces are always degenerate).
PfaffianPoly pfaffian_of_dalpha(const LieAlgebra& g);

struct FrobeniusResult {
    bool frobenius = false;
    std::optional<LinearForm> certificate; // with Pfaffian(certificate) != 0
    PfaffianPoly pfaffian;
};

// Deterministic and exact: the symbolic Pfaffian decides, and a certificate
// is located by enumerating small integer points (single coordinates first,
// then pairs in a growing box, then a variable-by-variable pinning that is
// guaranteed to terminate).
FrobeniusResult frobenius_decide(const LieAlgebra& g);

// Rank of the orbital map a -> -alpha∘a on span(B); rank n <=> open orbit.
int open_orbit_rank(const std::vector<MatQ>& b, const LinearForm& alpha);

// Isomorphism-invariant record.  Nilradical-derived entries are only present
// when the nilradical is known from split provenance (or passed explicitly).
struct Fingerprint {
    int dim = 0;
    std::vector<int> derived_dims;
    int derivation_dim = 0;
    int center_dim = 0;
    bool nil_available = false;
    int nilradical_dim = 0;
    std::vector<int> nil_lower_central_dims;
    int nil_class = 0;       // p with N^{p+1} = 0, N^p != 0
    int nil_derived_dim = 0; // dim [N, N]
    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
    std::string to_string() const;
};

Fingerprint fingerprint(const LieAlgebra& g,
                        const std::optional<SemidirectData>& split_data = std::nullopt);

} // namespace frob
