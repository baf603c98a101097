#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "frob/lie.hpp"
#include "frob/matrix.hpp"

namespace frob {

// Facts asserted at construction time for a catalog entry.  Every field is
// recomputable from the entry data with the public algorithms (frobenius_decide,
// classify_G_phi, is_masa, nilradical, ...); the test suite recomputes each one
// and compares.  Fields are optional because not every fact is meaningful for
// every entry (a non-commutative generator set has no semidirect algebra, a
// derogatory family has no block label, ...).
struct ExpectedFacts {
    // The generator set commutes (false entries record known failures).
    std::optional<bool> commutative;
    // R*I + span(generators) is a maximal Abelian subalgebra of gl(n, Q).
    std::optional<bool> masa_gl;
    // The algebra carries a nondegenerate exact 2-form d(alpha).
    std::optional<bool> frobenius;
    // A stated certificate alpha (coefficients in the algebra basis) whose
    // 2-form d(alpha) is nondegenerate; present only when frobenius == true.
    std::optional<VecQ> functional;
    // Block-decomposition label of `nonderogatory_rep`, e.g. "D0(2)+aff(C)".
    std::optional<std::string> label;
    // A nonderogatory element of span(I, generators) realising `label`.
    std::optional<MatQ> nonderogatory_rep;
    // dim [N, N] where N is the nilradical of the algebra.
    std::optional<int> nil_derived_dim;
    // Nilpotency class of the nilradical.
    std::optional<int> nil_class;
    // Display name of another entry this one is isomorphic to (used when the
    // entry is a differently-presented copy of a canonical family member).
    std::optional<std::string> isomorphic_to;
};

// One named algebra (or generator set) from the classification tables.
struct CatalogEntry {
    std::string name;                    // display name, e.g. "G(4,1)"
    std::string family;                  // family key passed to Catalog::build
    std::map<std::string, long> params;  // family parameters, e.g. {n:4, p:1}

    // Generators of a commutative matrix algebra, identity first; the algebra
    // below is their semidirect sum with the translation space.  Absent for
    // abstract entries (direct sums, product-table families).
    std::optional<std::vector<MatQ>> matrix_generators;

    // The Lie algebra itself.  Absent exactly when the generator set fails to
    // commute (that failure is then the recorded fact).
    std::optional<LieAlgebra> algebra;

    // Abstract commutative-algebra data for the three-dimensional nilpotent
    // associative algebras: nil_products[i][j] is the coefficient vector of
    // the product x_{i+1} * x_{j+1} in the basis (x_1, x_2, x_3).
    std::optional<std::vector<std::vector<VecQ>>> nil_products;

    ExpectedFacts expected;
};

// A hand-checked isomorphism between two entries.  Column j of `psi` holds
// the coordinates of psi(e_{j+1}) in the target basis; verify_isomorphism
// accepts exactly this convention.
struct IsomorphismWitness {
    std::string name;
    CatalogEntry source;
    CatalogEntry target;
    MatQ psi;
};

// Named constructors for every algebra family used in the classification:
//
//   family     params                 description
//   ---------  ---------------------  -------------------------------------
//   "aff(R)"   -                      2-dim: [e1, e2] = e2
//   "aff(C)"   -                      4-dim realification, equals D01 at n=2
//   "G"        n >= 2, 1 <= p <= n-1  shift-power generators E(1,j)-completed
//   "h"        n >= 3, 2 <= p <= n-1  symmetric-corner generators
//   "Gprime"   n >= 2                 mirrored-corner generators
//   "B"        n >= 2                 last-column generators (not Frobenius)
//   "D0"       n >= 1                 powers of the lower shift matrix
//   "D01"      even n >= 2            powers of the rotation-plus-shift matrix
//   "L2"       1 <= i <= 6            maximal Abelian pairs inside sl(3)
//   "Y"        1 <= i <= 17           maximal Abelian triples inside sl(4);
//              eps = +-1 (i == 6)     sign variant
//              corrected = 0|1 (i==8) original (non-commutative) vs fixed set
//   "A3"       1 <= j <= 6            3-dim nilpotent associative algebras;
//              s = +-1 (j == 3, 4)    sign variant
class Catalog {
  public:
    static std::vector<std::string> family_names();

    // Construct an entry; throws MathError for unknown families or
    // out-of-range parameters, CrossCheckError when a hand-coded bracket
    // table disagrees with the one computed from the matrix generators.
    static CatalogEntry build(const std::string& family,
                              const std::map<std::string, long>& params = {});

    // The complete dimension-eight classification: exactly fourteen entries,
    // the nine nonderogatory block sums first, then the five others.
    static std::vector<CatalogEntry> dim8_table();

    // Hand-checked isomorphisms (each passes verify_isomorphism): the
    // G(n,2) ~ h(n,2) family for n = 3..6 and the sl(4) triples that match
    // canonical families in disguise.
    static std::vector<IsomorphismWitness> witnesses();
};

}  // namespace frob
