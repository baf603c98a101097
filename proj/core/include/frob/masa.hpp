#pragma once

#include <optional>
#include <vector>

#include "frob/linalg.hpp"
#include "frob/matrix.hpp"

namespace frob {

enum class Ambient { gl, sl };

// true iff span(S) equals its own centralizer inside the ambient algebra
// (for sl: gl-centralizer intersected with the traceless subspace).  S must
// span an abelian subspace.
bool is_masa(const std::vector<MatQ>& s, Ambient ambient = Ambient::gl);

// (nu, m, mu) with nu = n - dim(span(S) K^n), mu = dim of the common kernel,
// m = n - nu - mu.  Generators must be nilpotent.
struct KravchukSignature {
    int nu = 0;
    int m = 0;
    int mu = 0;
    int n = 0;
    friend bool operator==(const KravchukSignature&, const KravchukSignature&) = default;
};

KravchukSignature kravchuk_signature(const std::vector<MatQ>& s);

// Smallest p with all p-fold products zero; {0} has class 1 by convention.
// Generators must be abelian and nilpotent.
int nilpotency_class(const std::vector<MatQ>& s);

// For an (n-1)-dimensional abelian nilpotent family of class 2: if the image
// of span(S) is a line, returns an invertible P with P span(S) P^{-1} equal
// to span{E_{1,2},...,E_{1,n}} (the conjugator completes the image vector to
// a basis greedily, lowest standard index first); otherwise nullopt.
std::optional<MatQ> recognize_class2_mans(const std::vector<MatQ>& s);

} // namespace frob
