#pragma once

#include <string>
#include <vector>

#include "frob/classify.hpp"
#include "frob/lie.hpp"
#include "frob/matrix.hpp"
#include "frob/polynomial.hpp"
#include "frob/quadext.hpp"

namespace frob {

// JSON encodings (all exact, no floating point anywhere):
//   scalar     "p/q" or "p"; with an extension attached, {"a":"1/2","b":"-3","d":"5"}
//   polynomial {"coeffs":["-1","0","1"]}                          (ascending)
//   matrix     {"rows":2,"cols":2,"entries":[["0","1"],["0","0"]]}
//   algebra    {"dim":6,"basis":["e1",...],
//               "brackets":[{"i":1,"j":4,"terms":[{"k":4,"c":"1"}]}]}  (1-based, i<j)
//   generators {"n":4,"generators":[matrix,...]}
//
// Parsers throw ParseError carrying a location (byte offset for syntax
// errors, field path for schema violations).  Serializers emit a stable
// field order so byte-identical output is reproducible.

MatQ parse_matrix_json(const std::string& text);
LieAlgebra parse_algebra_json(const std::string& text);
PolyQ parse_poly_json(const std::string& text);

// {"n":..., "generators":[...]}; every generator must be n x n.
struct GeneratorSet {
    int n = 0;
    std::vector<MatQ> generators;
};
GeneratorSet parse_generators_json(const std::string& text);

std::string matrix_to_json(const MatQ& m);
std::string matrix_to_json(const Matrix<QuadExt>& m);
std::string algebra_to_json(const LieAlgebra& g);
std::string poly_to_json(const PolyQ& p);

// {"label":...,"blocks":[...],"J":matrix,"P":matrix,"detP":scalar}
std::string classification_to_json(const ClassificationLabel& label, const JordanResult& jordan);

} // namespace frob
