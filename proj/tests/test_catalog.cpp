#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "frob/catalog.hpp"
#include "frob/classify.hpp"
#include "frob/errors.hpp"
#include "frob/json_io.hpp"
#include "frob/lie.hpp"
#include "frob/linalg.hpp"
#include "frob/masa.hpp"

using namespace frob;

TEST_CASE("family catalog lists every constructor") {
    auto names = Catalog::family_names();
    CHECK(names.size() == 11);
    std::set<std::string> s(names.begin(), names.end());
    for (const char* f : {"aff(R)", "aff(C)", "G", "h", "Gprime", "B", "D0", "D01", "L2", "Y", "A3"})
        CHECK(s.count(f) == 1);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(Catalog::build("nosuch"), MathError);
    CHECK_THROWS_AS(Catalog::build("G", {{"n", 1}, {"p", 1}}), MathError);
    CHECK_THROWS_AS(Catalog::build("G", {{"n", 4}, {"p", 4}}), MathError); // p <= n-1
    CHECK_THROWS_AS(Catalog::build("h", {{"n", 3}, {"p", 1}}), MathError); // p >= 2
    CHECK_THROWS_AS(Catalog::build("D01", {{"n", 3}}), MathError);         // odd
    CHECK_THROWS_AS(Catalog::build("D0", {{"n", 0}}), MathError);
    CHECK_THROWS_AS(Catalog::build("Y", {{"i", 18}}), MathError);
    CHECK_THROWS_AS(Catalog::build("Y", {{"i", 5}, {"eps", -1}}), MathError); // eps only for i=6
    CHECK_THROWS_AS(Catalog::build("Y", {{"i", 6}, {"eps", 2}}), MathError);
    CHECK_THROWS_AS(Catalog::build("A3", {{"j", 7}}), MathError);
    CHECK_THROWS_AS(Catalog::build("aff(R)", {{"n", 2}}), MathError); // unknown key
    CHECK_THROWS_AS(Catalog::build("D0", {{"m", 3}}), MathError);     // wrong key name
}

TEST_CASE("the affine line entry") {
    CatalogEntry e = Catalog::build("aff(R)");
    CHECK(e.name == "aff(R)");
    REQUIRE(e.algebra.has_value());
    CHECK(e.algebra->dim() == 2);
    REQUIRE(e.matrix_generators.has_value());
    CHECK(e.matrix_generators->size() == 1);
    CHECK((*e.matrix_generators)[0] == MatQ::identity(1));
    CHECK(e.expected.frobenius == true);
    CHECK(e.expected.masa_gl == true);
}

TEST_CASE("D0 entries are powers of the shift with the identity first") {
    CatalogEntry e = Catalog::build("D0", {{"n", 3}});
    REQUIRE(e.matrix_generators.has_value());
    const auto& gens = *e.matrix_generators;
    REQUIRE(gens.size() == 3);
    CHECK(gens[0] == MatQ::identity(3));
    // the remaining generators span the same algebra as the powers of one
    // nonderogatory nilpotent
    CHECK(matrix_span(gens) == matrix_span(power_span_basis(gens[1])));
    REQUIRE(e.algebra.has_value());
    CHECK(e.algebra->dim() == 6);
    REQUIRE(e.algebra->split().has_value());
    CHECK(e.algebra->split()->v_dim == 3);
    CHECK(e.expected.frobenius == true);
    REQUIRE(e.expected.functional.has_value());
    // stated certificate: last dual coordinate
    CHECK((*e.expected.functional)[5] == Rational(1));
}

TEST_CASE("G(4,1): Heisenberg-type nilradical") {
    CatalogEntry e = Catalog::build("G", {{"n", 4}, {"p", 1}});
    REQUIRE(e.algebra.has_value());
    CHECK(e.algebra->dim() == 8);
    REQUIRE(e.algebra->nilradical().has_value());
    CHECK(e.algebra->nilradical()->dim() == 7);
    CHECK(e.expected.nil_class == 2);
    CHECK(e.expected.nil_derived_dim == 1);
    CHECK(e.expected.masa_gl == true);
    CHECK(e.expected.frobenius == true);
    // generator set is I plus nilpotents; it is a masa of gl(4)
    REQUIRE(e.matrix_generators.has_value());
    CHECK(is_masa(*e.matrix_generators, Ambient::gl));
}

TEST_CASE("the uncorrected sl(4) item 8 is recorded as non-commutative") {
    CatalogEntry bad = Catalog::build("Y", {{"i", 8}, {"corrected", 0}});
    CHECK(bad.expected.commutative == false);
    CHECK_FALSE(bad.algebra.has_value());
    REQUIRE(bad.matrix_generators.has_value());
    // the recorded failure is real: two generators do not commute
    bool found = false;
    const auto& g = *bad.matrix_generators;
    for (size_t a = 0; a < g.size() && !found; ++a)
        for (size_t b = a + 1; b < g.size() && !found; ++b)
            found = !commutator(g[a], g[b]).is_zero();
    CHECK(found);

    CatalogEntry good = Catalog::build("Y", {{"i", 8}});
    CHECK(good.expected.commutative == true);
    REQUIRE(good.algebra.has_value());
    CHECK(good.expected.isomorphic_to == "D01(4)");
}

TEST_CASE("maximal abelian families in small sl are canonical algebras in disguise") {
    auto iso = [](const std::string& fam, std::map<std::string, long> p) {
        return Catalog::build(fam, p).expected.isomorphic_to;
    };
    CHECK(iso("L2", {{"i", 4}}) == "B(3)");
    CHECK(iso("L2", {{"i", 5}}) == "G(3,1)");
    CHECK(iso("L2", {{"i", 6}}) == "D0(3)");
    CHECK(iso("Y", {{"i", 2}}) == "G(4,1)");
    CHECK(iso("Y", {{"i", 3}}) == "B(4)");
    CHECK(iso("Y", {{"i", 5}}) == "h(4,2)");
    CHECK(iso("Y", {{"i", 6}, {"eps", 1}}) == "h(4,3)");
    CHECK(iso("Y", {{"i", 6}, {"eps", -1}}) == "Gprime(4)");
    CHECK(iso("Y", {{"i", 7}}) == "D0(4)");
    CHECK(iso("A3", {{"j", 1}}) == "G(4,1)");
    CHECK(iso("A3", {{"j", 2}}) == "h(4,2)");
    CHECK(iso("A3", {{"j", 3}, {"s", 1}}) == "h(4,3)");
    CHECK(iso("A3", {{"j", 3}, {"s", -1}}) == "Gprime(4)");
    CHECK(iso("A3", {{"j", 6}}) == "D0(4)");
    // Items 4 and 5 are the non-commutative product tables: no matrix model.
    CHECK(Catalog::build("A3", {{"j", 4}, {"s", 1}}).expected.commutative == false);
    CHECK_FALSE(Catalog::build("A3", {{"j", 5}}).algebra.has_value());
}

TEST_CASE("dimension-eight table: fourteen entries, nonderogatory first") {
    auto table = Catalog::dim8_table();
    REQUIRE(table.size() == 14);
    for (size_t k = 0; k < table.size(); ++k) {
        const auto& e = table[k];
        REQUIRE(e.algebra.has_value());
        CHECK(e.algebra->dim() == 8);
        if (k < 9) {
            REQUIRE(e.expected.nonderogatory_rep.has_value());
            REQUIRE(e.expected.label.has_value());
            CHECK(is_nonderogatory(*e.expected.nonderogatory_rep));
            CHECK(classify_G_phi(*e.expected.nonderogatory_rep).to_string() == *e.expected.label);
            CHECK(e.name == *e.expected.label);
        } else {
            CHECK_FALSE(e.expected.nonderogatory_rep.has_value());
        }
    }
    // all fourteen names distinct
    std::set<std::string> names;
    for (const auto& e : table) names.insert(e.name);
    CHECK(names.size() == 14);
    CHECK(table[0].name == "D01(4)");
    CHECK(table[1].name == "D0(4)");
    CHECK(table[9].name == "G(4,1)");
}

TEST_CASE("every stated isomorphism witness verifies") {
    auto ws = Catalog::witnesses();
    CHECK(ws.size() == 14);
    for (const auto& w : ws) {
        REQUIRE(w.source.algebra.has_value());
        REQUIRE(w.target.algebra.has_value());
        CHECK_MESSAGE(verify_isomorphism(w.psi, *w.source.algebra, *w.target.algebra), w.name);
    }
}

TEST_CASE("matrix json round trip") {
    MatQ m{{0, 1}, {-1, Rational(1, 2)}};
    std::string text = matrix_to_json(m);
    CHECK(parse_matrix_json(text) == m);
    CHECK(text == matrix_to_json(m)); // byte-stable
    // extension entries survive via the {a, b, d} object form
    Matrix<QuadExt> me(1, 1);
    me(0, 0) = QuadExt(Rational(1, 2), Rational(-3), Rational(5));
    std::string ext = matrix_to_json(me);
    CHECK(ext.find("\"d\"") != std::string::npos);
}

TEST_CASE("algebra json round trip") {
    CatalogEntry e = Catalog::build("D0", {{"n", 2}});
    std::string text = algebra_to_json(*e.algebra);
    LieAlgebra g = parse_algebra_json(text);
    CHECK(g.dim() == e.algebra->dim());
    for (int i = 0; i < g.dim(); ++i)
        for (int j = 0; j < g.dim(); ++j)
            CHECK(g.bracket_basis(i, j) == e.algebra->bracket_basis(i, j));
    CHECK(g.basis_names() == e.algebra->basis_names());
}

TEST_CASE("polynomial json round trip") {
    PolyQ p({Rational(-1, 3), Rational(0), Rational(2)});
    CHECK(parse_poly_json(poly_to_json(p)) == p);
    CHECK(parse_poly_json(poly_to_json(PolyQ())).is_zero());
}

TEST_CASE("parser errors carry locations") {
    CHECK_THROWS_AS(parse_matrix_json("{"), ParseError);
    CHECK_THROWS_AS(parse_matrix_json("[1,2]"), ParseError);
    // schema violations name the offending path
    try {
        parse_matrix_json(R"({"rows":2,"cols":2,"entries":[["1","0"]]})");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("entries") != std::string::npos);
    }
    try {
        parse_matrix_json(R"({"rows":1,"cols":1,"entries":[["1/0"]]})");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("entries") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_generators_json(R"({"n":2,"generators":[]})"), ParseError);
    // a structurally valid algebra failing the Jacobi identity is a math error
    std::string bad_algebra = R"({"dim":3,"basis":["e1","e2","e3"],"brackets":[)"
                              R"({"i":1,"j":2,"terms":[{"k":3,"c":"1"}]},)"
                              R"({"i":1,"j":3,"terms":[{"k":1,"c":"1"}]}]})";
    CHECK_THROWS_AS(parse_algebra_json(bad_algebra), MathError);
}

TEST_CASE("generator sets parse with shape checking") {
    std::string text = R"({"n":2,"generators":[{"rows":2,"cols":2,"entries":[["0","1"],["0","0"]]}]})";
    GeneratorSet gs = parse_generators_json(text);
    CHECK(gs.n == 2);
    REQUIRE(gs.generators.size() == 1);
    CHECK(gs.generators[0] == MatQ::unit(2, 2, 0, 1));
    // wrong-size generator
    std::string bad = R"({"n":3,"generators":[{"rows":2,"cols":2,"entries":[["0","1"],["0","0"]]}]})";
    CHECK_THROWS_AS(parse_generators_json(bad), ParseError);
}

TEST_CASE("classification report serializes label, blocks, and exact J, P, detP") {
    MatQ m{{Rational(1, 2), 0}, {0, Rational(-3, 2)}};
    auto label = classify_G_phi(m);
    auto jr = jordanize(m);
    std::string text = classification_to_json(label, jr);
    CHECK(text.find("\"label\"") != std::string::npos);
    CHECK(text.find("aff(R)+aff(R)") != std::string::npos);
    CHECK(text.find("\"J\"") != std::string::npos);
    CHECK(text.find("\"P\"") != std::string::npos);
    CHECK(text.find("\"detP\"") != std::string::npos);
    CHECK(text.find("-3/2") != std::string::npos);
}
