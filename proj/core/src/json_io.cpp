#include "frob/json_io.hpp"

#include <utility>

#include "json.hpp"

#include "frob/errors.hpp"

namespace frob {
namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json parse_root(const std::string& text) {
    try {
        return ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        throw ParseError(std::string("JSON syntax error: ") + e.what());
    }
}

const ordered_json& get_field(const ordered_json& obj, const char* key,
                              const std::string& path) {
    if (!obj.is_object()) throw ParseError(path + ": expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(path + "." + key + ": missing field");
    return *it;
}

int parse_int(const ordered_json& v, const std::string& path) {
    if (!v.is_number_integer()) throw ParseError(path + ": expected an integer");
    return v.get<int>();
}

Rational parse_rational(const ordered_json& v, const std::string& path) {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_string()) {
        try {
            return Rational::from_string(v.get<std::string>());
        } catch (const MathError& e) {
            throw ParseError(path + ": " + e.what());
        }
    }
    throw ParseError(path + ": expected a rational encoded as \"p/q\" or \"p\"");
}

MatQ parse_matrix(const ordered_json& v, const std::string& path) {
    const int rows = parse_int(get_field(v, "rows", path), path + ".rows");
    const int cols = parse_int(get_field(v, "cols", path), path + ".cols");
    if (rows < 0 || cols < 0) throw ParseError(path + ": negative dimension");
    const ordered_json& entries = get_field(v, "entries", path);
    if (!entries.is_array() || static_cast<int>(entries.size()) != rows)
        throw ParseError(path + ".entries: expected an array of " + std::to_string(rows) +
                         " rows");
    MatQ m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const ordered_json& r = entries[static_cast<size_t>(i)];
        const std::string rpath = path + ".entries[" + std::to_string(i) + "]";
        if (!r.is_array() || static_cast<int>(r.size()) != cols)
            throw ParseError(rpath + ": expected an array of " + std::to_string(cols) +
                             " entries");
        for (int j = 0; j < cols; ++j)
            m(i, j) =
                parse_rational(r[static_cast<size_t>(j)], rpath + "[" + std::to_string(j) + "]");
    }
    return m;
}

ordered_json rational_json(const Rational& r) { return r.to_string(); }

ordered_json scalar_json(const QuadExt& x) {
    if (x.is_rational()) return x.a().to_string();
    ordered_json o;
    o["a"] = x.a().to_string();
    o["b"] = x.b().to_string();
    o["d"] = x.d().to_string();
    return o;
}

template <class K, class F>
ordered_json matrix_json(const Matrix<K>& m, F entry) {
    ordered_json o;
    o["rows"] = m.rows();
    o["cols"] = m.cols();
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < m.rows(); ++i) {
        ordered_json r = ordered_json::array();
        for (int j = 0; j < m.cols(); ++j) r.push_back(entry(m(i, j)));
        rows.push_back(std::move(r));
    }
    o["entries"] = std::move(rows);
    return o;
}

ordered_json algebra_json(const LieAlgebra& g) {
    ordered_json o;
    o["dim"] = g.dim();
    ordered_json basis = ordered_json::array();
    for (int i = 0; i < g.dim(); ++i) {
        if (i < static_cast<int>(g.basis_names().size()) && !g.basis_names()[i].empty())
            basis.push_back(g.basis_names()[static_cast<size_t>(i)]);
        else
            basis.push_back("e" + std::to_string(i + 1));
    }
    o["basis"] = std::move(basis);
    ordered_json brackets = ordered_json::array();
    for (int i = 0; i < g.dim(); ++i)
        for (int j = i + 1; j < g.dim(); ++j) {
            const VecQ& v = g.bracket_basis(i, j);
            ordered_json terms = ordered_json::array();
            for (int k = 0; k < g.dim(); ++k) {
                const Rational& c = v[static_cast<size_t>(k)];
                if (c.is_zero()) continue;
                ordered_json t;
                t["k"] = k + 1;
                t["c"] = c.to_string();
                terms.push_back(std::move(t));
            }
            if (terms.empty()) continue;
            ordered_json b;
            b["i"] = i + 1;
            b["j"] = j + 1;
            b["terms"] = std::move(terms);
            brackets.push_back(std::move(b));
        }
    o["brackets"] = std::move(brackets);
    return o;
}

}  // namespace

MatQ parse_matrix_json(const std::string& text) {
    return parse_matrix(parse_root(text), "$");
}

PolyQ parse_poly_json(const std::string& text) {
    ordered_json root = parse_root(text);
    const ordered_json& coeffs = get_field(root, "coeffs", "$");
    if (!coeffs.is_array()) throw ParseError("$.coeffs: expected an array");
    std::vector<Rational> c;
    for (size_t k = 0; k < coeffs.size(); ++k)
        c.push_back(parse_rational(coeffs[k], "$.coeffs[" + std::to_string(k) + "]"));
    return PolyQ(std::move(c));
}

LieAlgebra parse_algebra_json(const std::string& text) {
    ordered_json root = parse_root(text);
    const int dim = parse_int(get_field(root, "dim", "$"), "$.dim");
    if (dim <= 0) throw ParseError("$.dim: expected a positive integer");
    std::vector<std::string> names;
    if (root.contains("basis")) {
        const ordered_json& basis = root["basis"];
        if (!basis.is_array() || static_cast<int>(basis.size()) != dim)
            throw ParseError("$.basis: expected an array of " + std::to_string(dim) +
                             " names");
        for (size_t i = 0; i < basis.size(); ++i) {
            if (!basis[i].is_string())
                throw ParseError("$.basis[" + std::to_string(i) + "]: expected a string");
            names.push_back(basis[i].get<std::string>());
        }
    }
    const ordered_json& brackets = get_field(root, "brackets", "$");
    if (!brackets.is_array()) throw ParseError("$.brackets: expected an array");
    std::vector<BracketEntry> entries;
    for (size_t b = 0; b < brackets.size(); ++b) {
        const std::string bpath = "$.brackets[" + std::to_string(b) + "]";
        const ordered_json& e = brackets[b];
        BracketEntry entry;
        entry.i = parse_int(get_field(e, "i", bpath), bpath + ".i") - 1;
        entry.j = parse_int(get_field(e, "j", bpath), bpath + ".j") - 1;
        if (entry.i < 0 || entry.j < 0 || entry.i >= dim || entry.j >= dim)
            throw ParseError(bpath + ": indices must lie in 1.." + std::to_string(dim));
        if (entry.i >= entry.j) throw ParseError(bpath + ": requires i < j (1-based)");
        const ordered_json& terms = get_field(e, "terms", bpath);
        if (!terms.is_array()) throw ParseError(bpath + ".terms: expected an array");
        for (size_t t = 0; t < terms.size(); ++t) {
            const std::string tpath = bpath + ".terms[" + std::to_string(t) + "]";
            const int k = parse_int(get_field(terms[t], "k", tpath), tpath + ".k") - 1;
            if (k < 0 || k >= dim)
                throw ParseError(tpath + ".k: must lie in 1.." + std::to_string(dim));
            entry.terms.emplace_back(k,
                                     parse_rational(get_field(terms[t], "c", tpath),
                                                    tpath + ".c"));
        }
        entries.push_back(std::move(entry));
    }
    return LieAlgebra::make(dim, entries, std::move(names));
}

GeneratorSet parse_generators_json(const std::string& text) {
    ordered_json root = parse_root(text);
    GeneratorSet out;
    out.n = parse_int(get_field(root, "n", "$"), "$.n");
    if (out.n <= 0) throw ParseError("$.n: expected a positive integer");
    const ordered_json& gens = get_field(root, "generators", "$");
    if (!gens.is_array() || gens.empty())
        throw ParseError("$.generators: expected a non-empty array");
    for (size_t i = 0; i < gens.size(); ++i) {
        const std::string path = "$.generators[" + std::to_string(i) + "]";
        MatQ m = parse_matrix(gens[i], path);
        if (m.rows() != out.n || m.cols() != out.n)
            throw ParseError(path + ": expected a " + std::to_string(out.n) + "x" +
                             std::to_string(out.n) + " matrix");
        out.generators.push_back(std::move(m));
    }
    return out;
}

std::string matrix_to_json(const MatQ& m) {
    return matrix_json(m, [](const Rational& r) { return rational_json(r); }).dump(2);
}

std::string matrix_to_json(const Matrix<QuadExt>& m) {
    return matrix_json(m, [](const QuadExt& x) { return scalar_json(x); }).dump(2);
}

std::string algebra_to_json(const LieAlgebra& g) { return algebra_json(g).dump(2); }

std::string poly_to_json(const PolyQ& p) {
    ordered_json o;
    ordered_json coeffs = ordered_json::array();
    for (const Rational& c : p.coeffs()) coeffs.push_back(c.to_string());
    o["coeffs"] = std::move(coeffs);
    return o.dump(2);
}

std::string classification_to_json(const ClassificationLabel& label,
                                   const JordanResult& jordan) {
    ordered_json o;
    o["label"] = label.to_string();
    ordered_json blocks = ordered_json::array();
    for (const std::string& b : label.block_names()) blocks.push_back(b);
    o["blocks"] = std::move(blocks);
    o["J"] = matrix_json(jordan.j, [](const QuadExt& x) { return scalar_json(x); });
    o["P"] = matrix_json(jordan.p, [](const QuadExt& x) { return scalar_json(x); });
    o["detP"] = scalar_json(jordan.det_p);
    return o.dump(2);
}

}  // namespace frob
