#include "frob/catalog.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

#include "frob/classify.hpp"
#include "frob/errors.hpp"
#include "frob/linalg.hpp"

namespace frob {
namespace {

// Elementary matrix E_{i,j}, 1-based indices.
MatQ E(int n, int i, int j) { return MatQ::unit(n, n, i - 1, j - 1); }

// Sum of dual-basis covectors e_k^*, 1-based indices.
VecQ dual(int dim, std::initializer_list<int> idx) {
    VecQ v(static_cast<size_t>(dim));
    for (int k : idx) v[static_cast<size_t>(k - 1)] = Rational(1);
    return v;
}

// One bracket-table row [e_i, e_j] = sum c_k e_k, 1-based indices.
BracketEntry row(int i, int j, std::initializer_list<std::pair<int, long>> terms) {
    BracketEntry e{i - 1, j - 1, {}};
    for (const auto& [k, c] : terms) e.terms.emplace_back(k - 1, Rational(c));
    return e;
}

std::string table_dump(const LieAlgebra& g) {
    std::ostringstream os;
    for (int i = 0; i < g.dim(); ++i)
        for (int j = i + 1; j < g.dim(); ++j) {
            const VecQ& v = g.bracket_basis(i, j);
            bool nonzero = false;
            for (const auto& c : v)
                if (!c.is_zero()) { nonzero = true; break; }
            if (!nonzero) continue;
            os << "  [e" << (i + 1) << ",e" << (j + 1) << "] =";
            bool first = true;
            for (int k = 0; k < g.dim(); ++k) {
                const Rational& c = v[static_cast<size_t>(k)];
                if (c.is_zero()) continue;
                os << (first ? " " : " + ") << "(" << c.to_string() << ")e" << (k + 1);
                first = false;
            }
            os << "\n";
        }
    return os.str();
}

// Compare a hand-stated bracket table against the algebra computed from the
// matrix generators; any disagreement is a hard error carrying both tables.
void cross_check_table(const LieAlgebra& computed,
                       const std::vector<BracketEntry>& stated,
                       const std::string& ctx) {
    LieAlgebra hand = LieAlgebra::make(computed.dim(), stated);
    for (int i = 0; i < computed.dim(); ++i)
        for (int j = i + 1; j < computed.dim(); ++j)
            if (computed.bracket_basis(i, j) != hand.bracket_basis(i, j))
                throw CrossCheckError(ctx +
                                      ": stated bracket table disagrees with the one computed "
                                      "from the matrix generators\nstated:\n" +
                                      table_dump(hand) + "computed:\n" + table_dump(computed));
}

long get_long(const std::map<std::string, long>& params, const std::string& key) {
    auto it = params.find(key);
    if (it == params.end())
        throw MathError("catalog: missing parameter '" + key + "'");
    return it->second;
}

long get_long_or(const std::map<std::string, long>& params, const std::string& key,
                 long fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

void reject_unknown(const std::map<std::string, long>& params,
                    std::initializer_list<const char*> allowed, const std::string& family) {
    for (const auto& [key, value] : params) {
        (void)value;
        bool ok = false;
        for (const char* a : allowed)
            if (key == a) { ok = true; break; }
        if (!ok)
            throw MathError("catalog: unknown parameter '" + key + "' for family '" + family +
                            "'");
    }
}

// Shared assembly for entries defined by commuting matrix generators: records
// the generators, flags non-commuting sets instead of building an algebra,
// and cross-checks any printed bracket table against the computed one.
CatalogEntry matrix_entry(std::string name, std::string family,
                          std::map<std::string, long> params, std::vector<MatQ> gens,
                          const std::vector<BracketEntry>* stated = nullptr) {
    CatalogEntry ent;
    ent.name = std::move(name);
    ent.family = std::move(family);
    ent.params = std::move(params);
    const int n = gens.front().rows();
    bool commute = true;
    for (size_t i = 0; i < gens.size() && commute; ++i)
        for (size_t j = i + 1; j < gens.size(); ++j)
            if (!commutator(gens[i], gens[j]).is_zero()) { commute = false; break; }
    ent.expected.commutative = commute;
    ent.matrix_generators = std::move(gens);
    if (!commute) return ent;
    ent.algebra = semidirect_sum(*ent.matrix_generators, n);
    if (stated != nullptr) cross_check_table(*ent.algebra, *stated, ent.name);
    return ent;
}

// psi assembly: images[j] lists 1-based (k, c) pairs with psi(e_{j+1}) = sum c e'_k.
MatQ psi_from(int dim, const std::vector<std::vector<std::pair<int, long>>>& images) {
    MatQ psi(dim, dim);
    for (int j = 0; j < dim; ++j)
        for (const auto& [k, c] : images[static_cast<size_t>(j)])
            psi(k - 1, j) = Rational(c);
    return psi;
}

// ---------------------------------------------------------------------------
// Families
// ---------------------------------------------------------------------------

CatalogEntry build_affR() {
    std::vector<BracketEntry> stated = {row(1, 2, {{2, 1}})};
    CatalogEntry ent = matrix_entry("aff(R)", "aff(R)", {}, {MatQ::identity(1)}, &stated);
    ent.expected.masa_gl = true;
    ent.expected.frobenius = true;
    ent.expected.functional = dual(2, {2});
    ent.expected.label = "aff(R)";
    ent.expected.nonderogatory_rep = MatQ::identity(1);
    ent.expected.nil_derived_dim = 0;
    ent.expected.nil_class = 1;
    return ent;
}

CatalogEntry build_affC() {
    std::vector<BracketEntry> stated = {
        row(1, 3, {{3, 1}}), row(1, 4, {{4, 1}}), row(2, 3, {{4, 1}}), row(2, 4, {{3, -1}})};
    CatalogEntry ent =
        matrix_entry("aff(C)", "aff(C)", {}, {MatQ::identity(2), ms_matrix(2)}, &stated);
    ent.expected.masa_gl = true;
    ent.expected.frobenius = true;
    ent.expected.functional = dual(4, {3});
    ent.expected.label = "aff(C)";
    ent.expected.nonderogatory_rep = ms_matrix(2);
    ent.expected.nil_derived_dim = 0;
    ent.expected.nil_class = 1;
    return ent;
}

CatalogEntry build_G(const std::map<std::string, long>& params) {
    reject_unknown(params, {"n", "p"}, "G");
    const long n = get_long(params, "n");
    const long p = get_long(params, "p");
    if (n < 2 || p < 1 || p > n - 1)
        throw MathError("catalog: family 'G' requires n >= 2 and 1 <= p <= n-1");
    const int N = static_cast<int>(n), P = static_cast<int>(p);
    MatQ m(N, N);
    for (int l = 1; l <= P; ++l) m += E(N, l, l + 1);
    std::vector<MatQ> gens = {MatQ::identity(N)};
    MatQ acc = MatQ::identity(N);
    for (int j = 2; j <= P + 1; ++j) {
        acc = acc * m;
        gens.push_back(acc);
    }
    for (int j = P + 2; j <= N; ++j) gens.push_back(E(N, 1, j));
    std::vector<BracketEntry> stated;
    for (int j = 1; j <= N; ++j) stated.push_back(row(1, N + j, {{N + j, 1}}));
    for (int k = 2; k <= P + 1; ++k)
        for (int q = k; q <= P + 1; ++q) stated.push_back(row(k, N + q, {{N + q - k + 1, 1}}));
    for (int q = P + 2; q <= N; ++q) stated.push_back(row(q, N + q, {{N + 1, 1}}));

    std::ostringstream name;
    name << "G(" << n << "," << p << ")";
    CatalogEntry ent = matrix_entry(name.str(), "G", params, std::move(gens), &stated);
    ent.expected.masa_gl = true;
    ent.expected.frobenius = true;
    ent.expected.functional = dual(2 * N, {N + 1});
    ent.expected.nil_derived_dim = P;
    ent.expected.nil_class = P + 1;
    if (p == n - 1) {
        // The generator span is the full power algebra of the shift matrix.
        ent.expected.label = "D0(" + std::to_string(n) + ")";
        ent.expected.nonderogatory_rep = m;
        ent.expected.isomorphic_to = "D0(" + std::to_string(n) + ")";
    }
    return ent;
}

CatalogEntry build_h(const std::map<std::string, long>& params) {
    reject_unknown(params, {"n", "p"}, "h");
    const long n = get_long(params, "n");
    const long p = get_long(params, "p");
    if (n < 3 || p < 2 || p > n - 1)
        throw MathError("catalog: family 'h' requires n >= 3 and 2 <= p <= n-1");
    const int N = static_cast<int>(n), P = static_cast<int>(p);
    std::vector<MatQ> gens = {MatQ::identity(N)};
    for (int j = 2; j <= P; ++j) gens.push_back(E(N, 1, j) + E(N, j, N));
    for (int i = 1; i <= N - P; ++i) gens.push_back(E(N, 1, P + i));
    std::vector<BracketEntry> stated;
    for (int j = 1; j <= N; ++j) stated.push_back(row(1, N + j, {{N + j, 1}}));
    for (int j = 2; j <= N; ++j) stated.push_back(row(j, N + j, {{N + 1, 1}}));
    for (int k = 2; k <= P; ++k) stated.push_back(row(k, 2 * N, {{N + k, 1}}));

    std::ostringstream name;
    name << "h(" << n << "," << p << ")";
    CatalogEntry ent = matrix_entry(name.str(), "h", params, std::move(gens), &stated);
    ent.expected.masa_gl = true;
    ent.expected.frobenius = true;
    ent.expected.functional = dual(2 * N, {N + 1});
    ent.expected.nil_derived_dim = P;
    ent.expected.nil_class = 3;
    return ent;
}

CatalogEntry build_Gprime(const std::map<std::string, long>& params) {
    reject_unknown(params, {"n"}, "Gprime");
    const long n = get_long(params, "n");
    if (n < 2) throw MathError("catalog: family 'Gprime' requires n >= 2");
    const int N = static_cast<int>(n);
    std::vector<MatQ> gens = {MatQ::identity(N)};
    for (int j = 2; j <= N; ++j) gens.push_back(E(N, 1, j) + E(N, N - j + 1, N));
    std::vector<BracketEntry> stated;
    for (int j = 1; j <= N; ++j) stated.push_back(row(1, N + j, {{N + j, 1}}));
    for (int j = 2; j <= N - 1; ++j) {
        stated.push_back(row(j, N + j, {{N + 1, 1}}));
        stated.push_back(row(j, 2 * N, {{2 * N - j + 1, 1}}));
    }
    stated.push_back(row(N, 2 * N, {{N + 1, 2}}));

    CatalogEntry ent =
        matrix_entry("Gprime(" + std::to_string(n) + ")", "Gprime", params, std::move(gens),
                     &stated);
    ent.expected.masa_gl = true;
    ent.expected.frobenius = true;
    ent.expected.functional = dual(2 * N, {N + 1});
    ent.expected.nil_derived_dim = N - 1;
    ent.expected.nil_class = (N >= 3) ? 3 : 2;
    return ent;
}

CatalogEntry build_B(const std::map<std::string, long>& params) {
    reject_unknown(params, {"n"}, "B");
    const long n = get_long(params, "n");
    if (n < 2) throw MathError("catalog: family 'B' requires n >= 2");
    const int N = static_cast<int>(n);
    std::vector<MatQ> gens = {MatQ::identity(N)};
    for (int i = 1; i <= N - 1; ++i) gens.push_back(E(N, i, N));
    std::vector<BracketEntry> stated;
    for (int j = 1; j <= N; ++j) stated.push_back(row(1, N + j, {{N + j, 1}}));
    for (int i = 1; i <= N - 1; ++i) stated.push_back(row(1 + i, 2 * N, {{N + i, 1}}));

    CatalogEntry ent =
        matrix_entry("B(" + std::to_string(n) + ")", "B", params, std::move(gens), &stated);
    ent.expected.masa_gl = true;
    // For n >= 3 every covector has a degenerate 2-form: the generators
    // e_2..e_n all pair only with the last translation direction.
    ent.expected.frobenius = (N == 2);
    if (N == 2) {
        ent.expected.functional = dual(4, {3});
        ent.expected.isomorphic_to = "D0(2)";
    }
    ent.expected.nil_derived_dim = N - 1;
    ent.expected.nil_class = 2;
    return ent;
}

CatalogEntry build_D0(const std::map<std::string, long>& params) {
    reject_unknown(params, {"n"}, "D0");
    const long n = get_long(params, "n");
    if (n < 1) throw MathError("catalog: family 'D0' requires n >= 1");
    const int N = static_cast<int>(n);
    const MatQ t = principal_nilpotent(N).transpose();
    std::vector<MatQ> gens;
    MatQ acc = MatQ::identity(N);
    gens.push_back(acc);
    for (int j = 2; j <= N; ++j) {
        acc = acc * t;
        gens.push_back(acc);
    }
    std::vector<BracketEntry> stated;
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
            if (i + j - 1 <= N) stated.push_back(row(i, N + j, {{N + i + j - 1, 1}}));

    CatalogEntry ent =
        matrix_entry("D0(" + std::to_string(n) + ")", "D0", params, std::move(gens), &stated);
    ent.expected.masa_gl = true;
    ent.expected.frobenius = true;
    ent.expected.functional = dual(2 * N, {2 * N});
    ent.expected.label = (N == 1) ? "aff(R)" : "D0(" + std::to_string(n) + ")";
    ent.expected.nonderogatory_rep = t;
    if (N == 1) ent.expected.isomorphic_to = "aff(R)";
    ent.expected.nil_derived_dim = (N >= 2) ? N - 1 : 0;
    ent.expected.nil_class = (N >= 2) ? N : 1;
    return ent;
}

CatalogEntry build_D01(const std::map<std::string, long>& params) {
    reject_unknown(params, {"n"}, "D01");
    const long n = get_long(params, "n");
    if (n < 2 || n % 2 != 0) throw MathError("catalog: family 'D01' requires even n >= 2");
    const int N = static_cast<int>(n);
    const MatQ m = m01_matrix(N);
    std::vector<MatQ> gens;
    MatQ acc = MatQ::identity(N);
    gens.push_back(acc);
    for (int j = 2; j <= N; ++j) {
        acc = acc * m;
        gens.push_back(acc);
    }
    std::vector<BracketEntry> stated;
    const std::vector<BracketEntry>* stated_ptr = nullptr;
    if (N == 2) {
        stated = {row(1, 3, {{3, 1}}), row(1, 4, {{4, 1}}), row(2, 3, {{4, 1}}),
                  row(2, 4, {{3, -1}})};
        stated_ptr = &stated;
    } else if (N == 4) {
        stated = {row(1, 5, {{5, 1}}),
                  row(1, 6, {{6, 1}}),
                  row(1, 7, {{7, 1}}),
                  row(1, 8, {{8, 1}}),
                  row(2, 5, {{6, 1}}),
                  row(2, 6, {{5, -1}}),
                  row(2, 7, {{5, 1}, {8, 1}}),
                  row(2, 8, {{6, 1}, {7, -1}}),
                  row(3, 5, {{5, -1}}),
                  row(3, 6, {{6, -1}}),
                  row(3, 7, {{6, 2}, {7, -1}}),
                  row(3, 8, {{5, -2}, {8, -1}}),
                  row(4, 5, {{6, -1}}),
                  row(4, 6, {{5, 1}}),
                  row(4, 7, {{5, -3}, {8, -1}}),
                  row(4, 8, {{6, -3}, {7, 1}})};
        stated_ptr = &stated;
    }

    CatalogEntry ent = matrix_entry("D01(" + std::to_string(n) + ")", "D01", params,
                                    std::move(gens), stated_ptr);
    ent.expected.masa_gl = true;
    ent.expected.frobenius = true;
    ent.expected.functional = dual(2 * N, {N + 1});
    ent.expected.label = (N == 2) ? "aff(C)" : "D01(" + std::to_string(n) + ")";
    ent.expected.nonderogatory_rep = m;
    if (N == 2) ent.expected.isomorphic_to = "aff(C)";
    ent.expected.nil_derived_dim = N - 2;
    ent.expected.nil_class = std::max(1, N / 2);
    return ent;
}

CatalogEntry build_L2(const std::map<std::string, long>& params) {
    reject_unknown(params, {"i"}, "L2");
    const long i = get_long(params, "i");
    if (i < 1 || i > 6) throw MathError("catalog: family 'L2' requires 1 <= i <= 6");
    MatQ d1(3, 3);
    d1(0, 0) = Rational(1);
    d1(1, 1) = Rational(-1);
    MatQ d2(3, 3);
    d2(0, 0) = Rational(1);
    d2(1, 1) = Rational(1);
    d2(2, 2) = Rational(-2);
    std::vector<MatQ> pair;
    switch (i) {
        case 1: pair = {d1, d2}; break;
        case 2: pair = {d2, E(3, 1, 2) - E(3, 2, 1)}; break;
        case 3: pair = {d2, E(3, 1, 2)}; break;
        case 4: pair = {E(3, 1, 3), E(3, 2, 3)}; break;
        case 5: pair = {E(3, 1, 2), E(3, 1, 3)}; break;
        case 6: pair = {E(3, 1, 2) + E(3, 2, 3), E(3, 1, 3)}; break;
    }
    std::vector<MatQ> gens = {MatQ::identity(3), pair[0], pair[1]};
    CatalogEntry ent =
        matrix_entry("L2(" + std::to_string(i) + ")", "L2", params, std::move(gens));
    ent.expected.masa_gl = true;
    switch (i) {
        case 1:
            ent.expected.frobenius = true;
            ent.expected.label = "aff(R)+aff(R)+aff(R)";
            ent.expected.nonderogatory_rep = d1;
            ent.expected.nil_derived_dim = 0;
            ent.expected.nil_class = 1;
            break;
        case 2:
            ent.expected.frobenius = true;
            ent.expected.label = "aff(R)+aff(C)";
            ent.expected.nonderogatory_rep = E(3, 1, 2) - E(3, 2, 1);
            ent.expected.nil_derived_dim = 0;
            ent.expected.nil_class = 1;
            break;
        case 3:
            ent.expected.frobenius = true;
            ent.expected.label = "D0(2)+aff(R)";
            ent.expected.nonderogatory_rep = E(3, 1, 2) + E(3, 3, 3);
            ent.expected.nil_derived_dim = 1;
            ent.expected.nil_class = 2;
            break;
        case 4:
            ent.expected.frobenius = false;
            ent.expected.isomorphic_to = "B(3)";
            ent.expected.nil_derived_dim = 2;
            ent.expected.nil_class = 2;
            break;
        case 5:
            ent.expected.frobenius = true;
            ent.expected.functional = dual(6, {4});
            ent.expected.isomorphic_to = "G(3,1)";
            ent.expected.nil_derived_dim = 1;
            ent.expected.nil_class = 2;
            break;
        case 6:
            ent.expected.frobenius = true;
            ent.expected.functional = dual(6, {4});
            ent.expected.label = "D0(3)";
            ent.expected.nonderogatory_rep = principal_nilpotent(3);
            ent.expected.isomorphic_to = "D0(3)";
            ent.expected.nil_derived_dim = 2;
            ent.expected.nil_class = 3;
            break;
    }
    return ent;
}

CatalogEntry build_Y(const std::map<std::string, long>& params) {
    reject_unknown(params, {"i", "eps", "corrected"}, "Y");
    const long i = get_long(params, "i");
    if (i < 1 || i > 17) throw MathError("catalog: family 'Y' requires 1 <= i <= 17");
    const long eps = get_long_or(params, "eps", 1);
    if (i == 6 && eps != 1 && eps != -1)
        throw MathError("catalog: family 'Y' item 6 requires eps = 1 or -1");
    if (i != 6 && params.count("eps"))
        throw MathError("catalog: parameter 'eps' only applies to Y item 6");
    const long corrected = get_long_or(params, "corrected", 1);
    if (i != 8 && params.count("corrected"))
        throw MathError("catalog: parameter 'corrected' only applies to Y item 8");

    const MatQ d3 = E(4, 1, 1) + E(4, 2, 2) + E(4, 3, 3) - E(4, 4, 4) * Rational(3);
    const MatQ d2 = E(4, 1, 1) + E(4, 2, 2) - E(4, 3, 3) - E(4, 4, 4);
    std::vector<MatQ> triple;
    std::ostringstream name;
    name << "Y(" << i;
    switch (i) {
        case 1: triple = {E(4, 1, 3), E(4, 1, 4), E(4, 2, 3), E(4, 2, 4)}; break;
        case 2: triple = {E(4, 1, 2), E(4, 1, 3), E(4, 1, 4)}; break;
        case 3: triple = {E(4, 1, 4), E(4, 2, 4), E(4, 3, 4)}; break;
        case 4: triple = {E(4, 1, 3) + E(4, 3, 4), E(4, 1, 4), E(4, 2, 4)}; break;
        case 5: triple = {E(4, 1, 2) + E(4, 2, 4), E(4, 1, 3), E(4, 1, 4)}; break;
        case 6:
            triple = {E(4, 1, 2) + E(4, 2, 4), E(4, 1, 3) + E(4, 3, 4) * Rational(eps),
                      E(4, 1, 4)};
            name << ",eps=" << eps;
            break;
        case 7:
            triple = {E(4, 1, 2) + E(4, 2, 3) + E(4, 3, 4), E(4, 1, 3) + E(4, 2, 4),
                      E(4, 1, 4)};
            break;
        case 8:
            if (corrected != 0) {
                triple = {E(4, 1, 2) - E(4, 2, 1) + E(4, 3, 4) - E(4, 4, 3),
                          E(4, 1, 3) + E(4, 2, 4), E(4, 1, 4) - E(4, 2, 3)};
            } else {
                triple = {E(4, 1, 2) - E(4, 2, 1) + E(4, 2, 4) - E(4, 4, 3),
                          E(4, 1, 3) + E(4, 2, 4), E(4, 1, 4)};
                name << ",uncorrected";
            }
            break;
        case 9: triple = {d3, E(4, 1, 2), E(4, 1, 3)}; break;
        case 10: triple = {d3, E(4, 1, 3), E(4, 2, 3)}; break;
        case 11: triple = {d3, E(4, 1, 2) + E(4, 2, 3), E(4, 1, 3)}; break;
        case 12: triple = {d2, E(4, 1, 2) - E(4, 2, 1), E(4, 3, 4) - E(4, 4, 3)}; break;
        case 13: triple = {d2, E(4, 1, 2) - E(4, 2, 1), E(4, 3, 4)}; break;
        case 14: triple = {d2, E(4, 1, 2) - E(4, 2, 1), E(4, 3, 3) - E(4, 4, 4)}; break;
        case 15: triple = {d2, E(4, 1, 2), E(4, 3, 3) - E(4, 4, 4)}; break;
        case 16:
            triple = {d3, E(4, 1, 1) + E(4, 2, 2) - E(4, 3, 3) * Rational(2),
                      E(4, 1, 1) - E(4, 2, 2)};
            break;
        case 17: triple = {d2, E(4, 1, 2), E(4, 3, 4)}; break;
    }
    name << ")";

    std::vector<MatQ> gens = {MatQ::identity(4)};
    for (const auto& g : triple) gens.push_back(g);

    std::vector<BracketEntry> stated;
    const std::vector<BracketEntry>* stated_ptr = nullptr;
    if (i == 4) {
        stated = {row(1, 5, {{5, 1}}), row(1, 6, {{6, 1}}), row(1, 7, {{7, 1}}),
                  row(1, 8, {{8, 1}}), row(2, 7, {{5, 1}}), row(2, 8, {{7, 1}}),
                  row(3, 8, {{5, 1}}), row(4, 8, {{6, 1}})};
        stated_ptr = &stated;
    } else if (i == 6) {
        stated = {row(1, 5, {{5, 1}}), row(1, 6, {{6, 1}}), row(1, 7, {{7, 1}}),
                  row(1, 8, {{8, 1}}), row(2, 6, {{5, 1}}), row(2, 8, {{6, 1}}),
                  row(3, 7, {{5, 1}}), row(3, 8, {{7, eps}}), row(4, 8, {{5, 1}})};
        stated_ptr = &stated;
    }

    CatalogEntry ent = matrix_entry(name.str(), "Y", params, std::move(gens), stated_ptr);
    if (!*ent.expected.commutative) return ent;  // uncorrected item 8: recorded failure
    ent.expected.masa_gl = true;
    switch (i) {
        case 1:
            ent.expected.frobenius = false;  // 9-dimensional algebra, odd
            ent.expected.nil_derived_dim = 2;
            ent.expected.nil_class = 2;
            break;
        case 2:
            ent.expected.frobenius = true;
            ent.expected.functional = dual(8, {5});
            ent.expected.isomorphic_to = "G(4,1)";
            ent.expected.nil_derived_dim = 1;
            ent.expected.nil_class = 2;
            break;
        case 3:
            ent.expected.frobenius = false;
            ent.expected.isomorphic_to = "B(4)";
            ent.expected.nil_derived_dim = 3;
            ent.expected.nil_class = 2;
            break;
        case 4:
            ent.expected.frobenius = false;
            ent.expected.nil_derived_dim = 3;
            ent.expected.nil_class = 3;
            break;
        case 5:
            ent.expected.frobenius = true;
            ent.expected.functional = dual(8, {5});
            ent.expected.isomorphic_to = "h(4,2)";
            ent.expected.nil_derived_dim = 2;
            ent.expected.nil_class = 3;
            break;
        case 6:
            ent.expected.frobenius = true;
            ent.expected.functional = dual(8, {5});
            ent.expected.isomorphic_to = (eps == 1) ? "h(4,3)" : "Gprime(4)";
            ent.expected.nil_derived_dim = 3;
            ent.expected.nil_class = 3;
            break;
        case 7:
            ent.expected.frobenius = true;
            ent.expected.functional = dual(8, {5});
            ent.expected.label = "D0(4)";
            ent.expected.nonderogatory_rep = principal_nilpotent(4);
            ent.expected.isomorphic_to = "D0(4)";
            ent.expected.nil_derived_dim = 3;
            ent.expected.nil_class = 4;
            break;
        case 8:
            ent.expected.frobenius = true;
            ent.expected.functional = dual(8, {5});
            ent.expected.label = "D01(4)";
            ent.expected.nonderogatory_rep = triple[0] + triple[1];
            ent.expected.isomorphic_to = "D01(4)";
            ent.expected.nil_derived_dim = 2;
            ent.expected.nil_class = 2;
            break;
        case 9:
            ent.expected.frobenius = true;
            ent.expected.isomorphic_to = "G(3,1)+aff(R)";
            ent.expected.nil_derived_dim = 1;
            ent.expected.nil_class = 2;
            break;
        case 10:
            ent.expected.frobenius = false;
            ent.expected.nil_derived_dim = 2;
            ent.expected.nil_class = 2;
            break;
        case 11:
            ent.expected.frobenius = true;
            ent.expected.label = "D0(3)+aff(R)";
            ent.expected.nonderogatory_rep = d3 + triple[1];
            ent.expected.isomorphic_to = "D0(3)+aff(R)";
            ent.expected.nil_derived_dim = 2;
            ent.expected.nil_class = 3;
            break;
        case 12:
            ent.expected.frobenius = true;
            ent.expected.label = "aff(C)+aff(C)";
            ent.expected.nonderogatory_rep = d2 + triple[1] + triple[2] * Rational(2);
            ent.expected.isomorphic_to = "aff(C)+aff(C)";
            ent.expected.nil_derived_dim = 0;
            ent.expected.nil_class = 1;
            break;
        case 13:
            ent.expected.frobenius = true;
            ent.expected.label = "D0(2)+aff(C)";
            ent.expected.nonderogatory_rep = d2 + triple[1] + triple[2];
            ent.expected.isomorphic_to = "D0(2)+aff(C)";
            ent.expected.nil_derived_dim = 1;
            ent.expected.nil_class = 2;
            break;
        case 14:
            ent.expected.frobenius = true;
            ent.expected.label = "aff(R)+aff(R)+aff(C)";
            ent.expected.nonderogatory_rep = d2 + triple[1] + triple[2];
            ent.expected.isomorphic_to = "aff(R)+aff(R)+aff(C)";
            ent.expected.nil_derived_dim = 0;
            ent.expected.nil_class = 1;
            break;
        case 15:
            ent.expected.frobenius = true;
            ent.expected.label = "D0(2)+aff(R)+aff(R)";
            ent.expected.nonderogatory_rep = d2 + triple[1] + triple[2];
            ent.expected.isomorphic_to = "D0(2)+aff(R)+aff(R)";
            ent.expected.nil_derived_dim = 1;
            ent.expected.nil_class = 2;
            break;
        case 16:
            ent.expected.frobenius = true;
            ent.expected.label = "aff(R)+aff(R)+aff(R)+aff(R)";
            ent.expected.nonderogatory_rep = d3 + triple[1] + triple[2];
            ent.expected.isomorphic_to = "aff(R)+aff(R)+aff(R)+aff(R)";
            ent.expected.nil_derived_dim = 0;
            ent.expected.nil_class = 1;
            break;
        case 17:
            ent.expected.frobenius = true;
            ent.expected.label = "D0(2)+D0(2)";
            ent.expected.nonderogatory_rep = d2 + triple[1] + triple[2];
            ent.expected.isomorphic_to = "D0(2)+D0(2)";
            ent.expected.nil_derived_dim = 2;
            ent.expected.nil_class = 2;
            break;
    }
    return ent;
}

CatalogEntry build_A3(const std::map<std::string, long>& params) {
    reject_unknown(params, {"j", "s"}, "A3");
    const long j = get_long(params, "j");
    if (j < 1 || j > 6) throw MathError("catalog: family 'A3' requires 1 <= j <= 6");
    const long s = get_long_or(params, "s", 1);
    if ((j == 3 || j == 4) && s != 1 && s != -1)
        throw MathError("catalog: family 'A3' items 3 and 4 require s = 1 or -1");
    if (j != 3 && j != 4 && params.count("s"))
        throw MathError("catalog: parameter 's' only applies to A3 items 3 and 4");

    // products[i][k] = coefficients of x_{i+1} * x_{k+1} in the basis (a, b, c).
    auto zero3 = [] { return VecQ(3); };
    std::vector<std::vector<VecQ>> prod(3, std::vector<VecQ>(3, zero3()));
    auto set = [&](int a, int b, int k, long c) {
        prod[static_cast<size_t>(a - 1)][static_cast<size_t>(b - 1)]
            [static_cast<size_t>(k - 1)] = Rational(c);
    };
    switch (j) {
        case 1: break;                                       // all products zero
        case 2: set(1, 1, 3, 1); break;                      // a a = c
        case 3:                                              // a a = s c, b b = c
            set(1, 1, 3, s);
            set(2, 2, 3, 1);
            break;
        case 4:                                              // + a b = c, b a = 0
            set(1, 1, 3, s);
            set(2, 2, 3, 1);
            set(1, 2, 3, 1);
            break;
        case 5:                                              // a b = c, b a = -c
            set(1, 2, 3, 1);
            set(2, 1, 3, -1);
            break;
        case 6:                                              // a a = b, a b = b a = c
            set(1, 1, 2, 1);
            set(1, 2, 3, 1);
            set(2, 1, 3, 1);
            break;
    }
    bool commutative = true;
    for (int a = 0; a < 3 && commutative; ++a)
        for (int b = a + 1; b < 3; ++b)
            if (prod[static_cast<size_t>(a)][static_cast<size_t>(b)] !=
                prod[static_cast<size_t>(b)][static_cast<size_t>(a)]) {
                commutative = false;
                break;
            }

    std::ostringstream name;
    name << "A3(" << j;
    if (j == 3 || j == 4) name << ",s=" << s;
    name << ")";

    CatalogEntry ent;
    ent.name = name.str();
    ent.family = "A3";
    ent.params = params;
    ent.nil_products = prod;
    ent.expected.commutative = commutative;
    if (!commutative) return ent;

    std::vector<MatQ> rep;
    switch (j) {
        case 1: rep = {E(4, 1, 2), E(4, 1, 3), E(4, 1, 4)}; break;
        case 2: rep = {E(4, 1, 2) + E(4, 2, 4), E(4, 1, 3), E(4, 1, 4)}; break;
        case 3:
            if (s == 1) {
                rep = {E(4, 1, 2) + E(4, 2, 4), E(4, 1, 3) + E(4, 3, 4), E(4, 1, 4)};
            } else {
                rep = {E(4, 1, 2) + E(4, 3, 4) - E(4, 1, 3) - E(4, 2, 4),
                       E(4, 1, 2) + E(4, 3, 4) + E(4, 1, 3) + E(4, 2, 4),
                       E(4, 1, 4) * Rational(2)};
            }
            break;
        case 6: {
            MatQ m0 = principal_nilpotent(4);
            rep = {m0, m0 * m0, m0 * m0 * m0};
            break;
        }
    }
    // The matrix representatives must realise exactly the stated products.
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            MatQ lhs = rep[static_cast<size_t>(a)] * rep[static_cast<size_t>(b)];
            MatQ rhs(4, 4);
            for (int k = 0; k < 3; ++k) {
                const Rational& c =
                    prod[static_cast<size_t>(a)][static_cast<size_t>(b)][static_cast<size_t>(k)];
                if (!c.is_zero()) rhs += rep[static_cast<size_t>(k)] * c;
            }
            if (lhs != rhs)
                throw CrossCheckError(ent.name +
                                      ": stated products disagree with the matrix "
                                      "representatives");
        }

    std::vector<MatQ> gens = {MatQ::identity(4), rep[0], rep[1], rep[2]};
    CatalogEntry built = matrix_entry(ent.name, "A3", params, std::move(gens));
    built.nil_products = prod;
    built.expected.masa_gl = true;
    built.expected.frobenius = true;
    built.expected.functional = dual(8, {5});
    switch (j) {
        case 1:
            built.expected.isomorphic_to = "G(4,1)";
            built.expected.nil_derived_dim = 1;
            built.expected.nil_class = 2;
            break;
        case 2:
            built.expected.isomorphic_to = "h(4,2)";
            built.expected.nil_derived_dim = 2;
            built.expected.nil_class = 3;
            break;
        case 3:
            built.expected.isomorphic_to = (s == 1) ? "h(4,3)" : "Gprime(4)";
            built.expected.nil_derived_dim = 3;
            built.expected.nil_class = 3;
            break;
        case 6:
            built.expected.isomorphic_to = "D0(4)";
            built.expected.label = "D0(4)";
            built.expected.nonderogatory_rep = principal_nilpotent(4);
            built.expected.nil_derived_dim = 3;
            built.expected.nil_class = 4;
            break;
    }
    return built;
}

// Direct sum of already-built entries; name is the '+'-join of the parts.
CatalogEntry sum_entry(const std::vector<CatalogEntry>& parts) {
    CatalogEntry ent;
    ent.family = "sum";
    std::vector<LieAlgebra> algs;
    int dim = 0;
    bool frob = true;
    bool have_functionals = true;
    int derived = 0, cls = 1;
    for (const auto& p : parts) {
        if (!p.algebra)
            throw MathError("catalog: direct sum requires parts with an algebra");
        ent.name += (ent.name.empty() ? "" : "+") + p.name;
        algs.push_back(*p.algebra);
        dim += p.algebra->dim();
        frob = frob && p.expected.frobenius.value_or(false);
        have_functionals = have_functionals && p.expected.functional.has_value();
        derived += p.expected.nil_derived_dim.value_or(0);
        cls = std::max(cls, p.expected.nil_class.value_or(1));
    }
    ent.algebra = direct_sum(algs);
    ent.expected.commutative = true;
    ent.expected.frobenius = frob;
    if (frob && have_functionals) {
        VecQ alpha(static_cast<size_t>(dim));
        int off = 0;
        for (const auto& p : parts) {
            const VecQ& f = *p.expected.functional;
            for (size_t k = 0; k < f.size(); ++k)
                alpha[static_cast<size_t>(off) + k] = f[k];
            off += p.algebra->dim();
        }
        ent.expected.functional = std::move(alpha);
    }
    ent.expected.nil_derived_dim = derived;
    ent.expected.nil_class = cls;
    return ent;
}

}  // namespace

std::vector<std::string> Catalog::family_names() {
    return {"aff(R)", "aff(C)", "G", "h", "Gprime", "B", "D0", "D01", "L2", "Y", "A3"};
}

CatalogEntry Catalog::build(const std::string& family,
                            const std::map<std::string, long>& params) {
    if (family == "aff(R)") {
        reject_unknown(params, {}, family);
        return build_affR();
    }
    if (family == "aff(C)") {
        reject_unknown(params, {}, family);
        return build_affC();
    }
    if (family == "G") return build_G(params);
    if (family == "h") return build_h(params);
    if (family == "Gprime") return build_Gprime(params);
    if (family == "B") return build_B(params);
    if (family == "D0") return build_D0(params);
    if (family == "D01") return build_D01(params);
    if (family == "L2") return build_L2(params);
    if (family == "Y") return build_Y(params);
    if (family == "A3") return build_A3(params);
    throw MathError("catalog: unknown family '" + family + "'");
}

std::vector<CatalogEntry> Catalog::dim8_table() {
    const CatalogEntry affR = build("aff(R)");
    const CatalogEntry affC = build("aff(C)");
    const CatalogEntry d02 = build("D0", {{"n", 2}});
    const CatalogEntry d03 = build("D0", {{"n", 3}});

    auto with_rep = [](CatalogEntry ent, MatQ rep) {
        ent.expected.label = ent.name;
        ent.expected.nonderogatory_rep = std::move(rep);
        return ent;
    };
    const MatQ shift2 = principal_nilpotent(2).transpose();
    const MatQ shift3 = principal_nilpotent(3).transpose();
    const MatQ rot = ms_matrix(2);
    auto diag1 = [](long v) {
        MatQ m(1, 1);
        m(0, 0) = Rational(v);
        return m;
    };

    std::vector<CatalogEntry> table;
    table.push_back(build("D01", {{"n", 4}}));
    table.push_back(build("D0", {{"n", 4}}));
    table.push_back(with_rep(sum_entry({d03, affR}), block_diag<Rational>({shift3, diag1(1)})));
    table.push_back(with_rep(sum_entry({d02, d02}),
                             block_diag<Rational>({shift2, MatQ::identity(2) + shift2})));
    table.push_back(with_rep(sum_entry({d02, affC}), block_diag<Rational>({shift2, rot})));
    table.push_back(with_rep(sum_entry({d02, affR, affR}),
                             block_diag<Rational>({shift2, diag1(1), diag1(2)})));
    table.push_back(with_rep(sum_entry({affC, affC}),
                             block_diag<Rational>({rot, MatQ::identity(2) + rot})));
    table.push_back(with_rep(sum_entry({affR, affR, affC}),
                             block_diag<Rational>({diag1(1), diag1(2), rot})));
    table.push_back(with_rep(sum_entry({affR, affR, affR, affR}),
                             block_diag<Rational>({diag1(0), diag1(1), diag1(2), diag1(3)})));
    table.push_back(build("G", {{"n", 4}, {"p", 1}}));
    table.push_back(build("h", {{"n", 4}, {"p", 2}}));
    table.push_back(build("h", {{"n", 4}, {"p", 3}}));
    table.push_back(build("Gprime", {{"n", 4}}));
    table.push_back(sum_entry({build("G", {{"n", 3}, {"p", 1}}), affR}));
    return table;
}

std::vector<IsomorphismWitness> Catalog::witnesses() {
    std::vector<IsomorphismWitness> out;

    // G(n,2) ~ h(n,2): swap the generators e_3 <-> e_n (the square of the
    // shift against the last corner generator) and the matching translations.
    for (long n = 3; n <= 6; ++n) {
        const int N = static_cast<int>(n);
        IsomorphismWitness w;
        w.source = build("G", {{"n", n}, {"p", 2}});
        w.target = build("h", {{"n", n}, {"p", 2}});
        w.name = w.source.name + " ~ " + w.target.name;
        MatQ psi(2 * N, 2 * N);
        auto swapped = [N](int m) {
            if (m == 3) return N;
            if (m == N) return 3;
            if (m == N + 3) return 2 * N;
            if (m == 2 * N) return N + 3;
            return m;
        };
        for (int m = 1; m <= 2 * N; ++m) psi(swapped(m) - 1, m - 1) = Rational(1);
        w.psi = std::move(psi);
        out.push_back(std::move(w));
    }

    {
        IsomorphismWitness w;
        w.source = build("Y", {{"i", 6}, {"eps", -1}});
        w.target = build("Gprime", {{"n", 4}});
        w.name = w.source.name + " ~ " + w.target.name;
        w.psi = psi_from(8, {{{1, 1}},
                             {{2, 1}, {3, -1}},
                             {{2, -1}, {3, -1}},
                             {{4, -1}},
                             {{5, -2}},
                             {{6, -1}, {7, 1}},
                             {{6, 1}, {7, 1}},
                             {{8, 1}}});
        out.push_back(std::move(w));
    }

    {
        IsomorphismWitness w;
        w.source = build("Y", {{"i", 7}});
        w.target = build("D0", {{"n", 4}});
        w.name = w.source.name + " ~ " + w.target.name;
        // Same power algebra; the translation basis reverses.
        w.psi = psi_from(8, {{{1, 1}},
                             {{2, 1}},
                             {{3, 1}},
                             {{4, 1}},
                             {{8, 1}},
                             {{7, 1}},
                             {{6, 1}},
                             {{5, 1}}});
        out.push_back(std::move(w));
    }

    const CatalogEntry affR = build("aff(R)");
    const CatalogEntry affC = build("aff(C)");
    const CatalogEntry d02 = build("D0", {{"n", 2}});
    const CatalogEntry d03 = build("D0", {{"n", 3}});

    {
        IsomorphismWitness w;
        w.source = build("Y", {{"i", 9}});
        w.target = sum_entry({build("G", {{"n", 3}, {"p", 1}}), affR});
        w.name = w.source.name + " ~ " + w.target.name;
        w.psi = psi_from(8, {{{1, 1}, {7, 1}},
                             {{1, 1}, {7, -3}},
                             {{2, 1}},
                             {{3, 1}},
                             {{4, 1}},
                             {{5, 1}},
                             {{6, 1}},
                             {{8, 1}}});
        out.push_back(std::move(w));
    }
    {
        IsomorphismWitness w;
        w.source = build("Y", {{"i", 11}});
        w.target = sum_entry({d03, affR});
        w.name = w.source.name + " ~ " + w.target.name;
        w.psi = psi_from(8, {{{1, 1}, {7, 1}},
                             {{1, 1}, {7, -3}},
                             {{2, 1}},
                             {{3, 1}},
                             {{6, 1}},
                             {{5, 1}},
                             {{4, 1}},
                             {{8, 1}}});
        out.push_back(std::move(w));
    }
    {
        IsomorphismWitness w;
        w.source = build("Y", {{"i", 12}});
        w.target = sum_entry({affC, affC});
        w.name = w.source.name + " ~ " + w.target.name;
        w.psi = psi_from(8, {{{1, 1}, {5, 1}},
                             {{1, 1}, {5, -1}},
                             {{2, -1}},
                             {{6, -1}},
                             {{3, 1}},
                             {{4, 1}},
                             {{7, 1}},
                             {{8, 1}}});
        out.push_back(std::move(w));
    }
    {
        IsomorphismWitness w;
        w.source = build("Y", {{"i", 13}});
        w.target = sum_entry({affC, d02});
        w.name = w.source.name + " ~ " + w.target.name;
        w.psi = psi_from(8, {{{1, 1}, {5, 1}},
                             {{1, 1}, {5, -1}},
                             {{2, -1}},
                             {{6, 1}},
                             {{3, 1}},
                             {{4, 1}},
                             {{8, 1}},
                             {{7, 1}}});
        out.push_back(std::move(w));
    }
    {
        IsomorphismWitness w;
        w.source = build("Y", {{"i", 14}});
        w.target = sum_entry({affC, affR, affR});
        w.name = w.source.name + " ~ " + w.target.name;
        w.psi = psi_from(8, {{{1, 1}, {5, 1}, {7, 1}},
                             {{1, 1}, {5, -1}, {7, -1}},
                             {{2, -1}},
                             {{5, 1}, {7, -1}},
                             {{3, 1}},
                             {{4, 1}},
                             {{6, 1}},
                             {{8, 1}}});
        out.push_back(std::move(w));
    }
    {
        IsomorphismWitness w;
        w.source = build("Y", {{"i", 15}});
        w.target = sum_entry({d02, affR, affR});
        w.name = w.source.name + " ~ " + w.target.name;
        w.psi = psi_from(8, {{{1, 1}, {5, 1}, {7, 1}},
                             {{1, 1}, {5, -1}, {7, -1}},
                             {{2, 1}},
                             {{5, 1}, {7, -1}},
                             {{4, 1}},
                             {{3, 1}},
                             {{6, 1}},
                             {{8, 1}}});
        out.push_back(std::move(w));
    }
    {
        IsomorphismWitness w;
        w.source = build("Y", {{"i", 16}});
        w.target = sum_entry({affR, affR, affR, affR});
        w.name = w.source.name + " ~ " + w.target.name;
        w.psi = psi_from(8, {{{1, 1}, {3, 1}, {5, 1}, {7, 1}},
                             {{1, 1}, {3, 1}, {5, 1}, {7, -3}},
                             {{1, 1}, {3, 1}, {5, -2}},
                             {{1, 1}, {3, -1}},
                             {{2, 1}},
                             {{4, 1}},
                             {{6, 1}},
                             {{8, 1}}});
        out.push_back(std::move(w));
    }
    {
        IsomorphismWitness w;
        w.source = build("Y", {{"i", 17}});
        w.target = sum_entry({d02, d02});
        w.name = w.source.name + " ~ " + w.target.name;
        w.psi = psi_from(8, {{{1, 1}, {5, 1}},
                             {{1, 1}, {5, -1}},
                             {{2, 1}},
                             {{6, 1}},
                             {{4, 1}},
                             {{3, 1}},
                             {{8, 1}},
                             {{7, 1}}});
        out.push_back(std::move(w));
    }
    return out;
}

}  // namespace frob
