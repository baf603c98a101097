#include "frob/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>
#include <type_traits>
#include <utility>
#include <vector>

#include "json.hpp"

#include "frob/catalog.hpp"
#include "frob/classify.hpp"
#include "frob/errors.hpp"
#include "frob/lie.hpp"
#include "frob/linalg.hpp"
#include "frob/masa.hpp"
#include "frob/matrix.hpp"
#include "frob/multipoly.hpp"
#include "frob/polynomial.hpp"

namespace frob {

int VerifyReport::failures() const {
    int n = 0;
    for (const auto& c : checks)
        if (c.status == CheckStatus::fail) ++n;
    return n;
}

namespace {

// Runs one check body; exceptions (including CrossCheckError from the
// dual-route guards inside the library) turn into failures with the message
// as detail.
void run_check(VerifyReport& rep, const std::string& id, const std::string& desc,
               const std::function<bool(std::string&)>& body) {
    Check c{id, desc, CheckStatus::pass, ""};
    try {
        std::string detail;
        if (!body(detail)) c.status = CheckStatus::fail;
        c.detail = detail;
    } catch (const std::exception& e) {
        c.status = CheckStatus::fail;
        c.detail = e.what();
    }
    rep.checks.push_back(std::move(c));
}

template <class T>
bool expect_eq(const T& got, const T& want, const std::string& what, std::string& detail) {
    if (got == want) return true;
    std::ostringstream os;
    os << what << ": expected ";
    if constexpr (std::is_same_v<T, std::string>)
        os << "\"" << want << "\", got \"" << got << "\"";
    else
        os << want << ", got " << got;
    detail = os.str();
    return false;
}

// c * r^er * s^es as an element of Q[r, s] (variables 0 = r, 1 = s).
MultiPoly rs_monomial(long c, int er, int es) {
    MultiPoly p(2, Rational(c));
    const MultiPoly r = MultiPoly::variable(0, 2);
    const MultiPoly s = MultiPoly::variable(1, 2);
    for (int k = 0; k < er; ++k) p = p * r;
    for (int k = 0; k < es; ++k) p = p * s;
    return p;
}

// ---------------------------------------------------------------- jordan ---

void suite_jordan(VerifyReport& rep) {
    for (int n = 2; n <= 8; ++n) {
        run_check(rep, "jordan.caseA.n" + std::to_string(n),
                  "single-eigenvalue transition matrix: exact similarity and det P = 1 "
                  "(lambda in {0, 1, -3/2})",
                  [n](std::string& detail) {
                      for (const Rational& lambda :
                           {Rational(0), Rational(1), Rational(-3, 2)}) {
                          MatQ p = casea_p(n, lambda);
                          if (det<Rational>(p) != Rational(1)) {
                              detail = "det P != 1 at lambda = " + lambda.to_string();
                              return false;
                          }
                          PolyQ chi = PolyQ::linear(lambda).pow(n);
                          MatQ lhs = krylov_companion(chi) * p;
                          MatQ rhs = p * (MatQ::identity(n) * lambda + principal_nilpotent(n));
                          if (lhs != rhs) {
                              detail = "similarity fails at lambda = " + lambda.to_string();
                              return false;
                          }
                      }
                      return true;
                  });
    }

    const std::map<int, std::pair<long, int>> expected_detp = {
        {4, {4, 4}}, {6, {-64, 9}}, {10, {-1048576, 25}}};
    for (const auto& [n, cs] : expected_detp) {
        std::ostringstream desc;
        desc << "two-variable transition matrix determinant: det(P) = "
             << (cs.first == 4 ? "4s^4" : cs.first == -64 ? "-64s^9" : "-1048576s^25")
             << " for n = " << n << " with first row (1, 0, ..., 0)";
        run_check(rep, "jordan.caseC.detP.n" + std::to_string(n), desc.str(),
                  [n = n, cs = cs](std::string& detail) {
                      MultiPoly got = casec_detp_symbolic(n, Rational(1), Rational(0));
                      MultiPoly want = rs_monomial(cs.first, 0, cs.second);
                      if (got != want)
                          return expect_eq(got.to_string({"r", "s"}), want.to_string({"r", "s"}),
                                           "det P", detail);
                      MultiPoly formula = casec_detp_formula(n, Rational(1), Rational(0));
                      return expect_eq(formula.to_string({"r", "s"}),
                                       want.to_string({"r", "s"}), "closed formula", detail);
                  });
    }

    run_check(rep, "jordan.caseC.formula",
              "closed determinant formula s^(n^2/4)(p11^2+p12^2)^(n/2) q_n matches the "
              "expanded determinant for n in {4,6,8,10} and two first rows",
              [](std::string& detail) {
                  for (int n : {4, 6, 8, 10})
                      for (const auto& [p11, p12] :
                           std::vector<std::pair<Rational, Rational>>{
                               {Rational(1), Rational(0)}, {Rational(1), Rational(2)}}) {
                          if (casec_detp_symbolic(n, p11, p12) !=
                              casec_detp_formula(n, p11, p12)) {
                              detail = "mismatch at n = " + std::to_string(n) + ", first row (" +
                                       p11.to_string() + ", " + p12.to_string() + ")";
                              return false;
                          }
                      }
                  return true;
              });

    run_check(rep, "jordan.caseC.detP-numeric",
              "numeric determinant cross-check at r = 1/2, s = sqrt(3) for n in {4,6,8,10}",
              [](std::string& detail) {
                  (void)detail;
                  for (int n : {4, 6, 8, 10}) {
                      detP_formula_check(n, Rational(1, 2), QuadExt::sqrt_of(Rational(3)));
                      detP_formula_check(n, Rational(1, 2), QuadExt::sqrt_of(Rational(3)),
                                         Rational(2), Rational(-1));
                  }
                  return true;  // the call itself raises CrossCheckError on mismatch
              });

    run_check(rep, "jordan.caseC.n10.entries",
              "10x10 transition matrix reproduces the listed entries p21 = -9r, "
              "p31 = 4(9r^2+s^2), p10,10 = -s(5r^4-10r^2 s^2+s^4)",
              [](std::string& detail) {
                  auto p = casec_p_symbolic(10, Rational(1), Rational(0));
                  MultiPoly p21 = rs_monomial(-9, 1, 0);
                  MultiPoly p31 = rs_monomial(36, 2, 0) + rs_monomial(4, 0, 2);
                  MultiPoly p1010 = rs_monomial(-5, 4, 1) + rs_monomial(10, 2, 3) +
                                    rs_monomial(-1, 0, 5);
                  if (p[1][0] != p21)
                      return expect_eq(p[1][0].to_string({"r", "s"}),
                                       p21.to_string({"r", "s"}), "p21", detail);
                  if (p[2][0] != p31)
                      return expect_eq(p[2][0].to_string({"r", "s"}),
                                       p31.to_string({"r", "s"}), "p31", detail);
                  if (p[9][9] != p1010)
                      return expect_eq(p[9][9].to_string({"r", "s"}),
                                       p1010.to_string({"r", "s"}), "p10,10", detail);
                  return true;
              });

    run_check(rep, "jordan.jordanize.samples",
              "full Jordanization self-verifies P^-1 M P = J on mixed-spectrum samples "
              "(cyclic permutation, block normal form, rational companion, sqrt(2) spectrum)",
              [](std::string& detail) {
                  JordanResult a = jordanize(circular_permutation(4));
                  if (a.det_p.is_zero()) { detail = "singular P for the 4-cycle"; return false; }
                  JordanResult b = jordanize(m01_matrix(4));
                  if (b.det_p.is_zero()) { detail = "singular P for the n=4 normal form"; return false; }
                  PolyQ chi = PolyQ::linear(Rational(1)).pow(3) * PolyQ::linear(Rational(-2));
                  JordanResult c = jordanize(krylov_companion(chi));
                  if (c.ext_d.has_value()) { detail = "unexpected extension for rational spectrum"; return false; }
                  JordanResult d = jordanize(krylov_companion(PolyQ({Rational(-2), Rational(0), Rational(1)})));
                  if (!d.ext_d.has_value() || *d.ext_d != Rational(2)) {
                      detail = "X^2 - 2 should Jordanize over the sqrt(2) extension";
                      return false;
                  }
                  return true;
              });
}

// -------------------------------------------------------------- classify ---

MatQ cartan_sample(int n, int pairs) {
    std::vector<MatQ> blocks;
    for (int k = 0; k < pairs; ++k) {
        MatQ rot(2, 2);
        rot(0, 0) = Rational(k + 1);
        rot(1, 1) = Rational(k + 1);
        rot(0, 1) = Rational(1);
        rot(1, 0) = Rational(-1);
        blocks.push_back(rot);
    }
    for (int j = 0; j < n - 2 * pairs; ++j) {
        MatQ d(1, 1);
        d(0, 0) = Rational(100 + j);
        blocks.push_back(d);
    }
    return block_diag<Rational>(blocks);
}

void suite_classify(VerifyReport& rep) {
    const std::map<int, std::string> circ = {{2, "aff(R)+aff(R)"},
                                             {3, "aff(R)+aff(C)"},
                                             {4, "aff(R)+aff(R)+aff(C)"},
                                             {5, "aff(R)+aff(C)+aff(C)"},
                                             {7, "aff(R)+aff(C)+aff(C)+aff(C)"}};
    for (const auto& [n, want] : circ) {
        run_check(rep, "classify.circular.n" + std::to_string(n),
                  "decomposition label of the cyclic permutation matrix of size " +
                      std::to_string(n),
                  [n = n, want = want](std::string& detail) {
                      return expect_eq(classify_G_phi(circular_permutation(n)).to_string(),
                                       want, "label", detail);
                  });
    }

    run_check(rep, "classify.blocks.indecomposable",
              "nilpotent and mixed normal forms classify as single indecomposable blocks",
              [](std::string& detail) {
                  for (int n = 2; n <= 6; ++n) {
                      ClassificationLabel l =
                          classify_G_phi(principal_nilpotent(n).transpose());
                      if (!l.indecomposable ||
                          l.to_string() != "D0(" + std::to_string(n) + ")") {
                          detail = "shift transpose n = " + std::to_string(n) + " gave " +
                                   l.to_string();
                          return false;
                      }
                  }
                  ClassificationLabel d01 = classify_G_phi(m01_matrix(4));
                  if (!d01.indecomposable || d01.to_string() != "D01(4)") {
                      detail = "n=4 mixed normal form gave " + d01.to_string();
                      return false;
                  }
                  return expect_eq(classify_G_phi(ms_matrix(2)).to_string(),
                                   std::string("aff(C)"), "rotation label", detail);
              });

    run_check(rep, "classify.nonderogatory.dual-route",
              "minimal-polynomial and centralizer criteria agree on cyclic and "
              "non-cyclic samples",
              [](std::string& detail) {
                  if (!is_nonderogatory(principal_nilpotent(4))) {
                      detail = "principal nilpotent flagged derogatory";
                      return false;
                  }
                  if (is_nonderogatory(MatQ::unit(4, 4, 0, 2))) {
                      detail = "rank-one nilpotent flagged cyclic";
                      return false;
                  }
                  if (is_nonderogatory(MatQ::identity(2))) {
                      detail = "identity flagged cyclic";
                      return false;
                  }
                  return true;
              });

    run_check(rep, "classify.cartan.count",
              "abelian self-normalizing span labels: exactly floor(n/2)+1 per size, n <= 8",
              [](std::string& detail) {
                  for (int n = 2; n <= 8; ++n) {
                      std::vector<std::string> labels;
                      for (int b = 0; 2 * b <= n; ++b) {
                          MatQ m = cartan_sample(n, b);
                          CartanResult cr = cartan_test(m);
                          if (!cr.is_cartan) {
                              detail = "distinct-spectrum sample rejected at n = " +
                                       std::to_string(n) + ", pairs = " + std::to_string(b);
                              return false;
                          }
                          labels.push_back(classify_G_phi(m).to_string());
                      }
                      std::sort(labels.begin(), labels.end());
                      if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) {
                          detail = "duplicate label among pair counts at n = " +
                                   std::to_string(n);
                          return false;
                      }
                      if (static_cast<int>(labels.size()) != n / 2 + 1) {
                          detail = "label count mismatch at n = " + std::to_string(n);
                          return false;
                      }
                  }
                  CartanResult bad = cartan_test(principal_nilpotent(2));
                  if (bad.is_cartan) {
                      detail = "repeated-eigenvalue span accepted as self-normalizing";
                      return false;
                  }
                  return true;
              });

    run_check(rep, "classify.vandermonde.n3",
              "eigenvalue power matrix: determinant product formula and basis-change "
              "isomorphism from three aff(R) summands",
              [](std::string& detail) {
                  VandermondeResult v =
                      vandermonde_isomorphism({Rational(1), Rational(2), Rational(3)});
                  if (v.det_value != det<Rational>(v.n_matrix)) {
                      detail = "determinant disagrees with the direct expansion";
                      return false;
                  }
                  CatalogEntry affR = Catalog::build("aff(R)");
                  LieAlgebra src =
                      direct_sum({*affR.algebra, *affR.algebra, *affR.algebra});
                  MatQ d(3, 3);
                  for (int i = 0; i < 3; ++i) d(i, i) = Rational(i + 1);
                  LieAlgebra tgt = semidirect_sum({MatQ::identity(3), d, d * d}, 3);
                  if (!verify_isomorphism(v.psi, src, tgt)) {
                      detail = "basis change fails the bracket re-check";
                      return false;
                  }
                  return true;
              });

    run_check(rep, "classify.conjugation.invariance",
              "labels are unchanged under fixed invertible conjugations",
              [](std::string& detail) {
                  MatQ p1(4, 4);
                  for (int i = 0; i < 4; ++i)
                      for (int j = 0; j <= i; ++j) p1(i, j) = Rational(1);
                  MatQ p2 = MatQ::identity(4) + MatQ::unit(4, 4, 0, 3) * Rational(5);
                  for (const MatQ& m : {circular_permutation(4), m01_matrix(4),
                                        krylov_companion(PolyQ::linear(Rational(1)).pow(2) *
                                                         PolyQ({Rational(1), Rational(0),
                                                                Rational(1)}))}) {
                      std::string base = classify_G_phi(m).to_string();
                      for (const MatQ& p : {p1, p2}) {
                          std::string got = classify_G_phi(conjugate_by(m, p)).to_string();
                          if (got != base)
                              return expect_eq(got, base, "conjugated label", detail);
                      }
                  }
                  return true;
              });
}

// ------------------------------------------------------------------ masa ---

void suite_masa(VerifyReport& rep) {
    run_check(rep, "masa.dim8.generators",
              "every matrix-built entry of the dimension-8 table spans a maximal "
              "abelian subalgebra of gl(4)",
              [](std::string& detail) {
                  for (const CatalogEntry& e : Catalog::dim8_table()) {
                      if (!e.matrix_generators) continue;
                      if (!is_masa(*e.matrix_generators, Ambient::gl)) {
                          detail = e.name + " is not maximal abelian";
                          return false;
                      }
                  }
                  return true;
              });

    run_check(rep, "masa.dim8.power-spans",
              "for every nonderogatory representative phi in the dimension-8 table, "
              "R[phi] is a maximal abelian subalgebra",
              [](std::string& detail) {
                  for (const CatalogEntry& e : Catalog::dim8_table()) {
                      if (!e.expected.nonderogatory_rep) continue;
                      if (!is_masa(power_span_basis(*e.expected.nonderogatory_rep),
                                   Ambient::gl)) {
                          detail = e.name + ": polynomial span is not maximal abelian";
                          return false;
                      }
                  }
                  return true;
              });

    for (int n = 3; n <= 6; ++n) {
        run_check(rep, "masa.class2.n" + std::to_string(n),
                  "class-2 nilpotent family of corank 1: signature (n-1, 0, 1), class 2, "
                  "and recognition of two fixed conjugates",
                  [n](std::string& detail) {
                      std::vector<MatQ> canonical;
                      for (int j = 2; j <= n; ++j) canonical.push_back(MatQ::unit(n, n, 0, j - 1));
                      KravchukSignature sig = kravchuk_signature(canonical);
                      if (sig.nu != n - 1 || sig.m != 0 || sig.mu != 1) {
                          detail = "signature (" + std::to_string(sig.nu) + "," +
                                   std::to_string(sig.m) + "," + std::to_string(sig.mu) + ")";
                          return false;
                      }
                      if (nilpotency_class(canonical) != 2) {
                          detail = "nilpotency class != 2";
                          return false;
                      }
                      MatQ lower(n, n);
                      for (int i = 0; i < n; ++i)
                          for (int j = 0; j <= i; ++j) lower(i, j) = Rational(1);
                      MatQ mixed = MatQ::identity(n);
                      for (int i = 0; i + 1 < n; ++i) mixed(i, i + 1) = Rational(i + 2);
                      mixed(n - 1, 0) = Rational(3);
                      for (const MatQ& g : {lower, mixed}) {
                          std::vector<MatQ> conjugated;
                          for (const MatQ& s : canonical) conjugated.push_back(conjugate_by(s, g));
                          auto q = recognize_class2_mans(conjugated);
                          if (!q) {
                              detail = "recognition returned no conjugator";
                              return false;
                          }
                          std::vector<MatQ> back;
                          for (const MatQ& s : conjugated) back.push_back(conjugate_by(s, *q));
                          if (matrix_span(back) != matrix_span(canonical)) {
                              detail = "conjugator does not restore the canonical span";
                              return false;
                          }
                      }
                      return true;
                  });
    }

    run_check(rep, "masa.ambient.sl",
              "traceless diagonal span: maximal abelian inside sl(3) but not inside gl(3)",
              [](std::string& detail) {
                  std::vector<MatQ> s = {
                      MatQ::unit(3, 3, 0, 0) - MatQ::unit(3, 3, 1, 1),
                      MatQ::unit(3, 3, 1, 1) - MatQ::unit(3, 3, 2, 2)};
                  if (!is_masa(s, Ambient::sl)) {
                      detail = "rejected inside sl(3)";
                      return false;
                  }
                  if (is_masa(s, Ambient::gl)) {
                      detail = "accepted inside gl(3) despite missing the identity";
                      return false;
                  }
                  return true;
              });
}

// --------------------------------------------------------------- catalog ---

// Full recomputation of one entry's recorded facts.
bool recheck_entry(const CatalogEntry& ent, std::string& detail) {
    if (ent.expected.commutative && !*ent.expected.commutative) {
        if (ent.algebra) {
            detail = "algebra built despite non-commuting generators";
            return false;
        }
        return true;
    }
    if (!ent.algebra) {
        detail = "entry carries no algebra";
        return false;
    }
    const LieAlgebra& g = *ent.algebra;
    g.check_jacobi();
    if (ent.matrix_generators && ent.expected.masa_gl &&
        is_masa(*ent.matrix_generators, Ambient::gl) != *ent.expected.masa_gl) {
        detail = "maximal-abelian verdict mismatch";
        return false;
    }
    FrobeniusResult fr = frobenius_decide(g);
    if (ent.expected.frobenius && fr.frobenius != *ent.expected.frobenius) {
        detail = std::string("frobenius verdict: expected ") +
                 (*ent.expected.frobenius ? "true" : "false");
        return false;
    }
    if (ent.expected.functional) {
        if (fr.pfaffian.eval(*ent.expected.functional).is_zero()) {
            detail = "recorded functional is degenerate";
            return false;
        }
        if (g.split() &&
            static_cast<int>(g.split()->b.size()) == g.split()->v_dim) {
            const int n = g.split()->v_dim;
            LinearForm alpha_v;
            alpha_v.coeffs = VecQ(ent.expected.functional->begin() + n,
                                  ent.expected.functional->end());
            if (open_orbit_rank(g.split()->b, alpha_v) != n) {
                detail = "orbital map of the recorded functional is not of full rank";
                return false;
            }
        }
    }
    if (ent.expected.nil_derived_dim || ent.expected.nil_class) {
        Fingerprint f = fingerprint(g);
        if (!f.nil_available) {
            detail = "no nilradical provenance to recheck against";
            return false;
        }
        if (ent.expected.nil_derived_dim && f.nil_derived_dim != *ent.expected.nil_derived_dim)
            return expect_eq(f.nil_derived_dim, *ent.expected.nil_derived_dim,
                             "dim [N,N]", detail);
        if (ent.expected.nil_class && f.nil_class != *ent.expected.nil_class)
            return expect_eq(f.nil_class, *ent.expected.nil_class, "nilradical class",
                             detail);
    }
    if (ent.expected.nonderogatory_rep) {
        if (!is_nonderogatory(*ent.expected.nonderogatory_rep)) {
            detail = "recorded representative is derogatory";
            return false;
        }
        if (ent.expected.label &&
            classify_G_phi(*ent.expected.nonderogatory_rep).to_string() !=
                *ent.expected.label)
            return expect_eq(classify_G_phi(*ent.expected.nonderogatory_rep).to_string(),
                             *ent.expected.label, "label", detail);
    }
    return true;
}

std::vector<CatalogEntry> recheck_list(int max_n) {
    std::vector<CatalogEntry> out;
    auto add = [&](const std::string& family, std::map<std::string, long> params = {}) {
        auto it = params.find("n");
        if (it != params.end() && it->second > max_n) return;
        out.push_back(Catalog::build(family, params));
    };
    add("aff(R)");
    add("aff(C)");
    for (long n = 2; n <= 4; ++n)
        for (long p = 1; p <= n - 1; ++p) add("G", {{"n", n}, {"p", p}});
    for (long n = 3; n <= 4; ++n)
        for (long p = 2; p <= n - 1; ++p) add("h", {{"n", n}, {"p", p}});
    for (long n = 2; n <= 4; ++n) add("Gprime", {{"n", n}});
    for (long n = 2; n <= 4; ++n) add("B", {{"n", n}});
    for (long n = 1; n <= 4; ++n) add("D0", {{"n", n}});
    add("D01", {{"n", 2}});
    add("D01", {{"n", 4}});
    add("D01", {{"n", 6}});
    for (long i = 1; i <= 6; ++i) add("L2", {{"i", i}});
    for (long i = 1; i <= 17; ++i) {
        if (i == 6) {
            add("Y", {{"i", 6}, {"eps", 1}});
            add("Y", {{"i", 6}, {"eps", -1}});
        } else if (i == 8) {
            add("Y", {{"i", 8}});
            add("Y", {{"i", 8}, {"corrected", 0}});
        } else {
            add("Y", {{"i", i}});
        }
    }
    for (long j = 1; j <= 6; ++j) {
        if (j == 3 || j == 4) {
            add("A3", {{"j", j}, {"s", 1}});
            add("A3", {{"j", j}, {"s", -1}});
        } else {
            add("A3", {{"j", j}});
        }
    }
    return out;
}

void suite_catalog(VerifyReport& rep, int max_n) {
    run_check(rep, "dim8.count=14",
              "the dimension-8 table holds exactly fourteen pairwise distinct entries",
              [](std::string& detail) {
                  std::vector<CatalogEntry> t = Catalog::dim8_table();
                  if (t.size() != 14)
                      return expect_eq(static_cast<int>(t.size()), 14, "entry count",
                                       detail);
                  std::vector<std::string> names;
                  for (const auto& e : t) names.push_back(e.name);
                  std::sort(names.begin(), names.end());
                  if (std::adjacent_find(names.begin(), names.end()) != names.end()) {
                      detail = "duplicate entry name";
                      return false;
                  }
                  return true;
              });

    run_check(rep, "catalog.dim8.split",
              "nine entries carry a nonderogatory representative (listed first), five do "
              "not; every representative classifies back to the entry name",
              [](std::string& detail) {
                  std::vector<CatalogEntry> t = Catalog::dim8_table();
                  for (size_t k = 0; k < t.size(); ++k) {
                      const bool has = t[k].expected.nonderogatory_rep.has_value();
                      if (has != (k < 9)) {
                          detail = t[k].name + (has ? ": unexpected" : ": missing") +
                                   " representative";
                          return false;
                      }
                      if (!has) continue;
                      const MatQ& m = *t[k].expected.nonderogatory_rep;
                      if (!is_nonderogatory(m)) {
                          detail = t[k].name + ": representative is derogatory";
                          return false;
                      }
                      if (classify_G_phi(m).to_string() != t[k].name)
                          return expect_eq(classify_G_phi(m).to_string(), t[k].name,
                                           "label", detail);
                  }
                  return true;
              });

    {
        std::vector<CatalogEntry> t = Catalog::dim8_table();
        for (const CatalogEntry& e : t) {
            run_check(rep, "catalog.dim8." + e.name,
                      "dimension-8 table entry: recorded facts all recompute",
                      [&e](std::string& detail) { return recheck_entry(e, detail); });
        }
    }

    run_check(rep, "catalog.y8.correction",
              "the published generator set for item 8 fails commutativity; the corrected "
              "set builds and classifies as D01(4)",
              [](std::string& detail) {
                  CatalogEntry wrong = Catalog::build("Y", {{"i", 8}, {"corrected", 0}});
                  if (!wrong.expected.commutative || *wrong.expected.commutative ||
                      wrong.algebra) {
                      detail = "published set unexpectedly commutes";
                      return false;
                  }
                  CatalogEntry fixed = Catalog::build("Y", {{"i", 8}});
                  if (!fixed.algebra) {
                      detail = "corrected set does not build";
                      return false;
                  }
                  return expect_eq(fixed.expected.label.value_or("<none>"),
                                   std::string("D01(4)"), "label", detail);
              });

    run_check(rep, "catalog.witnesses",
              "every recorded basis-change matrix is an isomorphism between its builds",
              [](std::string& detail) {
                  for (const IsomorphismWitness& w : Catalog::witnesses()) {
                      if (!w.source.algebra || !w.target.algebra) {
                          detail = w.name + ": missing algebra";
                          return false;
                      }
                      if (!verify_isomorphism(w.psi, *w.source.algebra, *w.target.algebra)) {
                          detail = w.name + ": bracket re-check fails";
                          return false;
                      }
                  }
                  return true;
              });

    for (const CatalogEntry& e : recheck_list(max_n)) {
        run_check(rep, "catalog.entry." + e.name,
                  "catalog entry: recorded facts all recompute",
                  [&e](std::string& detail) { return recheck_entry(e, detail); });
    }
}

}  // namespace

VerifyReport run_verify(const std::string& suite, int max_n) {
    const auto start = std::chrono::steady_clock::now();
    VerifyReport rep;
    rep.suite = suite;
    if (suite == "jordan" || suite == "all") suite_jordan(rep);
    if (suite == "classify" || suite == "all") suite_classify(rep);
    if (suite == "masa" || suite == "all") suite_masa(rep);
    if (suite == "catalog" || suite == "all") suite_catalog(rep, max_n);
    if (rep.checks.empty() && suite != "all")
        throw MathError("run_verify: unknown suite '" + suite +
                        "' (expected jordan, classify, masa, catalog, or all)");
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return rep;
}

std::string emit_report(const VerifyReport& report, const std::string& format) {
    auto status_name = [](CheckStatus s) {
        switch (s) {
            case CheckStatus::pass: return "pass";
            case CheckStatus::fail: return "fail";
            default: return "skip";
        }
    };
    if (format == "json") {
        nlohmann::ordered_json o;
        o["suite"] = report.suite;
        nlohmann::ordered_json checks = nlohmann::ordered_json::array();
        for (const Check& c : report.checks) {
            nlohmann::ordered_json e;
            e["id"] = c.id;
            e["description"] = c.description;
            e["status"] = status_name(c.status);
            e["detail"] = c.detail;
            checks.push_back(std::move(e));
        }
        o["checks"] = std::move(checks);
        o["elapsed_ms"] = report.elapsed_ms;
        return o.dump(2) + "\n";
    }
    if (format != "text")
        throw MathError("emit_report: unknown format '" + format + "'");
    std::ostringstream os;
    int skipped = 0;
    for (const Check& c : report.checks) {
        const char* tag = c.status == CheckStatus::pass
                              ? "[PASS]"
                              : c.status == CheckStatus::fail ? "[FAIL]" : "[SKIP]";
        if (c.status == CheckStatus::skip) ++skipped;
        os << tag << " " << c.id << " — " << c.description;
        if (c.status == CheckStatus::fail && !c.detail.empty()) {
            std::string one_line = c.detail;
            for (char& ch : one_line)
                if (ch == '\n') ch = ';';
            os << " — " << one_line;
        }
        os << "\n";
    }
    os << "suite " << report.suite << ": " << report.checks.size() << " checks, "
       << report.failures() << " failed, " << skipped << " skipped, "
       << report.elapsed_ms << " ms\n";
    return os.str();
}

}  // namespace frob
