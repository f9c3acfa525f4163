#include "suite.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "boxsort.hpp"
#include "families.hpp"
#include "grammar.hpp"
#include "normalorder.hpp"
#include "oracle.hpp"
#include "tableaux.hpp"

namespace ytab {

namespace {

const VarId X("x");
const VarId Y("y");
const VarId Z("z");
const VarId U("u");
const VarId V("v");
const VarId AV("a");
const VarId BV("b");

Poly xv() { return Poly::var(X); }

Poly sub_x2(const Poly& p) {
  return p.substitute({{X, Poly::var(X, 2)}});
}

/// x^d * p(1/x) for a polynomial p in x of degree <= d.
Poly reverse_x(const Poly& p, int d) {
  Poly out;
  for (const auto& [m, c] : p.terms()) {
    Monomial rm = m;
    rm.set_exponent(X, d - m.exponent(X));
    out.add_term(c, rm);
  }
  return out;
}

std::string describe_mismatch(const Poly& a, const Poly& b) {
  auto ai = a.terms().begin();
  auto bi = b.terms().begin();
  while (ai != a.terms().end() || bi != b.terms().end()) {
    if (bi == b.terms().end() || (ai != a.terms().end() && ai->first < bi->first)) {
      return "differs at " + Poly::term(1, ai->first).str();
    }
    if (ai == a.terms().end() || bi->first < ai->first) {
      return "differs at " + Poly::term(1, bi->first).str();
    }
    if (ai->second != bi->second)
      return "differs at " + Poly::term(1, ai->first).str();
    ++ai;
    ++bi;
  }
  return "equal";
}

std::string compare(const std::vector<std::pair<std::string, Poly>>& routes) {
  for (size_t i = 1; i < routes.size(); ++i) {
    if (!(routes[i].second == routes[0].second)) {
      return routes[0].first + " != " + routes[i].first + " (" +
             describe_mismatch(routes[0].second, routes[i].second) + "): " +
             routes[0].second.str() + "  vs  " + routes[i].second.str();
    }
  }
  return "";
}

Poly eval11(const Poly& p) {
  return p.substitute({{X, Poly(1)}, {Y, Poly(1)}});
}

/// sum over permutations of x^exc k^(n-cyc).
Poly exc_cyc_poly(int n, int k) {
  Poly raw = stat_poly("permutation", {}, n, {{"exc", X}, {"cyc", U}});
  Poly out;
  for (const auto& [m, c] : raw.terms()) {
    Int scale = 1;
    for (int i = 0; i < n - m.exponent(U); ++i) scale *= k;
    out.add_term(c * scale, Monomial::var(X, m.exponent(X)));
  }
  return out;
}

// ---- triangles of section-4 coefficients ----------------------------------

using Triangle = std::vector<std::vector<std::vector<Int>>>;

Triangle make_triangle(int N, int spread,
                       const std::function<Int(int, int, int)>& wdiag) {
  // T[n][k][l]; recurrences share the shape
  //   T(n+1,k,l) = l*T(n,k,l) + wdiag(n,k,l)*T(n,k,l-1) + T(n,k-1,l-1)
  // with T(1,1,1) = 1. `spread` bounds the l index (l <= spread*n).
  Triangle t(static_cast<size_t>(N) + 1);
  for (int n = 1; n <= N; ++n) {
    t[static_cast<size_t>(n)].assign(static_cast<size_t>(n) + 1,
                                     std::vector<Int>(
                                         static_cast<size_t>(spread * n) + 2,
                                         0));
    if (n == 1) {
      t[1][1][1] = 1;
      continue;
    }
    auto& prev = t[static_cast<size_t>(n) - 1];
    for (int k = 1; k <= n; ++k)
      for (int l = 1; l <= spread * n; ++l) {
        Int v = 0;
        if (k <= n - 1) {
          if (l < static_cast<int>(prev[static_cast<size_t>(k)].size()))
            v += Int(l) * prev[static_cast<size_t>(k)][static_cast<size_t>(l)];
          if (l - 1 >= 0 &&
              l - 1 < static_cast<int>(prev[static_cast<size_t>(k)].size()))
            v += wdiag(n - 1, k, l) *
                 prev[static_cast<size_t>(k)][static_cast<size_t>(l) - 1];
        }
        if (k - 1 >= 1 && l - 1 >= 0 &&
            l - 1 < static_cast<int>(prev[static_cast<size_t>(k) - 1].size()))
          v += prev[static_cast<size_t>(k) - 1][static_cast<size_t>(l) - 1];
        t[static_cast<size_t>(n)][static_cast<size_t>(k)]
         [static_cast<size_t>(l)] = v;
      }
  }
  return t;
}

// ---- identity checks -------------------------------------------------------

std::string check_T51(int n) {
  JetContext jc(n);
  Poly jet = jc.ckd_power_on_c(1, n);
  Poly weights;
  enumerate_owp(n, 1, [&](const Owp& p) { weights += owp_weight(p); });
  Poly syt = syt_expansion(n, 1, Poly::var(JetContext::c(0)), [](int i) {
    return Poly::var(JetContext::c(i));
  });
  std::string r = compare({{"jet derivation", jet},
                           {"weight sum over ordered partitions", weights},
                           {"tableau expansion", syt}});
  if (!r.empty()) return r;
  Poly total = syt_index_poly(n, 1, X).substitute({{X, Poly(1)}});
  if (!(total == Poly(factorial(n))))
    return "index products do not sum to n!: " + total.str();
  return "";
}

std::string check_T61(int n) {
  Poly fam = family("ramanujan", n);
  Poly syt = syt_expansion(n - 1, 1, Poly(1), [](int i) {
    Poly a;
    for (int j = 0; j <= i; ++j)
      a += Poly::term(binomial(i, j) * factorial(j), Monomial::var(X, j));
    return a;
  });
  Grammar g = parse_grammar("x -> x^3*y; y -> x*y^2");
  Poly gr = g.derive_n(xv() * Poly::var(Y), n - 1)
                .substitute({{Y, Poly(1)}})
                .divide_exact(Poly::var(X, n));
  Poly tree = stat_poly("rootedLabeledTree", {}, n, {{"improper", X}});
  return compare({{"recurrence", fam},
                  {"tableau expansion", syt},
                  {"grammar", gr},
                  {"tree enumeration", tree}});
}

std::string check_T62(int n) {
  Poly fam = family("andre", n);
  Poly syt = syt_expansion(n - 1, 1, xv(), [](int i) {
    if (i == 1) return Poly::var(Y);
    if (i == 2) return Poly(1);
    return Poly();
  });
  Poly tree = stat_poly("incTree012", {}, n, {{"leaves", X}, {"deg1", Y}});
  std::string r = compare({{"grammar", fam},
                           {"tableau expansion", syt},
                           {"tree enumeration", tree}});
  if (!r.empty()) return r;
  Poly at11 = fam.substitute({{X, Poly(1)}, {Y, Poly(1)}});
  if (!(at11 == Poly(alternating_count(n))))
    return "value at (1,1) is not the alternating-permutation count";
  return "";
}

std::string check_T63a(int n) {
  Poly fam = family("leftPeak", n);
  Poly lhs = xv() * sub_x2(fam);
  Poly syt = syt_expansion(n, 1, xv(), [](int i) {
    return i % 2 == 0 ? Poly::var(X) : Poly(1);
  });
  std::string r = compare({{"recurrence (squared form)", lhs},
                           {"tableau expansion", syt}});
  if (!r.empty()) return r;
  Poly oracle = stat_poly("permutation", {}, n, {{"lpk", X}});
  return compare({{"recurrence", fam}, {"left-peak enumeration", oracle}});
}

std::string check_T63b(int n) {
  Poly fam = family("interiorPeak", n + 1);
  Poly syt = syt_expansion(n, 1, Poly(1), [](int i) {
    if (i > 2) return Poly();
    return Int(2) * Poly::var(X, i - 1);
  });
  Poly oracle = stat_poly("permutation", {}, n + 1, {{"ipk", X}});
  Poly conv;
  for (int k = 0; k <= n; ++k)
    conv += binomial(n, k) * family("leftPeak", k) * family("leftPeak", n - k);
  return compare({{"recurrence", fam},
                  {"tableau expansion", syt},
                  {"interior-peak enumeration", oracle},
                  {"left-peak convolution", conv}});
}

std::string check_T64(int n) {
  Poly fam = family("eulerianA", n);
  Poly r1 = syt_index_poly(n, 1, X);
  Poly r2 = syt_expansion(n, 1, xv(), [](int) { return Poly(1); });
  Poly oracle = stat_poly("permutation", {}, n, {{"des1", X}});
  std::string r = compare({{"recurrence", fam},
                           {"tableau row-count form", r1},
                           {"tableau complement form", r2},
                           {"descent enumeration", oracle}});
  if (!r.empty()) return r;
  Poly biv = syt_expansion(n, 1, xv() * Poly::var(Y), [](int i) {
    if (i == 1) return Poly::var(X) + Poly::var(Y);
    if (i == 2) return Poly(2);
    return Poly();
  });
  return compare({{"bivariate tableau form", biv},
                  {"bivariate recurrence", family("eulerianA_biv", n + 1)}});
}

std::string check_T65(int n) {
  Poly fam = family("kInvEulerian", n, 2);
  Poly syt = syt_expansion(n, 1, Poly(1), [](int i) {
    return reverse_x(family("interiorPeak", i), i - 1);
  });
  Poly oracle = exc_cyc_poly(n, 2);
  return compare({{"recurrence", fam},
                  {"tableau expansion", syt},
                  {"excedance-cycle enumeration", oracle}});
}

std::string check_T66(int n) {
  Poly fam = family("eulerianB", n);
  Poly lhs = xv() * sub_x2(fam);
  Poly syt = syt_expansion(n, 1, xv(), [](int i) {
    Int four = 1;
    if (i % 2 == 1) {
      for (int t = 1; t < (i + 1) / 2; ++t) four *= 4;
      return four * (Poly(1) + Poly::var(X, 2));
    }
    for (int t = 0; t < i / 2; ++t) four *= 4;
    return four * Poly::var(X);
  });
  std::string r = compare({{"recurrence (squared form)", lhs},
                           {"tableau expansion", syt}});
  if (!r.empty()) return r;
  Poly oracle = stat_poly("signedPermutation", {}, n, {{"desB", X}});
  return compare({{"recurrence", fam}, {"signed-descent enumeration", oracle}});
}

std::string check_T67a(int n) {
  Poly syt = syt_expansion(n, 1, Poly::var(Y), [](int i) {
    return family("eulerianA_biv", i);
  });
  Poly fam = family("secondOrder", n);
  Poly hom;
  for (int k = 0; k <= 2 * n + 1; ++k) {
    Poly ck = fam.coefficient_of(X, k);
    if (!ck.is_zero())
      hom += ck * Poly::var(X, k) * Poly::var(Y, 2 * n + 1 - k);
  }
  Poly oracle = stat_poly("stirlingPermutation", {2}, n,
                          {{"des", X}, {"asc", Y}, {"plat", Y}});
  return compare({{"tableau expansion", syt},
                  {"homogenized recurrence", hom},
                  {"Stirling-permutation enumeration", oracle}});
}

std::string check_T67b(int n) {
  Poly syt = syt_expansion(n, 1, xv(), [](int i) {
    return Poly(factorial(i));
  });
  return compare({{"recurrence", family("secondOrder", n)},
                  {"tableau expansion", syt}});
}

std::string check_T67c(int n) {
  Poly e1 = Poly::var(X) + Poly::var(Y) + Poly::var(Z);
  Poly e2 = Poly::var(X) * Poly::var(Y) + Poly::var(Y) * Poly::var(Z) +
            Poly::var(X) * Poly::var(Z);
  Poly base = Poly::var(X) * Poly::var(Y) * Poly::var(Z);
  Poly syt = syt_expansion(n, 1, base, [&](int i) {
    if (i == 1) return e2;
    if (i == 2) return Int(2) * e1;
    if (i == 3) return Poly(6);
    return Poly();
  });
  return compare({{"derivation recurrence", family("secondOrderTri", n + 1)},
                  {"tableau expansion", syt}});
}

std::string check_T67d(int n) {
  return compare({{"recurrence", family("secondOrder", n)},
                  {"second-order index form", syt_index_poly(n, 2, X)}});
}

std::string check_T67e(int n) {
  for (int m = 1; m <= 3; ++m) {
    std::string r = compare(
        {{"recurrence", family("kOrder", n, m)},
         {"order-" + std::to_string(m) + " index form",
          syt_index_poly(n, m, X)}});
    if (!r.empty()) return r;
  }
  return "";
}

std::string check_T68a(int n) {
  Poly lhs = Poly(factorial(n + 1)) * Poly::var(X, n + 2) *
             sub_x2(family("narayanaA", n - 1));
  Poly syt = syt_expansion(n, 1, Poly::var(X, 2), [](int i) {
    Poly c;
    for (int j = 0; 2 * j - i <= i + 1; ++j) {
      if (2 * j - i < 0) continue;
      c += Poly::term(factorial(i) * binomial(i + 1, 2 * j - i),
                      Monomial::var(X, 2 * j - i));
    }
    return c;
  });
  return compare({{"closed form", lhs}, {"tableau expansion", syt}});
}

std::string check_T68b(int n) {
  Poly lhs = Poly(factorial(n)) * family("narayanaB", n);
  Poly syt = syt_expansion(n, 1, Poly(1), [](int i) {
    return family("eulerianB", i);
  });
  return compare({{"closed form", lhs}, {"tableau expansion", syt}});
}

std::string check_T31(int n) {
  Grammar g1 = parse_grammar("a -> a^2; b -> a^2");
  Grammar g2 = parse_grammar("a -> a*b; b -> a*b");
  Poly p = Poly::var(AV);
  for (int i = 0; i < n; ++i) p = g2.derive(g1.derive(p));
  Poly na = family("narayanaA", n - 1);
  Poly rhs;
  for (int k = 0; k <= n - 1; ++k) {
    Poly ck = na.coefficient_of(X, k);
    rhs += ck * Poly::var(AV, n + 1 + k) * Poly::var(BV, n - k);
  }
  rhs = Poly(factorial(n) * factorial(n + 1)) * rhs;
  std::string r = compare({{"alternating grammar", p}, {"closed form", rhs}});
  if (!r.empty()) return r;
  // palindromicity of the Narayana coefficients
  for (int k = 0; k <= n - 1; ++k) {
    if (!(na.coefficient_of(X, k) == na.coefficient_of(X, n - 1 - k)))
      return "Narayana coefficient list is not palindromic";
  }
  return "";
}

std::string check_T32(int n) {
  std::vector<int> mult(static_cast<size_t>(n), 2);
  Poly oracle = stat_poly("multisetPermutation", mult, n, {{"des", X}});
  return compare({{"alternating grammar", family("multisetDescent2", n)},
                  {"multiset descent enumeration", oracle}});
}

std::string check_T33(int k) {
  Poly lk = family("lsDescent", k);
  const int trunc = 6;
  Poly series = lk.series_quotient(X, 3 * k + 1, trunc);
  Poly gf;
  for (int t = 0; t <= trunc; ++t)
    gf += Poly::term(number_table("legendreStirling", t + k, t),
                     Monomial::var(X, t));
  return compare({{"grammar route (series)", series},
                  {"number-triangle generating function", gf}});
}

std::string check_T41(int n) {
  Grammar g = parse_grammar("x -> y; y -> y");
  NormalOp op = op_power(g, xv(), n);
  Triangle t = make_triangle(n, 1, [](int nn, int, int l) -> Int {
    return Int(nn - l + 1);
  });
  for (int k = 1; k <= n; ++k) {
    Poly expect;
    for (int l = k; l <= n; ++l)
      expect += Poly::term(t[static_cast<size_t>(n)][static_cast<size_t>(k)]
                            [static_cast<size_t>(l)],
                           Monomial::var(X, l) * Monomial::var(Y, n - l));
    std::string r = compare({{"operator power order " + std::to_string(k),
                              op.coefficient(k)},
                             {"triangle recurrence", expect}});
    if (!r.empty()) return r;
  }
  // A_n(1,1,z) = z(z+1)...(z+n-1)
  Poly lhs, rising(1);
  for (int k = 1; k <= n; ++k)
    lhs += eval11(op.coefficient(k)) * Poly::var(Z, k);
  for (int j = 0; j < n; ++j) rising *= Poly::var(Z) + Poly(j);
  return compare({{"operator power at (1,1)", lhs},
                  {"rising factorial", rising}});
}

std::string check_T42(int n) {
  Grammar g = parse_grammar("x -> 1; y -> 1");
  NormalOp op = op_power(g, xv() * Poly::var(Y), n);
  Triangle a = make_triangle(n, 2, [](int nn, int k, int l) -> Int {
    return Int(nn + k - l + 1);
  });
  Triangle gam = make_triangle(n, 2, [](int nn, int k, int l) -> Int {
    return Int(2 * (nn + k - 2 * l + 2));
  });
  Grammar guv = parse_grammar("u -> v; v -> 2");
  NormalOp opg = op_power(guv, Poly::var(U), n);
  for (int k = 1; k <= n; ++k) {
    Poly expect;
    for (int l = k; l <= n; ++l)
      expect += Poly::term(a[static_cast<size_t>(n)][static_cast<size_t>(k)]
                            [static_cast<size_t>(l)],
                           Monomial::var(X, l) * Monomial::var(Y, n + k - l));
    std::string r = compare({{"operator power order " + std::to_string(k),
                              op.coefficient(k)},
                             {"triangle recurrence", expect}});
    if (!r.empty()) return r;
    // gamma route through the change of variables u = xy, v = x+y
    Poly gexpect;
    for (int l = k; 2 * l <= n + k; ++l) {
      Int gv = gam[static_cast<size_t>(n)][static_cast<size_t>(k)]
                  [static_cast<size_t>(l)];
      if (gv < 0) return "negative gamma coefficient";
      gexpect += Poly::term(gv, Monomial::var(U, l) *
                                    Monomial::var(V, n + k - 2 * l));
    }
    r = compare({{"changed-grammar operator power", opg.coefficient(k)},
                 {"gamma triangle recurrence", gexpect}});
    if (!r.empty()) return r;
    // gamma expansion of the (x,y) coefficient must match the triangle
    for (const auto& [i, gi] : gamma_expand(op.coefficient(k), X, Y)) {
      Int want = 0;
      if (i >= 1 && i <= 2 * n &&
          i < static_cast<int>(gam[static_cast<size_t>(n)]
                                  [static_cast<size_t>(k)].size()))
        want = gam[static_cast<size_t>(n)][static_cast<size_t>(k)]
                  [static_cast<size_t>(i)];
      if (!(gi == Poly(want)))
        return "gamma expansion disagrees with the triangle at order " +
               std::to_string(k);
    }
  }
  // Lah projection a_n(1,1,z)
  Poly lhs, lah;
  for (int k = 1; k <= n; ++k) {
    lhs += eval11(op.coefficient(k)) * Poly::var(Z, k);
    lah += Poly::term(number_table("lah", n, k), Monomial::var(Z, k));
  }
  std::string r = compare({{"operator power at (1,1)", lhs},
                           {"Lah numbers", lah}});
  if (!r.empty()) return r;
  if (n <= 6) {
    // list-partition enumeration of the full triangle at y = 1
    Poly want;
    for (int k = 1; k <= n; ++k)
      want += op.coefficient(k).substitute({{Y, Poly(1)}}) * Poly::var(Z, k);
    Poly oracle = stat_poly("listPartition", {}, n, {{"asc", X}, {"lists", Z}});
    r = compare({{"operator power at y=1", want},
                 {"list partition enumeration", oracle}});
    if (!r.empty()) return r;
  }
  if (n <= 7) {
    // valley / double-descent gamma expansion of the Eulerian polynomial
    Poly vd = stat_poly("permutation", {}, n, {{"val", X}, {"dd", U}});
    Poly gpoly = vd.coefficient_of(U, 0);
    Poly recon;
    for (int l = 0; 2 * l <= n - 1; ++l)
      recon += gpoly.coefficient_of(X, l) * Poly::var(X, l) *
               (Poly(1) + xv()).pow(n - 1 - 2 * l);
    recon = xv() * recon;
    r = compare({{"valley enumeration", recon},
                 {"recurrence", family("eulerianA", n)}});
    if (!r.empty()) return r;
  }
  return "";
}

std::string check_P1x(int n) {
  Grammar g1 = parse_grammar("a -> a*b; b -> b");
  Poly expect;
  for (int k = 0; k <= n; ++k)
    expect += Poly::term(number_table("stirling2", n, k),
                         Monomial::var(BV, k));
  expect = Poly::var(AV) * expect;
  std::string r = compare({{"grammar", g1.derive_n(Poly::var(AV), n)},
                           {"Stirling partition numbers", expect}});
  if (!r.empty()) return r;

  Grammar g2 = parse_grammar("a -> a*b; b -> b*c; c -> c^2");
  Poly expect2;
  for (int k = 0; k <= n; ++k)
    expect2 += Poly::term(number_table("stirling1", n, k),
                          Monomial::var(BV, k) * Monomial::var(VarId("c"),
                                                               n - k));
  expect2 = Poly::var(AV) * expect2;
  r = compare({{"grammar", g2.derive_n(Poly::var(AV), n)},
               {"Stirling cycle numbers", expect2}});
  if (!r.empty()) return r;

  Grammar g3 = parse_grammar("x -> 1");
  NormalOp op = op_power(g3, xv(), n);
  for (int k = 0; k <= n; ++k) {
    Poly want = Poly::term(number_table("stirling2", n, k),
                           Monomial::var(X, k));
    if (!(op.coefficient(k) == want))
      return "normal ordered power of xD disagrees with Stirling numbers";
  }

  JetContext jc(n);
  for (int k = 1; k <= n; ++k) {
    if (jc.project(JetContext::Projection::kStirling1, n, k) !=
        number_table("stirling1", n, k))
      return "cycle-number projection failed at k=" + std::to_string(k);
    if (jc.project(JetContext::Projection::kStirling2, n, k) !=
        number_table("stirling2", n, k))
      return "partition-number projection failed at k=" + std::to_string(k);
    if (jc.project(JetContext::Projection::kEulerian, n, k) !=
        number_table("eulerianNum", n, k))
      return "Eulerian projection failed at k=" + std::to_string(k);
  }

  // F_{n,1} as an indexed-grammar derivative
  Grammar gi = parse_grammar("x[i] -> x[0]*x[i+1]");
  gi.set_max_index(n + 1);
  Poly lhs = gi.derive_n(Poly::var(VarId("x", 0)), n - 1);
  std::map<VarId, Poly> relabel;
  for (int i = 0; i < n; ++i)
    relabel[JetContext::c(i)] = Poly::var(VarId("x", i));
  Poly rhs = jc.extract_F(n, 1).substitute(relabel);
  return compare({{"indexed grammar", lhs}, {"jet coefficient", rhs}});
}

std::string check_E3x(int n) {
  // Frobenius formula
  Poly frob;
  for (int k = 0; k <= n; ++k)
    frob += Poly(factorial(k) * number_table("stirling2", n, k)) *
            Poly::var(X, k) * (Poly(1) - xv()).pow(n - k);
  std::string r = compare({{"recurrence", family("eulerianA", n)},
                           {"Frobenius formula", frob}});
  if (!r.empty()) return r;

  // Eulerian grammar {a -> ab, b -> ab}
  Grammar ge = parse_grammar("a -> a*b; b -> a*b");
  Poly ea = family("eulerianA", n);
  Poly ehom;
  for (int k = 1; k <= n; ++k)
    ehom += ea.coefficient_of(X, k) * Poly::var(AV, k) *
            Poly::var(BV, n + 1 - k);
  r = compare({{"grammar", ge.derive_n(Poly::var(AV), n)},
               {"homogenized recurrence", ehom}});
  if (!r.empty()) return r;

  for (int k = 1; k <= 3; ++k) {
    // fractional-Eulerian grammar {a -> ab^k, b -> a^k b}
    std::string spec = "a -> a*b^" + std::to_string(k) + "; b -> a^" +
                       std::to_string(k) + "*b";
    Grammar gk = parse_grammar(spec);
    Poly lhs = gk.derive_n(Poly::var(AV), n)
                   .substitute({{AV, xv()}, {BV, Poly(1)}});
    Poly ak = family("kInvEulerian", n, k);
    Poly rhs = xv() * ak.substitute({{X, Poly::var(X, k)}});
    r = compare({{"grammar", lhs}, {"recurrence", rhs}});
    if (!r.empty()) return r;

    // explicit formula
    Poly expl;
    for (int i = 1; i <= n; ++i) {
      Int coeff = number_table("stirling2", n, i);
      for (int t = 0; t < n - i; ++t) coeff *= k;
      for (int j = 0; j < i; ++j) coeff *= 1 + j * k;
      expl += Poly(coeff) * (xv() - Poly(1)).pow(n - i);
    }
    r = compare({{"recurrence", ak}, {"explicit formula", expl}});
    if (!r.empty()) return r;

    if (n <= 7 && k != 2) {
      r = compare({{"recurrence", ak},
                   {"excedance-cycle enumeration", exc_cyc_poly(n, k)}});
      if (!r.empty()) return r;
    }
  }

  // reversal relation between the Eulerian polynomial and its 1/1 form
  r = compare({{"reversal", reverse_x(family("kInvEulerian", n, 1), n)},
               {"recurrence", family("eulerianA", n)}});
  if (!r.empty()) return r;

  // type B grammar applied to the product ab
  Grammar gb = parse_grammar("a -> a*b^2; b -> a^2*b");
  Poly blhs = gb.derive_n(Poly::var(AV) * Poly::var(BV), n)
                  .substitute({{AV, xv()}, {BV, Poly(1)}});
  r = compare({{"grammar", blhs},
               {"recurrence", xv() * sub_x2(family("eulerianB", n))}});
  if (!r.empty()) return r;

  // second-order grammar
  Grammar gc = parse_grammar("a -> a*b^2; b -> a*b^2");
  Poly clhs = gc.derive_n(Poly::var(AV), n)
                  .substitute({{AV, xv()}, {BV, Poly(1)}});
  r = compare({{"grammar", clhs}, {"recurrence", family("secondOrder", n)}});
  if (!r.empty()) return r;

  // flag ascent-plateau grammar and convolution
  Grammar gf = parse_grammar("c -> a*b*c; a -> a*b^2; b -> a^2*b");
  Poly flhs = gf.derive_n(Poly::var(VarId("c")), n)
                  .substitute({{VarId("c"), Poly(1)},
                               {AV, xv()},
                               {BV, Poly(1)}});
  r = compare({{"grammar", flhs}, {"recurrence", family("flagAP", n)}});
  if (!r.empty()) return r;
  Poly conv;
  for (int k = 0; k <= n - 1; ++k)
    conv += binomial(n - 1, k) * family("flagAP", k) *
            sub_x2(family("eulerianB", n - 1 - k));
  conv = xv() * conv;
  r = compare({{"recurrence", family("flagAP", n)},
               {"type B convolution", conv}});
  if (!r.empty()) return r;

  // Hermite grammar
  Grammar gh = parse_grammar("a -> 2*a*b; b -> -1");
  Poly hlhs = gh.derive_n(Poly::var(AV), n)
                  .substitute({{AV, Poly(1)}, {BV, xv()}});
  r = compare({{"grammar", hlhs}, {"recurrence", family("hermite", n)}});
  if (!r.empty()) return r;

  // specializations of the k-order family
  r = compare({{"order 1", family("kOrder", n, 1)},
               {"Eulerian", family("eulerianA", n)}});
  if (!r.empty()) return r;
  r = compare({{"order 2", family("kOrder", n, 2)},
               {"second order", family("secondOrder", n)}});
  if (!r.empty()) return r;

  // trivariate symmetry and restriction
  if (n <= 6) {
    Poly tri = family("secondOrderTri", n);
    if (!(tri == tri.substitute({{X, Poly::var(Y)}, {Y, Poly::var(X)}})) ||
        !(tri == tri.substitute({{Y, Poly::var(Z)}, {Z, Poly::var(Y)}})))
      return "trivariate polynomial is not symmetric";
    r = compare({{"restriction y=z=1",
                  tri.substitute({{Y, Poly(1)}, {Z, Poly(1)}})},
                 {"second order", family("secondOrder", n)}});
    if (!r.empty()) return r;
  }

  // ascent-plateau interpretation of the 1/2-Eulerian polynomials
  if (n <= 6) {
    Poly ap = stat_poly("stirlingPermutation", {2}, n, {{"ap", X}});
    r = compare({{"ascent-plateau enumeration", ap},
                 {"recurrence", family("kInvEulerian", n, 2)}});
    if (!r.empty()) return r;
  }
  return "";
}

std::string check_C6x(int n) {
  Poly tri = family("secondOrderTri", n);
  auto terms = e_expand(tri, X, Y, Z);
  Poly recon;
  Poly e1 = Poly::var(X) + Poly::var(Y) + Poly::var(Z);
  Poly e2 = Poly::var(X) * Poly::var(Y) + Poly::var(Y) * Poly::var(Z) +
            Poly::var(X) * Poly::var(Z);
  Poly e3 = Poly::var(X) * Poly::var(Y) * Poly::var(Z);
  for (const auto& [ijk, c] : terms) {
    if (c < 0) return "negative coefficient in the elementary expansion";
    if (ijk[0] + 2 * ijk[1] + 3 * ijk[2] != 2 * n + 1)
      return "elementary expansion violates the degree constraint";
    recon += Poly(c) * e1.pow(ijk[0]) * e2.pow(ijk[1]) * e3.pow(ijk[2]);
  }
  if (!(recon == tri)) return "elementary expansion does not reconstruct";

  // pairs-of-tableaux identity for the Eulerian polynomial
  std::map<Partition, Int> shape_count;
  auto tabs = all_syt(n, 0);
  for (const auto& t : tabs) ++shape_count[t.shape()];
  Poly rsk;
  for (const auto& t : tabs)
    rsk += Poly::term(shape_count[t.shape()],
                      Monomial::var(X, t.descent_count() + 1));
  return compare({{"tableau-pair descents", rsk},
                  {"recurrence", family("eulerianA", n)}});
}

struct Identity {
  std::string token;
  int lo;
  int hi;
  std::function<std::string(int)> check;
};

const std::vector<Identity>& catalog() {
  static const std::vector<Identity> c = {
      {"T5.1", 1, 7, check_T51},    {"T6.1", 1, 5, check_T61},
      {"T6.2", 1, 7, check_T62},    {"T6.3a", 1, 7, check_T63a},
      {"T6.3b", 1, 7, check_T63b},  {"T6.4", 1, 7, check_T64},
      {"T6.5", 1, 7, check_T65},    {"T6.6", 1, 6, check_T66},
      {"T6.7a", 1, 6, check_T67a},  {"T6.7b", 1, 6, check_T67b},
      {"T6.7c", 1, 5, check_T67c},  {"T6.7d", 1, 6, check_T67d},
      {"T6.7e", 1, 5, check_T67e},  {"T6.8a", 1, 5, check_T68a},
      {"T6.8b", 1, 5, check_T68b},  {"T3.1", 1, 6, check_T31},
      {"T3.2", 1, 5, check_T32},    {"T3.3", 0, 4, check_T33},
      {"T4.1", 1, 8, check_T41},    {"T4.2", 1, 8, check_T42},
      {"P1.x", 1, 7, check_P1x},    {"E3.x", 1, 8, check_E3x},
      {"C6.x", 1, 6, check_C6x},
  };
  return c;
}

Report run(const Identity& id, int n_max) {
  Report rep;
  int hi = n_max > 0 ? n_max : id.hi;
  for (int n = id.lo; n <= hi; ++n) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    try {
      detail = id.check(n);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    rep.checks.push_back({id.token, n, detail.empty(), ms, detail});
  }
  return rep;
}

}  // namespace

bool Report::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string Report::text() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << c.identity << " n=" << c.n << " "
       << (c.pass ? "pass" : "FAIL") << " (" << c.millis << " ms)";
    if (!c.detail.empty()) os << " " << c.detail;
    os << "\n";
  }
  return os.str();
}

std::string Report::json() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < checks.size(); ++i) {
    const auto& c = checks[i];
    if (i) os << ",";
    os << "{\"identity\":\"" << c.identity << "\",\"n\":" << c.n
       << ",\"status\":\"" << (c.pass ? "pass" : "fail")
       << "\",\"millis\":" << c.millis << "}";
  }
  os << "]";
  return os.str();
}

std::vector<std::string> identity_names() {
  std::vector<std::string> out;
  for (const auto& id : catalog()) out.push_back(id.token);
  return out;
}

Report verify(const std::string& token, int n_max) {
  for (const auto& id : catalog())
    if (id.token == token) return run(id, n_max);
  throw UnknownIdentity("unknown identity " + token);
}

Report verify_all(int n_max) {
  Report rep;
  for (const auto& id : catalog()) {
    Report r = run(id, n_max);
    rep.checks.insert(rep.checks.end(), r.checks.begin(), r.checks.end());
  }
  return rep;
}

}  // namespace ytab
