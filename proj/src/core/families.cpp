#include "families.hpp"

#include <functional>

namespace ytab {

namespace {

const VarId X("x");
const VarId Y("y");
const VarId Z("z");

Poly xpoly() { return Poly::var(X); }

/// p -> pre * p + fac * x * (1 - x^sq) * p'(x), the shared shape of
/// the one-variable recursions.
Poly euler_step(const Poly& p, const Poly& pre, const Poly& fac, int sq) {
  return pre * p + fac * (Poly::var(X) - Poly::var(X, sq + 1)) *
                       p.derivative(X);
}

Poly eulerianA(int n) {
  Poly p(1);
  for (int i = 1; i <= n; ++i)
    p = euler_step(p, Int(i) * xpoly(), Poly(1), 1);
  return p;
}

Poly eulerianA_biv(int n) {
  if (n == 0) return Poly(1);
  Poly a = eulerianA(n);
  Poly out;
  for (int k = 1; k <= n; ++k) {
    Poly ck = a.coefficient_of(X, k);
    out += ck * Poly::var(X, k) * Poly::var(Y, n + 1 - k);
  }
  return out;
}

Poly eulerianB(int n) {
  Poly p(1);
  for (int i = 1; i <= n; ++i)
    p = euler_step(p, Poly(1) + Int(2 * i - 1) * xpoly(), Poly(2), 1);
  return p;
}

Poly kInvEulerian(int k, int n) {
  Poly p(1);
  for (int i = 0; i < n; ++i)
    p = euler_step(p, Poly(1) + Int(k) * Int(i) * xpoly(), Poly(k), 1);
  return p;
}

Poly secondOrder(int n) {
  Poly p(1);
  for (int i = 1; i <= n; ++i)
    p = euler_step(p, Int(2 * i - 1) * xpoly(), Poly(1), 1);
  return p;
}

Poly kOrder(int k, int n) {
  Poly p(1);
  for (int i = 0; i < n; ++i)
    p = euler_step(p, (Poly(1) + Poly(Int(k) * Int(i))) * xpoly(), Poly(1), 1);
  return p;
}

Poly flagAP(int n) {
  Poly p(1);
  for (int i = 0; i < n; ++i)
    p = euler_step(p, xpoly() + Int(2 * i) * Poly::var(X, 2), Poly(1), 2);
  return p;
}

Poly interiorPeak(int n) {
  Poly p(1);
  // W_0 = W_1 = 1; the recursion applies from n = 1 on
  for (int i = 1; i < n; ++i)
    p = euler_step(p, Int(i - 1) * xpoly() + Poly(2), Poly(2), 1);
  return p;
}

Poly leftPeak(int n) {
  Poly p(1);
  for (int i = 1; i < n; ++i)
    p = euler_step(p, Int(i) * xpoly() + Poly(1), Poly(2), 1);
  return p;
}

Poly narayanaA(int n) {
  Poly out;
  for (int k = 0; k <= n; ++k) {
    Int num = binomial(n + 1, k + 1) * binomial(n + 1, k);
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(),
                Int(n + 1).get_mpz_t());
    if (r != 0) throw PolyError("narayana coefficient not integral");
    out += Poly::term(q, Monomial::var(X, k));
  }
  return out;
}

Poly narayanaB(int n) {
  Poly out;
  for (int k = 0; k <= n; ++k)
    out += Poly::term(binomial(n, k) * binomial(n, k),
                      Monomial::var(X, k));
  return out;
}

Poly ramanujan(int n) {
  Poly p(1);  // R_1; the recursion applies from n = 1 on
  for (int i = 1; i < n; ++i)
    p = Int(i) * (Poly(1) + xpoly()) * p +
        Poly::var(X, 2) * p.derivative(X);
  return p;
}

Poly secondOrderTri(int n) {
  Grammar g;
  Poly img = Poly::var(X) * Poly::var(Y) * Poly::var(Z);
  g.add_rule(X, img);
  g.add_rule(Y, img);
  g.add_rule(Z, img);
  return g.derive_n(Poly::var(X), n);
}

Poly andre(int n) {
  Grammar g;
  g.add_rule(X, Poly::var(X) * Poly::var(Y));
  g.add_rule(Y, Poly::var(X));
  return g.derive_n(Poly::var(Y), n);
}

Poly hermite(int n) {
  Poly p(1);
  for (int i = 0; i < n; ++i)
    p = Int(2) * xpoly() * p - p.derivative(X);
  return p;
}

/// (D_G2 D_G1)^n a, then a = x, b = 1.
Poly alternating(const Grammar& g1, const Grammar& g2, int n) {
  Poly p = Poly::var(VarId("a"));
  for (int i = 0; i < n; ++i) p = g2.derive(g1.derive(p));
  return p.substitute({{VarId("a"), Poly::var(X)}, {VarId("b"), Poly(1)}});
}

Poly lsDescent(int n) {
  if (n == 0) return Poly(1);  // the alternating derivation starts at n = 1
  Grammar g1 = parse_grammar("a -> a^2; b -> a^2");
  Grammar g2 = parse_grammar("a -> b^3; b -> b^3");
  return alternating(g1, g2, n);
}

Poly multisetDescent2(int n) {
  Grammar g1 = parse_grammar("a -> a^2; b -> a^2");
  Grammar g2 = parse_grammar("a -> b^2; b -> b^2");
  Poly p = alternating(g1, g2, n);
  // p = 2^n * x * P_n(x)
  Int two_n = 1;
  two_n <<= n;
  Poly divisor = Poly(two_n) * Poly::var(X);
  return p.divide_exact(divisor);
}

}  // namespace

Poly family(const std::string& name, int n, std::optional<int> param) {
  if (n < 0) throw BadParams("n must be nonnegative");
  bool wants_param = name == "kInvEulerian" || name == "kOrder";
  if (wants_param) {
    if (!param || *param < 1)
      throw BadParams(name + " requires a positive parameter k");
  } else if (param) {
    throw BadParams(name + " takes no parameter");
  }
  if (name == "eulerianA") return eulerianA(n);
  if (name == "eulerianA_biv") return eulerianA_biv(n);
  if (name == "eulerianB") return eulerianB(n);
  if (name == "kInvEulerian") return kInvEulerian(*param, n);
  if (name == "secondOrder") return secondOrder(n);
  if (name == "secondOrderTri") return secondOrderTri(n);
  if (name == "kOrder") return kOrder(*param, n);
  if (name == "flagAP") return flagAP(n);
  if (name == "interiorPeak") return interiorPeak(n);
  if (name == "leftPeak") return leftPeak(n);
  if (name == "narayanaA") return narayanaA(n);
  if (name == "narayanaB") return narayanaB(n);
  if (name == "ramanujan") return ramanujan(n);
  if (name == "andre") return andre(n);
  if (name == "hermite") return hermite(n);
  if (name == "lsDescent") return lsDescent(n);
  if (name == "multisetDescent2") return multisetDescent2(n);
  throw UnknownFamily("unknown family " + name);
}

std::vector<std::string> family_names() {
  return {"eulerianA",    "eulerianA_biv", "eulerianB",
          "kInvEulerian", "secondOrder",   "secondOrderTri",
          "kOrder",       "flagAP",        "interiorPeak",
          "leftPeak",     "narayanaA",     "narayanaB",
          "ramanujan",    "andre",         "hermite",
          "lsDescent",    "multisetDescent2"};
}

namespace {

Int triangle(int n, int k, const std::function<Int(int, int, Int, Int)>& step) {
  // step(row, col, value_above, value_above_left)
  if (k < 0 || k > n) return 0;
  std::vector<Int> row{1};  // row 0: T(0,0) = 1
  for (int i = 1; i <= n; ++i) {
    std::vector<Int> next(static_cast<size_t>(i) + 1, 0);
    for (int j = 0; j <= i; ++j) {
      Int above = j < static_cast<int>(row.size()) ? row[j] : Int(0);
      Int diag = j >= 1 ? row[static_cast<size_t>(j) - 1] : Int(0);
      next[static_cast<size_t>(j)] = step(i, j, above, diag);
    }
    row = std::move(next);
  }
  return row[static_cast<size_t>(k)];
}

}  // namespace

Int number_table(const std::string& kind, int n, int k) {
  if (n < 0 || k < 0 || k > n) throw OutOfRange("need 0 <= k <= n");
  if (kind == "stirling1")
    return triangle(n, k, [](int i, int, Int up, Int diag) -> Int {
      return diag + Int(i - 1) * up;
    });
  if (kind == "stirling2")
    return triangle(n, k, [](int, int j, Int up, Int diag) -> Int {
      return diag + Int(j) * up;
    });
  if (kind == "legendreStirling")
    return triangle(n, k, [](int, int j, Int up, Int diag) -> Int {
      return diag + Int(j) * Int(j + 1) * up;
    });
  if (kind == "eulerianNum") {
    Poly a = family("eulerianA", n);
    return a.coefficient_of(VarId("x"), k).constant_term();
  }
  if (kind == "lah") {
    if (k == 0) return n == 0 ? 1 : 0;
    return binomial(n - 1, k - 1) * factorial(n) / factorial(k);
  }
  if (kind == "ramanujanImproper") {
    Poly r = family("ramanujan", n);
    return r.coefficient_of(VarId("x"), k).constant_term();
  }
  throw UnknownFamily("unknown number table " + kind);
}

}  // namespace ytab
