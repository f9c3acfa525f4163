#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "core/families.hpp"
#include "core/oracle.hpp"

using namespace ytab;

namespace {

const VarId X("x");
const VarId Y("y");
const VarId U("u");

Poly p(const std::string& s) { return parse_poly(s); }

}  // namespace

TEST_CASE("permutation statistics") {
  CHECK(stat_poly("permutation", {}, 3, {{"des1", X}}) == p("x+4*x^2+x^3"));
  CHECK(stat_poly("permutation", {}, 3, {{"des", X}}) == p("1+4*x+x^2"));
  CHECK(stat_poly("permutation", {}, 3, {{"exc", X}}) == p("1+4*x+x^2"));
  // cycle counts: signless Stirling numbers of the first kind
  CHECK(stat_poly("permutation", {}, 4, {{"cyc", X}}) ==
        p("6*x+11*x^2+6*x^3+x^4"));
  CHECK(stat_poly("permutation", {}, 3, {{"ipk", X}}) == p("4+2*x"));
  CHECK(stat_poly("permutation", {}, 3, {{"lpk", X}}) == p("1+5*x"));
  // empty statistic list counts the objects
  CHECK(stat_poly("permutation", {}, 4, {}) == Poly(24));
}

TEST_CASE("valley and double-descent joint distribution") {
  // gamma coefficients of A_4: des-polys of permutations with no double
  // descents and a given valley count, A_4 = x(1 + 8x + 3x^2 ... )
  Poly vd = stat_poly("permutation", {}, 4, {{"val", X}, {"dd", U}});
  Poly gamma0 = vd.coefficient_of(U, 0);
  CHECK(gamma0.coefficient_of(X, 0) == Poly(1));
  CHECK(gamma0.coefficient_of(X, 1) == Poly(8));
  Poly recon;
  for (int l = 0; 2 * l <= 3; ++l)
    recon += gamma0.coefficient_of(X, l) * Poly::var(X, l) *
             (Poly(1) + Poly::var(X)).pow(3 - 2 * l);
  CHECK(Poly::var(X) * recon == family("eulerianA", 4));
}

TEST_CASE("signed permutations") {
  CHECK(stat_poly("signedPermutation", {}, 2, {{"desB", X}}) ==
        p("1+6*x+x^2"));
  for (int n = 1; n <= 5; ++n)
    CHECK(stat_poly("signedPermutation", {}, n, {{"desB", X}}) ==
          family("eulerianB", n));
}

TEST_CASE("Stirling permutations") {
  CHECK(stat_poly("stirlingPermutation", {2}, 3, {{"des", X}}) ==
        p("x+8*x^2+6*x^3"));
  CHECK(stat_poly("stirlingPermutation", {2}, 3, {{"fap", X}}) ==
        p("x+3*x^2+7*x^3+3*x^4+x^5"));
  for (int n = 1; n <= 5; ++n) {
    CHECK(stat_poly("stirlingPermutation", {2}, n, {{"ap", X}}) ==
          family("kInvEulerian", n, 2));
    // des, asc and plat are equidistributed
    Poly d = stat_poly("stirlingPermutation", {2}, n, {{"des", X}});
    CHECK(stat_poly("stirlingPermutation", {2}, n, {{"asc", X}}) == d);
    CHECK(stat_poly("stirlingPermutation", {2}, n, {{"plat", X}}) == d);
  }
  for (int n = 1; n <= 5; ++n)
    CHECK(stat_poly("stirlingPermutation", {2}, n,
                    {{"des", X}, {"asc", Y}, {"plat", VarId("z")}}) ==
          family("secondOrderTri", n));
}

TEST_CASE("excedance-cycle joint distribution") {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 1; k <= 3; ++k) {
      Poly raw = stat_poly("permutation", {}, n, {{"exc", X}, {"cyc", U}});
      Poly out;
      for (const auto& [m, c] : raw.terms()) {
        Int scale = 1;
        for (int i = 0; i < n - m.exponent(U); ++i) scale *= k;
        out += Poly::term(c * scale, Monomial::var(X, m.exponent(X)));
      }
      CHECK(out == family("kInvEulerian", n, k));
    }
  }
}

TEST_CASE("multiset permutations") {
  CHECK(stat_poly("multisetPermutation", {2, 2}, 2, {{"des", X}}) ==
        p("1+4*x+x^2"));
  for (int n = 1; n <= 5; ++n) {
    std::vector<int> twos(static_cast<size_t>(n), 2);
    CHECK(stat_poly("multisetPermutation", twos, n, {{"des", X}}) ==
          family("multisetDescent2", n));
  }
}

TEST_CASE("rooted labeled trees") {
  Poly r4 = stat_poly("rootedLabeledTree", {}, 4, {{"improper", X}});
  CHECK(r4 == p("6+18*x+25*x^2+15*x^3"));
  // n^(n-1) rooted trees in total
  CHECK(r4.substitute({{X, Poly(1)}}) == Poly(64));
}

TEST_CASE("increasing 0-1-2 trees") {
  for (int n = 1; n <= 8; ++n)
    CHECK(stat_poly("incTree012", {}, n, {{"leaves", X}, {"deg1", Y}}) ==
          family("andre", n));
}

TEST_CASE("list partitions") {
  // n=2: [1,2] (2 ascents), [2,1] (1), {[1],[2]} (2 ascents, 2 lists)
  CHECK(stat_poly("listPartition", {}, 2, {{"asc", X}, {"lists", U}}) ==
        p("x^2*u + x*u + x^2*u^2"));
  // total count: sum over k of C(n-1,k-1) n!/k! (lists of lists)
  Poly c3 = stat_poly("listPartition", {}, 3, {});
  Int total = 0;
  for (int k = 1; k <= 3; ++k) total += number_table("lah", 3, k);
  CHECK(c3 == Poly(total));
}

TEST_CASE("alternating permutations") {
  const long expect[] = {1, 1, 1, 2, 5, 16, 61, 272};
  for (int n = 0; n <= 7; ++n) CHECK(alternating_count(n) == expect[n]);
  for (int n = 1; n <= 7; ++n)
    CHECK(family("andre", n).substitute({{X, Poly(1)}, {Y, Poly(1)}}) ==
          Poly(alternating_count(n)));
}

TEST_CASE("bounds and validation") {
  CHECK_THROWS_AS(stat_poly("permutation", {}, 12, {{"des", X}}), TooLarge);
  CHECK_THROWS_AS(stat_poly("permutation", {}, 3, {{"nope", X}}),
                  UnknownStatistic);
  CHECK_THROWS_AS(stat_poly("noSuchClass", {}, 3, {{"des", X}}),
                  UnknownClass);
}
