#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "core/families.hpp"
#include "core/normalorder.hpp"

using namespace ytab;

namespace {

Poly p(const std::string& s) { return parse_poly(s); }

}  // namespace

TEST_CASE("partitions_of") {
  CHECK(partitions_of(0).size() == 1);
  CHECK(partitions_of(0)[0].parts.empty());
  auto p4 = partitions_of(4);
  REQUIRE(p4.size() == 5);
  // reverse-lex: largest part first
  CHECK(p4.front().parts == std::vector<int>{4});
  CHECK(p4.back().parts == std::vector<int>{1, 1, 1, 1});
  CHECK(partitions_of(6).size() == 11);
  for (const auto& q : p4) {
    CHECK(q.size() == 4);
    CHECK(std::is_sorted(q.parts.rbegin(), q.parts.rend()));
  }
}

TEST_CASE("iterated cD on f") {
  JetContext jc(5);
  CHECK(jc.cd_power_on_f(1) == p("c[0]*f[1]"));
  CHECK(jc.cd_power_on_f(3) ==
        p("c[0]*c[1]^2*f[1] + c[0]^2*c[2]*f[1] + 3*c[0]^2*c[1]*f[2] "
          "+ c[0]^3*f[3]"));
  CHECK(jc.cd_power_on_f(4).coefficient_of(JetContext::f(1), 1) ==
        p("c[0]*c[1]^3 + 4*c[0]^2*c[1]*c[2] + c[0]^3*c[3]"));
}

TEST_CASE("iterated c^k D on c") {
  JetContext jc(8);
  CHECK(jc.ckd_power_on_c(2, 1) == p("c[0]^2*c[1]"));
  CHECK(jc.ckd_power_on_c(1, 2) == p("c[0]*c[1]^2 + c[0]^2*c[2]"));
  CHECK(jc.ckd_power_on_c(2, 3) ==
        p("c[0]^6*c[3] + 8*c[0]^5*c[2]*c[1] + 6*c[0]^4*c[1]^3"));
}

TEST_CASE("coefficient extraction") {
  JetContext jc(8);
  CHECK(jc.extract_F(2, 2) == p("c[0]^2"));
  for (int n = 1; n <= 6; ++n)
    CHECK(jc.extract_F(n, n) == Poly::var(JetContext::c(0), n));
  CHECK(jc.extract_F(4, 2) == p("7*c[0]^2*c[1]^2 + 4*c[0]^3*c[2]"));
  CHECK_THROWS_AS(jc.extract_F(3, 4), OutOfRange);
}

TEST_CASE("partition coefficients") {
  JetContext jc(6);
  CHECK(jc.extract_a(4, Partition({1, 1})) == 7);
  CHECK(jc.extract_a(4, Partition({2, 1})) == 4);
  for (int n = 1; n <= 6; ++n) CHECK(jc.extract_a(n, Partition()) == 1);
  CHECK_THROWS_AS(jc.extract_a(3, Partition({3})), OutOfRange);
}

TEST_CASE("projections match the classical triangles") {
  JetContext jc(9);
  CHECK(jc.project(JetContext::Projection::kStirling2, 4, 2) == 7);
  CHECK(jc.project(JetContext::Projection::kEulerian, 4, 2) == 11);
  for (int n = 1; n <= 8; ++n) {
    CHECK(jc.project(JetContext::Projection::kStirling1, n, n) == 1);
    for (int k = 1; k <= n; ++k) {
      CHECK(jc.project(JetContext::Projection::kStirling1, n, k) ==
            number_table("stirling1", n, k));
      CHECK(jc.project(JetContext::Projection::kStirling2, n, k) ==
            number_table("stirling2", n, k));
      CHECK(jc.project(JetContext::Projection::kEulerian, n, k) ==
            number_table("eulerianNum", n, k));
    }
  }
}

TEST_CASE("F recurrences") {
  JetContext jc(10);
  const Grammar& d = jc.grammar();
  for (int n = 1; n <= 8; ++n) {
    Poly c0 = Poly::var(JetContext::c(0));
    CHECK(jc.extract_F(n + 1, 1) == c0 * d.derive(jc.extract_F(n, 1)));
    for (int k = 2; k <= n; ++k)
      CHECK(jc.extract_F(n + 1, k) ==
            c0 * jc.extract_F(n, k - 1) + c0 * d.derive(jc.extract_F(n, k)));
  }
}

TEST_CASE("all-ones evaluation counts insertion slots") {
  for (int k = 1; k <= 3; ++k) {
    for (int n = 1; n <= 6; ++n) {
      JetContext jc(k * n + 1);
      Poly v = jc.ckd_power_on_c(k, n);
      std::map<VarId, Poly> ones;
      for (int i = 0; i <= k * n + 1; ++i) ones[JetContext::c(i)] = Poly(1);
      Int expect = 1;
      for (int i = 1; i <= n; ++i) expect *= k * (i - 1) + 1;
      CHECK(v.substitute(ones) == Poly(expect));
    }
  }
}
