#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "core/families.hpp"
#include "core/normalorder.hpp"
#include "core/tableaux.hpp"

using namespace ytab;

namespace {

const VarId X("x");

Poly p(const std::string& s) { return parse_poly(s); }

}  // namespace

TEST_CASE("enumeration counts match involution numbers") {
  const int involutions[] = {1, 2, 4, 10, 26, 76, 232, 764};
  for (int n = 1; n <= 8; ++n) {
    auto ts = all_syt(n);
    CHECK(static_cast<int>(ts.size()) == involutions[n - 1]);
    for (const auto& t : ts) {
      CHECK(t.valid());
      CHECK(t.size() == n);
    }
  }
  CHECK(all_syt(3, 2).size() == 3);  // shape (3) excluded
}

TEST_CASE("column profiles") {
  Tableau col = parse_tableau("1/2/3");
  CHECK(col.col_profile(2) == std::vector<int>{2});
  Tableau hook = parse_tableau("1,3/2");
  CHECK(hook.col_profile(3) == std::vector<int>{2, 1});
  Tableau row = parse_tableau("1,2,3");
  CHECK(row.col_profile(3) == std::vector<int>{1, 1, 1});
}

TEST_CASE("box indices") {
  Tableau hook = parse_tableau("1,3/2");
  CHECK(hook.box_index(1, 1) == 1);
  CHECK(hook.box_index(2, 1) == 1);
  CHECK(hook.box_index(3, 1) == 2);

  Tableau col = parse_tableau("1/2/3");
  CHECK(col.box_index(1, 2) == 1);
  CHECK(col.box_index(2, 2) == 2);
  CHECK(col.box_index(3, 2) == 3);

  for (int n = 1; n <= 5; ++n) {
    std::vector<int> entries(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) entries[static_cast<size_t>(i)] = i + 1;
    Tableau row({entries});
    for (int i = 1; i <= n; ++i) CHECK(row.box_index(i, 1) == 1);
  }
}

TEST_CASE("box indices are positive") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& t : all_syt(n))
      for (int m = 1; m <= 3; ++m)
        for (int i = 1; i <= n; ++i) CHECK(t.box_index(i, m) >= 1);
}

TEST_CASE("row length counts") {
  Tableau row = parse_tableau("1,2,3");
  auto w = row.row_length_counts();
  CHECK(w[3] == 1);
  CHECK(row.row_count() == 1);

  Tableau hook = parse_tableau("1,3/2");
  w = hook.row_length_counts();
  CHECK(w[1] == 1);
  CHECK(w[2] == 1);

  Tableau col = parse_tableau("1/2/3");
  CHECK(col.row_length_counts()[1] == 3);
  CHECK(col.shape().parts == std::vector<int>{1, 1, 1});
}

TEST_CASE("descents") {
  CHECK(parse_tableau("1,2,3").descent_set().empty());
  CHECK(parse_tableau("1/2/3").descent_set() == std::set<int>{1, 2});
  CHECK(parse_tableau("1,3/2").descent_set() == std::set<int>{1});
  CHECK(parse_tableau("1,2/3").descent_count() == 1);
}

TEST_CASE("index products sum to counting sequences") {
  // sum over SYT(n) of prod sigma_i = n!
  for (int n = 1; n <= 8; ++n) {
    Int sum = 0;
    enumerate_syt(n, 0, [&](const Tableau& t) {
      Int prod = 1;
      for (int i = 1; i <= n; ++i) prod *= t.box_index(i, 1);
      sum += prod;
    });
    CHECK(sum == factorial(n));
  }
  // sum of prod delta_i = (2n-1)!!
  for (int n = 1; n <= 7; ++n) {
    Int sum = 0, dfact = 1;
    for (int i = 1; i <= n; ++i) dfact *= 2 * i - 1;
    enumerate_syt(n, 0, [&](const Tableau& t) {
      Int prod = 1;
      for (int i = 1; i <= n; ++i) prod *= t.box_index(i, 2);
      sum += prod;
    });
    CHECK(sum == dfact);
  }
}

TEST_CASE("tableau expansions") {
  JetContext jc(4);
  Poly viaSyt = syt_expansion(3, 1, Poly::var(JetContext::c(0)), [](int i) {
    return Poly::var(JetContext::c(i));
  });
  CHECK(viaSyt == jc.ckd_power_on_c(1, 3));

  CHECK(syt_expansion(3, 1, Poly(1), [](int) { return Poly::var(X); }) ==
        p("x+4*x^2+x^3"));
  CHECK(syt_index_poly(3, 1, X) == p("x+4*x^2+x^3"));
  CHECK(syt_index_poly(3, 2, X) == p("x+8*x^2+6*x^3"));
}

TEST_CASE("tableau text form") {
  Tableau hook = parse_tableau("1,3/2");
  CHECK(hook.str() == "1,3/2");
  CHECK(parse_tableau(hook.str()) == hook);
  CHECK_THROWS_AS(parse_tableau("2,3/1"), PolyError);  // not standard
}
