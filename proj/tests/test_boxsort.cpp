#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>

#include "core/boxsort.hpp"
#include "core/normalorder.hpp"

using namespace ytab;

namespace {

Poly p(const std::string& s) { return parse_poly(s); }

Poly weight_sum(int n, int m) {
  Poly total;
  enumerate_owp(n, m, [&](const Owp& q) { total += owp_weight(q); });
  return total;
}

}  // namespace

TEST_CASE("enumeration basics") {
  auto one = all_owp(1, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].blocks == std::vector<std::vector<int>>{{1}, {}});
  CHECK(one[0].valid());

  auto three = all_owp(3, 1);
  CHECK(three.size() == 6);
  std::map<std::string, int> fibers;
  for (const auto& q : three) {
    CHECK(q.valid());
    ++fibers[phi(q).str()];
  }
  REQUIRE(fibers.size() == 4);
  CHECK(fibers["1,2,3"] == 1);
  CHECK(fibers["1,3/2"] == 2);
  CHECK(fibers["1,2/3"] == 2);
  CHECK(fibers["1/2/3"] == 1);

  CHECK(all_owp(3, 2).size() == 15);
  CHECK(weight_sum(3, 2) ==
        p("c[0]^6*c[3] + 8*c[0]^5*c[2]*c[1] + 6*c[0]^4*c[1]^3"));
}

TEST_CASE("cardinalities") {
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 5; ++n) {
      Int expect = 1;
      for (int i = 1; i <= n; ++i) expect *= m * (i - 1) + 1;
      Int count = 0;
      enumerate_owp(n, m, [&](const Owp&) { ++count; });
      CHECK(count == expect);
    }
  }
}

TEST_CASE("weights") {
  Owp q{1, {{1}, {}}};
  CHECK(owp_weight(q) == p("c[0]*c[1]"));
  Owp q2{1, {{1, 2}, {}, {}}};
  CHECK(owp_weight(q2) == p("c[0]^2*c[2]"));
  Owp sing{1, {{1}, {2}, {3}, {}}};
  CHECK(owp_weight(sing) == p("c[0]*c[1]^3"));
}

TEST_CASE("the sorting map") {
  CHECK(phi(Owp{1, {{1, 3}, {2}, {}, {}}}) == parse_tableau("1,3/2"));
  CHECK(phi(Owp{1, {{1, 2, 3}, {}, {}, {}}}) == parse_tableau("1,2,3"));
  // column re-sort pulls the smaller entry down
  CHECK(phi(Owp{1, {{1}, {2, 3}, {}, {}}}) == parse_tableau("1,3/2"));
}

TEST_CASE("fiber counts") {
  CHECK(fiber_count(parse_tableau("1,2,3"), 1) == 1);
  CHECK(fiber_count(parse_tableau("1,3/2"), 1) == 2);
  CHECK(fiber_count(parse_tableau("1,2/3"), 1) == 2);

  for (int m = 1; m <= 2; ++m) {
    for (int n = 1; n <= (m == 1 ? 6 : 5); ++n) {
      for (const auto& t : all_syt(n)) {
        Int prod = 1;
        for (int i = 1; i <= n; ++i) prod *= t.box_index(i, m);
        CHECK(fiber_count(t, m) == prod);
      }
    }
  }
}

TEST_CASE("weight sums equal the jet expansion") {
  for (int m = 1; m <= 3; ++m) {
    int hi = m == 1 ? 7 : (m == 2 ? 6 : 5);
    for (int n = 1; n <= hi; ++n) {
      JetContext jc(n + 1);
      CHECK(weight_sum(n, m) == jc.ckd_power_on_c(m, n));
    }
  }
}

TEST_CASE("weight is preserved by the sorting map") {
  for (int m = 1; m <= 2; ++m) {
    int n = 4;
    enumerate_owp(n, m, [&](const Owp& q) {
      Tableau t = phi(q);
      auto w = t.row_length_counts();
      Poly tw = Poly::var(JetContext::c(0),
                          m * n + 1 - t.row_count());
      for (int i = 1; i <= n; ++i)
        if (w[static_cast<size_t>(i)] > 0)
          tw *= Poly::var(JetContext::c(i), w[static_cast<size_t>(i)]);
      CHECK(owp_weight(q) == tw);
    });
  }
}

TEST_CASE("the sorting map ignores order of equal-length blocks") {
  enumerate_owp(4, 1, [&](const Owp& q) {
    Tableau base = phi(q);
    // swap every pair of equal-length nonempty blocks
    for (size_t i = 0; i < q.blocks.size(); ++i) {
      for (size_t j = i + 1; j < q.blocks.size(); ++j) {
        if (q.blocks[i].empty() || q.blocks[j].empty()) continue;
        if (q.blocks[i].size() != q.blocks[j].size()) continue;
        Owp swapped = q;
        std::swap(swapped.blocks[i], swapped.blocks[j]);
        CHECK(phi(swapped) == base);
      }
    }
  });
}

TEST_CASE("text form") {
  Owp q{1, {{1, 3}, {2}, {}, {}}};
  CHECK(q.str() == "1,3|2|-|-");
  CHECK(parse_owp("1,3|2|-|-") == q);
  CHECK_THROWS_AS(parse_owp("2|1|-|-"), PolyError);  // 1 not in block 0
}
