#include "normalorder.hpp"

#include <algorithm>
#include <numeric>

namespace ytab {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (int x : parts)
    if (x <= 0) throw OutOfRange("partition parts must be positive");
  if (!std::is_sorted(parts.rbegin(), parts.rend()))
    throw OutOfRange("partition parts must be weakly decreasing");
}

int Partition::size() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

int Partition::length() const { return static_cast<int>(parts.size()); }

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      Partition p;
      p.parts = cur;
      out.push_back(std::move(p));
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  if (n >= 0) rec(rec, n, n == 0 ? 1 : n);
  return out;
}

JetContext::JetContext(int max_index) : max_index_(max_index) {
  IndexedRule rc;
  rc.family = "c";
  rc.terms.push_back({1, {{.name = "c", .indexed = true, .offset = 1}}});
  IndexedRule rf;
  rf.family = "f";
  rf.terms.push_back({1, {{.name = "f", .indexed = true, .offset = 1}}});
  jets_.add_indexed_rule(std::move(rc));
  jets_.add_indexed_rule(std::move(rf));
  jets_.set_max_index(max_index + 1);
}

Poly JetContext::cd_power_on_f(int n) const {
  if (n < 1) throw OutOfRange("cd_power_on_f requires n >= 1");
  if (n > max_index_) throw OutOfRange("n exceeds the jet index bound");
  Poly p = Poly::var(f(0));
  Poly c0 = Poly::var(c(0));
  for (int i = 0; i < n; ++i) p = c0 * jets_.derive(p);
  return p;
}

Poly JetContext::ckd_power_on_c(int k, int n) const {
  if (k < 1 || n < 1) throw OutOfRange("ckd_power_on_c requires k,n >= 1");
  if (n > max_index_) throw OutOfRange("n exceeds the jet index bound");
  Poly p = Poly::var(c(0));
  Poly weight = Poly::var(c(0), k);
  for (int i = 0; i < n; ++i) p = weight * jets_.derive(p);
  return p;
}

Poly JetContext::extract_F(int n, int k) const {
  if (k < 1 || k > n) throw OutOfRange("extract_F requires 1 <= k <= n");
  return cd_power_on_f(n).coefficient_of(f(k), 1);
}

Int JetContext::extract_a(int n, const Partition& lambda) const {
  if (lambda.size() > n - 1)
    throw OutOfRange("extract_a requires |lambda| <= n-1");
  Poly fnk = extract_F(n, n - lambda.size());
  Monomial m = Monomial::var(c(0), n - lambda.length());
  for (int part : lambda.parts)
    m.set_exponent(c(part), m.exponent(c(part)) + 1);
  auto it = fnk.terms().find(m);
  return it == fnk.terms().end() ? Int(0) : it->second;
}

Int JetContext::project(Projection kind, int n, int k) const {
  if (k < 1 || k > n) throw OutOfRange("project requires 1 <= k <= n");
  Int total = 0;
  switch (kind) {
    case Projection::kStirling1:
      for (const auto& lambda : partitions_of(n - k))
        total += extract_a(n, lambda);
      break;
    case Projection::kStirling2:
      total = extract_a(
          n, Partition(std::vector<int>(static_cast<size_t>(n - k), 1)));
      break;
    case Projection::kEulerian:
      // Sum of a(n,lambda) over all partitions with exactly n-k parts,
      // across every size |lambda| <= n-1.
      for (int m = 0; m <= n - 1; ++m)
        for (const auto& lambda : partitions_of(m))
          if (lambda.length() == n - k) total += extract_a(n, lambda);
      break;
  }
  return total;
}

}  // namespace ytab
