#ifndef YTAB_CORE_NORMALORDER_HPP
#define YTAB_CORE_NORMALORDER_HPP

#include <vector>

#include "grammar.hpp"
#include "poly.hpp"

namespace ytab {

struct OutOfRange : PolyError {
  using PolyError::PolyError;
};

/// Integer partition: weakly decreasing list of positive parts. The
/// empty partition is allowed.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int size() const;    // |lambda|
  int length() const;  // number of parts
  bool operator==(const Partition&) const = default;
  bool operator<(const Partition& o) const { return parts < o.parts; }
};

/// All partitions of n (n >= 0), in reverse-lexicographic order.
std::vector<Partition> partitions_of(int n);

/// The jet grammar {c[i] -> c[i+1], f[i] -> f[i+1]} over indices
/// 0..max_index.
class JetContext {
 public:
  explicit JetContext(int max_index);

  const Grammar& grammar() const { return jets_; }
  static VarId c(int i) { return VarId("c", i); }
  static VarId f(int i) { return VarId("f", i); }

  /// (cD)^n f as a polynomial in c[0..n-1], f[1..n].
  Poly cd_power_on_f(int n) const;
  /// (c^k D)^n c as a polynomial in c[0..n].
  Poly ckd_power_on_c(int k, int n) const;

  /// Coefficient of f[k] in (cD)^n f.
  Poly extract_F(int n, int k) const;
  /// Coefficient of c^(n-len(lambda)) * prod c[lambda_i] in F_{n,n-|lambda|}.
  Int extract_a(int n, const Partition& lambda) const;

  enum class Projection { kStirling1, kStirling2, kEulerian };
  Int project(Projection kind, int n, int k) const;

 private:
  Grammar jets_;
  int max_index_;
};

}  // namespace ytab

#endif
