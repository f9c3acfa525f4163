#ifndef YTAB_CORE_BOXSORT_HPP
#define YTAB_CORE_BOXSORT_HPP

#include <functional>
#include <string>
#include <vector>

#include "tableaux.hpp"

namespace ytab {

/// Ordered weak set partition of {1..n} at order m: exactly m*n+1
/// blocks (block 0 first), pairwise disjoint with union {1..n}.
/// 1 lies in block 0, and a nonempty block in slot range
/// {m*(i-1)+1 .. m*i} has minimum > i.
struct Owp {
  int order = 1;
  std::vector<std::vector<int>> blocks;  // each sorted ascending

  int size() const;  // n
  bool valid() const;

  /// Text form: blocks separated by '|', entries comma-separated,
  /// empty block written '-', e.g. "1,3|2|-|-".
  std::string str() const;

  bool operator==(const Owp&) const = default;
};

/// Stream every Owp of {1..n} at order m exactly once, generated by
/// the insertion process: element i enters one of the m*(i-1)+1 boxes
/// open at that point, then m new empty boxes open.
void enumerate_owp(int n, int m, const std::function<void(const Owp&)>& sink);
std::vector<Owp> all_owp(int n, int m);

/// prod over all m*n+1 blocks B of c[|B|], as a monomial Poly.
Poly owp_weight(const Owp& p);

/// Drop empty blocks, stable-sort rows by length decreasing bottom to
/// top, then sort each column ascending bottom to top.
Tableau phi(const Owp& p);

/// #{ p : phi(p) = T } over all Owps of size(T) at order m, by direct
/// enumeration.
Int fiber_count(const Tableau& t, int m);

Owp parse_owp(const std::string& text);

}  // namespace ytab

#endif
