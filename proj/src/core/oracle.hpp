#ifndef YTAB_CORE_ORACLE_HPP
#define YTAB_CORE_ORACLE_HPP

#include <string>
#include <utility>
#include <vector>

#include "poly.hpp"

namespace ytab {

struct TooLarge : PolyError {
  using PolyError::PolyError;
};
struct UnknownStatistic : PolyError {
  using PolyError::PolyError;
};
struct UnknownClass : PolyError {
  using PolyError::PolyError;
};

/// Sum over all objects of the class of prod stat_variable^statistic.
///
/// Classes and their statistics (boundary conventions noted inline):
///   permutation (no params):
///     des   descents, positions 1..n-1
///     des1  des + 1
///     exc   excedances p(i) > i
///     cyc   cycle count
///     ipk   interior peaks, positions 2..n-1
///     lpk   left peaks, positions 1..n-1 with p(0) = 0
///     val   interior valleys, positions 2..n-1
///     dd    double descents p(i-1) > p(i) > p(i+1) with
///           p(0) = p(n+1) = 0
///   signedPermutation (no params):
///     desB  descents over 0..n-1 with p(0) = 0
///   stirlingPermutation (params {k}; word length k*n):
///     des   descents including the final position (trailing 0)
///     asc   ascents including position 0 (leading 0)
///     plat  plateaus s(i) = s(i+1)
///     ap    ascent-plateaus s(i-1) < s(i) = s(i+1), interior only
///     lap   left ascent-plateaus, same with leading 0 allowed
///     fap   flag ascent-plateaus = ap + lap
///   multisetPermutation (params = multiplicities):
///     des   plain descents, no trailing convention
///   listPartition (no params):
///     lists number of lists
///     asc   ascents with a leading 0 on every list
///   rootedLabeledTree (no params):
///     improper  edges whose lower subtree contains a vertex smaller
///               than the parent
///   incTree012 (no params; increasing trees, every node has at most
///   two children):
///     leaves  nodes with no child
///     deg1    nodes with exactly one child
Poly stat_poly(const std::string& cls, const std::vector<int>& params, int n,
               const std::vector<std::pair<std::string, VarId>>& stats);

/// Count of up-down alternating permutations p(1) < p(2) > p(3) < ...
Int alternating_count(int n);

}  // namespace ytab

#endif
