#ifndef YTAB_CORE_TABLEAUX_HPP
#define YTAB_CORE_TABLEAUX_HPP

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "normalorder.hpp"
#include "poly.hpp"

namespace ytab {

/// A standard Young tableau in French convention: rows[0] is the
/// bottom row; rows strictly increase left to right, columns strictly
/// increase bottom to top, row lengths weakly decrease bottom to top.
class Tableau {
 public:
  Tableau() = default;
  explicit Tableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int size() const;
  int row_count() const { return static_cast<int>(rows_.size()); }
  Partition shape() const;
  bool valid() const;

  /// Sizes of the nonempty columns of T_i (the tableau restricted to
  /// entries <= i).
  std::vector<int> col_profile(int i) const;

  /// Box sorting index of entry i at operator order m:
  ///   first column:  m*i - col_1(T_i) - (m-2)
  ///   column j+1:    col_j(T_i) - col_(j+1)(T_i) + 1
  Int box_index(int i, int m) const;

  /// w_i(T) = number of rows with i entries, for i = 1..n; plus the
  /// total row count.
  std::vector<int> row_length_counts() const;

  std::set<int> descent_set() const;
  int descent_count() const;

  /// Text form: rows bottom-to-top joined by '/', e.g. "1,3/2".
  std::string str() const;

  bool operator==(const Tableau&) const = default;
  bool operator<(const Tableau& o) const { return rows_ < o.rows_; }

 private:
  std::vector<std::vector<int>> rows_;
  // column j (0-based) of entries <= i has size = count of entries <= i
  // among rows' j-th cells; computed on demand.
};

/// Stream every SYT of size n (at most max_cols columns when given),
/// shapes in reverse-lex order, fillings in backtracking order.
void enumerate_syt(int n, int max_cols,
                   const std::function<void(const Tableau&)>& sink);
std::vector<Tableau> all_syt(int n, int max_cols = 0);

/// sum over SYT(n) of (prod_i box_index(T,i,m))
///                  * (prod_i jets(i)^(w_i(T)))
///                  * base^(m*n+1-rows(T)).
/// jets(i) may be zero, which prunes the corresponding shapes.
Poly syt_expansion(int n, int m, const Poly& base,
                   const std::function<Poly(int)>& jets);

/// sum over SYT(n) of (prod_i box_index(T,i,m)) * x^(rows(T)).
Poly syt_index_poly(int n, int m, const VarId& x);

Tableau parse_tableau(const std::string& text);

}  // namespace ytab

#endif
