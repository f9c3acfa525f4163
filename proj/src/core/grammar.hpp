#ifndef YTAB_CORE_GRAMMAR_HPP
#define YTAB_CORE_GRAMMAR_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "poly.hpp"

namespace ytab {

struct UnknownVariable : PolyError {
  using PolyError::PolyError;
};
struct IndexCapExceeded : PolyError {
  using PolyError::PolyError;
};

/// One rule of an indexed family, e.g.  c[i] -> c[i+1]  or
/// x[i] -> x[0]*x[i+1].  The image is a sum of terms whose factors may
/// reference the bound index with an offset.
struct IndexedRule {
  std::string family;  // variable name the rule applies to

  struct Factor {
    std::string name;
    bool indexed = false;    // references the bound index i
    int offset = 0;          // i + offset (when indexed)
    int literal_index = -1;  // fixed index (when !indexed; -1 = plain var)
    int exponent = 1;
  };
  struct Term {
    Int coeff = 1;
    std::vector<Factor> factors;
  };
  std::vector<Term> terms;

  Poly instantiate(int i) const;
};

/// A substitution-rule set defining a formal derivative. Rules are a
/// finite table plus optional indexed families; variables may also be
/// declared inert (image 0).
class Grammar {
 public:
  Grammar() = default;

  void add_rule(const VarId& v, Poly image);
  void add_indexed_rule(IndexedRule rule);
  void declare_inert(const VarId& v);
  void set_max_index(int m) { max_index_ = m; }
  int max_index() const { return max_index_; }

  bool covers(const VarId& v) const;
  /// Image of a single variable; throws UnknownVariable if not covered,
  /// IndexCapExceeded if an indexed rule would step past the cap.
  Poly image(const VarId& v) const;

  /// Formal derivative: linear extension of the rules by the product
  /// rule on monomials (valid for Laurent exponents).
  Poly derive(const Poly& p) const;
  Poly derive_n(const Poly& p, int n) const;

 private:
  std::map<VarId, Poly> rules_;
  std::map<std::string, IndexedRule> indexed_;
  int max_index_ = 64;
};

/// Parse the grammar text syntax: semicolon-separated `var -> poly`
/// rules, with indexed families written with the literal token `i`,
/// e.g. "a -> a*b; b -> b" or "c[i] -> c[i+1]".
Grammar parse_grammar(const std::string& text);

/// A normal-ordered operator: finite map order k -> coefficient
/// polynomial, standing for  sum_k P_k * D_G^k.
class NormalOp {
 public:
  const std::map<int, Poly>& by_order() const { return coeffs_; }
  Poly coefficient(int k) const;
  void set(int k, Poly p);
  bool operator==(const NormalOp& o) const { return coeffs_ == o.coeffs_; }

 private:
  std::map<int, Poly> coeffs_;
};

/// Normal-ordered form of (w * D_G)^n, coefficients stored with the
/// weight absorbed: (w D)^n = sum_k P_k D^k.
NormalOp op_power(const Grammar& g, const Poly& w, int n);

/// Apply a normal-ordered operator: sum_k P_k * derive_n(target, k).
Poly op_apply(const Grammar& g, const NormalOp& op, const Poly& target);

/// Recover the reduced coefficient xi_k of P_k = xi_k * w^k for a
/// single-monomial weight (checked division).
Poly op_weight_coefficient(const NormalOp& op, int k, const Poly& w);

}  // namespace ytab

#endif
