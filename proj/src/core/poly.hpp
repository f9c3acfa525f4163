#ifndef YTAB_CORE_POLY_HPP
#define YTAB_CORE_POLY_HPP

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace ytab {

using Int = mpz_class;

struct PolyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonInvertibleSubstitution : PolyError {
  using PolyError::PolyError;
};
struct NotSymmetric : PolyError {
  using PolyError::PolyError;
};
struct NotHomogeneous : PolyError {
  using PolyError::PolyError;
};
struct ParseError : PolyError {
  using PolyError::PolyError;
};

/// A variable: a short name plus an optional nonnegative index,
/// so `x`, `c[0]` and `c[3]` are three distinct variables.
struct VarId {
  std::string name;
  int index = -1;  // -1 means "no index"

  VarId() = default;
  VarId(std::string n) : name(std::move(n)) {}
  VarId(std::string n, int i) : name(std::move(n)), index(i) {}

  auto operator<=>(const VarId&) const = default;

  std::string str() const;
};

/// Exponent vector; negative exponents are allowed (Laurent terms).
/// Zero exponents are never stored.
class Monomial {
 public:
  Monomial() = default;
  static Monomial var(const VarId& v, int e = 1);

  const std::map<VarId, int>& exponents() const { return exps_; }
  int exponent(const VarId& v) const;
  void set_exponent(const VarId& v, int e);
  int total_degree() const;
  bool is_unit() const { return exps_.empty(); }

  Monomial operator*(const Monomial& o) const;
  Monomial inverse() const;  // negate all exponents
  Monomial pow(int e) const;

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
  /// Graded lexicographic order: total degree first, then exponents
  /// compared variable by variable in VarId order.
  bool operator<(const Monomial& o) const;

 private:
  std::map<VarId, int> exps_;
};

/// Exact multivariate Laurent polynomial with arbitrary-precision
/// integer coefficients. Immutable in spirit: all operations return
/// new values. Zero coefficients are never stored.
class Poly {
 public:
  Poly() = default;
  Poly(long c);
  Poly(const Int& c);
  static Poly var(const VarId& v, int e = 1);
  static Poly term(const Int& c, const Monomial& m);

  const std::map<Monomial, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (zero if absent).
  Int constant_term() const;
  size_t term_count() const { return terms_.size(); }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

  /// Integer power; e < 0 requires an invertible value (single term
  /// with coefficient +-1).
  Poly pow(int e) const;

  /// Formal partial derivative with respect to v (valid for Laurent
  /// exponents: e becomes factor e with exponent e-1).
  Poly derivative(const VarId& v) const;

  /// Simultaneous substitution, fully expanded. Variables not bound
  /// stay as themselves. A variable occurring with a negative exponent
  /// must map to an invertible value.
  Poly substitute(const std::map<VarId, Poly>& bindings) const;

  /// The polynomial multiplying v^e, with v removed.
  Poly coefficient_of(const VarId& v, int e) const;

  /// Degree in a single variable (max exponent; 0 for absent/zero).
  int degree_in(const VarId& v) const;
  int min_exponent_in(const VarId& v) const;

  /// All variables occurring in the polynomial.
  std::vector<VarId> variables() const;

  /// Exact division by a nonzero polynomial; throws PolyError if the
  /// quotient is not exact. Intended for the checked integral divisions
  /// (factorials, powers of two, single monomials).
  Poly divide_exact(const Poly& divisor) const;

  /// Truncated power series of p/(1-v)^m to order `truncation`.
  /// Requires p polynomial (no negative exponents) in v.
  Poly series_quotient(const VarId& v, int m, int truncation) const;

  void add_term(const Int& c, const Monomial& m);

  std::string str() const;
  std::string latex() const;
  std::string json() const;

 private:
  std::map<Monomial, Int> terms_;
};

Poly operator*(const Int& c, const Poly& p);

/// Gamma expansion: p homogeneous of degree d in {x,y}, symmetric under
/// swapping x and y; returns the unique gamma_i with
///   p = sum_i gamma_i (xy)^i (x+y)^(d-2i).
/// Coefficients may involve other variables.
std::vector<std::pair<int, Poly>> gamma_expand(const Poly& p, const VarId& x,
                                               const VarId& y);

/// Elementary-symmetric expansion in three variables: p symmetric and
/// homogeneous in {x,y,z}; returns ((i,j,k), coeff) with
///   p = sum coeff * e1^i e2^j e3^k,  i+2j+3k = deg(p).
std::vector<std::pair<std::array<int, 3>, Int>> e_expand(const Poly& p,
                                                         const VarId& x,
                                                         const VarId& y,
                                                         const VarId& z);

/// Parse the textual polynomial syntax, e.g. "x*y^2 + 4*x^2*y - c[1]^3".
Poly parse_poly(const std::string& text);

Int binomial(long n, long k);
Int factorial(long n);

}  // namespace ytab

#endif
