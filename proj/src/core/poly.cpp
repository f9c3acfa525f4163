#include "poly.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace ytab {

std::string VarId::str() const {
  if (index < 0) return name;
  return name + "[" + std::to_string(index) + "]";
}

Monomial Monomial::var(const VarId& v, int e) {
  Monomial m;
  if (e != 0) m.exps_[v] = e;
  return m;
}

int Monomial::exponent(const VarId& v) const {
  auto it = exps_.find(v);
  return it == exps_.end() ? 0 : it->second;
}

void Monomial::set_exponent(const VarId& v, int e) {
  if (e == 0)
    exps_.erase(v);
  else
    exps_[v] = e;
}

int Monomial::total_degree() const {
  int d = 0;
  for (const auto& [v, e] : exps_) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r = *this;
  for (const auto& [v, e] : o.exps_) r.set_exponent(v, r.exponent(v) + e);
  return r;
}

Monomial Monomial::inverse() const {
  Monomial r;
  for (const auto& [v, e] : exps_) r.exps_[v] = -e;
  return r;
}

Monomial Monomial::pow(int e) const {
  Monomial r;
  if (e == 0) return r;
  for (const auto& [v, k] : exps_) r.exps_[v] = k * e;
  return r;
}

bool Monomial::operator<(const Monomial& o) const {
  int da = total_degree(), db = o.total_degree();
  if (da != db) return da < db;
  // Lex walk over the union of variables in VarId order; larger
  // exponent on an earlier variable means a larger monomial.
  auto a = exps_.begin(), b = o.exps_.begin();
  while (a != exps_.end() || b != o.exps_.end()) {
    if (a == exps_.end()) {
      // *this lacks b->first: its exponent there is 0.
      return b->second > 0;
    }
    if (b == o.exps_.end()) return a->second < 0;
    if (a->first != b->first) {
      if (a->first < b->first) return a->second < 0;
      return b->second > 0;
    }
    if (a->second != b->second) return a->second < b->second;
    ++a;
    ++b;
  }
  return false;
}

Poly::Poly(long c) {
  if (c != 0) terms_[Monomial()] = c;
}

Poly::Poly(const Int& c) {
  if (c != 0) terms_[Monomial()] = c;
}

Poly Poly::var(const VarId& v, int e) {
  return term(1, Monomial::var(v, e));
}

Poly Poly::term(const Int& c, const Monomial& m) {
  Poly p;
  if (c != 0) p.terms_[m] = c;
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

Int Poly::constant_term() const {
  auto it = terms_.find(Monomial());
  return it == terms_.end() ? Int(0) : it->second;
}

void Poly::add_term(const Int& c, const Monomial& m) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_[m] = c;
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  r += o;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(c, m);
  return *this;
}

Poly Poly::operator-() const {
  Poly r;
  for (const auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  r -= o;
  return r;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(-c, m);
  return *this;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(ca * cb, ma * mb);
  return r;
}

Poly operator*(const Int& c, const Poly& p) {
  Poly r;
  if (c == 0) return r;
  for (const auto& [m, k] : p.terms()) r.add_term(c * k, m);
  return r;
}

Poly Poly::pow(int e) const {
  if (e == 0) return Poly(1);
  if (e < 0) {
    if (terms_.size() != 1)
      throw NonInvertibleSubstitution("negative power of a non-monomial");
    const auto& [m, c] = *terms_.begin();
    if (c != 1 && c != -1)
      throw NonInvertibleSubstitution(
          "negative power requires unit coefficient");
    Int cc = (e % 2 == 0) ? Int(1) : c;
    return term(cc, m.pow(e));
  }
  Poly base = *this, r(1);
  int k = e;
  while (k > 0) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

Poly Poly::derivative(const VarId& v) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    int e = m.exponent(v);
    if (e == 0) continue;
    Monomial d = m;
    d.set_exponent(v, e - 1);
    r.add_term(c * e, d);
  }
  return r;
}

Poly Poly::substitute(const std::map<VarId, Poly>& bindings) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    Poly t(c);
    for (const auto& [v, e] : m.exponents()) {
      auto it = bindings.find(v);
      if (it == bindings.end()) {
        t = t * Poly::var(v, e);
      } else if (e >= 0) {
        t = t * it->second.pow(e);
      } else {
        if (it->second.term_count() != 1)
          throw NonInvertibleSubstitution("variable " + v.str() +
                                          " occurs with negative exponent; "
                                          "image must be a single unit term");
        t = t * it->second.pow(e);  // pow() enforces unit coefficient
      }
    }
    r += t;
  }
  return r;
}

Poly Poly::coefficient_of(const VarId& v, int e) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    if (m.exponent(v) != e) continue;
    Monomial d = m;
    d.set_exponent(v, 0);
    r.add_term(c, d);
  }
  return r;
}

int Poly::degree_in(const VarId& v) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
  return d;
}

int Poly::min_exponent_in(const VarId& v) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::min(d, m.exponent(v));
  return d;
}

std::vector<VarId> Poly::variables() const {
  std::set<VarId> vs;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.exponents()) vs.insert(v);
  return {vs.begin(), vs.end()};
}

Poly Poly::divide_exact(const Poly& divisor) const {
  if (divisor.is_zero()) throw PolyError("division by zero");
  // Single-term divisor: divide each term, checking exactness.
  if (divisor.term_count() == 1) {
    const auto& [dm, dc] = *divisor.terms_.begin();
    Poly r;
    Monomial inv = dm.inverse();
    for (const auto& [m, c] : terms_) {
      Int q, rem;
      mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), c.get_mpz_t(),
                  dc.get_mpz_t());
      if (rem != 0) throw PolyError("inexact coefficient division");
      r.add_term(q, m * inv);
    }
    return r;
  }
  // General long division by the leading term; must terminate exactly.
  Poly rem = *this, quot;
  auto lead = std::prev(divisor.terms_.end());
  while (!rem.is_zero()) {
    auto rl = std::prev(rem.terms_.end());
    Int q, rr;
    mpz_tdiv_qr(q.get_mpz_t(), rr.get_mpz_t(), rl->second.get_mpz_t(),
                lead->second.get_mpz_t());
    if (rr != 0) throw PolyError("inexact division");
    Monomial mq = rl->first * lead->first.inverse();
    Poly t = term(q, mq);
    quot += t;
    rem -= t * divisor;
    if (!rem.is_zero() && !(std::prev(rem.terms_.end())->first < rl->first))
      throw PolyError("inexact division");
  }
  return quot;
}

Poly Poly::series_quotient(const VarId& v, int m, int truncation) const {
  if (min_exponent_in(v) < 0)
    throw PolyError("series_quotient requires nonnegative exponents in " +
                    v.str());
  Poly r;
  for (int t = 0; t <= truncation; ++t) {
    Poly coeff;
    for (int s = 0; s <= t; ++s) {
      Poly ps = coefficient_of(v, s);
      if (ps.is_zero()) continue;
      coeff += binomial(t - s + m - 1, m - 1) * ps;
    }
    r += coeff * Poly::var(v, 1).pow(t);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Positivity basis changes

std::vector<std::pair<int, Poly>> gamma_expand(const Poly& p, const VarId& x,
                                               const VarId& y) {
  // Collect Q_{a,b} with p = sum x^a y^b Q_{a,b}(rest).
  std::map<std::pair<int, int>, Poly> parts;
  int degree = -1;
  for (const auto& [m, c] : p.terms()) {
    int a = m.exponent(x), b = m.exponent(y);
    if (a < 0 || b < 0) throw NotHomogeneous("negative exponent in {x,y}");
    if (degree < 0) degree = a + b;
    if (a + b != degree) throw NotHomogeneous("not homogeneous in {x,y}");
    Monomial rest = m;
    rest.set_exponent(x, 0);
    rest.set_exponent(y, 0);
    parts[{a, b}].add_term(c, rest);
  }
  for (const auto& [ab, q] : parts) {
    auto it = parts.find({ab.second, ab.first});
    if (it == parts.end() || !(it->second == q))
      throw NotSymmetric("not symmetric under swapping " + x.str() + "," +
                         y.str());
  }
  std::vector<std::pair<int, Poly>> out;
  if (degree < 0) return out;
  Poly rem = p;
  Poly xy = Poly::var(x) * Poly::var(y);
  Poly xpy = Poly::var(x) + Poly::var(y);
  for (int i = 0; 2 * i <= degree; ++i) {
    // Extract the coefficient of x^i y^(degree-i) in the remainder.
    Poly gi = rem.coefficient_of(x, i).coefficient_of(y, degree - i);
    if (!gi.is_zero()) {
      out.emplace_back(i, gi);
      rem -= gi * xy.pow(i) * xpy.pow(degree - 2 * i);
    }
  }
  if (!rem.is_zero()) throw NotSymmetric("gamma expansion failed to converge");
  return out;
}

std::vector<std::pair<std::array<int, 3>, Int>> e_expand(const Poly& p,
                                                         const VarId& x,
                                                         const VarId& y,
                                                         const VarId& z) {
  {  // symmetry and homogeneity checks
    std::map<VarId, Poly> sw1{{x, Poly::var(y)}, {y, Poly::var(x)}};
    std::map<VarId, Poly> sw2{{y, Poly::var(z)}, {z, Poly::var(y)}};
    if (!(p.substitute(sw1) == p) || !(p.substitute(sw2) == p))
      throw NotSymmetric("not symmetric in {x,y,z}");
    int degree = -1;
    for (const auto& [m, c] : p.terms()) {
      int d = m.exponent(x) + m.exponent(y) + m.exponent(z);
      if (m.exponent(x) < 0 || m.exponent(y) < 0 || m.exponent(z) < 0)
        throw NotHomogeneous("negative exponent in {x,y,z}");
      if (degree < 0) degree = d;
      if (d != degree) throw NotHomogeneous("not homogeneous in {x,y,z}");
      Monomial rest = m;
      rest.set_exponent(x, 0);
      rest.set_exponent(y, 0);
      rest.set_exponent(z, 0);
      if (!rest.is_unit())
        throw NotSymmetric("e_expand expects a polynomial in {x,y,z} only");
    }
  }
  Poly e1 = Poly::var(x) + Poly::var(y) + Poly::var(z);
  Poly e2 = Poly::var(x) * Poly::var(y) + Poly::var(y) * Poly::var(z) +
            Poly::var(z) * Poly::var(x);
  Poly e3 = Poly::var(x) * Poly::var(y) * Poly::var(z);
  std::vector<std::pair<std::array<int, 3>, Int>> out;
  Poly rem = p;
  while (!rem.is_zero()) {
    auto lead = std::prev(rem.terms().end());
    int a = lead->first.exponent(x), b = lead->first.exponent(y),
        c = lead->first.exponent(z);
    if (!(a >= b && b >= c))
      throw NotSymmetric("leading term not dominant; input not symmetric");
    int i = a - b, j = b - c, k = c;
    out.push_back({{i, j, k}, lead->second});
    rem -= lead->second * (e1.pow(i) * e2.pow(j) * e3.pow(k));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++i;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg + " at position " + std::to_string(i) + " in '" + s +
                     "'");
  }
};

long parse_integer(Cursor& c) {
  c.skip_ws();
  size_t start = c.i;
  if (c.i < c.s.size() && (c.s[c.i] == '-' || c.s[c.i] == '+')) ++c.i;
  size_t digits = c.i;
  while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i])))
    ++c.i;
  if (c.i == digits) c.fail("expected integer");
  return std::stol(c.s.substr(start, c.i - start));
}

bool at_name(Cursor& c) {
  char ch = c.peek();
  return std::isalpha(static_cast<unsigned char>(ch)) || ch == '_';
}

VarId parse_var(Cursor& c) {
  c.skip_ws();
  size_t start = c.i;
  while (c.i < c.s.size() &&
         (std::isalnum(static_cast<unsigned char>(c.s[c.i])) ||
          c.s[c.i] == '_'))
    ++c.i;
  if (c.i == start) c.fail("expected variable name");
  // A trailing digit run belongs to the name (e.g. "e1"); indices use [].
  VarId v(c.s.substr(start, c.i - start));
  if (c.accept('[')) {
    v.index = static_cast<int>(parse_integer(c));
    if (v.index < 0) c.fail("negative variable index");
    if (!c.accept(']')) c.fail("expected ']'");
  }
  return v;
}

Poly parse_term(Cursor& c) {
  Poly t(1);
  bool first = true;
  for (;;) {
    c.skip_ws();
    if (first && std::isdigit(static_cast<unsigned char>(c.peek()))) {
      size_t start = c.i;
      while (c.i < c.s.size() &&
             std::isdigit(static_cast<unsigned char>(c.s[c.i])))
        ++c.i;
      t = t * Poly(Int(c.s.substr(start, c.i - start)));
    } else if (at_name(c)) {
      VarId v = parse_var(c);
      int e = 1;
      if (c.accept('^')) e = static_cast<int>(parse_integer(c));
      t = t * Poly::var(v, 1).pow(e);
    } else if (first) {
      c.fail("expected term");
    } else {
      c.fail("expected factor after '*'");
    }
    first = false;
    if (!c.accept('*')) break;
  }
  return t;
}

}  // namespace

Poly parse_poly(const std::string& text) {
  Cursor c{text};
  Poly p;
  bool negative = false;
  if (c.accept('-'))
    negative = true;
  else
    c.accept('+');
  for (;;) {
    Poly t = parse_term(c);
    p += negative ? -t : t;
    if (c.eof()) break;
    if (c.accept('+'))
      negative = false;
    else if (c.accept('-'))
      negative = true;
    else
      c.fail("expected '+' or '-'");
  }
  return p;
}

// ---------------------------------------------------------------------------
// Formatting

namespace {

std::string format_monomial(const Monomial& m, bool latex) {
  std::string out;
  bool first = true;
  for (const auto& [v, e] : m.exponents()) {
    if (!first && !latex) out += "*";
    first = false;
    if (latex && v.index >= 0)
      out += v.name + "_{" + std::to_string(v.index) + "}";
    else
      out += v.str();
    if (e != 1) {
      if (latex)
        out += "^{" + std::to_string(e) + "}";
      else
        out += "^" + std::to_string(e);
    }
  }
  return out;
}

std::string format_poly(const Poly& p, bool latex) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Int a = c;
    if (first) {
      if (a < 0) {
        out += "-";
        a = -a;
      }
    } else {
      out += (a < 0) ? (latex ? "-" : " - ") : (latex ? "+" : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    std::string mono = format_monomial(m, latex);
    if (mono.empty()) {
      out += a.get_str();
    } else {
      if (a != 1) out += a.get_str() + (latex ? "" : "*");
      out += mono;
    }
  }
  return out;
}

std::string json_escape(const std::string& s) {
  std::string r;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') r += '\\';
    r += ch;
  }
  return r;
}

}  // namespace

std::string Poly::str() const { return format_poly(*this, false); }

std::string Poly::latex() const { return format_poly(*this, true); }

std::string Poly::json() const {
  std::ostringstream os;
  os << "{\"terms\":[";
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << ",";
    first = false;
    os << "{\"coeff\":\"" << c.get_str() << "\",\"monomial\":{";
    bool f2 = true;
    for (const auto& [v, e] : m.exponents()) {
      if (!f2) os << ",";
      f2 = false;
      os << "\"" << json_escape(v.str()) << "\":" << e;
    }
    os << "}}";
  }
  os << "]}";
  return os.str();
}

Int binomial(long n, long k) {
  if (k < 0 || k > n || n < 0) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

Int factorial(long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

}  // namespace ytab
