#include "grammar.hpp"

#include <cctype>

namespace ytab {

Poly IndexedRule::instantiate(int i) const {
  Poly out;
  for (const auto& t : terms) {
    Poly p(t.coeff);
    for (const auto& f : t.factors) {
      VarId v(f.name);
      if (f.indexed)
        v.index = i + f.offset;
      else
        v.index = f.literal_index;
      p = p * Poly::var(v, 1).pow(f.exponent);
    }
    out += p;
  }
  return out;
}

void Grammar::add_rule(const VarId& v, Poly image) {
  rules_[v] = std::move(image);
}

void Grammar::add_indexed_rule(IndexedRule rule) {
  indexed_[rule.family] = std::move(rule);
}

void Grammar::declare_inert(const VarId& v) { rules_[v] = Poly(); }

bool Grammar::covers(const VarId& v) const {
  if (rules_.count(v)) return true;
  return v.index >= 0 && indexed_.count(v.name) > 0;
}

Poly Grammar::image(const VarId& v) const {
  auto it = rules_.find(v);
  if (it != rules_.end()) return it->second;
  if (v.index >= 0) {
    auto fi = indexed_.find(v.name);
    if (fi != indexed_.end()) {
      if (v.index >= max_index_)
        throw IndexCapExceeded("index cap " + std::to_string(max_index_) +
                               " exceeded at " + v.str());
      return fi->second.instantiate(v.index);
    }
  }
  throw UnknownVariable("no rule for variable " + v.str());
}

Poly Grammar::derive(const Poly& p) const {
  Poly out;
  for (const auto& [m, c] : p.terms()) {
    for (const auto& [v, e] : m.exponents()) {
      // e * v^(e-1) * image(v) * (rest of the monomial)
      Monomial rest = m;
      rest.set_exponent(v, e - 1);
      out += image(v) * Poly::term(c * e, rest);
    }
  }
  return out;
}

Poly Grammar::derive_n(const Poly& p, int n) const {
  Poly out = p;
  for (int i = 0; i < n; ++i) out = derive(out);
  return out;
}

Poly NormalOp::coefficient(int k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? Poly() : it->second;
}

void NormalOp::set(int k, Poly p) {
  if (p.is_zero())
    coeffs_.erase(k);
  else
    coeffs_[k] = std::move(p);
}

NormalOp op_power(const Grammar& g, const Poly& w, int n) {
  NormalOp op;
  op.set(0, Poly(1));
  for (int step = 0; step < n; ++step) {
    NormalOp next;
    for (const auto& [k, pk] : op.by_order()) {
      // (w D) o (P D^k) = w*D(P)*D^k + w*P*D^(k+1)
      next.set(k, next.coefficient(k) + w * g.derive(pk));
      next.set(k + 1, next.coefficient(k + 1) + w * pk);
    }
    op = std::move(next);
  }
  return op;
}

Poly op_apply(const Grammar& g, const NormalOp& op, const Poly& target) {
  Poly out;
  for (const auto& [k, pk] : op.by_order()) out += pk * g.derive_n(target, k);
  return out;
}

Poly op_weight_coefficient(const NormalOp& op, int k, const Poly& w) {
  return op.coefficient(k).divide_exact(w.pow(k));
}

// ---------------------------------------------------------------------------
// Grammar text parsing: "a -> a*b; b -> b; c[i] -> c[i+1]"

namespace {

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\n\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\n\r");
  return s.substr(a, b - a + 1);
}

bool contains_index_token(const std::string& s) {
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] != 'i') continue;
    bool left_ok = i == 0 || !(std::isalnum(static_cast<unsigned char>(
                                   s[i - 1])) ||
                               s[i - 1] == '_');
    bool right_ok =
        i + 1 == s.size() ||
        !(std::isalnum(static_cast<unsigned char>(s[i + 1])) || s[i + 1] == '_');
    if (left_ok && right_ok) return true;
  }
  return false;
}

// Parse an indexed-rule image like "c[i+1]" / "x[0]*x[i+1]" / "2*c[i]".
IndexedRule parse_indexed_rule(const std::string& family,
                               const std::string& rhs) {
  IndexedRule rule;
  rule.family = family;
  std::string s = rhs;
  size_t pos = 0;
  auto fail = [&](const std::string& m) {
    throw ParseError(m + " in indexed rule image '" + rhs + "'");
  };
  auto skip = [&] {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  };
  bool neg = false;
  skip();
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-'))
    neg = (s[pos++] == '-');
  for (;;) {
    IndexedRule::Term term;
    term.coeff = neg ? -1 : 1;
    bool first = true;
    for (;;) {
      skip();
      if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])) &&
          first) {
        size_t st = pos;
        while (pos < s.size() &&
               std::isdigit(static_cast<unsigned char>(s[pos])))
          ++pos;
        term.coeff *= Int(s.substr(st, pos - st));
      } else if (pos < s.size() &&
                 (std::isalpha(static_cast<unsigned char>(s[pos])) ||
                  s[pos] == '_')) {
        IndexedRule::Factor f;
        size_t st = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) ||
                s[pos] == '_'))
          ++pos;
        f.name = s.substr(st, pos - st);
        skip();
        if (pos < s.size() && s[pos] == '[') {
          ++pos;
          skip();
          if (pos < s.size() && s[pos] == 'i') {
            f.indexed = true;
            ++pos;
            skip();
            if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
              bool m = s[pos++] == '-';
              skip();
              size_t ds = pos;
              while (pos < s.size() &&
                     std::isdigit(static_cast<unsigned char>(s[pos])))
                ++pos;
              if (ds == pos) fail("expected offset digits");
              f.offset = std::stoi(s.substr(ds, pos - ds)) * (m ? -1 : 1);
            }
          } else {
            size_t ds = pos;
            while (pos < s.size() &&
                   std::isdigit(static_cast<unsigned char>(s[pos])))
              ++pos;
            if (ds == pos) fail("expected index");
            f.literal_index = std::stoi(s.substr(ds, pos - ds));
          }
          skip();
          if (pos >= s.size() || s[pos] != ']') fail("expected ']'");
          ++pos;
        }
        skip();
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          skip();
          size_t ds = pos;
          if (pos < s.size() && s[pos] == '-') ++pos;
          while (pos < s.size() &&
                 std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
          if (ds == pos) fail("expected exponent");
          f.exponent = std::stoi(s.substr(ds, pos - ds));
        }
        term.factors.push_back(f);
      } else {
        fail("expected factor");
      }
      first = false;
      skip();
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    rule.terms.push_back(std::move(term));
    skip();
    if (pos >= s.size()) break;
    if (s[pos] == '+')
      neg = false;
    else if (s[pos] == '-')
      neg = true;
    else
      fail("expected '+' or '-'");
    ++pos;
  }
  return rule;
}

}  // namespace

Grammar parse_grammar(const std::string& text) {
  Grammar g;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find(';', start);
    std::string piece =
        strip(end == std::string::npos ? text.substr(start)
                                       : text.substr(start, end - start));
    if (!piece.empty()) {
      size_t arrow = piece.find("->");
      if (arrow == std::string::npos)
        throw ParseError("missing '->' in grammar rule '" + piece + "'");
      std::string lhs = strip(piece.substr(0, arrow));
      std::string rhs = strip(piece.substr(arrow + 2));
      if (contains_index_token(lhs)) {
        // Indexed family: "c[i] -> c[i+1]"
        size_t br = lhs.find('[');
        if (br == std::string::npos || strip(lhs.substr(br)) != "[i]")
          throw ParseError("indexed rule head must be 'name[i]', got '" + lhs +
                           "'");
        g.add_indexed_rule(parse_indexed_rule(strip(lhs.substr(0, br)), rhs));
      } else {
        // Plain rule head: a variable, possibly with a literal index.
        Poly head = parse_poly(lhs);
        if (head.term_count() != 1)
          throw ParseError("grammar rule head must be a single variable");
        const auto& [m, c] = *head.terms().begin();
        if (c != 1 || m.exponents().size() != 1 ||
            m.exponents().begin()->second != 1)
          throw ParseError("grammar rule head must be a single variable");
        g.add_rule(m.exponents().begin()->first,
                   rhs == "0" ? Poly() : parse_poly(rhs));
      }
    }
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return g;
}

}  // namespace ytab
