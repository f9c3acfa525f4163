#include "ytab.h"

#include <cstring>
#include <optional>
#include <sstream>
#include <string>

#include "core/boxsort.hpp"
#include "core/families.hpp"
#include "core/grammar.hpp"
#include "core/normalorder.hpp"
#include "core/oracle.hpp"
#include "core/suite.hpp"
#include "core/tableaux.hpp"

using namespace ytab;

struct yt_session {
  std::string error;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string render_poly(const Poly& p, int format) {
  switch (format) {
    case YT_JSON:
      return p.json();
    case YT_LATEX:
      return p.latex();
    default:
      return p.str();
  }
}

std::string json_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

/// Run `body` (which fills *out) with errors mapped to return codes.
template <typename F>
int guarded(yt_session* s, char** out, F body) {
  if (!s) return YT_ERR_USAGE;
  s->error.clear();
  if (!out) {
    s->error = "null output pointer";
    return YT_ERR_USAGE;
  }
  *out = nullptr;
  try {
    *out = dup_string(body());
    return YT_OK;
  } catch (const PolyError& e) {
    s->error = e.what();
    return YT_ERR_USAGE;
  } catch (const std::exception& e) {
    s->error = e.what();
    return YT_ERR_INTERNAL;
  }
}

}  // namespace

extern "C" {

yt_session* yt_session_new(void) { return new yt_session; }

void yt_session_free(yt_session* s) { delete s; }

const char* yt_last_error(const yt_session* s) {
  return s ? s->error.c_str() : "";
}

void yt_string_free(char* str) { delete[] str; }

int yt_family(yt_session* s, const char* name, int n, int has_param,
              int param, int format, char** out) {
  return guarded(s, out, [&] {
    if (!name) throw BadParams("missing family name");
    std::optional<int> p;
    if (has_param) p = param;
    return render_poly(family(name, n, p), format);
  });
}

int yt_grammar_derive(yt_session* s, const char* grammar_spec,
                      const char* word, int times, int format, char** out) {
  return guarded(s, out, [&] {
    if (!grammar_spec || !word) throw ParseError("missing grammar or word");
    if (times < 0) throw BadParams("times must be nonnegative");
    Grammar g = parse_grammar(grammar_spec);
    return render_poly(g.derive_n(parse_poly(word), times), format);
  });
}

int yt_normal_order(yt_session* s, const char* grammar_spec,
                    const char* weight, int power, int format, char** out) {
  return guarded(s, out, [&] {
    if (!grammar_spec || !weight) throw ParseError("missing grammar or weight");
    if (power < 0) throw BadParams("power must be nonnegative");
    Grammar g = parse_grammar(grammar_spec);
    NormalOp op = op_power(g, parse_poly(weight), power);
    std::ostringstream os;
    if (format == YT_JSON) {
      os << "{\"orders\":[";
      bool first = true;
      for (const auto& [k, p] : op.by_order()) {
        if (p.is_zero()) continue;
        if (!first) os << ",";
        first = false;
        os << "{\"order\":" << k << ",\"poly\":" << p.json() << "}";
      }
      os << "]}";
    } else if (format == YT_LATEX) {
      bool first = true;
      for (const auto& [k, p] : op.by_order()) {
        if (p.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "\\left(" << p.latex() << "\\right)D^{" << k << "}";
      }
      if (first) os << "0";
    } else {
      for (const auto& [k, p] : op.by_order()) {
        if (p.is_zero()) continue;
        os << "D^" << k << ": " << p.str() << "\n";
      }
    }
    return os.str();
  });
}

int yt_jet_power(yt_session* s, int order, int n, int format, char** out) {
  return guarded(s, out, [&] {
    if (order < 1) throw BadParams("order must be positive");
    if (n < 0) throw BadParams("n must be nonnegative");
    JetContext jc(order * n + 1);
    return render_poly(jc.ckd_power_on_c(order, n), format);
  });
}

int yt_syt_list(yt_session* s, int n, int max_cols, int indices_order,
                int format, char** out) {
  return guarded(s, out, [&] {
    if (n < 0) throw BadParams("n must be nonnegative");
    if (n > 10) throw TooLarge("n too large for tableau listing");
    std::ostringstream os;
    bool json = format == YT_JSON;
    if (json) os << "[";
    bool first = true;
    for (const auto& t : all_syt(n, max_cols)) {
      Int product = 1;
      std::vector<Int> idx;
      if (indices_order > 0) {
        for (int i = 1; i <= n; ++i) {
          idx.push_back(t.box_index(i, indices_order));
          product *= idx.back();
        }
      }
      if (json) {
        if (!first) os << ",";
        os << "{\"tableau\":" << json_quote(t.str());
        if (indices_order > 0) {
          os << ",\"indices\":[";
          for (size_t i = 0; i < idx.size(); ++i)
            os << (i ? "," : "") << idx[i].get_str();
          os << "],\"product\":\"" << product.get_str() << "\"";
        }
        os << "}";
      } else {
        os << t.str();
        if (indices_order > 0) {
          os << "  indices=";
          for (size_t i = 0; i < idx.size(); ++i)
            os << (i ? "," : "") << idx[i].get_str();
          os << "  product=" << product.get_str();
        }
        os << "\n";
      }
      first = false;
    }
    if (json) os << "]";
    return os.str();
  });
}

int yt_owp_list(yt_session* s, int n, int order, int format, char** out) {
  return guarded(s, out, [&] {
    if (n < 0) throw BadParams("n must be nonnegative");
    if (order < 1) throw BadParams("order must be positive");
    Int count = 1;
    for (int i = 1; i <= n; ++i) count *= order * (i - 1) + 1;
    if (count > 20000) throw TooLarge("too many partitions to list");
    std::ostringstream os;
    bool json = format == YT_JSON;
    if (json) os << "[";
    bool first = true;
    enumerate_owp(n, order, [&](const Owp& p) {
      if (json) {
        if (!first) os << ",";
        os << "{\"partition\":" << json_quote(p.str())
           << ",\"weight\":" << owp_weight(p).json()
           << ",\"tableau\":" << json_quote(phi(p).str()) << "}";
      } else {
        os << p.str() << "  weight=" << owp_weight(p).str()
           << "  tableau=" << phi(p).str() << "\n";
      }
      first = false;
    });
    if (json) os << "]";
    return os.str();
  });
}

int yt_verify(yt_session* s, const char* identity, int n_max, int format,
              char** out, int* all_pass) {
  if (all_pass) *all_pass = 0;
  return guarded(s, out, [&] {
    if (!identity) throw UnknownIdentity("missing identity token");
    Report rep = std::string(identity) == "all" ? verify_all(n_max)
                                                : verify(identity, n_max);
    if (all_pass) *all_pass = rep.all_pass() ? 1 : 0;
    return format == YT_JSON ? rep.json() : rep.text();
  });
}

}  // extern "C"
