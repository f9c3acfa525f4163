#ifndef YTAB_CORE_SUITE_HPP
#define YTAB_CORE_SUITE_HPP

#include <string>
#include <vector>

#include "poly.hpp"

namespace ytab {

struct UnknownIdentity : PolyError {
  using PolyError::PolyError;
};

struct CheckResult {
  std::string identity;
  int n = 0;
  bool pass = false;
  long long millis = 0;
  std::string detail;  // empty on pass, mismatch description otherwise
};

struct Report {
  std::vector<CheckResult> checks;

  bool all_pass() const;
  std::string text() const;
  std::string json() const;
};

/// Tokens of the identity catalog, in report order.
std::vector<std::string> identity_names();

/// Run one catalog identity over its default range, or up to n_max
/// when n_max > 0.
Report verify(const std::string& token, int n_max = 0);

/// Run the whole catalog; results merged in token order.
Report verify_all(int n_max = 0);

}  // namespace ytab

#endif
