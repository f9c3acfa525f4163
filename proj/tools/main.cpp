#include <cstdio>
#include <cstring>
#include <string>

#include "CLI11.hpp"
#include "ytab.h"

namespace {

int format_code(const std::string& f) {
  if (f == "json") return YT_JSON;
  if (f == "latex") return YT_LATEX;
  return YT_TEXT;
}

/// Print the result (or the session error) and map the API code to the
/// process exit status: 0 ok, 2 usage error.
int finish(yt_session* s, int rc, char* out) {
  if (rc == YT_OK) {
    if (out && *out) {
      std::fputs(out, stdout);
      size_t len = std::strlen(out);
      if (out[len - 1] != '\n') std::fputc('\n', stdout);
    }
    yt_string_free(out);
    return 0;
  }
  std::fprintf(stderr, "error: %s\n", yt_last_error(s));
  yt_string_free(out);
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grammar derivatives, normal ordered operators, Young "
               "tableau expansions and polynomial families"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "latex"}))
      ->capture_default_str();

  std::string fam_name, gram, word, weight, identity = "all";
  int n = 0, times = 1, power = 1, order = 1, max_cols = 0, indices = 0;
  int param = 0, n_max = 0;
  bool has_param = false;

  auto* fam = app.add_subcommand("family", "Evaluate a catalog family");
  fam->add_option("name", fam_name, "Family name")->required();
  fam->add_option("n", n, "Degree index")->required();
  auto* popt = fam->add_option("--param", param, "Family parameter k");

  auto* exp = app.add_subcommand("expand", "Apply a grammar derivative");
  exp->add_option("--grammar", gram, "Grammar rules")->required();
  exp->add_option("--word", word, "Starting polynomial")->required();
  exp->add_option("--times", times, "Number of derivations")->required();

  auto* nor = app.add_subcommand("normal-order",
                                 "Normal ordered power of weight * D");
  nor->add_option("--grammar", gram, "Grammar rules")->required();
  nor->add_option("--weight", weight, "Weight polynomial")->required();
  nor->add_option("--power", power, "Operator power")->required();

  auto* jet = app.add_subcommand("jets", "Iterated c^m D applied to c");
  jet->add_option("--order", order, "Operator order m")->required();
  jet->add_option("--n", n, "Power n")->required();

  auto* syt = app.add_subcommand("syt", "List standard Young tableaux");
  syt->add_option("--n", n, "Number of cells")->required();
  syt->add_option("--max-cols", max_cols, "Column bound (0 = none)");
  syt->add_option("--indices", indices, "Show sorting indices at this order");

  auto* owp = app.add_subcommand("owp", "List ordered weak set partitions");
  owp->add_option("--n", n, "Ground set size")->required();
  owp->add_option("--order", order, "Sorting order m")->required();

  auto* ver = app.add_subcommand("verify", "Run identity checks");
  ver->add_option("identity", identity, "Identity token or 'all'");
  ver->add_option("--n-max", n_max, "Override the upper range bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  has_param = popt->count() > 0;

  int fmt = format_code(format);
  yt_session* s = yt_session_new();
  char* out = nullptr;
  int rc = 0, status = 0;

  if (fam->parsed()) {
    rc = yt_family(s, fam_name.c_str(), n, has_param ? 1 : 0, param, fmt,
                   &out);
    status = finish(s, rc, out);
  } else if (exp->parsed()) {
    rc = yt_grammar_derive(s, gram.c_str(), word.c_str(), times, fmt, &out);
    status = finish(s, rc, out);
  } else if (nor->parsed()) {
    rc = yt_normal_order(s, gram.c_str(), weight.c_str(), power, fmt, &out);
    status = finish(s, rc, out);
  } else if (jet->parsed()) {
    rc = yt_jet_power(s, order, n, fmt, &out);
    status = finish(s, rc, out);
  } else if (syt->parsed()) {
    rc = yt_syt_list(s, n, max_cols, indices, fmt, &out);
    status = finish(s, rc, out);
  } else if (owp->parsed()) {
    rc = yt_owp_list(s, n, order, fmt, &out);
    status = finish(s, rc, out);
  } else if (ver->parsed()) {
    int all_pass = 0;
    rc = yt_verify(s, identity.c_str(), n_max, fmt, &out, &all_pass);
    status = finish(s, rc, out);
    if (status == 0 && !all_pass) status = 1;
  }

  yt_session_free(s);
  return status;
}
