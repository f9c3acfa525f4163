#ifndef YTAB_H
#define YTAB_H

/* C interface to the symbolic workbench: grammar derivatives, normal
 * ordered operator powers, Young tableau expansions, the box sorting
 * map, polynomial families and the identity verification suite.
 *
 * Conventions:
 *   - every computation runs inside a session; errors set a message
 *     retrievable with yt_last_error and return a nonzero code;
 *   - output strings are heap allocated and must be released with
 *     yt_string_free;
 *   - `format` selects the rendering: YT_TEXT, YT_JSON or YT_LATEX.
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef struct yt_session yt_session;

enum {
  YT_OK = 0,
  YT_ERR_USAGE = 1,   /* bad arguments, unknown names, parse errors */
  YT_ERR_INTERNAL = 2 /* anything else */
};

enum { YT_TEXT = 0, YT_JSON = 1, YT_LATEX = 2 };

yt_session* yt_session_new(void);
void yt_session_free(yt_session* s);

/* Message of the last failing call on this session ("" if none). The
 * pointer stays valid until the next call on the same session. */
const char* yt_last_error(const yt_session* s);

void yt_string_free(char* str);

/* Polynomial family by catalog name; `has_param` enables `param` for
 * the families that take one (kInvEulerian, kOrder). */
int yt_family(yt_session* s, const char* name, int n, int has_param,
              int param, int format, char** out);

/* Apply the grammar derivative `times` times to `word`. The grammar
 * spec is ";"-separated rules, e.g. "a -> a*b; b -> b" or the indexed
 * form "c[i] -> c[i+1]". */
int yt_grammar_derive(yt_session* s, const char* grammar_spec,
                      const char* word, int times, int format, char** out);

/* Normal ordered form of (weight * D_G)^power: one line (or JSON
 * object) per operator order with its coefficient polynomial. */
int yt_normal_order(yt_session* s, const char* grammar_spec,
                    const char* weight, int power, int format, char** out);

/* Jet expansion (c^order D)^n applied to c, in the variables c[i]. */
int yt_jet_power(yt_session* s, int order, int n, int format, char** out);

/* Standard Young tableaux on n cells (column count capped at max_cols
 * when max_cols > 0). When indices_order > 0 each tableau is listed
 * with its box sorting indices for that order and their product. */
int yt_syt_list(yt_session* s, int n, int max_cols, int indices_order,
                int format, char** out);

/* Ordered weak set partitions of [n] with order*n+1 blocks, each with
 * its weight monomial and image tableau under the sorting map. */
int yt_owp_list(yt_session* s, int n, int order, int format, char** out);

/* Run one identity from the verification catalog ("all" for the whole
 * catalog); n_max > 0 overrides the default range. `*all_pass` is set
 * to 1 when every check passed. */
int yt_verify(yt_session* s, const char* identity, int n_max, int format,
              char** out, int* all_pass);

#ifdef __cplusplus
}
#endif

#endif
