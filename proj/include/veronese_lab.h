/* C interface to the veronese-lab core.
 *
 * Conventions:
 *   - Functions return VL_OK (0) on success or a vl_status error code; the
 *     message for the most recent failure on the calling thread is available
 *     via vl_last_error().
 *   - Every char* output parameter receives a heap string owned by the
 *     caller; release it with vl_string_free().
 *   - vl_ideal is an opaque handle; release with vl_ideal_free().
 */
#ifndef VERONESE_LAB_H
#define VERONESE_LAB_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum vl_status {
    VL_OK = 0,
    VL_ERR_PARSE = 1,
    VL_ERR_INVALID_ARGUMENT = 2,
    VL_ERR_NOT_ZERO_DIMENSIONAL = 3,
    VL_ERR_DEGREE_CAP = 4,
    VL_ERR_EXTENSION_CAP = 5,
    VL_ERR_RETRIES_EXHAUSTED = 6,
    VL_ERR_DOMAIN = 7,  /* any other structured library error */
    VL_ERR_INTERNAL = 8 /* unexpected exception */
} vl_status;

/* Message for the last failure on this thread ("" if none). The pointer is
 * valid until the next failing call on the same thread. */
const char* vl_last_error(void);

void vl_string_free(char* s);

/* ---- ideals / Groebner bases ------------------------------------------- */

typedef struct vl_ideal vl_ideal;

/* Text format: first non-comment line `ring x0..x5 over F(32003)` (variable
 * list either `name0..nameN` or comma-separated; field `QQ`, `F(p)` or
 * `F(p^k; t^k+...)`), then one polynomial per line; `#` starts a comment. */
vl_status vl_ideal_parse(const char* text, vl_ideal** out);
void vl_ideal_free(vl_ideal* I);

/* Reduced Groebner basis in the given order ("grevlex", "lex", "block:K"),
 * printed in the same text format (header line included). */
vl_status vl_ideal_groebner(const vl_ideal* I, const char* order, char** out);

/* Projective dimension (-1 for empty) and, when zero-dimensional, length. */
vl_status vl_ideal_dimension(const vl_ideal* I, int* out);
vl_status vl_ideal_degree(const vl_ideal* I, int* out);

/* ---- Chow calculator ---------------------------------------------------- */

/* Integer value of a top-degree expression like "(3a+b)*(a+3b)". */
vl_status vl_chow_eval(const char* ambient, const char* expr, long long* out);

/* Human-readable table of every builtin ambient. */
vl_status vl_chow_list(char** out);

/* ---- scenarios ----------------------------------------------------------- */

/* Newline-separated scenario ids ("S1".."S11"). */
vl_status vl_scenario_ids(char** out);

/* Run one scenario; *json_out receives the JSON report and *pass_out the
 * overall verdict (1 pass / 0 fail).  Pass 0 for any knob to take its
 * default (p=32003, retry_budget=16, degree_cap=12, ext_cap=24, trials=100).
 * include_timings=0 yields the byte-stable report form. */
vl_status vl_run_scenario(const char* id, unsigned long long p, unsigned long long seed,
                          int retry_budget, int degree_cap, int ext_cap, int trials,
                          int include_timings, char** json_out, int* pass_out);

#ifdef __cplusplus
}
#endif

#endif
