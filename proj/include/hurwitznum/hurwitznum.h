/* SPDX-License-Identifier: Apache-2.0
 *
 * hurwitznum C API: exact Hurwitz numbers of branched coverings via the
 * symmetric-group character formula, with brute-force permutation-tuple and
 * Gaussian (Wick) matrix-integral oracles.
 *
 * All functions are synchronous. Results are heap-allocated JSON strings
 * owned by the caller; release them with hn_string_free. Errors are status
 * codes; hn_last_error(ctx) describes the most recent failure on that
 * context. Contexts are not thread-safe; use one per thread.
 */

#ifndef HURWITZNUM_H
#define HURWITZNUM_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct hn_ctx hn_ctx;

typedef enum {
    HN_OK = 0,
    HN_ERR_DOMAIN = 1,   /* invalid input or out-of-range request */
    HN_ERR_BUDGET = 2,   /* enumeration would exceed the configured budget */
    HN_ERR_USAGE = 3,    /* bad arguments at the API boundary */
    HN_ERR_INTERNAL = 4
} hn_status;

hn_ctx* hn_ctx_new(void);
void hn_ctx_free(hn_ctx* ctx);

/* keys: cache_dir (string), max_weight (int), budget (integer string),
 * format ("json"|"table") */
hn_status hn_ctx_configure(hn_ctx* ctx, const char* key, const char* value);

/* message for the most recent failing call on this context */
const char* hn_last_error(const hn_ctx* ctx);

/* warnings accumulated by cache recovery etc.; empty string when none */
char* hn_take_warnings(hn_ctx* ctx);

void hn_string_free(char* s);

/* partitions of d in canonical (reverse-lexicographic) order */
hn_status hn_partitions(hn_ctx* ctx, int d, char** out_json);

/* full integer character table of S_d (rows: irreps, columns: classes) */
hn_status hn_char_table(hn_ctx* ctx, int d, char** out_json);

/* disconnected Hurwitz number for a surface of Euler characteristic
 * `euler`; profiles_json like "[3],[3],[3]" or "[[3],[3],[3]]"; d = -1
 * infers the degree from the profiles (required when they are empty) */
hn_status hn_hurwitz(hn_ctx* ctx, int euler, const char* profiles_json, int d, char** out_json);

/* D(Delta) = z_Delta H_1(Delta) */
hn_status hn_moebius(hn_ctx* ctx, const char* profile_json, char** out_json);

/* Jucys-Murphy deformation: series in t to `order` at q = s^2,
 * s a rational string */
hn_status hn_deformed_hurwitz(hn_ctx* ctx, int euler, const char* profiles_json, const char* s,
                              int order, char** out_json);

/* cut-and-join operator applied to a power-sum polynomial; poly_json is
 * either a monomial "[2,1]" or {"coeffs":{"[2,1]":"1/2"}} */
hn_status hn_cutjoin_apply(hn_ctx* ctx, const char* poly_json, char** out_json);

/* permutation-tuple oracle; set tally_towers > 0 for a watchtower tally */
hn_status hn_oracle_tuple(hn_ctx* ctx, int euler, int orientable, const char* profiles_json, int d,
                          int tally_towers, char** out_json);

/* Wick contraction of a combinatorial map at degree d; check != 0 also
 * cross-validates against the tuple oracle and the character formula */
hn_status hn_oracle_wick(hn_ctx* ctx, const char* map_json, int d, int check, char** out_json);

/* 2D Yang-Mills partial sums over |lambda| <= dmax with gauge group U(N).
 * classes_json: array of {"power_sums":[...]} or {"identity":true};
 * exact mode expands e^(-rho c2/2) to rho_order; numeric evaluates at the
 * given floating rho. */
hn_status hn_ym(hn_ctx* ctx, int euler, const char* rho, int N, int dmax, const char* classes_json,
                int rho_order, int numeric, char** out_json);

/* Jucys-Murphy tau series ("TL" or "BKP") on the weight-d slice with formal
 * s; k is the lattice shift */
hn_status hn_tau_jm(hn_ctx* ctx, const char* kind, int k, int t_order, int d, char** out_json);

/* hypergeometric tau series slice at weight d */
hn_status hn_tau_hypergeometric(hn_ctx* ctx, const char* kind, int a, int N, int d, int t_order,
                                char** out_json);

/* named verification suite; see README for the list */
hn_status hn_verify(hn_ctx* ctx, const char* suite, int d, char** out_json);

/* level: "fast" or "full" */
hn_status hn_selftest(hn_ctx* ctx, const char* level, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* HURWITZNUM_H */
