/*
 * Copyright 2026 The ytwist authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface of the ytwist library: exact construction of twist chains
 * for the orthogonal series B/D in the defining representation, the
 * associated constant and spectral R-matrices, and the exact verification
 * checks. Handles are opaque; every function returns a status code and
 * leaves a human-readable message in ytw_last_error() on failure. Strings
 * returned through char** outputs must be released with ytw_string_free.
 *
 * Scalars cross this interface as text in the exact grammar
 * "a/b+c/di" (e.g. "3/2", "-1/2i", "1/2+1/2i"); nothing is ever
 * represented in floating point.
 */

#ifndef YTWIST_H
#define YTWIST_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#define YTW_OK 0
#define YTW_ERR_INVALID_ARGUMENT 1 /* bad parameters or configuration */
#define YTW_ERR_PARSE 2            /* malformed scalar or config text */
#define YTW_ERR_DOMAIN 3           /* pole hit, nilpotency violation, ... */
#define YTW_ERR_CHECK_FAILED 4     /* a verification check did not pass */
#define YTW_ERR_INTERNAL 5

typedef struct ytw_table ytw_table;   /* defining-representation tables */
typedef struct ytw_chain ytw_chain;   /* validated twist-chain data */
typedef struct ytw_matrix ytw_matrix; /* exact matrix with export metadata */

const char* ytw_version(void);
/* Message for the most recent failure on this thread; never NULL. */
const char* ytw_last_error(void);

void ytw_string_free(char* s);

/* ---- representation tables ---------------------------------------- */

/* series is 'B' or 'D'; rank >= 2. */
int ytw_table_create(char series, int rank, ytw_table** out);
void ytw_table_free(ytw_table* t);
int ytw_table_dim(const ytw_table* t);

/* Number of exported generator documents (all roots, then Cartans). */
int ytw_table_entry_count(const ytw_table* t);
/* Copies the label of entry `index` ("e1+e2", "cartan_e1+e2", ...). */
int ytw_table_entry_label(const ytw_table* t, int index, char* buf,
                          size_t bufsize);
/* MatrixDocument JSON for the entry with the given label. */
int ytw_table_entry_json(const ytw_table* t, const char* label,
                         char** out_json);

/* ---- chains -------------------------------------------------------- */

/*
 * depth p builds levels 0..p (p + 1 <= floor(rank / 2)); xi and the
 * depth+1 eta strings use the exact scalar grammar restricted to
 * rationals. etas may be NULL to default every eta to 1.
 */
int ytw_chain_create(char series, int rank, int depth, const char* xi,
                     const char* const* etas, size_t eta_count,
                     ytw_chain** out);
void ytw_chain_free(ytw_chain* c);

/*
 * target: "F"   chain element in d (x) d
 *         "rho" first-order matrix rho
 *         "r"   classical r-matrix rho - flip(rho)
 *         "R"   constant twisted R-matrix
 *         "Ru"  spectral R(u); requires u (series B only)
 * u is ignored unless target is "Ru".
 */
int ytw_chain_build(const ytw_table* t, const ytw_chain* c, const char* target,
                    const char* u, ytw_matrix** out);

/* ---- matrices ------------------------------------------------------ */

void ytw_matrix_free(ytw_matrix* m);
int ytw_matrix_rows(const ytw_matrix* m);
int ytw_matrix_cols(const ytw_matrix* m);
/* Entry as a scalar string in the exact grammar. */
int ytw_matrix_entry(const ytw_matrix* m, int row, int col, char** out_scalar);
/* Full MatrixDocument JSON. */
int ytw_matrix_json(const ytw_matrix* m, char** out_json);

/* ---- verification --------------------------------------------------- */

/*
 * checks: names among "twist", "cybe", "qybe", "spectral", "lemma",
 * "reference"; pass NULL/0 to run every check applicable to the
 * configuration. samples: optional "u,v" rational pairs for the spectral
 * check. The structured report is returned as JSON; the status is YTW_OK
 * when every executed check passed and YTW_ERR_CHECK_FAILED otherwise.
 */
int ytw_verify(const ytw_table* t, const ytw_chain* c,
               const char* const* checks, size_t check_count,
               const char* const* samples, size_t sample_count,
               char** out_report_json);

#ifdef __cplusplus
}
#endif

#endif /* YTWIST_H */
