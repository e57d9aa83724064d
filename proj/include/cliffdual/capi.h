// Copyright 2026 The cliffdual Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CLIFFDUAL_CAPI_H
#define CLIFFDUAL_CAPI_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cd_status {
    CD_OK = 0,
    CD_ERR_NULL = 1,
    CD_ERR_INVALID_ARGUMENT = 2,
    CD_ERR_RESOURCE = 3,
    CD_ERR_IO = 4,
    CD_ERR_INTERNAL = 5,
} cd_status;

/// Holds the cache directory and the last error message.
typedef struct cd_context cd_context;
/// JSON report of one command.
typedef struct cd_result cd_result;
/// Conjugation plan.
typedef struct cd_plan cd_plan;

const char *cd_version(void);
const char *cd_status_string(cd_status status);

/// CLIFFDUAL_CACHE overrides cache_dir; NULL or "" with the variable unset disables caching.
cd_status cd_context_new(const char *cache_dir, cd_context **out);
void cd_context_free(cd_context *ctx);
/// Message of the last failed call on ctx; empty when none. Owned by ctx.
const char *cd_context_last_error(const cd_context *ctx);
const char *cd_context_cache_dir(const cd_context *ctx);

/// Report as pretty-printed JSON. Owned by the result.
const char *cd_result_json(const cd_result *result);
/// 1 when every assertion of the command held, 0 on falsification.
int cd_result_passed(const cd_result *result);
void cd_result_free(cd_result *result);

cd_status cd_forms_classify(cd_context *ctx, size_t r, size_t s, int d, cd_result **out);
/// rows: Gram matrix rows separated by ';' or whitespace, for example "011;101;110".
cd_status cd_forms_classify_gram(cd_context *ctx, int d, const char *rows, cd_result **out);
/// form_json: {"d": d, "D": D, "diag": [...], "polar": [[...]]}.
cd_status cd_forms_classify_form(cd_context *ctx, const char *form_json, cd_result **out);
/// stratum: "gr", "gr0" or "both".
cd_status cd_iso_enum(cd_context *ctx, size_t r, size_t s, int d, size_t m, const char *stratum, cd_result **out);
cd_status cd_group_enum(cd_context *ctx, size_t r, size_t s, int d, int characters, int stats, cd_result **out);
cd_status cd_commutant_gram(cd_context *ctx, size_t r, size_t s, int d, size_t n, cd_result **out);
cd_status cd_commutant_verify(cd_context *ctx, size_t r, size_t s, int d, size_t n, cd_result **out);
cd_status cd_decompose_t5(cd_context *ctx, size_t n, int float_checks, size_t random_vectors, uint64_t seed, double tolerance,
                          cd_result **out);
cd_status cd_decompose_stab(cd_context *ctx, size_t r, size_t s, int d, size_t n, cd_result **out);
cd_status cd_decompose_real(cd_context *ctx, size_t n, size_t t, cd_result **out);

cd_status cd_plan_build(cd_context *ctx, int d, size_t n, cd_plan **out);
cd_status cd_plan_from_json(cd_context *ctx, const char *json, cd_plan **out);
/// Plan report as JSON (includes the plan under "result"). Owned by the plan.
const char *cd_plan_json(const cd_plan *plan);
size_t cd_plan_t(const cd_plan *plan);
int cd_plan_d(const cd_plan *plan);
size_t cd_plan_n(const cd_plan *plan);
void cd_plan_free(cd_plan *plan);

/// words: one Clifford word per line ("H0 P1 CADD0,1 ..."); blank lines and lines starting with '#' are skipped.
/// backend: "exact" or "float".
cd_status cd_conjugate_verify(cd_context *ctx, const cd_plan *plan, const char *words, const char *backend, double tolerance,
                              cd_result **out);
cd_status cd_conjugate_verify_random(cd_context *ctx, const cd_plan *plan, size_t count, size_t length, uint64_t seed,
                                     const char *backend, double tolerance, cd_result **out);

/// suite: a module name or "all".
cd_status cd_selftest(cd_context *ctx, const char *suite, cd_result **out);
/// Comma separated suite names. Static storage.
const char *cd_selftest_suites(void);

#ifdef __cplusplus
}
#endif

#endif
