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

#include "cliffdual/capi.h"

#include <functional>
#include <new>
#include <sstream>
#include <stdexcept>
#include <string>

#include "cliffdual/commands.h"

struct cd_context {
    cliffdual::CacheDir cache;
    std::string last_error;
};

struct cd_result {
    std::string json;
    bool passed = false;
};

struct cd_plan {
    cliffdual::ConjugationPlan plan;
    std::string json;
};

namespace {

using cliffdual::CommandResult;

cd_status guard(cd_context *ctx, const std::function<void()> &body) {
    if (ctx == nullptr) {
        return CD_ERR_NULL;
    }
    ctx->last_error.clear();
    try {
        body();
        return CD_OK;
    } catch (const std::length_error &e) {
        ctx->last_error = e.what();
        return CD_ERR_RESOURCE;
    } catch (const std::bad_alloc &) {
        ctx->last_error = "out of memory";
        return CD_ERR_RESOURCE;
    } catch (const std::invalid_argument &e) {
        ctx->last_error = e.what();
        return CD_ERR_INVALID_ARGUMENT;
    } catch (const nlohmann::json::exception &e) {
        ctx->last_error = e.what();
        return CD_ERR_INVALID_ARGUMENT;
    } catch (const std::ios_base::failure &e) {
        ctx->last_error = e.what();
        return CD_ERR_IO;
    } catch (const std::exception &e) {
        ctx->last_error = e.what();
        return CD_ERR_INTERNAL;
    }
}

cd_status emit(cd_context *ctx, cd_result **out, const std::function<CommandResult()> &fn) {
    if (out == nullptr) {
        return CD_ERR_NULL;
    }
    *out = nullptr;
    return guard(ctx, [&] {
        CommandResult r = fn();
        auto *res = new cd_result;
        res->json = r.report.dump(2);
        res->passed = r.passed;
        *out = res;
    });
}

std::string require_text(const char *s, const char *what) {
    if (s == nullptr) {
        throw std::invalid_argument(std::string(what) + " must not be null");
    }
    return s;
}

std::vector<std::string> split_rows(const std::string &text) {
    std::vector<std::string> rows;
    std::string cur;
    for (char c : text) {
        if (c == ';' || c == ' ' || c == '\n' || c == ',') {
            if (!cur.empty()) {
                rows.push_back(cur);
            }
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) {
        rows.push_back(cur);
    }
    return rows;
}

cd_plan *wrap_plan(const cliffdual::ConjugationPlan &plan) {
    auto *p = new cd_plan;
    p->plan = plan;
    p->json = cliffdual::cmd_conjugate_plan(plan).report.dump(2);
    return p;
}

}  // namespace

extern "C" {

const char *cd_version(void) {
    return CLIFFDUAL_VERSION;
}

const char *cd_status_string(cd_status status) {
    switch (status) {
        case CD_OK:
            return "ok";
        case CD_ERR_NULL:
            return "null argument";
        case CD_ERR_INVALID_ARGUMENT:
            return "invalid argument";
        case CD_ERR_RESOURCE:
            return "resource limit exceeded";
        case CD_ERR_IO:
            return "i/o error";
        case CD_ERR_INTERNAL:
            return "internal error";
    }
    return "unknown status";
}

cd_status cd_context_new(const char *cache_dir, cd_context **out) {
    if (out == nullptr) {
        return CD_ERR_NULL;
    }
    *out = nullptr;
    try {
        auto *ctx = new cd_context;
        ctx->cache = cliffdual::CacheDir::from_env(cache_dir == nullptr ? "" : cache_dir);
        *out = ctx;
        return CD_OK;
    } catch (const std::bad_alloc &) {
        return CD_ERR_RESOURCE;
    }
}

void cd_context_free(cd_context *ctx) {
    delete ctx;
}

const char *cd_context_last_error(const cd_context *ctx) {
    return ctx == nullptr ? "" : ctx->last_error.c_str();
}

const char *cd_context_cache_dir(const cd_context *ctx) {
    return ctx == nullptr ? "" : ctx->cache.path.c_str();
}

const char *cd_result_json(const cd_result *result) {
    return result == nullptr ? "" : result->json.c_str();
}

int cd_result_passed(const cd_result *result) {
    return result != nullptr && result->passed ? 1 : 0;
}

void cd_result_free(cd_result *result) {
    delete result;
}

cd_status cd_forms_classify(cd_context *ctx, size_t r, size_t s, int d, cd_result **out) {
    return emit(ctx, out, [&] { return cliffdual::cmd_forms_classify(r, s, d); });
}

cd_status cd_forms_classify_gram(cd_context *ctx, int d, const char *rows, cd_result **out) {
    return emit(ctx, out, [&] { return cliffdual::cmd_forms_classify_gram(d, split_rows(require_text(rows, "rows"))); });
}

cd_status cd_forms_classify_form(cd_context *ctx, const char *form_json, cd_result **out) {
    return emit(ctx, out, [&] { return cliffdual::cmd_forms_classify_form(nlohmann::json::parse(require_text(form_json, "form_json"))); });
}

cd_status cd_iso_enum(cd_context *ctx, size_t r, size_t s, int d, size_t m, const char *stratum, cd_result **out) {
    return emit(ctx, out, [&] {
        return cliffdual::cmd_iso_enum(r, s, d, m, cliffdual::parse_stratum(require_text(stratum, "stratum")), ctx->cache);
    });
}

cd_status cd_group_enum(cd_context *ctx, size_t r, size_t s, int d, int characters, int stats, cd_result **out) {
    return emit(ctx, out, [&] { return cliffdual::cmd_group_enum(r, s, d, characters != 0, stats != 0, ctx->cache); });
}

cd_status cd_commutant_gram(cd_context *ctx, size_t r, size_t s, int d, size_t n, cd_result **out) {
    return emit(ctx, out, [&] { return cliffdual::cmd_commutant_gram(r, s, d, n, ctx->cache); });
}

cd_status cd_commutant_verify(cd_context *ctx, size_t r, size_t s, int d, size_t n, cd_result **out) {
    return emit(ctx, out, [&] { return cliffdual::cmd_commutant_verify(r, s, d, n, ctx->cache); });
}

cd_status cd_decompose_t5(cd_context *ctx, size_t n, int float_checks, size_t random_vectors, uint64_t seed, double tolerance,
                          cd_result **out) {
    return emit(ctx, out, [&] {
        cliffdual::T5Options opt;
        opt.float_checks = float_checks != 0;
        opt.random_vectors = random_vectors;
        opt.seed = seed;
        return cliffdual::cmd_decompose_t5(n, opt, tolerance);
    });
}

cd_status cd_decompose_stab(cd_context *ctx, size_t r, size_t s, int d, size_t n, cd_result **out) {
    return emit(ctx, out, [&] { return cliffdual::cmd_decompose_stab(r, s, d, n, ctx->cache); });
}

cd_status cd_decompose_real(cd_context *ctx, size_t n, size_t t, cd_result **out) {
    return emit(ctx, out, [&] { return cliffdual::cmd_decompose_real(n, t); });
}

cd_status cd_plan_build(cd_context *ctx, int d, size_t n, cd_plan **out) {
    if (out == nullptr) {
        return CD_ERR_NULL;
    }
    *out = nullptr;
    return guard(ctx, [&] { *out = wrap_plan(cliffdual::build_plan(d, n)); });
}

cd_status cd_plan_from_json(cd_context *ctx, const char *json, cd_plan **out) {
    if (out == nullptr) {
        return CD_ERR_NULL;
    }
    *out = nullptr;
    return guard(ctx, [&] {
        nlohmann::json j = nlohmann::json::parse(require_text(json, "json"));
        if (j.contains("result") && j.value("command", "") == "conjugate plan") {
            j = j["result"];
        }
        *out = wrap_plan(cliffdual::ConjugationPlan::from_json(j));
    });
}

const char *cd_plan_json(const cd_plan *plan) {
    return plan == nullptr ? "" : plan->json.c_str();
}

size_t cd_plan_t(const cd_plan *plan) {
    return plan == nullptr ? 0 : plan->plan.t;
}

int cd_plan_d(const cd_plan *plan) {
    return plan == nullptr ? 0 : plan->plan.d;
}

size_t cd_plan_n(const cd_plan *plan) {
    return plan == nullptr ? 0 : plan->plan.n;
}

void cd_plan_free(cd_plan *plan) {
    delete plan;
}

cd_status cd_conjugate_verify(cd_context *ctx, const cd_plan *plan, const char *words, const char *backend, double tolerance,
                              cd_result **out) {
    if (plan == nullptr) {
        return CD_ERR_NULL;
    }
    return emit(ctx, out, [&] {
        std::vector<cliffdual::CliffordWord> list;
        std::istringstream in(require_text(words, "words"));
        std::string line;
        while (std::getline(in, line)) {
            size_t start = line.find_first_not_of(" \t\r");
            if (start == std::string::npos || line[start] == '#') {
                continue;
            }
            list.push_back(cliffdual::CliffordWord::parse(line, plan->plan.n, plan->plan.d));
        }
        return cliffdual::cmd_conjugate_verify(plan->plan, list, cliffdual::parse_backend(require_text(backend, "backend")), tolerance);
    });
}

cd_status cd_conjugate_verify_random(cd_context *ctx, const cd_plan *plan, size_t count, size_t length, uint64_t seed,
                                     const char *backend, double tolerance, cd_result **out) {
    if (plan == nullptr) {
        return CD_ERR_NULL;
    }
    return emit(ctx, out, [&] {
        auto list = cliffdual::plan_random_words(plan->plan, count, length, seed);
        return cliffdual::cmd_conjugate_verify(plan->plan, list, cliffdual::parse_backend(require_text(backend, "backend")), tolerance);
    });
}

cd_status cd_selftest(cd_context *ctx, const char *suite, cd_result **out) {
    return emit(ctx, out, [&] { return cliffdual::run_selftest(require_text(suite, "suite")); });
}

const char *cd_selftest_suites(void) {
    static const std::string joined = [] {
        std::string s;
        for (const auto &name : cliffdual::selftest_suites()) {
            s += (s.empty() ? "" : ",") + name;
        }
        return s + ",all";
    }();
    return joined.c_str();
}

}  // extern "C"
