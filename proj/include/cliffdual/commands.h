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

#ifndef CLIFFDUAL_COMMANDS_H
#define CLIFFDUAL_COMMANDS_H

#include <string>
#include <vector>

#include "cliffdual/conjugate.h"
#include "cliffdual/decompose.h"
#include "json.hpp"

namespace cliffdual {

/// Report of one command: {"command", "version", "config", "result", "passed"}.
struct CommandResult {
    nlohmann::json report;
    bool passed = true;
};

CommandResult make_report(const std::string &command, const nlohmann::json &config, const nlohmann::json &result, bool passed);

/// Invariants of q_{r,s}; at d = 2 also asserts garf = r - s mod 8.
CommandResult cmd_forms_classify(size_t r, size_t s, int d);
/// Invariants of the symmetric bilinear form with the given Gram rows and of its generalized refinement.
CommandResult cmd_forms_classify_gram(int d, const std::vector<std::string> &rows);

/// Invariants of a generalized quadratic form given as form JSON {"d", "D", "diag", "polar"}.
CommandResult cmd_forms_classify_form(const nlohmann::json &form);

CommandResult cmd_iso_enum(size_t r, size_t s, int d, size_t m, Stratum stratum, const CacheDir &cache = {});
/// stats adds the conjugacy class census and element orders.
CommandResult cmd_group_enum(size_t r, size_t s, int d, bool characters, bool stats = false, const CacheDir &cache = {});

/// |S_{r,s}| and the rank of its Gram matrix at n.
CommandResult cmd_commutant_gram(size_t r, size_t s, int d, size_t n, const CacheDir &cache = {});
/// Every R(O)P(N) commutes with the generators at n, and products of codes close in S.
CommandResult cmd_commutant_verify(size_t r, size_t s, int d, size_t n, const CacheDir &cache = {});

CommandResult cmd_decompose_t5(size_t n, const T5Options &options, double tolerance = 1e-9);
CommandResult cmd_decompose_stab(size_t r, size_t s, int d, size_t n, const CacheDir &cache = {});
CommandResult cmd_decompose_real(size_t n, size_t t);

CommandResult cmd_conjugate_plan(const ConjugationPlan &plan);
CommandResult cmd_conjugate_verify(const ConjugationPlan &plan, const std::vector<CliffordWord> &words, Backend backend,
                                   double tolerance = 1e-9);
/// Deterministic random words for a plan.
std::vector<CliffordWord> plan_random_words(const ConjugationPlan &plan, size_t count, size_t length, uint64_t seed);

std::vector<std::string> selftest_suites();
/// Quick checks for one module, or "all".
CommandResult run_selftest(const std::string &suite);

}  // namespace cliffdual

#endif
