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

#ifndef CLIFFDUAL_CONJUGATE_H
#define CLIFFDUAL_CONJUGATE_H

#include <complex>
#include <string>
#include <vector>

#include "cliffdual/commutant.h"
#include "json.hpp"

namespace cliffdual {

/// Smallest t with Delta_{0,1} inside Delta_{t,0}: 7 for d = 2, 2d - 1 for d = 1 mod 4, 4d - 1 for d = 3 mod 4.
size_t minimal_t(int d);

/// Encoding of H_n into C_N for a code N with dim T_N = 1.
struct ConjugationPlan {
    int d = 2;
    size_t t = 0;
    size_t n = 0;
    IsoSubspace code;
    /// T_N coordinate of [1_t]_N; nu rescales it to 1.
    int64_t ones_coordinate = 1;

    /// Coset label of the encoder column for x in Z_d^n (1 x n).
    GFMatrix label(const Vec &x) const;
    /// |[1_t x^T]_N>.
    SparseState encoder_column(const Vec &x) const;
    uint64_t input_dim() const;

    nlohmann::json to_json() const;
    static ConjugationPlan from_json(const nlohmann::json &j);
};

/// Builds the plan; d = 2 uses <1111000, 0011110, 1010101>, odd d searches Gr_m with m = (t - 1) / 2.
/// Throws std::length_error when d^{nt} is beyond 2^22 amplitudes or d^t beyond 2^21.
ConjugationPlan build_plan(int d, size_t n);

/// Whether the encoder columns are orthonormal (exact).
bool encoder_is_isometry(const ConjugationPlan &plan);

enum class Backend { exact, floating };
Backend parse_backend(const std::string &s);
std::string backend_name(Backend b);

struct ConjugationResult {
    std::string word;
    bool ok = false;
    /// E = omega_M^phase conj(U) with omega_M = exp(2 pi i / M).
    int64_t phase = 0;
    /// M = lcm(2D, 8); the phases of GlobalPhase gates.
    int64_t phase_order = 1;
    double residual = 0;
    nlohmann::json to_json() const;
};

/// Recovered operator encoder^dagger Delta_{t,0}(U) encoder.
CycMatrix recovered_exact(const ConjugationPlan &plan, const CliffordWord &u);
std::vector<std::vector<std::complex<double>>> recovered_float(const ConjugationPlan &plan, const CliffordWord &u);

/// Compares the recovered operator with conj(U) up to a power of omega_M.
ConjugationResult verify_conjugation(const ConjugationPlan &plan, const CliffordWord &u, Backend backend, double tolerance = 1e-9);

/// E(UV) agrees with E(U) E(V) up to a power of omega_M.
bool composition_coherent(const ConjugationPlan &plan, const CliffordWord &u, const CliffordWord &v, Backend backend,
                          double tolerance = 1e-9);

}  // namespace cliffdual

#endif
