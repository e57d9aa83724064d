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

#ifndef CLIFFDUAL_ISOTROPIC_H
#define CLIFFDUAL_ISOTROPIC_H

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cliffdual/cache.h"
#include "cliffdual/forms.h"

namespace cliffdual {

/// Which Grassmannian: 1_t not in N, 1_t in N, or either.
enum class Stratum { gr, gr0, both };

std::string stratum_name(Stratum s);
Stratum parse_stratum(const std::string &s);

/// Stochastic isotropic subspace of (Z_d^{r+s}, q_{r,s}).
struct IsoSubspace {
    size_t r = 0;
    size_t s = 0;
    int d = 2;
    Subspace n;
    Subspace perp;
    bool contains_ones = false;
    size_t m = 0;
    QuotientSection quotient;

    IsoSubspace() = default;
    /// Validates isotropy and stochasticity.
    IsoSubspace(const Subspace &n, size_t r, size_t s);

    size_t t() const {
        return r + s;
    }
    bool operator==(const IsoSubspace &o) const {
        return r == o.r && s == o.s && n == o.n;
    }
    bool operator<(const IsoSubspace &o) const {
        return n < o.n;
    }

    nlohmann::json to_json() const;
    static IsoSubspace from_json(const nlohmann::json &j);
};

/// Whether d^t is within the enumeration guard.
bool within_enumeration_guard(size_t t, int d);

/// All N of dimension m in the requested stratum, sorted and duplicate free.
std::vector<IsoSubspace> enumerate_isotropic(size_t r, size_t s, int d, size_t m, Stratum stratum, const CacheDir &cache = {});

/// Largest m with Gr_m non-empty.
size_t max_isotropic_dim(size_t r, size_t s, int d);

/// First N found by depth-first extension. No enumeration guard; d^t must fit in memory.
std::optional<IsoSubspace> find_isotropic(size_t r, size_t s, int d, size_t m, bool contains_ones);

/// Whether o is invertible, preserves q_{r,s}, and fixes 1_t.
bool is_stochastic_isometry(const GFMatrix &o, size_t r, size_t s);

/// Visits stochastic isometries O with O b_i = w_i for the given prefix of a basis b. The callback returns true to stop.
/// Returns true if stopped by the callback.
bool extend_isometry(size_t r, size_t s, int d, const std::vector<Vec> &source_prefix, const std::vector<Vec> &image_prefix,
                     const std::function<bool(const GFMatrix &)> &visit);

/// Same for isometries of an arbitrary generalized form fixing the given vector (zero for no constraint).
bool extend_form_isometry(const GenQuadForm &q, const Vec &fixed, const std::vector<Vec> &source_prefix,
                          const std::vector<Vec> &image_prefix, const std::function<bool(const GFMatrix &)> &visit);

/// O in O_1(T) with O N = N', or empty when the preconditions fail.
std::optional<GFMatrix> witt_transporter(const IsoSubspace &a, const IsoSubspace &b);

}  // namespace cliffdual

#endif
