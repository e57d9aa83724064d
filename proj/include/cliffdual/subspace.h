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

#ifndef CLIFFDUAL_SUBSPACE_H
#define CLIFFDUAL_SUBSPACE_H

#include <string>
#include <vector>

#include "cliffdual/gf_matrix.h"
#include "json.hpp"

namespace cliffdual {

/// Subspace of Z_d^t stored by its unique RREF basis.
class Subspace {
   public:
    Subspace() = default;
    Subspace(int d, size_t t);
    static Subspace span(int d, size_t t, const std::vector<Vec> &vectors);
    static Subspace row_space(const GFMatrix &m);
    static Subspace full(int d, size_t t);
    static Subspace from_strings(int d, const std::vector<std::string> &rows);

    int d() const {
        return d_;
    }
    size_t ambient_dim() const {
        return t_;
    }
    size_t dim() const {
        return basis_.rows();
    }
    const GFMatrix &basis() const {
        return basis_;
    }
    const std::vector<size_t> &pivots() const {
        return pivots_;
    }
    std::vector<Vec> basis_vectors() const;

    /// Canonical coset representative of v + this (pivot entries cleared).
    Vec reduce(const Vec &v) const;
    bool contains(const Vec &v) const;
    bool contains(const Subspace &o) const;
    Subspace sum(const Subspace &o) const;
    Subspace with_vector(const Vec &v) const;
    Subspace intersection(const Subspace &o) const;
    /// All d^dim elements, ordered by coefficient code.
    std::vector<Vec> elements() const;
    /// Image under the linear map m (acting on column vectors).
    Subspace image(const GFMatrix &m) const;

    bool operator==(const Subspace &o) const {
        return d_ == o.d_ && t_ == o.t_ && basis_ == o.basis_;
    }
    bool operator!=(const Subspace &o) const {
        return !(*this == o);
    }
    bool operator<(const Subspace &o) const;
    std::string key() const;

    nlohmann::json to_json() const;
    static Subspace from_json(const nlohmann::json &j);

   private:
    int d_ = 2;
    size_t t_ = 0;
    GFMatrix basis_;
    std::vector<size_t> pivots_;
};

/// {x : m x = 0}.
Subspace kernel(const GFMatrix &m);

/// {u : u^T g v = 0 for all v in n}, for a symmetric Gram matrix g.
Subspace orthocomplement(const Subspace &n, const GFMatrix &g);

/// A complement of sub inside super: vectors of super vanishing on the pivot columns of sub, in RREF.
Subspace pivot_complement(const Subspace &super, const Subspace &sub);

/// Chosen section of N-perp -> N-perp / N.
class QuotientSection {
   public:
    QuotientSection() = default;
    QuotientSection(const Subspace &n, const GFMatrix &g);

    const Subspace &n() const {
        return n_;
    }
    const Subspace &perp() const {
        return perp_;
    }
    /// Basis l_1..l_k of the chosen complement T_N.
    const Subspace &complement() const {
        return complement_;
    }
    size_t quotient_dim() const {
        return complement_.dim();
    }
    Vec lift(const Vec &coords) const;
    /// Coordinates of the coset v + N for v in N-perp.
    Vec project(const Vec &v) const;

   private:
    Subspace n_;
    Subspace perp_;
    Subspace complement_;
};

}  // namespace cliffdual

#endif
