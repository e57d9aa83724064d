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

#ifndef CLIFFDUAL_FORMS_H
#define CLIFFDUAL_FORMS_H

#include <optional>
#include <string>
#include <vector>

#include "cliffdual/modint.h"
#include "cliffdual/subspace.h"
#include "json.hpp"

namespace cliffdual {

/// Symmetric bilinear form given by its Gram matrix.
struct SymBilForm {
    GFMatrix matrix;

    SymBilForm() = default;
    explicit SymBilForm(const GFMatrix &m);
    static SymBilForm dot(int d, size_t t);
    /// beta_{r,s} = diag(+1 x r, -1 x s).
    static SymBilForm model(size_t r, size_t s, int d);
    /// Hyperbolic plane: beta(e, f) = 1, beta(e, e) = beta(f, f) = 0.
    static SymBilForm hyperbolic(int d);

    int d() const {
        return matrix.d();
    }
    size_t dim() const {
        return matrix.rows();
    }
    int64_t operator()(const Vec &u, const Vec &v) const {
        return bilinear(u, matrix, v);
    }
    bool operator==(const SymBilForm &o) const {
        return matrix == o.matrix;
    }
};

/// Z_d-valued quadratic form q(u) = u^T rep u with rep upper triangular.
struct QuadForm {
    GFMatrix rep;

    QuadForm() = default;
    /// Any square matrix; canonicalized to the upper-triangular representative.
    explicit QuadForm(const GFMatrix &m);

    int d() const {
        return rep.d();
    }
    size_t dim() const {
        return rep.rows();
    }
    bool operator==(const QuadForm &o) const {
        return rep == o.rep;
    }
};

/// Z_D-valued generalized quadratic form with 2 beta(u, v) = q(u + v) - q(u) - q(v).
struct GenQuadForm {
    int d = 2;
    int64_t D = 4;
    std::vector<int64_t> diag;
    SymBilForm polar;

    GenQuadForm() = default;
    GenQuadForm(std::vector<int64_t> diag, const SymBilForm &polar);

    size_t dim() const {
        return diag.size();
    }
    /// Upper-triangular matrix over Z_D with u^T U u = q(u) for u with entries in [0, d).
    std::vector<std::vector<int64_t>> upper_triangular() const;
    GenQuadForm direct_sum(const GenQuadForm &o) const;
    bool operator==(const GenQuadForm &o) const {
        return d == o.d && D == o.D && diag == o.diag && polar == o.polar;
    }

    nlohmann::json to_json() const;
    static GenQuadForm from_json(const nlohmann::json &j);
};

struct FormInvariants {
    size_t dim = 0;
    size_t rank = 0;
    std::optional<int> dis;
    std::optional<std::string> type;
    std::optional<int> arf;
    std::optional<int> garf;
    /// d = 2 quadratic and generalized forms: whether q vanishes on rad(polarization).
    std::optional<bool> radical_isotropic;

    bool operator==(const FormInvariants &o) const;
    nlohmann::json to_json() const;
};

ModInt evaluate(const QuadForm &q, const Vec &u);
ModInt evaluate(const GenQuadForm &q, const Vec &u);

SymBilForm polarize(const QuadForm &q);
GenQuadForm generalized_refine(const SymBilForm &beta);
/// The symmetric form beta with beta(u, u) = q(u) for odd d.
SymBilForm half_polar(const QuadForm &q);

FormInvariants invariants(const SymBilForm &b);
FormInvariants invariants(const QuadForm &q);
FormInvariants invariants(const GenQuadForm &q);
/// Arf invariant of a d = 2 quadratic form; throws for degenerate polarization.
int arf(const QuadForm &q);
/// Phase of the Gauss sum sum_u i^q(u) in units of 2 pi / 8; empty if the sum vanishes.
std::optional<int> gauss_phase(const GenQuadForm &q);

struct Equivalence {
    bool equivalent = false;
    /// g with q2(g u) = q1(u); columns are the images of basis vectors.
    std::optional<GFMatrix> witness;
};

/// Decides equivalence. A witness is searched when dim <= witness_max_dim; the search is
/// authoritative when it runs.
Equivalence equivalent(const SymBilForm &a, const SymBilForm &b, size_t witness_max_dim = 5);
Equivalence equivalent(const QuadForm &a, const QuadForm &b, size_t witness_max_dim = 5);
Equivalence equivalent(const GenQuadForm &a, const GenQuadForm &b, size_t witness_max_dim = 5);

/// Witness search for generalized forms with a cap on visited nodes. Empty if none found.
std::optional<GFMatrix> find_isometry(const GenQuadForm &a, const GenQuadForm &b, uint64_t node_budget = 50000000);
/// Same, additionally requiring g v = v.
std::optional<GFMatrix> find_isometry_fixing(const GenQuadForm &a, const GenQuadForm &b, const Vec &v,
                                             uint64_t node_budget = 50000000);
/// u -> q(b u).
GenQuadForm pullback(const GenQuadForm &q, const GFMatrix &b);

/// q_{r,s} on Z_d^{r+s}.
GenQuadForm model_form(size_t r, size_t s, int d);
/// q restricted to N-perp / N in the coordinates of the section.
GenQuadForm restrict_to_quotient(const GenQuadForm &q, const QuotientSection &section);
/// Whether q vanishes on the subspace.
bool is_isotropic(const GenQuadForm &q, const Subspace &n);

}  // namespace cliffdual

#endif
