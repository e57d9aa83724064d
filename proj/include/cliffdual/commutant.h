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

#ifndef CLIFFDUAL_COMMUTANT_H
#define CLIFFDUAL_COMMUTANT_H

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cliffdual/cliffordrep.h"
#include "cliffdual/exact_op.h"
#include "cliffdual/orthostoch.h"

namespace cliffdual {

/// Columns of F in N-perp lifting the T_N coordinates fbar ((t - 2m) x n).
GFMatrix lift_coset(const IsoSubspace &n, const GFMatrix &fbar);
/// All fbar in Z_d^{(t - 2m) x n}, in code order.
std::vector<GFMatrix> all_coset_labels(const IsoSubspace &n, size_t ncols);

/// Exact state stored by its support: sorted (index, value) pairs with a shared d^(-k/2) factor.
struct SparseState {
    size_t n = 0;
    size_t t = 0;
    int d = 2;
    std::vector<std::pair<uint64_t, CycInt>> entries;
    int k = 0;

    ExactState to_dense() const;
};

/// |[F]_N> for the lift F of fbar.
SparseState coset_state_sparse(const IsoSubspace &n, const GFMatrix &fbar, size_t ncols);
ExactState coset_state(const IsoSubspace &n, const GFMatrix &fbar, size_t ncols);

/// <a|b> by merging supports.
CycScalar overlap(const SparseState &a, const SparseState &b);
CycScalar overlap(const IsoSubspace &ni, const GFMatrix &fbar_i, const IsoSubspace &nj, const GFMatrix &fbar_j, size_t ncols);
/// Overlap of two t = 5 qubit coset states by the closed form 2^{-n} delta([F_j], [E_ij F_i]), E_ij = 1 + e_i e_j^T.
CycScalar overlap_closed_form_t5(const IsoSubspace &ni, const GFMatrix &fbar_i, const IsoSubspace &nj, const GFMatrix &fbar_j,
                                 size_t ncols);

/// Single-column operators on (C^d)^{(x) t}; the operator on H_{n,t} is the n-th tensor power.
/// P(N) = d^{-2m} sum_{u,v in N} X(u) Z(v), with Z(v) |f> = omega^{beta_{r,s}(v, f)} |f>.
ExactOp projector_P(const IsoSubspace &n);
/// sum over cosets of |[f]_N><[f]_N|.
ExactOp projector_from_cosets(const IsoSubspace &n);
/// R(O) = sum_f |O f><f|.
ExactOp column_R(const GFMatrix &o);
/// Delta_{r,s}(g) on one column for a single-qudit gate g (acting on qudit 0 of a one-qudit word).
ExactOp column_generator(const Gate &g, size_t r, size_t s, int d);
/// O N.
IsoSubspace conjugate_code(const GFMatrix &o, const IsoSubspace &n);
/// R(O) psi.
ExactState R_apply(const GFMatrix &o, const ExactState &psi);
/// A^{(x) n} psi for a single-column operator A.
ExactState apply_columnwise(const ExactOp &a, const ExactState &psi);
FloatState apply_columnwise(const std::vector<std::vector<std::complex<double>>> &a, const FloatState &psi);

/// Whether A^{(x) n} commutes with Delta_{r,s}(g) for g in {H_i, P_i, CADD_ij}. Single-qudit gates are
/// checked on one column, CADD on a pair of columns.
bool commutes_with_generators(const ExactOp &a, size_t r, size_t s, size_t n, std::string *failed = nullptr);

/// Every stochastic isotropic N (both strata, every dimension including 0), sorted by dimension then N.
std::vector<IsoSubspace> all_stochastic_isotropic(size_t r, size_t s, int d, const CacheDir &cache = {});

struct SemigroupElement {
    size_t o_index = 0;
    GFMatrix o;
    IsoSubspace n;
    ExactOp op;
};

/// Distinct operators R(O) P(N); the first (O, N) in (N order, group order) is kept for each operator.
std::vector<SemigroupElement> semigroup_elements(const FiniteMatrixGroup &o1, const std::vector<IsoSubspace> &codes);

struct SemigroupProduct {
    size_t o_index = 0;
    GFMatrix o;
    IsoSubspace i;
    /// P(N1) P(N2) = scalar * R(O) P(I) on one column.
    CycScalar scalar;
};

/// Reads I off the column support of the single-column product, then searches O in group order.
/// Throws std::runtime_error when no (O, I) reproduces the product.
SemigroupProduct semigroup_product(const IsoSubspace &n1, const IsoSubspace &n2, const FiniteMatrixGroup &o1);

/// tr(A^dagger B)^n from single-column traces.
std::vector<std::vector<Rational>> gram_matrix_S(const std::vector<SemigroupElement> &elements, size_t n);
size_t rational_rank(std::vector<std::vector<Rational>> m);
/// Value of a rational field element; throws if it is not rational.
Rational rational_value(const CycScalar &v);

struct CommutantDimension {
    size_t nullity = 0;
    uint64_t prime = 0;
    /// Unknowns left after the monomial generators identify matrix entries.
    size_t variables = 0;
};

/// Dimension of the commutant of Delta_{r,s} on H_{n,t} from the linear system X G = G X over the generators,
/// solved modulo a prime p = 1 mod M. The result is an upper bound on the true dimension.
CommutantDimension commutant_dimension_mod_p(size_t r, size_t s, int d, size_t n);

}  // namespace cliffdual

#endif
