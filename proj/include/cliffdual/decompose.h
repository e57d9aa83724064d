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

#ifndef CLIFFDUAL_DECOMPOSE_H
#define CLIFFDUAL_DECOMPOSE_H

#include <complex>
#include <memory>
#include <string>
#include <vector>

#include "cliffdual/commutant.h"
#include "json.hpp"

namespace cliffdual {

/// Finite sum sum_k c_k A_k^{(x) n} of tensor powers of single-column operators.
class TensorSum {
   public:
    struct Term {
        Rational coeff;
        ExactOp op;
    };

    TensorSum() = default;
    TensorSum(int d, size_t t);
    static TensorSum identity(int d, size_t t);
    static TensorSum single(const ExactOp &op, const Rational &coeff = Rational(1));

    int d() const {
        return d_;
    }
    size_t t() const {
        return t_;
    }
    const std::vector<Term> &terms() const {
        return terms_;
    }
    size_t size() const {
        return terms_.size();
    }

    void add(const ExactOp &op, const Rational &coeff);
    TensorSum scaled(const Rational &c) const;
    /// Merges equal operators and drops vanishing coefficients.
    void simplify();

    friend TensorSum operator+(const TensorSum &a, const TensorSum &b);
    friend TensorSum operator-(const TensorSum &a, const TensorSum &b);
    /// (sum a_k A_k^{(x)n})(sum b_l B_l^{(x)n}) = sum a_k b_l (A_k B_l)^{(x)n}.
    friend TensorSum operator*(const TensorSum &a, const TensorSum &b);

    /// Squared Hilbert-Schmidt norm on H_{n,t}: sum c_k c_l tr(A_k^dagger A_l)^n.
    CycScalar hs_norm_sq(size_t n) const;
    bool is_zero(size_t n) const;
    /// Whether every term commutes with the generators (sufficient for the sum).
    bool terms_commute_with_generators(size_t r, size_t s, size_t n, std::string *failed = nullptr) const;
    FloatState apply(const FloatState &psi) const;

   private:
    int d_ = 2;
    size_t t_ = 0;
    std::vector<Term> terms_;
};

/// sum_{O in G} R(O)^{(x)n} / |G|.
TensorSum group_average(const FiniteMatrixGroup &g);

/// Rank-layer operators: C'_m over Gr_m, D_m over Gr0_m, and C_m = (1 - P(1_t)) C'_m.
struct LayerOperators {
    size_t r = 0;
    size_t s = 0;
    int d = 2;
    size_t n = 1;
    bool ones_isotropic = false;
    /// gr[m], gr0[m]: codes of dimension m without / with 1_t.
    std::vector<std::vector<IsoSubspace>> gr;
    std::vector<std::vector<IsoSubspace>> gr0;

    size_t top() const {
        return gr.size() - 1;
    }
    TensorSum c_prime(size_t m) const;
    TensorSum d_layer(size_t m) const;
    TensorSum c(size_t m) const;
    /// P(<1_t>), or the zero sum when 1_t is anisotropic.
    TensorSum p_ones() const;
};

LayerOperators build_layers(size_t r, size_t s, int d, size_t n, const CacheDir &cache = {});

struct LayerCheck {
    std::string name;
    bool ok = false;
    std::string detail;
};

/// P(N) commutes with the generators and P(1_t); P(1_t) C'_m = d^m D_{m+1}; O_1(T) permutes each stratum.
std::vector<LayerCheck> layer_commutation_suite(const LayerOperators &layers);

/// Explicit t = 5 qubit decomposition.
struct T5Component {
    /// "complement" for the S_5 isotypic parts of the code-span complement, "code" for the G_N parts of the span.
    std::string side;
    std::vector<int> partition;
    int64_t degree = 0;
    /// Dimension of the isotypic subspace.
    uint64_t dimension = 0;
};

struct CosetSpan {
    size_t n = 0;
    size_t states = 0;
    size_t rank = 0;
    bool rank_certified = false;
    size_t components = 0;
    size_t largest_component = 0;
    /// Spectrum of Q = sum P(N_i) on the span (the nonzero Gram eigenvalues).
    double q_min = 0;
    double q_max = 0;
    double epsilon = 0;
    double gram_condition = 0;
    bool within_epsilon = false;
    nlohmann::json to_json() const;
};

/// epsilon(n) = 5 (4^-n + 2^-n) + 20 4^-n.
double approx_projector_epsilon(size_t n);

/// Gram matrix of the coset states of the five t = 5 codes by sparse overlaps, split into connected components;
/// rank is certified mod a prime when full, otherwise computed over Q per component.
CosetSpan t5_coset_span(size_t n);

struct T5OverlapCheck {
    size_t pairs = 0;
    size_t mismatches = 0;
};

/// <[F_j]_{N_j}|[F_i]_{N_i}> = 2^{-n} delta([F_j], [E_ij F_i]) for i != j, against the sparse Gram matrix.
T5OverlapCheck t5_overlap_law(size_t n);

struct T5Report {
    size_t n = 0;
    std::vector<IsoSubspace> codes;
    std::vector<T5Component> components;
    uint64_t total_dimension = 0;
    bool dimensions_complete = false;
    CosetSpan span;
    /// Every term of every projector's defining sum commutes exactly with the generators.
    bool exact_commutation = false;
    /// (sum chi* R)^2 = (|G| / dim) sum chi* R for every S_5 character.
    bool character_idempotent = false;
    /// Float checks of the implicit projectors on random vectors (n = 3).
    bool float_checked = false;
    double idempotent_error = 0;
    double orthogonality_error = 0;
    double completeness_error = 0;
    double commutation_error = 0;
    nlohmann::json to_json() const;
};

struct T5Options {
    bool float_checks = true;
    size_t random_vectors = 2;
    uint64_t seed = 1;
};

/// Requires 1 <= n <= 5. Character dimensions assume independent coset states, which fails at n <= 2;
/// the span analysis is skipped above n = 4 and float checks run only at n = 3.
T5Report t5_pipeline(size_t n, const T5Options &options = {});

/// Implicit projectors of the t = 5 decomposition at n = 3.
class T5Projectors {
   public:
    explicit T5Projectors(size_t n);
    size_t count() const;
    const T5Component &component(size_t i) const {
        return components_[i];
    }
    FloatState apply(size_t i, const FloatState &psi) const;
    /// Orthogonal projector onto the span of the five codes.
    FloatState apply_span(const FloatState &psi) const;

   private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
    std::vector<T5Component> components_;
};

/// Stabilizer tensor-power compression.
struct StabCompression {
    LayerOperators layers;
    TensorSum p_stab;
    size_t group_order = 0;
    bool p_stab_idempotent = false;
    bool p_stab_self_adjoint = false;
    /// Every commutator [X, Y] P_stab with X, Y in {C_m, D_m} vanishes.
    bool commutators_vanish = false;
    /// [X P_stab, Y P_stab] = 0 for X, Y in {C_m, D_{m+1}}.
    bool compression_abelian = false;
    std::vector<std::string> failures;
    nlohmann::json to_json() const;
};

StabCompression stab_subspace_ops(size_t r, size_t s, int d, size_t n, const CacheDir &cache = {});

/// Predicate: r + s <= 3, rs = 0, and l(3) = -l(-1) when r + s = 3.
bool exact_duality_predicate(int d, size_t r, size_t s);
/// Predicate for (r, s) = (t, 0).
bool exact_duality_check(int d, size_t t);

struct ExactDualityRow {
    int d = 3;
    size_t r = 0;
    size_t s = 0;
    bool predicate = false;
    bool enumeration_empty = false;
    bool mod3_reduction = false;
    bool agree = false;
};

/// Predicate against enumeration of Gr and Gr0 for every (r, s) with r + s = t.
std::vector<ExactDualityRow> exact_duality_table(int d, size_t t);

/// Weyl basis of C_{1_t}: copies (2k, 2k+1) hold vec(W(a_k)) / 2^{n/2}; the last pair holds W(a_1 + ... + a_t').
struct WeylBasisState {
    /// t' x 2n, rows (a_z, a_x).
    GFMatrix a;
};

std::vector<WeylBasisState> weyl_basis(size_t n, size_t t);
SparseState weyl_basis_vector(const WeylBasisState &w, size_t n, size_t t);

struct RealCliffordSuite {
    size_t n = 0;
    size_t t = 0;
    size_t basis_size = 0;
    size_t expected_size = 0;
    bool orthonormal = false;
    bool stabilized = false;
    bool in_code = false;
    bool actions_commute = false;
    size_t symplectic_order = 0;
    /// Checked only when n = 1.
    bool weyl_transform = false;
    bool weyl_transform_checked = false;
    nlohmann::json to_json() const;
};

/// d = 2, (r, s) = (t, 0); requires t = 0 mod 4 and nt <= 12.
RealCliffordSuite real_clifford_suite(size_t n, size_t t);

/// Coset representative f of the Weyl transform sum_{w'} (-1)^{u'.w'} Psi_{(w', v')} for n = 1.
Vec weyl_transform_coset(const Vec &u, const Vec &v);

struct OrbitCount {
    size_t n = 0;
    size_t tp = 0;
    size_t group_order = 0;
    size_t orbits = 0;
    size_t signatures = 0;
    /// Orbits of t' independent vectors.
    size_t full_rank_orbits = 0;
    /// 2^{t'^2}.
    uint64_t estimate = 0;
    nlohmann::json to_json() const;
};

/// Orbits of O(V), V = Z_2^{2n} with kappa(v) = v_z . v_x, on V^{t'}: explicit partition vs invariant signatures.
OrbitCount orbit_count(size_t n, size_t tp);

struct TrivialProbe {
    size_t r = 0;
    size_t s = 0;
    size_t n = 0;
    size_t iterations = 0;
    double residual_norm = 0;
    double fixed_defect = 0;
    bool nonzero = false;
    bool predicted_nonzero = false;
};

/// Heuristic: iterates the averaging map over the generators and their inverses on a random start.
TrivialProbe trivial_component_probe(size_t r, size_t s, size_t n, size_t iterations = 400, uint64_t seed = 7);

/// Weyl operators act trivially on C_{1_t}: checks every coset basis state of <1_t> at n qudits.
bool weyl_trivial_on_ones_code(size_t r, size_t s, int d, size_t n);

}  // namespace cliffdual

#endif
