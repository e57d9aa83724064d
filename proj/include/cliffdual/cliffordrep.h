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

#ifndef CLIFFDUAL_CLIFFORDREP_H
#define CLIFFDUAL_CLIFFORDREP_H

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "cliffdual/cyc_matrix.h"
#include "cliffdual/forms.h"

namespace cliffdual {

enum class GateKind { h, p, cadd, weyl, phase };

/// One Clifford generator. Qudit indices are zero-based.
struct Gate {
    GateKind kind = GateKind::h;
    size_t a = 0;
    size_t b = 0;
    /// Weyl label (v_z, v_x) of length 2n.
    Vec v;
    /// Global phase zeta_M^k.
    int64_t k = 0;

    static Gate H(size_t i);
    static Gate P(size_t i);
    static Gate CADD(size_t control, size_t target);
    static Gate Weyl(const Vec &v);
    static Gate Phase(int64_t k);

    std::string str() const;
    bool operator==(const Gate &o) const;
};

/// Gate sequence applied left to right: the word g1 g2 ... is the operator ... g2 g1.
struct CliffordWord {
    size_t n = 1;
    int d = 2;
    std::vector<Gate> gates;

    CliffordWord() = default;
    CliffordWord(size_t n, int d);

    /// Appends after validating indices and labels.
    CliffordWord &push(const Gate &g);
    /// This word followed by o.
    CliffordWord then(const CliffordWord &o) const;
    CliffordWord inverse() const;
    size_t size() const {
        return gates.size();
    }

    /// Whitespace separated tokens such as "H3 P1 CADD2,5 W:0110 PH:3".
    std::string str() const;
    static CliffordWord parse(const std::string &text, size_t n, int d);
};

/// Amplitudes of |F> for F in Z_d^{t x n}. The digit of copy c of qudit i sits at position i t + c.
///
/// Exact states (S = CycInt) share one d^(-k/2) factor across all amplitudes.
template <typename S>
class StateVector {
   public:
    StateVector() = default;
    StateVector(size_t n, size_t t, int d);
    static StateVector basis(size_t n, size_t t, int d, const GFMatrix &f);
    static StateVector basis_index(size_t n, size_t t, int d, uint64_t index);

    size_t n() const {
        return n_;
    }
    size_t t() const {
        return t_;
    }
    int d() const {
        return d_;
    }
    uint64_t dim() const {
        return amp_.size();
    }
    uint64_t index_of(const GFMatrix &f) const;
    GFMatrix matrix_of(uint64_t index) const;
    /// Stride of the digit for copy c of qudit i.
    uint64_t stride(size_t i, size_t c) const {
        return strides_[i * t_ + c];
    }

    std::vector<S> &amplitudes() {
        return amp_;
    }
    const std::vector<S> &amplitudes() const {
        return amp_;
    }
    int sqrt_d_exp() const {
        return k_;
    }
    void set_sqrt_d_exp(int k) {
        k_ = k;
    }
    const ScalarOps<S> &ops() const {
        return ops_;
    }

    /// Amplitude as a field element (exact) or a double (float).
    CycScalar amplitude(uint64_t index) const;
    std::complex<double> amplitude_complex(uint64_t index) const;
    size_t support_size() const;

    /// Applies Delta_{r,s}(g): copies c >= r see the complex conjugate gate.
    void apply_gate(const Gate &g, size_t r, size_t s);
    void apply_word(const CliffordWord &w, size_t r, size_t s);
    /// Removes common factors of d from the exact representation.
    void normalize_scale();

   private:
    void require_shape(size_t n, size_t r, size_t s) const;
    void apply_fourier(size_t qudit, size_t r);
    void apply_diagonal_phase(size_t qudit, size_t r);
    void apply_cadd(size_t control, size_t target);
    void apply_weyl(const Vec &v, size_t r);

    size_t n_ = 0;
    size_t t_ = 0;
    int d_ = 2;
    std::vector<uint64_t> strides_;
    std::vector<S> amp_;
    int k_ = 0;
    ScalarOps<S> ops_{2};
};

using ExactState = StateVector<CycInt>;
using FloatState = StateVector<std::complex<double>>;

/// Largest d^{nt} accepted by StateVector.
constexpr uint64_t kMaxStateDim = uint64_t{1} << 24;

/// <a|b>.
CycScalar inner(const ExactState &a, const ExactState &b);
std::complex<double> inner(const FloatState &a, const FloatState &b);
bool same_state(const ExactState &a, const ExactState &b);
double max_abs_diff(const FloatState &a, const FloatState &b);

/// Delta_{r,s}(word) psi, never forming the d^{nt} x d^{nt} matrix.
template <typename S>
StateVector<S> apply_tensor_power(const CliffordWord &word, size_t r, size_t s, StateVector<S> psi);

/// |F> -> |g F> for invertible g in GL(T); g acts on every column of F.
template <typename S>
StateVector<S> apply_column_map(const GFMatrix &g, const StateVector<S> &psi);

/// Exact d^n x d^n matrices indexed by vec_code.
CycMatrix gate_matrix(const Gate &g, size_t n, int d);
CycMatrix word_matrix(const CliffordWord &w);
/// Delta_{r,s}(w) on H_{n,t} as an exact matrix; only for small d^{nt}.
CycMatrix tensor_power_matrix(const CliffordWord &w, size_t r, size_t s);

/// W_v = tau^{-(v_z . v_x mod d)} Z(v_z) X(v_x).
CycMatrix weyl(const Vec &v, size_t n, int d);
/// [v, u] = v_z . u_x - v_x . u_z over representatives in [0, d), reduced mod D.
int64_t symplectic_form(const Vec &v, const Vec &u, int d);

struct WeylComposition {
    int64_t symplectic = 0;
    /// W_v W_u = tau^{[v,u] + residual} W_{v+u}; residual is in tau units mod D.
    int64_t residual = 0;
    bool exact = false;
};

WeylComposition weyl_compose_check(const Vec &v, const Vec &u, size_t n, int d);

/// Weight of |F>: M_F = F^T M_{r,s} F on X* for F in Z_d^{t x n}.
struct Weight {
    SymBilForm b;

    size_t rank() const;
};

Weight weight_of_basis_state(const GFMatrix &f, size_t r, size_t s);
/// (w, q) = tr(M_q M_w) mod d.
int64_t weight_pairing(const QuadForm &q, const Weight &w);
/// F in Z_d^{t x n} whose weight has rank min(n, t).
GFMatrix max_rank_basis_state(size_t n, size_t r, size_t s, int d);

struct EigenvalueCheck {
    /// omega exponent predicted by the pairing.
    int64_t predicted = 0;
    CycScalar observed;
    bool match = false;
};

/// Applies Delta_{r,s}(U_q) with U_q = sum omega^{q(x)} |x><x| to |F> and compares with omega^{(w_F, q)}.
EigenvalueCheck weight_eigenvalue_check(const QuadForm &q, const GFMatrix &f, size_t r, size_t s);

/// Z_D-valued form Q with tau^{Q(x)} = omega^{q(x)}.
GenQuadForm phase_form(const QuadForm &q);
/// Word whose matrix is exactly sum_x tau^{q(x) + 2 x'.x} |x><x|.
CliffordWord diagonal_clifford(const GenQuadForm &q, const Vec &xprime);
/// Uniform over generator sequences {H_i, P_i, CADD_ij}; not uniform over the group.
CliffordWord random_clifford_word(size_t n, int d, size_t length, uint64_t seed);

/// g with g 1_t = 1_t and q_{r2,s2}(g u) = q_{r,s}(u), so that |F> -> |g F> intertwines the two tensor powers.
std::optional<GFMatrix> rs_intertwiner(size_t r, size_t s, size_t r2, size_t s2, int d);
/// Checks Delta_{r2,s2}(g) R = R Delta_{r,s}(g) on every basis state for the generators on n qudits.
bool check_rs_intertwiner(const GFMatrix &g, size_t r, size_t s, size_t r2, size_t s2, size_t n);

}  // namespace cliffdual

#endif
