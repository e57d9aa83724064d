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

#include <random>

#include "cliffdual/cliffordrep.h"
#include "gtest/gtest.h"

using namespace cliffdual;

namespace {

CycScalar z(int d, int64_t j) {
    return CycScalar::root(CycField::for_qudit(d), j);
}

GFMatrix random_matrix(int d, size_t rows, size_t cols, std::mt19937_64 &rng) {
    GFMatrix m(d, rows, cols);
    for (size_t i = 0; i < rows; i++) {
        for (size_t j = 0; j < cols; j++) {
            m.set(i, j, static_cast<int64_t>(rng() % static_cast<uint64_t>(d)));
        }
    }
    return m;
}

QuadForm random_quad(int d, size_t n, std::mt19937_64 &rng) {
    return QuadForm(random_matrix(d, n, n, rng));
}

GenQuadForm random_gen_quad(int d, size_t n, std::mt19937_64 &rng) {
    GFMatrix b(d, n, n);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i + 1; j < n; j++) {
            int64_t v = static_cast<int64_t>(rng() % static_cast<uint64_t>(d));
            b.set(i, j, v);
            b.set(j, i, v);
        }
    }
    std::vector<int64_t> diag;
    for (size_t i = 0; i < n; i++) {
        if (d == 2) {
            diag.push_back(2 * static_cast<int64_t>(rng() % 2));
            if (rng() % 2) {
                diag.back() += 1;
                b.set(i, i, 1);
            }
        } else {
            diag.push_back(static_cast<int64_t>(rng() % static_cast<uint64_t>(d)));
            b.set(i, i, diag.back());
        }
    }
    return GenQuadForm(diag, SymBilForm(b));
}

}  // namespace

TEST(cliffordrep, hadamard_qubit) {
    CycMatrix h = gate_matrix(Gate::H(0), 1, 2);
    CycScalar s = CycScalar::inv_sqrt_d_power(CycField::for_qudit(2), 1);
    ASSERT_EQ(h.at(0, 0), s);
    ASSERT_EQ(h.at(0, 1), s);
    ASSERT_EQ(h.at(1, 0), s);
    ASSERT_EQ(h.at(1, 1), -s);
}

TEST(cliffordrep, phase_qubit_is_diag_one_i) {
    CycMatrix p = gate_matrix(Gate::P(0), 1, 2);
    ASSERT_EQ(p.at(0, 0), CycScalar::one(CycField::for_qudit(2)));
    ASSERT_EQ(p.at(1, 1), z(2, 2));
    ASSERT_TRUE(p.at(0, 1).is_zero());
    ASSERT_TRUE(p.at(1, 0).is_zero());
}

TEST(cliffordrep, phase_qutrit) {
    CycMatrix p = gate_matrix(Gate::P(0), 1, 3);
    for (int64_t x = 0; x < 3; x++) {
        ASSERT_EQ(p.at(static_cast<size_t>(x), static_cast<size_t>(x)), phase_tau(x * (x - 1), 3));
    }
}

TEST(cliffordrep, cadd_qutrit) {
    CycMatrix c = gate_matrix(Gate::CADD(0, 1), 2, 3);
    uint64_t src = vec_code({1, 2}, 3);
    uint64_t dst = vec_code({1, 0}, 3);
    ASSERT_EQ(c.at(dst, src), CycScalar::one(CycField::for_qudit(3)));
    ASSERT_EQ(c.nnz(), 9u);
}

TEST(cliffordrep, generators_unitary) {
    for (int d : {2, 3, 5}) {
        for (size_t n : {1, 2}) {
            std::vector<Gate> gates;
            for (size_t i = 0; i < n; i++) {
                gates.push_back(Gate::H(i));
                gates.push_back(Gate::P(i));
            }
            if (n == 2) {
                gates.push_back(Gate::CADD(0, 1));
                gates.push_back(Gate::CADD(1, 0));
            }
            Vec v(2 * n, 1);
            gates.push_back(Gate::Weyl(v));
            gates.push_back(Gate::Phase(3));
            for (const auto &g : gates) {
                CycMatrix u = gate_matrix(g, n, d);
                ASSERT_TRUE((u * u.adjoint()).is_identity()) << g.str() << " d=" << d;
            }
        }
    }
}

TEST(cliffordrep, tensor_power_preserves_inner_products) {
    std::mt19937_64 rng(5);
    for (int d : {2, 3}) {
        size_t n = 2;
        size_t t = d == 2 ? 4 : 2;
        for (size_t r = 0; r <= t; r += 2) {
            CliffordWord w = random_clifford_word(n, d, 12, rng());
            std::vector<ExactState> images;
            uint64_t dim = int_pow(static_cast<uint64_t>(d), n * t);
            for (uint64_t j = 0; j < dim; j += (dim / 16 > 0 ? dim / 16 : 1)) {
                images.push_back(apply_tensor_power(w, r, t - r, ExactState::basis_index(n, t, d, j)));
            }
            auto one = CycScalar::one(CycField::for_qudit(d));
            for (size_t i = 0; i < images.size(); i++) {
                for (size_t j = 0; j < images.size(); j++) {
                    CycScalar ip = inner(images[i], images[j]);
                    if (i == j) {
                        ASSERT_EQ(ip, one);
                    } else {
                        ASSERT_TRUE(ip.is_zero());
                    }
                }
            }
        }
    }
}

TEST(cliffordrep, identity_word_leaves_state) {
    std::mt19937_64 rng(1);
    ExactState psi = apply_tensor_power(random_clifford_word(2, 3, 8, 7), 1, 1, ExactState::basis_index(2, 2, 3, 4));
    ExactState out = apply_tensor_power(CliffordWord(2, 3), 1, 1, psi);
    ASSERT_TRUE(same_state(psi, out));
}

TEST(cliffordrep, hadamard_cubed_uniform) {
    CliffordWord w(1, 2);
    w.push(Gate::H(0));
    ExactState psi = apply_tensor_power(w, 3, 0, ExactState::basis_index(1, 3, 2, 0));
    CycScalar expected = CycScalar::inv_sqrt_d_power(CycField::for_qudit(2), 3);
    for (uint64_t i = 0; i < 8; i++) {
        ASSERT_EQ(psi.amplitude(i), expected);
    }
}

TEST(cliffordrep, center_phase_cancels_when_r_equals_s) {
    for (int d : {2, 3}) {
        CliffordWord w(1, d);
        w.push(Gate::Phase(tau_exponent(1, d)));
        ExactState psi = apply_tensor_power(random_clifford_word(1, d, 6, 3), 1, 1, ExactState::basis_index(1, 2, d, 1));
        ASSERT_TRUE(same_state(apply_tensor_power(w, 1, 1, psi), psi));
        ASSERT_FALSE(same_state(apply_tensor_power(w, 2, 0, psi), psi));
    }
}

TEST(cliffordrep, inverse_word) {
    for (int d : {2, 3}) {
        CliffordWord w = random_clifford_word(2, d, 20, 11);
        w.push(Gate::Weyl({1, 0, 1, 1})).push(Gate::Phase(5));
        ASSERT_TRUE(word_matrix(w.then(w.inverse())).is_identity());
    }
}

TEST(cliffordrep, float_matches_exact) {
    CliffordWord w = random_clifford_word(2, 3, 25, 2);
    ExactState e = apply_tensor_power(w, 1, 1, ExactState::basis_index(2, 2, 3, 5));
    FloatState f = apply_tensor_power(w, 1, 1, FloatState::basis_index(2, 2, 3, 5));
    for (uint64_t i = 0; i < e.dim(); i++) {
        ASSERT_LT(std::abs(e.amplitude_complex(i) - f.amplitude_complex(i)), 1e-12);
    }
}

TEST(cliffordrep, word_text_round_trip) {
    CliffordWord w = CliffordWord::parse("H3 P1 CADD2,5 W:011010100110 PH:3", 6, 2);
    ASSERT_EQ(w.size(), 5u);
    ASSERT_EQ(w.gates[2], Gate::CADD(2, 5));
    ASSERT_EQ(w.str(), "H3 P1 CADD2,5 W:011010100110 PH:3");
    ASSERT_EQ(CliffordWord::parse(w.str(), 6, 2).gates, w.gates);
    ASSERT_EQ(CliffordWord::parse("PH:-1", 1, 2).gates[0].k, 7);
    ASSERT_THROW(CliffordWord::parse("H6", 6, 2), std::invalid_argument);
    ASSERT_THROW(CliffordWord::parse("CADD1,1", 6, 2), std::invalid_argument);
    ASSERT_THROW(CliffordWord::parse("W:01", 6, 2), std::invalid_argument);
    ASSERT_THROW(CliffordWord::parse("X0", 6, 2), std::invalid_argument);
}

TEST(cliffordrep, shape_mismatch_throws) {
    ExactState psi(2, 3, 2);
    ASSERT_THROW(apply_tensor_power(CliffordWord(2, 2), 2, 2, psi), std::invalid_argument);
    ASSERT_THROW(apply_tensor_power(CliffordWord(1, 2), 3, 0, psi), std::invalid_argument);
}

TEST(cliffordrep, weyl_identity_and_y) {
    ASSERT_TRUE(weyl({0, 0}, 1, 2).is_identity());
    ASSERT_TRUE(weyl({0, 0, 0, 0}, 2, 3).is_identity());
    CycMatrix y = weyl({1, 1}, 1, 2);
    ASSERT_TRUE(y.at(0, 0).is_zero());
    ASSERT_EQ(y.at(0, 1), -z(2, 2));
    ASSERT_EQ(y.at(1, 0), z(2, 2));
}

TEST(cliffordrep, weyl_composition_basic) {
    auto c = weyl_compose_check({1, 0}, {0, 1}, 1, 2);
    ASSERT_EQ(c.symplectic, 1);
    ASSERT_TRUE(c.exact);
    c = weyl_compose_check({0, 1}, {1, 0}, 1, 2);
    ASSERT_EQ(c.symplectic, 3);
    ASSERT_TRUE(c.exact);
}

TEST(cliffordrep, weyl_composition_odd_exact) {
    for (int d : {3, 5}) {
        for (uint64_t a = 0; a < static_cast<uint64_t>(d * d); a++) {
            for (uint64_t b = 0; b < static_cast<uint64_t>(d * d); b++) {
                auto c = weyl_compose_check(vec_decode(a, d, 2), vec_decode(b, d, 2), 1, d);
                ASSERT_TRUE(c.exact) << a << " " << b;
            }
        }
    }
    auto c = weyl_compose_check({1, 2, 0, 1}, {2, 2, 1, 1}, 2, 3);
    ASSERT_TRUE(c.exact);
}

TEST(cliffordrep, weyl_composition_qubit_sign) {
    size_t exact = 0;
    for (uint64_t a = 0; a < 16; a++) {
        for (uint64_t b = 0; b < 16; b++) {
            auto c = weyl_compose_check(vec_decode(a, 2, 4), vec_decode(b, 2, 4), 2, 2);
            ASSERT_TRUE(c.residual == 0 || c.residual == 2);
            exact += c.exact ? 1 : 0;
        }
    }
    ASSERT_GT(exact, 0u);
    ASSERT_LT(exact, 256u);
    auto c = weyl_compose_check({1, 1}, {1, 0}, 1, 2);
    ASSERT_EQ(c.residual, 2);
}

TEST(cliffordrep, weight_examples) {
    GFMatrix f = GFMatrix::identity(2, 3);
    Weight w = weight_of_basis_state(f, 3, 0);
    ASSERT_EQ(w.b.matrix, GFMatrix::identity(2, 3));
    ASSERT_EQ(w.rank(), 3u);
    GFMatrix g = GFMatrix::from_strings(3, {"120", "120"});
    Weight w2 = weight_of_basis_state(g, 1, 1);
    ASSERT_EQ(w2.rank(), 0u);
}

TEST(cliffordrep, weight_eigenvalue_law) {
    std::mt19937_64 rng(17);
    for (int iter = 0; iter < 60; iter++) {
        int d = iter % 3 == 0 ? 3 : 2;
        size_t n = 1 + rng() % 3;
        size_t t = 1 + rng() % (d == 2 ? 5 : 3);
        size_t r = rng() % (t + 1);
        QuadForm q = random_quad(d, n, rng);
        GFMatrix f = random_matrix(d, t, n, rng);
        auto check = weight_eigenvalue_check(q, f, r, t - r);
        ASSERT_TRUE(check.match) << "d=" << d << " n=" << n << " t=" << t;
    }
}

TEST(cliffordrep, diagonal_clifford_examples) {
    ASSERT_TRUE(word_matrix(diagonal_clifford(GenQuadForm({0, 0}, SymBilForm(GFMatrix(2, 2, 2))), {0, 0})).is_identity());
    CliffordWord p = diagonal_clifford(GenQuadForm({1}, SymBilForm(GFMatrix::identity(2, 1))), {0});
    ASSERT_EQ(word_matrix(p), gate_matrix(Gate::P(0), 1, 2));
    CliffordWord cz = diagonal_clifford(GenQuadForm({0, 0}, SymBilForm(GFMatrix::from_strings(2, {"01", "10"}))), {0, 0});
    CycMatrix m = word_matrix(cz);
    auto one = CycScalar::one(CycField::for_qudit(2));
    for (size_t i = 0; i < 4; i++) {
        for (size_t j = 0; j < 4; j++) {
            if (i != j) {
                ASSERT_TRUE(m.at(i, j).is_zero());
            }
        }
        ASSERT_EQ(m.at(i, i), i == 3 ? -one : one);
    }
}

TEST(cliffordrep, diagonal_clifford_exact_phases) {
    std::mt19937_64 rng(23);
    for (int d : {2, 3, 5}) {
        for (size_t n : {1, 2}) {
            for (int iter = 0; iter < 6; iter++) {
                GenQuadForm q = random_gen_quad(d, n, rng);
                Vec xp(n);
                for (auto &x : xp) {
                    x = static_cast<uint8_t>(rng() % static_cast<uint64_t>(d));
                }
                CycMatrix m = word_matrix(diagonal_clifford(q, xp));
                for (uint64_t c = 0; c < m.rows(); c++) {
                    Vec x = vec_decode(c, d, n);
                    int64_t e = evaluate(q, x).value + 2 * dot(xp, x, d);
                    ASSERT_EQ(m.at(c, c), phase_tau(e, d));
                }
                ASSERT_EQ(m.nnz(), m.rows());
            }
        }
    }
}

TEST(cliffordrep, weight_transforms_under_cadd) {
    std::mt19937_64 rng(29);
    for (int iter = 0; iter < 20; iter++) {
        int d = iter % 2 == 0 ? 2 : 3;
        size_t n = 3;
        size_t t = d == 2 ? 4 : 2;
        size_t r = rng() % (t + 1);
        CliffordWord w(n, d);
        GFMatrix g = GFMatrix::identity(d, n);
        for (int k = 0; k < 6; k++) {
            size_t a = rng() % n;
            size_t b = (a + 1 + rng() % (n - 1)) % n;
            w.push(Gate::CADD(a, b));
            GFMatrix e = GFMatrix::identity(d, n);
            e.set(b, a, 1);
            g = e * g;
        }
        GFMatrix f = random_matrix(d, t, n, rng);
        ExactState psi = apply_tensor_power(w, r, t - r, ExactState::basis(n, t, d, f));
        ASSERT_EQ(psi.support_size(), 1u);
        uint64_t idx = 0;
        while (psi.amplitudes()[idx].is_zero()) {
            idx++;
        }
        GFMatrix f2 = psi.matrix_of(idx);
        ASSERT_EQ(f2, f * g.transpose());
        GFMatrix b = weight_of_basis_state(f, r, t - r).b.matrix;
        ASSERT_EQ(weight_of_basis_state(f2, r, t - r).b.matrix, g * b * g.transpose());
    }
}

TEST(cliffordrep, weight_rank_is_min_n_t) {
    for (size_t n = 1; n <= 3; n++) {
        for (size_t t = 1; t <= 3; t++) {
            for (size_t r = 0; r <= t; r++) {
                size_t best = 0;
                uint64_t total = int_pow(2, n * t);
                for (uint64_t c = 0; c < total; c++) {
                    Vec bits = vec_decode(c, 2, n * t);
                    GFMatrix f(2, t, n);
                    for (size_t i = 0; i < t; i++) {
                        for (size_t j = 0; j < n; j++) {
                            f.set(i, j, bits[i * n + j]);
                        }
                    }
                    best = std::max(best, weight_of_basis_state(f, r, t - r).rank());
                }
                ASSERT_EQ(best, std::min(n, t));
                ASSERT_EQ(weight_of_basis_state(max_rank_basis_state(n, r, t - r, 2), r, t - r).rank(), std::min(n, t));
            }
        }
    }
}

TEST(cliffordrep, rs_equivalence_witness) {
    auto g = rs_intertwiner(8, 0, 4, 4, 2);
    ASSERT_TRUE(g.has_value());
    ASSERT_EQ(g->apply(ones(8)), ones(8));
    ASSERT_TRUE(check_rs_intertwiner(*g, 8, 0, 4, 4, 1));
    ASSERT_FALSE(check_rs_intertwiner(GFMatrix::identity(2, 8), 8, 0, 4, 4, 1));
}

TEST(cliffordrep, column_map_moves_basis_states) {
    GFMatrix o = GFMatrix::from_strings(2, {"010", "100", "001"});
    GFMatrix f = GFMatrix::from_strings(2, {"10", "01", "11"});
    ExactState psi = apply_column_map(o, ExactState::basis(2, 3, 2, f));
    ASSERT_EQ(psi.amplitude(psi.index_of(o * f)), CycScalar::one(CycField::for_qudit(2)));
}
