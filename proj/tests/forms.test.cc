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

#include "cliffdual/forms.h"
#include "gtest/gtest.h"

using namespace cliffdual;

namespace {

SymBilForm random_sym(int d, size_t n, std::mt19937_64 &rng) {
    GFMatrix m(d, n, n);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i; j < n; j++) {
            int64_t v = static_cast<int64_t>(rng() % static_cast<uint64_t>(d));
            m.set(i, j, v);
            m.set(j, i, v);
        }
    }
    return SymBilForm(m);
}

GenQuadForm random_gen(size_t n, std::mt19937_64 &rng) {
    SymBilForm b = random_sym(2, n, rng);
    std::vector<int64_t> diag(n);
    for (size_t i = 0; i < n; i++) {
        diag[i] = b.matrix.get(i, i) + 2 * static_cast<int64_t>(rng() % 2);
    }
    return GenQuadForm(diag, b);
}

std::vector<Vec> domain(int d, size_t n) {
    return Subspace::full(d, n).elements();
}

size_t weight(const Vec &u) {
    size_t w = 0;
    for (auto x : u) {
        w += x != 0;
    }
    return w;
}

void expect_witness(const GenQuadForm &a, const GenQuadForm &b, const GFMatrix &g) {
    ASSERT_EQ(rank(g), a.dim());
    for (const auto &u : domain(a.d, a.dim())) {
        ASSERT_EQ(evaluate(b, g.apply(u)), evaluate(a, u));
    }
}

}  // namespace

TEST(forms, evaluate_examples) {
    ASSERT_EQ(evaluate(model_form(7, 0, 2), ones(7)).value, 3);
    ASSERT_EQ(evaluate(model_form(7, 0, 2), ones(7)).modulus, 4);
    GFMatrix h(2, 2, 2);
    h.set(0, 1, 1);
    QuadForm q0(h);
    ASSERT_EQ(evaluate(q0, {1, 0}).value, 0);
    ASSERT_EQ(evaluate(q0, {1, 1}).value, 1);
    for (int d : {2, 3, 5}) {
        ASSERT_EQ(evaluate(model_form(2, 1, d), Vec(3, 0)).value, 0);
    }
    ASSERT_THROW(evaluate(q0, {1, 0, 0}), std::invalid_argument);
}

TEST(forms, model_form_counts_signed_support) {
    for (size_t r = 0; r <= 4; r++) {
        for (size_t s = 0; s <= 3; s++) {
            GenQuadForm q = model_form(r, s, 2);
            for (const auto &u : domain(2, r + s)) {
                int64_t v = 0;
                for (size_t i = 0; i < r + s; i++) {
                    v += u[i] ? (i < r ? 1 : -1) : 0;
                }
                ASSERT_EQ(evaluate(q, u), ModInt(v, 4));
            }
        }
    }
}

TEST(forms, upper_triangular_representation) {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 50; k++) {
        GenQuadForm q = random_gen(1 + rng() % 6, rng);
        auto u_mat = q.upper_triangular();
        for (const auto &u : domain(2, q.dim())) {
            int64_t v = 0;
            for (size_t i = 0; i < q.dim(); i++) {
                for (size_t j = i; j < q.dim(); j++) {
                    v += u[i] * u_mat[i][j] * u[j];
                }
            }
            ASSERT_EQ(ModInt(v, 4), evaluate(q, u));
        }
    }
}

TEST(forms, polarize_examples) {
    GFMatrix m(2, 2, 2);
    m.set(0, 1, 1);
    SymBilForm b = polarize(QuadForm(m));
    ASSERT_EQ(b.matrix.get(0, 1), 1);
    ASSERT_EQ(b.matrix.get(0, 0), 0);
    ASSERT_EQ(b.matrix.get(1, 1), 0);
    GFMatrix lin(2, 3, 3);
    lin.set(0, 0, 1);
    ASSERT_EQ(polarize(QuadForm(lin)).matrix, GFMatrix(2, 3, 3));
    ASSERT_EQ(polarize(QuadForm(GFMatrix(3, 2, 2))).matrix, GFMatrix(3, 2, 2));
}

TEST(forms, polarization_identity) {
    std::mt19937_64 rng(12);
    for (int d : {2, 3, 5}) {
        for (int k = 0; k < 30; k++) {
            size_t n = 1 + rng() % 4;
            GFMatrix m(d, n, n);
            for (size_t i = 0; i < n; i++) {
                for (size_t j = 0; j < n; j++) {
                    m.set(i, j, static_cast<int64_t>(rng() % static_cast<uint64_t>(d)));
                }
            }
            QuadForm q(m);
            SymBilForm b = polarize(q);
            auto dom = domain(d, n);
            for (const auto &u : dom) {
                for (const auto &v : dom) {
                    ModInt lhs = evaluate(q, vec_add(u, v, d)) - evaluate(q, u) - evaluate(q, v);
                    ASSERT_EQ(lhs.value, b(u, v));
                }
            }
        }
    }
}

TEST(forms, generalized_refine) {
    for (size_t t = 1; t <= 8; t++) {
        GenQuadForm q = generalized_refine(SymBilForm::dot(2, t));
        for (const auto &u : domain(2, t)) {
            ASSERT_EQ(evaluate(q, u).value, static_cast<int64_t>(weight(u) % 4));
        }
        ASSERT_EQ(q, model_form(t, 0, 2));
    }
    GenQuadForm zero = generalized_refine(SymBilForm(GFMatrix(2, 3, 3)));
    for (const auto &u : domain(2, 3)) {
        ASSERT_EQ(evaluate(zero, u).value, 0);
    }
    GenQuadForm h = generalized_refine(SymBilForm::hyperbolic(2));
    ASSERT_EQ(evaluate(h, {1, 0}).value, 0);
    ASSERT_EQ(evaluate(h, {0, 1}).value, 0);
    ASSERT_EQ(evaluate(h, {1, 1}).value, 2);
}

TEST(forms, refine_then_polarize_is_identity) {
    std::mt19937_64 rng(13);
    for (size_t n = 1; n <= 10; n++) {
        for (int k = 0; k < 5; k++) {
            SymBilForm b = random_sym(2, n, rng);
            GenQuadForm q = generalized_refine(b);
            if (n <= 8) {
                for (size_t i = 0; i < n; i++) {
                    for (size_t j = 0; j < n; j++) {
                        Vec ei = unit(n, i);
                        Vec ej = unit(n, j);
                        ModInt lhs = evaluate(q, vec_add(ei, ej, 2)) - evaluate(q, ei) - evaluate(q, ej);
                        ASSERT_EQ(lhs.value, 2 * b(ei, ej));
                    }
                }
            }
            auto dom = domain(2, std::min<size_t>(n, 6));
            if (n <= 6) {
                for (const auto &u : dom) {
                    for (const auto &v : dom) {
                        ModInt lhs = evaluate(q, vec_add(u, v, 2)) - evaluate(q, u) - evaluate(q, v);
                        ASSERT_EQ(lhs.value, 2 * b(u, v));
                    }
                }
            }
        }
    }
}

TEST(forms, homogeneity) {
    for (int d : {3, 5, 7}) {
        GenQuadForm q = model_form(2, 1, d);
        for (const auto &u : domain(d, 3)) {
            for (int64_t a = 0; a < d; a++) {
                ASSERT_EQ(evaluate(q, vec_scale(u, a, d)), ModInt(a * a, d) * evaluate(q, u));
            }
        }
    }
}

TEST(forms, garf_of_model_forms) {
    for (size_t r = 0; r <= 8; r++) {
        for (size_t s = 0; s <= 8; s++) {
            auto g = invariants(model_form(r, s, 2)).garf;
            ASSERT_TRUE(g.has_value());
            ASSERT_EQ(*g, static_cast<int>(((static_cast<int>(r) - static_cast<int>(s)) % 8 + 8) % 8)) << r << "," << s;
        }
    }
    ASSERT_EQ(*invariants(model_form(7, 0, 2)).garf, 7);
}

TEST(forms, arf_of_hyperbolic_planes) {
    GFMatrix m0(2, 2, 2);
    m0.set(0, 1, 1);
    GFMatrix m1 = m0;
    m1.set(0, 0, 1);
    m1.set(1, 1, 1);
    QuadForm q0(m0);
    QuadForm q1(m1);
    ASSERT_EQ(arf(q0), 0);
    ASSERT_EQ(arf(q1), 1);
    int zeros0 = 0;
    int zeros1 = 0;
    for (const auto &u : domain(2, 2)) {
        zeros0 += evaluate(q0, u).value == 0;
        zeros1 += evaluate(q1, u).value == 0;
    }
    ASSERT_EQ(zeros0, 3);
    ASSERT_EQ(zeros1, 1);
    GFMatrix lin(2, 2, 2);
    lin.set(0, 0, 1);
    ASSERT_THROW(arf(QuadForm(lin)), std::invalid_argument);
}

TEST(forms, garf_additive) {
    std::mt19937_64 rng(14);
    int checked = 0;
    for (int k = 0; k < 300; k++) {
        GenQuadForm a = random_gen(1 + rng() % 6, rng);
        GenQuadForm b = random_gen(1 + rng() % 6, rng);
        auto ga = gauss_phase(a);
        auto gb = gauss_phase(b);
        auto gab = gauss_phase(a.direct_sum(b));
        ASSERT_EQ(gab.has_value(), ga.has_value() && gb.has_value());
        if (gab) {
            ASSERT_EQ(*gab, (*ga + *gb) % 8);
            checked++;
        }
    }
    ASSERT_GT(checked, 50);
}

TEST(forms, wu_identity) {
    for (size_t t = 1; t <= 10; t++) {
        for (size_t s = 0; s <= t; s++) {
            SymBilForm b = SymBilForm::model(t - s, s, 2);
            GenQuadForm q = model_form(t - s, s, 2);
            for (const auto &u : domain(2, t)) {
                ASSERT_EQ(b(u, u), b(ones(t), u));
                ASSERT_EQ(evaluate(q, u).value % 2, b(u, u));
            }
        }
    }
}

TEST(forms, discriminant_and_rank) {
    auto inv = invariants(SymBilForm::model(2, 1, 7));
    ASSERT_EQ(inv.rank, 3u);
    ASSERT_EQ(*inv.dis, -1);
    ASSERT_FALSE(inv.type.has_value());
    ASSERT_EQ(*invariants(SymBilForm::model(2, 1, 5)).dis, 1);
    ASSERT_EQ(*invariants(SymBilForm::model(3, 0, 7)).dis, 1);
    auto bin = invariants(SymBilForm::model(3, 0, 2));
    ASSERT_EQ(*bin.type, "odd");
    ASSERT_FALSE(bin.dis.has_value());
    ASSERT_EQ(*invariants(SymBilForm::hyperbolic(2)).type, "even");
    GFMatrix deg(5, 3, 3);
    deg.set(0, 0, 2);
    deg.set(1, 1, 3);
    auto dinv = invariants(SymBilForm(deg));
    ASSERT_EQ(dinv.rank, 2u);
    ASSERT_EQ(*dinv.dis, legendre(6, 5));
}

TEST(forms, discriminant_matches_squares_of_model) {
    for (int d : {3, 5, 7, 11, 13}) {
        for (size_t s = 0; s <= 3; s++) {
            auto inv = invariants(SymBilForm::model(3, s, d));
            ASSERT_EQ(*inv.dis, legendre(s % 2 ? -1 : 1, d));
        }
    }
}

TEST(forms, equivalence_examples) {
    GenQuadForm a = model_form(8, 0, 2);
    GenQuadForm b = model_form(4, 4, 2);
    ASSERT_TRUE(equivalent(a, b).equivalent);
    auto g = find_isometry(a, b);
    ASSERT_TRUE(g.has_value());
    expect_witness(a, b, *g);
    Equivalence no = equivalent(model_form(2, 0, 2), model_form(1, 1, 2));
    ASSERT_FALSE(no.equivalent);
    ASSERT_FALSE(no.witness.has_value());
    GenQuadForm q = model_form(3, 1, 2);
    Equivalence self = equivalent(q, q);
    ASSERT_TRUE(self.equivalent);
    expect_witness(q, q, *self.witness);
}

TEST(forms, model_equivalence_law) {
    for (int d : {2, 3, 5}) {
        for (size_t t = 1; t <= 4; t++) {
            for (size_t s = 0; s <= t; s++) {
                for (size_t s2 = 0; s2 <= t; s2++) {
                    GenQuadForm a = model_form(t - s, s, d);
                    GenQuadForm b = model_form(t - s2, s2, d);
                    bool expected;
                    if (d == 2) {
                        expected = (static_cast<int>(t) - 2 * static_cast<int>(s) - static_cast<int>(t) + 2 * static_cast<int>(s2)) % 8 == 0;
                    } else {
                        expected = legendre(s % 2 ? -1 : 1, d) == legendre(s2 % 2 ? -1 : 1, d);
                    }
                    Equivalence e = equivalent(a, b);
                    ASSERT_EQ(e.equivalent, expected) << d << " " << t << " " << s << " " << s2;
                    if (e.witness) {
                        expect_witness(a, b, *e.witness);
                    }
                }
            }
        }
    }
}

TEST(forms, invariants_decide_equivalence_small_dims) {
    std::mt19937_64 rng(15);
    int equal = 0;
    for (int k = 0; k < 400; k++) {
        size_t n = 1 + rng() % 4;
        GenQuadForm a = random_gen(n, rng);
        GenQuadForm b = random_gen(n, rng);
        Equivalence by_invariants = equivalent(a, b, 0);
        Equivalence by_search = equivalent(a, b, 5);
        ASSERT_EQ(by_invariants.equivalent, by_search.equivalent) << a.to_json() << b.to_json();
        equal += by_search.equivalent;
        if (by_search.witness) {
            expect_witness(a, b, *by_search.witness);
        }
    }
    ASSERT_GT(equal, 20);
    for (int d : {3, 5}) {
        for (int k = 0; k < 100; k++) {
            size_t n = 1 + rng() % 3;
            SymBilForm a = random_sym(d, n, rng);
            SymBilForm b = random_sym(d, n, rng);
            ASSERT_EQ(equivalent(a, b, 0).equivalent, equivalent(a, b, 5).equivalent);
        }
    }
    for (int k = 0; k < 200; k++) {
        size_t n = 1 + rng() % 4;
        SymBilForm a = random_sym(2, n, rng);
        SymBilForm b = random_sym(2, n, rng);
        ASSERT_EQ(equivalent(a, b, 0).equivalent, equivalent(a, b, 5).equivalent);
    }
}

TEST(forms, two_mod_three_remark) {
    for (int d = 3; d <= 50; d++) {
        if (!is_prime(d)) {
            continue;
        }
        ASSERT_EQ(legendre(3, d) == -legendre(-1, d), d % 3 == 2) << d;
    }
}

TEST(forms, restriction_to_quotient) {
    GenQuadForm q5 = model_form(5, 0, 2);
    QuotientSection sec(Subspace::from_strings(2, {"01111"}), q5.polar.matrix);
    GenQuadForm qn = restrict_to_quotient(q5, sec);
    ASSERT_EQ(qn.dim(), 3u);
    ASSERT_EQ(*invariants(qn).garf, 5);
    ASSERT_TRUE(equivalent(qn, model_form(3, 0, 2)).equivalent == false);
    for (const auto &c : domain(2, 3)) {
        ASSERT_EQ(evaluate(qn, c), evaluate(q5, sec.lift(c)));
    }

    QuotientSection trivial(Subspace(2, 4), SymBilForm::dot(2, 4).matrix);
    ASSERT_EQ(restrict_to_quotient(model_form(4, 0, 2), trivial), model_form(4, 0, 2));

    GenQuadForm q4 = model_form(4, 0, 2);
    QuotientSection s4(Subspace::span(2, 4, {ones(4)}), q4.polar.matrix);
    GenQuadForm r4 = restrict_to_quotient(q4, s4);
    ASSERT_EQ(*invariants(r4.polar).type, "even");
    ASSERT_EQ(invariants(r4.polar).rank, 2u);

    QuotientSection bad(Subspace::from_strings(2, {"0011"}), q4.polar.matrix);
    ASSERT_THROW(restrict_to_quotient(q4, bad), std::invalid_argument);
}

TEST(forms, restriction_matches_shifted_model) {
    for (size_t r = 2; r <= 6; r++) {
        for (size_t s = 0; s <= 3 && r + s <= 7; s++) {
            GenQuadForm q = model_form(r, s, 2);
            size_t t = r + s;
            for (const auto &v : domain(2, t)) {
                Subspace n = Subspace::span(2, t, {v});
                if (n.dim() != 1 || !is_isotropic(q, n) || dot(v, ones(t), 2) != 0) {
                    continue;
                }
                GenQuadForm qn = restrict_to_quotient(q, QuotientSection(n, q.polar.matrix));
                int expected = ((static_cast<int>(r) - static_cast<int>(s)) % 8 + 8) % 8;
                auto g = invariants(qn).garf;
                ASSERT_TRUE(g.has_value());
                ASSERT_EQ(*g, expected);
            }
        }
    }
}

TEST(forms, json_round_trip) {
    GenQuadForm q = model_form(2, 1, 2);
    ASSERT_EQ(GenQuadForm::from_json(q.to_json()), q);
    ASSERT_EQ(q.to_json().dump(), R"({"D":4,"d":2,"diag":[1,1,3],"polar":[[1,0,0],[0,1,0],[0,0,1]]})");
    nlohmann::json bad = q.to_json();
    bad["diag"][0] = 0;
    ASSERT_THROW(GenQuadForm::from_json(bad), std::invalid_argument);
}
