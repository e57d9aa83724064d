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

#include "cliffdual/conjugate.h"

#include "gtest/gtest.h"

using namespace cliffdual;

TEST(conjugate, minimal_t) {
    EXPECT_EQ(minimal_t(2), 7u);
    EXPECT_EQ(minimal_t(5), 9u);
    EXPECT_EQ(minimal_t(3), 11u);
    EXPECT_EQ(minimal_t(13), 25u);
    EXPECT_EQ(minimal_t(7), 27u);
    EXPECT_THROW(minimal_t(9), std::invalid_argument);
}

TEST(conjugate, qubit_plan) {
    ConjugationPlan plan = build_plan(2, 1);
    EXPECT_EQ(plan.t, 7u);
    EXPECT_EQ(plan.code.m, 3u);
    EXPECT_FALSE(plan.code.contains_ones);
    EXPECT_EQ(plan.code.quotient.quotient_dim(), 1u);
    EXPECT_EQ(plan.encoder_column({1}).to_dense().dim(), 128u);
    EXPECT_TRUE(encoder_is_isometry(plan));
    EXPECT_TRUE(encoder_is_isometry(build_plan(2, 2)));
}

TEST(conjugate, plan_round_trip) {
    ConjugationPlan plan = build_plan(2, 2);
    ConjugationPlan back = ConjugationPlan::from_json(plan.to_json());
    EXPECT_EQ(back.code, plan.code);
    EXPECT_EQ(back.n, 2u);
    EXPECT_EQ(back.ones_coordinate, plan.ones_coordinate);
}

TEST(conjugate, identity_and_hadamard) {
    ConjugationPlan plan = build_plan(2, 1);
    ConjugationResult id = verify_conjugation(plan, CliffordWord(1, 2), Backend::exact);
    EXPECT_TRUE(id.ok);
    EXPECT_EQ(id.phase, 0);
    ConjugationResult h = verify_conjugation(plan, CliffordWord(1, 2).push(Gate::H(0)), Backend::exact);
    EXPECT_TRUE(h.ok);
    EXPECT_EQ(h.phase_order, 8);
    ConjugationResult p = verify_conjugation(plan, CliffordWord(1, 2).push(Gate::P(0)), Backend::exact);
    EXPECT_TRUE(p.ok);
}

TEST(conjugate, random_words_exact) {
    for (size_t n = 1; n <= 2; n++) {
        ConjugationPlan plan = build_plan(2, n);
        for (uint64_t seed = 0; seed < 10; seed++) {
            CliffordWord w = random_clifford_word(n, 2, 12, seed);
            ConjugationResult r = verify_conjugation(plan, w, Backend::exact);
            EXPECT_TRUE(r.ok) << w.str();
            ConjugationResult f = verify_conjugation(plan, w, Backend::floating);
            EXPECT_TRUE(f.ok) << w.str();
            EXPECT_EQ(f.phase, r.phase);
        }
    }
}

TEST(conjugate, conjugation_is_not_identity) {
    // P is not equivalent to conj(P) up to phase, so the check has teeth.
    ConjugationPlan plan = build_plan(2, 1);
    CliffordWord p = CliffordWord(1, 2).push(Gate::P(0));
    CycMatrix e = recovered_exact(plan, p);
    CycMatrix w = word_matrix(p);
    bool equal_up_to_phase = false;
    for (int64_t j = 0; j < 8; j++) {
        equal_up_to_phase = equal_up_to_phase || e == w.scaled(CycScalar::root(w.field(), j));
    }
    EXPECT_FALSE(equal_up_to_phase);
}

TEST(conjugate, composition) {
    ConjugationPlan plan = build_plan(2, 2);
    CliffordWord u = random_clifford_word(2, 2, 8, 11);
    CliffordWord v = random_clifford_word(2, 2, 8, 12);
    EXPECT_TRUE(composition_coherent(plan, u, v, Backend::exact));
}

TEST(conjugate, qutrit_float) {
    ConjugationPlan plan = build_plan(3, 1);
    EXPECT_EQ(plan.t, 11u);
    EXPECT_EQ(plan.code.m, 5u);
    for (uint64_t seed = 0; seed < 3; seed++) {
        CliffordWord w = random_clifford_word(1, 3, 10, seed);
        ConjugationResult r = verify_conjugation(plan, w, Backend::floating);
        EXPECT_TRUE(r.ok) << w.str() << " " << r.residual;
    }
    EXPECT_TRUE(composition_coherent(plan, random_clifford_word(1, 3, 6, 4), random_clifford_word(1, 3, 6, 5), Backend::floating));
}

TEST(conjugate, resource_guard) {
    EXPECT_THROW(build_plan(2, 4), std::length_error);
    EXPECT_THROW(build_plan(3, 2), std::length_error);
}
