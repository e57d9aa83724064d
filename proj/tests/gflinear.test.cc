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

#include "cliffdual/subspace.h"
#include "gtest/gtest.h"

using namespace cliffdual;

namespace {

GFMatrix random_matrix(int d, size_t rows, size_t cols, std::mt19937_64 &rng) {
    GFMatrix m(d, rows, cols);
    for (size_t i = 0; i < rows; i++) {
        for (size_t j = 0; j < cols; j++) {
            m.set(i, j, static_cast<int64_t>(rng() % static_cast<uint64_t>(d)));
        }
    }
    return m;
}

GFMatrix dot_form(int d, size_t t) {
    return GFMatrix::identity(d, t);
}

}  // namespace

TEST(gflinear, basic_examples) {
    ASSERT_EQ(rank(GFMatrix::identity(2, 3)), 3u);
    GFMatrix all_ones(2, 1, 5);
    all_ones.set_row(0, ones(5));
    ASSERT_EQ(kernel(all_ones).dim(), 4u);
    std::mt19937_64 rng(1);
    for (int d : {2, 3, 5}) {
        GFMatrix m = random_matrix(d, 4, 6, rng);
        auto x = solve(m, Vec(4, 0));
        ASSERT_TRUE(x.has_value());
        ASSERT_TRUE(vec_is_zero(m.apply(*x)));
    }
}

TEST(gflinear, rref_idempotent_and_kernel_correct) {
    std::mt19937_64 rng(2);
    for (int d : {2, 3, 7}) {
        for (int k = 0; k < 200; k++) {
            size_t rows = 1 + rng() % 7;
            size_t cols = 1 + rng() % 9;
            GFMatrix m = random_matrix(d, rows, cols, rng);
            GFMatrix r = rref(m);
            ASSERT_EQ(rref(r), r);
            Subspace ker = kernel(m);
            ASSERT_EQ(ker.dim() + rank(m), cols);
            for (const auto &v : ker.basis_vectors()) {
                ASSERT_TRUE(vec_is_zero(m.apply(v)));
            }
            Vec x(cols);
            for (auto &e : x) {
                e = static_cast<uint8_t>(rng() % static_cast<uint64_t>(d));
            }
            Vec b = m.apply(x);
            auto y = solve(m, b);
            ASSERT_TRUE(y.has_value());
            ASSERT_EQ(m.apply(*y), b);
        }
    }
}

TEST(gflinear, bitpacked_matches_generic_semantics) {
    std::mt19937_64 rng(3);
    for (int k = 0; k < 200; k++) {
        size_t n = 1 + rng() % 70;
        GFMatrix a = random_matrix(2, 5, n, rng);
        GFMatrix b = random_matrix(2, n, 3, rng);
        GFMatrix c = a * b;
        for (size_t i = 0; i < 5; i++) {
            for (size_t j = 0; j < 3; j++) {
                int s = 0;
                for (size_t l = 0; l < n; l++) {
                    s ^= a.get(i, l) & b.get(l, j);
                }
                ASSERT_EQ(c.get(i, j), s);
            }
        }
    }
}

TEST(gflinear, inverse) {
    std::mt19937_64 rng(4);
    for (int d : {2, 3, 5}) {
        for (int k = 0; k < 100; k++) {
            GFMatrix m = random_matrix(d, 5, 5, rng);
            auto inv = inverse(m);
            ASSERT_EQ(inv.has_value(), rank(m) == 5);
            if (inv) {
                ASSERT_EQ(*inv * m, GFMatrix::identity(d, 5));
            }
        }
    }
}

TEST(gflinear, rref_canonical_under_change_of_basis) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 1000; trial++) {
        int d = trial % 2 ? 2 : 3;
        size_t t = 1 + rng() % 8;
        size_t k = 1 + rng() % t;
        GFMatrix m = random_matrix(d, k, t, rng);
        GFMatrix g = random_matrix(d, k, k, rng);
        while (rank(g) < k) {
            g = random_matrix(d, k, k, rng);
        }
        ASSERT_EQ(Subspace::row_space(m), Subspace::row_space(g * m));
        GFMatrix other = random_matrix(d, k, t, rng);
        ASSERT_EQ(Subspace::row_space(m) == Subspace::row_space(other), rref(m) == rref(other));
    }
}

TEST(gflinear, orthocomplement_examples) {
    Subspace n = Subspace::span(2, 4, {ones(4)});
    Subspace perp = orthocomplement(n, dot_form(2, 4));
    ASSERT_EQ(perp.dim(), 3u);
    for (const auto &v : perp.elements()) {
        int w = 0;
        for (auto x : v) {
            w += x;
        }
        ASSERT_EQ(w % 2, 0);
    }
    ASSERT_EQ(orthocomplement(Subspace(2, 5), dot_form(2, 5)), Subspace::full(2, 5));
    Subspace n1 = Subspace::from_strings(2, {"01111"});
    Subspace p1 = orthocomplement(n1, dot_form(2, 5));
    ASSERT_EQ(p1.dim(), 4u);
    ASSERT_TRUE(p1.contains(n1));
}

TEST(gflinear, orthocomplement_involution) {
    std::mt19937_64 rng(6);
    for (int d : {2, 3, 5}) {
        for (int k = 0; k < 100; k++) {
            size_t t = 1 + rng() % 7;
            GFMatrix g = GFMatrix::identity(d, t);
            if (d != 2) {
                for (size_t i = 0; i < t; i++) {
                    g.set(i, i, 1 + static_cast<int64_t>(rng() % static_cast<uint64_t>(d - 1)));
                }
            }
            Subspace n = Subspace::row_space(random_matrix(d, 1 + rng() % t, t, rng));
            Subspace perp = orthocomplement(n, g);
            ASSERT_EQ(n.dim() + perp.dim(), t);
            ASSERT_EQ(orthocomplement(perp, g), n);
        }
    }
}

TEST(gflinear, quotient_section) {
    QuotientSection q0(Subspace(2, 4), dot_form(2, 4));
    ASSERT_EQ(q0.quotient_dim(), 4u);
    ASSERT_EQ(q0.lift({1, 0, 1, 1}), Vec({1, 0, 1, 1}));
    QuotientSection q1(Subspace::span(2, 4, {ones(4)}), dot_form(2, 4));
    ASSERT_EQ(q1.quotient_dim(), 2u);
    QuotientSection q5(Subspace::from_strings(2, {"01111"}), dot_form(2, 5));
    ASSERT_EQ(q5.complement(), Subspace::from_strings(2, {"00011", "00101", "10000"}));
    for (const auto &v : q5.perp().elements()) {
        Vec c = q5.project(v);
        ASSERT_TRUE(q5.n().contains(vec_add(q5.lift(c), v, 2)));
        ASSERT_EQ(q5.project(q5.lift(c)), c);
    }
    ASSERT_THROW(q5.project(Vec({0, 1, 0, 0, 0})), std::invalid_argument);
    ASSERT_THROW(QuotientSection(Subspace::from_strings(2, {"10000"}), dot_form(2, 5)), std::invalid_argument);
}

TEST(gflinear, intersection_and_json) {
    Subspace a = Subspace::from_strings(2, {"1100", "0011"});
    Subspace b = Subspace::from_strings(2, {"1111", "1000"});
    ASSERT_EQ(a.intersection(b), Subspace::from_strings(2, {"1111"}));
    ASSERT_EQ(Subspace::from_json(a.to_json()), a);
    ASSERT_EQ(a.to_json().dump(), R"({"d":2,"rows":["1100","0011"],"t":4})");
}
