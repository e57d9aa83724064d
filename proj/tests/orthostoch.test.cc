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

#include <filesystem>
#include <set>

#include "cliffdual/orthostoch.h"
#include "gtest/gtest.h"

using namespace cliffdual;

namespace {

void expect_orthogonality(const CharacterTable &ct) {
    size_t k = ct.classes.size();
    ASSERT_EQ(ct.values.size(), k);
    const CycField &f = ct.values[0][0].field();
    int64_t sum_sq = 0;
    for (size_t i = 0; i < k; i++) {
        sum_sq += ct.degree(i) * ct.degree(i);
        for (size_t j = 0; j < k; j++) {
            CycScalar acc = CycScalar::zero(f);
            for (size_t c = 0; c < k; c++) {
                CycScalar term = ct.values[i][c] * ct.values[j][c].conj();
                term.scale(Rational(static_cast<int64_t>(ct.classes[c].size)));
                acc += term;
            }
            CycScalar expected(f, Rational(i == j ? static_cast<int64_t>(ct.group_order) : 0));
            ASSERT_EQ(acc, expected) << i << " " << j;
        }
    }
    ASSERT_EQ(sum_sq, static_cast<int64_t>(ct.group_order));
    for (size_t a = 0; a < k; a++) {
        for (size_t b = 0; b < k; b++) {
            CycScalar acc = CycScalar::zero(f);
            for (size_t i = 0; i < k; i++) {
                acc += ct.values[i][a] * ct.values[i][b].conj();
            }
            int64_t centralizer = a == b ? static_cast<int64_t>(ct.group_order / ct.classes[a].size) : 0;
            ASSERT_EQ(acc, CycScalar(f, Rational(centralizer)));
        }
    }
}

std::multiset<int64_t> degrees(const CharacterTable &ct) {
    std::multiset<int64_t> out;
    for (size_t i = 0; i < ct.values.size(); i++) {
        out.insert(ct.degree(i));
    }
    return out;
}

}  // namespace

TEST(orthostoch, group_orders) {
    ASSERT_EQ(enumerate_O1(3, 0, 2).size(), 6u);
    ASSERT_EQ(enumerate_O1(5, 0, 2).size(), 120u);
    ASSERT_EQ(enumerate_O1(1, 0, 2).size(), 1u);
    ASSERT_EQ(enumerate_O1(1, 0, 3).size(), 1u);
    ASSERT_EQ(enumerate_O1(1, 0, 5).size(), 1u);
}

TEST(orthostoch, elements_are_stochastic_isometries) {
    struct Case {
        size_t r, s;
        int d;
    };
    for (Case c : {Case{3, 0, 2}, Case{4, 0, 2}, Case{5, 0, 2}, Case{3, 3, 2}, Case{2, 1, 3}, Case{3, 0, 3}, Case{2, 2, 3}, Case{2, 1, 5}}) {
        FiniteMatrixGroup g = enumerate_O1(c.r, c.s, c.d);
        GenQuadForm q = model_form(c.r, c.s, c.d);
        auto dom = Subspace::full(c.d, c.r + c.s).elements();
        for (const auto &o : g.elements()) {
            ASSERT_EQ(o.apply(ones(c.r + c.s)), ones(c.r + c.s));
            for (const auto &u : dom) {
                ASSERT_EQ(evaluate(q, o.apply(u)), evaluate(q, u));
            }
        }
        ASSERT_TRUE(g.spot_check_closure(200, 7));
    }
}

TEST(orthostoch, permutation_matrices_are_included) {
    FiniteMatrixGroup g = enumerate_O1(4, 0, 2);
    size_t perms = 0;
    for (const auto &o : g.elements()) {
        bool is_perm = true;
        for (size_t c = 0; c < 4; c++) {
            int w = 0;
            for (size_t r = 0; r < 4; r++) {
                w += o.get(r, c);
            }
            is_perm = is_perm && w == 1;
        }
        perms += is_perm;
    }
    ASSERT_EQ(perms, 24u);
}

TEST(orthostoch, five_qubit_group_is_s5_on_grassmannian) {
    FiniteMatrixGroup g = enumerate_O1(5, 0, 2);
    auto gr = enumerate_isotropic(5, 0, 2, 1, Stratum::gr);
    std::vector<Subspace> pts;
    for (const auto &n : gr) {
        pts.push_back(n.n);
    }
    auto perms = permutation_action(g, pts);
    std::set<std::vector<size_t>> distinct(perms.begin(), perms.end());
    ASSERT_EQ(distinct.size(), 120u);
}

TEST(orthostoch, stabilizer_and_orbits) {
    FiniteMatrixGroup g = enumerate_O1(5, 0, 2);
    ASSERT_EQ(stabilizer(g, Subspace(2, 5)).size(), 120u);
    auto gr = enumerate_isotropic(5, 0, 2, 1, Stratum::gr);
    for (const auto &n : gr) {
        FiniteMatrixGroup st = stabilizer(g, n.n);
        ASSERT_EQ(st.size(), 24u);
        ASSERT_EQ(g.size(), gr.size() * st.size());
    }
    for (size_t t = 4; t <= 6; t++) {
        FiniteMatrixGroup gt = enumerate_O1(t, 0, 2);
        for (size_t m = 1; m <= t / 2; m++) {
            for (Stratum s : {Stratum::gr, Stratum::gr0}) {
                auto all = enumerate_isotropic(t, 0, 2, m, s);
                if (!all.empty()) {
                    ASSERT_EQ(gt.size(), all.size() * stabilizer(gt, all[0].n).size());
                }
            }
        }
    }
}

TEST(orthostoch, quotient_action) {
    FiniteMatrixGroup g = enumerate_O1(5, 0, 2);
    IsoSubspace n1(Subspace::from_strings(2, {"01111"}), 5, 0);
    QuotientAction qa = quotient_action(stabilizer(g, n1.n), n1);
    ASSERT_TRUE(qa.surjective);
    ASSERT_EQ(qa.image_group.size(), 6u);
    ASSERT_EQ(qa.kernel.size(), 4u);

    IsoSubspace zero(Subspace(2, 5), 5, 0);
    QuotientAction qz = quotient_action(g, zero);
    ASSERT_TRUE(qz.surjective);
    ASSERT_TRUE(qz.kernel.size() == 1);
    for (size_t i = 0; i < g.size(); i++) {
        ASSERT_EQ(qz.images[i], g[i]);
    }

    IsoSubspace n7(Subspace::from_strings(2, {"1111000", "0011110", "1010101"}), 7, 0);
    FiniteMatrixGroup g7 = enumerate_O1(7, 0, 2);
    QuotientAction q7 = quotient_action(stabilizer(g7, n7.n), n7);
    ASSERT_EQ(n7.quotient.quotient_dim(), 1u);
    ASSERT_EQ(q7.target_group.size(), 1u);
    ASSERT_TRUE(q7.surjective);
}

TEST(orthostoch, quotient_action_surjective_everywhere) {
    for (size_t t = 4; t <= 6; t++) {
        FiniteMatrixGroup g = enumerate_O1(t, 0, 2);
        for (size_t m = 1; m <= t / 2; m++) {
            for (const auto &n : enumerate_isotropic(t, 0, 2, m, Stratum::both)) {
                ASSERT_TRUE(quotient_action(stabilizer(g, n.n), n).surjective) << n.n.key();
            }
        }
    }
    FiniteMatrixGroup g3 = enumerate_O1(2, 2, 3);
    for (const auto &n : enumerate_isotropic(2, 2, 3, 1, Stratum::both)) {
        ASSERT_TRUE(quotient_action(stabilizer(g3, n.n), n).surjective);
    }
}

TEST(orthostoch, subgroup_gn_five_qubits) {
    IsoSubspace n1(Subspace::from_strings(2, {"01111"}), 5, 0);
    SubgroupGN gn = subgroup_G_N(n1);
    ASSERT_EQ(gn.group.size(), 6u);
    ASSERT_EQ(gn.target_order, 6u);
    ASSERT_EQ(gn.k.dim(), 1u);
    Subspace trivial_block = gn.k.sum(n1.n);
    for (size_t i = 0; i < gn.group.size(); i++) {
        const GFMatrix &o = gn.group[i];
        ASSERT_TRUE(is_stochastic_isometry(o, 5, 0));
        for (const auto &v : trivial_block.basis_vectors()) {
            ASSERT_EQ(o.apply(v), v);
        }
        ASSERT_EQ(n1.quotient.complement().image(o), n1.quotient.complement());
        // blockdiag(1, 1, pi) with pi a permutation of the last three coordinates.
        ASSERT_EQ(o.col(0), unit(5, 0));
        ASSERT_EQ(o.col(1), unit(5, 1));
        for (size_t c = 2; c < 5; c++) {
            Vec col = o.col(c);
            ASSERT_EQ(col[0] + col[1], 0);
            ASSERT_EQ(col[2] + col[3] + col[4], 1);
        }
    }
    FiniteMatrixGroup stab = stabilizer(enumerate_O1(5, 0, 2), n1.n);
    QuotientAction qa = quotient_action(stab, n1);
    std::set<GFMatrix> from_gn(gn.restricted.begin(), gn.restricted.end());
    std::set<GFMatrix> from_qa(qa.image_group.elements().begin(), qa.image_group.elements().end());
    ASSERT_EQ(from_gn, from_qa);
    for (size_t a = 0; a < gn.group.size(); a++) {
        for (size_t b = 0; b < gn.group.size(); b++) {
            ASSERT_EQ(induced_matrix(gn.group[a] * gn.group[b], n1.quotient), gn.restricted[a] * gn.restricted[b]);
        }
    }
}

TEST(orthostoch, subgroup_gn_trivial_quotient) {
    IsoSubspace n7(Subspace::from_strings(2, {"1111000", "0011110", "1010101"}), 7, 0);
    SubgroupGN gn = subgroup_G_N(n7);
    ASSERT_EQ(gn.group.size(), 1u);
    for (size_t t = 4; t <= 6; t++) {
        for (const auto &n : enumerate_isotropic(t, 0, 2, 1, Stratum::both)) {
            SubgroupGN g = subgroup_G_N(n);
            ASSERT_GE(g.group.size(), 1u);
            ASSERT_LE(g.group.size(), g.target_order);
            ASSERT_EQ(g.target_order % g.group.size(), 0u);
        }
    }
}

TEST(orthostoch, character_tables_textbook) {
    auto s3 = character_table(enumerate_O1(3, 0, 2));
    ASSERT_EQ(degrees(s3), std::multiset<int64_t>({1, 1, 2}));
    expect_orthogonality(s3);
    auto s5 = character_table(enumerate_O1(5, 0, 2));
    ASSERT_EQ(s5.method, "murnaghan-nakayama");
    ASSERT_EQ(degrees(s5), std::multiset<int64_t>({1, 1, 4, 4, 5, 5, 6}));
    expect_orthogonality(s5);
    auto triv = character_table(enumerate_O1(1, 0, 2));
    ASSERT_EQ(triv.values.size(), 1u);
    ASSERT_EQ(triv.degree(0), 1);
}

TEST(orthostoch, dixon_matches_symmetric_path) {
    for (size_t t : {3u, 5u}) {
        FiniteMatrixGroup g = enumerate_O1(t, 0, 2);
        auto a = character_table(g, CharacterMethod::dixon);
        auto b = character_table(g, CharacterMethod::symmetric);
        ASSERT_EQ(a.method, "dixon");
        expect_orthogonality(a);
        std::set<std::vector<std::complex<double>>> ra;
        std::set<std::string> sa;
        std::set<std::string> sb;
        for (size_t i = 0; i < a.values.size(); i++) {
            std::string x;
            std::string y;
            for (size_t c = 0; c < a.classes.size(); c++) {
                x += std::to_string(std::lround(a.values[i][c].to_complex().real())) + ",";
                y += std::to_string(std::lround(b.values[i][c].to_complex().real())) + ",";
            }
            sa.insert(x);
            sb.insert(y);
        }
        ASSERT_EQ(sa, sb);
    }
}

TEST(orthostoch, dixon_non_symmetric_groups) {
    auto t4 = character_table(enumerate_O1(4, 0, 2), CharacterMethod::dixon);
    expect_orthogonality(t4);
    auto g3 = character_table(enumerate_O1(2, 2, 3), CharacterMethod::dixon);
    expect_orthogonality(g3);
    auto g5 = character_table(enumerate_O1(2, 1, 5));
    expect_orthogonality(g5);
    IsoSubspace n1(Subspace::from_strings(2, {"01111"}), 5, 0);
    auto stab = character_table(stabilizer(enumerate_O1(5, 0, 2), n1.n));
    ASSERT_EQ(degrees(stab), std::multiset<int64_t>({1, 1, 2, 3, 3}));
    expect_orthogonality(stab);
}

TEST(orthostoch, murnaghan_nakayama_values) {
    ASSERT_EQ(symmetric_character({2, 1}, {1, 1, 1}), 2);
    ASSERT_EQ(symmetric_character({2, 1}, {3}), -1);
    ASSERT_EQ(symmetric_character({1, 1, 1}, {2, 1}), -1);
    ASSERT_EQ(symmetric_character({3, 2}, {1, 1, 1, 1, 1}), 5);
    ASSERT_EQ(symmetric_character({3, 1, 1}, {1, 1, 1, 1, 1}), 6);
    ASSERT_EQ(symmetric_character({3, 1, 1}, {5}), 1);
    ASSERT_EQ(partitions_of(5).size(), 7u);
    ASSERT_EQ(partitions_of(7).size(), 15u);
}

TEST(orthostoch, orthonormal_basis_strata) {
    for (size_t t : {4u, 5u}) {
        auto strata = orthonormal_basis_strata(t);
        std::set<size_t> ks;
        for (const auto &[k, count] : strata) {
            ASSERT_GT(count, 0u);
            ASSERT_EQ(k % 4, 0u);
            ks.insert(k);
        }
        ASSERT_EQ(ks, std::set<size_t>({0, 4}));
    }
}

TEST(orthostoch, cache_round_trip) {
    auto dir = std::filesystem::temp_directory_path() / "cliffdual_group_cache_test";
    std::filesystem::remove_all(dir);
    CacheDir cache{dir.string()};
    FiniteMatrixGroup a = enumerate_O1(5, 0, 2, cache);
    FiniteMatrixGroup b = enumerate_O1(5, 0, 2, cache);
    ASSERT_EQ(a.elements(), b.elements());
    ASSERT_TRUE(b.spot_check_closure(100, 3));
    std::filesystem::remove_all(dir);
    ASSERT_THROW(enumerate_O1(8, 0, 2), std::length_error);
}
