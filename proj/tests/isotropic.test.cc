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
#include <map>

#include "cliffdual/isotropic.h"
#include "gtest/gtest.h"

using namespace cliffdual;

namespace {

bool satisfies_plain_conditions(const IsoSubspace &n) {
    auto rows = n.n.basis_vectors();
    for (size_t i = 0; i < rows.size(); i++) {
        size_t w = 0;
        for (auto x : rows[i]) {
            w += x;
        }
        if (w % 4 != 0) {
            return false;
        }
        for (size_t j = i + 1; j < rows.size(); j++) {
            if (dot(rows[i], rows[j], 2) != 0) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

TEST(isotropic, five_qubit_census) {
    auto gr = enumerate_isotropic(5, 0, 2, 1, Stratum::gr);
    ASSERT_EQ(gr.size(), 5u);
    for (const auto &n : gr) {
        ASSERT_EQ(n.m, 1u);
        ASSERT_FALSE(n.contains_ones);
        Vec v = n.n.basis().row(0);
        size_t flipped = 0;
        for (size_t i = 0; i < 5; i++) {
            flipped += v[i] == 0;
        }
        ASSERT_EQ(flipped, 1u);
    }
    ASSERT_TRUE(enumerate_isotropic(5, 0, 2, 2, Stratum::both).empty());
    ASSERT_TRUE(enumerate_isotropic(5, 0, 2, 1, Stratum::gr0).empty());
    ASSERT_EQ(max_isotropic_dim(5, 0, 2), 1u);
}

TEST(isotropic, seven_qubit_example) {
    auto gr3 = enumerate_isotropic(7, 0, 2, 3, Stratum::gr);
    Subspace target = Subspace::from_strings(2, {"1111000", "0011110", "1010101"});
    bool found = false;
    for (const auto &n : gr3) {
        found = found || n.n == target;
    }
    ASSERT_TRUE(found);
    ASSERT_TRUE(enumerate_isotropic(7, 0, 2, 4, Stratum::gr).empty());
    ASSERT_EQ(max_isotropic_dim(7, 0, 2), 3u);
}

TEST(isotropic, three_qubits_have_nothing) {
    ASSERT_TRUE(enumerate_isotropic(3, 0, 2, 1, Stratum::both).empty());
    ASSERT_EQ(max_isotropic_dim(3, 0, 2), 0u);
    auto trivial = enumerate_isotropic(3, 0, 2, 0, Stratum::gr);
    ASSERT_EQ(trivial.size(), 1u);
    ASSERT_EQ(trivial[0].m, 0u);
}

TEST(isotropic, diagonal_pairs_in_gr0) {
    for (size_t tp = 1; tp <= 3; tp++) {
        std::vector<Vec> rows;
        for (size_t i = 0; i < tp; i++) {
            Vec v(2 * tp, 0);
            v[i] = 1;
            v[i + tp] = 1;
            rows.push_back(v);
        }
        Subspace n = Subspace::span(2, 2 * tp, rows);
        auto gr0 = enumerate_isotropic(tp, tp, 2, tp, Stratum::gr0);
        bool found = false;
        for (const auto &x : gr0) {
            found = found || x.n == n;
            ASSERT_TRUE(x.contains_ones);
        }
        ASSERT_TRUE(found);
        IsoSubspace iso(n, tp, tp);
        ASSERT_TRUE(iso.contains_ones);
        ASSERT_TRUE(enumerate_isotropic(tp, tp, 2, tp + 1, Stratum::both).empty());
    }
}

TEST(isotropic, enumerated_spaces_satisfy_plain_conditions) {
    for (size_t t = 1; t <= 9; t++) {
        for (size_t m = 1; m <= t / 2; m++) {
            for (const auto &n : enumerate_isotropic(t, 0, 2, m, Stratum::both)) {
                ASSERT_TRUE(satisfies_plain_conditions(n));
                ASSERT_TRUE(n.perp.contains(n.n));
                ASSERT_TRUE(n.perp.contains(ones(t)));
            }
        }
    }
    for (int d : {3, 5}) {
        for (size_t r = 0; r <= 4; r++) {
            for (size_t s = 0; r + s <= 4; s++) {
                for (size_t m = 1; m <= 2; m++) {
                    for (const auto &n : enumerate_isotropic(r, s, d, m, Stratum::both)) {
                        GenQuadForm q = model_form(r, s, d);
                        for (const auto &v : n.n.elements()) {
                            ASSERT_EQ(evaluate(q, v).value, 0);
                        }
                    }
                }
            }
        }
    }
}

TEST(isotropic, gr0_needs_vanishing_signature) {
    for (int d : {2, 3, 5}) {
        int64_t D = tau_order(d);
        for (size_t r = 0; r <= 5; r++) {
            for (size_t s = 0; r + s <= 6 && (d == 2 || r + s <= 5); s++) {
                for (size_t m = 1; m <= 3; m++) {
                    if (!enumerate_isotropic(r, s, d, m, Stratum::gr0).empty()) {
                        ASSERT_EQ(((static_cast<int64_t>(r) - static_cast<int64_t>(s)) % D + D) % D, 0);
                    }
                }
            }
        }
    }
}

TEST(isotropic, count_is_invariant_under_relabeling) {
    for (size_t m = 1; m <= 2; m++) {
        auto a = enumerate_isotropic(3, 3, 2, m, Stratum::both);
        size_t by_perm = 0;
        Vec perm = {3, 4, 5, 0, 1, 2};
        for (const auto &n : a) {
            std::vector<Vec> rows;
            for (const auto &v : n.n.basis_vectors()) {
                Vec w(6);
                for (size_t i = 0; i < 6; i++) {
                    w[perm[i]] = v[i];
                }
                rows.push_back(w);
            }
            IsoSubspace moved(Subspace::span(2, 6, rows), 3, 3);
            by_perm += std::binary_search(a.begin(), a.end(), moved);
        }
        ASSERT_EQ(by_perm, a.size());
    }
    for (size_t m = 1; m <= 2; m++) {
        ASSERT_EQ(enumerate_isotropic(2, 3, 3, m, Stratum::both).size(), enumerate_isotropic(3, 2, 3, m, Stratum::both).size());
    }
}

TEST(isotropic, transporter_examples) {
    IsoSubspace a(Subspace::from_strings(2, {"11110000"}), 8, 0);
    IsoSubspace b(Subspace::from_strings(2, {"00001111"}), 8, 0);
    auto o = witt_transporter(a, b);
    ASSERT_TRUE(o.has_value());
    ASSERT_TRUE(is_stochastic_isometry(*o, 8, 0));
    ASSERT_EQ(a.n.image(*o), b.n);
    auto id = witt_transporter(a, a);
    ASSERT_TRUE(id.has_value());
    ASSERT_EQ(a.n.image(*id), a.n);
    IsoSubspace c(Subspace::span(2, 8, {ones(8)}), 8, 0);
    ASSERT_FALSE(witt_transporter(a, c).has_value());
}

TEST(isotropic, single_orbit_per_stratum) {
    struct Case {
        size_t r, s;
        int d;
    };
    for (Case c : {Case{4, 0, 2}, Case{5, 0, 2}, Case{6, 0, 2}, Case{7, 0, 2}, Case{3, 3, 2}, Case{5, 1, 2}, Case{4, 2, 2},
                   Case{3, 0, 3}, Case{2, 1, 3}, Case{4, 0, 3}, Case{2, 2, 3}}) {
        for (size_t m = 1; m <= (c.r + c.s) / 2; m++) {
            for (Stratum st : {Stratum::gr, Stratum::gr0}) {
                auto all = enumerate_isotropic(c.r, c.s, c.d, m, st);
                for (const auto &x : all) {
                    auto o = witt_transporter(all[0], x);
                    ASSERT_TRUE(o.has_value()) << c.r << " " << c.s << " " << c.d << " m=" << m << " " << x.n.key();
                    ASSERT_TRUE(is_stochastic_isometry(*o, c.r, c.s));
                    ASSERT_EQ(all[0].n.image(*o), x.n);
                }
            }
        }
    }
}

TEST(isotropic, find_isotropic_dfs) {
    auto n = find_isotropic(7, 0, 2, 3, false);
    ASSERT_TRUE(n.has_value());
    ASSERT_FALSE(n->contains_ones);
    ASSERT_FALSE(find_isotropic(5, 0, 2, 2, false).has_value());
    auto z = find_isotropic(2, 2, 2, 2, true);
    ASSERT_TRUE(z.has_value());
    ASSERT_TRUE(z->contains_ones);
}

TEST(isotropic, errors) {
    ASSERT_THROW(IsoSubspace(Subspace::from_strings(2, {"11000"}), 5, 0), std::invalid_argument);
    ASSERT_THROW(IsoSubspace(Subspace::from_strings(2, {"11110"}), 4, 0), std::invalid_argument);
    ASSERT_THROW(enumerate_isotropic(13, 0, 2, 1, Stratum::gr), std::length_error);
    ASSERT_THROW(enumerate_isotropic(7, 0, 3, 1, Stratum::gr), std::length_error);
    ASSERT_THROW(parse_stratum("x"), std::invalid_argument);
}

TEST(isotropic, json_and_cache_round_trip) {
    IsoSubspace a(Subspace::from_strings(2, {"01111"}), 5, 0);
    ASSERT_EQ(IsoSubspace::from_json(a.to_json()), a);
    auto dir = std::filesystem::temp_directory_path() / "cliffdual_iso_cache_test";
    std::filesystem::remove_all(dir);
    CacheDir cache{dir.string()};
    auto fresh = enumerate_isotropic(6, 0, 2, 2, Stratum::both, cache);
    auto again = enumerate_isotropic(6, 0, 2, 2, Stratum::both, cache);
    ASSERT_EQ(fresh, again);
    ASSERT_EQ(std::distance(std::filesystem::directory_iterator(dir), std::filesystem::directory_iterator()), 1);
    for (const auto &n : again) {
        ASSERT_TRUE(satisfies_plain_conditions(n));
    }
    std::filesystem::remove_all(dir);
}
