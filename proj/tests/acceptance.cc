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

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "cliffdual/commutant.h"
#include "cliffdual/conjugate.h"
#include "cliffdual/decompose.h"
#include "cliffdual/forms.h"
#include "cliffdual/isotropic.h"
#include "cliffdual/modint.h"
#include "cliffdual/orthostoch.h"

using namespace cliffdual;

namespace {

struct Outcome {
    bool ok = false;
    std::string detail;
};

int failures = 0;

void criterion(int id, const std::string &name, double limit_seconds, const std::function<Outcome()> &fn) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = fn();
    } catch (const std::exception &e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = elapsed < limit_seconds;
    bool ok = out.ok && in_time;
    failures += !ok;
    std::printf("%s %2d %s: %s [%.2f s, limit %.0f s%s]\n", ok ? "PASS" : "FAIL", id, name.c_str(), out.detail.c_str(), elapsed,
                limit_seconds, in_time ? "" : ", exceeded");
    std::fflush(stdout);
}

std::string num(uint64_t v) {
    return std::to_string(v);
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

bool contains_ones(const Subspace &s) {
    return s.contains(ones(s.ambient_dim()));
}

}  // namespace

int main() {
    criterion(1, "generalized Arf law garf(q_{r,s}) = r - s mod 8, 0 <= r,s <= 8", 5, [] {
        size_t checked = 0;
        for (size_t r = 0; r <= 8; r++) {
            for (size_t s = 0; s <= 8; s++) {
                auto g = invariants(model_form(r, s, 2)).garf;
                int64_t want = mod_floor(static_cast<int64_t>(r) - static_cast<int64_t>(s), 8);
                if (!g || *g != want) {
                    return Outcome{false, "mismatch at (" + num(r) + "," + num(s) + ")"};
                }
                checked++;
            }
        }
        return Outcome{true, num(checked) + " forms by Gauss sum"};
    });

    criterion(2, "Grassmannian census (5,0), d = 2", 1, [] {
        auto codes = enumerate_isotropic(5, 0, 2, 1, Stratum::both);
        bool ok = codes.size() == 5;
        for (const auto &c : codes) {
            ok = ok && c.m == 1 && !c.contains_ones;
        }
        // 2m <= 5, so m = 2 is the only other dimension.
        ok = ok && enumerate_isotropic(5, 0, 2, 2, Stratum::both).empty();
        size_t transported = 0;
        for (const auto &c : codes) {
            auto o = witt_transporter(codes[0], c);
            if (o && is_stochastic_isometry(*o, 5, 0) && conjugate_code(*o, codes[0]).n == c.n) {
                transported++;
            }
        }
        ok = ok && transported == codes.size();
        return Outcome{ok, num(codes.size()) + " codes of dim 1 without 1_5, " + num(transported) + " reached by transporters"};
    });

    criterion(3, "group identifications |O_1(Z_2^3)| = 6, |O_1(Z_2^5)| = 120 ~ S_5", 30, [] {
        size_t o3 = enumerate_O1(3, 0, 2).size();
        FiniteMatrixGroup g5 = enumerate_O1(5, 0, 2);
        std::vector<Subspace> pts;
        for (const auto &n : enumerate_isotropic(5, 0, 2, 1, Stratum::gr)) {
            pts.push_back(n.n);
        }
        auto perms = permutation_action(g5, pts);
        std::set<std::vector<size_t>> distinct(perms.begin(), perms.end());
        bool ok = o3 == 6 && g5.size() == 120 && pts.size() == 5 && distinct.size() == 120;
        return Outcome{ok, "orders " + num(o3) + ", " + num(g5.size()) + "; " + num(distinct.size()) + " distinct permutations of " +
                               num(pts.size()) + " codes"};
    });

    criterion(4, "S_{5,0} commutes with Delta_{5,0}(g) at n = 2", 120, [] {
        auto elems = semigroup_elements(enumerate_O1(5, 0, 2), all_stochastic_isotropic(5, 0, 2));
        size_t bad = 0;
        for (const auto &e : elems) {
            bad += !commutes_with_generators(e.op, 5, 0, 2);
        }
        return Outcome{bad == 0 && !elems.empty(), num(elems.size()) + " elements, " + num(bad) + " failures"};
    });

    criterion(5, "commutant of Delta_{3,0} at n = 2 has dimension 6 = |S_{3,0}|", 120, [] {
        auto elems = semigroup_elements(enumerate_O1(3, 0, 2), all_stochastic_isotropic(3, 0, 2));
        CommutantDimension dim = commutant_dimension_mod_p(3, 0, 2, 2);
        size_t lower = rational_rank(gram_matrix_S(elems, 2));
        bool ok = dim.nullity == 6 && lower == 6 && elems.size() == 6;
        return Outcome{ok, "kernel dim " + num(dim.nullity) + " (mod " + num(dim.prime) + ", upper bound), independent |S| " + num(lower) +
                               " of " + num(elems.size())};
    });

    criterion(6, "Gram matrix of S_{4,0} at n = 5 has full rank", 60, [] {
        auto elems = semigroup_elements(enumerate_O1(4, 0, 2), all_stochastic_isotropic(4, 0, 2));
        size_t rank = rational_rank(gram_matrix_S(elems, 5));
        return Outcome{rank == elems.size(), "rank " + num(rank) + " of " + num(elems.size())};
    });

    criterion(7, "coset overlap law for the five t = 5 codes, n = 1..3", 60, [] {
        size_t pairs = 0;
        size_t bad = 0;
        for (size_t n = 1; n <= 3; n++) {
            T5OverlapCheck c = t5_overlap_law(n);
            pairs += c.pairs;
            bad += c.mismatches;
        }
        return Outcome{bad == 0 && pairs > 0, num(pairs) + " cross-code pairs, " + num(bad) + " mismatches"};
    });

    criterion(8, "t = 5 coset states at n = 4: rank 5 2^12, spectrum within epsilon(4)", 300, [] {
        CosetSpan span = t5_coset_span(4);
        bool ok = span.rank == 5 * 4096 && span.states == span.rank && span.within_epsilon &&
                  span.q_min >= 1 - span.epsilon - 1e-9 && span.q_max <= 1 + span.epsilon + 1e-9;
        char buf[200];
        std::snprintf(buf, sizeof(buf), "rank %zu of %zu states, Q spectrum [%.6f, %.6f], epsilon %.6f", span.rank, span.states, span.q_min,
                      span.q_max, span.epsilon);
        return Outcome{ok, buf};
    });

    criterion(9, "semigroup closure P(N1) P(N2) = R(O) P(I) for t = 4, 5", 120, [] {
        size_t pairs = 0;
        size_t bad = 0;
        for (size_t t : {4u, 5u}) {
            FiniteMatrixGroup o1 = enumerate_O1(t, 0, 2);
            auto codes = all_stochastic_isotropic(t, 0, 2);
            for (const auto &n1 : codes) {
                for (const auto &n2 : codes) {
                    pairs++;
                    SemigroupProduct prod = semigroup_product(n1, n2, o1);
                    bool ok = (projector_P(n1) * projector_P(n2)).to_matrix() ==
                              (column_R(prod.o) * projector_P(prod.i)).to_matrix().scaled(prod.scalar);
                    ok = ok && prod.i.m >= std::max(n1.m, n2.m);
                    if (contains_ones(n1.n) || contains_ones(n2.n)) {
                        ok = ok && contains_ones(prod.i.n);
                    }
                    bad += !ok;
                }
            }
        }
        return Outcome{bad == 0, num(pairs) + " pairs, " + num(bad) + " failures"};
    });

    criterion(10, "black-box conjugation: d = 2, t = 7, n = 1, 2 exact; d = 3, t = 11 float", 600, [] {
        size_t words = 0;
        size_t bad = 0;
        for (size_t n = 1; n <= 2; n++) {
            ConjugationPlan plan = build_plan(2, n);
            if (plan.t != 7) {
                return Outcome{false, "t = " + num(plan.t) + " at d = 2"};
            }
            for (uint64_t seed = 0; seed < 100; seed++) {
                ConjugationResult r = verify_conjugation(plan, random_clifford_word(n, 2, 20, 1000 * n + seed), Backend::exact);
                words++;
                bad += !(r.ok && r.phase_order == 8);
            }
        }
        ConjugationPlan p3 = build_plan(3, 1);
        double worst = 0;
        size_t bad3 = 0;
        for (uint64_t seed = 0; seed < 10; seed++) {
            ConjugationResult r = verify_conjugation(p3, random_clifford_word(1, 3, 20, seed), Backend::floating, 1e-9);
            worst = std::max(worst, r.residual);
            bad3 += !r.ok;
        }
        char buf[200];
        std::snprintf(buf, sizeof(buf), "d=2: %zu/%zu exact with phase in <omega_8>; d=3 (t=%zu): %zu/10 float, max residual %.2e",
                      words - bad, words, p3.t, 10 - bad3, worst);
        return Outcome{bad == 0 && bad3 == 0 && p3.t == 11 && worst < 1e-9, buf};
    });

    criterion(11, "exact-duality predicate vs enumeration, d in {3,5,7,11,13}, t in {2,3}", 30, [] {
        size_t rows = 0;
        size_t bad = 0;
        for (int d : {3, 5, 7, 11, 13}) {
            for (size_t t : {2u, 3u}) {
                for (const auto &row : exact_duality_table(d, t)) {
                    rows++;
                    bad += !(row.agree && row.mod3_reduction);
                }
            }
        }
        return Outcome{bad == 0 && rows > 0, num(rows) + " (d, r, s) cases, " + num(bad) + " disagreements"};
    });

    criterion(12, "Delta_{8,0} ~ Delta_{4,4} at n = 1 via |F> -> |gF>", 60, [] {
        auto g = rs_intertwiner(8, 0, 4, 4, 2);
        bool ok = g.has_value() && g->apply(ones(8)) == ones(8) && check_rs_intertwiner(*g, 8, 0, 4, 4, 1);
        return Outcome{ok, g ? "intertwiner found, generators conjugated exactly" : "no intertwiner"};
    });

    criterion(13, "weight law on 200 random (F, diagonal Clifford) pairs, d = 2", 60, [] {
        std::mt19937_64 rng(2024);
        size_t bad = 0;
        for (int i = 0; i < 200; i++) {
            size_t n = 1 + rng() % 3;
            size_t t = 1 + rng() % 5;
            size_t r = rng() % (t + 1);
            QuadForm q(random_matrix(2, n, n, rng));
            GFMatrix f = random_matrix(2, t, n, rng);
            bad += !weight_eigenvalue_check(q, f, r, t - r).match;
        }
        return Outcome{bad == 0, "200 pairs, " + num(bad) + " mismatches"};
    });

    criterion(14, "stabilizer compression commutators vanish, (3,0), d = 3, n = 2", 120, [] {
        StabCompression c = stab_subspace_ops(3, 0, 3, 2);
        bool ok = c.commutators_vanish && c.compression_abelian && c.p_stab_idempotent && c.p_stab_self_adjoint;
        return Outcome{ok, "|O_1| = " + num(c.group_order) + ", " + num(c.failures.size()) + " failing commutators"};
    });

    criterion(15, "real-Clifford suite at t = 4, n <= 2", 120, [] {
        std::string detail;
        bool ok = true;
        for (size_t n = 1; n <= 2; n++) {
            RealCliffordSuite s = real_clifford_suite(n, 4);
            bool size_ok = s.basis_size == (size_t{1} << (n * 2)) && s.basis_size == s.expected_size;
            ok = ok && size_ok && s.orthonormal && s.stabilized && s.in_code && s.actions_commute;
            if (n == 1) {
                ok = ok && s.weyl_transform_checked && s.weyl_transform;
            }
            detail += "n=" + num(n) + ": basis " + num(s.basis_size) + (s.orthonormal ? " orthonormal" : " NOT orthonormal") +
                      (s.actions_commute ? ", actions commute" : ", actions do not commute") + "; ";
        }
        return Outcome{ok, detail + "Weyl transform identity at n=1"};
    });

    criterion(16, "orthonormal-basis strata at t = 4, 5 have defect k in {0, 4}", 60, [] {
        std::set<size_t> ks;
        for (size_t t : {4u, 5u}) {
            for (const auto &[k, count] : orthonormal_basis_strata(t)) {
                if (count > 0) {
                    ks.insert(k);
                }
            }
        }
        std::string seen;
        for (size_t k : ks) {
            seen += (seen.empty() ? "" : ",") + num(k);
        }
        bool ok = !ks.empty();
        for (size_t k : ks) {
            ok = ok && (k == 0 || k == 4);
        }
        return Outcome{ok, "observed k = {" + seen + "}"};
    });

    std::printf("%s: %d of 16 criteria failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
    return failures == 0 ? 0 : 1;
}
