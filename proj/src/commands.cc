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

#include "cliffdual/commands.h"

#include <functional>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "cliffdual/modint.h"

namespace cliffdual {

namespace {

using Check = std::pair<std::string, std::function<bool()>>;

nlohmann::json run_checks(const std::vector<Check> &checks, bool &passed) {
    nlohmann::json out = nlohmann::json::array();
    passed = true;
    for (const auto &[name, fn] : checks) {
        bool ok = false;
        std::string error;
        try {
            ok = fn();
        } catch (const std::exception &e) {
            error = e.what();
        }
        passed = passed && ok;
        nlohmann::json row = {{"check", name}, {"ok", ok}};
        if (!error.empty()) {
            row["error"] = error;
        }
        out.push_back(row);
    }
    return out;
}

nlohmann::json rsdn(size_t r, size_t s, int d, size_t n = 0) {
    nlohmann::json j = {{"r", r}, {"s", s}, {"d", d}};
    if (n > 0) {
        j["n"] = n;
    }
    return j;
}

void require_prime(int d) {
    if (!is_prime(d)) {
        throw std::invalid_argument("d = " + std::to_string(d) + " is not prime");
    }
}

void require_t(size_t r, size_t s) {
    if (r + s == 0) {
        throw std::invalid_argument("t = r + s must be at least 1");
    }
}

}  // namespace

CommandResult make_report(const std::string &command, const nlohmann::json &config, const nlohmann::json &result, bool passed) {
    CommandResult out;
    out.passed = passed;
    out.report = {{"command", command}, {"version", CLIFFDUAL_VERSION}, {"config", config}, {"result", result}, {"passed", passed}};
    return out;
}

CommandResult cmd_forms_classify(size_t r, size_t s, int d) {
    require_prime(d);
    require_t(r, s);
    GenQuadForm q = model_form(r, s, d);
    FormInvariants inv = invariants(q);
    nlohmann::json result = {{"form", q.to_json()}, {"generalized", inv.to_json()}, {"bilinear", invariants(q.polar).to_json()}};
    bool passed = true;
    if (d == 2) {
        int expected = static_cast<int>(mod_floor(static_cast<int64_t>(r) - static_cast<int64_t>(s), 8));
        result["garf_expected"] = expected;
        passed = inv.garf.has_value() && *inv.garf == expected;
    }
    return make_report("forms classify", rsdn(r, s, d), result, passed);
}

CommandResult cmd_forms_classify_gram(int d, const std::vector<std::string> &rows) {
    require_prime(d);
    GFMatrix m = GFMatrix::from_strings(d, rows);
    if (m.rows() != m.cols() || m.transpose() != m) {
        throw std::invalid_argument("gram matrix must be square and symmetric");
    }
    SymBilForm b(m);
    GenQuadForm q = generalized_refine(b);
    nlohmann::json result = {{"bilinear", invariants(b).to_json()}, {"refinement", q.to_json()}, {"generalized", invariants(q).to_json()}};
    bool passed = q.polar == b;
    return make_report("forms classify", {{"d", d}, {"gram", rows}}, result, passed);
}

CommandResult cmd_forms_classify_form(const nlohmann::json &form) {
    GenQuadForm q = GenQuadForm::from_json(form);
    nlohmann::json result = {{"form", q.to_json()}, {"generalized", invariants(q).to_json()}, {"bilinear", invariants(q.polar).to_json()}};
    return make_report("forms classify", {{"d", q.d}, {"form", form}}, result, true);
}

CommandResult cmd_iso_enum(size_t r, size_t s, int d, size_t m, Stratum stratum, const CacheDir &cache) {
    require_prime(d);
    require_t(r, s);
    auto codes = enumerate_isotropic(r, s, d, m, stratum, cache);
    nlohmann::json records = nlohmann::json::array();
    for (const auto &c : codes) {
        records.push_back(c.to_json());
    }
    nlohmann::json result = {{"count", codes.size()}, {"records", records}};
    bool passed = true;
    if (!codes.empty()) {
        bool single_orbit = true;
        bool mixed = false;
        for (const auto &c : codes) {
            mixed = mixed || c.contains_ones != codes[0].contains_ones;
        }
        if (!mixed) {
            for (size_t i = 1; i < codes.size(); i++) {
                single_orbit = single_orbit && witt_transporter(codes[0], codes[i]).has_value();
            }
            result["single_orbit"] = single_orbit;
            passed = single_orbit;
        }
    }
    nlohmann::json config = rsdn(r, s, d);
    config["m"] = m;
    config["stratum"] = stratum_name(stratum);
    return make_report("iso enum", config, result, passed);
}

CommandResult cmd_group_enum(size_t r, size_t s, int d, bool characters, bool stats, const CacheDir &cache) {
    require_prime(d);
    require_t(r, s);
    FiniteMatrixGroup g = enumerate_O1(r, s, d, cache);
    nlohmann::json gens = nlohmann::json::array();
    for (size_t i : g.generators()) {
        gens.push_back(g[i].to_strings());
    }
    bool closed = g.spot_check_closure(200, 1);
    nlohmann::json result = {{"order", g.size()}, {"generators", gens}, {"closure_spot_check", closed}};
    if (stats) {
        auto classes = conjugacy_classes(g);
        nlohmann::json sizes = nlohmann::json::array();
        std::map<size_t, size_t> orders;
        for (const auto &c : classes) {
            sizes.push_back({{"size", c.size}, {"order", c.order}});
            orders[c.order] += c.size;
        }
        nlohmann::json hist = nlohmann::json::array();
        for (const auto &[o, count] : orders) {
            hist.push_back({{"order", o}, {"elements", count}});
        }
        result["classes"] = classes.size();
        result["class_sizes"] = sizes;
        result["element_orders"] = hist;
    }
    if (characters) {
        CharacterTable ct = character_table(g);
        result["characters"] = ct.to_json();
    }
    nlohmann::json config = rsdn(r, s, d);
    config["characters"] = characters;
    config["stats"] = stats;
    return make_report("group enum", config, result, closed);
}

CommandResult cmd_commutant_gram(size_t r, size_t s, int d, size_t n, const CacheDir &cache) {
    require_prime(d);
    require_t(r, s);
    FiniteMatrixGroup o1 = enumerate_O1(r, s, d, cache);
    auto elements = semigroup_elements(o1, all_stochastic_isotropic(r, s, d, cache));
    size_t rank = rational_rank(gram_matrix_S(elements, n));
    nlohmann::json result = {{"group_order", o1.size()},
                             {"semigroup_size", elements.size()},
                             {"gram_rank", rank},
                             {"full_rank", rank == elements.size()}};
    return make_report("commutant gram", rsdn(r, s, d, n), result, true);
}

CommandResult cmd_commutant_verify(size_t r, size_t s, int d, size_t n, const CacheDir &cache) {
    require_prime(d);
    require_t(r, s);
    FiniteMatrixGroup o1 = enumerate_O1(r, s, d, cache);
    auto codes = all_stochastic_isotropic(r, s, d, cache);
    auto elements = semigroup_elements(o1, codes);
    size_t failures = 0;
    nlohmann::json failed = nlohmann::json::array();
    for (const auto &e : elements) {
        std::string which;
        if (!commutes_with_generators(e.op, r, s, n, &which)) {
            failures++;
            failed.push_back({{"o_index", e.o_index}, {"code", e.n.to_json()}, {"generator", which}});
        }
    }
    size_t products = 0;
    size_t product_failures = 0;
    for (const auto &a : codes) {
        for (const auto &b : codes) {
            products++;
            try {
                SemigroupProduct p = semigroup_product(a, b, o1);
                bool ok = p.i.m >= std::max(a.m, b.m) && (!(a.contains_ones || b.contains_ones) || p.i.contains_ones);
                product_failures += !ok;
            } catch (const std::runtime_error &) {
                product_failures++;
            }
        }
    }
    nlohmann::json result = {{"semigroup_size", elements.size()},
                             {"commutation_failures", failures},
                             {"failed", failed},
                             {"products_checked", products},
                             {"product_failures", product_failures}};
    return make_report("commutant verify", rsdn(r, s, d, n), result, failures == 0 && product_failures == 0);
}

CommandResult cmd_decompose_t5(size_t n, const T5Options &options, double tolerance) {
    T5Report rep = t5_pipeline(n, options);
    bool passed = rep.exact_commutation && rep.character_idempotent;
    if (n >= 3) {
        passed = passed && rep.dimensions_complete;
    }
    if (n <= 4) {
        passed = passed && rep.span.within_epsilon;
    }
    if (rep.float_checked) {
        passed = passed && rep.idempotent_error < tolerance && rep.orthogonality_error < tolerance && rep.completeness_error < tolerance &&
                 rep.commutation_error < tolerance;
    }
    nlohmann::json config = {{"n", n}, {"float_checks", options.float_checks}, {"random_vectors", options.random_vectors},
                             {"seed", options.seed}, {"tolerance", tolerance}};
    return make_report("decompose t5", config, rep.to_json(), passed);
}

CommandResult cmd_decompose_stab(size_t r, size_t s, int d, size_t n, const CacheDir &cache) {
    require_prime(d);
    require_t(r, s);
    StabCompression st = stab_subspace_ops(r, s, d, n, cache);
    nlohmann::json result = st.to_json();
    nlohmann::json layers = nlohmann::json::array();
    for (const auto &c : layer_commutation_suite(st.layers)) {
        layers.push_back({{"check", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    }
    result["layer_checks"] = layers;
    bool passed = st.p_stab_idempotent && st.p_stab_self_adjoint && st.commutators_vanish && st.compression_abelian;
    for (const auto &row : layers) {
        passed = passed && row["ok"].get<bool>();
    }
    return make_report("decompose stab", rsdn(r, s, d, n), result, passed);
}

CommandResult cmd_decompose_real(size_t n, size_t t) {
    RealCliffordSuite suite = real_clifford_suite(n, t);
    nlohmann::json result = suite.to_json();
    bool passed = suite.basis_size == suite.expected_size && suite.orthonormal && suite.stabilized && suite.in_code && suite.actions_commute &&
                  (!suite.weyl_transform_checked || suite.weyl_transform);
    size_t tp = t / 2 - 1;
    if (n <= 2 && 2 * n * tp <= 16) {
        OrbitCount oc = orbit_count(n, tp);
        result["orbits"] = oc.to_json();
        passed = passed && oc.orbits == oc.signatures;
    }
    return make_report("decompose real", {{"n", n}, {"t", t}, {"d", 2}}, result, passed);
}

CommandResult cmd_conjugate_plan(const ConjugationPlan &plan) {
    nlohmann::json result = plan.to_json();
    result["isometry"] = encoder_is_isometry(plan);
    return make_report("conjugate plan", {{"d", plan.d}, {"t", plan.t}, {"n", plan.n}}, result, result["isometry"].get<bool>());
}

CommandResult cmd_conjugate_verify(const ConjugationPlan &plan, const std::vector<CliffordWord> &words, Backend backend, double tolerance) {
    nlohmann::json rows = nlohmann::json::array();
    size_t failures = 0;
    for (const auto &w : words) {
        ConjugationResult r = verify_conjugation(plan, w, backend, tolerance);
        failures += !r.ok;
        rows.push_back(r.to_json());
    }
    size_t coherence_checked = 0;
    size_t coherence_failures = 0;
    for (size_t i = 0; i + 1 < words.size() && i < 4; i++) {
        coherence_checked++;
        coherence_failures += !composition_coherent(plan, words[i], words[i + 1], backend, tolerance);
    }
    nlohmann::json result = {{"t", plan.t},
                             {"words", words.size()},
                             {"failures", failures},
                             {"coherence_checked", coherence_checked},
                             {"coherence_failures", coherence_failures},
                             {"results", rows}};
    nlohmann::json config = {{"d", plan.d}, {"t", plan.t}, {"n", plan.n}, {"backend", backend_name(backend)}, {"tolerance", tolerance}};
    return make_report("conjugate verify", config, result, failures == 0 && coherence_failures == 0);
}

std::vector<CliffordWord> plan_random_words(const ConjugationPlan &plan, size_t count, size_t length, uint64_t seed) {
    std::vector<CliffordWord> out;
    for (size_t i = 0; i < count; i++) {
        out.push_back(random_clifford_word(plan.n, plan.d, length, seed + i));
    }
    return out;
}

std::vector<std::string> selftest_suites() {
    return {"scalars", "gflinear", "forms", "isotropic", "orthostoch", "cliffordrep", "commutant", "decompose", "conjugate"};
}

CommandResult run_selftest(const std::string &suite) {
    std::vector<Check> checks;
    if (suite == "all") {
        nlohmann::json parts = nlohmann::json::array();
        bool passed = true;
        for (const auto &name : selftest_suites()) {
            CommandResult r = run_selftest(name);
            passed = passed && r.passed;
            parts.push_back({{"suite", name}, {"passed", r.passed}, {"checks", r.report["result"]["checks"]}});
        }
        return make_report("selftest", {{"suite", suite}}, {{"suites", parts}}, passed);
    }
    if (suite == "scalars") {
        checks = {
            {"legendre(3, 5) = -1", [] { return legendre(3, 5) == -1; }},
            {"tau = i for d = 2", [] { return phase_tau(1, 2) == CycScalar::root(CycField::for_qudit(2), 2); }},
            {"1/2 + 1/3 = 5/6", [] { return Rational(1, 2) + Rational(1, 3) == Rational(5, 6); }},
            {"M(3) = 24", [] { return cyclotomic_level(3) == 24; }},
            {"sqrt(5)^2 = 5",
             [] {
                 const CycField &f = CycField::for_qudit(5);
                 return CycScalar::sqrt_d(f) * CycScalar::sqrt_d(f) == CycScalar(f, Rational(5));
             }},
        };
    } else if (suite == "gflinear") {
        checks = {
            {"rank(I_3) = 3", [] { return rank(GFMatrix::identity(2, 3)) == 3; }},
            {"ker(1_5^T) has dim 4",
             [] {
                 GFMatrix m(2, 1, 5);
                 m.set_row(0, ones(5));
                 return kernel(m).dim() == 4;
             }},
            {"inverse over Z_5",
             [] {
                 GFMatrix m = GFMatrix::from_strings(5, {"12", "34"});
                 auto inv = inverse(m);
                 return inv.has_value() && m * *inv == GFMatrix::identity(5, 2);
             }},
        };
    } else if (suite == "forms") {
        checks = {
            {"garf(q_{r,s}) = r - s mod 8 for r, s <= 8",
             [] {
                 for (size_t r = 0; r <= 8; r++) {
                     for (size_t s = 0; s <= 8; s++) {
                         if (r + s == 0) {
                             continue;
                         }
                         auto g = invariants(model_form(r, s, 2)).garf;
                         if (!g || *g != mod_floor(static_cast<int64_t>(r) - static_cast<int64_t>(s), 8)) {
                             return false;
                         }
                     }
                 }
                 return true;
             }},
            {"arf of the hyperbolic plane is 0",
             [] {
                 QuadForm q(GFMatrix::from_strings(2, {"01", "00"}));
                 return arf(q) == 0;
             }},
            {"q_{2,0} ~ q_{0,2} over Z_5", [] { return equivalent(model_form(2, 0, 5), model_form(0, 2, 5)).equivalent; }},
        };
    } else if (suite == "isotropic") {
        checks = {
            {"(5,0) d=2 has five codes of dimension 1", [] { return enumerate_isotropic(5, 0, 2, 1, Stratum::both).size() == 5; }},
            {"(3,0) d=2 has no code", [] { return enumerate_isotropic(3, 0, 2, 1, Stratum::both).empty(); }},
            {"<1111000, 0011110, 1010101> is isotropic for q_{7,0}",
             [] {
                 Subspace s = Subspace::from_strings(2, {"1111000", "0011110", "1010101"});
                 return is_isotropic(model_form(7, 0, 2), s);
             }},
        };
    } else if (suite == "orthostoch") {
        checks = {
            {"|O_1(Z_2^3)| = 6", [] { return enumerate_O1(3, 0, 2).size() == 6; }},
            {"|O_1(Z_2^5)| = 120", [] { return enumerate_O1(5, 0, 2).size() == 120; }},
            {"orthonormal basis strata at t = 4 are {0, 4}",
             [] {
                 std::set<size_t> ks;
                 for (const auto &[k, c] : orthonormal_basis_strata(4)) {
                     ks.insert(k);
                 }
                 return ks == std::set<size_t>({0, 4});
             }},
        };
    } else if (suite == "cliffordrep") {
        checks = {
            {"H^2 = 1 for d = 2",
             [] {
                 CycMatrix h = gate_matrix(Gate::H(0), 1, 2);
                 return (h * h).is_identity();
             }},
            {"weight law on 20 random pairs",
             [] {
                 std::mt19937_64 rng(5);
                 for (int i = 0; i < 20; i++) {
                     size_t n = 1 + rng() % 2;
                     size_t t = 1 + rng() % 4;
                     GFMatrix qm(2, n, n);
                     GFMatrix f(2, t, n);
                     for (size_t a = 0; a < n; a++) {
                         for (size_t b = 0; b < n; b++) {
                             qm.set(a, b, static_cast<int64_t>(rng() % 2));
                         }
                         for (size_t c = 0; c < t; c++) {
                             f.set(c, a, static_cast<int64_t>(rng() % 2));
                         }
                     }
                     if (!weight_eigenvalue_check(QuadForm(qm), f, t, 0).match) {
                         return false;
                     }
                 }
                 return true;
             }},
            {"(8,0) ~ (4,4) intertwiner at n = 1",
             [] {
                 auto g = rs_intertwiner(8, 0, 4, 4, 2);
                 return g.has_value() && check_rs_intertwiner(*g, 8, 0, 4, 4, 1);
             }},
        };
    } else if (suite == "commutant") {
        checks = {
            {"P(N) equals the coset projector at (4,0)",
             [] {
                 for (const auto &n : all_stochastic_isotropic(4, 0, 2)) {
                     if (projector_P(n) != projector_from_cosets(n)) {
                         return false;
                     }
                 }
                 return true;
             }},
            {"S_{3,0} commutes with Delta at n = 2", [] { return cmd_commutant_verify(3, 0, 2, 2).passed; }},
            {"commutant of Delta_{3,0} at n = 2 has dimension 6", [] { return commutant_dimension_mod_p(3, 0, 2, 2).nullity == 6; }},
        };
    } else if (suite == "decompose") {
        checks = {
            {"t=5 overlap law at n = 1", [] { return t5_overlap_law(1).mismatches == 0; }},
            {"stabilizer compression at (3,0) d=3 n=2", [] { return cmd_decompose_stab(3, 0, 3, 2).passed; }},
            {"real-Clifford suite at t=4 n=1", [] { return cmd_decompose_real(1, 4).passed; }},
            {"exact duality at d=5 t=3", [] { return exact_duality_check(5, 3); }},
        };
    } else if (suite == "conjugate") {
        checks = {
            {"minimal t is 7, 9, 11 for d = 2, 5, 3", [] { return minimal_t(2) == 7 && minimal_t(5) == 9 && minimal_t(3) == 11; }},
            {"d=2 encoder is an isometry", [] { return encoder_is_isometry(build_plan(2, 1)); }},
            {"5 random words at d=2 n=1",
             [] {
                 ConjugationPlan plan = build_plan(2, 1);
                 return cmd_conjugate_verify(plan, plan_random_words(plan, 5, 10, 1), Backend::exact).passed;
             }},
        };
    } else {
        throw std::invalid_argument("unknown suite '" + suite + "'");
    }
    bool passed = true;
    nlohmann::json rows = run_checks(checks, passed);
    return make_report("selftest", {{"suite", suite}}, {{"checks", rows}}, passed);
}

}  // namespace cliffdual
