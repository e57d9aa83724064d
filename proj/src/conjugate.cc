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

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "cliffdual/modint.h"

namespace cliffdual {

namespace {

using ComplexMatrix = std::vector<std::vector<std::complex<double>>>;

const uint64_t kMaxAmplitudes = uint64_t{1} << 22;
const uint64_t kMaxColumn = uint64_t{1} << 21;

CycScalar sparse_dense_overlap(const SparseState &a, const ExactState &b) {
    const auto &ops = b.ops();
    CycInt acc = ops.zero();
    for (const auto &[idx, v] : a.entries) {
        const CycInt &x = b.amplitudes()[idx];
        if (!x.is_zero()) {
            acc += ops.mul(ops.conj(v), x);
        }
    }
    return ops.to_cyc(acc, a.k + b.sqrt_d_exp());
}

std::complex<double> sparse_dense_overlap(const SparseState &a, const FloatState &b) {
    ScalarOps<CycInt> ops(a.d);
    std::complex<double> acc = 0;
    for (const auto &[idx, v] : a.entries) {
        acc += std::conj(ops.to_complex(v, a.k)) * b.amplitudes()[idx];
    }
    return acc;
}

FloatState to_float(const SparseState &a) {
    ScalarOps<CycInt> ops(a.d);
    FloatState out(a.n, a.t, a.d);
    for (const auto &[idx, v] : a.entries) {
        out.amplitudes()[idx] = ops.to_complex(v, a.k);
    }
    return out;
}

ComplexMatrix to_complex(const CycMatrix &m) {
    ComplexMatrix out(m.rows(), std::vector<std::complex<double>>(m.cols()));
    for (size_t i = 0; i < m.rows(); i++) {
        for (size_t j = 0; j < m.cols(); j++) {
            out[i][j] = m.at(i, j).to_complex();
        }
    }
    return out;
}

ComplexMatrix multiply(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.size(), std::vector<std::complex<double>>(b[0].size()));
    for (size_t i = 0; i < a.size(); i++) {
        for (size_t k = 0; k < b.size(); k++) {
            for (size_t j = 0; j < b[0].size(); j++) {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    return out;
}

/// Smallest max-norm distance between a and omega_M^j b, with the minimizing j.
std::pair<double, int64_t> phase_distance(const ComplexMatrix &a, const ComplexMatrix &b, int64_t order) {
    double best = INFINITY;
    int64_t best_j = 0;
    for (int64_t j = 0; j < order; j++) {
        std::complex<double> w = std::polar(1.0, 2 * M_PI * static_cast<double>(j) / static_cast<double>(order));
        double dist = 0;
        for (size_t x = 0; x < a.size(); x++) {
            for (size_t y = 0; y < a[x].size(); y++) {
                dist = std::max(dist, std::abs(a[x][y] - w * b[x][y]));
            }
        }
        if (dist < best) {
            best = dist;
            best_j = j;
        }
    }
    return {best, best_j};
}

std::optional<int64_t> exact_phase(const CycMatrix &a, const CycMatrix &b, int64_t order) {
    for (int64_t j = 0; j < order; j++) {
        if (a == b.scaled(CycScalar::root(b.field(), j))) {
            return j;
        }
    }
    return std::nullopt;
}

}  // namespace

size_t minimal_t(int d) {
    if (!is_prime(d)) {
        throw std::invalid_argument("minimal_t: d must be prime");
    }
    if (d == 2) {
        return 7;
    }
    return d % 4 == 1 ? static_cast<size_t>(2 * d - 1) : static_cast<size_t>(4 * d - 1);
}

GFMatrix ConjugationPlan::label(const Vec &x) const {
    if (x.size() != n) {
        throw std::invalid_argument("ConjugationPlan::label: x must have length n");
    }
    GFMatrix out(d, 1, n);
    for (size_t i = 0; i < n; i++) {
        out.set(0, i, mod_floor(ones_coordinate * x[i], d));
    }
    return out;
}

SparseState ConjugationPlan::encoder_column(const Vec &x) const {
    return coset_state_sparse(code, label(x), n);
}

uint64_t ConjugationPlan::input_dim() const {
    return int_pow(static_cast<uint64_t>(d), n);
}

nlohmann::json ConjugationPlan::to_json() const {
    return {{"format", "cliffdual.conjugation_plan"},
            {"d", d},
            {"t", t},
            {"n", n},
            {"code", code.to_json()},
            {"ones_coordinate", ones_coordinate},
            {"encoder_shape", {int_pow(static_cast<uint64_t>(d), n * t), input_dim()}}};
}

ConjugationPlan ConjugationPlan::from_json(const nlohmann::json &j) {
    if (j.value("format", "") != "cliffdual.conjugation_plan") {
        throw std::invalid_argument("not a conjugation plan");
    }
    ConjugationPlan p;
    p.d = j.at("d").get<int>();
    p.t = j.at("t").get<size_t>();
    p.n = j.at("n").get<size_t>();
    p.code = IsoSubspace::from_json(j.at("code"));
    p.ones_coordinate = j.at("ones_coordinate").get<int64_t>();
    if (p.code.t() != p.t || p.code.quotient.quotient_dim() != 1) {
        throw std::invalid_argument("conjugation plan: code must have dim T_N = 1");
    }
    return p;
}

ConjugationPlan build_plan(int d, size_t n) {
    ConjugationPlan plan;
    plan.d = d;
    plan.t = minimal_t(d);
    plan.n = n;
    if (n < 1) {
        throw std::invalid_argument("build_plan: n must be positive");
    }
    double log2_dim = static_cast<double>(plan.t * n) * std::log2(static_cast<double>(d));
    if (log2_dim > std::log2(static_cast<double>(kMaxAmplitudes)) + 1e-9 ||
        static_cast<double>(plan.t) * std::log2(static_cast<double>(d)) > std::log2(static_cast<double>(kMaxColumn)) + 1e-9) {
        char buf[160];
        std::snprintf(buf, sizeof(buf), "build_plan: state dimension d^{nt} = %d^%zu ~ 2^%.1f exceeds the cap of 2^22 amplitudes", d,
                      plan.t * n, log2_dim);
        throw std::length_error(buf);
    }
    size_t m = (plan.t - 1) / 2;
    if (d == 2) {
        Subspace s = Subspace::span(2, 7, {{1, 1, 1, 1, 0, 0, 0}, {0, 0, 1, 1, 1, 1, 0}, {1, 0, 1, 0, 1, 0, 1}});
        plan.code = IsoSubspace(s, 7, 0);
    } else {
        auto found = find_isotropic(plan.t, 0, d, m, false);
        if (!found) {
            throw std::runtime_error("build_plan: no isotropic code of dimension " + std::to_string(m));
        }
        plan.code = *found;
    }
    if (plan.code.quotient.quotient_dim() != 1 || plan.code.contains_ones) {
        throw std::logic_error("build_plan: code does not have dim T_N = 1");
    }
    Vec c = plan.code.quotient.project(ones(plan.t));
    if (c[0] == 0) {
        throw std::logic_error("build_plan: [1_t]_N vanishes");
    }
    plan.ones_coordinate = c[0];
    return plan;
}

bool encoder_is_isometry(const ConjugationPlan &plan) {
    std::vector<SparseState> cols;
    for (uint64_t x = 0; x < plan.input_dim(); x++) {
        cols.push_back(plan.encoder_column(vec_decode(x, plan.d, plan.n)));
    }
    const CycField &field = CycField::for_qudit(plan.d);
    for (size_t a = 0; a < cols.size(); a++) {
        for (size_t b = 0; b < cols.size(); b++) {
            CycScalar v = overlap(cols[a], cols[b]);
            if (v != (a == b ? CycScalar::one(field) : CycScalar::zero(field))) {
                return false;
            }
        }
    }
    return true;
}

Backend parse_backend(const std::string &s) {
    if (s == "exact") {
        return Backend::exact;
    }
    if (s == "float") {
        return Backend::floating;
    }
    throw std::invalid_argument("unknown backend '" + s + "' (expected exact or float)");
}

std::string backend_name(Backend b) {
    return b == Backend::exact ? "exact" : "float";
}

nlohmann::json ConjugationResult::to_json() const {
    return {{"word", word}, {"ok", ok}, {"phase", phase}, {"phase_order", phase_order}, {"residual", residual}};
}

CycMatrix recovered_exact(const ConjugationPlan &plan, const CliffordWord &u) {
    if (u.n != plan.n || u.d != plan.d) {
        throw std::invalid_argument("recovered_exact: word shape does not match the plan");
    }
    size_t k = plan.input_dim();
    std::vector<SparseState> cols;
    for (uint64_t x = 0; x < k; x++) {
        cols.push_back(plan.encoder_column(vec_decode(x, plan.d, plan.n)));
    }
    CycMatrix out(plan.d, k, k);
    for (size_t y = 0; y < k; y++) {
        ExactState psi = apply_tensor_power(u, plan.t, 0, cols[y].to_dense());
        for (size_t x = 0; x < k; x++) {
            out.at(x, y) = sparse_dense_overlap(cols[x], psi);
        }
    }
    return out;
}

ComplexMatrix recovered_float(const ConjugationPlan &plan, const CliffordWord &u) {
    if (u.n != plan.n || u.d != plan.d) {
        throw std::invalid_argument("recovered_float: word shape does not match the plan");
    }
    size_t k = plan.input_dim();
    std::vector<SparseState> cols;
    for (uint64_t x = 0; x < k; x++) {
        cols.push_back(plan.encoder_column(vec_decode(x, plan.d, plan.n)));
    }
    ComplexMatrix out(k, std::vector<std::complex<double>>(k));
    for (size_t y = 0; y < k; y++) {
        FloatState psi = apply_tensor_power(u, plan.t, 0, to_float(cols[y]));
        for (size_t x = 0; x < k; x++) {
            out[x][y] = sparse_dense_overlap(cols[x], psi);
        }
    }
    return out;
}

ConjugationResult verify_conjugation(const ConjugationPlan &plan, const CliffordWord &u, Backend backend, double tolerance) {
    ConjugationResult res;
    res.word = u.str();
    res.phase_order = cyclotomic_level(plan.d);
    CycMatrix target = word_matrix(u).conj();
    if (backend == Backend::exact) {
        CycMatrix e = recovered_exact(plan, u);
        auto j = exact_phase(e, target, res.phase_order);
        res.ok = j.has_value();
        if (j) {
            res.phase = *j;
        } else {
            res.residual = phase_distance(to_complex(e), to_complex(target), res.phase_order).first;
        }
        return res;
    }
    auto [dist, j] = phase_distance(recovered_float(plan, u), to_complex(target), res.phase_order);
    res.residual = dist;
    res.phase = j;
    res.ok = dist < tolerance;
    return res;
}

bool composition_coherent(const ConjugationPlan &plan, const CliffordWord &u, const CliffordWord &v, Backend backend, double tolerance) {
    // u.then(v) is the operator V U.
    CliffordWord uv = u.then(v);
    int64_t order = cyclotomic_level(plan.d);
    if (backend == Backend::exact) {
        return exact_phase(recovered_exact(plan, uv), recovered_exact(plan, v) * recovered_exact(plan, u), order).has_value();
    }
    return phase_distance(recovered_float(plan, uv), multiply(recovered_float(plan, v), recovered_float(plan, u)), order).first < tolerance;
}

}  // namespace cliffdual
