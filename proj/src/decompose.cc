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

#include "cliffdual/decompose.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "cliffdual/modint.h"

namespace cliffdual {

namespace {

size_t log_dim(size_t dim, int d) {
    size_t t = 0;
    uint64_t x = 1;
    while (x < dim) {
        x *= static_cast<uint64_t>(d);
        t++;
    }
    if (x != dim) {
        throw std::invalid_argument("operator dimension is not a power of d");
    }
    return t;
}

CycScalar hs_inner(const ExactOp &a, const ExactOp &b) {
    const auto &ops = a.ops();
    CycInt acc = ops.zero();
    for (size_t x = 0; x < a.dim(); x++) {
        for (size_t y = 0; y < a.dim(); y++) {
            if (!a.raw(x, y).is_zero() && !b.raw(x, y).is_zero()) {
                acc += ops.mul(ops.conj(a.raw(x, y)), b.raw(x, y));
            }
        }
    }
    return ops.to_cyc(acc, a.sqrt_d_exp() + b.sqrt_d_exp());
}

CycScalar power(const CycScalar &v, size_t n) {
    CycScalar out = CycScalar::one(v.field());
    for (size_t i = 0; i < n; i++) {
        out *= v;
    }
    return out;
}

std::vector<std::vector<std::complex<double>>> complex_matrix(const ExactOp &a) {
    std::vector<std::vector<std::complex<double>>> out(a.dim(), std::vector<std::complex<double>>(a.dim()));
    for (size_t i = 0; i < a.dim(); i++) {
        for (size_t j = 0; j < a.dim(); j++) {
            if (!a.raw(i, j).is_zero()) {
                out[i][j] = a.ops().to_complex(a.raw(i, j), a.sqrt_d_exp());
            }
        }
    }
    return out;
}

void axpy(FloatState &y, std::complex<double> a, const FloatState &x) {
    auto &yv = y.amplitudes();
    const auto &xv = x.amplitudes();
    for (size_t i = 0; i < yv.size(); i++) {
        yv[i] += a * xv[i];
    }
}

double max_abs(const FloatState &x) {
    double m = 0;
    for (const auto &v : x.amplitudes()) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

double norm2(const FloatState &x) {
    double m = 0;
    for (const auto &v : x.amplitudes()) {
        m += std::norm(v);
    }
    return std::sqrt(m);
}

FloatState random_float_state(size_t n, size_t t, int d, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    FloatState psi(n, t, d);
    for (auto &a : psi.amplitudes()) {
        a = {g(rng), g(rng)};
    }
    double nm = norm2(psi);
    for (auto &a : psi.amplitudes()) {
        a /= nm;
    }
    return psi;
}

uint64_t fixed_count(const GFMatrix &o) {
    GFMatrix m = o;
    for (size_t i = 0; i < m.rows(); i++) {
        m.set(i, i, m.get(i, i) - 1);
    }
    return int_pow(static_cast<uint64_t>(o.d()), o.rows() - rank(m));
}

Rational rational_power(uint64_t base, size_t n) {
    Rational out(1);
    for (size_t i = 0; i < n; i++) {
        out *= Rational(static_cast<int64_t>(base));
    }
    return out;
}

std::vector<CliffordWord> generator_words(size_t n, int d) {
    std::vector<CliffordWord> out;
    for (size_t i = 0; i < n; i++) {
        out.push_back(CliffordWord(n, d).push(Gate::H(i)));
        out.push_back(CliffordWord(n, d).push(Gate::P(i)));
        for (size_t j = 0; j < n; j++) {
            if (i != j) {
                out.push_back(CliffordWord(n, d).push(Gate::CADD(i, j)));
            }
        }
    }
    return out;
}

std::vector<IsoSubspace> t5_codes() {
    std::vector<IsoSubspace> out;
    for (const auto &n : all_stochastic_isotropic(5, 0, 2)) {
        if (n.m == 1) {
            out.push_back(n);
        }
    }
    return out;
}

/// Union-find over state ids.
struct Components {
    std::vector<size_t> parent;

    explicit Components(size_t k) : parent(k) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    size_t find(size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void join(size_t a, size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent[std::max(a, b)] = std::min(a, b);
        }
    }
};

/// Coset states of the five t = 5 codes and their integer Gram matrix 2^n <a|b>.
struct CosetSystem {
    size_t n = 0;
    std::vector<IsoSubspace> codes;
    std::vector<std::vector<GFMatrix>> labels;
    /// state id -> (code, label index)
    std::vector<std::pair<size_t, size_t>> ids;
    std::vector<std::vector<uint64_t>> support;
    /// Nonzero integer Gram entries per row, sorted by column.
    std::vector<std::vector<std::pair<size_t, int64_t>>> gram;
    std::vector<std::vector<size_t>> components;

    explicit CosetSystem(size_t n_) : n(n_), codes(t5_codes()) {
        for (size_t c = 0; c < codes.size(); c++) {
            labels.push_back(all_coset_labels(codes[c], n));
            for (size_t l = 0; l < labels.back().size(); l++) {
                ids.emplace_back(c, l);
                SparseState st = coset_state_sparse(codes[c], labels.back()[l], n);
                std::vector<uint64_t> sup;
                for (const auto &e : st.entries) {
                    sup.push_back(e.first);
                }
                support.push_back(std::move(sup));
            }
        }
        std::unordered_map<uint64_t, std::vector<size_t>> owners;
        owners.reserve(ids.size() * (size_t{1} << n));
        for (size_t a = 0; a < ids.size(); a++) {
            for (uint64_t idx : support[a]) {
                owners[idx].push_back(a);
            }
        }
        std::vector<std::map<size_t, int64_t>> acc(ids.size());
        for (const auto &[idx, list] : owners) {
            for (size_t a : list) {
                for (size_t b : list) {
                    acc[a][b] += 1;
                }
            }
        }
        Components uf(ids.size());
        gram.resize(ids.size());
        for (size_t a = 0; a < ids.size(); a++) {
            for (const auto &[b, v] : acc[a]) {
                gram[a].emplace_back(b, v);
                uf.join(a, b);
            }
        }
        std::map<size_t, std::vector<size_t>> comp;
        for (size_t a = 0; a < ids.size(); a++) {
            comp[uf.find(a)].push_back(a);
        }
        for (auto &[root, members] : comp) {
            components.push_back(std::move(members));
        }
    }

    double scale() const {
        return std::ldexp(1.0, -static_cast<int>(n));
    }

    Eigen::MatrixXd component_gram(const std::vector<size_t> &members) const {
        std::unordered_map<size_t, size_t> pos;
        for (size_t i = 0; i < members.size(); i++) {
            pos[members[i]] = i;
        }
        Eigen::MatrixXd g = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(members.size()), static_cast<Eigen::Index>(members.size()));
        for (size_t i = 0; i < members.size(); i++) {
            for (const auto &[b, v] : gram[members[i]]) {
                g(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(pos.at(b))) = static_cast<double>(v) * scale();
            }
        }
        return g;
    }
};

size_t rank_mod_p(std::vector<std::vector<uint64_t>> m, uint64_t p) {
    size_t rows = m.size();
    size_t cols = rows == 0 ? 0 : m[0].size();
    size_t rk = 0;
    for (size_t c = 0; c < cols && rk < rows; c++) {
        size_t piv = rows;
        for (size_t r = rk; r < rows; r++) {
            if (m[r][c] != 0) {
                piv = r;
                break;
            }
        }
        if (piv == rows) {
            continue;
        }
        std::swap(m[piv], m[rk]);
        uint64_t inv = inv_mod(m[rk][c], p);
        for (size_t r = rk + 1; r < rows; r++) {
            if (m[r][c] == 0) {
                continue;
            }
            uint64_t f = mul_mod(m[r][c], inv, p);
            for (size_t j = c; j < cols; j++) {
                if (m[rk][j] != 0) {
                    m[r][j] = (m[r][j] + p - mul_mod(f, m[rk][j], p)) % p;
                }
            }
        }
        rk++;
    }
    return rk;
}

}  // namespace

// ---------------------------------------------------------------------------------------------
// TensorSum

TensorSum::TensorSum(int d, size_t t) : d_(d), t_(t) {
}

TensorSum TensorSum::identity(int d, size_t t) {
    return single(ExactOp::identity(d, int_pow(static_cast<uint64_t>(d), t)));
}

TensorSum TensorSum::single(const ExactOp &op, const Rational &coeff) {
    TensorSum out(op.d(), log_dim(op.dim(), op.d()));
    out.add(op, coeff);
    return out;
}

void TensorSum::add(const ExactOp &op, const Rational &coeff) {
    if (op.d() != d_ || op.dim() != int_pow(static_cast<uint64_t>(d_), t_)) {
        throw std::invalid_argument("TensorSum: operator shape mismatch");
    }
    terms_.push_back({coeff, op});
}

TensorSum TensorSum::scaled(const Rational &c) const {
    TensorSum out = *this;
    for (auto &term : out.terms_) {
        term.coeff *= c;
    }
    out.simplify();
    return out;
}

void TensorSum::simplify() {
    std::vector<Term> merged;
    std::unordered_map<std::string, size_t> index;
    for (auto &term : terms_) {
        if (term.coeff.is_zero() || term.op.is_zero()) {
            continue;
        }
        std::string key = term.op.key();
        auto it = index.find(key);
        if (it == index.end()) {
            index.emplace(key, merged.size());
            merged.push_back(std::move(term));
        } else {
            merged[it->second].coeff += term.coeff;
        }
    }
    terms_.clear();
    for (auto &term : merged) {
        if (!term.coeff.is_zero()) {
            terms_.push_back(std::move(term));
        }
    }
}

TensorSum operator+(const TensorSum &a, const TensorSum &b) {
    if (a.d_ != b.d_ || a.t_ != b.t_) {
        throw std::invalid_argument("TensorSum: shape mismatch");
    }
    TensorSum out = a;
    for (const auto &term : b.terms_) {
        out.terms_.push_back(term);
    }
    out.simplify();
    return out;
}

TensorSum operator-(const TensorSum &a, const TensorSum &b) {
    return a + b.scaled(Rational(-1));
}

TensorSum operator*(const TensorSum &a, const TensorSum &b) {
    if (a.d_ != b.d_ || a.t_ != b.t_) {
        throw std::invalid_argument("TensorSum: shape mismatch");
    }
    TensorSum out(a.d_, a.t_);
    for (const auto &x : a.terms_) {
        for (const auto &y : b.terms_) {
            out.terms_.push_back({x.coeff * y.coeff, x.op * y.op});
        }
    }
    out.simplify();
    return out;
}

CycScalar TensorSum::hs_norm_sq(size_t n) const {
    TensorSum s = *this;
    s.simplify();
    const CycField &field = CycField::for_qudit(d_);
    CycScalar acc = CycScalar::zero(field);
    for (size_t k = 0; k < s.terms_.size(); k++) {
        for (size_t l = 0; l < s.terms_.size(); l++) {
            CycScalar v = power(hs_inner(s.terms_[k].op, s.terms_[l].op), n);
            v.scale(s.terms_[k].coeff * s.terms_[l].coeff);
            acc += v;
        }
    }
    return acc;
}

bool TensorSum::is_zero(size_t n) const {
    return hs_norm_sq(n).is_zero();
}

bool TensorSum::terms_commute_with_generators(size_t r, size_t s, size_t n, std::string *failed) const {
    for (const auto &term : terms_) {
        if (!commutes_with_generators(term.op, r, s, n, failed)) {
            return false;
        }
    }
    return true;
}

FloatState TensorSum::apply(const FloatState &psi) const {
    FloatState out(psi.n(), psi.t(), psi.d());
    for (const auto &term : terms_) {
        FloatState part = apply_columnwise(complex_matrix(term.op), psi);
        axpy(out, term.coeff.to_double(), part);
    }
    return out;
}

TensorSum group_average(const FiniteMatrixGroup &g) {
    TensorSum out(g.d(), g.t());
    Rational w(1, static_cast<int64_t>(g.size()));
    for (size_t i = 0; i < g.size(); i++) {
        out.add(column_R(g[i]), w);
    }
    return out;
}

// ---------------------------------------------------------------------------------------------
// Layers

TensorSum LayerOperators::c_prime(size_t m) const {
    TensorSum out(d, r + s);
    if (m < gr.size()) {
        for (const auto &code : gr[m]) {
            out.add(projector_P(code), Rational(1));
        }
    }
    return out;
}

TensorSum LayerOperators::d_layer(size_t m) const {
    TensorSum out(d, r + s);
    if (m < gr0.size()) {
        for (const auto &code : gr0[m]) {
            out.add(projector_P(code), Rational(1));
        }
    }
    return out;
}

TensorSum LayerOperators::p_ones() const {
    TensorSum out(d, r + s);
    if (ones_isotropic) {
        out.add(projector_P(gr0[1][0]), Rational(1));
    }
    return out;
}

TensorSum LayerOperators::c(size_t m) const {
    TensorSum cp = c_prime(m);
    return cp - p_ones() * cp;
}

LayerOperators build_layers(size_t r, size_t s, int d, size_t n, const CacheDir &cache) {
    LayerOperators out;
    out.r = r;
    out.s = s;
    out.d = d;
    out.n = n;
    auto codes = all_stochastic_isotropic(r, s, d, cache);
    size_t top = codes.back().m;
    out.gr.assign(top + 1, std::vector<IsoSubspace>());
    out.gr0.assign(top + 1, std::vector<IsoSubspace>());
    for (const auto &code : codes) {
        (code.contains_ones ? out.gr0 : out.gr)[code.m].push_back(code);
    }
    out.ones_isotropic = top >= 1 && !out.gr0[1].empty();
    return out;
}

std::vector<LayerCheck> layer_commutation_suite(const LayerOperators &layers) {
    std::vector<LayerCheck> out;
    size_t t = layers.r + layers.s;
    size_t nn = std::max<size_t>(layers.n, 2);

    LayerCheck gens{"codes commute with generators", true, ""};
    for (size_t m = 0; m <= layers.top(); m++) {
        for (const auto *stratum : {&layers.gr[m], &layers.gr0[m]}) {
            for (const auto &code : *stratum) {
                std::string failed;
                if (!commutes_with_generators(projector_P(code), layers.r, layers.s, nn, &failed)) {
                    gens.ok = false;
                    gens.detail = code.n.key() + " fails " + failed;
                }
            }
        }
    }
    out.push_back(gens);

    if (!layers.ones_isotropic) {
        LayerCheck none{"D_m vanish", true, "1_t is anisotropic"};
        for (const auto &stratum : layers.gr0) {
            none.ok = none.ok && stratum.empty();
        }
        out.push_back(none);
    } else {
        TensorSum p1 = layers.p_ones();
        for (size_t m = 0; m <= layers.top(); m++) {
            TensorSum cp = layers.c_prime(m);
            LayerCheck comm{"[C'_" + std::to_string(m) + ", P(1_t)] = 0", (cp * p1 - p1 * cp).is_zero(layers.n), ""};
            out.push_back(comm);
            Rational mult = rational_power(static_cast<uint64_t>(layers.d), m);
            TensorSum lhs = p1 * cp;
            TensorSum rhs = layers.d_layer(m + 1).scaled(mult);
            LayerCheck law{"P(1_t) C'_" + std::to_string(m) + " = d^" + std::to_string(m) + " D_" + std::to_string(m + 1),
                           (lhs - rhs).is_zero(layers.n), ""};
            if (m >= 1 && !layers.d_layer(m + 1).terms().empty()) {
                law.detail = "P(1_t) C'_m = D_{m+1} without the multiplicity: " +
                             std::string((lhs - layers.d_layer(m + 1)).is_zero(layers.n) ? "holds" : "fails");
            }
            out.push_back(law);
            TensorSum dm = layers.d_layer(m);
            out.push_back({"P(1_t) D_" + std::to_string(m) + " = D_" + std::to_string(m), (p1 * dm - dm).is_zero(layers.n), ""});
        }
    }

    if (within_group_guard(t, layers.d)) {
        FiniteMatrixGroup o1 = enumerate_O1(layers.r, layers.s, layers.d);
        LayerCheck perm{"O_1(T) permutes each stratum", true, ""};
        for (size_t m = 0; m <= layers.top(); m++) {
            for (const auto *stratum : {&layers.gr[m], &layers.gr0[m]}) {
                std::set<std::string> keys;
                for (const auto &code : *stratum) {
                    keys.insert(code.n.key());
                }
                for (size_t gi : o1.generators()) {
                    for (const auto &code : *stratum) {
                        if (!keys.count(conjugate_code(o1[gi], code).n.key())) {
                            perm.ok = false;
                            perm.detail = "stratum m=" + std::to_string(m) + " not preserved";
                        }
                    }
                }
            }
        }
        out.push_back(perm);
    }
    return out;
}

// ---------------------------------------------------------------------------------------------
// t = 5

double approx_projector_epsilon(size_t n) {
    double a = std::pow(4.0, -static_cast<double>(n));
    double b = std::pow(2.0, -static_cast<double>(n));
    return 5 * (a + b) + 20 * a;
}

nlohmann::json CosetSpan::to_json() const {
    return {{"n", n},
            {"states", states},
            {"rank", rank},
            {"rank_certified", rank_certified},
            {"components", components},
            {"largest_component", largest_component},
            {"q_min", q_min},
            {"q_max", q_max},
            {"epsilon", epsilon},
            {"gram_condition", gram_condition},
            {"within_epsilon", within_epsilon}};
}

CosetSpan t5_coset_span(size_t n) {
    if (n < 1 || n > 5) {
        throw std::length_error("t5_coset_span: n must be in [1, 5]");
    }
    CosetSystem sys(n);
    CosetSpan out;
    out.n = n;
    out.states = sys.ids.size();
    out.components = sys.components.size();
    out.epsilon = approx_projector_epsilon(n);
    out.q_min = INFINITY;
    out.q_max = 0;
    uint64_t p = prime_one_mod(2, uint64_t{1} << 20);
    out.rank_certified = true;
    for (const auto &members : sys.components) {
        out.largest_component = std::max(out.largest_component, members.size());
        std::unordered_map<size_t, size_t> pos;
        for (size_t i = 0; i < members.size(); i++) {
            pos[members[i]] = i;
        }
        std::vector<std::vector<uint64_t>> mp(members.size(), std::vector<uint64_t>(members.size(), 0));
        for (size_t i = 0; i < members.size(); i++) {
            for (const auto &[b, v] : sys.gram[members[i]]) {
                mp[i][pos.at(b)] = static_cast<uint64_t>(v) % p;
            }
        }
        size_t rk = rank_mod_p(mp, p);
        if (rk < members.size()) {
            std::vector<std::vector<Rational>> mq(members.size(), std::vector<Rational>(members.size()));
            for (size_t i = 0; i < members.size(); i++) {
                for (const auto &[b, v] : sys.gram[members[i]]) {
                    mq[i][pos.at(b)] = Rational(v);
                }
            }
            rk = rational_rank(mq);
        }
        out.rank += rk;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sys.component_gram(members), Eigen::EigenvaluesOnly);
        for (Eigen::Index i = 0; i < es.eigenvalues().size(); i++) {
            double ev = es.eigenvalues()(i);
            if (ev > 1e-9) {
                out.q_min = std::min(out.q_min, ev);
                out.q_max = std::max(out.q_max, ev);
            }
        }
    }
    out.gram_condition = out.q_max / out.q_min;
    out.within_epsilon = out.q_min >= 1 - out.epsilon - 1e-9 && out.q_max <= 1 + out.epsilon + 1e-9;
    return out;
}

T5OverlapCheck t5_overlap_law(size_t n) {
    CosetSystem sys(n);
    T5OverlapCheck out;
    std::vector<size_t> offset(sys.codes.size() + 1, 0);
    for (size_t c = 0; c < sys.codes.size(); c++) {
        offset[c + 1] = offset[c] + sys.labels[c].size();
    }
    int64_t diag = int64_t{1} << n;
    for (size_t a = 0; a < sys.ids.size(); a++) {
        auto [ci, li] = sys.ids[a];
        std::map<size_t, int64_t> direct(sys.gram[a].begin(), sys.gram[a].end());
        for (size_t cj = 0; cj < sys.codes.size(); cj++) {
            size_t expected_label;
            int64_t expected_value;
            if (ci == cj) {
                expected_label = li;
                expected_value = diag;
            } else {
                CycScalar v;
                GFMatrix target;
                Vec ei = sys.codes[ci].n.basis().row(0);
                Vec ej = sys.codes[cj].n.basis().row(0);
                GFMatrix e = GFMatrix::identity(2, 5);
                for (size_t x = 0; x < 5; x++) {
                    for (size_t y = 0; y < 5; y++) {
                        e.set(x, y, e.get(x, y) + ei[x] * ej[y]);
                    }
                }
                GFMatrix g = e * lift_coset(sys.codes[ci], sys.labels[ci][li]);
                GFMatrix lab(2, sys.codes[cj].quotient.quotient_dim(), n);
                for (size_t col = 0; col < n; col++) {
                    Vec pc = sys.codes[cj].quotient.project(g.col(col));
                    for (size_t x = 0; x < pc.size(); x++) {
                        lab.set(x, col, pc[x]);
                    }
                }
                expected_label = std::find(sys.labels[cj].begin(), sys.labels[cj].end(), lab) - sys.labels[cj].begin();
                expected_value = 1;
            }
            for (size_t lj = 0; lj < sys.labels[cj].size(); lj++) {
                size_t b = offset[cj] + lj;
                auto it = direct.find(b);
                int64_t got = it == direct.end() ? 0 : it->second;
                int64_t want = lj == expected_label ? expected_value : 0;
                out.pairs++;
                if (got != want) {
                    out.mismatches++;
                }
            }
        }
    }
    return out;
}

struct T5Projectors::Impl {
    size_t n = 0;
    CosetSystem sys;
    FiniteMatrixGroup s5;
    CharacterTable s5_table;
    FiniteMatrixGroup gn;
    CharacterTable gn_table;
    /// For each code, the conjugated G_N elements (same order as gn).
    std::vector<std::vector<GFMatrix>> gn_on_code;
    /// label permutation per code per G_N element.
    std::vector<std::vector<std::vector<size_t>>> label_perm;
    std::vector<Eigen::LLT<Eigen::MatrixXd>> solvers;
    std::vector<size_t> state_offset;

    explicit Impl(size_t n_) : n(n_), sys(n_) {
        s5 = enumerate_O1(5, 0, 2);
        s5_table = character_table(s5);
        SubgroupGN g = subgroup_G_N(sys.codes[0]);
        gn = g.group;
        gn_table = character_table(gn);
        for (size_t c = 0; c < sys.codes.size(); c++) {
            GFMatrix oc;
            bool found = false;
            for (size_t i = 0; i < s5.size() && !found; i++) {
                if (conjugate_code(s5[i], sys.codes[0]) == sys.codes[c]) {
                    oc = s5[i];
                    found = true;
                }
            }
            if (!found) {
                throw std::logic_error("t5: codes are not in one orbit");
            }
            GFMatrix oc_inv = *inverse(oc);
            std::vector<GFMatrix> conj;
            std::vector<std::vector<size_t>> perms;
            std::map<GFMatrix, size_t> label_index;
            for (size_t l = 0; l < sys.labels[c].size(); l++) {
                label_index[sys.labels[c][l]] = l;
            }
            for (size_t k = 0; k < gn.size(); k++) {
                GFMatrix h = oc * gn[k] * oc_inv;
                conj.push_back(h);
                std::vector<size_t> perm(sys.labels[c].size());
                for (size_t l = 0; l < sys.labels[c].size(); l++) {
                    GFMatrix f = h * lift_coset(sys.codes[c], sys.labels[c][l]);
                    GFMatrix lab(2, sys.codes[c].quotient.quotient_dim(), n);
                    for (size_t col = 0; col < n; col++) {
                        Vec pc = sys.codes[c].quotient.project(f.col(col));
                        for (size_t x = 0; x < pc.size(); x++) {
                            lab.set(x, col, pc[x]);
                        }
                    }
                    perm[l] = label_index.at(lab);
                }
                perms.push_back(std::move(perm));
            }
            gn_on_code.push_back(std::move(conj));
            label_perm.push_back(std::move(perms));
        }
        for (const auto &members : sys.components) {
            solvers.emplace_back(sys.component_gram(members));
        }
    }

    /// c = G^{-1} V^dagger psi
    std::vector<std::complex<double>> coefficients(const FloatState &psi) const {
        double amp = std::pow(2.0, -static_cast<double>(n) / 2);
        std::vector<std::complex<double>> b(sys.ids.size());
        for (size_t a = 0; a < sys.ids.size(); a++) {
            std::complex<double> acc = 0;
            for (uint64_t idx : sys.support[a]) {
                acc += psi.amplitudes()[idx];
            }
            b[a] = acc * amp;
        }
        std::vector<std::complex<double>> c(sys.ids.size());
        for (size_t k = 0; k < sys.components.size(); k++) {
            const auto &members = sys.components[k];
            Eigen::VectorXcd rhs(static_cast<Eigen::Index>(members.size()));
            for (size_t i = 0; i < members.size(); i++) {
                rhs(static_cast<Eigen::Index>(i)) = b[members[i]];
            }
            Eigen::VectorXd re = solvers[k].solve(rhs.real());
            Eigen::VectorXd im = solvers[k].solve(rhs.imag());
            for (size_t i = 0; i < members.size(); i++) {
                c[members[i]] = {re(static_cast<Eigen::Index>(i)), im(static_cast<Eigen::Index>(i))};
            }
        }
        return c;
    }

    FloatState synthesize(const std::vector<std::complex<double>> &c) const {
        FloatState out(n, 5, 2);
        double amp = std::pow(2.0, -static_cast<double>(n) / 2);
        for (size_t a = 0; a < sys.ids.size(); a++) {
            if (c[a] == std::complex<double>(0)) {
                continue;
            }
            for (uint64_t idx : sys.support[a]) {
                out.amplitudes()[idx] += c[a] * amp;
            }
        }
        return out;
    }

    FloatState span(const FloatState &psi) const {
        return synthesize(coefficients(psi));
    }

    FloatState s5_isotypic(size_t chi, const FloatState &psi) const {
        FloatState out(n, 5, 2);
        double w = static_cast<double>(s5_table.degree(chi)) / static_cast<double>(s5.size());
        for (size_t i = 0; i < s5.size(); i++) {
            std::complex<double> x = std::conj(s5_table.value(chi, i).to_complex()) * w;
            if (std::abs(x) < 1e-15) {
                continue;
            }
            axpy(out, x, apply_column_map(s5[i], psi));
        }
        return out;
    }

    FloatState code_isotypic(size_t tau, const FloatState &psi) const {
        std::vector<std::complex<double>> c = coefficients(psi);
        std::vector<std::complex<double>> out(c.size());
        double w = static_cast<double>(gn_table.degree(tau)) / static_cast<double>(gn.size());
        size_t offset = 0;
        for (size_t code = 0; code < sys.codes.size(); code++) {
            for (size_t k = 0; k < gn.size(); k++) {
                std::complex<double> x = std::conj(gn_table.value(tau, k).to_complex()) * w;
                for (size_t l = 0; l < sys.labels[code].size(); l++) {
                    out[offset + label_perm[code][k][l]] += x * c[offset + l];
                }
            }
            offset += sys.labels[code].size();
        }
        return synthesize(out);
    }
};

T5Projectors::T5Projectors(size_t n) {
    if (n != 3) {
        throw std::length_error("T5Projectors: the coset states are independent and small enough only at n = 3");
    }
    impl_ = std::make_shared<Impl>(n);
    for (size_t chi = 0; chi < impl_->s5_table.values.size(); chi++) {
        T5Component comp;
        comp.side = "complement";
        comp.degree = impl_->s5_table.degree(chi);
        if (chi < impl_->s5_table.partitions.size()) {
            comp.partition = impl_->s5_table.partitions[chi];
        }
        components_.push_back(comp);
    }
    for (size_t tau = 0; tau < impl_->gn_table.values.size(); tau++) {
        T5Component comp;
        comp.side = "code";
        comp.degree = impl_->gn_table.degree(tau);
        if (tau < impl_->gn_table.partitions.size()) {
            comp.partition = impl_->gn_table.partitions[tau];
        }
        components_.push_back(comp);
    }
}

size_t T5Projectors::count() const {
    return components_.size();
}

FloatState T5Projectors::apply(size_t i, const FloatState &psi) const {
    size_t ns5 = impl_->s5_table.values.size();
    if (i < ns5) {
        FloatState x = impl_->s5_isotypic(i, psi);
        FloatState y = impl_->span(x);
        axpy(x, -1.0, y);
        return x;
    }
    return impl_->code_isotypic(i - ns5, psi);
}

FloatState T5Projectors::apply_span(const FloatState &psi) const {
    return impl_->span(psi);
}

nlohmann::json T5Report::to_json() const {
    nlohmann::json comps = nlohmann::json::array();
    for (const auto &c : components) {
        comps.push_back({{"side", c.side}, {"partition", c.partition}, {"degree", c.degree}, {"dimension", c.dimension}});
    }
    nlohmann::json codes_json = nlohmann::json::array();
    for (const auto &c : codes) {
        codes_json.push_back(c.n.key());
    }
    return {{"n", n},
            {"codes", codes_json},
            {"components", comps},
            {"total_dimension", total_dimension},
            {"dimensions_complete", dimensions_complete},
            {"span", span.to_json()},
            {"exact_commutation", exact_commutation},
            {"character_idempotent", character_idempotent},
            {"float_checked", float_checked},
            {"idempotent_error", idempotent_error},
            {"orthogonality_error", orthogonality_error},
            {"completeness_error", completeness_error},
            {"commutation_error", commutation_error}};
}

T5Report t5_pipeline(size_t n, const T5Options &options) {
    if (n < 1 || n > 5) {
        throw std::length_error("t5_pipeline: n must be in [1, 5]");
    }
    T5Report rep;
    rep.n = n;
    rep.codes = t5_codes();
    FiniteMatrixGroup s5 = enumerate_O1(5, 0, 2);
    CharacterTable s5_table = character_table(s5);
    SubgroupGN gsub = subgroup_G_N(rep.codes[0]);
    CharacterTable gn_table = character_table(gsub.group);

    for (size_t chi = 0; chi < s5_table.values.size(); chi++) {
        Rational acc;
        for (size_t i = 0; i < s5.size(); i++) {
            Rational on_v;
            for (const auto &code : rep.codes) {
                if (conjugate_code(s5[i], code) == code) {
                    on_v += rational_power(fixed_count(induced_matrix(s5[i], code.quotient)), n);
                }
            }
            Rational tr = rational_power(fixed_count(s5[i]), n) - on_v;
            acc += rational_value(s5_table.value(chi, i).conj()) * tr;
        }
        acc *= Rational(s5_table.degree(chi), static_cast<int64_t>(s5.size()));
        T5Component comp;
        comp.side = "complement";
        comp.degree = s5_table.degree(chi);
        if (chi < s5_table.partitions.size()) {
            comp.partition = s5_table.partitions[chi];
        }
        comp.dimension = static_cast<uint64_t>(acc.to_double() + 0.5);
        rep.components.push_back(comp);
    }
    for (size_t tau = 0; tau < gn_table.values.size(); tau++) {
        Rational acc;
        for (size_t k = 0; k < gsub.group.size(); k++) {
            acc += rational_value(gn_table.value(tau, k).conj()) *
                   rational_power(fixed_count(induced_matrix(gsub.group[k], rep.codes[0].quotient)), n);
        }
        acc *= Rational(5 * gn_table.degree(tau), static_cast<int64_t>(gsub.group.size()));
        T5Component comp;
        comp.side = "code";
        comp.degree = gn_table.degree(tau);
        if (tau < gn_table.partitions.size()) {
            comp.partition = gn_table.partitions[tau];
        }
        comp.dimension = static_cast<uint64_t>(acc.to_double() + 0.5);
        rep.components.push_back(comp);
    }
    for (const auto &c : rep.components) {
        rep.total_dimension += c.dimension;
    }

    if (n <= 4) {
        rep.span = t5_coset_span(n);
        rep.dimensions_complete = rep.total_dimension == int_pow(2, 5 * n) && rep.span.rank == rep.span.states;
    } else {
        rep.dimensions_complete = rep.total_dimension == int_pow(2, 5 * n);
    }

    bool idem = true;
    for (size_t chi = 0; chi < s5_table.values.size(); chi++) {
        std::vector<CycScalar> coeff(s5.size());
        for (size_t i = 0; i < s5.size(); i++) {
            coeff[i] = s5_table.value(chi, i).conj();
        }
        std::vector<CycScalar> sq(s5.size(), CycScalar::zero(coeff[0].field()));
        for (size_t x = 0; x < s5.size(); x++) {
            for (size_t y = 0; y < s5.size(); y++) {
                sq[s5.mul(x, y)] += coeff[x] * coeff[y];
            }
        }
        Rational ratio(static_cast<int64_t>(s5.size()), s5_table.degree(chi));
        for (size_t i = 0; i < s5.size(); i++) {
            CycScalar want = coeff[i];
            want.scale(ratio);
            idem = idem && sq[i] == want;
        }
    }
    rep.character_idempotent = idem;

    bool commute = true;
    for (size_t i = 0; i < s5.size() && commute; i++) {
        commute = commutes_with_generators(column_R(s5[i]), 5, 0, 2);
    }
    for (const auto &code : rep.codes) {
        ExactOp p = projector_P(code);
        for (size_t k = 0; k < s5.size() && commute; k++) {
            if (conjugate_code(s5[k], code) == code) {
                commute = commutes_with_generators(column_R(s5[k]) * p, 5, 0, 2);
            }
        }
    }
    rep.exact_commutation = commute;

    if (options.float_checks && n == 3) {
        T5Projectors proj(n);
        std::mt19937_64 rng(options.seed);
        auto gens = generator_words(n, 2);
        for (size_t rep_i = 0; rep_i < options.random_vectors; rep_i++) {
            FloatState psi = random_float_state(n, 5, 2, rng);
            std::vector<FloatState> parts;
            FloatState total(n, 5, 2);
            for (size_t i = 0; i < proj.count(); i++) {
                parts.push_back(proj.apply(i, psi));
                axpy(total, 1.0, parts.back());
            }
            axpy(total, -1.0, psi);
            rep.completeness_error = std::max(rep.completeness_error, max_abs(total));
            for (size_t i = 0; i < proj.count(); i++) {
                for (size_t j = 0; j < proj.count(); j++) {
                    FloatState x = proj.apply(j, parts[i]);
                    if (i == j) {
                        axpy(x, -1.0, parts[i]);
                        rep.idempotent_error = std::max(rep.idempotent_error, max_abs(x));
                    } else {
                        rep.orthogonality_error = std::max(rep.orthogonality_error, max_abs(x));
                    }
                }
            }
            for (const auto &g : gens) {
                FloatState gpsi = apply_tensor_power(g, 5, 0, psi);
                for (size_t i = 0; i < proj.count(); i++) {
                    FloatState a = proj.apply(i, gpsi);
                    FloatState b = apply_tensor_power(g, 5, 0, parts[i]);
                    axpy(a, -1.0, b);
                    rep.commutation_error = std::max(rep.commutation_error, max_abs(a));
                }
            }
        }
        rep.float_checked = true;
    }
    return rep;
}

// ---------------------------------------------------------------------------------------------
// Stabilizer compression

nlohmann::json StabCompression::to_json() const {
    return {{"r", layers.r},
            {"s", layers.s},
            {"d", layers.d},
            {"n", layers.n},
            {"group_order", group_order},
            {"p_stab_idempotent", p_stab_idempotent},
            {"p_stab_self_adjoint", p_stab_self_adjoint},
            {"commutators_vanish", commutators_vanish},
            {"compression_abelian", compression_abelian},
            {"failures", failures}};
}

StabCompression stab_subspace_ops(size_t r, size_t s, int d, size_t n, const CacheDir &cache) {
    StabCompression out;
    out.layers = build_layers(r, s, d, n, cache);
    FiniteMatrixGroup o1 = enumerate_O1(r, s, d, cache);
    out.group_order = o1.size();
    out.p_stab = group_average(o1);
    const TensorSum &p = out.p_stab;
    out.p_stab_idempotent = (p * p - p).is_zero(n);
    TensorSum adj(d, r + s);
    for (const auto &term : p.terms()) {
        adj.add(term.op.adjoint(), term.coeff);
    }
    out.p_stab_self_adjoint = (adj - p).is_zero(n);

    std::vector<std::pair<std::string, TensorSum>> ops;
    std::vector<std::pair<std::string, TensorSum>> basis;
    for (size_t m = 0; m <= out.layers.top(); m++) {
        TensorSum cm = out.layers.c(m);
        if (!cm.terms().empty()) {
            ops.emplace_back("C_" + std::to_string(m), cm);
            basis.emplace_back("C_" + std::to_string(m), cm);
        }
        TensorSum dm = out.layers.d_layer(m);
        if (!dm.terms().empty()) {
            ops.emplace_back("D_" + std::to_string(m), dm);
        }
        TensorSum dm1 = out.layers.d_layer(m + 1);
        if (!dm1.terms().empty()) {
            basis.emplace_back("D_" + std::to_string(m + 1), dm1);
        }
    }
    out.commutators_vanish = true;
    for (size_t i = 0; i < ops.size(); i++) {
        for (size_t j = i; j < ops.size(); j++) {
            const auto &x = ops[i].second;
            const auto &y = ops[j].second;
            if (!((x * y - y * x) * p).is_zero(n)) {
                out.commutators_vanish = false;
                out.failures.push_back("[" + ops[i].first + ", " + ops[j].first + "] P_stab");
            }
        }
    }
    out.compression_abelian = true;
    for (size_t i = 0; i < basis.size(); i++) {
        TensorSum a = basis[i].second * p;
        for (size_t j = i + 1; j < basis.size(); j++) {
            TensorSum b = basis[j].second * p;
            if (!(a * b - b * a).is_zero(n)) {
                out.compression_abelian = false;
                out.failures.push_back("[" + basis[i].first + " P, " + basis[j].first + " P]");
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------------------------
// Exact dualities

bool exact_duality_predicate(int d, size_t r, size_t s) {
    if (d == 2 || !is_prime(d)) {
        throw std::invalid_argument("exact_duality_predicate: d must be an odd prime");
    }
    size_t t = r + s;
    if (t < 2) {
        throw std::invalid_argument("exact_duality_predicate: needs r + s >= 2");
    }
    if (t > 3 || r * s != 0) {
        return false;
    }
    return t == 2 || legendre(3, d) == -legendre(-1, d);
}

bool exact_duality_check(int d, size_t t) {
    return exact_duality_predicate(d, t, 0);
}

std::vector<ExactDualityRow> exact_duality_table(int d, size_t t) {
    std::vector<ExactDualityRow> out;
    for (size_t r = 0; r <= t; r++) {
        ExactDualityRow row;
        row.d = d;
        row.r = r;
        row.s = t - r;
        row.predicate = exact_duality_predicate(d, r, t - r);
        row.enumeration_empty = all_stochastic_isotropic(r, t - r, d).size() == 1;
        bool ell = legendre(3, d) == -legendre(-1, d);
        row.mod3_reduction = ell == (d % 3 == 2);
        row.agree = row.predicate == row.enumeration_empty;
        out.push_back(row);
    }
    return out;
}

// ---------------------------------------------------------------------------------------------
// Real Clifford action on C_{1_t}

namespace {

size_t weyl_tp(size_t t) {
    if (t < 4 || t % 2 != 0) {
        throw std::invalid_argument("weyl basis: t must be even and at least 4");
    }
    return t / 2 - 1;
}

uint64_t state_index(const GFMatrix &f) {
    uint64_t idx = 0;
    uint64_t place = 1;
    for (size_t i = 0; i < f.cols(); i++) {
        for (size_t c = 0; c < f.rows(); c++) {
            idx += static_cast<uint64_t>(f.get(c, i)) * place;
            place *= 2;
        }
    }
    return idx;
}

IsoSubspace ones_code(size_t r, size_t s, int d) {
    return IsoSubspace(Subspace::span(d, r + s, {ones(r + s)}), r, s);
}

GenQuadForm kappa_form(size_t n) {
    GFMatrix polar(2, 2 * n, 2 * n);
    for (size_t i = 0; i < n; i++) {
        polar.set(i, n + i, 1);
        polar.set(n + i, i, 1);
    }
    return GenQuadForm(std::vector<int64_t>(2 * n, 0), SymBilForm(polar));
}

}  // namespace

std::vector<WeylBasisState> weyl_basis(size_t n, size_t t) {
    size_t tp = weyl_tp(t);
    uint64_t total = int_pow(2, 2 * n * tp);
    std::vector<WeylBasisState> out;
    out.reserve(total);
    for (uint64_t c = 0; c < total; c++) {
        Vec v = vec_decode(c, 2, 2 * n * tp);
        GFMatrix a(2, tp, 2 * n);
        for (size_t k = 0; k < tp; k++) {
            for (size_t j = 0; j < 2 * n; j++) {
                a.set(k, j, v[k * 2 * n + j]);
            }
        }
        out.push_back({a});
    }
    return out;
}

SparseState weyl_basis_vector(const WeylBasisState &w, size_t n, size_t t) {
    size_t tp = weyl_tp(t);
    if (w.a.rows() != tp || w.a.cols() != 2 * n) {
        throw std::invalid_argument("weyl_basis_vector: A must be t' x 2n");
    }
    std::vector<Vec> rows;
    Vec sum(2 * n, 0);
    for (size_t k = 0; k < tp; k++) {
        rows.push_back(w.a.row(k));
        sum = vec_add(sum, rows.back(), 2);
    }
    rows.push_back(sum);
    size_t factors = tp + 1;
    SparseState out;
    out.n = n;
    out.t = t;
    out.d = 2;
    out.k = static_cast<int>(n * factors);
    ScalarOps<CycInt> ops(2);
    uint64_t total = int_pow(2, n * factors);
    for (uint64_t c = 0; c < total; c++) {
        Vec ys = vec_decode(c, 2, n * factors);
        GFMatrix f(2, t, n);
        int64_t sign = 0;
        for (size_t k = 0; k < factors; k++) {
            for (size_t i = 0; i < n; i++) {
                int64_t y = ys[k * n + i];
                int64_t x = (y + rows[k][n + i]) % 2;
                sign += rows[k][i] * x;
                f.set(2 * k, i, x);
                f.set(2 * k + 1, i, y);
            }
        }
        CycInt v = ops.one();
        if (sign % 2 != 0) {
            v = -v;
        }
        out.entries.emplace_back(state_index(f), v);
    }
    std::sort(out.entries.begin(), out.entries.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
    return out;
}

Vec weyl_transform_coset(const Vec &u, const Vec &v) {
    if (u.size() != v.size()) {
        throw std::invalid_argument("weyl_transform_coset: u and v must have length t'");
    }
    size_t tp = u.size();
    int64_t vl = 0;
    for (int64_t x : v) {
        vl += x;
    }
    Vec f(2 * tp + 2, 0);
    for (size_t k = 0; k < tp; k++) {
        f[2 * k] = u[k] % 2;
        f[2 * k + 1] = (u[k] + v[k]) % 2;
    }
    f[2 * tp + 1] = vl % 2;
    return f;
}

nlohmann::json RealCliffordSuite::to_json() const {
    return {{"n", n},
            {"t", t},
            {"basis_size", basis_size},
            {"expected_size", expected_size},
            {"orthonormal", orthonormal},
            {"stabilized", stabilized},
            {"in_code", in_code},
            {"actions_commute", actions_commute},
            {"symplectic_order", symplectic_order},
            {"weyl_transform", weyl_transform},
            {"weyl_transform_checked", weyl_transform_checked}};
}

RealCliffordSuite real_clifford_suite(size_t n, size_t t) {
    size_t tp = weyl_tp(t);
    if (t % 4 != 0) {
        throw std::invalid_argument("real_clifford_suite: 1_t is isotropic only for t = 0 mod 4");
    }
    if (n < 1 || n * t > 12) {
        throw std::length_error("real_clifford_suite: needs nt <= 12");
    }
    RealCliffordSuite out;
    out.n = n;
    out.t = t;
    auto basis = weyl_basis(n, t);
    out.basis_size = basis.size();
    out.expected_size = int_pow(2, n * (t - 2));
    std::vector<SparseState> states;
    for (const auto &w : basis) {
        states.push_back(weyl_basis_vector(w, n, t));
    }

    std::unordered_map<uint64_t, std::vector<std::pair<size_t, int64_t>>> owners;
    for (size_t a = 0; a < states.size(); a++) {
        for (const auto &[idx, v] : states[a].entries) {
            owners[idx].emplace_back(a, v.c[0]);
        }
    }
    std::vector<std::map<size_t, int64_t>> gram(states.size());
    for (const auto &[idx, list] : owners) {
        for (const auto &[a, va] : list) {
            for (const auto &[b, vb] : list) {
                gram[a][b] += va * vb;
            }
        }
    }
    int64_t norm = int64_t{1} << states[0].k;
    out.orthonormal = true;
    for (size_t a = 0; a < states.size(); a++) {
        for (const auto &[b, v] : gram[a]) {
            if (v != (a == b ? norm : 0)) {
                out.orthonormal = false;
            }
        }
        if (!gram[a].count(a)) {
            out.orthonormal = false;
        }
    }

    IsoSubspace ones = ones_code(t, 0, 2);
    ExactOp p1 = projector_P(ones);
    out.stabilized = true;
    out.in_code = true;
    for (const auto &st : states) {
        ExactState psi = st.to_dense();
        for (size_t j = 0; j < 2 * n; j++) {
            ExactState x = psi;
            x.apply_gate(Gate::Weyl(unit(2 * n, j)), t, 0);
            out.stabilized = out.stabilized && same_state(x, psi);
        }
        out.in_code = out.in_code && same_state(apply_columnwise(p1, psi), psi);
    }

    std::vector<Vec> tprime;
    for (size_t i = 0; i + 2 < t; i++) {
        Vec w(t, 0);
        w[i] = 1;
        w[i + 1] = 1;
        tprime.push_back(w);
    }
    Subspace tp_space = Subspace::span(2, t, tprime);
    std::vector<GFMatrix> transvections;
    for (const auto &w : tp_space.elements()) {
        if (vec_is_zero(w)) {
            continue;
        }
        GFMatrix s = GFMatrix::identity(2, t);
        for (size_t x = 0; x < t; x++) {
            for (size_t y = 0; y < t; y++) {
                s.set(x, y, s.get(x, y) + w[x] * w[y]);
            }
        }
        transvections.push_back(s);
    }
    uint64_t sp = int_pow(2, tp * tp);
    for (size_t i = 1; i <= tp; i++) {
        sp *= int_pow(4, i) - 1;
    }
    out.symplectic_order = sp;
    std::vector<Gate> gens;
    for (size_t i = 0; i < n; i++) {
        gens.push_back(Gate::H(i));
        gens.push_back(Gate::Weyl(unit(2 * n, n + i)));
        for (size_t j = 0; j < n; j++) {
            if (i != j) {
                gens.push_back(Gate::CADD(i, j));
            }
        }
    }
    out.actions_commute = true;
    for (const auto &fbar : all_coset_labels(ones, n)) {
        ExactState psi = coset_state(ones, fbar, n);
        for (const auto &g : gens) {
            ExactState gpsi = psi;
            gpsi.apply_gate(g, t, 0);
            for (const auto &s : transvections) {
                ExactState lhs = apply_column_map(s, gpsi);
                ExactState rhs = apply_column_map(s, psi);
                rhs.apply_gate(g, t, 0);
                out.actions_commute = out.actions_commute && same_state(lhs, rhs);
            }
        }
    }

    if (n == 1) {
        out.weyl_transform_checked = true;
        out.weyl_transform = true;
        ScalarOps<CycInt> ops(2);
        uint64_t total = int_pow(2, tp);
        for (uint64_t uc = 0; uc < total; uc++) {
            for (uint64_t vc = 0; vc < total; vc++) {
                Vec u = vec_decode(uc, 2, tp);
                Vec v = vec_decode(vc, 2, tp);
                ExactState lhs(1, t, 2);
                for (uint64_t wc = 0; wc < total; wc++) {
                    Vec w = vec_decode(wc, 2, tp);
                    GFMatrix a(2, tp, 2);
                    int64_t sign = 0;
                    for (size_t k = 0; k < tp; k++) {
                        a.set(k, 0, w[k]);
                        a.set(k, 1, v[k]);
                        sign += u[k] * w[k];
                    }
                    SparseState st = weyl_basis_vector({a}, 1, t);
                    for (const auto &[idx, val] : st.entries) {
                        if (sign % 2 == 0) {
                            lhs.amplitudes()[idx] += val;
                        } else {
                            lhs.amplitudes()[idx] -= val;
                        }
                    }
                }
                lhs.set_sqrt_d_exp(static_cast<int>(2 * tp + 1));
                lhs.normalize_scale();
                Vec f = weyl_transform_coset(u, v);
                Vec fb = ones.quotient.project(f);
                GFMatrix label(2, fb.size(), 1);
                for (size_t x = 0; x < fb.size(); x++) {
                    label.set(x, 0, fb[x]);
                }
                ExactState rhs = coset_state(ones, label, 1);
                out.weyl_transform = out.weyl_transform && ones.perp.contains(f) && same_state(lhs, rhs);
            }
        }
    }
    return out;
}

nlohmann::json OrbitCount::to_json() const {
    return {{"n", n},
            {"t_prime", tp},
            {"group_order", group_order},
            {"orbits", orbits},
            {"signatures", signatures},
            {"full_rank_orbits", full_rank_orbits},
            {"estimate", estimate}};
}

OrbitCount orbit_count(size_t n, size_t tp) {
    if (n < 1 || n > 2 || tp < 1 || 2 * n * tp > 16) {
        throw std::length_error("orbit_count: needs n <= 2 and |V|^t' <= 2^16");
    }
    OrbitCount out;
    out.n = n;
    out.tp = tp;
    out.estimate = int_pow(2, tp * tp);
    GenQuadForm kappa = kappa_form(n);
    FiniteMatrixGroup group = isometry_group(kappa, Vec(2 * n, 0));
    out.group_order = group.size();
    size_t vdim = 2 * n;
    uint64_t vsize = int_pow(2, vdim);
    uint64_t points = int_pow(vsize, tp);
    auto decode = [&](uint64_t code) {
        std::vector<Vec> vs;
        for (size_t k = 0; k < tp; k++) {
            vs.push_back(vec_decode(code % vsize, 2, vdim));
            code /= vsize;
        }
        return vs;
    };
    auto encode = [&](const std::vector<Vec> &vs) {
        uint64_t code = 0;
        uint64_t place = 1;
        for (const auto &v : vs) {
            code += vec_code(v, 2) * place;
            place *= vsize;
        }
        return code;
    };
    Components uf(points);
    auto gens = group.generators();
    for (uint64_t p = 0; p < points; p++) {
        auto vs = decode(p);
        for (size_t g : gens) {
            std::vector<Vec> img;
            for (const auto &v : vs) {
                img.push_back(group[g].apply(v));
            }
            uf.join(p, encode(img));
        }
    }
    std::set<uint64_t> roots;
    std::set<std::string> sigs;
    std::set<uint64_t> full_roots;
    auto sym = [&](const Vec &a, const Vec &b) {
        int64_t acc = 0;
        for (size_t i = 0; i < n; i++) {
            acc += a[i] * b[n + i] + a[n + i] * b[i];
        }
        return acc % 2;
    };
    auto kap = [&](const Vec &a) {
        int64_t acc = 0;
        for (size_t i = 0; i < n; i++) {
            acc += a[i] * a[n + i];
        }
        return acc % 2;
    };
    for (uint64_t p = 0; p < points; p++) {
        uint64_t root = uf.find(p);
        roots.insert(root);
        auto vs = decode(p);
        std::vector<size_t> idx;
        std::vector<Vec> chosen;
        for (size_t i = 0; i < tp; i++) {
            std::vector<Vec> trial = chosen;
            trial.push_back(vs[i]);
            if (Subspace::span(2, vdim, trial).dim() == trial.size()) {
                chosen = trial;
                idx.push_back(i);
            }
        }
        std::string sig = "I";
        for (size_t i : idx) {
            sig += std::to_string(i) + ",";
        }
        sig += "|B";
        for (size_t a = 0; a < idx.size(); a++) {
            for (size_t b = a + 1; b < idx.size(); b++) {
                sig += std::to_string(sym(vs[idx[a]], vs[idx[b]]));
            }
        }
        sig += "|K";
        for (size_t i : idx) {
            sig += std::to_string(kap(vs[i]));
        }
        sig += "|M";
        if (!chosen.empty()) {
            GFMatrix basis = GFMatrix::from_rows(2, vdim, chosen).transpose();
            for (size_t j = 0; j < tp; j++) {
                if (std::find(idx.begin(), idx.end(), j) != idx.end()) {
                    continue;
                }
                auto coeffs = solve(basis, vs[j]);
                sig += vec_to_string(*coeffs) + ";";
            }
        } else {
            sig += "0";
        }
        sigs.insert(sig);
        if (idx.size() == tp) {
            full_roots.insert(root);
        }
    }
    out.orbits = roots.size();
    out.signatures = sigs.size();
    out.full_rank_orbits = full_roots.size();
    return out;
}

TrivialProbe trivial_component_probe(size_t r, size_t s, size_t n, size_t iterations, uint64_t seed) {
    size_t t = r + s;
    if (int_pow(2, n * t) > (uint64_t{1} << 16)) {
        throw std::length_error("trivial_component_probe: 2^{nt} exceeds 2^16");
    }
    TrivialProbe out;
    out.r = r;
    out.s = s;
    out.n = n;
    out.iterations = iterations;
    out.predicted_nonzero = mod_floor(static_cast<int64_t>(r) - static_cast<int64_t>(s), 8) == 0;
    std::vector<CliffordWord> walk;
    for (const auto &w : generator_words(n, 2)) {
        walk.push_back(w);
        walk.push_back(w.inverse());
    }
    FloatState v = FloatState::basis_index(n, t, 2, 0);
    std::mt19937_64 rng(seed);
    std::shuffle(walk.begin(), walk.end(), rng);
    double w = 1.0 / (2.0 * static_cast<double>(walk.size()));
    for (size_t it = 0; it < iterations; it++) {
        FloatState next = v;
        for (auto &a : next.amplitudes()) {
            a *= 0.5;
        }
        for (const auto &g : walk) {
            axpy(next, w, apply_tensor_power(g, r, s, v));
        }
        v = std::move(next);
    }
    out.residual_norm = norm2(v);
    if (out.residual_norm > 0) {
        for (const auto &g : walk) {
            FloatState x = apply_tensor_power(g, r, s, v);
            axpy(x, -1.0, v);
            out.fixed_defect = std::max(out.fixed_defect, norm2(x) / out.residual_norm);
        }
    }
    out.nonzero = out.residual_norm > 1e-6 && out.fixed_defect < 1e-6;
    return out;
}

bool weyl_trivial_on_ones_code(size_t r, size_t s, int d, size_t n) {
    IsoSubspace ones = ones_code(r, s, d);
    for (const auto &fbar : all_coset_labels(ones, n)) {
        ExactState psi = coset_state(ones, fbar, n);
        for (size_t j = 0; j < 2 * n; j++) {
            ExactState x = psi;
            x.apply_gate(Gate::Weyl(unit(2 * n, j)), r, s);
            if (!same_state(x, psi)) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace cliffdual
