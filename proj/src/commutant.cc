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

#include "cliffdual/commutant.h"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "cliffdual/modint.h"

namespace cliffdual {

namespace {

uint64_t column_dim(int d, size_t t) {
    return int_pow(static_cast<uint64_t>(d), t);
}

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

CycInt rescale(const ScalarOps<CycInt> &ops, CycInt v, int from, int to, int d) {
    int diff = to - from;
    for (int e = 0; e + 1 < diff; e += 2) {
        for (auto &c : v.c) {
            c *= d;
        }
    }
    if (diff % 2 == 1) {
        v = ops.mul_sqrt_d(v);
    }
    return v;
}

int64_t beta_rs(const Vec &u, const Vec &v, size_t r, int d) {
    int64_t acc = 0;
    for (size_t c = 0; c < u.size(); c++) {
        int64_t term = static_cast<int64_t>(u[c]) * v[c];
        acc += c < r ? term : -term;
    }
    return mod_floor(acc, d);
}

/// Row-permuted copy: (R(O) A)[O a, b] = A[a, b].
ExactOp left_permute(const GFMatrix &o, const ExactOp &a) {
    int d = a.d();
    size_t t = o.rows();
    uint64_t dim = a.dim();
    std::vector<CycInt> entries(dim * dim, a.ops().zero());
    for (uint64_t x = 0; x < dim; x++) {
        uint64_t ox = vec_code(o.apply(vec_decode(x, d, t)), d);
        for (uint64_t y = 0; y < dim; y++) {
            entries[ox * dim + y] = a.raw(x, y);
        }
    }
    return ExactOp::from_entries(d, dim, std::move(entries), a.sqrt_d_exp());
}

}  // namespace

GFMatrix lift_coset(const IsoSubspace &n, const GFMatrix &fbar) {
    size_t k = n.quotient.quotient_dim();
    if (fbar.rows() != k) {
        throw std::invalid_argument("lift_coset: label must have t - 2m rows");
    }
    GFMatrix f(n.d, n.t(), fbar.cols());
    for (size_t i = 0; i < fbar.cols(); i++) {
        Vec col = n.quotient.lift(fbar.col(i));
        for (size_t c = 0; c < n.t(); c++) {
            f.set(c, i, col[c]);
        }
    }
    return f;
}

std::vector<GFMatrix> all_coset_labels(const IsoSubspace &n, size_t ncols) {
    size_t k = n.quotient.quotient_dim();
    uint64_t total = int_pow(static_cast<uint64_t>(n.d), k * ncols);
    std::vector<GFMatrix> out;
    out.reserve(total);
    for (uint64_t c = 0; c < total; c++) {
        Vec v = vec_decode(c, n.d, k * ncols);
        GFMatrix f(n.d, k, ncols);
        for (size_t i = 0; i < ncols; i++) {
            for (size_t r = 0; r < k; r++) {
                f.set(r, i, v[i * k + r]);
            }
        }
        out.push_back(f);
    }
    return out;
}

ExactState SparseState::to_dense() const {
    ExactState out(n, t, d);
    for (const auto &[idx, v] : entries) {
        out.amplitudes()[idx] = v;
    }
    out.set_sqrt_d_exp(k);
    return out;
}

SparseState coset_state_sparse(const IsoSubspace &n, const GFMatrix &fbar, size_t ncols) {
    if (fbar.cols() != ncols) {
        throw std::invalid_argument("coset_state: label must have n columns");
    }
    GFMatrix f = lift_coset(n, fbar);
    int d = n.d;
    size_t t = n.t();
    uint64_t col = column_dim(d, t);
    auto elems = n.n.elements();
    std::vector<std::vector<uint64_t>> col_codes(ncols);
    for (size_t i = 0; i < ncols; i++) {
        Vec fi = f.col(i);
        for (const auto &u : elems) {
            col_codes[i].push_back(vec_code(vec_add(fi, u, d), d));
        }
    }
    SparseState out;
    out.n = ncols;
    out.t = t;
    out.d = d;
    out.k = static_cast<int>(ncols * n.m);
    ScalarOps<CycInt> ops(d);
    uint64_t total = int_pow(elems.size(), ncols);
    for (uint64_t c = 0; c < total; c++) {
        uint64_t rest = c;
        uint64_t idx = 0;
        uint64_t place = 1;
        for (size_t i = 0; i < ncols; i++) {
            idx += col_codes[i][rest % elems.size()] * place;
            rest /= elems.size();
            place *= col;
        }
        out.entries.emplace_back(idx, ops.one());
    }
    std::sort(out.entries.begin(), out.entries.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
    return out;
}

ExactState coset_state(const IsoSubspace &n, const GFMatrix &fbar, size_t ncols) {
    return coset_state_sparse(n, fbar, ncols).to_dense();
}

CycScalar overlap(const SparseState &a, const SparseState &b) {
    if (a.d != b.d || a.t != b.t || a.n != b.n) {
        throw std::invalid_argument("overlap: state shapes differ");
    }
    ScalarOps<CycInt> ops(a.d);
    CycInt acc = ops.zero();
    size_t i = 0;
    size_t j = 0;
    while (i < a.entries.size() && j < b.entries.size()) {
        if (a.entries[i].first < b.entries[j].first) {
            i++;
        } else if (a.entries[i].first > b.entries[j].first) {
            j++;
        } else {
            acc += ops.mul(ops.conj(a.entries[i].second), b.entries[j].second);
            i++;
            j++;
        }
    }
    return ops.to_cyc(acc, a.k + b.k);
}

CycScalar overlap(const IsoSubspace &ni, const GFMatrix &fbar_i, const IsoSubspace &nj, const GFMatrix &fbar_j, size_t ncols) {
    return overlap(coset_state_sparse(ni, fbar_i, ncols), coset_state_sparse(nj, fbar_j, ncols));
}

CycScalar overlap_closed_form_t5(const IsoSubspace &ni, const GFMatrix &fbar_i, const IsoSubspace &nj, const GFMatrix &fbar_j,
                                 size_t ncols) {
    if (ni.d != 2 || ni.t() != 5 || nj.t() != 5 || ni.m != 1 || nj.m != 1) {
        throw std::invalid_argument("overlap_closed_form_t5: needs one-dimensional codes in Z_2^5");
    }
    const CycField &field = CycField::for_qudit(2);
    if (ni == nj) {
        return fbar_i == fbar_j ? CycScalar::one(field) : CycScalar::zero(field);
    }
    Vec ei = ni.n.basis().row(0);
    Vec ej = nj.n.basis().row(0);
    GFMatrix e = GFMatrix::identity(2, 5);
    for (size_t a = 0; a < 5; a++) {
        for (size_t b = 0; b < 5; b++) {
            e.set(a, b, e.get(a, b) + ei[a] * ej[b]);
        }
    }
    GFMatrix g = e * lift_coset(ni, fbar_i);
    for (size_t c = 0; c < ncols; c++) {
        Vec col = g.col(c);
        if (!nj.perp.contains(col)) {
            throw std::logic_error("overlap_closed_form_t5: E_ij F_i left N_j-perp");
        }
        if (nj.quotient.project(col) != fbar_j.col(c)) {
            return CycScalar::zero(field);
        }
    }
    return CycScalar(field, Rational(1, int64_t{1} << ncols));
}

ExactOp projector_P(const IsoSubspace &n) {
    int d = n.d;
    size_t t = n.t();
    uint64_t dim = column_dim(d, t);
    ScalarOps<CycInt> ops(d);
    int64_t step = cyclotomic_level(d) / d;
    std::vector<CycInt> entries(dim * dim, ops.zero());
    auto elems = n.n.elements();
    for (uint64_t f = 0; f < dim; f++) {
        Vec fv = vec_decode(f, d, t);
        CycInt phase_sum = ops.zero();
        for (const auto &v : elems) {
            phase_sum += ops.root(step * beta_rs(v, fv, n.r, d));
        }
        if (phase_sum.is_zero()) {
            continue;
        }
        for (const auto &u : elems) {
            uint64_t img = vec_code(vec_add(fv, u, d), d);
            entries[img * dim + f] += phase_sum;
        }
    }
    return ExactOp::from_entries(d, dim, std::move(entries), static_cast<int>(4 * n.m));
}

ExactOp projector_from_cosets(const IsoSubspace &n) {
    int d = n.d;
    size_t t = n.t();
    uint64_t dim = column_dim(d, t);
    ScalarOps<CycInt> ops(d);
    std::vector<CycInt> entries(dim * dim, ops.zero());
    auto elems = n.n.elements();
    for (const auto &f : n.perp.elements()) {
        if (n.quotient.lift(n.quotient.project(f)) != f) {
            continue;
        }
        for (const auto &u : elems) {
            for (const auto &w : elems) {
                entries[vec_code(vec_add(f, u, d), d) * dim + vec_code(vec_add(f, w, d), d)] = ops.one();
            }
        }
    }
    return ExactOp::from_entries(d, dim, std::move(entries), static_cast<int>(2 * n.m));
}

ExactOp column_R(const GFMatrix &o) {
    return left_permute(o, ExactOp::identity(o.d(), column_dim(o.d(), o.rows())));
}

ExactOp column_generator(const Gate &g, size_t r, size_t s, int d) {
    size_t t = r + s;
    uint64_t dim = column_dim(d, t);
    CliffordWord w(1, d);
    w.push(g);
    std::vector<ExactState> cols;
    int k = 0;
    for (uint64_t j = 0; j < dim; j++) {
        cols.push_back(apply_tensor_power(w, r, s, ExactState::basis_index(1, t, d, j)));
        k = std::max(k, cols.back().sqrt_d_exp());
    }
    ScalarOps<CycInt> ops(d);
    std::vector<CycInt> entries(dim * dim, ops.zero());
    for (uint64_t j = 0; j < dim; j++) {
        for (uint64_t i = 0; i < dim; i++) {
            const CycInt &v = cols[j].amplitudes()[i];
            if (!v.is_zero()) {
                entries[i * dim + j] = rescale(ops, v, cols[j].sqrt_d_exp(), k, d);
            }
        }
    }
    return ExactOp::from_entries(d, dim, std::move(entries), k);
}

IsoSubspace conjugate_code(const GFMatrix &o, const IsoSubspace &n) {
    return IsoSubspace(n.n.image(o), n.r, n.s);
}

ExactState R_apply(const GFMatrix &o, const ExactState &psi) {
    return apply_column_map(o, psi);
}

ExactState apply_columnwise(const ExactOp &a, const ExactState &psi) {
    int d = psi.d();
    uint64_t col = column_dim(d, psi.t());
    if (a.dim() != col || a.d() != d) {
        throw std::invalid_argument("apply_columnwise: operator must act on one column");
    }
    std::vector<std::vector<std::pair<size_t, const CycInt *>>> rows(col);
    for (size_t i = 0; i < col; i++) {
        for (size_t j = 0; j < col; j++) {
            if (!a.raw(i, j).is_zero()) {
                rows[i].emplace_back(j, &a.raw(i, j));
            }
        }
    }
    const auto &ops = psi.ops();
    ExactState cur = psi;
    std::vector<CycInt> v(col), w(col);
    uint64_t stride = 1;
    for (size_t i = 0; i < psi.n(); i++) {
        for (uint64_t base = 0; base < cur.dim(); base += stride * col) {
            for (uint64_t off = 0; off < stride; off++) {
                bool any = false;
                for (uint64_t x = 0; x < col; x++) {
                    v[x] = cur.amplitudes()[base + off + x * stride];
                    any = any || !v[x].is_zero();
                }
                if (!any) {
                    continue;
                }
                for (uint64_t x = 0; x < col; x++) {
                    CycInt acc = ops.zero();
                    for (const auto &[j, e] : rows[x]) {
                        if (!v[j].is_zero()) {
                            acc += ops.mul(*e, v[j]);
                        }
                    }
                    cur.amplitudes()[base + off + x * stride] = std::move(acc);
                }
            }
        }
        cur.set_sqrt_d_exp(cur.sqrt_d_exp() + a.sqrt_d_exp());
        cur.normalize_scale();
        stride *= col;
    }
    return cur;
}

FloatState apply_columnwise(const std::vector<std::vector<std::complex<double>>> &a, const FloatState &psi) {
    uint64_t col = column_dim(psi.d(), psi.t());
    if (a.size() != col) {
        throw std::invalid_argument("apply_columnwise: operator must act on one column");
    }
    FloatState cur = psi;
    std::vector<std::complex<double>> v(col);
    uint64_t stride = 1;
    for (size_t i = 0; i < psi.n(); i++) {
        for (uint64_t base = 0; base < cur.dim(); base += stride * col) {
            for (uint64_t off = 0; off < stride; off++) {
                for (uint64_t x = 0; x < col; x++) {
                    v[x] = cur.amplitudes()[base + off + x * stride];
                }
                for (uint64_t x = 0; x < col; x++) {
                    std::complex<double> acc = 0;
                    for (uint64_t j = 0; j < col; j++) {
                        acc += a[x][j] * v[j];
                    }
                    cur.amplitudes()[base + off + x * stride] = acc;
                }
            }
        }
        stride *= col;
    }
    return cur;
}

bool commutes_with_generators(const ExactOp &a, size_t r, size_t s, size_t n, std::string *failed) {
    int d = a.d();
    size_t t = log_dim(a.dim(), d);
    if (t != r + s) {
        throw std::invalid_argument("commutes_with_generators: operator size does not match r + s");
    }
    for (const Gate &g : {Gate::H(0), Gate::P(0)}) {
        ExactOp gm = column_generator(g, r, s, d);
        if (a * gm != gm * a) {
            if (failed) {
                *failed = g.str();
            }
            return false;
        }
    }
    if (n < 2) {
        return true;
    }
    uint64_t dim = a.dim();
    std::vector<uint64_t> sum(dim * dim);
    for (uint64_t x = 0; x < dim; x++) {
        Vec xv = vec_decode(x, d, t);
        for (uint64_t y = 0; y < dim; y++) {
            sum[x * dim + y] = vec_code(vec_add(xv, vec_decode(y, d, t), d), d);
        }
    }
    for (uint64_t a1 = 0; a1 < dim; a1++) {
        for (uint64_t b1 = 0; b1 < dim; b1++) {
            if (a.raw(a1, b1).is_zero()) {
                continue;
            }
            for (uint64_t a2 = 0; a2 < dim; a2++) {
                for (uint64_t b2 = 0; b2 < dim; b2++) {
                    if (a.raw(sum[a1 * dim + a2], sum[b1 * dim + b2]) != a.raw(a2, b2)) {
                        if (failed) {
                            *failed = "CADD0,1";
                        }
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

std::vector<IsoSubspace> all_stochastic_isotropic(size_t r, size_t s, int d, const CacheDir &cache) {
    std::vector<IsoSubspace> out;
    size_t top = max_isotropic_dim(r, s, d) + 1;
    for (size_t m = 0; m <= top; m++) {
        auto level = enumerate_isotropic(r, s, d, m, Stratum::both, cache);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

std::vector<SemigroupElement> semigroup_elements(const FiniteMatrixGroup &o1, const std::vector<IsoSubspace> &codes) {
    std::vector<SemigroupElement> out;
    std::unordered_map<std::string, size_t> seen;
    for (const auto &n : codes) {
        ExactOp p = projector_P(n);
        for (size_t i = 0; i < o1.size(); i++) {
            ExactOp op = left_permute(o1[i], p);
            std::string key = op.key();
            if (seen.count(key)) {
                continue;
            }
            seen.emplace(key, out.size());
            out.push_back({i, o1[i], n, std::move(op)});
        }
    }
    return out;
}

SemigroupProduct semigroup_product(const IsoSubspace &n1, const IsoSubspace &n2, const FiniteMatrixGroup &o1) {
    if (n1.r != n2.r || n1.s != n2.s || n1.d != n2.d) {
        throw std::invalid_argument("semigroup_product: codes live in different spaces");
    }
    int d = n1.d;
    size_t t = n1.t();
    ExactOp prod = projector_P(n1) * projector_P(n2);
    uint64_t dim = prod.dim();
    std::vector<Vec> support;
    for (uint64_t b = 0; b < dim; b++) {
        for (uint64_t a = 0; a < dim; a++) {
            if (!prod.raw(a, b).is_zero()) {
                support.push_back(vec_decode(b, d, t));
                break;
            }
        }
    }
    Subspace span = Subspace::span(d, t, support);
    if (int_pow(static_cast<uint64_t>(d), span.dim()) != support.size()) {
        throw std::runtime_error("semigroup_product: column support of P(N1)P(N2) is not a subspace");
    }
    Subspace i_space = orthocomplement(span, SymBilForm::model(n1.r, n1.s, d).matrix);
    IsoSubspace iso;
    try {
        iso = IsoSubspace(i_space, n1.r, n1.s);
    } catch (const std::invalid_argument &e) {
        throw std::runtime_error(std::string("semigroup_product: candidate I is not stochastic isotropic: ") + e.what());
    }
    std::optional<CycInt> value;
    for (uint64_t a = 0; a < dim && !value; a++) {
        for (uint64_t b = 0; b < dim; b++) {
            if (!prod.raw(a, b).is_zero()) {
                value = prod.raw(a, b);
                break;
            }
        }
    }
    for (uint64_t a = 0; a < dim; a++) {
        for (uint64_t b = 0; b < dim; b++) {
            if (!prod.raw(a, b).is_zero() && prod.raw(a, b) != *value) {
                throw std::runtime_error("semigroup_product: product entries are not constant on their support");
            }
        }
    }
    ExactOp pi = projector_P(iso);
    for (size_t k = 0; k < o1.size(); k++) {
        ExactOp cand = left_permute(o1[k], pi);
        bool ok = true;
        for (uint64_t x = 0; x < dim * dim && ok; x++) {
            ok = cand.raw(x / dim, x % dim).is_zero() == prod.raw(x / dim, x % dim).is_zero();
        }
        if (!ok) {
            continue;
        }
        SemigroupProduct out;
        out.o_index = k;
        out.o = o1[k];
        out.i = iso;
        out.scalar = prod.ops().to_cyc(*value, prod.sqrt_d_exp());
        out.scalar.scale(Rational(static_cast<int64_t>(int_pow(static_cast<uint64_t>(d), iso.m))));
        return out;
    }
    throw std::runtime_error("semigroup_product: no O in O_1(T) reproduces P(N1)P(N2)");
}

std::vector<std::vector<Rational>> gram_matrix_S(const std::vector<SemigroupElement> &elements, size_t n) {
    size_t k = elements.size();
    std::vector<std::vector<Rational>> g(k, std::vector<Rational>(k));
    for (size_t i = 0; i < k; i++) {
        const ExactOp &a = elements[i].op;
        const auto &ops = a.ops();
        for (size_t j = i; j < k; j++) {
            const ExactOp &b = elements[j].op;
            CycInt acc = ops.zero();
            for (size_t x = 0; x < a.dim(); x++) {
                for (size_t y = 0; y < a.dim(); y++) {
                    if (!a.raw(x, y).is_zero() && !b.raw(x, y).is_zero()) {
                        acc += ops.mul(ops.conj(a.raw(x, y)), b.raw(x, y));
                    }
                }
            }
            Rational tr = rational_value(ops.to_cyc(acc, a.sqrt_d_exp() + b.sqrt_d_exp()));
            Rational p(1);
            for (size_t e = 0; e < n; e++) {
                p *= tr;
            }
            g[i][j] = p;
            g[j][i] = p;
        }
    }
    return g;
}

size_t rational_rank(std::vector<std::vector<Rational>> m) {
    size_t rows = m.size();
    if (rows == 0) {
        return 0;
    }
    size_t cols = m[0].size();
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rows; c++) {
        size_t piv = rows;
        for (size_t r = rank; r < rows; r++) {
            if (!m[r][c].is_zero()) {
                piv = r;
                break;
            }
        }
        if (piv == rows) {
            continue;
        }
        std::swap(m[piv], m[rank]);
        for (size_t r = rank + 1; r < rows; r++) {
            if (m[r][c].is_zero()) {
                continue;
            }
            Rational f = m[r][c] / m[rank][c];
            for (size_t j = c; j < cols; j++) {
                if (!m[rank][j].is_zero()) {
                    m[r][j] -= f * m[rank][j];
                }
            }
        }
        rank++;
    }
    return rank;
}

Rational rational_value(const CycScalar &v) {
    CycScalar w = v.without_sqrt_denominator();
    const auto &c = w.coeffs();
    for (size_t i = 1; i < c.size(); i++) {
        if (!c[i].is_zero()) {
            throw std::invalid_argument("rational_value: value is not rational");
        }
    }
    return c.empty() ? Rational() : c[0];
}

CommutantDimension commutant_dimension_mod_p(size_t r, size_t s, int d, size_t n) {
    size_t t = r + s;
    uint64_t dim = int_pow(static_cast<uint64_t>(d), n * t);
    if (dim > 256) {
        throw std::length_error("commutant_dimension_mod_p: d^(nt) = " + std::to_string(dim) + " exceeds 256");
    }
    const CycField &field = CycField::for_qudit(d);
    uint64_t p = prime_one_mod(static_cast<uint64_t>(field.m), uint64_t{1} << 30);
    uint64_t zeta = root_of_unity_mod(static_cast<uint64_t>(field.m), p);
    uint64_t sqrt_img = CycScalar::sqrt_d(field).mod_p(p, zeta, 1);
    auto to_p = [&](const CycScalar &v) { return v.mod_p(p, zeta, sqrt_img); };

    std::vector<Gate> monomial;
    std::vector<Gate> dense;
    for (size_t i = 0; i < n; i++) {
        dense.push_back(Gate::H(i));
        monomial.push_back(Gate::P(i));
        Vec x(2 * n, 0);
        x[n + i] = 1;
        monomial.push_back(Gate::Weyl(x));
        Vec zv(2 * n, 0);
        zv[i] = 1;
        monomial.push_back(Gate::Weyl(zv));
        for (size_t j = 0; j < n; j++) {
            if (i != j) {
                monomial.push_back(Gate::CADD(i, j));
            }
        }
    }
    std::vector<std::vector<uint64_t>> perm;
    std::vector<std::vector<uint64_t>> lambda;
    for (const auto &g : monomial) {
        std::vector<uint64_t> pi(dim), lam(dim);
        for (uint64_t a = 0; a < dim; a++) {
            ExactState psi = ExactState::basis_index(n, t, d, a);
            psi.apply_gate(g, r, s);
            for (uint64_t b = 0; b < dim; b++) {
                if (!psi.amplitudes()[b].is_zero()) {
                    pi[a] = b;
                    lam[a] = to_p(psi.amplitude(b));
                }
            }
        }
        perm.push_back(std::move(pi));
        lambda.push_back(std::move(lam));
    }

    uint64_t nodes = dim * dim;
    std::vector<int64_t> orbit(nodes, -1);
    std::vector<uint64_t> coef(nodes, 0);
    std::vector<bool> dead;
    for (uint64_t start = 0; start < nodes; start++) {
        if (orbit[start] >= 0) {
            continue;
        }
        int64_t id = static_cast<int64_t>(dead.size());
        dead.push_back(false);
        std::vector<uint64_t> stack{start};
        orbit[start] = id;
        coef[start] = 1;
        while (!stack.empty()) {
            uint64_t node = stack.back();
            stack.pop_back();
            uint64_t a = node / dim;
            uint64_t b = node % dim;
            for (size_t g = 0; g < perm.size(); g++) {
                uint64_t next = perm[g][a] * dim + perm[g][b];
                uint64_t c = mul_mod(mul_mod(coef[node], lambda[g][a], p), inv_mod(lambda[g][b], p), p);
                if (orbit[next] < 0) {
                    orbit[next] = id;
                    coef[next] = c;
                    stack.push_back(next);
                } else if (coef[next] != c) {
                    dead[static_cast<size_t>(id)] = true;
                }
            }
        }
    }
    std::vector<int64_t> var_of(dead.size(), -1);
    size_t vars = 0;
    for (size_t o = 0; o < dead.size(); o++) {
        if (!dead[o]) {
            var_of[o] = static_cast<int64_t>(vars++);
        }
    }

    std::map<size_t, std::vector<uint64_t>> pivots;
    auto reduce_and_insert = [&](std::vector<uint64_t> row) {
        for (size_t c = 0; c < vars; c++) {
            if (row[c] == 0) {
                continue;
            }
            auto it = pivots.find(c);
            if (it == pivots.end()) {
                uint64_t inv = inv_mod(row[c], p);
                for (size_t j = c; j < vars; j++) {
                    row[j] = mul_mod(row[j], inv, p);
                }
                pivots.emplace(c, std::move(row));
                return;
            }
            uint64_t f = row[c];
            const auto &pr = it->second;
            for (size_t j = c; j < vars; j++) {
                if (pr[j] != 0) {
                    row[j] = (row[j] + p - mul_mod(f, pr[j], p)) % p;
                }
            }
        }
    };
    auto add_term = [&](std::vector<uint64_t> &row, uint64_t node, uint64_t w) {
        int64_t v = var_of[static_cast<size_t>(orbit[node])];
        if (v >= 0 && w != 0) {
            row[static_cast<size_t>(v)] = (row[static_cast<size_t>(v)] + mul_mod(w, coef[node], p)) % p;
        }
    };
    for (const auto &g : dense) {
        std::vector<std::vector<uint64_t>> hm(dim, std::vector<uint64_t>(dim, 0));
        for (uint64_t b = 0; b < dim; b++) {
            ExactState psi = ExactState::basis_index(n, t, d, b);
            psi.apply_gate(g, r, s);
            for (uint64_t a = 0; a < dim; a++) {
                if (!psi.amplitudes()[a].is_zero()) {
                    hm[a][b] = to_p(psi.amplitude(a));
                }
            }
        }
        for (uint64_t i = 0; i < dim && pivots.size() < vars; i++) {
            for (uint64_t j = 0; j < dim && pivots.size() < vars; j++) {
                std::vector<uint64_t> row(vars, 0);
                for (uint64_t k = 0; k < dim; k++) {
                    add_term(row, i * dim + k, hm[k][j]);
                    add_term(row, k * dim + j, (p - hm[i][k]) % p);
                }
                reduce_and_insert(std::move(row));
            }
        }
    }
    CommutantDimension out;
    out.prime = p;
    out.variables = vars;
    out.nullity = vars - pivots.size();
    return out;
}

}  // namespace cliffdual
