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

#include "cliffdual/forms.h"

#include <functional>
#include <stdexcept>

namespace cliffdual {

namespace {

void require_square(const GFMatrix &m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("form: matrix not square");
    }
}

int64_t det_mod(GFMatrix a) {
    int d = a.d();
    size_t n = a.rows();
    int64_t det = 1;
    for (size_t c = 0; c < n; c++) {
        size_t p = c;
        while (p < n && a.get(p, c) == 0) {
            p++;
        }
        if (p == n) {
            return 0;
        }
        if (p != c) {
            a.swap_rows(p, c);
            det = mod_floor(-det, d);
        }
        int64_t piv = a.get(c, c);
        det = det * piv % d;
        int64_t inv = inv_mod_prime(piv, d);
        for (size_t i = c + 1; i < n; i++) {
            if (a.get(i, c)) {
                a.add_row_multiple(i, c, mod_floor(-a.get(i, c) * inv, d));
            }
        }
    }
    return det;
}

/// Gram matrix of g restricted to a complement of its radical.
GFMatrix nondegenerate_part(const GFMatrix &g) {
    Subspace rad = kernel(g);
    Subspace w = pivot_complement(Subspace::full(g.d(), g.rows()), rad);
    return w.basis() * g * w.basis().transpose();
}

int discriminant(const GFMatrix &g) {
    GFMatrix nd = nondegenerate_part(g);
    if (nd.rows() == 0) {
        return 1;
    }
    return legendre(det_mod(nd), g.d());
}

struct FormAccess {
    int d;
    size_t dim;
    std::function<int64_t(const Vec &)> value;
    std::function<int64_t(const Vec &, const Vec &)> pair;
};

std::optional<GFMatrix> search_isometry(const FormAccess &a, const FormAccess &b, uint64_t node_budget, bool *exhausted,
                                        bool pin_first = false) {
    if (a.dim != b.dim || a.d != b.d) {
        throw std::invalid_argument("equivalent: dimension or field mismatch");
    }
    size_t n = a.dim;
    int d = a.d;
    uint64_t total = int_pow(static_cast<uint64_t>(d), n);
    std::vector<Vec> all;
    all.reserve(total);
    for (uint64_t c = 0; c < total; c++) {
        all.push_back(vec_decode(c, d, n));
    }
    std::vector<std::vector<size_t>> cand(n);
    std::vector<Vec> basis;
    for (size_t i = 0; i < n; i++) {
        basis.push_back(unit(n, i));
    }
    for (size_t i = 0; i < n; i++) {
        int64_t target = a.value(basis[i]);
        for (size_t k = 0; k < all.size(); k++) {
            if (!vec_is_zero(all[k]) && b.value(all[k]) == target && (!pin_first || i != 0 || all[k] == basis[0])) {
                cand[i].push_back(k);
            }
        }
    }
    std::vector<std::vector<int64_t>> pair_a(n, std::vector<int64_t>(n));
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            pair_a[i][j] = a.pair(basis[i], basis[j]);
        }
    }
    std::vector<size_t> chosen(n);
    std::vector<Subspace> spans(n + 1);
    spans[0] = Subspace(d, n);
    uint64_t nodes = 0;
    *exhausted = true;
    std::function<bool(size_t)> rec = [&](size_t i) -> bool {
        if (i == n) {
            return true;
        }
        for (size_t k : cand[i]) {
            if (++nodes > node_budget) {
                *exhausted = false;
                return false;
            }
            const Vec &v = all[k];
            bool ok = true;
            for (size_t j = 0; j < i && ok; j++) {
                ok = b.pair(v, all[chosen[j]]) == pair_a[i][j];
            }
            if (!ok || spans[i].contains(v)) {
                continue;
            }
            chosen[i] = k;
            spans[i + 1] = spans[i].with_vector(v);
            if (rec(i + 1)) {
                return true;
            }
            if (!*exhausted) {
                return false;
            }
        }
        return false;
    };
    if (n == 0) {
        return GFMatrix(d, 0, 0);
    }
    if (!rec(0)) {
        return std::nullopt;
    }
    GFMatrix g(d, n, n);
    for (size_t i = 0; i < n; i++) {
        for (size_t r = 0; r < n; r++) {
            g.set(r, i, all[chosen[i]][r]);
        }
    }
    return g;
}

FormAccess access(const SymBilForm &b) {
    return {b.d(), b.dim(), [b](const Vec &u) { return b(u, u); }, [b](const Vec &u, const Vec &v) { return b(u, v); }};
}

FormAccess access(const QuadForm &q) {
    SymBilForm p = polarize(q);
    return {q.d(), q.dim(), [q](const Vec &u) { return evaluate(q, u).value; }, [p](const Vec &u, const Vec &v) { return p(u, v); }};
}

FormAccess access(const GenQuadForm &q) {
    return {q.d, q.dim(), [q](const Vec &u) { return evaluate(q, u).value; }, [q](const Vec &u, const Vec &v) { return q.polar(u, v); }};
}

template <typename F>
Equivalence decide(const F &a, const F &b, size_t witness_max_dim) {
    if (a.d() != b.d() || a.dim() != b.dim()) {
        throw std::invalid_argument("equivalent: forms over different spaces");
    }
    Equivalence out;
    out.equivalent = invariants(a) == invariants(b);
    if (a.dim() <= witness_max_dim) {
        bool exhausted = true;
        out.witness = search_isometry(access(a), access(b), UINT64_MAX, &exhausted);
        out.equivalent = out.witness.has_value();
    }
    return out;
}

}  // namespace

SymBilForm::SymBilForm(const GFMatrix &m) : matrix(m) {
    require_square(m);
    if (m != m.transpose()) {
        throw std::invalid_argument("SymBilForm: matrix not symmetric");
    }
}

SymBilForm SymBilForm::dot(int d, size_t t) {
    return SymBilForm(GFMatrix::identity(d, t));
}

SymBilForm SymBilForm::model(size_t r, size_t s, int d) {
    GFMatrix m(d, r + s, r + s);
    for (size_t i = 0; i < r + s; i++) {
        m.set(i, i, i < r ? 1 : -1);
    }
    return SymBilForm(m);
}

SymBilForm SymBilForm::hyperbolic(int d) {
    GFMatrix m(d, 2, 2);
    m.set(0, 1, 1);
    m.set(1, 0, 1);
    return SymBilForm(m);
}

QuadForm::QuadForm(const GFMatrix &m) : rep(m.d(), m.rows(), m.cols()) {
    require_square(m);
    for (size_t i = 0; i < m.rows(); i++) {
        rep.set(i, i, m.get(i, i));
        for (size_t j = i + 1; j < m.rows(); j++) {
            rep.set(i, j, m.get(i, j) + m.get(j, i));
        }
    }
}

GenQuadForm::GenQuadForm(std::vector<int64_t> diag_, const SymBilForm &polar_) : d(polar_.d()), D(tau_order(polar_.d())), diag(std::move(diag_)), polar(polar_) {
    if (diag.size() != polar.dim()) {
        throw std::invalid_argument("GenQuadForm: diagonal and polarization sizes differ");
    }
    for (size_t i = 0; i < diag.size(); i++) {
        diag[i] = mod_floor(diag[i], D);
        if (diag[i] % d != polar.matrix.get(i, i) % d) {
            throw std::invalid_argument("GenQuadForm: diagonal inconsistent with polarization");
        }
    }
}

std::vector<std::vector<int64_t>> GenQuadForm::upper_triangular() const {
    size_t n = dim();
    std::vector<std::vector<int64_t>> u(n, std::vector<int64_t>(n, 0));
    for (size_t i = 0; i < n; i++) {
        u[i][i] = diag[i];
        for (size_t j = i + 1; j < n; j++) {
            u[i][j] = mod_floor(2 * polar.matrix.get(i, j), D);
        }
    }
    return u;
}

GenQuadForm GenQuadForm::direct_sum(const GenQuadForm &o) const {
    if (o.d != d) {
        throw std::invalid_argument("direct_sum: field mismatch");
    }
    size_t n = dim() + o.dim();
    GFMatrix m(d, n, n);
    for (size_t i = 0; i < dim(); i++) {
        for (size_t j = 0; j < dim(); j++) {
            m.set(i, j, polar.matrix.get(i, j));
        }
    }
    for (size_t i = 0; i < o.dim(); i++) {
        for (size_t j = 0; j < o.dim(); j++) {
            m.set(dim() + i, dim() + j, o.polar.matrix.get(i, j));
        }
    }
    std::vector<int64_t> dg = diag;
    dg.insert(dg.end(), o.diag.begin(), o.diag.end());
    return GenQuadForm(dg, SymBilForm(m));
}

nlohmann::json GenQuadForm::to_json() const {
    nlohmann::json polar_rows = nlohmann::json::array();
    for (size_t i = 0; i < dim(); i++) {
        nlohmann::json row = nlohmann::json::array();
        for (size_t j = 0; j < dim(); j++) {
            row.push_back(polar.matrix.get(i, j));
        }
        polar_rows.push_back(row);
    }
    return {{"d", d}, {"D", D}, {"diag", diag}, {"polar", polar_rows}};
}

GenQuadForm GenQuadForm::from_json(const nlohmann::json &j) {
    int d = j.at("d").get<int>();
    if (!is_prime(d)) {
        throw std::invalid_argument("form JSON: d must be prime");
    }
    if (j.contains("D") && j.at("D").get<int64_t>() != tau_order(d)) {
        throw std::invalid_argument("form JSON: D must be the order of tau");
    }
    auto diag = j.at("diag").get<std::vector<int64_t>>();
    const auto &rows = j.at("polar");
    if (rows.size() != diag.size()) {
        throw std::invalid_argument("form JSON: polar size differs from diag");
    }
    GFMatrix m(d, diag.size(), diag.size());
    for (size_t i = 0; i < diag.size(); i++) {
        if (rows[i].size() != diag.size()) {
            throw std::invalid_argument("form JSON: polar not square");
        }
        for (size_t k = 0; k < diag.size(); k++) {
            m.set(i, k, rows[i][k].get<int64_t>());
        }
    }
    return GenQuadForm(diag, SymBilForm(m));
}

bool FormInvariants::operator==(const FormInvariants &o) const {
    return dim == o.dim && rank == o.rank && dis == o.dis && type == o.type && arf == o.arf && garf == o.garf &&
           radical_isotropic == o.radical_isotropic;
}

nlohmann::json FormInvariants::to_json() const {
    nlohmann::json j = {{"dim", dim}, {"rank", rank}};
    if (dis) {
        j["dis"] = *dis;
    }
    if (type) {
        j["type"] = *type;
    }
    if (arf) {
        j["arf"] = *arf;
    }
    if (garf) {
        j["garf"] = *garf;
    }
    if (radical_isotropic) {
        j["radical_isotropic"] = *radical_isotropic;
    }
    return j;
}

ModInt evaluate(const QuadForm &q, const Vec &u) {
    if (u.size() != q.dim()) {
        throw std::invalid_argument("evaluate: dimension mismatch");
    }
    return ModInt(bilinear(u, q.rep, u), q.d());
}

ModInt evaluate(const GenQuadForm &q, const Vec &u) {
    size_t n = q.dim();
    if (u.size() != n) {
        throw std::invalid_argument("evaluate: dimension mismatch");
    }
    int64_t acc = 0;
    for (size_t i = 0; i < n; i++) {
        if (!u[i]) {
            continue;
        }
        acc += q.diag[i] * u[i] * u[i];
        for (size_t j = i + 1; j < n; j++) {
            if (u[j]) {
                acc += 2 * static_cast<int64_t>(q.polar.matrix.get(i, j)) * u[i] * u[j];
            }
        }
    }
    return ModInt(acc, q.D);
}

SymBilForm polarize(const QuadForm &q) {
    size_t n = q.dim();
    GFMatrix m(q.d(), n, n);
    for (size_t i = 0; i < n; i++) {
        m.set(i, i, 2 * q.rep.get(i, i));
        for (size_t j = i + 1; j < n; j++) {
            m.set(i, j, q.rep.get(i, j));
            m.set(j, i, q.rep.get(i, j));
        }
    }
    return SymBilForm(m);
}

SymBilForm half_polar(const QuadForm &q) {
    if (q.d() == 2) {
        throw std::invalid_argument("half_polar: requires odd d");
    }
    GFMatrix p = polarize(q).matrix;
    int64_t half = inv_mod_prime(2, q.d());
    GFMatrix m(q.d(), q.dim(), q.dim());
    for (size_t i = 0; i < q.dim(); i++) {
        for (size_t j = 0; j < q.dim(); j++) {
            m.set(i, j, p.get(i, j) * half);
        }
    }
    return SymBilForm(m);
}

GenQuadForm generalized_refine(const SymBilForm &beta) {
    if (beta.d() != 2) {
        throw std::invalid_argument("generalized_refine: requires d = 2");
    }
    std::vector<int64_t> diag(beta.dim());
    for (size_t i = 0; i < beta.dim(); i++) {
        diag[i] = beta.matrix.get(i, i);
    }
    return GenQuadForm(diag, beta);
}

std::optional<int> gauss_phase(const GenQuadForm &q) {
    if (q.d != 2) {
        throw std::invalid_argument("gauss_phase: requires d = 2");
    }
    size_t n = q.dim();
    if (n > 24) {
        throw std::length_error("gauss_phase: dimension above 24");
    }
    std::vector<uint64_t> rows(n, 0);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            if (q.polar.matrix.get(i, j)) {
                rows[i] |= uint64_t{1} << j;
            }
        }
    }
    int64_t counts[4] = {1, 0, 0, 0};
    uint64_t u = 0;
    uint64_t b = 0;
    int64_t val = 0;
    uint64_t total = uint64_t{1} << n;
    for (uint64_t k = 1; k < total; k++) {
        size_t i = static_cast<size_t>(__builtin_ctzll(k));
        val = (val + q.diag[i] + 2 * static_cast<int64_t>((b >> i) & 1)) & 3;
        u ^= uint64_t{1} << i;
        b ^= rows[i];
        counts[val]++;
    }
    int64_t re = counts[0] - counts[2];
    int64_t im = counts[1] - counts[3];
    if (re == 0 && im == 0) {
        return std::nullopt;
    }
    static const int table[3][3] = {{5, 4, 3}, {6, -1, 2}, {7, 0, 1}};
    int sr = (re > 0) - (re < 0);
    int si = (im > 0) - (im < 0);
    if (sr != 0 && si != 0 && std::llabs(re) != std::llabs(im)) {
        throw std::logic_error("gauss_phase: phase not a multiple of pi/4");
    }
    return table[sr + 1][si + 1];
}

int arf(const QuadForm &q) {
    if (q.d() != 2) {
        throw std::invalid_argument("arf: requires d = 2");
    }
    if (rank(polarize(q).matrix) != q.dim()) {
        throw std::invalid_argument("arf: polarization is degenerate");
    }
    return *invariants(q).arf;
}

FormInvariants invariants(const SymBilForm &b) {
    FormInvariants out;
    out.dim = b.dim();
    out.rank = rank(b.matrix);
    if (b.d() == 2) {
        bool odd = false;
        for (size_t i = 0; i < b.dim(); i++) {
            odd = odd || b.matrix.get(i, i);
        }
        out.type = odd ? "odd" : "even";
    } else {
        out.dis = discriminant(b.matrix);
    }
    return out;
}

FormInvariants invariants(const QuadForm &q) {
    if (q.d() != 2) {
        FormInvariants out = invariants(half_polar(q));
        return out;
    }
    SymBilForm p = polarize(q);
    FormInvariants out;
    out.dim = q.dim();
    out.rank = rank(p.matrix);
    Subspace rad = kernel(p.matrix);
    bool iso = true;
    for (const auto &r : rad.basis_vectors()) {
        iso = iso && evaluate(q, r).value == 0;
    }
    out.radical_isotropic = iso;
    if (iso) {
        if (q.dim() > 24) {
            throw std::length_error("invariants: dimension above 24");
        }
        int64_t sum = 0;
        uint64_t total = uint64_t{1} << q.dim();
        for (uint64_t c = 0; c < total; c++) {
            sum += evaluate(q, vec_decode(c, 2, q.dim())).value ? -1 : 1;
        }
        out.arf = sum > 0 ? 0 : 1;
    }
    return out;
}

FormInvariants invariants(const GenQuadForm &q) {
    FormInvariants out = invariants(q.polar);
    if (q.d != 2) {
        return out;
    }
    Subspace rad = kernel(q.polar.matrix);
    bool iso = true;
    for (const auto &r : rad.basis_vectors()) {
        iso = iso && evaluate(q, r).value == 0;
    }
    out.radical_isotropic = iso;
    out.garf = gauss_phase(q);
    return out;
}

Equivalence equivalent(const SymBilForm &a, const SymBilForm &b, size_t witness_max_dim) {
    return decide(a, b, witness_max_dim);
}

Equivalence equivalent(const QuadForm &a, const QuadForm &b, size_t witness_max_dim) {
    return decide(a, b, witness_max_dim);
}

Equivalence equivalent(const GenQuadForm &a, const GenQuadForm &b, size_t witness_max_dim) {
    if (a.d != b.d || a.dim() != b.dim()) {
        throw std::invalid_argument("equivalent: forms over different spaces");
    }
    Equivalence out;
    out.equivalent = invariants(a) == invariants(b);
    if (a.dim() <= witness_max_dim) {
        bool exhausted = true;
        out.witness = search_isometry(access(a), access(b), UINT64_MAX, &exhausted);
        out.equivalent = out.witness.has_value();
    }
    return out;
}

std::optional<GFMatrix> find_isometry(const GenQuadForm &a, const GenQuadForm &b, uint64_t node_budget) {
    bool exhausted = true;
    return search_isometry(access(a), access(b), node_budget, &exhausted);
}

std::optional<GFMatrix> find_isometry_fixing(const GenQuadForm &a, const GenQuadForm &b, const Vec &v, uint64_t node_budget) {
    if (a.dim() != b.dim() || a.d != b.d || v.size() != a.dim()) {
        throw std::invalid_argument("find_isometry_fixing: shape mismatch");
    }
    if (vec_is_zero(v)) {
        return find_isometry(a, b, node_budget);
    }
    size_t n = a.dim();
    std::vector<Vec> cols{v};
    Subspace span = Subspace::span(a.d, n, cols);
    for (size_t i = 0; i < n && cols.size() < n; i++) {
        if (!span.contains(unit(n, i))) {
            cols.push_back(unit(n, i));
            span = span.with_vector(unit(n, i));
        }
    }
    GFMatrix basis = GFMatrix::from_rows(a.d, n, cols).transpose();
    bool exhausted = true;
    auto g = search_isometry(access(pullback(a, basis)), access(pullback(b, basis)), node_budget, &exhausted, true);
    if (!g) {
        return std::nullopt;
    }
    return basis * *g * *inverse(basis);
}

GenQuadForm pullback(const GenQuadForm &q, const GFMatrix &b) {
    if (b.rows() != q.dim()) {
        throw std::invalid_argument("pullback: shape mismatch");
    }
    std::vector<int64_t> diag;
    for (size_t i = 0; i < b.cols(); i++) {
        diag.push_back(evaluate(q, b.col(i)).value);
    }
    return GenQuadForm(diag, SymBilForm(b.transpose() * q.polar.matrix * b));
}

GenQuadForm model_form(size_t r, size_t s, int d) {
    if (!is_prime(d)) {
        throw std::invalid_argument("model_form: d must be prime");
    }
    std::vector<int64_t> diag;
    for (size_t i = 0; i < r + s; i++) {
        diag.push_back(i < r ? 1 : -1);
    }
    return GenQuadForm(diag, SymBilForm::model(r, s, d));
}

bool is_isotropic(const GenQuadForm &q, const Subspace &n) {
    auto b = n.basis_vectors();
    for (size_t i = 0; i < b.size(); i++) {
        if (evaluate(q, b[i]).value != 0) {
            return false;
        }
        for (size_t j = i + 1; j < b.size(); j++) {
            if (q.polar(b[i], b[j]) != 0) {
                return false;
            }
        }
    }
    return true;
}

GenQuadForm restrict_to_quotient(const GenQuadForm &q, const QuotientSection &section) {
    if (!is_isotropic(q, section.n())) {
        throw std::invalid_argument("restrict_to_quotient: N is not isotropic");
    }
    int d = q.d;
    size_t k = section.quotient_dim();
    std::vector<Vec> lifts;
    for (size_t i = 0; i < k; i++) {
        lifts.push_back(section.complement().basis().row(i));
    }
    std::vector<int64_t> diag(k);
    GFMatrix m(d, k, k);
    for (size_t i = 0; i < k; i++) {
        diag[i] = evaluate(q, lifts[i]).value;
        for (size_t j = 0; j < k; j++) {
            m.set(i, j, q.polar(lifts[i], lifts[j]));
        }
    }
    GenQuadForm out(diag, SymBilForm(m));
    auto nb = section.n().basis_vectors();
    for (size_t i = 0; i < k; i++) {
        for (const auto &v : nb) {
            if (evaluate(q, vec_add(lifts[i], v, d)) != evaluate(q, lifts[i])) {
                throw std::logic_error("restrict_to_quotient: form depends on the lift");
            }
        }
    }
    return out;
}

}  // namespace cliffdual
