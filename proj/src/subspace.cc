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

#include "cliffdual/subspace.h"

#include <stdexcept>

namespace cliffdual {

Subspace::Subspace(int d, size_t t) : d_(d), t_(t), basis_(d, 0, t) {
}

Subspace Subspace::span(int d, size_t t, const std::vector<Vec> &vectors) {
    return row_space(GFMatrix::from_rows(d, t, vectors));
}

Subspace Subspace::row_space(const GFMatrix &m) {
    Subspace s;
    s.d_ = m.d();
    s.t_ = m.cols();
    s.basis_ = rref(m, &s.pivots_);
    return s;
}

Subspace Subspace::full(int d, size_t t) {
    return row_space(GFMatrix::identity(d, t));
}

Subspace Subspace::from_strings(int d, const std::vector<std::string> &rows) {
    if (rows.empty()) {
        throw std::invalid_argument("Subspace::from_strings: need at least one row to infer t");
    }
    return row_space(GFMatrix::from_strings(d, rows));
}

std::vector<Vec> Subspace::basis_vectors() const {
    std::vector<Vec> out;
    for (size_t i = 0; i < basis_.rows(); i++) {
        out.push_back(basis_.row(i));
    }
    return out;
}

Vec Subspace::reduce(const Vec &v) const {
    if (v.size() != t_) {
        throw std::invalid_argument("Subspace::reduce: dimension mismatch");
    }
    Vec w = v;
    for (size_t i = 0; i < pivots_.size(); i++) {
        int64_t c = w[pivots_[i]];
        if (c == 0) {
            continue;
        }
        for (size_t j = 0; j < t_; j++) {
            w[j] = static_cast<uint8_t>((w[j] + (d_ - c) * basis_.get(i, j)) % d_);
        }
    }
    return w;
}

bool Subspace::contains(const Vec &v) const {
    return vec_is_zero(reduce(v));
}

bool Subspace::contains(const Subspace &o) const {
    for (size_t i = 0; i < o.dim(); i++) {
        if (!contains(o.basis_.row(i))) {
            return false;
        }
    }
    return true;
}

Subspace Subspace::sum(const Subspace &o) const {
    auto vs = basis_vectors();
    auto ws = o.basis_vectors();
    vs.insert(vs.end(), ws.begin(), ws.end());
    return span(d_, t_, vs);
}

Subspace Subspace::with_vector(const Vec &v) const {
    auto vs = basis_vectors();
    vs.push_back(v);
    return span(d_, t_, vs);
}

Subspace Subspace::intersection(const Subspace &o) const {
    size_t a = dim();
    size_t b = o.dim();
    GFMatrix m(d_, t_, a + b);
    for (size_t i = 0; i < a; i++) {
        for (size_t j = 0; j < t_; j++) {
            m.set(j, i, basis_.get(i, j));
        }
    }
    for (size_t i = 0; i < b; i++) {
        for (size_t j = 0; j < t_; j++) {
            m.set(j, a + i, d_ - o.basis_.get(i, j));
        }
    }
    Subspace k = kernel(m);
    std::vector<Vec> vs;
    for (const auto &c : k.basis_vectors()) {
        Vec v(t_, 0);
        for (size_t i = 0; i < a; i++) {
            if (c[i]) {
                v = vec_add(v, vec_scale(basis_.row(i), c[i], d_), d_);
            }
        }
        vs.push_back(v);
    }
    return span(d_, t_, vs);
}

std::vector<Vec> Subspace::elements() const {
    uint64_t count = int_pow(static_cast<uint64_t>(d_), dim());
    std::vector<Vec> out;
    out.reserve(count);
    auto rows = basis_vectors();
    for (uint64_t code = 0; code < count; code++) {
        Vec c = vec_decode(code, d_, dim());
        Vec v(t_, 0);
        for (size_t i = 0; i < dim(); i++) {
            if (c[i]) {
                v = vec_add(v, vec_scale(rows[i], c[i], d_), d_);
            }
        }
        out.push_back(std::move(v));
    }
    return out;
}

Subspace Subspace::image(const GFMatrix &m) const {
    std::vector<Vec> vs;
    for (size_t i = 0; i < dim(); i++) {
        vs.push_back(m.apply(basis_.row(i)));
    }
    return span(d_, m.rows(), vs);
}

bool Subspace::operator<(const Subspace &o) const {
    if (dim() != o.dim()) {
        return dim() < o.dim();
    }
    return basis_ < o.basis_;
}

std::string Subspace::key() const {
    std::string s = std::to_string(d_) + ":" + std::to_string(t_) + ":";
    s += basis_.str();
    return s;
}

nlohmann::json Subspace::to_json() const {
    return {{"d", d_}, {"t", t_}, {"rows", basis_.to_strings()}};
}

Subspace Subspace::from_json(const nlohmann::json &j) {
    int d = j.at("d").get<int>();
    size_t t = j.at("t").get<size_t>();
    std::vector<Vec> rows;
    for (const auto &r : j.at("rows")) {
        Vec v = vec_from_string(r.get<std::string>());
        if (v.size() != t) {
            throw std::invalid_argument("Subspace JSON: row length differs from t");
        }
        for (auto x : v) {
            if (x >= d) {
                throw std::invalid_argument("Subspace JSON: digit out of range");
            }
        }
        rows.push_back(v);
    }
    return span(d, t, rows);
}

Subspace kernel(const GFMatrix &m) {
    std::vector<size_t> piv;
    GFMatrix r = rref(m, &piv);
    int d = m.d();
    size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (size_t p : piv) {
        is_pivot[p] = true;
    }
    std::vector<Vec> vs;
    for (size_t f = 0; f < n; f++) {
        if (is_pivot[f]) {
            continue;
        }
        Vec x(n, 0);
        x[f] = 1;
        for (size_t i = 0; i < piv.size(); i++) {
            x[piv[i]] = static_cast<uint8_t>((d - r.get(i, f)) % d);
        }
        vs.push_back(x);
    }
    return Subspace::span(d, n, vs);
}

Subspace orthocomplement(const Subspace &n, const GFMatrix &g) {
    if (g.rows() != n.ambient_dim() || g.cols() != n.ambient_dim()) {
        throw std::invalid_argument("orthocomplement: form dimension mismatch");
    }
    if (n.dim() == 0) {
        return Subspace::full(n.d(), n.ambient_dim());
    }
    return kernel(n.basis() * g);
}

Subspace pivot_complement(const Subspace &super, const Subspace &sub) {
    if (!super.contains(sub)) {
        throw std::invalid_argument("pivot_complement: not a subspace");
    }
    std::vector<Vec> vs;
    for (const auto &v : super.basis_vectors()) {
        vs.push_back(sub.reduce(v));
    }
    return Subspace::span(super.d(), super.ambient_dim(), vs);
}

QuotientSection::QuotientSection(const Subspace &n, const GFMatrix &g) : n_(n), perp_(orthocomplement(n, g)) {
    if (!perp_.contains(n_)) {
        throw std::invalid_argument("quotient_section: N is not contained in its orthocomplement");
    }
    complement_ = pivot_complement(perp_, n_);
}

Vec QuotientSection::lift(const Vec &coords) const {
    if (coords.size() != complement_.dim()) {
        throw std::invalid_argument("QuotientSection::lift: dimension mismatch");
    }
    int d = n_.d();
    Vec v(n_.ambient_dim(), 0);
    for (size_t i = 0; i < coords.size(); i++) {
        if (coords[i]) {
            v = vec_add(v, vec_scale(complement_.basis().row(i), coords[i], d), d);
        }
    }
    return v;
}

Vec QuotientSection::project(const Vec &v) const {
    Vec w = n_.reduce(v);
    Vec coords(complement_.dim());
    for (size_t i = 0; i < complement_.dim(); i++) {
        coords[i] = w[complement_.pivots()[i]];
    }
    if (lift(coords) != w) {
        throw std::invalid_argument("QuotientSection::project: vector not in N-perp");
    }
    return coords;
}

}  // namespace cliffdual
