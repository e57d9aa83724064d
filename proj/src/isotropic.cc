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

#include "cliffdual/isotropic.h"

#include <set>
#include <stdexcept>

namespace cliffdual {

namespace {

struct ModelSpace {
    size_t t;
    int d;
    GenQuadForm q;
    GFMatrix beta;
    Vec one;

    ModelSpace(size_t r, size_t s, int d) : t(r + s), d(d), q(model_form(r, s, d)), beta(q.polar.matrix), one(ones(r + s)) {
    }
    ModelSpace(const GenQuadForm &q, const Vec &fixed) : t(q.dim()), d(q.d), q(q), beta(q.polar.matrix), one(fixed) {
    }
    int64_t value(const Vec &u) const {
        return evaluate(q, u).value;
    }
    int64_t pair(const Vec &u, const Vec &v) const {
        return bilinear(u, beta, v);
    }
    bool usable(const Vec &v) const {
        return !vec_is_zero(v) && value(v) == 0 && pair(one, v) == 0;
    }
};

bool normalized(const Vec &v) {
    for (auto x : v) {
        if (x) {
            return x == 1;
        }
    }
    return false;
}

std::vector<Vec> isotropic_candidates(const ModelSpace &sp) {
    std::vector<Vec> out;
    uint64_t total = int_pow(static_cast<uint64_t>(sp.d), sp.t);
    for (uint64_t c = 1; c < total; c++) {
        Vec v = vec_decode(c, sp.d, sp.t);
        if (normalized(v) && sp.usable(v)) {
            out.push_back(std::move(v));
        }
    }
    return out;
}

bool orthogonal_to(const ModelSpace &sp, const Vec &v, const Subspace &n) {
    for (size_t i = 0; i < n.dim(); i++) {
        if (sp.pair(v, n.basis().row(i)) != 0) {
            return false;
        }
    }
    return true;
}

std::vector<Subspace> grow(const ModelSpace &sp, const std::vector<Vec> &cands, std::vector<Subspace> level, size_t from, size_t to,
                           bool forbid_ones) {
    for (size_t k = from; k < to; k++) {
        std::set<Subspace> next;
        for (const auto &n : level) {
            for (const auto &v : cands) {
                if (n.reduce(v) != v || !orthogonal_to(sp, v, n)) {
                    continue;
                }
                Subspace w = n.with_vector(v);
                if (forbid_ones && w.contains(sp.one)) {
                    continue;
                }
                next.insert(std::move(w));
            }
        }
        level.assign(next.begin(), next.end());
    }
    return level;
}

std::string cache_name(size_t r, size_t s, int d, size_t m, Stratum st) {
    return "grassmannian_r" + std::to_string(r) + "_s" + std::to_string(s) + "_d" + std::to_string(d) + "_m" + std::to_string(m) + "_" +
           stratum_name(st) + ".json";
}

}  // namespace

std::string stratum_name(Stratum s) {
    switch (s) {
        case Stratum::gr:
            return "gr";
        case Stratum::gr0:
            return "gr0";
        default:
            return "both";
    }
}

Stratum parse_stratum(const std::string &s) {
    if (s == "gr") {
        return Stratum::gr;
    }
    if (s == "gr0") {
        return Stratum::gr0;
    }
    if (s == "both") {
        return Stratum::both;
    }
    throw std::invalid_argument("unknown stratum '" + s + "' (expected gr, gr0 or both)");
}

IsoSubspace::IsoSubspace(const Subspace &n_, size_t r_, size_t s_) : r(r_), s(s_), d(n_.d()), n(n_) {
    if (n.ambient_dim() != r + s) {
        throw std::invalid_argument("IsoSubspace: ambient dimension differs from r + s");
    }
    ModelSpace sp(r, s, d);
    if (!is_isotropic(sp.q, n)) {
        throw std::invalid_argument("IsoSubspace: subspace is not isotropic for q_{r,s}");
    }
    for (const auto &v : n.basis_vectors()) {
        if (sp.pair(sp.one, v) != 0) {
            throw std::invalid_argument("IsoSubspace: subspace is not stochastic");
        }
    }
    quotient = QuotientSection(n, sp.beta);
    perp = quotient.perp();
    contains_ones = r + s > 0 && n.contains(sp.one);
    m = n.dim();
}

nlohmann::json IsoSubspace::to_json() const {
    return {{"r", r}, {"s", s}, {"d", d}, {"m", m}, {"contains_ones", contains_ones}, {"rows", n.basis().to_strings()}};
}

IsoSubspace IsoSubspace::from_json(const nlohmann::json &j) {
    size_t r = j.at("r").get<size_t>();
    size_t s = j.at("s").get<size_t>();
    int d = j.at("d").get<int>();
    std::vector<Vec> rows;
    for (const auto &row : j.at("rows")) {
        Vec v = vec_from_string(row.get<std::string>());
        if (v.size() != r + s) {
            throw std::invalid_argument("IsoSubspace JSON: row length differs from r + s");
        }
        rows.push_back(v);
    }
    return IsoSubspace(Subspace::span(d, r + s, rows), r, s);
}

bool within_enumeration_guard(size_t t, int d) {
    if (d == 2) {
        return t <= 12;
    }
    return d <= 7 ? t <= 6 : int_pow(static_cast<uint64_t>(d), t) <= 117649;
}

std::vector<IsoSubspace> enumerate_isotropic(size_t r, size_t s, int d, size_t m, Stratum stratum, const CacheDir &cache) {
    size_t t = r + s;
    if (!is_prime(d)) {
        throw std::invalid_argument("enumerate: d must be prime");
    }
    if (!within_enumeration_guard(t, d)) {
        throw std::length_error("enumerate: t = " + std::to_string(t) + " exceeds the enumeration guard for d = " + std::to_string(d));
    }
    std::string name = cache_name(r, s, d, m, stratum);
    if (auto hit = cache.load(name, "cliffdual.grassmannian")) {
        std::vector<IsoSubspace> out;
        for (const auto &j : *hit) {
            out.push_back(IsoSubspace::from_json(j));
        }
        return out;
    }
    ModelSpace sp(r, s, d);
    auto cands = isotropic_candidates(sp);
    std::vector<Subspace> found;
    if (stratum != Stratum::gr0) {
        auto gr = grow(sp, cands, {Subspace(d, t)}, 0, m, true);
        found.insert(found.end(), gr.begin(), gr.end());
    }
    if (stratum != Stratum::gr && m >= 1 && t > 0 && sp.usable(sp.one)) {
        auto gr0 = grow(sp, cands, {Subspace::span(d, t, {sp.one})}, 1, m, false);
        found.insert(found.end(), gr0.begin(), gr0.end());
    }
    std::sort(found.begin(), found.end());
    std::vector<IsoSubspace> out;
    nlohmann::json payload = nlohmann::json::array();
    for (const auto &n : found) {
        out.emplace_back(n, r, s);
        payload.push_back(out.back().to_json());
    }
    cache.store(name, "cliffdual.grassmannian", payload);
    return out;
}

size_t max_isotropic_dim(size_t r, size_t s, int d) {
    size_t t = r + s;
    if (!within_enumeration_guard(t, d)) {
        throw std::length_error("max_isotropic_dim: t exceeds the enumeration guard");
    }
    ModelSpace sp(r, s, d);
    auto cands = isotropic_candidates(sp);
    std::vector<Subspace> level = {Subspace(d, t)};
    size_t m = 0;
    while (true) {
        auto next = grow(sp, cands, level, m, m + 1, true);
        if (next.empty()) {
            return m;
        }
        level = std::move(next);
        m++;
    }
}

std::optional<IsoSubspace> find_isotropic(size_t r, size_t s, int d, size_t m, bool contains_ones) {
    size_t t = r + s;
    ModelSpace sp(r, s, d);
    Subspace start(d, t);
    if (contains_ones) {
        if (t == 0 || !sp.usable(sp.one)) {
            return std::nullopt;
        }
        start = Subspace::span(d, t, {sp.one});
    }
    if (m < start.dim()) {
        return std::nullopt;
    }
    auto cands = isotropic_candidates(sp);
    std::function<std::optional<Subspace>(const Subspace &, size_t)> rec = [&](const Subspace &n,
                                                                                size_t from) -> std::optional<Subspace> {
        if (n.dim() == m) {
            return n;
        }
        for (size_t k = from; k < cands.size(); k++) {
            const Vec &v = cands[k];
            if (n.contains(v) || !orthogonal_to(sp, v, n)) {
                continue;
            }
            Subspace w = n.with_vector(v);
            if (!contains_ones && w.contains(sp.one)) {
                continue;
            }
            if (auto hit = rec(w, k + 1)) {
                return hit;
            }
        }
        return std::nullopt;
    };
    auto hit = rec(start, 0);
    if (!hit) {
        return std::nullopt;
    }
    return IsoSubspace(*hit, r, s);
}

bool is_stochastic_isometry(const GFMatrix &o, size_t r, size_t s) {
    size_t t = r + s;
    if (o.rows() != t || o.cols() != t || rank(o) != t) {
        return false;
    }
    ModelSpace sp(r, s, o.d());
    if (o.apply(sp.one) != sp.one) {
        return false;
    }
    std::vector<Vec> cols;
    for (size_t i = 0; i < t; i++) {
        cols.push_back(o.col(i));
        if (sp.value(cols[i]) != sp.value(unit(t, i))) {
            return false;
        }
    }
    for (size_t i = 0; i < t; i++) {
        for (size_t j = i + 1; j < t; j++) {
            if (sp.pair(cols[i], cols[j]) != sp.beta.get(i, j)) {
                return false;
            }
        }
    }
    return true;
}

bool extend_isometry(size_t r, size_t s, int d, const std::vector<Vec> &source_prefix, const std::vector<Vec> &image_prefix,
                     const std::function<bool(const GFMatrix &)> &visit) {
    return extend_form_isometry(model_form(r, s, d), ones(r + s), source_prefix, image_prefix, visit);
}

bool extend_form_isometry(const GenQuadForm &q, const Vec &fixed, const std::vector<Vec> &source_prefix,
                          const std::vector<Vec> &image_prefix, const std::function<bool(const GFMatrix &)> &visit) {
    if (source_prefix.size() != image_prefix.size() || fixed.size() != q.dim()) {
        throw std::invalid_argument("extend_isometry: prefix sizes differ");
    }
    size_t t = q.dim();
    int d = q.d;
    ModelSpace sp(q, fixed);
    std::vector<Vec> src = source_prefix;
    std::vector<Vec> img = image_prefix;
    Subspace src_span = Subspace::span(d, t, src);
    if (src_span.dim() != src.size() || Subspace::span(d, t, img).dim() != img.size()) {
        return false;
    }
    if (!vec_is_zero(sp.one) && !src_span.contains(sp.one)) {
        src.push_back(sp.one);
        img.push_back(sp.one);
        src_span = src_span.with_vector(sp.one);
    }
    for (size_t i = 0; i < src.size(); i++) {
        if (sp.value(src[i]) != sp.value(img[i])) {
            return false;
        }
        for (size_t j = 0; j < i; j++) {
            if (sp.pair(src[i], src[j]) != sp.pair(img[i], img[j])) {
                return false;
            }
        }
    }
    size_t seeded = src.size();
    for (size_t i = 0; i < t && src.size() < t; i++) {
        Vec e = unit(t, i);
        if (!src_span.contains(e)) {
            src.push_back(e);
            src_span = src_span.with_vector(e);
        }
    }
    GFMatrix bmat(d, t, t);
    for (size_t i = 0; i < t; i++) {
        for (size_t k = 0; k < t; k++) {
            bmat.set(k, i, src[i][k]);
        }
    }
    GFMatrix binv = *inverse(bmat);

    uint64_t total = int_pow(static_cast<uint64_t>(d), t);
    std::vector<std::vector<Vec>> cand(t);
    for (uint64_t c = 1; c < total; c++) {
        Vec v = vec_decode(c, d, t);
        int64_t val = sp.value(v);
        for (size_t i = seeded; i < t; i++) {
            if (sp.value(src[i]) == val) {
                cand[i].push_back(v);
            }
        }
    }
    std::vector<Subspace> spans(t + 1);
    spans[seeded] = Subspace::span(d, t, img);
    img.resize(t);
    if (t == 0) {
        return visit(GFMatrix(d, 0, 0));
    }
    std::function<bool(size_t)> rec = [&](size_t i) -> bool {
        if (i == t) {
            GFMatrix w(d, t, t);
            for (size_t c = 0; c < t; c++) {
                for (size_t k = 0; k < t; k++) {
                    w.set(k, c, img[c][k]);
                }
            }
            GFMatrix o = w * binv;
            if (o.apply(sp.one) != sp.one) {
                return false;
            }
            return visit(o);
        }
        for (const auto &v : cand[i]) {
            bool ok = true;
            for (size_t j = 0; j < i && ok; j++) {
                ok = sp.pair(v, img[j]) == sp.pair(src[i], src[j]);
            }
            if (!ok || spans[i].contains(v)) {
                continue;
            }
            img[i] = v;
            spans[i + 1] = spans[i].with_vector(v);
            if (rec(i + 1)) {
                return true;
            }
        }
        return false;
    };
    return rec(seeded);
}

std::optional<GFMatrix> witt_transporter(const IsoSubspace &a, const IsoSubspace &b) {
    if (a.r != b.r || a.s != b.s || a.d != b.d || a.m != b.m || a.contains_ones != b.contains_ones) {
        return std::nullopt;
    }
    int d = a.d;
    size_t t = a.t();
    Vec one = ones(t);
    auto basis_mod_ones = [&](const IsoSubspace &x) {
        std::vector<Vec> out;
        if (!x.contains_ones) {
            return x.n.basis_vectors();
        }
        Subspace line = Subspace::span(d, t, {one});
        for (const auto &v : pivot_complement(x.n, line).basis_vectors()) {
            out.push_back(v);
        }
        return out;
    };
    std::vector<Vec> src = basis_mod_ones(a);
    std::vector<Vec> dst = basis_mod_ones(b);
    std::optional<GFMatrix> found;
    auto grab = [&](const GFMatrix &o) {
        found = o;
        return true;
    };
    if (extend_isometry(a.r, a.s, d, src, dst, grab)) {
        return found;
    }
    // Other ordered bases of N' (modulo 1_t when 1_t is in N').
    Subspace base = a.contains_ones ? Subspace::span(d, t, {one}) : Subspace(d, t);
    auto elems = b.n.elements();
    std::vector<Vec> pick;
    size_t tried = 0;
    const size_t max_seeds = 20000;
    std::function<bool(Subspace)> rec = [&](Subspace span) -> bool {
        if (pick.size() == src.size()) {
            tried++;
            return extend_isometry(a.r, a.s, d, src, pick, grab);
        }
        for (const auto &v : elems) {
            if (tried >= max_seeds) {
                return false;
            }
            if (span.contains(v)) {
                continue;
            }
            pick.push_back(v);
            if (rec(span.with_vector(v))) {
                return true;
            }
            pick.pop_back();
        }
        return false;
    };
    if (rec(base)) {
        return found;
    }
    if (t <= 5) {
        extend_isometry(a.r, a.s, d, {}, {}, [&](const GFMatrix &o) {
            if (a.n.image(o) == b.n) {
                found = o;
                return true;
            }
            return false;
        });
    }
    return found;
}

}  // namespace cliffdual
