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

#include "cliffdual/orthostoch.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace cliffdual {

namespace {

using ModMatrix = std::vector<std::vector<uint64_t>>;

/// Null space of a (rows x cols) matrix mod p, as column vectors.
std::vector<std::vector<uint64_t>> null_space_mod(ModMatrix a, size_t cols, uint64_t p) {
    size_t rows = a.size();
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; c++) {
        size_t piv = r;
        while (piv < rows && a[piv][c] == 0) {
            piv++;
        }
        if (piv == rows) {
            continue;
        }
        std::swap(a[piv], a[r]);
        uint64_t inv = inv_mod(a[r][c], p);
        for (auto &x : a[r]) {
            x = x * inv % p;
        }
        for (size_t i = 0; i < rows; i++) {
            if (i != r && a[i][c]) {
                uint64_t f = a[i][c];
                for (size_t j = 0; j < cols; j++) {
                    a[i][j] = (a[i][j] + (p - f) * a[r][j]) % p;
                }
            }
        }
        pivots.push_back(c);
        r++;
    }
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivots) {
        is_pivot[c] = true;
    }
    std::vector<std::vector<uint64_t>> out;
    for (size_t f = 0; f < cols; f++) {
        if (is_pivot[f]) {
            continue;
        }
        std::vector<uint64_t> v(cols, 0);
        v[f] = 1;
        for (size_t i = 0; i < pivots.size(); i++) {
            v[pivots[i]] = (p - a[i][f]) % p;
        }
        out.push_back(v);
    }
    return out;
}

/// Coordinates of y in the column basis b (b has full column rank and contains y in its span).
std::vector<uint64_t> coords_mod(const std::vector<std::vector<uint64_t>> &b, const std::vector<uint64_t> &y, uint64_t p) {
    size_t n = y.size();
    size_t k = b.size();
    ModMatrix a(n, std::vector<uint64_t>(k + 1));
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < k; j++) {
            a[i][j] = b[j][i];
        }
        a[i][k] = (p - y[i] % p) % p;
    }
    auto ns = null_space_mod(a, k + 1, p);
    for (const auto &v : ns) {
        if (v[k] != 0) {
            uint64_t inv = inv_mod(v[k], p);
            std::vector<uint64_t> c(k);
            for (size_t j = 0; j < k; j++) {
                c[j] = v[j] * inv % p;
            }
            return c;
        }
    }
    throw std::logic_error("character_table: eigenspace not invariant");
}

std::string matrix_key(const GFMatrix &g) {
    std::string s;
    s.reserve(g.rows() * g.cols());
    for (size_t i = 0; i < g.rows(); i++) {
        for (size_t j = 0; j < g.cols(); j++) {
            s.push_back(static_cast<char>(g.get(i, j)));
        }
    }
    return s;
}

GFMatrix columns_to_matrix(int d, const std::vector<Vec> &cols) {
    size_t n = cols.empty() ? 0 : cols[0].size();
    GFMatrix m(d, n, cols.size());
    for (size_t c = 0; c < cols.size(); c++) {
        for (size_t r = 0; r < n; r++) {
            m.set(r, c, cols[c][r]);
        }
    }
    return m;
}

std::vector<size_t> closure(const FiniteMatrixGroup &g, const std::vector<size_t> &gens) {
    std::vector<bool> seen(g.size(), false);
    std::vector<size_t> out = {g.identity()};
    seen[g.identity()] = true;
    for (size_t i = 0; i < out.size(); i++) {
        for (size_t x : gens) {
            size_t y = g.mul(out[i], x);
            if (!seen[y]) {
                seen[y] = true;
                out.push_back(y);
            }
        }
    }
    return out;
}

struct CharacterRow {
    std::vector<CycScalar> values;
    int64_t degree;
    std::vector<int> partition;
};

void sort_rows(std::vector<CharacterRow> &rows) {
    auto trivial = [](const CharacterRow &r) {
        for (const auto &v : r.values) {
            if (v != CycScalar::one(v.field())) {
                return false;
            }
        }
        return true;
    };
    std::vector<std::pair<std::tuple<int64_t, bool, std::string>, size_t>> keys;
    for (size_t i = 0; i < rows.size(); i++) {
        std::string s;
        for (const auto &v : rows[i].values) {
            s += v.to_json().dump() + ";";
        }
        keys.push_back({{rows[i].degree, !trivial(rows[i]), s}, i});
    }
    std::sort(keys.begin(), keys.end());
    std::vector<CharacterRow> out;
    for (const auto &k : keys) {
        out.push_back(rows[k.second]);
    }
    rows = std::move(out);
}

std::vector<CharacterRow> dixon(const FiniteMatrixGroup &g, const std::vector<ConjugacyClass> &classes, const std::vector<size_t> &class_of) {
    size_t k = classes.size();
    uint64_t order = g.size();
    uint64_t e = 1;
    for (const auto &c : classes) {
        e = std::lcm(e, static_cast<uint64_t>(c.order));
    }
    uint64_t bound = 2 * static_cast<uint64_t>(std::ceil(std::sqrt(static_cast<double>(order)))) + 1;
    uint64_t p = prime_one_mod(e, std::max<uint64_t>(bound, 3));
    uint64_t z = root_of_unity_mod(e, p);

    std::vector<ModMatrix> a(k, ModMatrix(k, std::vector<uint64_t>(k, 0)));
    for (size_t s = 0; s < k; s++) {
        size_t zs = classes[s].representative;
        for (size_t x = 0; x < g.size(); x++) {
            size_t y = g.mul(g.inv(x), zs);
            a[class_of[x]][class_of[y]][s]++;
        }
    }
    for (auto &m : a) {
        for (auto &row : m) {
            for (auto &v : row) {
                v %= p;
            }
        }
    }

    std::vector<std::vector<std::vector<uint64_t>>> spaces;
    {
        std::vector<std::vector<uint64_t>> full;
        for (size_t i = 0; i < k; i++) {
            std::vector<uint64_t> v(k, 0);
            v[i] = 1;
            full.push_back(v);
        }
        spaces.push_back(full);
    }
    for (size_t j = 0; j < k; j++) {
        std::vector<std::vector<std::vector<uint64_t>>> next;
        for (const auto &space : spaces) {
            size_t dv = space.size();
            if (dv == 1) {
                next.push_back(space);
                continue;
            }
            // Restriction R with A_j b_c = sum_i R[i][c] b_i.
            ModMatrix rmat(dv, std::vector<uint64_t>(dv));
            for (size_t c = 0; c < dv; c++) {
                std::vector<uint64_t> y(k, 0);
                for (size_t r = 0; r < k; r++) {
                    uint64_t acc = 0;
                    for (size_t s = 0; s < k; s++) {
                        acc = (acc + a[j][r][s] * space[c][s]) % p;
                    }
                    y[r] = acc;
                }
                auto co = coords_mod(space, y, p);
                for (size_t i = 0; i < dv; i++) {
                    rmat[i][c] = co[i];
                }
            }
            size_t covered = 0;
            for (uint64_t lambda = 0; lambda < p && covered < dv; lambda++) {
                ModMatrix shifted = rmat;
                for (size_t i = 0; i < dv; i++) {
                    shifted[i][i] = (shifted[i][i] + p - lambda) % p;
                }
                auto ns = null_space_mod(shifted, dv, p);
                if (ns.empty()) {
                    continue;
                }
                covered += ns.size();
                std::vector<std::vector<uint64_t>> sub;
                for (const auto &cvec : ns) {
                    std::vector<uint64_t> v(k, 0);
                    for (size_t i = 0; i < dv; i++) {
                        for (size_t s = 0; s < k; s++) {
                            v[s] = (v[s] + cvec[i] * space[i][s]) % p;
                        }
                    }
                    sub.push_back(v);
                }
                next.push_back(sub);
            }
            if (covered != dv) {
                throw std::logic_error("character_table: class matrix not diagonalizable mod p");
            }
        }
        spaces = std::move(next);
    }
    if (spaces.size() != k) {
        throw std::logic_error("character_table: simultaneous eigenspaces not one-dimensional");
    }

    std::vector<size_t> inverse_class(k);
    for (size_t s = 0; s < k; s++) {
        inverse_class[s] = class_of[g.inv(classes[s].representative)];
    }
    const CycField &field = CycField::get(static_cast<int64_t>(e));
    std::vector<CharacterRow> rows;
    for (const auto &space : spaces) {
        std::vector<uint64_t> w = space[0];
        uint64_t inv0 = inv_mod(w[0], p);
        for (auto &x : w) {
            x = x * inv0 % p;
        }
        uint64_t denom = 0;
        for (size_t s = 0; s < k; s++) {
            denom = (denom + w[s] * w[inverse_class[s]] % p * inv_mod(classes[s].size % p, p)) % p;
        }
        uint64_t deg_sq = order % p * inv_mod(denom, p) % p;
        int64_t degree = 0;
        for (uint64_t n = 1; n * n <= order; n++) {
            if (n * n % p == deg_sq) {
                degree = static_cast<int64_t>(n);
                break;
            }
        }
        if (degree == 0) {
            throw std::logic_error("character_table: degree not recovered");
        }
        std::vector<uint64_t> chi(k);
        for (size_t s = 0; s < k; s++) {
            chi[s] = static_cast<uint64_t>(degree) % p * w[s] % p * inv_mod(classes[s].size % p, p) % p;
        }
        CharacterRow row;
        row.degree = degree;
        for (size_t s = 0; s < k; s++) {
            uint64_t o = classes[s].order;
            uint64_t zo = pow_mod(z, e / o, p);
            std::vector<uint64_t> powers(o);
            size_t x = g.identity();
            for (uint64_t l = 0; l < o; l++) {
                powers[l] = chi[class_of[x]];
                x = g.mul(x, classes[s].representative);
            }
            CycScalar value(field);
            uint64_t inv_o = inv_mod(o % p, p);
            int64_t total = 0;
            for (uint64_t j = 0; j < o; j++) {
                uint64_t acc = 0;
                for (uint64_t l = 0; l < o; l++) {
                    uint64_t root = pow_mod(zo, (o - (j * l) % o) % o, p);
                    acc = (acc + powers[l] * root) % p;
                }
                uint64_t mult = acc * inv_o % p;
                if (mult > static_cast<uint64_t>(degree)) {
                    throw std::logic_error("character_table: eigenvalue multiplicity out of range");
                }
                total += static_cast<int64_t>(mult);
                CycScalar term = CycScalar::root(field, static_cast<int64_t>(j * (e / o)));
                term.scale(Rational(static_cast<int64_t>(mult)));
                value += term;
            }
            if (total != degree) {
                throw std::logic_error("character_table: multiplicities do not sum to the degree");
            }
            row.values.push_back(value);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

/// A vector orbit of size k with k! = |G| on which G acts faithfully, as permutations per element.
std::optional<std::vector<std::vector<size_t>>> symmetric_orbit(const FiniteMatrixGroup &g) {
    uint64_t order = g.size();
    int k = 1;
    uint64_t f = 1;
    while (f < order) {
        k++;
        f *= static_cast<uint64_t>(k);
    }
    if (f != order || g.t() == 0) {
        return std::nullopt;
    }
    auto gens = g.generators();
    uint64_t total = int_pow(static_cast<uint64_t>(g.d()), g.t());
    if (total > 1u << 20) {
        return std::nullopt;
    }
    std::vector<bool> seen(total, false);
    for (uint64_t c = 0; c < total; c++) {
        if (seen[c]) {
            continue;
        }
        std::vector<Vec> orbit = {vec_decode(c, g.d(), g.t())};
        seen[c] = true;
        for (size_t i = 0; i < orbit.size(); i++) {
            for (size_t x : gens) {
                Vec y = g[x].apply(orbit[i]);
                uint64_t code = vec_code(y, g.d());
                if (!seen[code]) {
                    seen[code] = true;
                    orbit.push_back(y);
                }
            }
        }
        if (orbit.size() != static_cast<size_t>(k)) {
            continue;
        }
        std::map<uint64_t, size_t> pos;
        for (size_t i = 0; i < orbit.size(); i++) {
            pos[vec_code(orbit[i], g.d())] = i;
        }
        std::vector<std::vector<size_t>> perms;
        std::set<std::vector<size_t>> distinct;
        for (size_t e = 0; e < g.size(); e++) {
            std::vector<size_t> perm(orbit.size());
            for (size_t i = 0; i < orbit.size(); i++) {
                perm[i] = pos.at(vec_code(g[e].apply(orbit[i]), g.d()));
            }
            distinct.insert(perm);
            perms.push_back(perm);
        }
        if (distinct.size() == g.size()) {
            return perms;
        }
    }
    return std::nullopt;
}

std::vector<int> cycle_type(const std::vector<size_t> &perm) {
    std::vector<bool> seen(perm.size(), false);
    std::vector<int> out;
    for (size_t i = 0; i < perm.size(); i++) {
        if (seen[i]) {
            continue;
        }
        int len = 0;
        for (size_t j = i; !seen[j]; j = perm[j]) {
            seen[j] = true;
            len++;
        }
        out.push_back(len);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

}  // namespace

FiniteMatrixGroup::FiniteMatrixGroup(int d, size_t t, std::vector<GFMatrix> elements) : d_(d), t_(t), elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    for (size_t i = 0; i < elements_.size(); i++) {
        if (elements_[i].rows() != t || elements_[i].cols() != t || elements_[i].d() != d) {
            throw std::invalid_argument("FiniteMatrixGroup: element of the wrong shape");
        }
        if (!index_.emplace(key(elements_[i]), i).second) {
            throw std::invalid_argument("FiniteMatrixGroup: duplicate element");
        }
    }
    auto id = find(GFMatrix::identity(d, t));
    if (!id) {
        throw std::invalid_argument("FiniteMatrixGroup: identity missing");
    }
    identity_ = *id;
}

std::string FiniteMatrixGroup::key(const GFMatrix &g) {
    return matrix_key(g);
}

std::optional<size_t> FiniteMatrixGroup::find(const GFMatrix &g) const {
    auto it = index_.find(key(g));
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

size_t FiniteMatrixGroup::index_of(const GFMatrix &g) const {
    auto i = find(g);
    if (!i) {
        throw std::logic_error("FiniteMatrixGroup: element not in group");
    }
    return *i;
}

size_t FiniteMatrixGroup::mul(size_t a, size_t b) const {
    return index_of(elements_[a] * elements_[b]);
}

size_t FiniteMatrixGroup::inv(size_t a) const {
    if (inverse_.empty()) {
        inverse_.assign(size(), SIZE_MAX);
    }
    if (inverse_[a] == SIZE_MAX) {
        auto m = inverse(elements_[a]);
        if (!m) {
            throw std::logic_error("FiniteMatrixGroup: singular element");
        }
        inverse_[a] = index_of(*m);
    }
    return inverse_[a];
}

size_t FiniteMatrixGroup::order_of(size_t a) const {
    size_t n = 1;
    size_t x = a;
    while (x != identity_) {
        x = mul(x, a);
        n++;
    }
    return n;
}

bool FiniteMatrixGroup::spot_check_closure(size_t samples, uint64_t seed) const {
    std::mt19937_64 rng(seed);
    for (size_t k = 0; k < samples; k++) {
        const GFMatrix &a = elements_[rng() % size()];
        const GFMatrix &b = elements_[rng() % size()];
        if (!find(a * b)) {
            return false;
        }
        auto ai = inverse(a);
        if (!ai || !find(*ai)) {
            return false;
        }
    }
    return true;
}

std::vector<size_t> FiniteMatrixGroup::generators() const {
    std::vector<size_t> gens;
    std::vector<bool> in_sub(size(), false);
    in_sub[identity_] = true;
    size_t covered = 1;
    for (size_t i = 0; i < size() && covered < size(); i++) {
        if (in_sub[i]) {
            continue;
        }
        gens.push_back(i);
        auto sub = closure(*this, gens);
        for (size_t x : sub) {
            in_sub[x] = true;
        }
        covered = sub.size();
    }
    return gens;
}

nlohmann::json FiniteMatrixGroup::to_json() const {
    nlohmann::json els = nlohmann::json::array();
    for (const auto &g : elements_) {
        els.push_back(g.to_strings());
    }
    return {{"d", d_}, {"t", t_}, {"order", size()}, {"elements", els}};
}

FiniteMatrixGroup FiniteMatrixGroup::from_json(const nlohmann::json &j) {
    int d = j.at("d").get<int>();
    size_t t = j.at("t").get<size_t>();
    std::vector<GFMatrix> els;
    for (const auto &rows : j.at("elements")) {
        auto strs = rows.get<std::vector<std::string>>();
        els.push_back(t == 0 ? GFMatrix(d, 0, 0) : GFMatrix::from_strings(d, strs));
    }
    return FiniteMatrixGroup(d, t, els);
}

bool within_group_guard(size_t t, int d) {
    if (d == 2) {
        return t <= 7;
    }
    if (d <= 5) {
        return t <= 4;
    }
    return t <= 3 && d <= 13;
}

FiniteMatrixGroup isometry_group(const GenQuadForm &q, const Vec &fixed) {
    std::vector<GFMatrix> els;
    extend_form_isometry(q, fixed, {}, {}, [&](const GFMatrix &o) {
        els.push_back(o);
        return false;
    });
    return FiniteMatrixGroup(q.d, q.dim(), els);
}

FiniteMatrixGroup enumerate_O1(size_t r, size_t s, int d, const CacheDir &cache) {
    size_t t = r + s;
    if (!is_prime(d)) {
        throw std::invalid_argument("enumerate_O1: d must be prime");
    }
    if (!within_group_guard(t, d)) {
        throw std::length_error("enumerate_O1: t = " + std::to_string(t) + " exceeds the group guard for d = " + std::to_string(d));
    }
    std::string name = "o1_r" + std::to_string(r) + "_s" + std::to_string(s) + "_d" + std::to_string(d) + ".json";
    if (auto hit = cache.load(name, "cliffdual.group")) {
        return FiniteMatrixGroup::from_json(*hit);
    }
    GenQuadForm q = model_form(r, s, d);
    FiniteMatrixGroup g;
    if (d == 2) {
        g = isometry_group(q, Vec(t, 0));
        for (const auto &o : g.elements()) {
            if (o.apply(ones(t)) != ones(t)) {
                throw std::logic_error("enumerate_O1: isometry of q_{r,s} moves 1_t");
            }
        }
    } else {
        g = isometry_group(q, ones(t));
    }
    cache.store(name, "cliffdual.group", g.to_json());
    return g;
}

FiniteMatrixGroup stabilizer(const FiniteMatrixGroup &g, const Subspace &n) {
    std::vector<GFMatrix> els;
    for (const auto &o : g.elements()) {
        if (n.image(o) == n) {
            els.push_back(o);
        }
    }
    return FiniteMatrixGroup(g.d(), g.t(), els);
}

std::vector<std::vector<size_t>> permutation_action(const FiniteMatrixGroup &g, const std::vector<Subspace> &points) {
    std::map<Subspace, size_t> pos;
    for (size_t i = 0; i < points.size(); i++) {
        pos[points[i]] = i;
    }
    std::vector<std::vector<size_t>> out;
    for (const auto &o : g.elements()) {
        std::vector<size_t> perm(points.size());
        for (size_t i = 0; i < points.size(); i++) {
            auto it = pos.find(points[i].image(o));
            if (it == pos.end()) {
                throw std::invalid_argument("permutation_action: points not preserved");
            }
            perm[i] = it->second;
        }
        out.push_back(perm);
    }
    return out;
}

GFMatrix induced_matrix(const GFMatrix &o, const QuotientSection &section) {
    size_t k = section.quotient_dim();
    std::vector<Vec> cols;
    for (size_t i = 0; i < k; i++) {
        cols.push_back(section.project(o.apply(section.lift(unit(k, i)))));
    }
    if (k == 0) {
        return GFMatrix(o.d(), 0, 0);
    }
    return columns_to_matrix(o.d(), cols);
}

QuotientAction quotient_action(const FiniteMatrixGroup &stab, const IsoSubspace &n) {
    QuotientAction out;
    out.q_n = restrict_to_quotient(model_form(n.r, n.s, n.d), n.quotient);
    out.ones_class = n.quotient.project(ones(n.t()));
    size_t k = n.quotient.quotient_dim();
    std::set<GFMatrix> distinct;
    for (size_t i = 0; i < stab.size(); i++) {
        if (n.n.image(stab[i]) != n.n) {
            throw std::invalid_argument("quotient_action: element does not preserve N");
        }
        GFMatrix m = induced_matrix(stab[i], n.quotient);
        if (m == GFMatrix::identity(n.d, k)) {
            out.kernel.push_back(i);
        }
        distinct.insert(m);
        out.images.push_back(std::move(m));
    }
    out.image_group = FiniteMatrixGroup(n.d, k, std::vector<GFMatrix>(distinct.begin(), distinct.end()));
    out.target_group = isometry_group(out.q_n, out.ones_class);
    bool contained = true;
    for (const auto &m : out.image_group.elements()) {
        contained = contained && out.target_group.find(m).has_value();
    }
    if (!contained) {
        throw std::logic_error("quotient_action: induced map is not an isometry of q_N");
    }
    out.surjective = out.image_group.size() == out.target_group.size();
    return out;
}

SubgroupGN subgroup_G_N(const IsoSubspace &n) {
    int d = n.d;
    size_t t = n.t();
    const QuotientSection &sec = n.quotient;
    size_t k = sec.quotient_dim();
    GenQuadForm qn = restrict_to_quotient(model_form(n.r, n.s, d), sec);
    FiniteMatrixGroup target = isometry_group(qn, sec.project(ones(t)));
    Subspace k0 = pivot_complement(Subspace::full(d, t), n.perp);
    auto k0_rows = k0.basis_vectors();
    auto perp_elems = n.perp.elements();
    auto n_rows = n.n.basis_vectors();
    auto l_rows = sec.complement().basis_vectors();
    size_t m = k0_rows.size();
    uint64_t choices = int_pow(perp_elems.size(), m);
    if (choices > (uint64_t{1} << 16)) {
        throw std::length_error("subgroup_G_N: too many complements to search");
    }

    SubgroupGN best;
    best.target_order = target.size();
    size_t best_size = 0;
    for (uint64_t code = 0; code < choices; code++) {
        std::vector<Vec> kb;
        uint64_t c = code;
        for (size_t i = 0; i < m; i++) {
            kb.push_back(vec_add(k0_rows[i], perp_elems[c % perp_elems.size()], d));
            c /= perp_elems.size();
        }
        std::vector<Vec> src = kb;
        src.insert(src.end(), n_rows.begin(), n_rows.end());
        src.insert(src.end(), l_rows.begin(), l_rows.end());
        GFMatrix bmat = columns_to_matrix(d, src);
        auto binv = inverse(bmat);
        if (!binv) {
            throw std::logic_error("subgroup_G_N: K_N + N + T_N is not a basis");
        }
        std::vector<GFMatrix> els;
        std::vector<GFMatrix> restricted;
        for (const auto &ot : target.elements()) {
            std::vector<Vec> img(src.begin(), src.begin() + static_cast<std::ptrdiff_t>(2 * m));
            for (size_t j = 0; j < k; j++) {
                img.push_back(sec.lift(ot.col(j)));
            }
            GFMatrix o = columns_to_matrix(d, img) * *binv;
            if (is_stochastic_isometry(o, n.r, n.s)) {
                els.push_back(o);
                restricted.push_back(ot);
            }
        }
        if (els.size() > best_size) {
            best_size = els.size();
            best.k = Subspace::span(d, t, kb);
            best.group = FiniteMatrixGroup(d, t, els);
            best.restricted.clear();
            for (const auto &o : best.group.elements()) {
                best.restricted.push_back(induced_matrix(o, sec));
            }
            if (best_size == target.size()) {
                break;
            }
        }
    }
    return best;
}

std::vector<ConjugacyClass> conjugacy_classes(const FiniteMatrixGroup &g) {
    auto gens = g.generators();
    std::vector<size_t> gen_inv;
    for (size_t x : gens) {
        gen_inv.push_back(g.inv(x));
    }
    std::vector<bool> seen(g.size(), false);
    std::vector<ConjugacyClass> out;
    auto orbit_of = [&](size_t start) {
        ConjugacyClass c;
        c.members = {start};
        seen[start] = true;
        for (size_t i = 0; i < c.members.size(); i++) {
            for (size_t j = 0; j < gens.size(); j++) {
                size_t y = g.mul(g.mul(gens[j], c.members[i]), gen_inv[j]);
                if (!seen[y]) {
                    seen[y] = true;
                    c.members.push_back(y);
                }
            }
        }
        std::sort(c.members.begin(), c.members.end());
        c.representative = c.members[0];
        c.size = c.members.size();
        c.order = g.order_of(start);
        return c;
    };
    out.push_back(orbit_of(g.identity()));
    for (size_t i = 0; i < g.size(); i++) {
        if (!seen[i]) {
            out.push_back(orbit_of(i));
        }
    }
    return out;
}

std::vector<std::vector<int>> partitions_of(int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int max_part) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rest, max_part); p >= 1; p--) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(k, k);
    return out;
}

int64_t symmetric_character(const std::vector<int> &lambda, const std::vector<int> &mu) {
    int total_l = std::accumulate(lambda.begin(), lambda.end(), 0);
    int total_m = std::accumulate(mu.begin(), mu.end(), 0);
    if (total_l != total_m) {
        throw std::invalid_argument("symmetric_character: sizes differ");
    }
    size_t len = lambda.size();
    std::set<int> beads;
    for (size_t i = 0; i < len; i++) {
        beads.insert(lambda[i] + static_cast<int>(len - 1 - i));
    }
    std::function<int64_t(std::set<int> &, size_t)> rec = [&](std::set<int> &b, size_t idx) -> int64_t {
        if (idx == mu.size()) {
            return 1;
        }
        int r = mu[idx];
        int64_t acc = 0;
        std::vector<int> current(b.begin(), b.end());
        for (int x : current) {
            int y = x - r;
            if (y < 0 || b.count(y)) {
                continue;
            }
            int between = 0;
            for (int z : current) {
                between += z > y && z < x;
            }
            b.erase(x);
            b.insert(y);
            acc += (between % 2 ? -1 : 1) * rec(b, idx + 1);
            b.erase(y);
            b.insert(x);
        }
        return acc;
    };
    return rec(beads, 0);
}

CharacterTable character_table(const FiniteMatrixGroup &g, CharacterMethod method) {
    if (g.size() > 10000) {
        throw std::length_error("character_table: group order above 10^4");
    }
    CharacterTable table;
    table.group_order = g.size();
    table.classes = conjugacy_classes(g);
    table.class_of.assign(g.size(), 0);
    for (size_t c = 0; c < table.classes.size(); c++) {
        for (size_t x : table.classes[c].members) {
            table.class_of[x] = c;
        }
    }
    std::vector<CharacterRow> rows;
    std::optional<std::vector<std::vector<size_t>>> perms;
    if (method != CharacterMethod::dixon) {
        perms = symmetric_orbit(g);
        if (!perms && method == CharacterMethod::symmetric) {
            throw std::invalid_argument("character_table: no faithful action identifying the group with a symmetric group");
        }
    }
    if (perms) {
        int k = static_cast<int>((*perms)[0].size());
        const CycField &q = CycField::get(1);
        for (const auto &lambda : partitions_of(k)) {
            CharacterRow row;
            row.partition = lambda;
            for (const auto &c : table.classes) {
                row.values.push_back(CycScalar(q, Rational(symmetric_character(lambda, cycle_type((*perms)[c.representative])))));
            }
            row.degree = symmetric_character(lambda, std::vector<int>(static_cast<size_t>(k), 1));
            rows.push_back(std::move(row));
        }
        table.method = "murnaghan-nakayama";
    } else {
        rows = dixon(g, table.classes, table.class_of);
        table.method = "dixon";
    }
    sort_rows(rows);
    for (auto &row : rows) {
        table.values.push_back(row.values);
        table.degrees.push_back(row.degree);
        if (!row.partition.empty()) {
            table.partitions.push_back(row.partition);
        }
    }
    return table;
}

nlohmann::json CharacterTable::to_json() const {
    nlohmann::json cls = nlohmann::json::array();
    for (const auto &c : classes) {
        cls.push_back({{"representative", c.representative}, {"size", c.size}, {"order", c.order}});
    }
    nlohmann::json chars = nlohmann::json::array();
    for (size_t i = 0; i < values.size(); i++) {
        nlohmann::json row = nlohmann::json::array();
        for (const auto &v : values[i]) {
            row.push_back(v.to_json());
        }
        nlohmann::json entry = {{"degree", degrees[i]}, {"values", row}};
        if (i < partitions.size()) {
            entry["partition"] = partitions[i];
        }
        chars.push_back(entry);
    }
    return {{"group_order", group_order}, {"method", method}, {"classes", cls}, {"characters", chars}};
}

std::map<size_t, uint64_t> orthonormal_basis_strata(size_t t) {
    if (t == 0 || t > 8) {
        throw std::length_error("orthonormal_basis_strata: t must be in [1, 8]");
    }
    std::vector<Vec> odd;
    for (uint64_t c = 1; c < (uint64_t{1} << t); c++) {
        Vec v = vec_decode(c, 2, t);
        if (dot(v, v, 2) == 1) {
            odd.push_back(v);
        }
    }
    std::map<size_t, uint64_t> out;
    std::vector<size_t> chosen;
    GenQuadForm q = model_form(t, 0, 2);
    std::function<void(size_t)> rec = [&](size_t from) {
        if (chosen.size() == t) {
            size_t k = 0;
            for (size_t i : chosen) {
                k += evaluate(q, odd[i]).value == 3;
            }
            out[k]++;
            return;
        }
        for (size_t i = from; i < odd.size(); i++) {
            bool ok = true;
            for (size_t j : chosen) {
                ok = ok && dot(odd[i], odd[j], 2) == 0;
            }
            if (ok) {
                chosen.push_back(i);
                rec(i + 1);
                chosen.pop_back();
            }
        }
    };
    rec(0);
    return out;
}

}  // namespace cliffdual
