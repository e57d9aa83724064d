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

#include "cliffdual/cliffordrep.h"

#include <random>
#include <sstream>
#include <stdexcept>
#include <type_traits>

#include "cliffdual/modint.h"

namespace cliffdual {

namespace {

size_t parse_index(const std::string &text, const std::string &token) {
    if (text.empty()) {
        throw std::invalid_argument("CliffordWord: missing index in '" + token + "'");
    }
    size_t pos = 0;
    unsigned long long v = std::stoull(text, &pos);
    if (pos != text.size()) {
        throw std::invalid_argument("CliffordWord: bad index in '" + token + "'");
    }
    return static_cast<size_t>(v);
}

Vec weyl_sum(const Vec &v, const Vec &u, int d) {
    return vec_add(v, u, d);
}

}  // namespace

Gate Gate::H(size_t i) {
    Gate g;
    g.kind = GateKind::h;
    g.a = i;
    return g;
}

Gate Gate::P(size_t i) {
    Gate g;
    g.kind = GateKind::p;
    g.a = i;
    return g;
}

Gate Gate::CADD(size_t control, size_t target) {
    Gate g;
    g.kind = GateKind::cadd;
    g.a = control;
    g.b = target;
    return g;
}

Gate Gate::Weyl(const Vec &v) {
    Gate g;
    g.kind = GateKind::weyl;
    g.v = v;
    return g;
}

Gate Gate::Phase(int64_t k) {
    Gate g;
    g.kind = GateKind::phase;
    g.k = k;
    return g;
}

std::string Gate::str() const {
    switch (kind) {
        case GateKind::h:
            return "H" + std::to_string(a);
        case GateKind::p:
            return "P" + std::to_string(a);
        case GateKind::cadd:
            return "CADD" + std::to_string(a) + "," + std::to_string(b);
        case GateKind::weyl:
            return "W:" + vec_to_string(v);
        case GateKind::phase:
            return "PH:" + std::to_string(k);
    }
    return "";
}

bool Gate::operator==(const Gate &o) const {
    return kind == o.kind && a == o.a && b == o.b && v == o.v && k == o.k;
}

CliffordWord::CliffordWord(size_t n_, int d_) : n(n_), d(d_) {
    if (!is_prime(d)) {
        throw std::invalid_argument("CliffordWord: d must be prime");
    }
    if (n == 0) {
        throw std::invalid_argument("CliffordWord: n must be positive");
    }
}

CliffordWord &CliffordWord::push(const Gate &g) {
    switch (g.kind) {
        case GateKind::h:
        case GateKind::p:
            if (g.a >= n) {
                throw std::invalid_argument("CliffordWord: qudit index out of range in " + g.str());
            }
            break;
        case GateKind::cadd:
            if (g.a >= n || g.b >= n || g.a == g.b) {
                throw std::invalid_argument("CliffordWord: bad CADD indices in " + g.str());
            }
            break;
        case GateKind::weyl:
            if (g.v.size() != 2 * n) {
                throw std::invalid_argument("CliffordWord: Weyl label must have length 2n");
            }
            for (uint8_t x : g.v) {
                if (x >= d) {
                    throw std::invalid_argument("CliffordWord: Weyl label entry out of range");
                }
            }
            break;
        case GateKind::phase:
            break;
    }
    Gate h = g;
    if (h.kind == GateKind::phase) {
        h.k = mod_floor(h.k, cyclotomic_level(d));
    }
    gates.push_back(h);
    return *this;
}

CliffordWord CliffordWord::then(const CliffordWord &o) const {
    if (o.n != n || o.d != d) {
        throw std::invalid_argument("CliffordWord: concatenating words of different shape");
    }
    CliffordWord out = *this;
    out.gates.insert(out.gates.end(), o.gates.begin(), o.gates.end());
    return out;
}

CliffordWord CliffordWord::inverse() const {
    CliffordWord out(n, d);
    int64_t p_order = d == 2 ? 4 : d;
    for (size_t i = gates.size(); i-- > 0;) {
        const Gate &g = gates[i];
        switch (g.kind) {
            case GateKind::h:
                for (int j = 0; j < 3; j++) {
                    out.push(g);
                }
                break;
            case GateKind::p:
                for (int64_t j = 1; j < p_order; j++) {
                    out.push(g);
                }
                break;
            case GateKind::cadd:
                for (int j = 1; j < d; j++) {
                    out.push(g);
                }
                break;
            case GateKind::weyl:
                out.push(Gate::Weyl(vec_scale(g.v, -1, d)));
                break;
            case GateKind::phase:
                out.push(Gate::Phase(-g.k));
                break;
        }
    }
    return out;
}

std::string CliffordWord::str() const {
    std::string out;
    for (const auto &g : gates) {
        if (!out.empty()) {
            out += ' ';
        }
        out += g.str();
    }
    return out;
}

CliffordWord CliffordWord::parse(const std::string &text, size_t n, int d) {
    CliffordWord w(n, d);
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok.rfind("CADD", 0) == 0) {
            std::string rest = tok.substr(4);
            size_t comma = rest.find(',');
            if (comma == std::string::npos) {
                throw std::invalid_argument("CliffordWord: CADD needs two indices in '" + tok + "'");
            }
            w.push(Gate::CADD(parse_index(rest.substr(0, comma), tok), parse_index(rest.substr(comma + 1), tok)));
        } else if (tok.rfind("PH:", 0) == 0) {
            w.push(Gate::Phase(std::stoll(tok.substr(3))));
        } else if (tok.rfind("W:", 0) == 0) {
            w.push(Gate::Weyl(vec_from_string(tok.substr(2))));
        } else if (tok[0] == 'H') {
            w.push(Gate::H(parse_index(tok.substr(1), tok)));
        } else if (tok[0] == 'P') {
            w.push(Gate::P(parse_index(tok.substr(1), tok)));
        } else {
            throw std::invalid_argument("CliffordWord: unknown token '" + tok + "'");
        }
    }
    return w;
}

template <typename S>
StateVector<S>::StateVector(size_t n, size_t t, int d) : n_(n), t_(t), d_(d), ops_(d) {
    if (!is_prime(d)) {
        throw std::invalid_argument("StateVector: d must be prime");
    }
    uint64_t dim = 1;
    for (size_t p = 0; p < n * t; p++) {
        strides_.push_back(dim);
        if (dim > kMaxStateDim / static_cast<uint64_t>(d)) {
            throw std::invalid_argument("StateVector: d^(nt) = " + std::to_string(d) + "^" + std::to_string(n * t) +
                                        " exceeds the state size cap");
        }
        dim *= static_cast<uint64_t>(d);
    }
    amp_.assign(dim, ops_.zero());
}

template <typename S>
StateVector<S> StateVector<S>::basis(size_t n, size_t t, int d, const GFMatrix &f) {
    StateVector out(n, t, d);
    out.amp_[out.index_of(f)] = out.ops_.one();
    return out;
}

template <typename S>
StateVector<S> StateVector<S>::basis_index(size_t n, size_t t, int d, uint64_t index) {
    StateVector out(n, t, d);
    if (index >= out.dim()) {
        throw std::out_of_range("StateVector: basis index out of range");
    }
    out.amp_[index] = out.ops_.one();
    return out;
}

template <typename S>
uint64_t StateVector<S>::index_of(const GFMatrix &f) const {
    if (f.rows() != t_ || f.cols() != n_) {
        throw std::invalid_argument("StateVector: basis label must be t x n");
    }
    uint64_t idx = 0;
    for (size_t i = 0; i < n_; i++) {
        for (size_t c = 0; c < t_; c++) {
            idx += f.get(c, i) * stride(i, c);
        }
    }
    return idx;
}

template <typename S>
GFMatrix StateVector<S>::matrix_of(uint64_t index) const {
    GFMatrix f(d_, t_, n_);
    for (size_t i = 0; i < n_; i++) {
        for (size_t c = 0; c < t_; c++) {
            f.set(c, i, static_cast<int64_t>((index / stride(i, c)) % static_cast<uint64_t>(d_)));
        }
    }
    return f;
}

template <typename S>
CycScalar StateVector<S>::amplitude(uint64_t index) const {
    if constexpr (std::is_same_v<S, CycInt>) {
        return ops_.to_cyc(amp_[index], k_);
    } else {
        throw std::logic_error("StateVector: float amplitudes have no exact value");
    }
}

template <typename S>
std::complex<double> StateVector<S>::amplitude_complex(uint64_t index) const {
    if constexpr (std::is_same_v<S, CycInt>) {
        return ops_.to_complex(amp_[index], k_);
    } else {
        return amp_[index];
    }
}

template <typename S>
size_t StateVector<S>::support_size() const {
    size_t c = 0;
    for (const auto &a : amp_) {
        c += ops_.is_zero(a) ? 0 : 1;
    }
    return c;
}

template <typename S>
void StateVector<S>::require_shape(size_t n, size_t r, size_t s) const {
    if (n != n_ || r + s != t_) {
        throw std::invalid_argument("StateVector: shape mismatch (word n=" + std::to_string(n) + ", r+s=" +
                                    std::to_string(r + s) + "; state n=" + std::to_string(n_) + ", t=" + std::to_string(t_) + ")");
    }
}

template <typename S>
void StateVector<S>::apply_fourier(size_t qudit, size_t r) {
    const int64_t m = cyclotomic_level(d_);
    const int64_t step = m / d_;
    const uint64_t d = static_cast<uint64_t>(d_);
    std::vector<S> a(d), out(d);
    for (size_t c = 0; c < t_; c++) {
        int64_t sign = c < r ? 1 : -1;
        uint64_t st = stride(qudit, c);
        for (uint64_t base = 0; base < dim(); base += st * d) {
            for (uint64_t off = 0; off < st; off++) {
                uint64_t i0 = base + off;
                if (d == 2) {
                    S x = amp_[i0];
                    S y = amp_[i0 + st];
                    amp_[i0] += y;
                    x -= y;
                    amp_[i0 + st] = x;
                    continue;
                }
                for (uint64_t y = 0; y < d; y++) {
                    a[y] = amp_[i0 + y * st];
                }
                for (uint64_t x = 0; x < d; x++) {
                    S acc = a[0];
                    for (uint64_t y = 1; y < d; y++) {
                        S term = a[y];
                        ops_.mul_root(term, sign * step * static_cast<int64_t>((x * y) % d));
                        acc += term;
                    }
                    amp_[i0 + x * st] = acc;
                }
            }
        }
        if constexpr (std::is_same_v<S, CycInt>) {
            k_ += 1;
        } else {
            for (auto &v : amp_) {
                ops_.div_sqrt_d(v);
            }
        }
    }
    normalize_scale();
}

template <typename S>
void StateVector<S>::apply_diagonal_phase(size_t qudit, size_t r) {
    const int64_t m = cyclotomic_level(d_);
    std::vector<int64_t> table(static_cast<size_t>(d_));
    for (int64_t x = 0; x < d_; x++) {
        table[static_cast<size_t>(x)] = tau_exponent(d_ == 2 ? x * x : x * (x - 1), d_);
    }
    for (uint64_t idx = 0; idx < dim(); idx++) {
        if (ops_.is_zero(amp_[idx])) {
            continue;
        }
        int64_t e = 0;
        for (size_t c = 0; c < t_; c++) {
            int64_t x = static_cast<int64_t>((idx / stride(qudit, c)) % static_cast<uint64_t>(d_));
            e += c < r ? table[static_cast<size_t>(x)] : -table[static_cast<size_t>(x)];
        }
        ops_.mul_root(amp_[idx], mod_floor(e, m));
    }
}

template <typename S>
void StateVector<S>::apply_cadd(size_t control, size_t target) {
    const uint64_t d = static_cast<uint64_t>(d_);
    std::vector<S> out(dim(), ops_.zero());
    for (uint64_t idx = 0; idx < dim(); idx++) {
        if (ops_.is_zero(amp_[idx])) {
            continue;
        }
        uint64_t j = idx;
        for (size_t c = 0; c < t_; c++) {
            uint64_t xa = (idx / stride(control, c)) % d;
            uint64_t xb = (idx / stride(target, c)) % d;
            j = j - xb * stride(target, c) + ((xa + xb) % d) * stride(target, c);
        }
        out[j] = std::move(amp_[idx]);
    }
    amp_ = std::move(out);
}

template <typename S>
void StateVector<S>::apply_weyl(const Vec &v, size_t r) {
    const int64_t m = cyclotomic_level(d_);
    const int64_t step = m / d_;
    const uint64_t d = static_cast<uint64_t>(d_);
    int64_t zx = 0;
    for (size_t i = 0; i < n_; i++) {
        zx += static_cast<int64_t>(v[i]) * v[n_ + i];
    }
    int64_t base = tau_exponent(-(zx % d_), d_);
    std::vector<S> out(dim(), ops_.zero());
    for (uint64_t idx = 0; idx < dim(); idx++) {
        if (ops_.is_zero(amp_[idx])) {
            continue;
        }
        uint64_t j = idx;
        int64_t e = 0;
        for (size_t c = 0; c < t_; c++) {
            int64_t ec = base;
            for (size_t i = 0; i < n_; i++) {
                uint64_t x = (idx / stride(i, c)) % d;
                uint64_t y = (x + v[n_ + i]) % d;
                j = j - x * stride(i, c) + y * stride(i, c);
                ec += step * static_cast<int64_t>((v[i] * y) % d);
            }
            e += c < r ? ec : -ec;
        }
        S a = std::move(amp_[idx]);
        ops_.mul_root(a, mod_floor(e, m));
        out[j] = std::move(a);
    }
    amp_ = std::move(out);
}

template <typename S>
void StateVector<S>::apply_gate(const Gate &g, size_t r, size_t s) {
    if (r + s != t_) {
        throw std::invalid_argument("StateVector: r + s must equal t");
    }
    switch (g.kind) {
        case GateKind::h:
            if (g.a >= n_) {
                throw std::invalid_argument("StateVector: gate index out of range");
            }
            apply_fourier(g.a, r);
            break;
        case GateKind::p:
            if (g.a >= n_) {
                throw std::invalid_argument("StateVector: gate index out of range");
            }
            apply_diagonal_phase(g.a, r);
            break;
        case GateKind::cadd:
            if (g.a >= n_ || g.b >= n_ || g.a == g.b) {
                throw std::invalid_argument("StateVector: bad CADD indices");
            }
            apply_cadd(g.a, g.b);
            break;
        case GateKind::weyl:
            if (g.v.size() != 2 * n_) {
                throw std::invalid_argument("StateVector: Weyl label must have length 2n");
            }
            apply_weyl(g.v, r);
            break;
        case GateKind::phase: {
            int64_t e = g.k * (static_cast<int64_t>(r) - static_cast<int64_t>(s));
            for (auto &a : amp_) {
                ops_.mul_root(a, e);
            }
            break;
        }
    }
}

template <typename S>
void StateVector<S>::apply_word(const CliffordWord &w, size_t r, size_t s) {
    require_shape(w.n, r, s);
    if (w.d != d_) {
        throw std::invalid_argument("StateVector: word and state have different d");
    }
    for (const auto &g : w.gates) {
        apply_gate(g, r, s);
    }
}

template <typename S>
void StateVector<S>::normalize_scale() {
    if constexpr (std::is_same_v<S, CycInt>) {
        bool all_zero = true;
        for (const auto &a : amp_) {
            if (!a.is_zero()) {
                all_zero = false;
                break;
            }
        }
        if (all_zero) {
            k_ = 0;
            return;
        }
        while (k_ >= 2) {
            for (const auto &a : amp_) {
                if (!a.divisible_by(d_)) {
                    return;
                }
            }
            for (auto &a : amp_) {
                a.divide_exact(d_);
            }
            k_ -= 2;
        }
    }
}

template class StateVector<CycInt>;
template class StateVector<std::complex<double>>;

template <typename S>
StateVector<S> apply_tensor_power(const CliffordWord &word, size_t r, size_t s, StateVector<S> psi) {
    psi.apply_word(word, r, s);
    return psi;
}

template ExactState apply_tensor_power(const CliffordWord &, size_t, size_t, ExactState);
template FloatState apply_tensor_power(const CliffordWord &, size_t, size_t, FloatState);

template <typename S>
StateVector<S> apply_column_map(const GFMatrix &g, const StateVector<S> &psi) {
    size_t t = psi.t();
    if (g.rows() != t || g.cols() != t || g.d() != psi.d()) {
        throw std::invalid_argument("apply_column_map: matrix must be t x t over Z_d");
    }
    StateVector<S> out(psi.n(), t, psi.d());
    out.set_sqrt_d_exp(psi.sqrt_d_exp());
    uint64_t col_dim = int_pow(static_cast<uint64_t>(psi.d()), t);
    std::vector<uint64_t> image(col_dim);
    for (uint64_t c = 0; c < col_dim; c++) {
        image[c] = vec_code(g.apply(vec_decode(c, psi.d(), t)), psi.d());
    }
    const auto &a = psi.amplitudes();
    auto &b = out.amplitudes();
    for (uint64_t idx = 0; idx < psi.dim(); idx++) {
        if (psi.ops().is_zero(a[idx])) {
            continue;
        }
        uint64_t rest = idx;
        uint64_t j = 0;
        uint64_t place = 1;
        for (size_t i = 0; i < psi.n(); i++) {
            j += image[rest % col_dim] * place;
            rest /= col_dim;
            place *= col_dim;
        }
        b[j] = a[idx];
    }
    return out;
}

template ExactState apply_column_map(const GFMatrix &, const ExactState &);
template FloatState apply_column_map(const GFMatrix &, const FloatState &);

CycScalar inner(const ExactState &a, const ExactState &b) {
    if (a.dim() != b.dim() || a.d() != b.d()) {
        throw std::invalid_argument("inner: state shapes differ");
    }
    const auto &ops = a.ops();
    CycInt acc = ops.zero();
    for (uint64_t i = 0; i < a.dim(); i++) {
        const CycInt &x = a.amplitudes()[i];
        const CycInt &y = b.amplitudes()[i];
        if (!x.is_zero() && !y.is_zero()) {
            acc += ops.mul(ops.conj(x), y);
        }
    }
    return ops.to_cyc(acc, a.sqrt_d_exp() + b.sqrt_d_exp());
}

std::complex<double> inner(const FloatState &a, const FloatState &b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("inner: state shapes differ");
    }
    std::complex<double> acc = 0;
    for (uint64_t i = 0; i < a.dim(); i++) {
        acc += std::conj(a.amplitudes()[i]) * b.amplitudes()[i];
    }
    return acc;
}

bool same_state(const ExactState &a, const ExactState &b) {
    if (a.dim() != b.dim() || a.d() != b.d()) {
        return false;
    }
    const ExactState *lo = &a;
    const ExactState *hi = &b;
    if (lo->sqrt_d_exp() > hi->sqrt_d_exp()) {
        std::swap(lo, hi);
    }
    int diff = hi->sqrt_d_exp() - lo->sqrt_d_exp();
    const auto &ops = a.ops();
    for (uint64_t i = 0; i < a.dim(); i++) {
        CycInt x = lo->amplitudes()[i];
        const CycInt &y = hi->amplitudes()[i];
        if (x.is_zero() != y.is_zero()) {
            return false;
        }
        if (x.is_zero()) {
            continue;
        }
        for (int e = 0; e + 1 < diff; e += 2) {
            for (auto &c : x.c) {
                c *= a.d();
            }
        }
        if (diff % 2 == 1) {
            x = ops.mul_sqrt_d(x);
        }
        if (x != y) {
            return false;
        }
    }
    return true;
}

double max_abs_diff(const FloatState &a, const FloatState &b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("max_abs_diff: state shapes differ");
    }
    double m = 0;
    for (uint64_t i = 0; i < a.dim(); i++) {
        m = std::max(m, std::abs(a.amplitudes()[i] - b.amplitudes()[i]));
    }
    return m;
}

CycMatrix tensor_power_matrix(const CliffordWord &w, size_t r, size_t s) {
    ExactState probe(w.n, r + s, w.d);
    CycMatrix out(w.d, probe.dim(), probe.dim());
    for (uint64_t j = 0; j < probe.dim(); j++) {
        ExactState col = ExactState::basis_index(w.n, r + s, w.d, j);
        col.apply_word(w, r, s);
        for (uint64_t i = 0; i < col.dim(); i++) {
            if (!col.amplitudes()[i].is_zero()) {
                out.at(i, j) = col.amplitude(i);
            }
        }
    }
    return out;
}

CycMatrix word_matrix(const CliffordWord &w) {
    return tensor_power_matrix(w, 1, 0);
}

CycMatrix gate_matrix(const Gate &g, size_t n, int d) {
    CliffordWord w(n, d);
    w.push(g);
    return word_matrix(w);
}

CycMatrix weyl(const Vec &v, size_t n, int d) {
    return gate_matrix(Gate::Weyl(v), n, d);
}

int64_t symplectic_form(const Vec &v, const Vec &u, int d) {
    if (v.size() != u.size() || v.size() % 2 != 0) {
        throw std::invalid_argument("symplectic_form: labels must have equal even length");
    }
    size_t n = v.size() / 2;
    int64_t acc = 0;
    for (size_t i = 0; i < n; i++) {
        acc += static_cast<int64_t>(v[i]) * u[n + i] - static_cast<int64_t>(v[n + i]) * u[i];
    }
    return mod_floor(acc, tau_order(d));
}

WeylComposition weyl_compose_check(const Vec &v, const Vec &u, size_t n, int d) {
    WeylComposition out;
    out.symplectic = symplectic_form(v, u, d);
    CycMatrix lhs = weyl(v, n, d) * weyl(u, n, d);
    CycMatrix w = weyl(weyl_sum(v, u, d), n, d);
    int64_t big_d = tau_order(d);
    for (int64_t j = 0; j < big_d; j++) {
        if (lhs == w.scaled(phase_tau(j, d))) {
            out.residual = mod_floor(j - out.symplectic, big_d);
            out.exact = out.residual == 0;
            return out;
        }
    }
    throw std::logic_error("weyl_compose_check: product is not a tau multiple of W_{v+u}");
}

size_t Weight::rank() const {
    return cliffdual::rank(b.matrix);
}

Weight weight_of_basis_state(const GFMatrix &f, size_t r, size_t s) {
    if (f.rows() != r + s) {
        throw std::invalid_argument("weight_of_basis_state: F must have r + s rows");
    }
    size_t n = f.cols();
    GFMatrix m(f.d(), n, n);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            int64_t acc = 0;
            for (size_t c = 0; c < r + s; c++) {
                int64_t term = static_cast<int64_t>(f.get(c, i)) * f.get(c, j);
                acc += c < r ? term : -term;
            }
            m.set(i, j, acc);
        }
    }
    return Weight{SymBilForm(m)};
}

int64_t weight_pairing(const QuadForm &q, const Weight &w) {
    size_t n = q.dim();
    if (w.b.dim() != n) {
        throw std::invalid_argument("weight_pairing: dimension mismatch");
    }
    int64_t acc = 0;
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            acc += static_cast<int64_t>(q.rep.get(i, j)) * w.b.matrix.get(j, i);
        }
    }
    return mod_floor(acc, q.d());
}

GFMatrix max_rank_basis_state(size_t n, size_t r, size_t s, int d) {
    GFMatrix f(d, r + s, n);
    for (size_t k = 0; k < std::min(n, r + s); k++) {
        f.set(k, k, 1);
    }
    return f;
}

GenQuadForm phase_form(const QuadForm &q) {
    int64_t big_d = tau_order(q.d());
    std::vector<int64_t> diag;
    for (size_t i = 0; i < q.dim(); i++) {
        diag.push_back(mod_floor(2 * static_cast<int64_t>(q.rep.get(i, i)), big_d));
    }
    return GenQuadForm(diag, polarize(q));
}

EigenvalueCheck weight_eigenvalue_check(const QuadForm &q, const GFMatrix &f, size_t r, size_t s) {
    EigenvalueCheck out;
    out.predicted = weight_pairing(q, weight_of_basis_state(f, r, s));
    CliffordWord w = diagonal_clifford(phase_form(q), Vec(q.dim(), 0));
    ExactState psi = ExactState::basis(q.dim(), r + s, q.d(), f);
    uint64_t idx = psi.index_of(f);
    psi.apply_word(w, r, s);
    out.observed = psi.amplitude(idx);
    out.match = psi.support_size() == 1 && out.observed == phase_omega(out.predicted, q.d());
    return out;
}

CliffordWord diagonal_clifford(const GenQuadForm &q, const Vec &xprime) {
    size_t n = q.dim();
    int d = q.d;
    if (xprime.size() != n) {
        throw std::invalid_argument("diagonal_clifford: x' must have length n");
    }
    CliffordWord w(n, d);
    for (size_t i = 0; i < n; i++) {
        for (int64_t k = 0; k < q.diag[i]; k++) {
            w.push(Gate::P(i));
            if (d != 2) {
                Vec z(2 * n, 0);
                z[i] = static_cast<uint8_t>((d + 1) / 2);
                w.push(Gate::Weyl(z));
            }
        }
    }
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i + 1; j < n; j++) {
            for (int64_t k = 0; k < q.polar.matrix.get(i, j); k++) {
                for (int h = 0; h < (d == 2 ? 1 : 3); h++) {
                    w.push(Gate::H(j));
                }
                w.push(Gate::CADD(i, j));
                w.push(Gate::H(j));
            }
        }
    }
    if (!vec_is_zero(xprime)) {
        Vec z(2 * n, 0);
        for (size_t i = 0; i < n; i++) {
            z[i] = xprime[i];
        }
        w.push(Gate::Weyl(z));
    }
    return w;
}

CliffordWord random_clifford_word(size_t n, int d, size_t length, uint64_t seed) {
    CliffordWord w(n, d);
    std::mt19937_64 rng(seed);
    uint64_t choices = 2 * n + n * (n - 1);
    for (size_t k = 0; k < length; k++) {
        uint64_t c = rng() % choices;
        if (c < n) {
            w.push(Gate::H(c));
        } else if (c < 2 * n) {
            w.push(Gate::P(c - n));
        } else {
            c -= 2 * n;
            size_t a = c / (n - 1);
            size_t b = c % (n - 1);
            w.push(Gate::CADD(a, b >= a ? b + 1 : b));
        }
    }
    return w;
}

std::optional<GFMatrix> rs_intertwiner(size_t r, size_t s, size_t r2, size_t s2, int d) {
    if (r + s != r2 + s2) {
        throw std::invalid_argument("rs_intertwiner: r + s must equal r2 + s2");
    }
    return find_isometry_fixing(model_form(r, s, d), model_form(r2, s2, d), ones(r + s));
}

bool check_rs_intertwiner(const GFMatrix &g, size_t r, size_t s, size_t r2, size_t s2, size_t n) {
    int d = g.d();
    size_t t = r + s;
    std::vector<Gate> gens;
    for (size_t i = 0; i < n; i++) {
        gens.push_back(Gate::H(i));
        gens.push_back(Gate::P(i));
        for (size_t j = 0; j < n; j++) {
            if (i != j) {
                gens.push_back(Gate::CADD(i, j));
            }
        }
    }
    ExactState probe(n, t, d);
    for (const auto &gate : gens) {
        for (uint64_t idx = 0; idx < probe.dim(); idx++) {
            ExactState a = ExactState::basis_index(n, t, d, idx);
            ExactState lhs = apply_column_map(g, a);
            lhs.apply_gate(gate, r2, s2);
            a.apply_gate(gate, r, s);
            ExactState rhs = apply_column_map(g, a);
            if (!same_state(lhs, rhs)) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace cliffdual
