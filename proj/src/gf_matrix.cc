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

#include "cliffdual/gf_matrix.h"

#include <sstream>
#include <stdexcept>

#include "cliffdual/modint.h"

namespace cliffdual {

GFMatrix::GFMatrix(int d, size_t rows, size_t cols) : d_(d), rows_(rows), cols_(cols) {
    if (d < 2 || d > 251 || !is_prime(d)) {
        throw std::invalid_argument("GFMatrix: d must be a prime below 256");
    }
    if (d == 2) {
        words_ = (cols + 63) / 64;
        if (words_ == 0) {
            words_ = 1;
        }
        bits_.assign(rows * words_, 0);
    } else {
        data_.assign(rows * cols, 0);
    }
}

GFMatrix GFMatrix::identity(int d, size_t n) {
    GFMatrix m(d, n, n);
    for (size_t i = 0; i < n; i++) {
        m.set(i, i, 1);
    }
    return m;
}

GFMatrix GFMatrix::from_rows(int d, size_t cols, const std::vector<Vec> &rows) {
    GFMatrix m(d, rows.size(), cols);
    for (size_t i = 0; i < rows.size(); i++) {
        m.set_row(i, rows[i]);
    }
    return m;
}

GFMatrix GFMatrix::from_strings(int d, const std::vector<std::string> &rows) {
    size_t cols = rows.empty() ? 0 : rows[0].size();
    std::vector<Vec> vs;
    for (const auto &s : rows) {
        if (s.size() != cols) {
            throw std::invalid_argument("GFMatrix: ragged rows");
        }
        vs.push_back(vec_from_string(s));
    }
    return from_rows(d, cols, vs);
}

void GFMatrix::set(size_t i, size_t j, int64_t v) {
    uint8_t r = static_cast<uint8_t>(mod_floor(v, d_));
    if (d_ == 2) {
        uint64_t &w = bits_[i * words_ + (j >> 6)];
        uint64_t bit = uint64_t{1} << (j & 63);
        w = r ? (w | bit) : (w & ~bit);
    } else {
        data_[i * cols_ + j] = r;
    }
}

Vec GFMatrix::row(size_t i) const {
    Vec v(cols_);
    for (size_t j = 0; j < cols_; j++) {
        v[j] = get(i, j);
    }
    return v;
}

void GFMatrix::set_row(size_t i, const Vec &v) {
    if (v.size() != cols_) {
        throw std::invalid_argument("GFMatrix::set_row: dimension mismatch");
    }
    for (size_t j = 0; j < cols_; j++) {
        set(i, j, v[j]);
    }
}

Vec GFMatrix::col(size_t j) const {
    Vec v(rows_);
    for (size_t i = 0; i < rows_; i++) {
        v[i] = get(i, j);
    }
    return v;
}

bool GFMatrix::row_is_zero(size_t i) const {
    if (d_ == 2) {
        for (size_t w = 0; w < words_; w++) {
            if (bits_[i * words_ + w]) {
                return false;
            }
        }
        return true;
    }
    for (size_t j = 0; j < cols_; j++) {
        if (data_[i * cols_ + j]) {
            return false;
        }
    }
    return true;
}

void GFMatrix::add_row_multiple(size_t dst, size_t src, int64_t c) {
    int64_t cc = mod_floor(c, d_);
    if (cc == 0) {
        return;
    }
    if (d_ == 2) {
        for (size_t w = 0; w < words_; w++) {
            bits_[dst * words_ + w] ^= bits_[src * words_ + w];
        }
        return;
    }
    uint8_t *a = &data_[dst * cols_];
    const uint8_t *b = &data_[src * cols_];
    for (size_t j = 0; j < cols_; j++) {
        a[j] = static_cast<uint8_t>((a[j] + cc * b[j]) % d_);
    }
}

void GFMatrix::scale_row(size_t i, int64_t c) {
    int64_t cc = mod_floor(c, d_);
    if (d_ == 2) {
        if (cc == 0) {
            for (size_t w = 0; w < words_; w++) {
                bits_[i * words_ + w] = 0;
            }
        }
        return;
    }
    for (size_t j = 0; j < cols_; j++) {
        data_[i * cols_ + j] = static_cast<uint8_t>((data_[i * cols_ + j] * cc) % d_);
    }
}

void GFMatrix::swap_rows(size_t i, size_t j) {
    if (i == j) {
        return;
    }
    if (d_ == 2) {
        for (size_t w = 0; w < words_; w++) {
            std::swap(bits_[i * words_ + w], bits_[j * words_ + w]);
        }
        return;
    }
    for (size_t k = 0; k < cols_; k++) {
        std::swap(data_[i * cols_ + k], data_[j * cols_ + k]);
    }
}

void GFMatrix::append_row(const Vec &v) {
    if (v.size() != cols_) {
        throw std::invalid_argument("GFMatrix::append_row: dimension mismatch");
    }
    rows_++;
    if (d_ == 2) {
        bits_.resize(rows_ * words_, 0);
    } else {
        data_.resize(rows_ * cols_, 0);
    }
    set_row(rows_ - 1, v);
}

GFMatrix GFMatrix::top_rows(size_t k) const {
    k = std::min(k, rows_);
    GFMatrix out(d_, k, cols_);
    if (d_ == 2) {
        std::copy(bits_.begin(), bits_.begin() + static_cast<std::ptrdiff_t>(k * words_), out.bits_.begin());
    } else {
        std::copy(data_.begin(), data_.begin() + static_cast<std::ptrdiff_t>(k * cols_), out.data_.begin());
    }
    return out;
}

GFMatrix GFMatrix::transpose() const {
    GFMatrix out(d_, cols_, rows_);
    for (size_t i = 0; i < rows_; i++) {
        for (size_t j = 0; j < cols_; j++) {
            out.set(j, i, get(i, j));
        }
    }
    return out;
}

Vec GFMatrix::apply(const Vec &v) const {
    if (v.size() != cols_) {
        throw std::invalid_argument("GFMatrix::apply: dimension mismatch");
    }
    Vec out(rows_);
    for (size_t i = 0; i < rows_; i++) {
        int64_t acc = 0;
        for (size_t j = 0; j < cols_; j++) {
            acc += static_cast<int64_t>(get(i, j)) * v[j];
        }
        out[i] = static_cast<uint8_t>(acc % d_);
    }
    return out;
}

Vec GFMatrix::left_apply(const Vec &v) const {
    if (v.size() != rows_) {
        throw std::invalid_argument("GFMatrix::left_apply: dimension mismatch");
    }
    Vec out(cols_);
    for (size_t j = 0; j < cols_; j++) {
        int64_t acc = 0;
        for (size_t i = 0; i < rows_; i++) {
            acc += static_cast<int64_t>(v[i]) * get(i, j);
        }
        out[j] = static_cast<uint8_t>(acc % d_);
    }
    return out;
}

GFMatrix operator*(const GFMatrix &a, const GFMatrix &b) {
    if (a.cols_ != b.rows_ || a.d_ != b.d_) {
        throw std::invalid_argument("GFMatrix: product dimension mismatch");
    }
    GFMatrix out(a.d_, a.rows_, b.cols_);
    if (a.d_ == 2) {
        for (size_t i = 0; i < a.rows_; i++) {
            for (size_t k = 0; k < a.cols_; k++) {
                if (a.get(i, k)) {
                    for (size_t w = 0; w < b.words_; w++) {
                        out.bits_[i * out.words_ + w] ^= b.bits_[k * b.words_ + w];
                    }
                }
            }
        }
        return out;
    }
    for (size_t i = 0; i < a.rows_; i++) {
        for (size_t j = 0; j < b.cols_; j++) {
            int64_t acc = 0;
            for (size_t k = 0; k < a.cols_; k++) {
                acc += static_cast<int64_t>(a.get(i, k)) * b.get(k, j);
            }
            out.set(i, j, acc);
        }
    }
    return out;
}

GFMatrix operator+(const GFMatrix &a, const GFMatrix &b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.d_ != b.d_) {
        throw std::invalid_argument("GFMatrix: sum dimension mismatch");
    }
    GFMatrix out(a.d_, a.rows_, a.cols_);
    for (size_t i = 0; i < a.rows_; i++) {
        for (size_t j = 0; j < a.cols_; j++) {
            out.set(i, j, a.get(i, j) + b.get(i, j));
        }
    }
    return out;
}

bool GFMatrix::operator==(const GFMatrix &o) const {
    return d_ == o.d_ && rows_ == o.rows_ && cols_ == o.cols_ && bits_ == o.bits_ && data_ == o.data_;
}

bool GFMatrix::operator<(const GFMatrix &o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
        return std::make_pair(rows_, cols_) < std::make_pair(o.rows_, o.cols_);
    }
    for (size_t i = 0; i < rows_; i++) {
        for (size_t j = 0; j < cols_; j++) {
            if (get(i, j) != o.get(i, j)) {
                return get(i, j) < o.get(i, j);
            }
        }
    }
    return false;
}

std::string GFMatrix::row_string(size_t i) const {
    return vec_to_string(row(i));
}

std::vector<std::string> GFMatrix::to_strings() const {
    std::vector<std::string> out;
    for (size_t i = 0; i < rows_; i++) {
        out.push_back(row_string(i));
    }
    return out;
}

std::string GFMatrix::str() const {
    std::string out;
    for (size_t i = 0; i < rows_; i++) {
        if (i) {
            out += ' ';
        }
        out += row_string(i);
    }
    return out;
}

GFMatrix rref(const GFMatrix &m, std::vector<size_t> *pivots) {
    GFMatrix a = m;
    int d = a.d();
    size_t r = 0;
    std::vector<size_t> piv;
    for (size_t c = 0; c < a.cols() && r < a.rows(); c++) {
        size_t p = r;
        while (p < a.rows() && a.get(p, c) == 0) {
            p++;
        }
        if (p == a.rows()) {
            continue;
        }
        a.swap_rows(r, p);
        a.scale_row(r, inv_mod_prime(a.get(r, c), d));
        for (size_t i = 0; i < a.rows(); i++) {
            if (i != r && a.get(i, c)) {
                a.add_row_multiple(i, r, d - a.get(i, c));
            }
        }
        piv.push_back(c);
        r++;
    }
    if (pivots) {
        *pivots = piv;
    }
    return a.top_rows(r);
}

size_t rank(const GFMatrix &m) {
    return rref(m).rows();
}

std::optional<Vec> solve(const GFMatrix &m, const Vec &b) {
    if (b.size() != m.rows()) {
        throw std::invalid_argument("solve: dimension mismatch");
    }
    GFMatrix aug(m.d(), m.rows(), m.cols() + 1);
    for (size_t i = 0; i < m.rows(); i++) {
        for (size_t j = 0; j < m.cols(); j++) {
            aug.set(i, j, m.get(i, j));
        }
        aug.set(i, m.cols(), b[i]);
    }
    std::vector<size_t> piv;
    GFMatrix r = rref(aug, &piv);
    Vec x(m.cols(), 0);
    for (size_t i = 0; i < piv.size(); i++) {
        if (piv[i] == m.cols()) {
            return std::nullopt;
        }
        x[piv[i]] = r.get(i, m.cols());
    }
    return x;
}

std::optional<GFMatrix> inverse(const GFMatrix &m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("inverse: matrix not square");
    }
    size_t n = m.rows();
    GFMatrix aug(m.d(), n, 2 * n);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            aug.set(i, j, m.get(i, j));
        }
        aug.set(i, n + i, 1);
    }
    std::vector<size_t> piv;
    GFMatrix r = rref(aug, &piv);
    if (r.rows() < n || piv[n - 1] >= n) {
        return std::nullopt;
    }
    GFMatrix out(m.d(), n, n);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            out.set(i, j, r.get(i, n + j));
        }
    }
    return out;
}

int64_t dot(const Vec &a, const Vec &b, int d) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("dot: dimension mismatch");
    }
    int64_t acc = 0;
    for (size_t i = 0; i < a.size(); i++) {
        acc += static_cast<int64_t>(a[i]) * b[i];
    }
    return acc % d;
}

int64_t bilinear(const Vec &u, const GFMatrix &g, const Vec &v) {
    return dot(u, g.apply(v), g.d());
}

Vec vec_add(const Vec &a, const Vec &b, int d) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("vec_add: dimension mismatch");
    }
    Vec out(a.size());
    for (size_t i = 0; i < a.size(); i++) {
        out[i] = static_cast<uint8_t>((a[i] + b[i]) % d);
    }
    return out;
}

Vec vec_scale(const Vec &a, int64_t c, int d) {
    int64_t cc = mod_floor(c, d);
    Vec out(a.size());
    for (size_t i = 0; i < a.size(); i++) {
        out[i] = static_cast<uint8_t>((a[i] * cc) % d);
    }
    return out;
}

bool vec_is_zero(const Vec &a) {
    for (auto x : a) {
        if (x) {
            return false;
        }
    }
    return true;
}

Vec vec_from_string(const std::string &s) {
    Vec v;
    for (char c : s) {
        if (c >= '0' && c <= '9') {
            v.push_back(static_cast<uint8_t>(c - '0'));
        } else if (c >= 'a' && c <= 'z') {
            v.push_back(static_cast<uint8_t>(c - 'a' + 10));
        } else {
            throw std::invalid_argument(std::string("vector string: bad digit '") + c + "'");
        }
    }
    return v;
}

std::string vec_to_string(const Vec &v) {
    std::string s;
    for (auto x : v) {
        s += x < 10 ? static_cast<char>('0' + x) : static_cast<char>('a' + x - 10);
    }
    return s;
}

Vec ones(size_t t) {
    return Vec(t, 1);
}

Vec unit(size_t t, size_t i) {
    Vec v(t, 0);
    v[i] = 1;
    return v;
}

uint64_t vec_code(const Vec &v, int d) {
    uint64_t code = 0;
    for (size_t i = v.size(); i-- > 0;) {
        code = code * static_cast<uint64_t>(d) + v[i];
    }
    return code;
}

Vec vec_decode(uint64_t code, int d, size_t t) {
    Vec v(t);
    for (size_t i = 0; i < t; i++) {
        v[i] = static_cast<uint8_t>(code % static_cast<uint64_t>(d));
        code /= static_cast<uint64_t>(d);
    }
    return v;
}

uint64_t int_pow(uint64_t base, size_t exp) {
    uint64_t r = 1;
    for (size_t i = 0; i < exp; i++) {
        r *= base;
    }
    return r;
}

}  // namespace cliffdual
