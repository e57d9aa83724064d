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

#include "cliffdual/exact_op.h"

#include <algorithm>
#include <stdexcept>

namespace cliffdual {

ExactOp::ExactOp(int d, size_t dim) : d_(d), dim_(dim), ops_(d) {
    a_.assign(dim * dim, ops_.zero());
}

ExactOp ExactOp::identity(int d, size_t dim) {
    ExactOp out(d, dim);
    for (size_t i = 0; i < dim; i++) {
        out.raw(i, i) = out.ops_.one();
    }
    return out;
}

ExactOp ExactOp::from_entries(int d, size_t dim, std::vector<CycInt> entries, int k) {
    if (entries.size() != dim * dim) {
        throw std::invalid_argument("ExactOp: entry count mismatch");
    }
    ExactOp out(d, dim);
    out.a_ = std::move(entries);
    out.k_ = k;
    out.normalize();
    return out;
}

CycScalar ExactOp::entry(size_t i, size_t j) const {
    return ops_.to_cyc(raw(i, j), k_);
}

ExactOp ExactOp::adjoint() const {
    ExactOp out(d_, dim_);
    out.k_ = k_;
    for (size_t i = 0; i < dim_; i++) {
        for (size_t j = 0; j < dim_; j++) {
            if (!raw(i, j).is_zero()) {
                out.raw(j, i) = ops_.conj(raw(i, j));
            }
        }
    }
    return out;
}

CycScalar ExactOp::trace() const {
    CycInt acc = ops_.zero();
    for (size_t i = 0; i < dim_; i++) {
        acc += raw(i, i);
    }
    return ops_.to_cyc(acc, k_);
}

bool ExactOp::is_zero() const {
    for (const auto &v : a_) {
        if (!v.is_zero()) {
            return false;
        }
    }
    return true;
}

size_t ExactOp::nnz() const {
    size_t c = 0;
    for (const auto &v : a_) {
        c += v.is_zero() ? 0 : 1;
    }
    return c;
}

ExactOp ExactOp::times_root(int64_t j) const {
    ExactOp out = *this;
    for (auto &v : out.a_) {
        if (!v.is_zero()) {
            ops_.mul_root(v, j);
        }
    }
    return out;
}

void ExactOp::normalize() {
    if (is_zero()) {
        k_ = 0;
        return;
    }
    while (k_ >= 2) {
        for (const auto &v : a_) {
            if (!v.divisible_by(d_)) {
                return;
            }
        }
        for (auto &v : a_) {
            v.divide_exact(d_);
        }
        k_ -= 2;
    }
}

std::string ExactOp::key() const {
    std::vector<CycInt> c = a_;
    int k = k_;
    if (k % 2 != 0) {
        for (auto &v : c) {
            v = ops_.mul_sqrt_d(v);
        }
        k++;
    }
    while (k >= 2 && std::all_of(c.begin(), c.end(), [&](const CycInt &v) { return v.divisible_by(d_); })) {
        for (auto &v : c) {
            v.divide_exact(d_);
        }
        k -= 2;
    }
    std::string out = std::to_string(k) + ":";
    for (size_t i = 0; i < c.size(); i++) {
        if (c[i].is_zero()) {
            continue;
        }
        out += std::to_string(i) + "=";
        for (int64_t x : c[i].c) {
            out += std::to_string(x) + ",";
        }
        out += ";";
    }
    return out;
}

CycMatrix ExactOp::to_matrix() const {
    CycMatrix out(d_, dim_, dim_);
    for (size_t i = 0; i < dim_; i++) {
        for (size_t j = 0; j < dim_; j++) {
            if (!raw(i, j).is_zero()) {
                out.at(i, j) = entry(i, j);
            }
        }
    }
    return out;
}

std::vector<CycInt> ExactOp::at_exponent(int k) const {
    std::vector<CycInt> out = a_;
    int diff = k - k_;
    for (auto &v : out) {
        if (v.is_zero()) {
            continue;
        }
        for (int e = 0; e + 1 < diff; e += 2) {
            for (auto &c : v.c) {
                c *= d_;
            }
        }
        if (diff % 2 == 1) {
            v = ops_.mul_sqrt_d(v);
        }
    }
    return out;
}

ExactOp operator*(const ExactOp &a, const ExactOp &b) {
    if (a.dim_ != b.dim_ || a.d_ != b.d_) {
        throw std::invalid_argument("ExactOp: shape mismatch in product");
    }
    size_t n = a.dim_;
    ExactOp out(a.d_, n);
    out.k_ = a.k_ + b.k_;
    std::vector<std::vector<size_t>> b_rows(n);
    for (size_t k = 0; k < n; k++) {
        for (size_t j = 0; j < n; j++) {
            if (!b.raw(k, j).is_zero()) {
                b_rows[k].push_back(j);
            }
        }
    }
    for (size_t i = 0; i < n; i++) {
        for (size_t k = 0; k < n; k++) {
            const CycInt &x = a.raw(i, k);
            if (x.is_zero()) {
                continue;
            }
            for (size_t j : b_rows[k]) {
                out.raw(i, j) += a.ops_.mul(x, b.raw(k, j));
            }
        }
    }
    out.normalize();
    return out;
}

ExactOp operator+(const ExactOp &a, const ExactOp &b) {
    if (a.dim_ != b.dim_ || a.d_ != b.d_) {
        throw std::invalid_argument("ExactOp: shape mismatch in sum");
    }
    int k = std::max(a.k_, b.k_);
    ExactOp out(a.d_, a.dim_);
    out.a_ = a.at_exponent(k);
    out.k_ = k;
    auto bb = b.at_exponent(k);
    for (size_t i = 0; i < bb.size(); i++) {
        out.a_[i] += bb[i];
    }
    out.normalize();
    return out;
}

ExactOp operator-(const ExactOp &a, const ExactOp &b) {
    if (a.dim_ != b.dim_ || a.d_ != b.d_) {
        throw std::invalid_argument("ExactOp: shape mismatch in difference");
    }
    int k = std::max(a.k_, b.k_);
    ExactOp out(a.d_, a.dim_);
    out.a_ = a.at_exponent(k);
    out.k_ = k;
    auto bb = b.at_exponent(k);
    for (size_t i = 0; i < bb.size(); i++) {
        out.a_[i] -= bb[i];
    }
    out.normalize();
    return out;
}

bool ExactOp::operator==(const ExactOp &o) const {
    if (dim_ != o.dim_ || d_ != o.d_) {
        return false;
    }
    int k = std::max(k_, o.k_);
    return at_exponent(k) == o.at_exponent(k);
}

}  // namespace cliffdual
