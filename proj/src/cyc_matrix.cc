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

#include "cliffdual/cyc_matrix.h"

#include <stdexcept>

namespace cliffdual {

CycMatrix::CycMatrix(int64_t d, size_t rows, size_t cols)
    : d_(d), rows_(rows), cols_(cols), a_(rows * cols, CycScalar::zero(CycField::for_qudit(d))) {
}

CycMatrix CycMatrix::identity(int64_t d, size_t n) {
    CycMatrix out(d, n, n);
    for (size_t i = 0; i < n; i++) {
        out.at(i, i) = CycScalar::one(out.field());
    }
    return out;
}

CycMatrix CycMatrix::adjoint() const {
    CycMatrix out(d_, cols_, rows_);
    for (size_t i = 0; i < rows_; i++) {
        for (size_t j = 0; j < cols_; j++) {
            if (!at(i, j).is_zero()) {
                out.at(j, i) = at(i, j).conj();
            }
        }
    }
    return out;
}

CycMatrix CycMatrix::conj() const {
    CycMatrix out = *this;
    for (auto &v : out.a_) {
        if (!v.is_zero()) {
            v = v.conj();
        }
    }
    return out;
}

CycMatrix CycMatrix::transpose() const {
    CycMatrix out(d_, cols_, rows_);
    for (size_t i = 0; i < rows_; i++) {
        for (size_t j = 0; j < cols_; j++) {
            out.at(j, i) = at(i, j);
        }
    }
    return out;
}

CycScalar CycMatrix::trace() const {
    CycScalar acc = CycScalar::zero(field());
    for (size_t i = 0; i < std::min(rows_, cols_); i++) {
        acc += at(i, i);
    }
    return acc;
}

bool CycMatrix::is_zero() const {
    for (const auto &v : a_) {
        if (!v.is_zero()) {
            return false;
        }
    }
    return true;
}

bool CycMatrix::is_identity() const {
    return rows_ == cols_ && *this == identity(d_, rows_);
}

size_t CycMatrix::nnz() const {
    size_t c = 0;
    for (const auto &v : a_) {
        c += v.is_zero() ? 0 : 1;
    }
    return c;
}

CycMatrix CycMatrix::scaled(const CycScalar &c) const {
    CycMatrix out = *this;
    for (auto &v : out.a_) {
        if (!v.is_zero()) {
            v = v * c;
        }
    }
    return out;
}

CycMatrix operator*(const CycMatrix &a, const CycMatrix &b) {
    if (a.cols_ != b.rows_ || a.d_ != b.d_) {
        throw std::invalid_argument("CycMatrix: shape mismatch in product");
    }
    CycMatrix out(a.d_, a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; i++) {
        for (size_t k = 0; k < a.cols_; k++) {
            const CycScalar &x = a.at(i, k);
            if (x.is_zero()) {
                continue;
            }
            for (size_t j = 0; j < b.cols_; j++) {
                const CycScalar &y = b.at(k, j);
                if (!y.is_zero()) {
                    out.at(i, j) += x * y;
                }
            }
        }
    }
    return out;
}

CycMatrix operator+(const CycMatrix &a, const CycMatrix &b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
        throw std::invalid_argument("CycMatrix: shape mismatch in sum");
    }
    CycMatrix out = a;
    for (size_t i = 0; i < out.a_.size(); i++) {
        if (!b.a_[i].is_zero()) {
            out.a_[i] += b.a_[i];
        }
    }
    return out;
}

CycMatrix operator-(const CycMatrix &a, const CycMatrix &b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
        throw std::invalid_argument("CycMatrix: shape mismatch in difference");
    }
    CycMatrix out = a;
    for (size_t i = 0; i < out.a_.size(); i++) {
        if (!b.a_[i].is_zero()) {
            out.a_[i] -= b.a_[i];
        }
    }
    return out;
}

bool CycMatrix::operator==(const CycMatrix &o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
        return false;
    }
    for (size_t i = 0; i < a_.size(); i++) {
        if (a_[i] != o.a_[i]) {
            return false;
        }
    }
    return true;
}

std::vector<std::vector<std::complex<double>>> CycMatrix::to_complex() const {
    std::vector<std::vector<std::complex<double>>> out(rows_, std::vector<std::complex<double>>(cols_));
    for (size_t i = 0; i < rows_; i++) {
        for (size_t j = 0; j < cols_; j++) {
            out[i][j] = at(i, j).to_complex();
        }
    }
    return out;
}

CycMatrix kron(const CycMatrix &a, const CycMatrix &b) {
    CycMatrix out(a.d(), a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t j = 0; j < a.cols(); j++) {
            if (a.at(i, j).is_zero()) {
                continue;
            }
            for (size_t k = 0; k < b.rows(); k++) {
                for (size_t l = 0; l < b.cols(); l++) {
                    if (!b.at(k, l).is_zero()) {
                        out.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
                    }
                }
            }
        }
    }
    return out;
}

}  // namespace cliffdual
