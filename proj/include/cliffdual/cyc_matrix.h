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

#ifndef CLIFFDUAL_CYC_MATRIX_H
#define CLIFFDUAL_CYC_MATRIX_H

#include <vector>

#include "cliffdual/cyc.h"

namespace cliffdual {

/// Dense exact matrix over the amplitude field of a qudit dimension.
class CycMatrix {
   public:
    CycMatrix() = default;
    CycMatrix(int64_t d, size_t rows, size_t cols);
    static CycMatrix identity(int64_t d, size_t n);

    int64_t d() const {
        return d_;
    }
    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    const CycField &field() const {
        return CycField::for_qudit(d_);
    }
    CycScalar &at(size_t i, size_t j) {
        return a_[i * cols_ + j];
    }
    const CycScalar &at(size_t i, size_t j) const {
        return a_[i * cols_ + j];
    }

    CycMatrix adjoint() const;
    CycMatrix conj() const;
    CycMatrix transpose() const;
    CycScalar trace() const;
    bool is_zero() const;
    bool is_identity() const;
    /// Number of nonzero entries.
    size_t nnz() const;
    CycMatrix scaled(const CycScalar &c) const;

    friend CycMatrix operator*(const CycMatrix &a, const CycMatrix &b);
    friend CycMatrix operator+(const CycMatrix &a, const CycMatrix &b);
    friend CycMatrix operator-(const CycMatrix &a, const CycMatrix &b);
    bool operator==(const CycMatrix &o) const;
    bool operator!=(const CycMatrix &o) const {
        return !(*this == o);
    }

    std::vector<std::vector<std::complex<double>>> to_complex() const;

   private:
    int64_t d_ = 2;
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<CycScalar> a_;
};

/// a (x) b with row index i_a * rows(b) + i_b.
CycMatrix kron(const CycMatrix &a, const CycMatrix &b);

}  // namespace cliffdual

#endif
