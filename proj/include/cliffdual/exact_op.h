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

#ifndef CLIFFDUAL_EXACT_OP_H
#define CLIFFDUAL_EXACT_OP_H

#include <string>
#include <vector>

#include "cliffdual/cyc_matrix.h"

namespace cliffdual {

/// Square exact operator with entries in Z[zeta_M] and one shared d^(-k/2) factor.
class ExactOp {
   public:
    ExactOp() = default;
    ExactOp(int d, size_t dim);
    static ExactOp identity(int d, size_t dim);
    /// Entries given as Z[zeta_M] elements scaled by d^(-k/2).
    static ExactOp from_entries(int d, size_t dim, std::vector<CycInt> entries, int k);

    int d() const {
        return d_;
    }
    size_t dim() const {
        return dim_;
    }
    int sqrt_d_exp() const {
        return k_;
    }
    const CycInt &raw(size_t i, size_t j) const {
        return a_[i * dim_ + j];
    }
    CycInt &raw(size_t i, size_t j) {
        return a_[i * dim_ + j];
    }
    const ScalarOps<CycInt> &ops() const {
        return ops_;
    }
    CycScalar entry(size_t i, size_t j) const;
    bool entry_is_zero(size_t i, size_t j) const {
        return raw(i, j).is_zero();
    }

    ExactOp adjoint() const;
    CycScalar trace() const;
    bool is_zero() const;
    size_t nnz() const;
    /// Multiplies every entry by zeta_M^j.
    ExactOp times_root(int64_t j) const;
    /// Divides common factors of d out of the entries.
    void normalize();
    /// Canonical text form: equal operators give equal keys.
    std::string key() const;
    CycMatrix to_matrix() const;

    friend ExactOp operator*(const ExactOp &a, const ExactOp &b);
    friend ExactOp operator+(const ExactOp &a, const ExactOp &b);
    friend ExactOp operator-(const ExactOp &a, const ExactOp &b);
    bool operator==(const ExactOp &o) const;
    bool operator!=(const ExactOp &o) const {
        return !(*this == o);
    }

   private:
    /// Entries rescaled to the exponent k >= k_.
    std::vector<CycInt> at_exponent(int k) const;

    int d_ = 2;
    size_t dim_ = 0;
    std::vector<CycInt> a_;
    int k_ = 0;
    ScalarOps<CycInt> ops_{2};
};

}  // namespace cliffdual

#endif
