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

#ifndef CLIFFDUAL_GF_MATRIX_H
#define CLIFFDUAL_GF_MATRIX_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cliffdual {

/// Vector over Z_d, one residue per byte.
using Vec = std::vector<uint8_t>;

/// Dense matrix over Z_d for prime d. Rows are bit-packed words when d = 2.
class GFMatrix {
   public:
    GFMatrix() = default;
    GFMatrix(int d, size_t rows, size_t cols);

    static GFMatrix identity(int d, size_t n);
    static GFMatrix from_rows(int d, size_t cols, const std::vector<Vec> &rows);
    /// Rows given as digit strings, e.g. {"0110", "1001"}.
    static GFMatrix from_strings(int d, const std::vector<std::string> &rows);

    int d() const {
        return d_;
    }
    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }

    uint8_t get(size_t i, size_t j) const {
        if (d_ == 2) {
            return static_cast<uint8_t>((bits_[i * words_ + (j >> 6)] >> (j & 63)) & 1);
        }
        return data_[i * cols_ + j];
    }
    void set(size_t i, size_t j, int64_t v);

    Vec row(size_t i) const;
    void set_row(size_t i, const Vec &v);
    Vec col(size_t j) const;
    bool row_is_zero(size_t i) const;
    /// row[dst] += c * row[src].
    void add_row_multiple(size_t dst, size_t src, int64_t c);
    void scale_row(size_t i, int64_t c);
    void swap_rows(size_t i, size_t j);
    void append_row(const Vec &v);
    /// First min(k, rows) rows.
    GFMatrix top_rows(size_t k) const;

    GFMatrix transpose() const;
    /// Matrix times column vector.
    Vec apply(const Vec &v) const;
    /// Row vector times matrix.
    Vec left_apply(const Vec &v) const;

    friend GFMatrix operator*(const GFMatrix &a, const GFMatrix &b);
    friend GFMatrix operator+(const GFMatrix &a, const GFMatrix &b);
    bool operator==(const GFMatrix &o) const;
    bool operator!=(const GFMatrix &o) const {
        return !(*this == o);
    }
    bool operator<(const GFMatrix &o) const;

    std::string row_string(size_t i) const;
    std::vector<std::string> to_strings() const;
    std::string str() const;
    /// Packed word of row i (d = 2, cols <= 64 only).
    uint64_t row_word(size_t i) const {
        return bits_[i * words_];
    }

   private:
    int d_ = 2;
    size_t rows_ = 0;
    size_t cols_ = 0;
    size_t words_ = 0;
    std::vector<uint64_t> bits_;
    std::vector<uint8_t> data_;
};

/// Reduced row echelon form with zero rows removed. Pivot columns written to pivots if given.
GFMatrix rref(const GFMatrix &m, std::vector<size_t> *pivots = nullptr);
size_t rank(const GFMatrix &m);
/// Solves m x = b.
std::optional<Vec> solve(const GFMatrix &m, const Vec &b);
std::optional<GFMatrix> inverse(const GFMatrix &m);

int64_t dot(const Vec &a, const Vec &b, int d);
/// u^T g v mod d.
int64_t bilinear(const Vec &u, const GFMatrix &g, const Vec &v);
Vec vec_add(const Vec &a, const Vec &b, int d);
Vec vec_scale(const Vec &a, int64_t c, int d);
bool vec_is_zero(const Vec &a);
Vec vec_from_string(const std::string &s);
std::string vec_to_string(const Vec &v);
Vec ones(size_t t);
Vec unit(size_t t, size_t i);

/// Index of v in [0, d^t) as a base-d number with entry 0 least significant.
uint64_t vec_code(const Vec &v, int d);
Vec vec_decode(uint64_t code, int d, size_t t);
uint64_t int_pow(uint64_t base, size_t exp);

}  // namespace cliffdual

#endif
