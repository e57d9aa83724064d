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

#ifndef CLIFFDUAL_RATIONAL_H
#define CLIFFDUAL_RATIONAL_H

#include <cstdint>
#include <gmpxx.h>
#include <memory>
#include <string>

namespace cliffdual {

/// Arbitrary precision rational with an inline 64-bit fast path.
///
/// Values that fit in int64 numerator/denominator never touch GMP.
class Rational {
   public:
    Rational() = default;
    Rational(int64_t v) : num_(v) {
    }
    Rational(int64_t num, int64_t den);
    explicit Rational(const mpq_class &v);

    static Rational parse(const std::string &text);

    bool is_zero() const {
        return !big_ && num_ == 0;
    }
    bool is_one() const {
        return !big_ && num_ == 1 && den_ == 1;
    }
    bool is_small() const {
        return !big_;
    }
    int sign() const;

    mpq_class to_mpq() const;
    mpz_class numerator() const;
    mpz_class denominator() const;
    double to_double() const;
    std::string str() const;

    /// Image in Z/pZ. Requires the denominator to be invertible mod p.
    uint64_t mod(uint64_t p) const;

    Rational operator-() const;
    Rational &operator+=(const Rational &o);
    Rational &operator-=(const Rational &o);
    Rational &operator*=(const Rational &o);
    Rational &operator/=(const Rational &o);
    friend Rational operator+(Rational a, const Rational &b) {
        a += b;
        return a;
    }
    friend Rational operator-(Rational a, const Rational &b) {
        a -= b;
        return a;
    }
    friend Rational operator*(Rational a, const Rational &b) {
        a *= b;
        return a;
    }
    friend Rational operator/(Rational a, const Rational &b) {
        a /= b;
        return a;
    }
    bool operator==(const Rational &o) const;
    bool operator!=(const Rational &o) const {
        return !(*this == o);
    }
    bool operator<(const Rational &o) const;

   private:
    void set_big(mpq_class v);

    int64_t num_ = 0;
    int64_t den_ = 1;
    std::shared_ptr<const mpq_class> big_;
};

std::ostream &operator<<(std::ostream &out, const Rational &r);

}  // namespace cliffdual

#endif
