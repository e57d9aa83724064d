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

#ifndef CLIFFDUAL_MODINT_H
#define CLIFFDUAL_MODINT_H

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace cliffdual {

/// Residue modulo a small positive modulus.
struct ModInt {
    int64_t value = 0;
    int64_t modulus = 1;

    ModInt() = default;
    ModInt(int64_t v, int64_t m) : value(0), modulus(m) {
        if (m <= 0) {
            throw std::invalid_argument("ModInt: modulus must be positive");
        }
        value = ((v % m) + m) % m;
    }

    ModInt operator+(const ModInt &o) const {
        check(o);
        return ModInt(value + o.value, modulus);
    }
    ModInt operator-(const ModInt &o) const {
        check(o);
        return ModInt(value - o.value, modulus);
    }
    ModInt operator*(const ModInt &o) const {
        check(o);
        return ModInt(value * o.value, modulus);
    }
    ModInt operator-() const {
        return ModInt(-value, modulus);
    }
    bool operator==(const ModInt &o) const {
        return value == o.value && modulus == o.modulus;
    }
    bool operator!=(const ModInt &o) const {
        return !(*this == o);
    }

   private:
    void check(const ModInt &o) const {
        if (o.modulus != modulus) {
            throw std::invalid_argument("ModInt: mixed moduli");
        }
    }
};

inline int64_t mod_floor(int64_t a, int64_t m) {
    int64_t r = a % m;
    return r < 0 ? r + m : r;
}

int64_t gcd_i64(int64_t a, int64_t b);
int64_t lcm_i64(int64_t a, int64_t b);
bool is_prime(int64_t n);

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t p);
uint64_t pow_mod(uint64_t a, uint64_t e, uint64_t p);
uint64_t inv_mod(uint64_t a, uint64_t p);

/// Multiplicative inverse of a modulo a prime d, as a residue in [0, d).
int64_t inv_mod_prime(int64_t a, int64_t d);

/// Legendre symbol (a/d) for an odd prime d.
int legendre(int64_t a, int64_t d);

/// Order D of tau: 2d for d = 2, d for odd d.
inline int64_t tau_order(int64_t d) {
    return d == 2 ? 4 : d;
}

/// Cyclotomic level M = lcm(2D, 8) used for amplitudes of d-dimensional Cliffords.
inline int64_t cyclotomic_level(int64_t d) {
    return lcm_i64(2 * tau_order(d), 8);
}

/// Distinct prime factors in increasing order.
std::vector<int64_t> prime_factors(int64_t n);

int64_t euler_phi(int64_t n);

/// Smallest prime p with p = 1 mod m and p >= lower_bound.
uint64_t prime_one_mod(uint64_t m, uint64_t lower_bound);

/// An element of exact multiplicative order m modulo the prime p (requires m | p-1).
uint64_t root_of_unity_mod(uint64_t m, uint64_t p);

}  // namespace cliffdual

#endif
