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

#include "cliffdual/modint.h"

namespace cliffdual {

int64_t gcd_i64(int64_t a, int64_t b) {
    if (a < 0) {
        a = -a;
    }
    if (b < 0) {
        b = -b;
    }
    while (b) {
        int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

int64_t lcm_i64(int64_t a, int64_t b) {
    return a / gcd_i64(a, b) * b;
}

bool is_prime(int64_t n) {
    if (n < 2) {
        return false;
    }
    for (int64_t k = 2; k * k <= n; k++) {
        if (n % k == 0) {
            return false;
        }
    }
    return true;
}

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

uint64_t pow_mod(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return r;
}

uint64_t inv_mod(uint64_t a, uint64_t p) {
    if (a % p == 0) {
        throw std::domain_error("inv_mod: zero has no inverse");
    }
    return pow_mod(a, p - 2, p);
}

int64_t inv_mod_prime(int64_t a, int64_t d) {
    return static_cast<int64_t>(inv_mod(static_cast<uint64_t>(mod_floor(a, d)), static_cast<uint64_t>(d)));
}

int legendre(int64_t a, int64_t d) {
    if (d == 2 || !is_prime(d)) {
        throw std::invalid_argument("legendre: modulus must be an odd prime");
    }
    int64_t r = mod_floor(a, d);
    if (r == 0) {
        return 0;
    }
    uint64_t e = pow_mod(static_cast<uint64_t>(r), static_cast<uint64_t>((d - 1) / 2), static_cast<uint64_t>(d));
    return e == 1 ? 1 : -1;
}

std::vector<int64_t> prime_factors(int64_t n) {
    std::vector<int64_t> out;
    for (int64_t k = 2; k * k <= n; k++) {
        if (n % k == 0) {
            out.push_back(k);
            while (n % k == 0) {
                n /= k;
            }
        }
    }
    if (n > 1) {
        out.push_back(n);
    }
    return out;
}

int64_t euler_phi(int64_t n) {
    int64_t r = n;
    for (int64_t p : prime_factors(n)) {
        r = r / p * (p - 1);
    }
    return r;
}

namespace {

bool is_prime_u64(uint64_t n) {
    if (n < 2) {
        return false;
    }
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) {
            return n == p;
        }
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        s++;
    }
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) {
            continue;
        }
        bool composite = true;
        for (int i = 1; i < s; i++) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) {
            return false;
        }
    }
    return true;
}

}  // namespace

uint64_t prime_one_mod(uint64_t m, uint64_t lower_bound) {
    uint64_t k = (lower_bound + m - 1) / m;
    if (k == 0) {
        k = 1;
    }
    while (true) {
        uint64_t p = k * m + 1;
        if (p >= lower_bound && is_prime_u64(p)) {
            return p;
        }
        k++;
    }
}

uint64_t root_of_unity_mod(uint64_t m, uint64_t p) {
    if ((p - 1) % m != 0) {
        throw std::invalid_argument("root_of_unity_mod: m does not divide p-1");
    }
    auto factors = prime_factors(static_cast<int64_t>(m));
    for (uint64_t g = 2; g < p; g++) {
        uint64_t z = pow_mod(g, (p - 1) / m, p);
        bool ok = true;
        for (int64_t q : factors) {
            if (pow_mod(z, m / static_cast<uint64_t>(q), p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            return z;
        }
    }
    throw std::logic_error("root_of_unity_mod: none found");
}

}  // namespace cliffdual
