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

#include <random>

#include "cliffdual/cyc.h"
#include "cliffdual/modint.h"
#include "gtest/gtest.h"

using namespace cliffdual;

TEST(rational, fast_path_and_overflow) {
    Rational a(INT64_MAX - 1);
    Rational b(5);
    Rational c = a + b;
    ASSERT_FALSE(c.is_small());
    ASSERT_EQ(c - b, a);
    ASSERT_TRUE((c - b).is_small());
    ASSERT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
    ASSERT_EQ(Rational(2, -4), Rational(-1, 2));
    ASSERT_EQ(Rational::parse("6/8"), Rational(3, 4));
    ASSERT_EQ(Rational(3, 4).str(), "3/4");
    ASSERT_EQ(Rational(1, 3).mod(7), 5u);
}

TEST(rational, random_against_gmp) {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 2000; k++) {
        int64_t n1 = static_cast<int64_t>(rng()) >> (rng() % 63);
        int64_t d1 = (static_cast<int64_t>(rng() >> (1 + rng() % 62))) | 1;
        int64_t n2 = static_cast<int64_t>(rng()) >> (rng() % 63);
        int64_t d2 = (static_cast<int64_t>(rng() >> (1 + rng() % 62))) | 1;
        Rational a(n1, d1), b(n2, d2);
        mpq_class qa = a.to_mpq(), qb = b.to_mpq();
        ASSERT_EQ((a + b).to_mpq(), qa + qb);
        ASSERT_EQ((a - b).to_mpq(), qa - qb);
        ASSERT_EQ((a * b).to_mpq(), qa * qb);
        if (!b.is_zero()) {
            ASSERT_EQ((a / b).to_mpq(), qa / qb);
        }
        ASSERT_EQ(a < b, qa < qb);
    }
}

TEST(scalars, legendre) {
    ASSERT_EQ(legendre(4, 5), 1);
    ASSERT_EQ(legendre(1, 7), 1);
    ASSERT_EQ(legendre(3, 5), -1);
    ASSERT_EQ(legendre(10, 5), 0);
    ASSERT_THROW(legendre(1, 2), std::invalid_argument);
    for (int64_t d : {3, 5, 7, 11, 13, 17, 19, 23}) {
        std::vector<bool> square(static_cast<size_t>(d), false);
        for (int64_t x = 1; x < d; x++) {
            square[static_cast<size_t>(x * x % d)] = true;
        }
        for (int64_t a = 1; a < d; a++) {
            ASSERT_EQ(legendre(a, d), square[static_cast<size_t>(a)] ? 1 : -1);
        }
    }
}

TEST(scalars, phase_tau) {
    const CycField &f2 = CycField::for_qudit(2);
    ASSERT_EQ(f2.m, 8);
    CycScalar i = CycScalar::root(f2, 2);
    ASSERT_EQ(phase_tau(1, 2), i);
    ASSERT_EQ(phase_tau(2, 2), CycScalar(f2, Rational(-1)));
    ASSERT_EQ(phase_tau(2, 2), phase_omega(1, 2));
    ASSERT_EQ(phase_tau(0, 5), CycScalar::one(CycField::for_qudit(5)));
    ASSERT_EQ(phase_tau(3, 3), CycScalar::one(CycField::for_qudit(3)));
    const double pi = std::acos(-1.0);
    for (int64_t d : {2, 3, 5, 7, 11, 13}) {
        int64_t D = tau_order(d);
        std::complex<double> tau = std::polar(1.0, pi / static_cast<double>(d)) * (d % 2 ? -1.0 : 1.0);
        for (int64_t k = -2 * D; k <= 2 * D; k++) {
            ASSERT_EQ(phase_tau(k, d) * phase_tau(-k, d), CycScalar::one(CycField::for_qudit(d)));
            ASSERT_EQ(phase_tau(2 * k, d), phase_omega(k, d));
            ASSERT_LT(std::abs(phase_tau(k, d).to_complex() - std::pow(tau, static_cast<double>(k))), 1e-9);
        }
        ASSERT_EQ(phase_tau(D, d), CycScalar::one(CycField::for_qudit(d)));
        for (int64_t k = 1; k < D; k++) {
            ASSERT_NE(phase_tau(k, d), CycScalar::one(CycField::for_qudit(d)));
        }
    }
}

TEST(scalars, ring_identities) {
    const CycField &f = CycField::for_qudit(2);
    CycScalar tau = phase_tau(1, 2);
    ASSERT_EQ(tau * tau.conj(), CycScalar::one(f));
    CycScalar w8 = CycScalar::root(f, 1);
    CycScalar p = CycScalar::one(f);
    for (int k = 0; k < 8; k++) {
        p *= w8;
    }
    ASSERT_EQ(p, CycScalar::one(f));
    CycScalar h = CycScalar::inv_sqrt_d_power(f, 1);
    ASSERT_EQ(h * h + h * h, CycScalar::one(f));
    ASSERT_EQ(h.sqrt_d_denom(), 1);
    ASSERT_THROW(CycScalar::one(f) + CycScalar::one(CycField::for_qudit(3)), std::invalid_argument);
}

TEST(scalars, sqrt_d_squares_to_d) {
    for (int64_t d : {2, 3, 5, 7, 11, 13}) {
        const CycField &f = CycField::for_qudit(d);
        CycScalar s = CycScalar::sqrt_d(f);
        ASSERT_EQ(s * s, CycScalar(f, Rational(d)));
        ASSERT_LT(std::abs(s.to_complex() - std::sqrt(static_cast<double>(d))), 1e-12);
        CycScalar inv = CycScalar::inv_sqrt_d_power(f, 1);
        ASSERT_EQ(s * inv, CycScalar::one(f));
        ASSERT_EQ(inv, inv.without_sqrt_denominator());
        ASSERT_EQ(inv.without_sqrt_denominator().sqrt_d_denom(), 0);
    }
}

namespace {

CycScalar random_element(const CycField &f, std::mt19937_64 &rng) {
    CycScalar out(f);
    int terms = 1 + static_cast<int>(rng() % 4);
    for (int k = 0; k < terms; k++) {
        CycScalar r = CycScalar::root(f, static_cast<int64_t>(rng() % static_cast<uint64_t>(f.m)));
        r.scale(Rational(static_cast<int64_t>(rng() % 21) - 10, 1 + static_cast<int64_t>(rng() % 6)));
        if (f.d > 1 && rng() % 2) {
            r.div_sqrt_d();
        }
        out += r;
    }
    return out;
}

}  // namespace

TEST(scalars, equality_agrees_with_float) {
    std::mt19937_64 rng(11);
    for (int64_t d : {2, 3, 5}) {
        const CycField &f = CycField::for_qudit(d);
        for (int k = 0; k < 10000 / 3; k++) {
            CycScalar a = random_element(f, rng);
            CycScalar b = random_element(f, rng);
            CycScalar c = random_element(f, rng);
            ASSERT_EQ((a + b) * c, a * c + b * c);
            ASSERT_EQ(a * b, b * a);
            ASSERT_EQ((a * b).conj(), a.conj() * b.conj());
            ASSERT_LT(std::abs((a * b).to_complex() - a.to_complex() * b.to_complex()), 1e-9);
            CycScalar a2 = a - b + b;
            ASSERT_EQ(a, a2);
            ASSERT_LT(std::abs(a.to_complex() - a2.to_complex()), 1e-10);
            if (a == b) {
                ASSERT_LT(std::abs(a.to_complex() - b.to_complex()), 1e-10);
            }
            if (std::abs(a.to_complex() - b.to_complex()) > 1e-6) {
                ASSERT_NE(a, b);
            }
        }
    }
}

TEST(scalars, json_roundtrip) {
    std::mt19937_64 rng(3);
    for (int64_t d : {2, 3, 7}) {
        const CycField &f = CycField::for_qudit(d);
        for (int k = 0; k < 100; k++) {
            CycScalar a = random_element(f, rng);
            ASSERT_EQ(CycScalar::from_json(a.to_json()), a);
        }
    }
    auto j = nlohmann::json::parse(R"({"m":8,"coeffs":[[0,"1/1"]],"sqrtd":1})");
    CycScalar h = CycScalar::from_json(j);
    ASSERT_EQ(h * h, CycScalar(CycField::for_qudit(2), Rational(1, 2)));
}

TEST(scalars, mod_p_is_a_ring_map) {
    const CycField &f = CycField::for_qudit(2);
    uint64_t p = prime_one_mod(8, 1 << 20);
    uint64_t z = root_of_unity_mod(8, p);
    uint64_t s = CycScalar::sqrt_d(f).mod_p(p, z, 1);
    ASSERT_EQ(mul_mod(s, s, p), 2u);
    std::mt19937_64 rng(1);
    for (int k = 0; k < 200; k++) {
        CycScalar a = random_element(f, rng);
        CycScalar b = random_element(f, rng);
        ASSERT_EQ((a * b).mod_p(p, z, s), mul_mod(a.mod_p(p, z, s), b.mod_p(p, z, s), p));
        ASSERT_EQ((a + b).mod_p(p, z, s), (a.mod_p(p, z, s) + b.mod_p(p, z, s)) % p);
    }
}
