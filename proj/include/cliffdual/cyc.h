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

#ifndef CLIFFDUAL_CYC_H
#define CLIFFDUAL_CYC_H

#include <boost/container/small_vector.hpp>
#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cliffdual/rational.h"
#include "json.hpp"

namespace cliffdual {

/// Cyclotomic field Q(zeta_m), optionally with sqrt(d) denominators tracked for a prime d.
///
/// Elements are stored in the power basis zeta^0 .. zeta^(phi(m)-1), which makes
/// equality a coefficient comparison.
struct CycField {
    int64_t m;
    int64_t d;  // 1 when no sqrt(d) tracking is needed
    int64_t phi;
    /// Sparse expansion of zeta^j in the power basis, for j in [0, m).
    std::vector<std::vector<std::pair<int, int64_t>>> power;
    /// sqrt(d) expanded in the power basis (empty when d == 1).
    std::vector<std::pair<int, Rational>> sqrt_d;

    /// Shared instance for (m, d). Requires sqrt(d) in Q(zeta_m) when d > 1.
    static const CycField &get(int64_t m, int64_t d = 1);
    /// The field used for amplitudes of d-dimensional Cliffords (m = lcm(2D, 8)).
    static const CycField &for_qudit(int64_t d);
};

class CycScalar {
   public:
    using Coeffs = boost::container::small_vector<Rational, 8>;

    /// Zero of Q.
    CycScalar();
    explicit CycScalar(const CycField &field);
    CycScalar(const CycField &field, const Rational &r);

    static CycScalar zero(const CycField &field) {
        return CycScalar(field);
    }
    static CycScalar one(const CycField &field) {
        return CycScalar(field, Rational(1));
    }
    /// zeta_m^j.
    static CycScalar root(const CycField &field, int64_t j);
    /// d^(-k/2).
    static CycScalar inv_sqrt_d_power(const CycField &field, int k);
    static CycScalar sqrt_d(const CycField &field);
    /// Power-basis coefficients times d^(-k/2).
    static CycScalar from_coeffs(const CycField &field, const Coeffs &coeffs, int k = 0);

    const CycField &field() const {
        return *field_;
    }
    int sqrt_d_denom() const {
        return k_;
    }
    const Coeffs &coeffs() const {
        return c_;
    }
    bool is_zero() const;

    CycScalar operator-() const;
    CycScalar &operator+=(const CycScalar &o);
    CycScalar &operator-=(const CycScalar &o);
    CycScalar &operator*=(const CycScalar &o);
    friend CycScalar operator+(CycScalar a, const CycScalar &b) {
        a += b;
        return a;
    }
    friend CycScalar operator-(CycScalar a, const CycScalar &b) {
        a -= b;
        return a;
    }
    friend CycScalar operator*(const CycScalar &a, const CycScalar &b);
    bool operator==(const CycScalar &o) const;
    bool operator!=(const CycScalar &o) const {
        return !(*this == o);
    }

    /// Multiplies by zeta^j in place.
    void mul_root(int64_t j);
    /// Multiplies by a rational in place.
    void scale(const Rational &r);
    /// Divides by sqrt(d) in place.
    void div_sqrt_d();
    CycScalar conj() const;

    std::complex<double> to_complex() const;
    /// Image under zeta -> zeta_image, sqrt(d) -> sqrt_d_image in Z/pZ.
    uint64_t mod_p(uint64_t p, uint64_t zeta_image, uint64_t sqrt_d_image) const;

    /// Equivalent value with sqrt_d_denom == 0.
    CycScalar without_sqrt_denominator() const;

    nlohmann::json to_json() const;
    static CycScalar from_json(const nlohmann::json &j);
    std::string str() const;

   private:
    void normalize_k();
    void promote_to(const CycField &f);

    const CycField *field_;
    int k_ = 0;
    Coeffs c_;
};

std::ostream &operator<<(std::ostream &out, const CycScalar &v);

/// tau^k for qudit dimension d, where tau = (-1)^d exp(i pi / d) has order D.
CycScalar phase_tau(int64_t k, int64_t d);
/// omega^k with omega = exp(2 pi i / d).
CycScalar phase_omega(int64_t k, int64_t d);
/// zeta exponent (mod m) representing tau^k in CycField::for_qudit(d).
int64_t tau_exponent(int64_t k, int64_t d);

/// Arithmetic for a scalar backend used by templated state code.
template <typename T>
struct ScalarOps;

template <>
struct ScalarOps<CycScalar> {
    const CycField *field;
    explicit ScalarOps(int64_t d) : field(&CycField::for_qudit(d)) {
    }
    CycScalar zero() const {
        return CycScalar::zero(*field);
    }
    CycScalar one() const {
        return CycScalar::one(*field);
    }
    bool is_zero(const CycScalar &v) const {
        return v.is_zero();
    }
    void mul_root(CycScalar &v, int64_t j) const {
        v.mul_root(j);
    }
    void div_sqrt_d(CycScalar &v) const {
        v.div_sqrt_d();
    }
    CycScalar conj(const CycScalar &v) const {
        return v.conj();
    }
    std::complex<double> to_complex(const CycScalar &v) const {
        return v.to_complex();
    }
};

template <>
struct ScalarOps<std::complex<double>> {
    int64_t m;
    double inv_sqrt_d;
    std::vector<std::complex<double>> roots;
    explicit ScalarOps(int64_t d);
    std::complex<double> zero() const {
        return 0.0;
    }
    std::complex<double> one() const {
        return 1.0;
    }
    bool is_zero(const std::complex<double> &v) const {
        return v == std::complex<double>(0.0);
    }
    void mul_root(std::complex<double> &v, int64_t j) const {
        v *= roots[static_cast<size_t>(((j % m) + m) % m)];
    }
    void div_sqrt_d(std::complex<double> &v) const {
        v *= inv_sqrt_d;
    }
    std::complex<double> conj(const std::complex<double> &v) const {
        return std::conj(v);
    }
    std::complex<double> to_complex(const std::complex<double> &v) const {
        return v;
    }
};

/// Element of Z[zeta_m] in the power basis. Used for exact state vectors with a shared sqrt(d) denominator.
struct CycInt {
    boost::container::small_vector<int64_t, 8> c;

    CycInt() = default;
    explicit CycInt(size_t phi) : c(phi, 0) {
    }
    bool is_zero() const;
    CycInt &operator+=(const CycInt &o);
    CycInt &operator-=(const CycInt &o);
    CycInt operator-() const;
    bool operator==(const CycInt &o) const {
        return c == o.c;
    }
    bool operator!=(const CycInt &o) const {
        return c != o.c;
    }
    /// Whether every coefficient is divisible by q.
    bool divisible_by(int64_t q) const;
    void divide_exact(int64_t q);
};

template <>
struct ScalarOps<CycInt> {
    const CycField *field;
    explicit ScalarOps(int64_t d) : field(&CycField::for_qudit(d)) {
    }
    CycInt zero() const {
        return CycInt(static_cast<size_t>(field->phi));
    }
    CycInt one() const {
        CycInt v = zero();
        v.c[0] = 1;
        return v;
    }
    CycInt root(int64_t j) const;
    bool is_zero(const CycInt &v) const {
        return v.is_zero();
    }
    void mul_root(CycInt &v, int64_t j) const;
    CycInt mul(const CycInt &a, const CycInt &b) const;
    CycInt conj(const CycInt &v) const;
    /// v * sqrt(d).
    CycInt mul_sqrt_d(const CycInt &v) const;
    /// v * d^(-k/2) as a field element.
    CycScalar to_cyc(const CycInt &v, int k) const;
    std::complex<double> to_complex(const CycInt &v, int k) const;
};

}  // namespace cliffdual

#endif
