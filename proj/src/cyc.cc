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

#include "cliffdual/cyc.h"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "cliffdual/modint.h"

namespace cliffdual {

namespace {

using Poly = std::vector<int64_t>;

Poly poly_div_exact(const Poly &num, const Poly &den) {
    Poly rem = num;
    size_t dn = den.size() - 1;
    Poly q(num.size() - dn, 0);
    for (size_t i = q.size(); i-- > 0;) {
        int64_t c = rem[i + dn];
        q[i] = c;
        for (size_t j = 0; j <= dn; j++) {
            rem[i + j] -= c * den[j];
        }
    }
    return q;
}

Poly cyclotomic_poly(int64_t n) {
    static std::map<int64_t, Poly> cache;
    auto it = cache.find(n);
    if (it != cache.end()) {
        return it->second;
    }
    Poly p(static_cast<size_t>(n) + 1, 0);
    p[0] = -1;
    p[static_cast<size_t>(n)] = 1;
    for (int64_t e = 1; e < n; e++) {
        if (n % e == 0) {
            p = poly_div_exact(p, cyclotomic_poly(e));
        }
    }
    cache[n] = p;
    return p;
}

std::mutex &registry_mutex() {
    static std::mutex mu;
    return mu;
}

std::map<std::pair<int64_t, int64_t>, std::unique_ptr<CycField>> &registry() {
    static std::map<std::pair<int64_t, int64_t>, std::unique_ptr<CycField>> reg;
    return reg;
}

void build_power_table(CycField &f) {
    Poly phi_poly = cyclotomic_poly(f.m);
    f.phi = static_cast<int64_t>(phi_poly.size()) - 1;
    f.power.assign(static_cast<size_t>(f.m), {});
    std::vector<int64_t> cur(static_cast<size_t>(f.phi), 0);
    for (int64_t j = 0; j < f.m; j++) {
        if (j < f.phi) {
            std::fill(cur.begin(), cur.end(), 0);
            cur[static_cast<size_t>(j)] = 1;
        } else {
            int64_t top = cur[static_cast<size_t>(f.phi - 1)];
            for (int64_t i = f.phi - 1; i > 0; i--) {
                cur[static_cast<size_t>(i)] = cur[static_cast<size_t>(i - 1)];
            }
            cur[0] = 0;
            for (int64_t i = 0; i < f.phi; i++) {
                cur[static_cast<size_t>(i)] -= top * phi_poly[static_cast<size_t>(i)];
            }
        }
        for (int64_t i = 0; i < f.phi; i++) {
            if (cur[static_cast<size_t>(i)] != 0) {
                f.power[static_cast<size_t>(j)].push_back({static_cast<int>(i), cur[static_cast<size_t>(i)]});
            }
        }
    }
}

}  // namespace

const CycField &CycField::get(int64_t m, int64_t d) {
    if (m < 1) {
        throw std::invalid_argument("CycField: level must be positive");
    }
    std::lock_guard<std::mutex> lock(registry_mutex());
    auto key = std::make_pair(m, d);
    auto &reg = registry();
    auto it = reg.find(key);
    if (it != reg.end()) {
        return *it->second;
    }
    if (d > 1) {
        if (!is_prime(d)) {
            throw std::invalid_argument("CycField: sqrt tracking requires a prime");
        }
        bool ok = d == 2 ? m % 8 == 0 : (m % d == 0 && (d % 4 == 1 || m % 4 == 0));
        if (!ok) {
            throw std::invalid_argument("CycField: sqrt(d) does not lie in Q(zeta_m)");
        }
    }
    auto f = std::make_unique<CycField>();
    f->m = m;
    f->d = d;
    build_power_table(*f);
    if (d > 1) {
        CycScalar acc(*f);
        if (d == 2) {
            acc += CycScalar::root(*f, m / 8);
            acc += CycScalar::root(*f, m - m / 8);
        } else {
            for (int64_t x = 0; x < d; x++) {
                acc += CycScalar::root(*f, (m / d) * ((x * x) % d));
            }
            if (d % 4 == 3) {
                acc.mul_root(3 * m / 4);
            }
        }
        for (int64_t i = 0; i < f->phi; i++) {
            const Rational &c = acc.coeffs()[static_cast<size_t>(i)];
            if (!c.is_zero()) {
                f->sqrt_d.push_back({static_cast<int>(i), c});
            }
        }
    }
    const CycField &ref = *f;
    reg.emplace(key, std::move(f));
    return ref;
}

const CycField &CycField::for_qudit(int64_t d) {
    return get(cyclotomic_level(d), d);
}

CycScalar::CycScalar() : field_(&CycField::get(1, 1)), c_(1) {
}

CycScalar::CycScalar(const CycField &field) : field_(&field), c_(static_cast<size_t>(field.phi)) {
}

CycScalar::CycScalar(const CycField &field, const Rational &r) : CycScalar(field) {
    c_[0] = r;
}

CycScalar CycScalar::root(const CycField &field, int64_t j) {
    CycScalar out(field);
    for (auto [i, c] : field.power[static_cast<size_t>(mod_floor(j, field.m))]) {
        out.c_[static_cast<size_t>(i)] = Rational(c);
    }
    return out;
}

CycScalar CycScalar::inv_sqrt_d_power(const CycField &field, int k) {
    if (field.d <= 1) {
        throw std::invalid_argument("CycScalar: field does not track sqrt(d)");
    }
    CycScalar out = one(field);
    for (int i = 0; i < k; i++) {
        out.div_sqrt_d();
    }
    return out;
}

CycScalar CycScalar::sqrt_d(const CycField &field) {
    if (field.d <= 1) {
        throw std::invalid_argument("CycScalar: field does not track sqrt(d)");
    }
    CycScalar out(field);
    for (const auto &[i, c] : field.sqrt_d) {
        out.c_[static_cast<size_t>(i)] = c;
    }
    return out;
}

bool CycScalar::is_zero() const {
    for (const auto &c : c_) {
        if (!c.is_zero()) {
            return false;
        }
    }
    return true;
}

void CycScalar::promote_to(const CycField &f) {
    if (field_ == &f) {
        return;
    }
    if (field_->m != 1 || k_ != 0) {
        throw std::invalid_argument("CycScalar: mixed-modulus operands");
    }
    Rational r = c_[0];
    field_ = &f;
    c_.assign(static_cast<size_t>(f.phi), Rational());
    c_[0] = r;
}

void CycScalar::normalize_k() {
    if (k_ < 2) {
        return;
    }
    Rational dd(field_->d);
    while (k_ >= 2) {
        for (auto &c : c_) {
            if (!c.is_zero()) {
                c /= dd;
            }
        }
        k_ -= 2;
    }
}

CycScalar CycScalar::operator-() const {
    CycScalar out = *this;
    for (auto &c : out.c_) {
        if (!c.is_zero()) {
            c = -c;
        }
    }
    return out;
}

CycScalar &CycScalar::operator+=(const CycScalar &o) {
    if (o.field_ != field_) {
        if (o.field_->m == 1 && o.k_ == 0) {
            CycScalar tmp = o;
            tmp.promote_to(*field_);
            return *this += tmp;
        }
        promote_to(*o.field_);
    }
    if (o.is_zero()) {
        return *this;
    }
    if (is_zero()) {
        *this = o;
        return *this;
    }
    if (k_ == o.k_) {
        for (size_t i = 0; i < c_.size(); i++) {
            if (!o.c_[i].is_zero()) {
                c_[i] += o.c_[i];
            }
        }
    } else if (k_ > o.k_) {
        CycScalar tmp = o * sqrt_d(*field_);
        tmp.k_ = o.k_ + 1;
        *this += tmp;
        return *this;
    } else {
        CycScalar tmp = *this * sqrt_d(*field_);
        tmp.k_ = k_ + 1;
        *this = tmp;
        *this += o;
        return *this;
    }
    if (is_zero()) {
        k_ = 0;
    }
    return *this;
}

CycScalar &CycScalar::operator-=(const CycScalar &o) {
    return *this += -o;
}

CycScalar operator*(const CycScalar &a, const CycScalar &b) {
    if (a.field_ != b.field_) {
        if (a.field_->m == 1 && a.k_ == 0) {
            CycScalar out = b;
            out.scale(a.c_[0]);
            return out;
        }
        if (b.field_->m == 1 && b.k_ == 0) {
            CycScalar out = a;
            out.scale(b.c_[0]);
            return out;
        }
        throw std::invalid_argument("CycScalar: mixed-modulus operands");
    }
    const CycField &f = *a.field_;
    CycScalar out(f);
    if (a.is_zero() || b.is_zero()) {
        return out;
    }
    for (size_t i = 0; i < a.c_.size(); i++) {
        if (a.c_[i].is_zero()) {
            continue;
        }
        for (size_t j = 0; j < b.c_.size(); j++) {
            if (b.c_[j].is_zero()) {
                continue;
            }
            Rational p = a.c_[i] * b.c_[j];
            const auto &row = f.power[(i + j) % static_cast<size_t>(f.m)];
            if (row.size() == 1 && row[0].second == 1) {
                out.c_[static_cast<size_t>(row[0].first)] += p;
                continue;
            }
            for (auto [idx, c] : row) {
                if (c == 1) {
                    out.c_[static_cast<size_t>(idx)] += p;
                } else if (c == -1) {
                    out.c_[static_cast<size_t>(idx)] -= p;
                } else {
                    out.c_[static_cast<size_t>(idx)] += p * Rational(c);
                }
            }
        }
    }
    out.k_ = a.k_ + b.k_;
    out.normalize_k();
    if (out.is_zero()) {
        out.k_ = 0;
    }
    return out;
}

CycScalar &CycScalar::operator*=(const CycScalar &o) {
    *this = *this * o;
    return *this;
}

bool CycScalar::operator==(const CycScalar &o) const {
    bool z1 = is_zero();
    bool z2 = o.is_zero();
    if (z1 || z2) {
        return z1 && z2;
    }
    if (field_ != o.field_) {
        if (o.field_->m == 1 && o.k_ == 0) {
            CycScalar tmp = o;
            tmp.promote_to(*field_);
            return *this == tmp;
        }
        if (field_->m == 1 && k_ == 0) {
            return o == *this;
        }
        throw std::invalid_argument("CycScalar: mixed-modulus operands");
    }
    if (k_ == o.k_) {
        return c_ == o.c_;
    }
    return without_sqrt_denominator().c_ == o.without_sqrt_denominator().c_;
}

void CycScalar::mul_root(int64_t j) {
    const CycField &f = *field_;
    j = mod_floor(j, f.m);
    if (j == 0 || is_zero()) {
        return;
    }
    if (f.m == 1) {
        return;
    }
    Coeffs out(c_.size());
    for (size_t i = 0; i < c_.size(); i++) {
        if (c_[i].is_zero()) {
            continue;
        }
        for (auto [idx, c] : f.power[(i + static_cast<size_t>(j)) % static_cast<size_t>(f.m)]) {
            if (c == 1) {
                out[static_cast<size_t>(idx)] += c_[i];
            } else if (c == -1) {
                out[static_cast<size_t>(idx)] -= c_[i];
            } else {
                out[static_cast<size_t>(idx)] += c_[i] * Rational(c);
            }
        }
    }
    c_ = std::move(out);
}

void CycScalar::scale(const Rational &r) {
    if (r.is_zero()) {
        for (auto &c : c_) {
            c = Rational();
        }
        k_ = 0;
        return;
    }
    for (auto &c : c_) {
        if (!c.is_zero()) {
            c *= r;
        }
    }
}

void CycScalar::div_sqrt_d() {
    if (field_->d <= 1) {
        throw std::invalid_argument("CycScalar: field does not track sqrt(d)");
    }
    if (is_zero()) {
        return;
    }
    k_ += 1;
    normalize_k();
}

CycScalar CycScalar::conj() const {
    const CycField &f = *field_;
    CycScalar out(f);
    out.k_ = k_;
    for (size_t i = 0; i < c_.size(); i++) {
        if (c_[i].is_zero()) {
            continue;
        }
        size_t j = (static_cast<size_t>(f.m) - i) % static_cast<size_t>(f.m);
        for (auto [idx, c] : f.power[j]) {
            out.c_[static_cast<size_t>(idx)] += c_[i] * Rational(c);
        }
    }
    return out;
}

CycScalar CycScalar::without_sqrt_denominator() const {
    if (k_ == 0) {
        return *this;
    }
    CycScalar out = *this;
    out.k_ = 0;
    out = out * sqrt_d(*field_);
    out.scale(Rational(1, field_->d));
    return out;
}

std::complex<double> CycScalar::to_complex() const {
    const double pi = std::acos(-1.0);
    std::complex<double> acc = 0;
    for (size_t i = 0; i < c_.size(); i++) {
        if (c_[i].is_zero()) {
            continue;
        }
        double ang = 2 * pi * static_cast<double>(i) / static_cast<double>(field_->m);
        acc += c_[i].to_double() * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    if (k_ > 0) {
        acc /= std::pow(std::sqrt(static_cast<double>(field_->d)), k_);
    }
    return acc;
}

uint64_t CycScalar::mod_p(uint64_t p, uint64_t zeta_image, uint64_t sqrt_d_image) const {
    uint64_t acc = 0;
    uint64_t z = 1;
    for (size_t i = 0; i < c_.size(); i++) {
        if (!c_[i].is_zero()) {
            acc = (acc + mul_mod(c_[i].mod(p), z, p)) % p;
        }
        z = mul_mod(z, zeta_image, p);
    }
    if (k_ > 0) {
        uint64_t s = inv_mod(sqrt_d_image, p);
        acc = mul_mod(acc, pow_mod(s, static_cast<uint64_t>(k_), p), p);
    }
    return acc;
}

nlohmann::json CycScalar::to_json() const {
    nlohmann::json coeffs = nlohmann::json::array();
    for (size_t i = 0; i < c_.size(); i++) {
        if (!c_[i].is_zero()) {
            coeffs.push_back({static_cast<int64_t>(i), c_[i].str()});
        }
    }
    nlohmann::json out = {{"m", field_->m}, {"coeffs", coeffs}, {"sqrtd", k_}};
    int64_t inferred = field_->m == 8 ? 2 : (field_->m % 8 == 0 && is_prime(field_->m / 8) ? field_->m / 8 : 1);
    if (inferred != field_->d) {
        out["d"] = field_->d;
    }
    return out;
}

CycScalar CycScalar::from_json(const nlohmann::json &j) {
    int64_t m = j.at("m").get<int64_t>();
    int64_t d;
    if (j.contains("d")) {
        d = j.at("d").get<int64_t>();
    } else {
        d = m == 8 ? 2 : (m % 8 == 0 && is_prime(m / 8) ? m / 8 : 1);
    }
    const CycField &f = CycField::get(m, d);
    CycScalar out(f);
    for (const auto &entry : j.at("coeffs")) {
        int64_t e = entry.at(0).get<int64_t>();
        Rational r = Rational::parse(entry.at(1).get<std::string>());
        for (auto [idx, c] : f.power[static_cast<size_t>(mod_floor(e, m))]) {
            out.c_[static_cast<size_t>(idx)] += r * Rational(c);
        }
    }
    int k = j.value("sqrtd", 0);
    if (k < 0) {
        throw std::invalid_argument("CycScalar: negative sqrtd");
    }
    if (k > 0 && d <= 1) {
        throw std::invalid_argument("CycScalar: sqrtd given for a field without sqrt(d)");
    }
    out.k_ = out.is_zero() ? 0 : k;
    out.normalize_k();
    return out;
}

std::string CycScalar::str() const {
    return to_json().dump();
}

std::ostream &operator<<(std::ostream &out, const CycScalar &v) {
    return out << v.str();
}

int64_t tau_exponent(int64_t k, int64_t d) {
    int64_t m = cyclotomic_level(d);
    if (d == 2) {
        return mod_floor(2 * k, m);
    }
    int64_t step = (m / d) * ((d + 1) / 2);
    return mod_floor(mod_floor(k, d) * step, m);
}

CycScalar phase_tau(int64_t k, int64_t d) {
    if (!is_prime(d)) {
        throw std::invalid_argument("phase_tau: d must be prime");
    }
    return CycScalar::root(CycField::for_qudit(d), tau_exponent(k, d));
}

CycScalar phase_omega(int64_t k, int64_t d) {
    int64_t m = cyclotomic_level(d);
    return CycScalar::root(CycField::for_qudit(d), mod_floor(k, d) * (m / d));
}

ScalarOps<std::complex<double>>::ScalarOps(int64_t d) : m(cyclotomic_level(d)), inv_sqrt_d(1.0 / std::sqrt(static_cast<double>(d))) {
    const double pi = std::acos(-1.0);
    roots.resize(static_cast<size_t>(m));
    for (int64_t j = 0; j < m; j++) {
        double ang = 2 * pi * static_cast<double>(j) / static_cast<double>(m);
        roots[static_cast<size_t>(j)] = {std::cos(ang), std::sin(ang)};
    }
}

CycScalar CycScalar::from_coeffs(const CycField &field, const Coeffs &coeffs, int k) {
    if (coeffs.size() != static_cast<size_t>(field.phi)) {
        throw std::invalid_argument("CycScalar: coefficient count mismatch");
    }
    if (k < 0 || (k > 0 && field.d <= 1)) {
        throw std::invalid_argument("CycScalar: bad sqrt(d) exponent");
    }
    CycScalar out(field);
    out.c_ = coeffs;
    out.k_ = out.is_zero() ? 0 : k;
    out.normalize_k();
    return out;
}

namespace {

int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw std::overflow_error("CycInt: coefficient overflow");
    }
    return r;
}

int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw std::overflow_error("CycInt: coefficient overflow");
    }
    return r;
}

}  // namespace

bool CycInt::is_zero() const {
    for (int64_t x : c) {
        if (x != 0) {
            return false;
        }
    }
    return true;
}

CycInt &CycInt::operator+=(const CycInt &o) {
    for (size_t i = 0; i < c.size(); i++) {
        c[i] = checked_add(c[i], o.c[i]);
    }
    return *this;
}

CycInt &CycInt::operator-=(const CycInt &o) {
    for (size_t i = 0; i < c.size(); i++) {
        c[i] = checked_add(c[i], -o.c[i]);
    }
    return *this;
}

CycInt CycInt::operator-() const {
    CycInt out = *this;
    for (auto &x : out.c) {
        x = -x;
    }
    return out;
}

bool CycInt::divisible_by(int64_t q) const {
    for (int64_t x : c) {
        if (x % q != 0) {
            return false;
        }
    }
    return true;
}

void CycInt::divide_exact(int64_t q) {
    for (auto &x : c) {
        x /= q;
    }
}

CycInt ScalarOps<CycInt>::root(int64_t j) const {
    CycInt v = zero();
    for (auto [idx, c] : field->power[static_cast<size_t>(mod_floor(j, field->m))]) {
        v.c[static_cast<size_t>(idx)] = c;
    }
    return v;
}

void ScalarOps<CycInt>::mul_root(CycInt &v, int64_t j) const {
    j = mod_floor(j, field->m);
    if (j == 0) {
        return;
    }
    size_t m = static_cast<size_t>(field->m);
    CycInt out = zero();
    for (size_t i = 0; i < v.c.size(); i++) {
        if (v.c[i] == 0) {
            continue;
        }
        for (auto [idx, c] : field->power[(i + static_cast<size_t>(j)) % m]) {
            out.c[static_cast<size_t>(idx)] = checked_add(out.c[static_cast<size_t>(idx)], checked_mul(c, v.c[i]));
        }
    }
    v = std::move(out);
}

CycInt ScalarOps<CycInt>::mul(const CycInt &a, const CycInt &b) const {
    size_t m = static_cast<size_t>(field->m);
    CycInt out = zero();
    for (size_t i = 0; i < a.c.size(); i++) {
        if (a.c[i] == 0) {
            continue;
        }
        for (size_t j = 0; j < b.c.size(); j++) {
            if (b.c[j] == 0) {
                continue;
            }
            int64_t ab = checked_mul(a.c[i], b.c[j]);
            for (auto [idx, c] : field->power[(i + j) % m]) {
                out.c[static_cast<size_t>(idx)] = checked_add(out.c[static_cast<size_t>(idx)], checked_mul(c, ab));
            }
        }
    }
    return out;
}

CycInt ScalarOps<CycInt>::conj(const CycInt &v) const {
    size_t m = static_cast<size_t>(field->m);
    CycInt out = zero();
    for (size_t i = 0; i < v.c.size(); i++) {
        if (v.c[i] == 0) {
            continue;
        }
        for (auto [idx, c] : field->power[(m - i) % m]) {
            out.c[static_cast<size_t>(idx)] = checked_add(out.c[static_cast<size_t>(idx)], checked_mul(c, v.c[i]));
        }
    }
    return out;
}

CycInt ScalarOps<CycInt>::mul_sqrt_d(const CycInt &v) const {
    CycInt s = zero();
    for (const auto &[idx, c] : field->sqrt_d) {
        if (!c.is_small() || c.denominator() != 1) {
            throw std::invalid_argument("CycInt: sqrt(d) is not integral in the power basis");
        }
        s.c[static_cast<size_t>(idx)] = c.numerator().get_si();
    }
    return mul(v, s);
}

CycScalar ScalarOps<CycInt>::to_cyc(const CycInt &v, int k) const {
    CycScalar::Coeffs coeffs(v.c.size());
    for (size_t i = 0; i < v.c.size(); i++) {
        coeffs[i] = Rational(v.c[i]);
    }
    return CycScalar::from_coeffs(*field, coeffs, k);
}

std::complex<double> ScalarOps<CycInt>::to_complex(const CycInt &v, int k) const {
    const double pi = std::acos(-1.0);
    std::complex<double> acc = 0;
    for (size_t i = 0; i < v.c.size(); i++) {
        if (v.c[i] != 0) {
            double ang = 2 * pi * static_cast<double>(i) / static_cast<double>(field->m);
            acc += static_cast<double>(v.c[i]) * std::complex<double>(std::cos(ang), std::sin(ang));
        }
    }
    return acc * std::pow(static_cast<double>(field->d), -0.5 * k);
}

}  // namespace cliffdual
