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

#include "cliffdual/rational.h"

#include <numeric>
#include <ostream>
#include <stdexcept>

namespace cliffdual {

namespace {

using i128 = __int128;

bool fits(i128 v) {
    return v >= INT64_MIN + 1 && v <= INT64_MAX;
}

i128 gcd128(i128 a, i128 b) {
    if (a < 0) {
        a = -a;
    }
    if (b < 0) {
        b = -b;
    }
    while (b) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

mpz_class mpz_from_i64(int64_t v) {
    return mpz_class(static_cast<long>(v));
}

}  // namespace

Rational::Rational(int64_t num, int64_t den) {
    if (den == 0) {
        throw std::domain_error("Rational: zero denominator");
    }
    i128 n = num;
    i128 d = den;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    i128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    if (fits(n) && fits(d)) {
        num_ = static_cast<int64_t>(n);
        den_ = static_cast<int64_t>(d);
    } else {
        mpq_class q(mpz_from_i64(num), mpz_from_i64(den));
        q.canonicalize();
        set_big(q);
    }
}

Rational::Rational(const mpq_class &v) {
    mpq_class q = v;
    q.canonicalize();
    set_big(q);
}

void Rational::set_big(mpq_class v) {
    if (v.get_num().fits_slong_p() && v.get_den().fits_slong_p()) {
        long n = v.get_num().get_si();
        long d = v.get_den().get_si();
        if (n != INT64_MIN && d != INT64_MIN) {
            num_ = n;
            den_ = d;
            big_.reset();
            return;
        }
    }
    num_ = 0;
    den_ = 1;
    big_ = std::make_shared<const mpq_class>(std::move(v));
}

Rational Rational::parse(const std::string &text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0) {
        throw std::invalid_argument("Rational: cannot parse '" + text + "'");
    }
    if (q.get_den() == 0) {
        throw std::invalid_argument("Rational: zero denominator in '" + text + "'");
    }
    return Rational(q);
}

int Rational::sign() const {
    if (big_) {
        return sgn(*big_);
    }
    return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
    if (big_) {
        return *big_;
    }
    return mpq_class(mpz_from_i64(num_), mpz_from_i64(den_));
}

mpz_class Rational::numerator() const {
    return big_ ? mpz_class(big_->get_num()) : mpz_from_i64(num_);
}

mpz_class Rational::denominator() const {
    return big_ ? mpz_class(big_->get_den()) : mpz_from_i64(den_);
}

double Rational::to_double() const {
    if (big_) {
        return big_->get_d();
    }
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::str() const {
    if (big_) {
        std::string s = big_->get_num().get_str() + "/" + big_->get_den().get_str();
        return s;
    }
    return std::to_string(num_) + "/" + std::to_string(den_);
}

uint64_t Rational::mod(uint64_t p) const {
    mpz_class n = numerator();
    mpz_class d = denominator();
    mpz_class pp(static_cast<unsigned long>(p));
    mpz_class dinv;
    if (mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), pp.get_mpz_t()) == 0) {
        throw std::domain_error("Rational::mod: denominator not invertible");
    }
    mpz_class r = n * dinv;
    mpz_class out;
    mpz_fdiv_r(out.get_mpz_t(), r.get_mpz_t(), pp.get_mpz_t());
    return out.get_ui();
}

Rational Rational::operator-() const {
    Rational r;
    if (big_) {
        r.set_big(-*big_);
    } else {
        r.num_ = -num_;
        r.den_ = den_;
    }
    return r;
}

Rational &Rational::operator+=(const Rational &o) {
    if (!big_ && !o.big_) {
        if (den_ == 1 && o.den_ == 1) {
            int64_t s;
            if (!__builtin_add_overflow(num_, o.num_, &s) && s != INT64_MIN) {
                num_ = s;
                return *this;
            }
        }
        i128 g = std::gcd(den_, o.den_);
        i128 a = static_cast<i128>(num_) * (o.den_ / g) + static_cast<i128>(o.num_) * (den_ / g);
        i128 b = static_cast<i128>(den_) * (o.den_ / g);
        i128 h = gcd128(a, g);
        if (h > 1) {
            a /= h;
            b /= h;
        }
        if (a == 0) {
            num_ = 0;
            den_ = 1;
            return *this;
        }
        if (fits(a) && fits(b)) {
            num_ = static_cast<int64_t>(a);
            den_ = static_cast<int64_t>(b);
            return *this;
        }
    }
    set_big(to_mpq() + o.to_mpq());
    return *this;
}

Rational &Rational::operator-=(const Rational &o) {
    return *this += -o;
}

Rational &Rational::operator*=(const Rational &o) {
    if (!big_ && !o.big_) {
        if (num_ == 0 || o.num_ == 0) {
            num_ = 0;
            den_ = 1;
            return *this;
        }
        i128 g1 = std::gcd(num_, o.den_);
        i128 g2 = std::gcd(o.num_, den_);
        i128 a = static_cast<i128>(num_ / g1) * (o.num_ / g2);
        i128 b = static_cast<i128>(den_ / g2) * (o.den_ / g1);
        if (fits(a) && fits(b)) {
            num_ = static_cast<int64_t>(a);
            den_ = static_cast<int64_t>(b);
            return *this;
        }
    }
    set_big(to_mpq() * o.to_mpq());
    return *this;
}

Rational &Rational::operator/=(const Rational &o) {
    if (o.is_zero()) {
        throw std::domain_error("Rational: division by zero");
    }
    if (!o.big_) {
        Rational inv;
        inv.num_ = o.num_ < 0 ? -o.den_ : o.den_;
        inv.den_ = o.num_ < 0 ? -o.num_ : o.num_;
        return *this *= inv;
    }
    set_big(to_mpq() / o.to_mpq());
    return *this;
}

bool Rational::operator==(const Rational &o) const {
    if (!big_ && !o.big_) {
        return num_ == o.num_ && den_ == o.den_;
    }
    return to_mpq() == o.to_mpq();
}

bool Rational::operator<(const Rational &o) const {
    if (!big_ && !o.big_) {
        return static_cast<i128>(num_) * o.den_ < static_cast<i128>(o.num_) * den_;
    }
    return to_mpq() < o.to_mpq();
}

std::ostream &operator<<(std::ostream &out, const Rational &r) {
    return out << r.str();
}

}  // namespace cliffdual
