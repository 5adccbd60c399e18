#include "varlab/number.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>

namespace varlab {

namespace {

using i128 = __int128;

bool fits64(i128 v) {
    return v >= std::numeric_limits<std::int64_t>::min() &&
           v <= std::numeric_limits<std::int64_t>::max();
}

std::optional<Rational> make_checked(i128 num, i128 den) {
    if (den == 0) return std::nullopt;
    if (den < 0) {
        num = -num;
        den = -den;
    }
    i128 a = num < 0 ? -num : num;
    i128 b = den;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    if (a != 0) {
        num /= a;
        den /= a;
    }
    if (!fits64(num) || !fits64(den)) return std::nullopt;
    return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

}  // namespace

void Rational::normalize() {
    if (den_ == 0) {
        num_ = 0;
        den_ = 1;
        return;
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

std::optional<Rational> Rational::add(const Rational& a, const Rational& b) {
    return make_checked(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
}

std::optional<Rational> Rational::mul(const Rational& a, const Rational& b) {
    return make_checked(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
}

std::optional<Rational> Rational::neg(const Rational& a) {
    return make_checked(-i128(a.num_), a.den_);
}

std::optional<Rational> Rational::recip(const Rational& a) {
    if (a.num_ == 0) return std::nullopt;
    return make_checked(a.den_, a.num_);
}

std::optional<Rational> Rational::pow(const Rational& a, int n) {
    if (n == 0) return Rational::integer(1);
    Rational base = a;
    if (n < 0) {
        auto r = recip(a);
        if (!r) return std::nullopt;
        base = *r;
        n = -n;
    }
    Rational acc = Rational::integer(1);
    for (int k = 0; k < n; ++k) {
        auto m = mul(acc, base);
        if (!m) return std::nullopt;
        acc = *m;
    }
    return acc;
}

Number Number::operator+(const Number& o) const {
    if (exact_ && o.exact_) {
        if (auto r = Rational::add(rat_, o.rat_)) return Number::exact(*r);
    }
    return Number::real(value() + o.value());
}

Number Number::operator*(const Number& o) const {
    if (exact_ && o.exact_) {
        if (auto r = Rational::mul(rat_, o.rat_)) return Number::exact(*r);
    }
    return Number::real(value() * o.value());
}

Number Number::negated() const {
    if (exact_) {
        if (auto r = Rational::neg(rat_)) return Number::exact(*r);
    }
    return Number::real(-value());
}

std::optional<Number> Number::reciprocal() const {
    if (exact_) {
        if (rat_.is_zero()) return std::nullopt;
        if (auto r = Rational::recip(rat_)) return Number::exact(*r);
        return Number::real(1.0 / value());
    }
    if (dbl_ == 0.0) return std::nullopt;
    return Number::real(1.0 / dbl_);
}

std::optional<Number> Number::pow_int(int n) const {
    if (exact_) {
        if (rat_.is_zero() && n < 0) return std::nullopt;
        if (auto r = Rational::pow(rat_, n)) return Number::exact(*r);
        return Number::real(std::pow(value(), n));
    }
    if (dbl_ == 0.0 && n < 0) return std::nullopt;
    return Number::real(std::pow(dbl_, n));
}

bool Number::same_as(const Number& o) const {
    if (exact_ != o.exact_) return false;
    if (exact_) return rat_ == o.rat_;
    return dbl_ == o.dbl_;
}

int Number::compare(const Number& o) const {
    double a = value();
    double b = o.value();
    if (a < b) return -1;
    if (a > b) return 1;
    if (exact_ != o.exact_) return exact_ ? -1 : 1;
    if (exact_) {
        if (rat_.num() != o.rat_.num()) return rat_.num() < o.rat_.num() ? -1 : 1;
        if (rat_.den() != o.rat_.den()) return rat_.den() < o.rat_.den() ? -1 : 1;
    }
    return 0;
}

std::string Number::str() const {
    if (exact_) {
        if (rat_.is_integer()) return std::to_string(rat_.num());
        return std::to_string(rat_.num()) + "/" + std::to_string(rat_.den());
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", dbl_);
    return buf;
}

}  // namespace varlab
