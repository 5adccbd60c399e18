#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>

namespace varlab {

/// Exact rational on 64-bit integers. Operations report overflow via
/// std::nullopt so callers can fall back to floating point.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

    static Rational integer(std::int64_t n) { return Rational(n, 1); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    bool is_integer() const { return den_ == 1; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    static std::optional<Rational> add(const Rational& a, const Rational& b);
    static std::optional<Rational> mul(const Rational& a, const Rational& b);
    static std::optional<Rational> neg(const Rational& a);
    static std::optional<Rational> recip(const Rational& a);
    static std::optional<Rational> pow(const Rational& a, int n);

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    void normalize();

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// Numeric constant: exact rational when representable, double otherwise.
/// Arithmetic stays exact as long as every operand is exact and no 64-bit
/// overflow occurs.
class Number {
public:
    Number() : exact_(true), rat_(0, 1), dbl_(0.0) {}

    static Number exact(Rational r) {
        Number n;
        n.exact_ = true;
        n.rat_ = r;
        n.dbl_ = r.to_double();
        return n;
    }
    static Number real(double d) {
        Number n;
        n.exact_ = false;
        n.dbl_ = d;
        return n;
    }
    static Number integer(std::int64_t i) { return exact(Rational::integer(i)); }

    bool is_exact() const { return exact_; }
    const Rational& rat() const { return rat_; }
    double value() const { return exact_ ? rat_.to_double() : dbl_; }

    bool is_zero() const { return exact_ ? rat_.is_zero() : dbl_ == 0.0; }
    bool is_one() const { return exact_ ? rat_.is_one() : dbl_ == 1.0; }
    bool is_negative() const { return value() < 0.0; }
    bool is_integer() const { return exact_ && rat_.is_integer(); }

    Number operator+(const Number& o) const;
    Number operator*(const Number& o) const;
    Number negated() const;
    /// Multiplicative inverse; nullopt for exact zero (caller decides).
    std::optional<Number> reciprocal() const;
    std::optional<Number> pow_int(int n) const;

    /// Identical representation: exactness flag and payload both match.
    bool same_as(const Number& o) const;
    /// Deterministic total order used by the canonical form.
    int compare(const Number& o) const;

    std::string str() const;

private:
    bool exact_;
    Rational rat_{0, 1};
    double dbl_ = 0.0;
};

}  // namespace varlab
