#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace diffposet {

/// Arbitrary-precision integer (GMP-backed).
using BigInt = mpz_class;

BigInt factorial(unsigned long n);
BigInt int_pow(const BigInt& base, unsigned long exp);

/// Exact rational number. Always held in canonical reduced form:
/// gcd(|num|, den) == 1 and den > 0. Arithmetic never rounds.
class Rat {
public:
    Rat() : value_(0) {}
    Rat(long n) : value_(n) {}  // NOLINT: implicit by design, mirrors int literals
    Rat(const BigInt& n) : value_(n) {}
    Rat(const BigInt& num, const BigInt& den) {
        if (den == 0) throw std::invalid_argument("Rat: zero denominator");
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }
    Rat(long num, long den) : Rat(BigInt(num), BigInt(den)) {}

    /// Parses "p/q" or a bare integer "p". Throws std::invalid_argument on
    /// malformed input or zero denominator.
    static Rat parse(const std::string& text);

    BigInt num() const { return value_.get_num(); }
    BigInt den() const { return value_.get_den(); }

    bool is_zero() const { return value_ == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rat abs() const {
        Rat out;
        out.value_ = ::abs(value_);
        return out;
    }

    Rat& operator+=(const Rat& o) { value_ += o.value_; return *this; }
    Rat& operator-=(const Rat& o) { value_ -= o.value_; return *this; }
    Rat& operator*=(const Rat& o) { value_ *= o.value_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw std::domain_error("Rat: division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }
    friend Rat operator-(const Rat& a) {
        Rat out;
        out.value_ = -a.value_;
        return out;
    }

    friend bool operator==(const Rat& a, const Rat& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.value_ >= b.value_; }

    /// "p" for integers, "p/q" otherwise. For display.
    std::string str() const;

    /// Always "p/q" (including "/1"). Canonical serialization form.
    std::string fraction_str() const;

    /// acc += a * b and acc -= a * b without intermediate copies; the inner
    /// loops of matrix products and elimination live on these.
    friend void add_mul(Rat& acc, const Rat& a, const Rat& b) {
        acc.value_ += a.value_ * b.value_;
    }
    friend void sub_mul(Rat& acc, const Rat& a, const Rat& b) {
        acc.value_ -= a.value_ * b.value_;
    }

private:
    mpq_class value_;
};

}  // namespace diffposet
