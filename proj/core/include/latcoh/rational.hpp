#pragma once

#include <cstdint>
#include <string>

#include "latcoh/errors.hpp"

namespace latcoh {

// Checked 64-bit integer arithmetic. Any overflow is a hard error; nothing in
// this library ever wraps or saturates silently.
int64_t checked_add(int64_t a, int64_t b);
int64_t checked_sub(int64_t a, int64_t b);
int64_t checked_mul(int64_t a, int64_t b);

// Exact rational with a checked 64-bit numerator and denominator.
// Invariant: den > 0 and gcd(|num|, den) == 1.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(int64_t n) : num_(n), den_(1) {}
    Rational(int64_t n, int64_t d);

    int64_t num() const { return num_; }
    int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    // Exact integer value; NonIntegerChi would be misleading here, so callers
    // that require integrality check is_integer() themselves.
    int64_t as_integer() const;
    int64_t floor() const;

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const;
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    // "p" for integers, "p/q" otherwise. This is the JSON wire format for
    // non-integral values.
    std::string str() const;
    static Rational parse(const std::string& text);

  private:
    int64_t num_;
    int64_t den_;
};

} // namespace latcoh
