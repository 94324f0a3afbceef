#include "latcoh/rational.hpp"

#include <limits>
#include <numeric>

namespace latcoh {

const char* err_name(Err code) {
    switch (code) {
        case Err::DuplicateId: return "DuplicateId";
        case Err::DanglingEdge: return "DanglingEdge";
        case Err::NotNegativeDefinite: return "NotNegativeDefinite";
        case Err::NotConnected: return "NotConnected";
        case Err::UnknownSite: return "UnknownSite";
        case Err::NotQHS3: return "NotQHS3";
        case Err::BadSubset: return "BadSubset";
        case Err::NonIntegerChi: return "NonIntegerChi";
        case Err::Overflow: return "Overflow";
        case Err::ShapeMismatch: return "ShapeMismatch";
        case Err::EmptySpace: return "EmptySpace";
        case Err::NotUnitJump: return "NotUnitJump";
        case Err::PathOutOfRange: return "PathOutOfRange";
        case Err::FixtureMismatch: return "FixtureMismatch";
        case Err::TooLarge: return "TooLarge";
        case Err::BadInput: return "BadInput";
        case Err::Internal: return "Internal";
    }
    return "Internal";
}

int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) fail(Err::Overflow, "integer addition overflow");
    return r;
}

int64_t checked_sub(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) fail(Err::Overflow, "integer subtraction overflow");
    return r;
}

int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) fail(Err::Overflow, "integer multiplication overflow");
    return r;
}

namespace {

using i128 = __int128;

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

int64_t narrow(i128 v) {
    if (v > std::numeric_limits<int64_t>::max() || v < std::numeric_limits<int64_t>::min())
        fail(Err::Overflow, "rational arithmetic overflow");
    return static_cast<int64_t>(v);
}

} // namespace

Rational::Rational(int64_t n, int64_t d) {
    expect(d != 0, Err::BadInput, "rational with zero denominator");
    i128 nn = n, dd = d;
    if (dd < 0) {
        nn = -nn;
        dd = -dd;
    }
    i128 g = gcd128(nn, dd);
    if (g > 1) {
        nn /= g;
        dd /= g;
    }
    num_ = narrow(nn);
    den_ = narrow(dd);
}

int64_t Rational::as_integer() const {
    expect(den_ == 1, Err::Internal, "as_integer on non-integral rational");
    return num_;
}

int64_t Rational::floor() const {
    if (den_ == 1) return num_;
    int64_t q = num_ / den_;
    if (num_ < 0) q -= 1; // C++ division truncates toward zero
    return q;
}

namespace {

Rational make(i128 n, i128 d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    i128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    return Rational(narrow(n), narrow(d));
}

} // namespace

Rational Rational::operator-() const { return Rational(checked_sub(0, num_), den_); }

Rational Rational::operator+(const Rational& o) const {
    return make(i128(num_) * o.den_ + i128(o.num_) * den_, i128(den_) * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
    return make(i128(num_) * o.den_ - i128(o.num_) * den_, i128(den_) * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
    return make(i128(num_) * o.num_, i128(den_) * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
    expect(o.num_ != 0, Err::BadInput, "rational division by zero");
    return make(i128(num_) * o.den_, i128(den_) * o.num_);
}

bool Rational::operator<(const Rational& o) const {
    return i128(num_) * o.den_ < i128(o.num_) * den_;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
    auto whole = [&text](const std::string& part) {
        size_t used = 0;
        int64_t value = std::stoll(part, &used);
        expect(used == part.size(), Err::BadInput, "malformed rational '" + text + "'");
        return value;
    };
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(whole(text));
        return Rational(whole(text.substr(0, slash)), whole(text.substr(slash + 1)));
    } catch (const std::logic_error&) {
        fail(Err::BadInput, "malformed rational '" + text + "'");
    }
}

} // namespace latcoh
