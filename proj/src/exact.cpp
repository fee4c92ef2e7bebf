#include "prodeq/exact.hpp"

#include <algorithm>
#include <limits>

namespace prodeq {

std::string to_decimal(u128 v) {
    if (v == 0) return "0";
    char buf[48];
    int i = 48;
    while (v > 0) {
        buf[--i] = static_cast<char>('0' + static_cast<int>(v % 10));
        v /= 10;
    }
    return std::string(buf + i, buf + 48);
}

std::string to_decimal_signed(i128 v) {
    if (v < 0) return "-" + to_decimal(static_cast<u128>(-(v + 1)) + 1);
    return to_decimal(static_cast<u128>(v));
}

ExactCount checked_pow(u64 base, unsigned exp) {
    ExactCount r(1);
    for (unsigned i = 0; i < exp; ++i) r *= ExactCount(base);
    return r;
}

namespace {

u128 abs_u128(i128 v) {
    return v < 0 ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
}

constexpr u128 I128_MAX_AS_U128 = (static_cast<u128>(1) << 127) - 1;

i128 from_magnitude(bool negative, u128 mag) {
    if (!negative) {
        if (mag > I128_MAX_AS_U128) throw std::overflow_error("i128 overflow");
        return static_cast<i128>(mag);
    }
    if (mag > I128_MAX_AS_U128 + 1) throw std::overflow_error("i128 overflow");
    if (mag == I128_MAX_AS_U128 + 1) return std::numeric_limits<i128>::min();
    return -static_cast<i128>(mag);
}

}  // namespace

i128 checked_add_i128(i128 a, i128 b) {
    if ((b > 0 && a > std::numeric_limits<i128>::max() - b) ||
        (b < 0 && a < std::numeric_limits<i128>::min() - b))
        throw std::overflow_error("i128 addition overflow");
    return a + b;
}

i128 checked_mul_i128(i128 a, i128 b) {
    if (a == 0 || b == 0) return 0;
    u128 mag = checked_mul_u128(abs_u128(a), abs_u128(b));
    return from_magnitude((a < 0) != (b < 0), mag);
}

i128 gcd_i128(i128 a, i128 b) {
    u128 x = abs_u128(a), y = abs_u128(b);
    while (y != 0) {
        u128 t = x % y;
        x = y;
        y = t;
    }
    return static_cast<i128>(x);
}

Rat::Rat(i128 num, i128 den) {
    if (den == 0) throw std::invalid_argument("Rat: zero denominator");
    if (den < 0) { num = checked_mul_i128(num, -1); den = checked_mul_i128(den, -1); }
    i128 g = gcd_i128(num, den);
    if (g > 1) { num /= g; den /= g; }
    num_ = num;
    den_ = den;
}

Rat& Rat::operator+=(const Rat& o) {
    i128 n = checked_add_i128(checked_mul_i128(num_, o.den_), checked_mul_i128(o.num_, den_));
    *this = Rat(n, checked_mul_i128(den_, o.den_));
    return *this;
}

Rat& Rat::operator-=(const Rat& o) { return *this += -o; }

Rat& Rat::operator*=(const Rat& o) {
    // cross-reduce first, keeps intermediates small
    i128 g1 = gcd_i128(num_, o.den_);
    i128 g2 = gcd_i128(o.num_, den_);
    i128 n = checked_mul_i128(num_ / g1, o.num_ / g2);
    i128 d = checked_mul_i128(den_ / g2, o.den_ / g1);
    *this = Rat(n, d);
    return *this;
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.num_ == 0) throw std::invalid_argument("Rat: division by zero");
    return *this *= Rat(o.den_, o.num_);
}

bool operator<(const Rat& a, const Rat& b) {
    return checked_mul_i128(a.num_, b.den_) < checked_mul_i128(b.num_, a.den_);
}

double Rat::to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rat::str() const {
    if (den_ == 1) return to_decimal_signed(num_);
    return to_decimal_signed(num_) + "/" + to_decimal_signed(den_);
}

}  // namespace prodeq
