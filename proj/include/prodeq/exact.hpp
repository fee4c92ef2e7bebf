// 128-bit overflow-checked counters and exact rationals.
//
// Every counting path in this project goes through ExactCount: additions and
// multiplications throw std::overflow_error instead of wrapping, so a table
// that silently saturates cannot produce a wrong count.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace prodeq {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i128 = __int128;

std::string to_decimal(u128 v);

inline u128 checked_add_u128(u128 a, u128 b) {
    u128 r = a + b;
    if (r < a) throw std::overflow_error("u128 addition overflow");
    return r;
}

inline u128 checked_mul_u128(u128 a, u128 b) {
    if (a == 0 || b == 0) return 0;
    u128 r = a * b;
    if (r / a != b) throw std::overflow_error("u128 multiplication overflow");
    return r;
}

// Unsigned exact counter, at least 128 bits, no silent wraparound.
class ExactCount {
public:
    ExactCount() = default;
    explicit ExactCount(u64 v) : v_(v) {}
    static ExactCount from_raw(u128 v) { ExactCount c; c.v_ = v; return c; }

    u128 raw() const { return v_; }

    ExactCount& operator+=(const ExactCount& o) { v_ = checked_add_u128(v_, o.v_); return *this; }
    ExactCount& operator*=(const ExactCount& o) { v_ = checked_mul_u128(v_, o.v_); return *this; }
    ExactCount& operator-=(const ExactCount& o) {
        if (o.v_ > v_) throw std::underflow_error("ExactCount would go negative");
        v_ -= o.v_;
        return *this;
    }

    friend ExactCount operator+(ExactCount a, const ExactCount& b) { return a += b; }
    friend ExactCount operator*(ExactCount a, const ExactCount& b) { return a *= b; }
    friend ExactCount operator-(ExactCount a, const ExactCount& b) { return a -= b; }

    ExactCount squared() const { return *this * *this; }

    friend bool operator==(const ExactCount& a, const ExactCount& b) { return a.v_ == b.v_; }
    friend bool operator!=(const ExactCount& a, const ExactCount& b) { return a.v_ != b.v_; }
    friend bool operator<(const ExactCount& a, const ExactCount& b) { return a.v_ < b.v_; }
    friend bool operator<=(const ExactCount& a, const ExactCount& b) { return a.v_ <= b.v_; }
    friend bool operator>(const ExactCount& a, const ExactCount& b) { return a.v_ > b.v_; }
    friend bool operator>=(const ExactCount& a, const ExactCount& b) { return a.v_ >= b.v_; }

    double to_double() const { return static_cast<double>(v_); }
    std::string str() const { return to_decimal(v_); }

private:
    u128 v_ = 0;
};

// b^e with overflow check.
ExactCount checked_pow(u64 base, unsigned exp);

// Exact rational over 128-bit integers, always reduced, denominator > 0.
// Used for the handful of identities the tests assert as exact equalities
// (Wilson alpha, the prime-family product identity, Weierstrass brackets).
class Rat {
public:
    Rat() = default;
    Rat(i128 num, i128 den);
    static Rat integer(i128 n) { return Rat(n, 1); }

    i128 num() const { return num_; }
    i128 den() const { return den_; }

    Rat& operator+=(const Rat& o);
    Rat& operator-=(const Rat& o);
    Rat& operator*=(const Rat& o);
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend Rat operator-(const Rat& a) { return Rat(-a.num_, a.den_); }

    friend bool operator==(const Rat& a, const Rat& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b);
    friend bool operator<=(const Rat& a, const Rat& b) { return a == b || a < b; }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator>=(const Rat& a, const Rat& b) { return b <= a; }

    double to_double() const;
    std::string str() const;

private:
    i128 num_ = 0;
    i128 den_ = 1;
};

i128 checked_add_i128(i128 a, i128 b);
i128 checked_mul_i128(i128 a, i128 b);
i128 gcd_i128(i128 a, i128 b);
std::string to_decimal_signed(i128 v);

}  // namespace prodeq
