#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ramseykit/errors.hpp"

namespace rk {

// Arbitrary-precision signed integer, little-endian 64-bit limbs.
// Sized for this project's needs: binomials up to C(2000,1000), exact
// floors of rational bound values, census counters. Schoolbook algorithms
// throughout.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);
    BigInt(unsigned long long v, int sign);

    static BigInt from_string(const std::string& dec);

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    int sign() const { return sign_; }

    BigInt operator-() const;
    BigInt& negate();

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    BigInt& operator+=(const BigInt& b) { *this = *this + b; return *this; }
    BigInt& operator-=(const BigInt& b) { *this = *this - b; return *this; }
    BigInt& operator*=(const BigInt& b) { *this = *this * b; return *this; }

    // Quotient truncated toward zero, remainder has the dividend's sign.
    static void divmod(const BigInt& num, const BigInt& den, BigInt& q, BigInt& r);
    BigInt operator/(const BigInt& b) const;
    BigInt operator%(const BigInt& b) const;

    BigInt mul_small(std::uint64_t f) const;
    // Exact division by a small factor; remainder returned through out-param.
    BigInt divmod_small(std::uint64_t d, std::uint64_t& rem) const;

    BigInt shifted_left(unsigned bits) const;
    BigInt shifted_right(unsigned bits) const;
    bool bit(std::size_t i) const;
    std::size_t bit_length() const;

    static int compare(const BigInt& a, const BigInt& b);
    friend bool operator==(const BigInt& a, const BigInt& b) { return compare(a, b) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return compare(a, b) != 0; }
    friend bool operator<(const BigInt& a, const BigInt& b) { return compare(a, b) < 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return compare(a, b) <= 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return compare(a, b) > 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return compare(a, b) >= 0; }

    static BigInt gcd(BigInt a, BigInt b);
    static BigInt pow(const BigInt& base, unsigned e);

    std::string to_string() const;
    // Natural log of |x|; -inf for zero.
    double ln() const;
    double to_double() const;
    // Value fits in int64 (for small-result paths).
    bool fits_int64() const;
    long long to_int64() const;

private:
    static int compare_mag(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b);
    static std::vector<std::uint64_t> add_mag(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b);
    // Requires |a| >= |b|.
    static std::vector<std::uint64_t> sub_mag(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b);
    void trim();

    int sign_ = 0;                      // -1, 0, +1
    std::vector<std::uint64_t> limbs_;  // empty iff sign_ == 0
};

// Exact rational, always normalized: den > 0, gcd(|num|, den) = 1.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(long long v) : num_(v), den_(1) {}
    Rat(long long n, long long d);
    Rat(BigInt n, BigInt d);

    static Rat from_string(const std::string& s);  // "p/q", integer, or decimal

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    int sign() const { return num_.sign(); }

    friend Rat operator+(const Rat& a, const Rat& b);
    friend Rat operator-(const Rat& a, const Rat& b);
    friend Rat operator*(const Rat& a, const Rat& b);
    friend Rat operator/(const Rat& a, const Rat& b);
    Rat operator-() const;
    Rat& operator+=(const Rat& b) { *this = *this + b; return *this; }
    Rat& operator-=(const Rat& b) { *this = *this - b; return *this; }
    Rat& operator*=(const Rat& b) { *this = *this * b; return *this; }
    Rat& operator/=(const Rat& b) { *this = *this / b; return *this; }

    static int compare(const Rat& a, const Rat& b);
    friend bool operator==(const Rat& a, const Rat& b) { return compare(a, b) == 0; }
    friend bool operator!=(const Rat& a, const Rat& b) { return compare(a, b) != 0; }
    friend bool operator<(const Rat& a, const Rat& b) { return compare(a, b) < 0; }
    friend bool operator<=(const Rat& a, const Rat& b) { return compare(a, b) <= 0; }
    friend bool operator>(const Rat& a, const Rat& b) { return compare(a, b) > 0; }
    friend bool operator>=(const Rat& a, const Rat& b) { return compare(a, b) >= 0; }

    Rat abs() const;
    BigInt floor() const;  // toward -infinity
    static Rat pow(const Rat& base, int e);

    double to_double() const;
    std::string to_string() const;  // "p/q" or "p" when q == 1

private:
    void normalize();
    BigInt num_, den_;
};

// Exact binomial coefficient; requires 0 <= k <= n.
BigInt binomial(unsigned n, unsigned k);
// log C(n, k) via lgamma; valid far past the exact cap.
double log_binomial(double n, double k);

// Signed magnitude held as a natural log, for quantities like C(k+l, k)
// at k ~ 1e6 that overflow double.
struct LogReal {
    int sign = 0;      // -1, 0, +1
    double ln = 0.0;   // log |x|; meaningless when sign == 0

    static LogReal from_double(double x);
    static LogReal from_ln(double l) { return LogReal{1, l}; }
    static LogReal zero() { return LogReal{0, 0.0}; }

    LogReal operator*(const LogReal& o) const;
    LogReal operator/(const LogReal& o) const;
    LogReal operator+(const LogReal& o) const;  // stable log-sum / log-diff
    LogReal operator-() const { return LogReal{-sign, ln}; }

    double to_double() const;  // may overflow to +-inf
    static int compare(const LogReal& a, const LogReal& b);
};

}  // namespace rk
