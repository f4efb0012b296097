#include "ramseykit/exact.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace rk {

namespace {
using u64 = std::uint64_t;
using u128 = unsigned __int128;
}  // namespace

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    u64 mag = v < 0 ? ~static_cast<u64>(v) + 1 : static_cast<u64>(v);
    limbs_.push_back(mag);
}

BigInt::BigInt(unsigned long long v, int sign) {
    if (v == 0 || sign == 0) return;
    sign_ = sign < 0 ? -1 : 1;
    limbs_.push_back(v);
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) sign_ = 0;
}

int BigInt::compare_mag(const std::vector<u64>& a, const std::vector<u64>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<u64> BigInt::add_mag(const std::vector<u64>& a, const std::vector<u64>& b) {
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& small = a.size() >= b.size() ? b : a;
    std::vector<u64> out(big.size() + 1, 0);
    u64 carry = 0;
    for (std::size_t i = 0; i < big.size(); ++i) {
        u64 x = big[i];
        u64 y = i < small.size() ? small[i] : 0;
        u64 s = x + y;
        u64 c1 = s < x;
        u64 s2 = s + carry;
        u64 c2 = s2 < s;
        out[i] = s2;
        carry = c1 | c2;
    }
    out[big.size()] = carry;
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<u64> BigInt::sub_mag(const std::vector<u64>& a, const std::vector<u64>& b) {
    std::vector<u64> out(a.size(), 0);
    u64 borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        u64 x = a[i];
        u64 y = i < b.size() ? b[i] : 0;
        u64 d = x - y;
        u64 b1 = x < y;
        u64 d2 = d - borrow;
        u64 b2 = d < borrow;
        out[i] = d2;
        borrow = b1 | b2;
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt& BigInt::negate() {
    sign_ = -sign_;
    return *this;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt r;
    if (a.sign_ == b.sign_) {
        r.limbs_ = BigInt::add_mag(a.limbs_, b.limbs_);
        r.sign_ = a.sign_;
    } else {
        int c = BigInt::compare_mag(a.limbs_, b.limbs_);
        if (c == 0) return BigInt();
        if (c > 0) {
            r.limbs_ = BigInt::sub_mag(a.limbs_, b.limbs_);
            r.sign_ = a.sign_;
        } else {
            r.limbs_ = BigInt::sub_mag(b.limbs_, a.limbs_);
            r.sign_ = b.sign_;
        }
    }
    r.trim();
    return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
    BigInt r;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        u64 carry = 0;
        for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
            u128 cur = static_cast<u128>(a.limbs_[i]) * b.limbs_[j] + r.limbs_[i + j] + carry;
            r.limbs_[i + j] = static_cast<u64>(cur);
            carry = static_cast<u64>(cur >> 64);
        }
        r.limbs_[i + b.limbs_.size()] += carry;
    }
    r.sign_ = a.sign_ * b.sign_;
    r.trim();
    return r;
}

BigInt BigInt::mul_small(u64 f) const {
    if (sign_ == 0 || f == 0) return BigInt();
    BigInt r;
    r.sign_ = sign_;
    r.limbs_.assign(limbs_.size() + 1, 0);
    u64 carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        u128 cur = static_cast<u128>(limbs_[i]) * f + carry;
        r.limbs_[i] = static_cast<u64>(cur);
        carry = static_cast<u64>(cur >> 64);
    }
    r.limbs_[limbs_.size()] = carry;
    r.trim();
    return r;
}

BigInt BigInt::divmod_small(u64 d, u64& rem) const {
    if (d == 0) throw DomainError("division by zero");
    BigInt q;
    q.limbs_.assign(limbs_.size(), 0);
    u128 r = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        u128 cur = (r << 64) | limbs_[i];
        q.limbs_[i] = static_cast<u64>(cur / d);
        r = cur % d;
    }
    rem = static_cast<u64>(r);
    q.sign_ = sign_;
    q.trim();
    return q;
}

BigInt BigInt::shifted_left(unsigned bits) const {
    if (sign_ == 0 || bits == 0) return *this;
    unsigned words = bits / 64, off = bits % 64;
    BigInt r;
    r.sign_ = sign_;
    r.limbs_.assign(limbs_.size() + words + 1, 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        r.limbs_[i + words] |= limbs_[i] << off;
        if (off) r.limbs_[i + words + 1] |= limbs_[i] >> (64 - off);
    }
    r.trim();
    return r;
}

BigInt BigInt::shifted_right(unsigned bits) const {
    if (sign_ == 0) return *this;
    unsigned words = bits / 64, off = bits % 64;
    if (words >= limbs_.size()) return BigInt();
    BigInt r;
    r.sign_ = sign_;
    r.limbs_.assign(limbs_.size() - words, 0);
    for (std::size_t i = 0; i < r.limbs_.size(); ++i) {
        r.limbs_[i] = limbs_[i + words] >> off;
        if (off && i + words + 1 < limbs_.size()) r.limbs_[i] |= limbs_[i + words + 1] << (64 - off);
    }
    r.trim();
    return r;
}

bool BigInt::bit(std::size_t i) const {
    std::size_t w = i / 64;
    if (w >= limbs_.size()) return false;
    return (limbs_[w] >> (i % 64)) & 1;
}

std::size_t BigInt::bit_length() const {
    if (sign_ == 0) return 0;
    u64 top = limbs_.back();
    return (limbs_.size() - 1) * 64 + (64 - __builtin_clzll(top));
}

void BigInt::divmod(const BigInt& num, const BigInt& den, BigInt& q, BigInt& r) {
    if (den.sign_ == 0) throw DomainError("division by zero");
    if (den.limbs_.size() == 1) {
        u64 rem;
        q = num.divmod_small(den.limbs_[0], rem);
        q.sign_ = q.limbs_.empty() ? 0 : num.sign_ * den.sign_;
        r = BigInt(rem, num.sign_);
        return;
    }
    int cm = compare_mag(num.limbs_, den.limbs_);
    if (cm < 0) {
        q = BigInt();
        r = num;
        return;
    }
    // Binary long division over every bit of the dividend; fine at this
    // project's sizes (a few thousand bits at most).
    std::size_t nb = num.bit_length();
    BigInt rem;
    BigInt quo;
    quo.limbs_.assign((nb + 63) / 64, 0);
    BigInt dmag = den;
    dmag.sign_ = 1;
    for (std::size_t i = nb; i-- > 0;) {
        rem = rem.shifted_left(1);
        if (num.bit(i)) {
            if (rem.sign_ == 0) rem = BigInt(1);
            else rem.limbs_[0] |= 1;
        }
        if (compare_mag(rem.limbs_, dmag.limbs_) >= 0) {
            rem.sign_ = 1;
            rem = rem - dmag;
            quo.limbs_[i / 64] |= u64{1} << (i % 64);
        }
    }
    quo.sign_ = 1;
    quo.trim();
    quo.sign_ = quo.limbs_.empty() ? 0 : num.sign_ * den.sign_;
    rem.trim();
    rem.sign_ = rem.limbs_.empty() ? 0 : num.sign_;
    q = quo;
    r = rem;
}

BigInt BigInt::operator/(const BigInt& b) const {
    BigInt q, r;
    divmod(*this, b, q, r);
    return q;
}

BigInt BigInt::operator%(const BigInt& b) const {
    BigInt q, r;
    divmod(*this, b, q, r);
    return r;
}

int BigInt::compare(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
    int c = compare_mag(a.limbs_, b.limbs_);
    return a.sign_ >= 0 ? c : -c;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a.sign_ = a.limbs_.empty() ? 0 : 1;
    b.sign_ = b.limbs_.empty() ? 0 : 1;
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // Binary GCD: only shifts and subtractions.
    unsigned shift = 0;
    while (!a.bit(0) && !b.bit(0)) {
        a = a.shifted_right(1);
        b = b.shifted_right(1);
        ++shift;
    }
    while (!a.bit(0)) a = a.shifted_right(1);
    while (!b.is_zero()) {
        while (!b.bit(0)) b = b.shifted_right(1);
        if (compare_mag(a.limbs_, b.limbs_) > 0) std::swap(a, b);
        b = b - a;
        b.sign_ = b.limbs_.empty() ? 0 : 1;
    }
    return a.shifted_left(shift);
}

BigInt BigInt::pow(const BigInt& base, unsigned e) {
    BigInt r(1), b = base;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    BigInt t = *this;
    t.sign_ = 1;
    std::string out;
    while (!t.is_zero()) {
        u64 rem;
        t = t.divmod_small(10000000000000000000ull, rem);
        char buf[20];
        std::snprintf(buf, sizeof buf, t.is_zero() ? "%llu" : "%019llu",
                      static_cast<unsigned long long>(rem));
        out.insert(0, buf);
    }
    if (sign_ < 0) out.insert(0, "-");
    return out;
}

double BigInt::ln() const {
    if (sign_ == 0) return -HUGE_VAL;
    std::size_t bl = bit_length();
    // Top 128 bits as long double, remaining magnitude as a power of two.
    unsigned drop = bl > 128 ? static_cast<unsigned>(bl - 128) : 0;
    BigInt top = shifted_right(drop);
    long double mant = 0.0L;
    for (std::size_t i = top.limbs_.size(); i-- > 0;)
        mant = mant * 18446744073709551616.0L + static_cast<long double>(top.limbs_[i]);
    return static_cast<double>(logl(mant) + drop * 0.6931471805599453094172321214581766L);
}

double BigInt::to_double() const {
    if (sign_ == 0) return 0.0;
    std::size_t bl = bit_length();
    unsigned drop = bl > 64 ? static_cast<unsigned>(bl - 64) : 0;
    BigInt top = shifted_right(drop);
    long double mant = 0.0L;
    for (std::size_t i = top.limbs_.size(); i-- > 0;)
        mant = mant * 18446744073709551616.0L + static_cast<long double>(top.limbs_[i]);
    return static_cast<double>(sign_ * ldexpl(mant, static_cast<int>(drop)));
}

bool BigInt::fits_int64() const {
    if (limbs_.size() > 1) return false;
    if (limbs_.empty()) return true;
    if (sign_ > 0) return limbs_[0] <= 0x7fffffffffffffffull;
    return limbs_[0] <= 0x8000000000000000ull;
}

long long BigInt::to_int64() const {
    if (!fits_int64()) throw SizeError("BigInt does not fit int64");
    if (limbs_.empty()) return 0;
    return sign_ > 0 ? static_cast<long long>(limbs_[0]) : -static_cast<long long>(limbs_[0]);
}

BigInt BigInt::from_string(const std::string& dec) {
    BigInt r;
    std::size_t i = 0;
    int sg = 1;
    if (i < dec.size() && (dec[i] == '-' || dec[i] == '+')) sg = dec[i++] == '-' ? -1 : 1;
    if (i == dec.size()) throw DomainError("empty integer literal");
    for (; i < dec.size(); ++i) {
        if (dec[i] < '0' || dec[i] > '9') throw DomainError("bad integer literal: " + dec);
        r = r.mul_small(10) + BigInt(dec[i] - '0');
    }
    if (!r.is_zero() && sg < 0) r.negate();
    return r;
}

// ---------------------------------------------------------------------------

Rat::Rat(long long n, long long d) : num_(n), den_(d) {
    if (d == 0) throw DomainError("rational with zero denominator");
    normalize();
}

Rat::Rat(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw DomainError("rational with zero denominator");
    normalize();
}

void Rat::normalize() {
    if (den_.is_negative()) {
        den_.negate();
        num_.negate();
    }
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (g != BigInt(1)) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

Rat operator+(const Rat& a, const Rat& b) {
    return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
Rat operator-(const Rat& a, const Rat& b) {
    return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
Rat operator*(const Rat& a, const Rat& b) { return Rat(a.num_ * b.num_, a.den_ * b.den_); }
Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw DomainError("rational division by zero");
    return Rat(a.num_ * b.den_, a.den_ * b.num_);
}

Rat Rat::operator-() const {
    Rat r = *this;
    r.num_.negate();
    return r;
}

int Rat::compare(const Rat& a, const Rat& b) {
    return BigInt::compare(a.num_ * b.den_, b.num_ * a.den_);
}

Rat Rat::abs() const { return sign() < 0 ? -*this : *this; }

BigInt Rat::floor() const {
    BigInt q, r;
    BigInt::divmod(num_, den_, q, r);
    if (!r.is_zero() && num_.is_negative()) q = q - BigInt(1);
    return q;
}

Rat Rat::pow(const Rat& base, int e) {
    if (e == 0) return Rat(1);
    if (e < 0) return Rat(1) / pow(base, -e);
    return Rat(BigInt::pow(base.num_, static_cast<unsigned>(e)),
               BigInt::pow(base.den_, static_cast<unsigned>(e)));
}

double Rat::to_double() const {
    if (num_.is_zero()) return 0.0;
    // 63-bit leading windows keep the quotient accurate to ~1 ulp even when
    // numerator and denominator are hundreds of digits.
    std::size_t bn = num_.bit_length(), bd = den_.bit_length();
    unsigned dn = bn > 63 ? static_cast<unsigned>(bn - 63) : 0;
    unsigned dd = bd > 63 ? static_cast<unsigned>(bd - 63) : 0;
    BigInt tn = num_.shifted_right(dn);
    BigInt td = den_.shifted_right(dd);
    long double q = static_cast<long double>(tn.to_int64()) / static_cast<long double>(td.to_int64());
    return static_cast<double>(ldexpl(q, static_cast<int>(dn) - static_cast<int>(dd)));
}

std::string Rat::to_string() const {
    if (den_ == BigInt(1)) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

Rat Rat::from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        return Rat(BigInt::from_string(s.substr(0, slash)), BigInt::from_string(s.substr(slash + 1)));
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        std::size_t places = s.size() - dot - 1;
        BigInt den(1);
        for (std::size_t i = 0; i < places; ++i) den = den.mul_small(10);
        return Rat(BigInt::from_string(digits), den);
    }
    return Rat(BigInt::from_string(s), BigInt(1));
}

// ---------------------------------------------------------------------------

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return BigInt(0);
    if (k > n - k) k = n - k;
    BigInt r(1);
    for (unsigned i = 1; i <= k; ++i) {
        r = r.mul_small(n - k + i);
        u64 rem;
        r = r.divmod_small(i, rem);  // always exact
    }
    return r;
}

double log_binomial(double n, double k) {
    if (k < 0 || k > n) return -HUGE_VAL;
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

LogReal LogReal::from_double(double x) {
    if (x == 0.0) return zero();
    return LogReal{x < 0 ? -1 : 1, std::log(std::fabs(x))};
}

LogReal LogReal::operator*(const LogReal& o) const {
    if (sign == 0 || o.sign == 0) return zero();
    return LogReal{sign * o.sign, ln + o.ln};
}

LogReal LogReal::operator/(const LogReal& o) const {
    if (o.sign == 0) throw DomainError("LogReal division by zero");
    if (sign == 0) return zero();
    return LogReal{sign * o.sign, ln - o.ln};
}

LogReal LogReal::operator+(const LogReal& o) const {
    if (sign == 0) return o;
    if (o.sign == 0) return *this;
    const LogReal& hi = ln >= o.ln ? *this : o;
    const LogReal& lo = ln >= o.ln ? o : *this;
    double d = lo.ln - hi.ln;  // <= 0
    if (hi.sign == lo.sign) return LogReal{hi.sign, hi.ln + std::log1p(std::exp(d))};
    double m = std::log1p(-std::exp(d));  // -inf when equal magnitudes
    if (m == -HUGE_VAL) return zero();
    return LogReal{hi.sign, hi.ln + m};
}

double LogReal::to_double() const {
    if (sign == 0) return 0.0;
    return sign * std::exp(ln);
}

int LogReal::compare(const LogReal& a, const LogReal& b) {
    if (a.sign != b.sign) return a.sign < b.sign ? -1 : 1;
    if (a.sign == 0) return 0;
    if (a.ln == b.ln) return 0;
    int mag = a.ln < b.ln ? -1 : 1;
    return a.sign > 0 ? mag : -mag;
}

}  // namespace rk
