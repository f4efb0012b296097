#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ramseykit/exact.hpp"
#include "ramseykit/rng.hpp"

using rk::BigInt;
using rk::LogReal;
using rk::Rat;

TEST_CASE("bigint arithmetic agrees with int128 on random small operands") {
    rk::SplitMix rng(12345);
    for (int trial = 0; trial < 5000; ++trial) {
        long long a = static_cast<long long>(rng.next_u64() >> 18) - (1ll << 45);
        long long b = static_cast<long long>(rng.next_u64() >> 18) - (1ll << 45);
        BigInt A(a), B(b);
        CHECK((A + B).to_int64() == a + b);
        CHECK((A - B).to_int64() == a - b);
        // Product checked against int128 via decimal strings.
        auto i128_str = [](__int128 p) {
            if (p == 0) return std::string("0");
            bool neg = p < 0;
            unsigned __int128 u = neg ? -static_cast<unsigned __int128>(p) : static_cast<unsigned __int128>(p);
            std::string s;
            while (u) {
                s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(u % 10)));
                u /= 10;
            }
            if (neg) s.insert(s.begin(), '-');
            return s;
        };
        CHECK((A * B).to_string() == i128_str(static_cast<__int128>(a) * b));
        if (b != 0) {
            BigInt q, r;
            BigInt::divmod(A, B, q, r);
            CHECK(q.to_int64() == a / b);
            CHECK(r.to_int64() == a % b);
        }
    }
}

TEST_CASE("bigint division and gcd on wide operands") {
    // (2^200 + 7) = q*(2^100 - 3) + r reconstructs exactly.
    BigInt big = BigInt(1).shifted_left(200) + BigInt(7);
    BigInt d = BigInt(1).shifted_left(100) - BigInt(3);
    BigInt q, r;
    BigInt::divmod(big, d, q, r);
    CHECK(q * d + r == big);
    CHECK(!r.is_negative());
    CHECK(r < d);

    BigInt g = BigInt::gcd(BigInt(2 * 3 * 5 * 7 * 11).shifted_left(40), BigInt(3 * 7 * 13).shifted_left(37));
    CHECK(g == BigInt(21).shifted_left(37));
}

TEST_CASE("binomials: identities and known values") {
    CHECK(rk::binomial(6, 3).to_int64() == 20);
    CHECK(rk::binomial(20, 10).to_int64() == 184756);
    for (unsigned n = 1; n <= 40; ++n)
        for (unsigned k = 1; k < n; ++k)
            CHECK(rk::binomial(n, k) == rk::binomial(n - 1, k - 1) + rk::binomial(n - 1, k));
    // ln C(2000,1000) vs lgamma
    double lhs = rk::binomial(2000, 1000).ln();
    double rhs = rk::log_binomial(2000, 1000);
    CHECK(std::fabs(lhs - rhs) < 1e-9 * std::fabs(rhs));
}

TEST_CASE("rational arithmetic and normalization") {
    Rat a(1, 3), b(1, 6);
    CHECK((a + b) == Rat(1, 2));
    CHECK((a - b) == Rat(1, 6));
    CHECK((a * b) == Rat(1, 18));
    CHECK((a / b) == Rat(2));
    CHECK(Rat(-4, -6) == Rat(2, 3));
    CHECK(Rat(4, -6) == Rat(-2, 3));
    CHECK(Rat(2, 3).to_string() == "2/3");
    CHECK(Rat::from_string("-7/21") == Rat(-1, 3));
    CHECK(Rat::from_string("0.25") == Rat(1, 4));
    CHECK(Rat(7, 2).floor().to_int64() == 3);
    CHECK(Rat(-7, 2).floor().to_int64() == -4);
    CHECK(Rat(1, 3).to_double() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("log-space reals") {
    LogReal a = LogReal::from_double(3.0), b = LogReal::from_double(-2.0);
    CHECK((a * b).to_double() == doctest::Approx(-6.0));
    CHECK((a / b).to_double() == doctest::Approx(-1.5));
    CHECK((a + b).to_double() == doctest::Approx(1.0));
    CHECK((b + a).to_double() == doctest::Approx(1.0));
    CHECK((a + (-a)).sign == 0);
    LogReal huge = LogReal::from_ln(5000.0);
    LogReal huge2 = huge * huge;
    CHECK(huge2.ln == doctest::Approx(10000.0));
    CHECK(LogReal::compare(huge, huge2) < 0);
}
