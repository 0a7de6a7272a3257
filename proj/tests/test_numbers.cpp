#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "tvrt/bigint.hpp"
#include "tvrt/rational.hpp"

using tvrt::BigInt;
using tvrt::Rational;

TEST_CASE("bigint small arithmetic matches int64") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<std::int64_t> dist(-1000000000LL, 1000000000LL);
    for (int iter = 0; iter < 2000; ++iter) {
        std::int64_t a = dist(rng), b = dist(rng);
        CHECK((BigInt(a) + BigInt(b)).to_int64() == a + b);
        CHECK((BigInt(a) - BigInt(b)).to_int64() == a - b);
        CHECK((BigInt(a) * BigInt(b)).to_int64() == a * b);
        if (b != 0) {
            CHECK((BigInt(a) / BigInt(b)).to_int64() == a / b);
            CHECK((BigInt(a) % BigInt(b)).to_int64() == a % b);
        }
        CHECK((BigInt(a) < BigInt(b)) == (a < b));
    }
}

TEST_CASE("bigint divmod identity on large operands") {
    std::mt19937 rng(999);
    auto random_big = [&](int limbs) {
        BigInt acc(0);
        for (int i = 0; i < limbs; ++i)
            acc = acc * BigInt(1LL << 32) + BigInt(static_cast<std::int64_t>(rng()));
        if (rng() & 1) acc = -acc;
        return acc;
    };
    for (int iter = 0; iter < 300; ++iter) {
        BigInt a = random_big(1 + static_cast<int>(rng() % 6));
        BigInt b = random_big(1 + static_cast<int>(rng() % 4));
        if (b.is_zero()) continue;
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
        // remainder carries the dividend's sign (truncated division)
        if (!r.is_zero()) CHECK(r.sign() == a.sign());
    }
}

TEST_CASE("bigint division corner cases near limb boundaries") {
    // structured operands around the limb extremes exercise the quotient
    // correction and add-back branches of the long division
    const std::vector<std::uint32_t> specials{0u, 1u, 2u, 0x7fffffffu, 0x80000000u,
                                              0x80000001u, 0xfffffffeu, 0xffffffffu};
    auto from_limbs = [](std::initializer_list<std::uint32_t> limbs) {
        BigInt acc(0);
        for (auto it = std::rbegin(limbs); it != std::rend(limbs); ++it)
            acc = acc * BigInt(1LL << 32) + BigInt(static_cast<std::int64_t>(*it));
        return acc;
    };
    long checked = 0;
    for (std::uint32_t a0 : specials)
        for (std::uint32_t a1 : specials)
            for (std::uint32_t a2 : specials)
                for (std::uint32_t b0 : specials)
                    for (std::uint32_t b1 : specials) {
                        BigInt a = from_limbs({a0, a1, a2, 1u});
                        BigInt b = from_limbs({b0, b1});
                        if (b.is_zero()) continue;
                        BigInt q, r;
                        BigInt::divmod(a, b, q, r);
                        REQUIRE(q * b + r == a);
                        REQUIRE(r.abs() < b.abs());
                        ++checked;
                    }
    CHECK(checked > 30000);
}

TEST_CASE("bigint string round trip and pow") {
    BigInt x = BigInt::from_string("-123456789012345678901234567890");
    CHECK(x.to_string() == "-123456789012345678901234567890");
    CHECK(BigInt::from_string(x.to_string()) == x);
    CHECK(BigInt::pow(BigInt(10), 30) == BigInt::from_string("1000000000000000000000000000000"));
    CHECK(BigInt::gcd(BigInt(462), BigInt(-1071)) == BigInt(21));
}

TEST_CASE("rational normalization and field ops") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(3, 5) * Rational(10, 9)) == Rational(2, 3));
    CHECK((Rational(1, 7) / Rational(2, 7)) == Rational(1, 2));
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);
    CHECK(Rational::from_string("-22/7").to_string() == "-22/7");
    CHECK(Rational(1, 3).to_double() == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("rational random field axioms") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<std::int64_t> dist(-500, 500);
    auto rnd = [&]() {
        std::int64_t d = 0;
        while (d == 0) d = dist(rng);
        return Rational(dist(rng), d);
    };
    for (int iter = 0; iter < 500; ++iter) {
        Rational a = rnd(), b = rnd(), c = rnd();
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + (b + c) == (a + b) + c);
        if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
    }
}
