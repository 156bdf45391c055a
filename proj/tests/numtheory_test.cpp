#include <gtest/gtest.h>

#include "dold/numtheory.hpp"
#include "oracles.hpp"

namespace nt = dold::numtheory;
using dold::Index;
using dold::IntPolynomial;
using dold::Integer;

TEST(Mobius, Values) {
    EXPECT_EQ(nt::mobius(1), 1);
    EXPECT_EQ(nt::mobius(12), 0);
    EXPECT_EQ(nt::mobius(30), -1);
    for (Index n = 1; n <= 2000; ++n) ASSERT_EQ(nt::mobius(n), oracle::mobius(n)) << n;
}

TEST(Mobius, DivisorSumIsIndicator) {
    for (Index n = 1; n <= 10000; ++n) {
        int s = 0;
        for (Index d : nt::divisors(n)) s += nt::mobius(d);
        ASSERT_EQ(s, n == 1 ? 1 : 0) << n;
    }
}

TEST(Totient, Values) {
    EXPECT_EQ(nt::totient(1), 1u);
    EXPECT_EQ(nt::totient(15), 8u);
    EXPECT_EQ(nt::totient(12), 4u);
    for (Index n = 1; n <= 2000; ++n) ASSERT_EQ(nt::totient(n), oracle::totient(n)) << n;
}

TEST(Totient, DivisorSumIsIdentity) {
    for (Index n = 1; n <= 10000; ++n) {
        Index s = 0;
        for (Index d : nt::divisors(n)) s += nt::totient(d);
        ASSERT_EQ(s, n);
    }
}

TEST(Divisors, Values) {
    EXPECT_EQ(nt::divisors(1), (std::vector<Index>{1}));
    EXPECT_EQ(nt::divisors(12), (std::vector<Index>{1, 2, 3, 4, 6, 12}));
    EXPECT_EQ(nt::divisors(7), (std::vector<Index>{1, 7}));
    for (Index n = 1; n <= 500; ++n) ASSERT_EQ(nt::divisors(n), oracle::divisors(n));
}

TEST(InverseTotient, Examples) {
    EXPECT_EQ(nt::inverse_totient(1), (std::vector<Index>{1, 2}));
    EXPECT_TRUE(nt::inverse_totient(3).empty());
    EXPECT_EQ(nt::inverse_totient(8), (std::vector<Index>{15, 16, 20, 24, 30}));
}

TEST(InverseTotient, MatchesBruteForce) {
    for (Index n = 1; n <= 64; ++n) {
        const auto got = nt::inverse_totient(n);
        ASSERT_EQ(got, oracle::inverse_totient(n)) << n;
        for (Index m : got) ASSERT_EQ(nt::totient(m), n);
    }
}

TEST(InverseTotient, LargerArguments) {
    for (Index n : {96u, 128u, 240u, 480u, 1152u}) {
        const auto got = nt::inverse_totient(n);
        std::vector<Index> expect;
        for (Index m = 1; m <= 2 * n * n && m <= 200000; ++m)
            if (nt::totient(m) == n) expect.push_back(m);
        EXPECT_EQ(got, expect) << n;
    }
}

TEST(RamanujanSum, Values) {
    for (Index n = 1; n <= 10; ++n) EXPECT_EQ(nt::ramanujan_sum(1, n), 1);
    EXPECT_EQ(nt::ramanujan_sum(3, 1), -1);
    EXPECT_EQ(nt::ramanujan_sum(2, 4), 1);
}

TEST(RamanujanSum, MatchesRootsOfUnity) {
    for (Index k = 1; k <= 60; ++k)
        for (Index n = 1; n <= 60; ++n) ASSERT_EQ(nt::ramanujan_sum(k, n), oracle::ramanujan(k, n)) << k << ' ' << n;
}

TEST(RamanujanSum, DivisorSumIsReg) {
    for (Index k = 1; k <= 200; ++k)
        for (Index n = 1; n <= 200; ++n) {
            Integer s = 0;
            for (Index d : nt::divisors(k)) s += nt::ramanujan_sum(d, n);
            ASSERT_EQ(s, nt::reg(k, n)) << k << ' ' << n;
        }
}

TEST(Reg, Values) {
    EXPECT_EQ(nt::reg(3, 6), 3);
    EXPECT_EQ(nt::reg(3, 4), 0);
    for (Index n = 1; n <= 20; ++n) EXPECT_EQ(nt::reg(1, n), 1);
}

TEST(Cyclotomic, SmallCases) {
    EXPECT_EQ(nt::cyclotomic(1), (IntPolynomial{-1, 1}));
    EXPECT_EQ(nt::cyclotomic(3), (IntPolynomial{1, 1, 1}));
    EXPECT_EQ(nt::cyclotomic(6), (IntPolynomial{1, -1, 1}));
    EXPECT_EQ(nt::cyclotomic(3).to_string(), "x^2 + x + 1");
}

TEST(Cyclotomic, ProductOverDivisors) {
    for (Index k = 1; k <= 120; ++k) {
        IntPolynomial p{1};
        for (Index d : nt::divisors(k)) p = p * nt::cyclotomic(d);
        ASSERT_EQ(p, IntPolynomial::monomial(1, k) - IntPolynomial{1}) << k;
        ASSERT_TRUE(nt::cyclotomic(k).is_monic());
        ASSERT_EQ(nt::cyclotomic(k).degree(), static_cast<int>(nt::totient(k)));
    }
}

TEST(Cyclotomic, PalindromicFromThree) {
    for (Index k = 3; k <= 120; ++k) ASSERT_TRUE(nt::cyclotomic(k).is_palindromic()) << k;
    EXPECT_FALSE(nt::cyclotomic(1).is_palindromic());
}

TEST(NumTheory, ZeroIsRejected) {
    EXPECT_THROW(nt::mobius(0), dold::DomainError);
    EXPECT_THROW(nt::totient(0), dold::DomainError);
    EXPECT_THROW(nt::divisors(0), dold::DomainError);
    EXPECT_THROW(nt::ramanujan_sum(0, 1), dold::DomainError);
    EXPECT_THROW(nt::ramanujan_sum(1, 0), dold::DomainError);
    EXPECT_THROW(nt::cyclotomic(0), dold::DomainError);
}
