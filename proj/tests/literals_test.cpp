#include <gtest/gtest.h>

#include <random>

#include "dold/doldcore.hpp"
#include "dold/literals.hpp"

namespace lit = dold::literals;
using dold::APSet;
using dold::DoldSequence;
using dold::ParseError;
using dold::RootSpectrum;

TEST(ParseSpectrum, Forms) {
    EXPECT_EQ(lit::parse_spectrum("{3,4}"), (RootSpectrum{{3, 1}, {4, 1}}));
    EXPECT_EQ(lit::parse_spectrum("3:1,4:1"), (RootSpectrum{{3, 1}, {4, 1}}));
    EXPECT_EQ(lit::parse_spectrum(" { 1, 1 , 6 } "), (RootSpectrum{{1, 2}, {6, 1}}));
    EXPECT_EQ(lit::parse_spectrum("{6,1,1}"), (RootSpectrum{{1, 2}, {6, 1}}));
    EXPECT_EQ(lit::parse_spectrum("2:-1"), (RootSpectrum{{2, -1}}));
    EXPECT_TRUE(lit::parse_spectrum("").empty());
    EXPECT_TRUE(lit::parse_spectrum("{}").empty());
}

TEST(ParseDold, Forms) {
    EXPECT_EQ(lit::parse_dold("(3,1,-1,-1)"), (DoldSequence{{1, 3}, {2, 1}, {3, -1}, {4, -1}}));
    EXPECT_EQ(lit::parse_dold("15:-2"), (DoldSequence{{15, -2}}));
    EXPECT_EQ(lit::parse_dold("(0,0,7)"), (DoldSequence{{3, 7}}));
    EXPECT_EQ(lit::parse_dold("010:3"), (DoldSequence{{10, 3}}));
    EXPECT_TRUE(lit::parse_dold("").empty());
    EXPECT_TRUE(lit::parse_dold("()").empty());
}

TEST(ParseSet, Forms) {
    EXPECT_EQ(lit::parse_set("{1,2}"), (APSet{1, 2}));
    EXPECT_EQ(lit::parse_set("2,1,2"), (APSet{1, 2}));
    EXPECT_TRUE(lit::parse_set("{}").empty());
}

TEST(ParseErrors, ReportPosition) {
    try {
        lit::parse_spectrum("{3, x}");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 4u);
    }
    try {
        lit::parse_dold("1:2,1:3");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 4u);
    }
    EXPECT_THROW(lit::parse_spectrum("{0}"), ParseError);
    EXPECT_THROW(lit::parse_spectrum("{3,4"), ParseError);
    EXPECT_THROW(lit::parse_dold("(1,2))"), ParseError);
    EXPECT_THROW(lit::parse_dold("+1:2"), ParseError);
    EXPECT_THROW(lit::parse_set("{1,-2}"), ParseError);
}

TEST(Format, Shapes) {
    EXPECT_EQ(lit::format_set(APSet{}), "{}");
    EXPECT_EQ(lit::format_set(APSet{1, 3}), "{1,3}");
    EXPECT_EQ(lit::format_spectrum({{1, 2}, {6, 1}}), "{1,1,6}");
    EXPECT_EQ(lit::format_spectrum({{2, -1}, {3, 1}}), "2:-1,3:1");
    EXPECT_EQ(lit::format_tuple({{1, 3}, {4, -1}}), "(3,0,0,-1)");
    EXPECT_EQ(lit::format_tuple({}), "()");
}

TEST(Format, ReparsesToSameObject) {
    std::mt19937 rng(99);
    std::uniform_int_distribution<dold::Index> count(0, 5), index(1, 25);
    std::uniform_int_distribution<int> value(-5, 5), mult(0, 3);
    for (int t = 0; t < 500; ++t) {
        DoldSequence a;
        RootSpectrum r, rn;
        for (auto i = count(rng); i > 0; --i) {
            a.set(index(rng), value(rng));
            r.set(index(rng), mult(rng));
            rn.set(index(rng), value(rng));
        }
        ASSERT_EQ(lit::parse_dold(lit::format_tuple(a)), a);
        ASSERT_EQ(lit::parse_dold(lit::format_pairs(a)), a);
        ASSERT_EQ(lit::parse_spectrum(lit::format_spectrum(r)), r);
        ASSERT_EQ(lit::parse_spectrum(lit::format_spectrum(rn)), rn);
    }
}
