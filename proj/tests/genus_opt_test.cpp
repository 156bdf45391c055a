#include <gtest/gtest.h>

#include <map>
#include <random>

#include "dold/genus_opt.hpp"
#include "dold/spectra_enum.hpp"

namespace gen = dold::genus;
namespace core = dold::core;
using dold::APSet;
using dold::DoldSequence;
using dold::Index;
using dold::RootSpectrum;

TEST(UpperBound, Examples) {
    const auto w15 = gen::upper_bound_genus({15});
    EXPECT_EQ(w15.genus, 16u);
    EXPECT_EQ(w15.dold, (DoldSequence{{15, -2}}));
    const auto w12 = gen::upper_bound_genus({1, 2});
    EXPECT_EQ(w12.genus, 4u);
    EXPECT_EQ(w12.dold, (DoldSequence{{1, -2}, {2, -2}}));
    const auto w1 = gen::upper_bound_genus({1});
    EXPECT_EQ(w1.genus, 2u);
    EXPECT_EQ(w1.dold, (DoldSequence{{1, -2}}));
}

TEST(UpperBound, AllParityCases) {
    // |A| odd, |A even| odd: n0 only.
    EXPECT_EQ(gen::upper_bound_genus({2}).dold, (DoldSequence{{2, -2}}));
    // |A| even, |A even| odd: n0 and n1.
    EXPECT_EQ(gen::upper_bound_genus({3, 4}).dold, (DoldSequence{{3, -2}, {4, -2}}));
    // both even: no change.
    EXPECT_EQ(gen::upper_bound_genus({1, 3}).dold, (DoldSequence{{1, -1}, {3, -1}}));
    EXPECT_EQ(gen::upper_bound_genus({1, 3}).genus, 3u);
}

TEST(UpperBound, WitnessProperties) {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<Index> count(1, 6), element(1, 40);
    for (int t = 0; t < 500; ++t) {
        std::vector<Index> e;
        for (Index i = count(rng); i > 0; --i) e.push_back(element(rng));
        const APSet a(e);
        const auto w = gen::upper_bound_genus(a);
        ASSERT_TRUE(core::is_realizable(w.dold).realizable);
        ASSERT_EQ(core::algebraic_periods(w.dold), a);
        ASSERT_EQ(w.spectrum, core::dold_to_spectrum(w.dold));
        ASSERT_EQ(core::genus_of(w.spectrum), w.genus);
    }
}

TEST(UpperBound, RejectsBadInput) {
    EXPECT_THROW(gen::upper_bound_genus({}), dold::DomainError);
    EXPECT_THROW(gen::upper_bound_genus({0, 1}), dold::DomainError);
}

TEST(MinGenusExact, Examples) {
    const auto w = gen::min_genus_exact({1, 2});
    EXPECT_EQ(w.genus, 1u);
    EXPECT_EQ(w.spectrum, (RootSpectrum{{2, 2}}));
    EXPECT_EQ(w.dold, (DoldSequence{{1, 4}, {2, -2}}));
    EXPECT_EQ(gen::min_genus_exact({15}).genus, 16u);
    const auto w1 = gen::min_genus_exact({1});
    EXPECT_EQ(w1.genus, 2u);
    EXPECT_EQ(w1.dold, (DoldSequence{{1, -2}}));
}

// Every nonempty A within {1..6}, against the first genus whose catalog
// contains a spectrum with algebraic periods exactly A.
TEST(MinGenusExact, AgreesWithCatalogScan) {
    std::map<APSet, RootSpectrum> first;
    std::map<APSet, Index> first_genus;
    for (Index g = 1; g <= 13; ++g)
        for (const auto& rec : dold::enumeration::enumerate_catalog(g)) {
            if (rec.ap.empty() || rec.ap.max() > 6 || (first_genus.contains(rec.ap) && first_genus[rec.ap] < g))
                continue;
            auto [it, fresh] = first.emplace(rec.ap, rec.spectrum);
            if (!fresh && dold::as_multiset(rec.spectrum) < dold::as_multiset(it->second)) it->second = rec.spectrum;
            first_genus.emplace(rec.ap, g);
        }
    int checked = 0;
    for (unsigned mask = 1; mask < 64; ++mask) {
        std::vector<Index> e;
        for (Index n = 1; n <= 6; ++n)
            if (mask >> (n - 1) & 1) e.push_back(n);
        const APSet a(e);
        const auto w = gen::min_genus_exact(a);
        ASSERT_LE(w.genus, gen::upper_bound_genus(a).genus);
        ASSERT_EQ(core::algebraic_periods(w.dold), a);
        ASSERT_TRUE(first_genus.contains(a)) << dold::literals::format_set(a);
        ASSERT_EQ(w.genus, first_genus[a]) << dold::literals::format_set(a);
        ASSERT_EQ(w.spectrum, first[a]) << dold::literals::format_set(a);
        ++checked;
    }
    EXPECT_EQ(checked, 63);
}

TEST(MinGenusOdd, Examples) {
    const auto w = gen::min_genus_odd({15});
    EXPECT_EQ(w.genus, 14u);
    EXPECT_EQ(w.spectrum, (RootSpectrum{{6, 2}, {10, 2}, {30, 2}}));
    EXPECT_EQ(core::algebraic_periods(w.dold), (APSet{2, 15, 30}));
    EXPECT_EQ(gen::min_genus_odd({1}).genus, 1u);
    EXPECT_EQ(gen::min_genus_odd({1}).spectrum, (RootSpectrum{{2, 2}}));
    EXPECT_EQ(gen::min_genus_odd({1, 3}).genus, 1u);
    EXPECT_EQ(gen::min_genus_odd({1, 3}).spectrum, (RootSpectrum{{3, 1}}));
    EXPECT_THROW(gen::min_genus_odd({2}), dold::DomainError);
}

TEST(MinGenusOdd, WitnessesHaveOddSupport) {
    for (const APSet& a : {APSet{3}, APSet{5}, APSet{1, 5}, APSet{3, 5}, APSet{1, 3, 5}, APSet{7}}) {
        const auto w = gen::min_genus_odd(a, 2);
        ASSERT_EQ(core::algebraic_periods(w.dold, true), a);
        ASSERT_TRUE(core::is_realizable(w.dold).realizable);
        ASSERT_LE(w.genus, gen::min_genus_exact(a).genus);
    }
}

// If the support of a lies in A, r_k vanishes off the divisors of A.
TEST(SupportPruning, SpectrumLivesOnDivisors) {
    std::mt19937 rng(55);
    std::uniform_int_distribution<Index> count(1, 5), element(1, 60);
    std::uniform_int_distribution<int> value(-4, 4);
    for (int t = 0; t < 1000; ++t) {
        DoldSequence a;
        std::vector<Index> e;
        for (Index i = count(rng); i > 0; --i) {
            e.push_back(element(rng));
            a.set(e.back(), value(rng));
        }
        for (const auto& [k, rk] : core::dold_to_spectrum(a)) {
            bool divides = false;
            for (Index n : e) divides = divides || n % k == 0;
            ASSERT_TRUE(divides) << k;
        }
    }
}
