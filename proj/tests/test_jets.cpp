#include "lctkit/jets.hpp"
#include "lctkit/thresholds.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace lctkit;

namespace {

Rat q(const char* s) { return Rat::parse(s); }

MonomialIdeal random_zero_dimensional(std::mt19937_64& rng, std::size_t n, int max_exp)
{
    std::uniform_int_distribution<int> e(1, max_exp), z(0, max_exp), count(0, 3);
    std::vector<Exponents> gens;
    for (std::size_t i = 0; i < n; ++i) {
        Exponents p(n, 0);
        p[i] = e(rng);
        gens.push_back(p);
    }
    for (int k = count(rng); k > 0; --k) {
        Exponents g(n);
        for (auto& x : g) x = z(rng);
        if (std::any_of(g.begin(), g.end(), [](auto x) { return x > 0; })) gens.push_back(g);
    }
    return MonomialIdeal(n, gens);
}

MonomialIdeal random_homogeneous(std::mt19937_64& rng, std::size_t n, std::int64_t d)
{
    std::uniform_int_distribution<std::size_t> axis(0, n - 1);
    std::uniform_int_distribution<int> count(1, 4);
    std::vector<Exponents> gens;
    for (int k = count(rng); k > 0; --k) {
        Exponents g(n, 0);
        for (std::int64_t s = 0; s < d; ++s) ++g[axis(rng)];
        gens.push_back(g);
    }
    return MonomialIdeal(n, gens);
}

const MonomialIdeal kCusp(2, {{2, 0}, {0, 3}});

}  // namespace

TEST(ContactCodim, Examples)
{
    // Frozen from oracle::contact over [0, 6]^2.
    auto six = contact_codim(kCusp, 6);
    EXPECT_EQ(six.weight, 5);
    EXPECT_EQ(six.witness, (Exponents{3, 2}));
    auto one = contact_codim(kCusp, 1);
    EXPECT_EQ(one.weight, 2);
    EXPECT_EQ(one.witness, (Exponents{1, 1}));
    for (std::size_t n = 1; n <= 5; ++n) {
        auto m = contact_codim(MonomialIdeal::maximal(n), 1);
        EXPECT_EQ(m.weight, static_cast<std::int64_t>(n));
        EXPECT_EQ(m.witness, Exponents(n, 1));
    }
    EXPECT_THROW(contact_codim(kCusp, 0), std::invalid_argument);
    EXPECT_THROW(contact_codim(MonomialIdeal(2, {{0, 0}}), 1), std::invalid_argument);
}

TEST(ContactCodim, MatchesExhaustiveSearch)
{
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 1 + trial % 3;
        auto ideal = random_zero_dimensional(rng, n, 4);
        for (unsigned m = 1; m <= 6; ++m) {
            auto got = contact_codim(ideal, m);
            auto want = oracle::contact(ideal.generators(), n, m, 0, m);
            ASSERT_TRUE(want.has_value());
            EXPECT_EQ(got.weight, want->weight);
            EXPECT_EQ(got.witness, want->witness);
        }
    }
}

TEST(ContactProfile, InvariantsOnRandomIdeals)
{
    std::mt19937_64 rng(52);
    for (int trial = 0; trial < 80; ++trial) {
        std::size_t n = 1 + trial % 4;
        auto ideal = random_zero_dimensional(rng, n, 5);
        auto profile = contact_profile(ideal, 12);
        ASSERT_EQ(profile.entries.size(), 12u);
        for (std::size_t k = 0; k < profile.entries.size(); ++k) {
            const auto& e = profile.entries[k];
            EXPECT_EQ(e.m, k + 1);
            EXPECT_LE(e.weight, static_cast<std::int64_t>(n * e.m));
            if (k > 0) EXPECT_GE(e.weight, profile.entries[k - 1].weight);
            std::int64_t sum = 0;
            for (auto x : e.witness) sum += x;
            EXPECT_EQ(sum, e.weight);
            for (const auto& g : ideal.generators()) EXPECT_GE(oracle::dot(e.witness, g), static_cast<std::int64_t>(e.m));
        }
        for (unsigned a = 1; a <= 6; ++a) {
            for (unsigned b = 1; b <= 6; ++b) {
                EXPECT_LE(profile.entries[a + b - 1].weight,
                          profile.entries[a - 1].weight + profile.entries[b - 1].weight);
            }
        }
    }
}

TEST(LctViaJets, Examples)
{
    EXPECT_EQ(lct_via_jets(kCusp, 6), q("5/6"));
    EXPECT_EQ(lct_via_jets(kCusp, 5), Rat(1));
    for (std::size_t n = 1; n <= 4; ++n) EXPECT_EQ(lct_via_jets(MonomialIdeal::maximal(n), 1), Rat(static_cast<long>(n)));
    for (unsigned k = 1; k <= 3; ++k) {
        for (unsigned t = 1; t <= 8; ++t) {
            EXPECT_EQ(lct_via_jets(power(MonomialIdeal::maximal(k), t), t),
                      Rat(static_cast<long>(k)) / Rat(static_cast<long>(t)));
        }
    }
    EXPECT_EQ(default_m_max(kCusp), 6u);
    auto profile = contact_profile(kCusp, 6);
    EXPECT_TRUE(minimum_at_last_order(profile));
    EXPECT_FALSE(minimum_at_last_order(contact_profile(kCusp, 12)));
}

TEST(LctViaJets, AgreesWithFacetFormula)
{
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 200; ++trial) {
        auto ideal = random_zero_dimensional(rng, 1 + trial % 4, 6);
        EXPECT_EQ(lct_via_jets(ideal, default_m_max(ideal)), lct(ideal)) << trial;
    }
}

TEST(JetDim, Examples)
{
    for (std::int64_t m = 0; m <= 6; ++m) EXPECT_EQ(jet_dim(MonomialIdeal::maximal(2), m, false), 0);
    MonomialIdeal square(2, {{2, 0}, {1, 1}, {0, 2}});
    EXPECT_EQ(jet_dim(square, 1, false), 2);
    MonomialIdeal cube = power(MonomialIdeal::maximal(2), 3);
    // d = 3, m = 2: fiber over the origin against V_{-1} x A^{2*2}.
    EXPECT_EQ(jet_dim(cube, 2, true), 0 + 2 * 2);
    EXPECT_EQ(jet_dim(cube, -1, false), 0);
}

TEST(JetDim, MatchesCappedEnumeration)
{
    std::mt19937_64 rng(54);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 1 + trial % 3;
        auto ideal = random_zero_dimensional(rng, n, 4);
        for (std::int64_t m = 0; m <= 5; ++m) {
            for (bool fiber : {false, true}) {
                auto best = oracle::contact(ideal.generators(), n, m + 1, fiber ? 1 : 0, m + 1);
                std::int64_t expected = (m + 1) * static_cast<std::int64_t>(n) - best->weight;
                EXPECT_EQ(jet_dim(ideal, m, fiber), expected);
            }
        }
    }
}

TEST(JetDim, FormulaReachesThresholdAtDivisibleOrder)
{
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 80; ++trial) {
        auto ideal = random_zero_dimensional(rng, 1 + trial % 3, 5);
        std::int64_t p = default_m_max(ideal);
        Rat best = jet_formula_value(ideal, 0);
        for (std::int64_t m = 1; m <= p - 1; ++m) best = std::min(best, jet_formula_value(ideal, m));
        EXPECT_EQ(best, lct(ideal));
        EXPECT_EQ(jet_formula_value(ideal, p - 1), lct(ideal));
    }
}

TEST(ConeRecursion, Examples)
{
    auto sq = cone_recursion_check(power(MonomialIdeal::maximal(2), 2), 8);
    EXPECT_TRUE(sq.holds());
    EXPECT_EQ(sq.degree, 2);
    EXPECT_EQ(sq.rows.size(), 8u);
    EXPECT_EQ(sq.rows.front().m, 1);

    auto cube = cone_recursion_check(power(MonomialIdeal::maximal(3), 3), 8);
    EXPECT_TRUE(cube.holds());
    EXPECT_EQ(cube.rows.front().m, 2);
    EXPECT_EQ(cube.rows.size(), 7u);

    EXPECT_THROW(cone_recursion_check(kCusp, 8), std::invalid_argument);
    EXPECT_THROW(cone_recursion_check(power(MonomialIdeal::maximal(2), 3), 1), std::invalid_argument);
}

TEST(ConeRecursion, HoldsOnRandomHomogeneousIdeals)
{
    std::mt19937_64 rng(56);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 1 + trial % 4;
        std::int64_t d = 1 + trial % 4;
        auto ideal = random_homogeneous(rng, n, d);
        auto report = cone_recursion_check(ideal, 10);
        EXPECT_TRUE(report.holds()) << trial;
        for (const auto& row : report.rows) EXPECT_EQ(row.fiber_dim, row.recursed_dim);
    }
}
