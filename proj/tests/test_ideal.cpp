#include "lctkit/ideal.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace lctkit;

namespace {

std::vector<Exponents> random_gens(std::mt19937_64& rng, std::size_t n, std::size_t count, int max_exp)
{
    std::uniform_int_distribution<int> e(0, max_exp);
    std::vector<Exponents> gens;
    while (gens.size() < count) {
        Exponents g(n);
        for (auto& x : g) x = e(rng);
        gens.push_back(g);
    }
    return gens;
}

}  // namespace

TEST(Minimalize, DropsDominatedGenerators)
{
    EXPECT_EQ(minimalize({{1, 0}, {2, 0}, {0, 1}}, 2).generators(), (std::vector<Exponents>{{0, 1}, {1, 0}}));
    EXPECT_EQ(minimalize({{2, 0}, {0, 3}}, 2).generators(), (std::vector<Exponents>{{0, 3}, {2, 0}}));
    EXPECT_EQ(minimalize({{2, 0}, {1, 1}, {0, 2}}, 2).generators(),
              (std::vector<Exponents>{{0, 2}, {1, 1}, {2, 0}}));
    EXPECT_EQ(minimalize({{1, 1}, {1, 1}}, 2).generators().size(), 1u);
}

TEST(Minimalize, RejectsMalformedInput)
{
    EXPECT_THROW(minimalize({}, 2), std::invalid_argument);
    EXPECT_THROW(minimalize({{1, 0}, {1}}, 2), std::invalid_argument);
    EXPECT_THROW(minimalize({{1, -1}}, 2), std::invalid_argument);
    EXPECT_THROW(MonomialIdeal::from_minimal(2, {{1, 0}, {2, 0}}), std::invalid_argument);
}

TEST(Minimalize, IdempotentAndOrderIndependent)
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t n = 1 + trial % 4;
        auto gens = random_gens(rng, n, 1 + trial % 7, 5);
        auto once = minimalize(gens, n);
        EXPECT_EQ(minimalize(once.generators(), n), once);
        std::shuffle(gens.begin(), gens.end(), rng);
        EXPECT_EQ(minimalize(gens, n), once);
        EXPECT_EQ(once.generators(), oracle::minimal_elements(gens));
    }
}

TEST(ContainsMonomial, Staircase)
{
    MonomialIdeal i(2, {{2, 0}, {0, 3}});
    EXPECT_FALSE(contains_monomial(i, Exponents{1, 2}));
    EXPECT_TRUE(contains_monomial(i, Exponents{2, 0}));
    EXPECT_TRUE(contains_monomial(power(MonomialIdeal::maximal(2), 2), Exponents{1, 1}));
    EXPECT_THROW(contains_monomial(i, Exponents{1, 1, 1}), std::invalid_argument);
}

TEST(ContainsMonomial, AgreesWithUnminimalizedGenerators)
{
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 1 + trial % 3;
        auto gens = random_gens(rng, n, 1 + trial % 6, 4);
        MonomialIdeal ideal(n, gens);
        oracle::for_each_point(n, 0, 5, [&](const Exponents& v) {
            EXPECT_EQ(contains_monomial(ideal, v), oracle::in_ideal(gens, v));
        });
    }
}

TEST(Power, Examples)
{
    EXPECT_EQ(power(MonomialIdeal::maximal(2), 2).generators(), (std::vector<Exponents>{{0, 2}, {1, 1}, {2, 0}}));
    MonomialIdeal i(2, {{2, 0}, {0, 3}});
    EXPECT_EQ(power(i, 1), i);
    // Frozen from oracle::all_sums.
    EXPECT_EQ(power(i, 2).generators(), (std::vector<Exponents>{{0, 6}, {2, 3}, {4, 0}}));
    EXPECT_THROW(power(i, 0), std::invalid_argument);
}

TEST(Power, MatchesAllSums)
{
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 1 + trial % 3;
        auto gens = random_gens(rng, n, 1 + trial % 4, 3);
        if (std::all_of(gens.begin(), gens.end(), [](const Exponents& g) {
                return std::all_of(g.begin(), g.end(), [](auto x) { return x == 0; });
            })) {
            continue;
        }
        unsigned t = 1 + trial % 4;
        EXPECT_EQ(power(MonomialIdeal(n, gens), t).generators(), oracle::all_sums(gens, t));
    }
}

TEST(Colength, Examples)
{
    EXPECT_EQ(colength(power(MonomialIdeal::maximal(2), 2)), 3);
    EXPECT_EQ(colength(MonomialIdeal::maximal(2)), 1);
    EXPECT_EQ(colength(MonomialIdeal(2, {{2, 0}, {0, 3}})), 6);
    EXPECT_THROW(colength(MonomialIdeal(2, {{2, 0}, {1, 1}})), InfiniteColength);
}

TEST(Colength, PowersOfMaximalIdealAreBinomials)
{
    for (unsigned k = 1; k <= 4; ++k) {
        for (unsigned t = 1; t <= 20; ++t) {
            EXPECT_EQ(colength(power(MonomialIdeal::maximal(k), t)), binomial(k + t - 1, k)) << k << " " << t;
        }
    }
}

TEST(Colength, CompleteIntersectionIsProduct)
{
    std::mt19937_64 rng(14);
    std::uniform_int_distribution<int> e(1, 9);
    for (int trial = 0; trial < 100; ++trial) {
        Exponents a(1 + trial % 4);
        BigInt expected = 1;
        for (auto& x : a) {
            x = e(rng);
            expected *= x;
        }
        EXPECT_EQ(colength(MonomialIdeal::complete_intersection(a)), expected);
    }
}

TEST(Colength, MatchesBoxEnumeration)
{
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 150; ++trial) {
        std::size_t n = 1 + trial % 4;
        auto gens = random_gens(rng, n, trial % 5, 5);
        for (std::size_t i = 0; i < n; ++i) {
            Exponents p(n, 0);
            p[i] = 1 + (trial + static_cast<int>(i)) % 6;
            gens.push_back(p);
        }
        gens.erase(std::remove(gens.begin(), gens.end(), Exponents(n, 0)), gens.end());
        EXPECT_EQ(colength(MonomialIdeal(n, gens)), oracle::count_outside(gens, n, 7));
    }
}

TEST(Ideal, StructuralQueries)
{
    MonomialIdeal i(3, {{2, 0, 0}, {0, 2, 0}, {1, 1, 0}});
    EXPECT_FALSE(i.is_zero_dimensional());
    EXPECT_EQ(i.pure_power(0), 2);
    EXPECT_FALSE(i.pure_power(2).has_value());
    EXPECT_EQ(i.homogeneous_degree(), 2);
    EXPECT_FALSE(MonomialIdeal(2, {{2, 0}, {0, 3}}).homogeneous_degree().has_value());
    EXPECT_TRUE(MonomialIdeal(2, {{0, 0}}).is_unit());

    auto r = restrict_to(i, {0, 1});
    EXPECT_EQ(r, power(MonomialIdeal::maximal(2), 2));
    EXPECT_EQ(extend(r, 1), i);
    EXPECT_THROW(restrict_to(MonomialIdeal::maximal(2), {0}), std::invalid_argument);
}
