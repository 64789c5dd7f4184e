#include "lctkit/newton.hpp"
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
    std::uniform_int_distribution<int> e(1, max_exp), z(0, max_exp), count(0, 4);
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

const MonomialIdeal kCusp(2, {{2, 0}, {0, 3}});

}  // namespace

TEST(Lct, Examples)
{
    for (unsigned k = 1; k <= 4; ++k) {
        for (unsigned t = 1; t <= 6; ++t) {
            EXPECT_EQ(lct(power(MonomialIdeal::maximal(k), t)), Rat(static_cast<long>(k)) / Rat(static_cast<long>(t)));
        }
    }
    EXPECT_EQ(lct(MonomialIdeal::maximal(5)), Rat(5));
    EXPECT_EQ(lct(kCusp), q("5/6"));
    // Non-zero-dimensional: (x^2, xy) has lct 1 from the facet u_1 >= 1.
    EXPECT_EQ(lct(MonomialIdeal(2, {{2, 0}, {1, 1}})), Rat(1));
    EXPECT_THROW(lct(MonomialIdeal(2, {{0, 0}})), std::invalid_argument);
}

TEST(Lct, MatchesValuationSearch)
{
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 80; ++trial) {
        std::size_t n = 1 + trial % 3;
        auto ideal = random_zero_dimensional(rng, n, 4);
        EXPECT_EQ(lct(ideal), oracle::lct_by_valuations(ideal.generators(), n, n == 3 ? 32 : 24))
            << trial;
    }
}

TEST(Lct, ScalesUnderPowers)
{
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 60; ++trial) {
        auto ideal = random_zero_dimensional(rng, 1 + trial % 3, 5);
        Rat c = lct(ideal);
        for (unsigned t = 1; t <= 4; ++t) EXPECT_EQ(lct(power(ideal, t)), c / Rat(static_cast<long>(t)));
    }
}

TEST(PairSpec, Validation)
{
    EXPECT_THROW(PairSpec(kCusp, {Rat(0)}, Rat(1)), std::invalid_argument);
    EXPECT_THROW(PairSpec(kCusp, {Rat(0), Rat(0)}, Rat(0)), std::invalid_argument);
    EXPECT_THROW(PairSpec(kCusp, {Rat(2), Rat(0)}, Rat(1)), std::invalid_argument);
    EXPECT_NO_THROW(PairSpec(kCusp, {Rat(0), q("-1/2")}, q("9/10")));
}

TEST(PairLogTerminal, Examples)
{
    EXPECT_FALSE(is_log_terminal_pair(PairSpec(kCusp, {Rat(0), Rat(0)}, q("6/5"))));
    EXPECT_TRUE(is_log_terminal_pair(PairSpec(kCusp, {Rat(0), Rat(0)}, Rat(2))));
    EXPECT_FALSE(is_log_terminal_pair(PairSpec(kCusp, {Rat(0), q("-1/2")}, q("9/10"))));
    // Zero entries of a normal contribute nothing: (x^2, xy) with b = (0, 5).
    MonomialIdeal flat(2, {{2, 0}, {1, 1}});
    EXPECT_FALSE(is_log_terminal_pair(PairSpec(flat, {Rat(0), Rat(1)}, Rat(1))));
}

TEST(PairLogTerminal, ZeroBoundaryMatchesThreshold)
{
    std::mt19937_64 rng(43);
    const Rat scales[] = {q("1/2"), q("9/10"), Rat(1), q("11/10"), Rat(2)};
    for (int trial = 0; trial < 150; ++trial) {
        std::size_t n = 1 + trial % 4;
        auto ideal = random_zero_dimensional(rng, n, 6);
        Rat mu = Rat(1) / lct(ideal) * scales[trial % 5];
        EXPECT_EQ(is_log_terminal_pair(PairSpec(ideal, RatVector(n, Rat(0)), mu)), mu > Rat(1) / lct(ideal));
    }
}

TEST(PairLogTerminal, ThresholdIsTheBoundary)
{
    std::mt19937_64 rng(44);
    const Rat choices[] = {Rat(0), q("1/3"), q("1/2"), Rat(1), q("-1/2")};
    for (int trial = 0; trial < 150; ++trial) {
        std::size_t n = 1 + trial % 3;
        auto ideal = random_zero_dimensional(rng, n, 5);
        RatVector b;
        for (std::size_t i = 0; i < n; ++i) b.push_back(choices[(trial + i) % 5]);
        auto poly = build_polyhedron(ideal);
        Rat mu = pair_threshold(poly, b);
        if (mu <= Rat(0) || mu < *std::max_element(b.begin(), b.end())) continue;
        EXPECT_FALSE(is_log_terminal_pair(PairSpec(ideal, b, mu)));
        Rat bumped = mu + q("1/1000");
        EXPECT_TRUE(is_log_terminal_pair(PairSpec(ideal, b, bumped)));
    }
}

TEST(MultiplierIdeal, Examples)
{
    auto half = multiplier_ideal(kCusp, q("1/2"));
    EXPECT_TRUE(half.trivial);
    EXPECT_EQ(half.ideal.generators(), (std::vector<Exponents>{{0, 0}}));

    auto at = multiplier_ideal(kCusp, q("5/6"));
    EXPECT_FALSE(at.trivial);
    EXPECT_EQ(at.ideal, MonomialIdeal::maximal(2));

    EXPECT_TRUE(multiplier_ideal(MonomialIdeal::maximal(2), Rat(1)).trivial);
    EXPECT_EQ(multiplier_ideal(MonomialIdeal::maximal(2), Rat(2)).ideal, MonomialIdeal::maximal(2));
    EXPECT_TRUE(multiplier_ideal(kCusp, Rat(0)).trivial);
    EXPECT_THROW(multiplier_ideal(kCusp, q("-1/3")), std::invalid_argument);
}

TEST(MultiplierIdeal, MatchesValuationMembership)
{
    std::mt19937_64 rng(45);
    const Rat scales[] = {q("1/2"), Rat(1), q("4/3"), Rat(2), q("5/2")};
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 1 + trial % 2;
        auto ideal = random_zero_dimensional(rng, n, 4);
        Rat c = lct(ideal) * scales[trial % 5];
        auto result = multiplier_ideal(ideal, c);
        auto expected = oracle::multiplier_generators(ideal.generators(), n, c, 20, 24);
        EXPECT_EQ(result.ideal.generators(), expected) << trial;
    }
}

TEST(MultiplierIdeal, MonotoneAndJumpsAtThreshold)
{
    std::mt19937_64 rng(46);
    const Rat scales[] = {Rat(0), q("1/2"), q("3/4"), Rat(1), q("5/4"), q("3/2"), Rat(2), Rat(3)};
    for (int trial = 0; trial < 80; ++trial) {
        std::size_t n = 1 + trial % 4;
        auto ideal = random_zero_dimensional(rng, n, 5);
        Rat threshold = lct(ideal);
        std::optional<MonomialIdeal> previous;
        for (const auto& s : scales) {
            Rat c = threshold * s;
            auto r = multiplier_ideal(ideal, c);
            EXPECT_EQ(r.trivial, c < threshold);
            EXPECT_EQ(r.trivial, r.ideal.is_unit());
            if (previous) {
                // J at the larger c sits inside J at the smaller one.
                for (const auto& g : r.ideal.generators()) EXPECT_TRUE(contains_monomial(*previous, g));
            }
            previous = r.ideal;
        }
    }
}

TEST(NonLtLocus, Examples)
{
    EXPECT_EQ(non_lt_locus_codim(kCusp, q("5/6")), 2u);
    EXPECT_FALSE(non_lt_locus_codim(kCusp, q("1/2")).has_value());
    MonomialIdeal line = extend(power(MonomialIdeal::maximal(2), 3), 1);
    EXPECT_EQ(non_lt_locus_codim(line, q("2/3")), 2u);
    EXPECT_EQ(minimal_transversal(line), (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(minimal_transversal(MonomialIdeal(3, {{1, 1, 0}, {0, 0, 2}})), (std::vector<std::size_t>{0, 2}));
    EXPECT_TRUE(minimal_transversal(MonomialIdeal(2, {{0, 0}})).empty());
}

TEST(NonLtLocus, AtThresholdIsProper)
{
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 1 + trial % 4;
        auto ideal = random_zero_dimensional(rng, n, 5);
        auto e = non_lt_locus_codim(ideal, lct(ideal));
        ASSERT_TRUE(e.has_value());
        EXPECT_GE(*e, 1u);
        EXPECT_LE(*e, n);
        auto j = multiplier_ideal(ideal, lct(ideal)).ideal;
        EXPECT_EQ(*e == n, j.is_zero_dimensional());
    }
}
