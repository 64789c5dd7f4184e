#pragma once

// Exact checks of the colength / multiplicity lower bounds for pairs that are
// not log terminal, plus the seeded randomized suites that drive them.

#include "lctkit/ideal.hpp"
#include "lctkit/io.hpp"
#include "lctkit/rational.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace lctkit {

/// `equal` is used by the oracle-agreement and violation-count checks.
enum class Relation { greater_equal, greater, equal };

std::string to_string(Relation r);

struct BoundReport {
    std::string check;
    Json instance;
    Rat lhs;
    Rat rhs;
    Relation relation = Relation::greater_equal;
    bool holds = false;
    bool strictness_expected = false;
    /// The log-terminality gate rejected the instance; lhs/rhs are unset.
    bool skipped = false;
    /// Facet normal certifying non-log-terminality.
    std::optional<RatVector> witness;
};

/// colength(I) vs n^n mu^{n-1} (mu + b) / n! for the pair with b_n = -b,
/// strict when n >= 2. Requires b >= 0 and mu > 0.
BoundReport check_theorem2_length(const MonomialIdeal& ideal, const Rat& b, const Rat& mu);

/// e(I) vs n^n mu^{n-1} (mu + b).
BoundReport check_theorem2_multiplicity(const MonomialIdeal& ideal, const Rat& b, const Rat& mu);

/// colength(I) vs (n^n / n!) prod_i (mu - b_i), strict when n >= 2.
/// Requires mu > 0 and mu >= max_i b_i.
BoundReport check_lemma_monomial(const MonomialIdeal& ideal, const RatVector& b, const Rat& mu);

struct IntRange {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
};

/// Reproducible instance stream: trial i draws from a generator seeded by
/// (seed, i) only, so trials can run in any order.
struct InstanceSampler {
    std::uint64_t seed = 0;
    IntRange n_range{1, 4};
    IntRange exponent_range{1, 6};
    /// Mixed generators added on top of the forced pure powers.
    IntRange generator_count_range{0, 4};
    std::vector<Rat> b_choices{Rat(0), Rat(1) / Rat(3), Rat(1) / Rat(2), Rat(1), Rat(3) / Rat(2)};
    IntRange degree_range{1, 5};

    std::mt19937_64 trial_engine(std::uint64_t trial) const;

    /// Zero-dimensional: every axis gets a pure power.
    MonomialIdeal sample_ideal(std::mt19937_64& rng) const;
    MonomialIdeal sample_complete_intersection(std::mt19937_64& rng) const;
    /// Random monomials of one degree; not necessarily zero-dimensional.
    MonomialIdeal sample_homogeneous(std::mt19937_64& rng) const;
    Rat sample_b(std::mt19937_64& rng) const;
};

enum class Suite { lemma_monomial, theorem2, oracle_lct, multiplier, cone };

std::string to_string(Suite s);
/// Throws std::invalid_argument for unknown names.
Suite suite_from_string(const std::string& name);

struct TrialOutcome {
    std::uint64_t trial = 0;
    std::vector<BoundReport> reports;
};

struct SuiteSummary {
    Suite suite = Suite::lemma_monomial;
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;
    std::uint64_t checked = 0;
    std::uint64_t skipped = 0;
    /// Trials whose instance passed the non-log-terminality gate.
    std::uint64_t gate_passed = 0;
    std::vector<BoundReport> failures;

    bool ok() const { return failures.empty(); }
};

/// Runs one trial; every report carries a self-contained instance JSON
/// accepted by replay_instance.
TrialOutcome run_trial(const InstanceSampler& sampler, Suite suite, std::uint64_t trial);

/// Throws std::invalid_argument when trials == 0.
SuiteSummary run_suite(const InstanceSampler& sampler, Suite suite, std::uint64_t trials);

/// Recomputes the report recorded in a failure's instance JSON.
BoundReport replay_instance(const Json& instance);

Json to_json(const BoundReport& report);
Json to_json(const SuiteSummary& summary);

}  // namespace lctkit
