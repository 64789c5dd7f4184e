#pragma once

// Homogeneous monomial ideals: the lower bound lct >= e/d in terms of the
// codimension e of the non-log-terminal locus, the cone structure in the
// equality case, and the two projection families (x_1..x_k)^t and
// (x_1^t..x_k^t).

#include "lctkit/ideal.hpp"
#include "lctkit/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace lctkit {

struct ConeReport {
    std::int64_t d = 0;
    Rat c;
    /// nullopt when the multiplier ideal at c is trivial (empty locus).
    std::optional<std::size_t> e;
    bool bound_holds = true;
    bool equality = false;
    /// Smallest variable set containing the support of every generator.
    std::optional<std::vector<std::size_t>> cone_variables;
    /// On the restriction to cone_variables: lct = e/d and the non-LT locus
    /// is the origin.
    std::optional<bool> restricted_ok;
};

/// Requires every generator to have coordinate sum d; zero-dimensionality is
/// not required.
ConeReport cone_bound_report(const MonomialIdeal& ideal, std::int64_t d);

/// Re-derives the equality-case claims of a report from scratch: support in
/// S, |S| = e, restricted lct and locus. True when no equality is reported.
bool audit_equality(const MonomialIdeal& ideal, const ConeReport& report);

enum class ProjectionFamily { power, ci };

std::string to_string(ProjectionFamily f);
ProjectionFamily projection_family_from_string(const std::string& s);

struct ProjectionExampleRow {
    unsigned k = 0;
    unsigned t = 0;
    Rat c;
    BigInt length;
    Rat paper_bound;
    Rat pushforward_lct;
    Rat ratio;
    bool inequality_holds = false;  // pushforward_lct <= paper_bound
    bool strict = false;            // pushforward_lct < paper_bound
    /// For t <= 6: lct and colength recomputed on the explicit ideal agree.
    std::optional<bool> cross_checked;
};

std::vector<ProjectionExampleRow> projection_example(unsigned k, unsigned t_max, ProjectionFamily family);

struct SharpnessTable {
    unsigned k = 0;
    unsigned t_max = 0;
    std::vector<Rat> ratios;  // index t - 1
    bool monotone = false;    // non-increasing in t
    bool final_in_range = false;  // last ratio in [1, (1 + k/t_max)^k]
};

/// length * k! / t^k for the power family, t = 1..t_max.
SharpnessTable sharpness_limit_table(unsigned k, unsigned t_max);

}  // namespace lctkit
