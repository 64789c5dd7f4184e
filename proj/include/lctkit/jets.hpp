#pragma once

// Jet-scheme side of the log canonical threshold. For a monomial scheme the
// arcs of order vector nu lie in V_m exactly when <nu, g> >= m + 1 for every
// generator g, so dimensions of jet schemes reduce to small integer programs
// over nu that never look at the Newton polyhedron.

#include "lctkit/ideal.hpp"
#include "lctkit/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace lctkit {

struct ContactSolution {
    std::int64_t weight = 0;
    Exponents witness;
};

struct ContactEntry {
    unsigned m = 0;
    std::int64_t weight = 0;
    Exponents witness;
};

struct ContactProfile {
    MonomialIdeal ideal;
    std::vector<ContactEntry> entries;  // m = 1..m_max
    unsigned m_max = 0;
};

/// min sum(nu) over integer lower <= nu_i <= upper with <nu, g> >= order for
/// every generator; the lexicographically first optimum is the witness.
/// nullopt when infeasible.
std::optional<ContactSolution> min_contact_weight(const MonomialIdeal& ideal, std::int64_t order,
                                                  std::int64_t lower, std::int64_t upper);

/// Minimal contact weight w(m) with an optimal witness. Requires m >= 1 and a
/// proper ideal.
ContactSolution contact_codim(const MonomialIdeal& ideal, unsigned m);

/// w(1..m_max); orders are solved concurrently and stored in order of m.
ContactProfile contact_profile(const MonomialIdeal& ideal, unsigned m_max);

/// Smallest lcm of the normal denominators over the threshold-attaining
/// facets: the first order at which an integral arc realizes the threshold.
unsigned default_m_max(const MonomialIdeal& ideal);

/// min over 1 <= m <= m_max of w(m)/m.
Rat lct_via_jets(const MonomialIdeal& ideal, unsigned m_max);
Rat lct_via_jets(const ContactProfile& profile);
/// Whether the minimum of the profile is attained only at its last order.
bool minimum_at_last_order(const ContactProfile& profile);

/// dim V_m (or of the fiber over the origin): (m+1) n minus the least total
/// order of nu in {0..m+1}^n (resp. {1..m+1}^n) with <nu, g> >= m + 1.
/// m = -1 yields 0.
std::int64_t jet_dim(const MonomialIdeal& ideal, std::int64_t m, bool fiber_over_origin);

/// n - dim V_m / (m + 1).
Rat jet_formula_value(const MonomialIdeal& ideal, std::int64_t m);

struct RecursionRow {
    std::int64_t m = 0;
    std::int64_t fiber_dim = 0;     // dim pi_m^{-1}(0)
    std::int64_t recursed_dim = 0;  // dim V_{m-d} + n(d-1)
};

struct RecursionReport {
    std::int64_t degree = 0;
    std::vector<RecursionRow> rows;
    std::optional<std::int64_t> first_violation;
    bool holds() const { return !first_violation; }
};

/// For a homogeneous ideal of degree d, compares dim pi_m^{-1}(0) against
/// dim V_{m-d} + n(d-1) for d-1 <= m <= m_max. Throws std::invalid_argument
/// for non-homogeneous input or m_max < d - 1.
RecursionReport cone_recursion_check(const MonomialIdeal& ideal, std::int64_t m_max);

}  // namespace lctkit
