#pragma once

// Arithmetic behind birational superrigidity of smooth degree-N hypersurfaces
// X_N in P^N. After a general hyperplane section and a linear projection to
// P^{N-3}, the pushed-forward cycle has degree N r^2 and the pair
// (P^{N-3}, c^2/4 * cycle) fails to be log terminal. The affine cone bound
// then forces c^2/4 >= coeff / r^2 with coeff = (N-3)/N when the bad locus is
// zero-dimensional (4 <= N <= 6) and coeff = 3/N when it only has codimension
// >= 3 (N >= 7). Combined with c < 1/r this is impossible iff 4 coeff >= 1.
//
// r cancels: c^2/4 >= coeff/r^2 and c r < 1 give 4 coeff <= (c r)^2 < 1, so
// the test reduces to the rational margin 4 coeff - 1. At margin 0 the
// contradiction still holds because c can be taken arbitrarily close to 1/r
// from below while the inequality demands (c r)^2 >= 1.

#include "lctkit/rational.hpp"

#include <string>
#include <vector>

namespace lctkit {

/// Which locus estimate applies: low for 4 <= N <= 6, high for N >= 7.
enum class RigidityRegime { low, high };

std::string to_string(RigidityRegime r);

struct RigidityCase {
    long N = 0;
    RigidityRegime regime = RigidityRegime::low;
    /// Degree of the projected cycle is pushforward_degree_coeff * r^2.
    long pushforward_degree_coeff = 0;
    /// c^2/4 >= lct_lower_bound_coeff / r^2.
    Rat lct_lower_bound_coeff;
    /// 4 * lct_lower_bound_coeff - 1.
    Rat margin;
    bool contradiction = false;
};

/// Throws std::invalid_argument for N < 4.
RigidityCase superrigidity_certificate(long N);

struct RigidityTable {
    std::vector<RigidityCase> rows;
    /// Certified exactly on [max(N_min, 4), min(N_max, 12)].
    bool matches_expected_range = false;
};

/// Throws std::invalid_argument unless 4 <= N_min <= N_max.
RigidityTable rigidity_range(long n_min, long n_max);

/// Fixed explanatory notes printed with the table (multiplicity thresholds
/// 2r^2 and 4r^2 and the limiting argument at margin 0).
std::vector<std::string> rigidity_notes();

}  // namespace lctkit
