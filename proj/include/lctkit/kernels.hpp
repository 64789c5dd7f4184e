#pragma once

// Data-parallel inner loops. Each kernel has an OpenMP version used by the
// library and a serial reference that enumerates the full search box; the
// reference is kept for tests and the benchmark.

#include "lctkit/ideal.hpp"
#include "lctkit/rational.hpp"

#include <cstdint>
#include <vector>

namespace lctkit::kernels {

/// Caps the OpenMP team size (0 = runtime default).
void set_thread_cap(int threads);
int thread_cap();
/// Team size for a parallel region: the cap, or the OpenMP default.
int team_size();

/// Standard-monomial count of a zero-dimensional ideal. Walks every prefix
/// (u_1..u_{n-1}) of the staircase box and counts the column above it in one
/// step.
std::uint64_t colength_count(const MonomialIdeal& ideal);
/// Membership test at every point of the box.
std::uint64_t colength_count_reference(const MonomialIdeal& ideal);

/// Facet data used by the multiplier-ideal scan: normals w with <w,u> >= 1.
struct StrictHalfspaces {
    std::size_t n = 0;
    std::vector<RatVector> normals;
};

/// Minimal exponents v with <w, v + 1> > c for every normal, searched over
/// prefixes (v_1..v_{n-1}) inside `box` (inclusive upper bounds). The last
/// coordinate is solved exactly per prefix.
std::vector<Exponents> strict_region_corners(const StrictHalfspaces& h, const Rat& c, const Exponents& box);
/// Tests every point in the box and keeps those whose lower neighbours all
/// fail (the minimal ones).
std::vector<Exponents> strict_region_points_reference(const StrictHalfspaces& h, const Rat& c, const Exponents& box);

}  // namespace lctkit::kernels
