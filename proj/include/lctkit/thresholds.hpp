#pragma once

#include "lctkit/ideal.hpp"
#include "lctkit/newton.hpp"
#include "lctkit/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace lctkit {

/// The pair (A^n, (1/mu)(V + sum_i b_i H_i)) with H_i = {x_i = 0}.
/// Requires mu > 0 and mu >= max_i b_i; b_i may be negative.
class PairSpec {
public:
    PairSpec(MonomialIdeal ideal, RatVector b, Rat mu);

    const MonomialIdeal& ideal() const { return ideal_; }
    const RatVector& b() const { return b_; }
    const Rat& mu() const { return mu_; }

private:
    MonomialIdeal ideal_;
    RatVector b_;
    Rat mu_;
};

struct MultiplierIdealResult {
    Rat c;
    MonomialIdeal ideal;
    bool trivial = false;
};

/// Howald: min over facets of the coordinate sum of the normalized normal.
Rat lct(const MonomialIdeal& ideal);
Rat lct(const NewtonPolyhedron& poly);

/// A facet attaining lct(), first in facet order.
const Facet& lct_facet(const NewtonPolyhedron& poly);

/// False iff some facet w has sum_i (mu - b_i) w_i <= 1.
bool is_log_terminal_pair(const PairSpec& pair);

/// Largest mu for which the pair with coefficients b is not log terminal:
/// max over facets of (1 + <b,w>) / sum(w). Not checked against mu >= max b.
Rat pair_threshold(const NewtonPolyhedron& poly, const RatVector& b);

/// J(I^c) = < x^v : <w, v + 1> > c for every facet w >.
MultiplierIdealResult multiplier_ideal(const MonomialIdeal& ideal, const Rat& c);
MultiplierIdealResult multiplier_ideal(const NewtonPolyhedron& poly, const Rat& c);

/// Same result computed by testing every point of the search box; kept as
/// the serial reference for the staircase kernel.
MultiplierIdealResult multiplier_ideal_reference(const NewtonPolyhedron& poly, const Rat& c);

/// Smallest set of variables meeting the support of every generator, in
/// increasing size then lexicographic order. Empty when a generator is 1.
std::vector<std::size_t> minimal_transversal(const MonomialIdeal& ideal);

/// Codimension of the zero locus of J(I^c); nullopt stands for an empty
/// locus (trivial multiplier ideal).
std::optional<std::size_t> non_lt_locus_codim(const MonomialIdeal& ideal, const Rat& c);

}  // namespace lctkit
