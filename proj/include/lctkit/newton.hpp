#pragma once

#include "lctkit/ideal.hpp"
#include "lctkit/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace lctkit {

class UnboundedComplement : public std::domain_error {
public:
    UnboundedComplement()
        : std::domain_error("unbounded complement: Newton polyhedron of a non-zero-dimensional ideal") {}
};

/// Non-coordinate facet of a Newton polyhedron, written <normal, u> >= 1.
/// normal_i = 1/a_i for the intercept form sum u_i/a_i = 1, and 0 when the
/// facet is parallel to axis i.
struct Facet {
    RatVector normal;
    /// Indices into NewtonPolyhedron::vertices lying on the facet.
    std::vector<std::size_t> tight;

    /// No recession ray lies in the facet.
    bool bounded() const;
    /// Sum of the normal entries.
    Rat weight() const;
};

/// conv(generators) + R^n_{>=0}, in both representations.
struct NewtonPolyhedron {
    std::size_t n = 0;
    /// Sorted lexicographically by normal.
    std::vector<Facet> facets;
    /// Axes i for which {u_i = 0} cuts out a facet.
    std::vector<std::size_t> coordinate_facets;
    /// Generators of the source ideal that are vertices, in generator order.
    std::vector<Exponents> vertices;
    MonomialIdeal source;
};

/// Exact facet enumeration by the double-description method on the cone
/// spanned by (g, 1) for each generator g and (e_i, 0) for each axis.
/// Throws std::invalid_argument for the unit ideal.
NewtonPolyhedron build_polyhedron(const MonomialIdeal& ideal);

/// <w,u> >= 1 on every facet (> 1 and u_i > 0 on coordinate facets when strict).
bool membership(const NewtonPolyhedron& poly, const RatVector& u, bool strict);

/// n! times the volume of R^n_{>=0} minus P, as an exact integer: the sum of
/// |det| over a triangulation of the cones from the origin to the bounded
/// facets. Throws UnboundedComplement for non-zero-dimensional sources.
BigInt normalized_covolume(const NewtonPolyhedron& poly);

Rat covolume(const NewtonPolyhedron& poly);

/// Samuel multiplicity e(I) = n! * covolume(P(I)).
BigInt samuel_multiplicity(const MonomialIdeal& ideal);

namespace detail {
/// Rank of an integer matrix (fraction-free elimination).
std::size_t rank(std::vector<std::vector<BigInt>> rows);
/// Determinant of a square integer matrix (Bareiss).
BigInt determinant(std::vector<std::vector<BigInt>> m);
}  // namespace detail

}  // namespace lctkit
