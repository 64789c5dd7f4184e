#pragma once

#include "lctkit/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace lctkit {

/// Exponent vector of a monomial x^u.
using Exponents = std::vector<std::int64_t>;

/// Raised when an operation needs a zero-dimensional ideal (finite colength).
class InfiniteColength : public std::domain_error {
public:
    InfiniteColength() : std::domain_error("infinite colength: ideal is not zero-dimensional") {}
};

/// Monomial ideal in K[x_1..x_n], stored by its minimal generators in
/// lexicographic order. Immutable after construction.
class MonomialIdeal {
public:
    /// Minimalizes `gens`. Throws std::invalid_argument on an empty set,
    /// a length mismatch or a negative exponent.
    MonomialIdeal(std::size_t n, std::vector<Exponents> gens);

    /// Like the constructor, but throws if `gens` is not already an antichain.
    static MonomialIdeal from_minimal(std::size_t n, std::vector<Exponents> gens);

    /// The ideal (x_1, ..., x_n).
    static MonomialIdeal maximal(std::size_t n);
    /// (x_1^{a_1}, ..., x_n^{a_n}).
    static MonomialIdeal complete_intersection(const Exponents& a);

    std::size_t n() const { return n_; }
    const std::vector<Exponents>& generators() const { return gens_; }

    bool is_unit() const;
    /// Every axis carries a pure-power generator.
    bool is_zero_dimensional() const;
    /// Exponent of the pure-power generator on `axis`, if there is one.
    std::optional<std::int64_t> pure_power(std::size_t axis) const;
    /// Common coordinate sum of all generators, if they share one.
    std::optional<std::int64_t> homogeneous_degree() const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    MonomialIdeal() = default;

    std::size_t n_ = 0;
    std::vector<Exponents> gens_;
};

/// Componentwise a <= b.
bool divides(std::span<const std::int64_t> a, std::span<const std::int64_t> b);

MonomialIdeal minimalize(const std::vector<Exponents>& gens, std::size_t n);

bool contains_monomial(const MonomialIdeal& ideal, std::span<const std::int64_t> v);

MonomialIdeal power(const MonomialIdeal& ideal, unsigned t);

/// Number of standard monomials. Throws InfiniteColength unless zero-dimensional.
BigInt colength(const MonomialIdeal& ideal);

/// Drops the coordinates not listed in `axes`; generators must vanish there.
MonomialIdeal restrict_to(const MonomialIdeal& ideal, const std::vector<std::size_t>& axes);

/// Appends `extra` unused variables.
MonomialIdeal extend(const MonomialIdeal& ideal, std::size_t extra);

}  // namespace lctkit
