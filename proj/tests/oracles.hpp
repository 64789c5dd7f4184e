#pragma once

// Brute-force reference computations used only by the tests. Nothing here
// calls into the library beyond its value types, so the checks below compare
// two independent routes.

#include "lctkit/ideal.hpp"
#include "lctkit/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace oracle {

using lctkit::Exponents;
using lctkit::Rat;

inline bool below(const Exponents& a, const Exponents& b)
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
    }
    return true;
}

/// Every point of [lo, hi]^n in lexicographic order.
inline void for_each_point(std::size_t n, std::int64_t lo, std::int64_t hi, const std::function<void(const Exponents&)>& f)
{
    Exponents v(n, lo);
    while (true) {
        f(v);
        std::size_t i = n;
        while (i > 0 && v[i - 1] == hi) v[--i] = lo;
        if (i == 0) return;
        ++v[i - 1];
    }
}

inline std::vector<Exponents> minimal_elements(std::vector<Exponents> gens)
{
    std::vector<Exponents> out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < gens.size() && !dominated; ++j) {
            if (j == i) continue;
            if (below(gens[j], gens[i]) && (gens[j] != gens[i] || j < i)) dominated = true;
        }
        if (!dominated) out.push_back(gens[i]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool in_ideal(const std::vector<Exponents>& gens, const Exponents& v)
{
    return std::any_of(gens.begin(), gens.end(), [&](const Exponents& g) { return below(g, v); });
}

/// Standard monomials in [0, box)^n.
inline std::uint64_t count_outside(const std::vector<Exponents>& gens, std::size_t n, std::int64_t box)
{
    std::uint64_t count = 0;
    for_each_point(n, 0, box - 1, [&](const Exponents& v) { count += in_ideal(gens, v) ? 0 : 1; });
    return count;
}

inline std::vector<Exponents> all_sums(const std::vector<Exponents>& gens, unsigned t)
{
    std::vector<Exponents> out{Exponents(gens.front().size(), 0)};
    for (unsigned s = 0; s < t; ++s) {
        std::vector<Exponents> next;
        for (const auto& a : out) {
            for (const auto& g : gens) {
                Exponents sum = a;
                for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += g[i];
                next.push_back(sum);
            }
        }
        out = std::move(next);
    }
    return minimal_elements(out);
}

inline std::int64_t dot(const Exponents& a, const Exponents& b)
{
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline std::int64_t order_along(const std::vector<Exponents>& gens, const Exponents& nu)
{
    std::int64_t best = dot(nu, gens.front());
    for (const auto& g : gens) best = std::min(best, dot(nu, g));
    return best;
}

struct ContactOptimum {
    std::int64_t weight;
    Exponents witness;
};

/// min sum(nu) over nu in [lo, hi]^n with <nu, g> >= order for all g; the
/// first optimum in lexicographic order is kept.
inline std::optional<ContactOptimum> contact(const std::vector<Exponents>& gens, std::size_t n, std::int64_t order,
                                             std::int64_t lo, std::int64_t hi)
{
    std::optional<ContactOptimum> best;
    for_each_point(n, lo, hi, [&](const Exponents& nu) {
        if (order_along(gens, nu) < order) return;
        std::int64_t w = 0;
        for (auto x : nu) w += x;
        if (!best || w < best->weight) best = ContactOptimum{w, nu};
    });
    return best;
}

/// lct as the minimum of sum(nu) / ord_nu(I) over monomial valuations nu in
/// [0, box]^n \ {0}. Exact once box reaches the denominators of the facets.
inline Rat lct_by_valuations(const std::vector<Exponents>& gens, std::size_t n, std::int64_t box)
{
    std::optional<Rat> best;
    for_each_point(n, 0, box, [&](const Exponents& nu) {
        std::int64_t ord = order_along(gens, nu);
        if (ord == 0) return;
        std::int64_t s = 0;
        for (auto x : nu) s += x;
        Rat r(lctkit::BigInt(static_cast<long>(s)), lctkit::BigInt(static_cast<long>(ord)));
        if (!best || r < *best) best = r;
    });
    return *best;
}

/// x^v lies in J(I^c) iff <nu, v + 1> > c ord_nu(I) for every valuation nu
/// in [0, box]^n \ {0} with ord_nu(I) > 0.
inline bool in_multiplier_ideal(const std::vector<Exponents>& gens, std::size_t n, const Rat& c, const Exponents& v,
                                std::int64_t box)
{
    bool inside = true;
    for_each_point(n, 0, box, [&](const Exponents& nu) {
        if (!inside) return;
        std::int64_t ord = order_along(gens, nu);
        std::int64_t lhs = 0;
        for (std::size_t i = 0; i < n; ++i) lhs += nu[i] * (v[i] + 1);
        if (lhs == 0 && ord == 0) return;
        if (!(Rat(static_cast<long>(lhs)) > c * Rat(static_cast<long>(ord)))) inside = false;
    });
    return inside;
}

/// Minimal generators of J(I^c) among exponents in [0, span)^n.
inline std::vector<Exponents> multiplier_generators(const std::vector<Exponents>& gens, std::size_t n, const Rat& c,
                                                    std::int64_t span, std::int64_t box)
{
    std::vector<Exponents> members;
    for_each_point(n, 0, span - 1, [&](const Exponents& v) {
        if (in_multiplier_ideal(gens, n, c, v, box)) members.push_back(v);
    });
    return minimal_elements(members);
}

}  // namespace oracle
