#include "lctkit/thresholds.hpp"

#include "lctkit/kernels.hpp"

#include <algorithm>

namespace lctkit {

namespace {

// Per-axis bound on minimal generators of J(I^c): if x^v is minimal then
// dropping one from v_i breaks a facet with w_i > 0, so w_i v_i <= c.
Exponents search_box(const NewtonPolyhedron& poly, const Rat& c)
{
    Exponents box(poly.n, 0);
    for (const auto& f : poly.facets) {
        for (std::size_t i = 0; i < poly.n; ++i) {
            if (f.normal[i].sign() == 0) continue;
            auto bound = (c / f.normal[i]).ceil();
            if (bound > box[i]) box[i] = bound.get_si();
        }
    }
    return box;
}

kernels::StrictHalfspaces halfspaces(const NewtonPolyhedron& poly)
{
    kernels::StrictHalfspaces h{poly.n, {}};
    for (const auto& f : poly.facets) h.normals.push_back(f.normal);
    return h;
}

MultiplierIdealResult finish(const Rat& c, std::size_t n, std::vector<Exponents> points)
{
    MonomialIdeal ideal(n, std::move(points));
    bool trivial = ideal.is_unit();
    return {c, std::move(ideal), trivial};
}

void check_exponent(const Rat& c)
{
    if (c.sign() < 0) throw std::invalid_argument("multiplier ideal exponent must be >= 0");
}

}  // namespace

PairSpec::PairSpec(MonomialIdeal ideal, RatVector b, Rat mu) : ideal_(std::move(ideal)), b_(std::move(b)), mu_(std::move(mu))
{
    if (b_.size() != ideal_.n()) throw std::invalid_argument("pair coefficient vector length does not match n");
    if (mu_.sign() <= 0) throw std::invalid_argument("pair scale mu must be positive");
    for (const auto& bi : b_) {
        if (bi > mu_) throw std::invalid_argument("pair requires mu >= max_i b_i");
    }
}

Rat lct(const NewtonPolyhedron& poly) { return lct_facet(poly).weight(); }

Rat lct(const MonomialIdeal& ideal) { return lct(build_polyhedron(ideal)); }

const Facet& lct_facet(const NewtonPolyhedron& poly)
{
    if (poly.facets.empty()) throw std::invalid_argument("Newton polyhedron has no facets");
    const Facet* best = &poly.facets.front();
    Rat best_weight = best->weight();
    for (const auto& f : poly.facets) {
        Rat w = f.weight();
        if (w < best_weight) {
            best = &f;
            best_weight = w;
        }
    }
    return *best;
}

bool is_log_terminal_pair(const PairSpec& pair)
{
    auto poly = build_polyhedron(pair.ideal());
    for (const auto& f : poly.facets) {
        Rat s;
        for (std::size_t i = 0; i < poly.n; ++i) {
            if (f.normal[i].sign() != 0) s += (pair.mu() - pair.b()[i]) * f.normal[i];
        }
        if (s <= Rat(1)) return false;
    }
    return true;
}

Rat pair_threshold(const NewtonPolyhedron& poly, const RatVector& b)
{
    std::optional<Rat> best;
    for (const auto& f : poly.facets) {
        Rat num(1);
        for (std::size_t i = 0; i < poly.n; ++i) num += b[i] * f.normal[i];
        Rat mu = num / f.weight();
        if (!best || mu > *best) best = mu;
    }
    if (!best) throw std::invalid_argument("Newton polyhedron has no facets");
    return *best;
}

MultiplierIdealResult multiplier_ideal(const NewtonPolyhedron& poly, const Rat& c)
{
    check_exponent(c);
    auto box = search_box(poly, c);
    return finish(c, poly.n, kernels::strict_region_corners(halfspaces(poly), c, box));
}

MultiplierIdealResult multiplier_ideal(const MonomialIdeal& ideal, const Rat& c)
{
    check_exponent(c);
    return multiplier_ideal(build_polyhedron(ideal), c);
}

MultiplierIdealResult multiplier_ideal_reference(const NewtonPolyhedron& poly, const Rat& c)
{
    check_exponent(c);
    auto box = search_box(poly, c);
    return finish(c, poly.n, kernels::strict_region_points_reference(halfspaces(poly), c, box));
}

std::vector<std::size_t> minimal_transversal(const MonomialIdeal& ideal)
{
    const std::size_t n = ideal.n();
    if (ideal.is_unit()) return {};
    for (std::size_t size = 1; size <= n; ++size) {
        // Lexicographic walk over size-subsets via a selection mask.
        std::vector<bool> mask(n, false);
        std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(size), true);
        do {
            bool hits_all = std::all_of(ideal.generators().begin(), ideal.generators().end(), [&](const Exponents& g) {
                for (std::size_t i = 0; i < n; ++i) {
                    if (mask[i] && g[i] > 0) return true;
                }
                return false;
            });
            if (hits_all) {
                std::vector<std::size_t> s;
                for (std::size_t i = 0; i < n; ++i) {
                    if (mask[i]) s.push_back(i);
                }
                return s;
            }
        } while (std::prev_permutation(mask.begin(), mask.end()));
    }
    return {};
}

std::optional<std::size_t> non_lt_locus_codim(const MonomialIdeal& ideal, const Rat& c)
{
    auto j = multiplier_ideal(ideal, c);
    if (j.trivial) return std::nullopt;
    return minimal_transversal(j.ideal).size();
}

}  // namespace lctkit
