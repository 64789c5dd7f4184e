#include "lctkit/ideal.hpp"

#include "lctkit/kernels.hpp"

#include <algorithm>
#include <numeric>

namespace lctkit {

namespace {

void validate(std::size_t n, const std::vector<Exponents>& gens)
{
    if (gens.empty()) throw std::invalid_argument("empty generator set");
    for (const auto& g : gens) {
        if (g.size() != n) throw std::invalid_argument("generator length does not match n");
        if (std::any_of(g.begin(), g.end(), [](std::int64_t e) { return e < 0; })) {
            throw std::invalid_argument("negative exponent in generator");
        }
    }
}

// Sorted antichain of `gens`. A divisor is lexicographically no larger, so
// each candidate only needs checking against the survivors before it.
std::vector<Exponents> antichain(std::vector<Exponents> gens)
{
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Exponents> kept;
    kept.reserve(gens.size());
    for (auto& g : gens) {
        bool dominated = std::any_of(kept.begin(), kept.end(), [&](const Exponents& h) { return divides(h, g); });
        if (!dominated) kept.push_back(std::move(g));
    }
    return kept;
}

}  // namespace

bool divides(std::span<const std::int64_t> a, std::span<const std::int64_t> b)
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
    }
    return true;
}

MonomialIdeal::MonomialIdeal(std::size_t n, std::vector<Exponents> gens) : n_(n)
{
    validate(n, gens);
    gens_ = antichain(std::move(gens));
}

MonomialIdeal MonomialIdeal::from_minimal(std::size_t n, std::vector<Exponents> gens)
{
    validate(n, gens);
    auto count = gens.size();
    MonomialIdeal ideal(n, std::move(gens));
    if (ideal.gens_.size() != count) {
        throw std::invalid_argument("generators are not minimal (some generator divides another)");
    }
    return ideal;
}

MonomialIdeal MonomialIdeal::maximal(std::size_t n)
{
    std::vector<Exponents> gens(n, Exponents(n, 0));
    for (std::size_t i = 0; i < n; ++i) gens[i][i] = 1;
    return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal MonomialIdeal::complete_intersection(const Exponents& a)
{
    std::vector<Exponents> gens(a.size(), Exponents(a.size(), 0));
    for (std::size_t i = 0; i < a.size(); ++i) gens[i][i] = a[i];
    return MonomialIdeal(a.size(), std::move(gens));
}

bool MonomialIdeal::is_unit() const
{
    return std::any_of(gens_.begin(), gens_.end(),
                       [](const Exponents& g) { return std::all_of(g.begin(), g.end(), [](auto e) { return e == 0; }); });
}

std::optional<std::int64_t> MonomialIdeal::pure_power(std::size_t axis) const
{
    for (const auto& g : gens_) {
        bool pure = g[axis] > 0;
        for (std::size_t j = 0; pure && j < n_; ++j) pure = (j == axis) || g[j] == 0;
        if (pure) return g[axis];
    }
    return std::nullopt;
}

bool MonomialIdeal::is_zero_dimensional() const
{
    if (is_unit()) return true;
    for (std::size_t i = 0; i < n_; ++i) {
        if (!pure_power(i)) return false;
    }
    return true;
}

std::optional<std::int64_t> MonomialIdeal::homogeneous_degree() const
{
    auto degree = [](const Exponents& g) { return std::accumulate(g.begin(), g.end(), std::int64_t{0}); };
    std::int64_t d = degree(gens_.front());
    for (const auto& g : gens_) {
        if (degree(g) != d) return std::nullopt;
    }
    return d;
}

MonomialIdeal minimalize(const std::vector<Exponents>& gens, std::size_t n) { return MonomialIdeal(n, gens); }

bool contains_monomial(const MonomialIdeal& ideal, std::span<const std::int64_t> v)
{
    if (v.size() != ideal.n()) throw std::invalid_argument("monomial length does not match n");
    return std::any_of(ideal.generators().begin(), ideal.generators().end(),
                       [&](const Exponents& g) { return divides(g, v); });
}

MonomialIdeal power(const MonomialIdeal& ideal, unsigned t)
{
    if (t == 0) throw std::invalid_argument("power exponent must be >= 1");
    MonomialIdeal result = ideal;
    for (unsigned step = 1; step < t; ++step) {
        std::vector<Exponents> sums;
        sums.reserve(result.generators().size() * ideal.generators().size());
        for (const auto& a : result.generators()) {
            for (const auto& b : ideal.generators()) {
                Exponents s(a.size());
                for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
                sums.push_back(std::move(s));
            }
        }
        result = MonomialIdeal(ideal.n(), std::move(sums));
    }
    return result;
}

BigInt colength(const MonomialIdeal& ideal)
{
    if (!ideal.is_zero_dimensional()) throw InfiniteColength();
    if (ideal.is_unit()) return 0;
    return BigInt(std::to_string(kernels::colength_count(ideal)));
}

MonomialIdeal restrict_to(const MonomialIdeal& ideal, const std::vector<std::size_t>& axes)
{
    std::vector<Exponents> gens;
    for (const auto& g : ideal.generators()) {
        Exponents r;
        for (auto a : axes) r.push_back(g.at(a));
        auto outside = std::accumulate(g.begin(), g.end(), std::int64_t{0}) -
                       std::accumulate(r.begin(), r.end(), std::int64_t{0});
        if (outside != 0) throw std::invalid_argument("generator is not supported on the given variables");
        gens.push_back(std::move(r));
    }
    return MonomialIdeal(axes.size(), std::move(gens));
}

MonomialIdeal extend(const MonomialIdeal& ideal, std::size_t extra)
{
    std::vector<Exponents> gens = ideal.generators();
    for (auto& g : gens) g.resize(g.size() + extra, 0);
    return MonomialIdeal(ideal.n() + extra, std::move(gens));
}

}  // namespace lctkit
