#include "lctkit/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <optional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lctkit::kernels {

namespace {

std::atomic<int> g_thread_cap{0};

// Mixed-radix decode of a flat prefix index; radix[j] = box[j] + 1.
void decode(std::int64_t flat, const Exponents& box, std::size_t len, Exponents& out)
{
    for (std::size_t j = len; j-- > 0;) {
        out[j] = flat % (box[j] + 1);
        flat /= (box[j] + 1);
    }
}

std::int64_t box_volume(const Exponents& box, std::size_t len)
{
    std::int64_t count = 1;
    for (std::size_t j = 0; j < len; ++j) count *= box[j] + 1;
    return count;
}

// <w, v + 1> > c with w = W / D and c = p / q becomes q <W, v + 1> > p D, all
// in machine integers when the scaled data is small enough.
struct ScaledHalfspaces {
    bool usable = true;
    std::vector<std::vector<std::int64_t>> w;
    std::vector<std::int64_t> rhs;  // p * D
    std::int64_t q = 1;
};

ScaledHalfspaces scale(const StrictHalfspaces& h, const Rat& c)
{
    ScaledHalfspaces s;
    constexpr long limit = 1L << 30;
    auto small = [&](const BigInt& v) { return v.fits_slong_p() && abs(v) < limit; };
    if (!small(c.num()) || !small(c.den())) return {false, {}, {}, 1};
    s.q = c.den().get_si();
    for (const auto& normal : h.normals) {
        BigInt d = 1;
        for (const auto& x : normal) d = lcm(d, x.den());
        std::vector<std::int64_t> row;
        for (const auto& x : normal) {
            BigInt scaled = x.num() * (d / x.den());
            if (!small(scaled)) return {false, {}, {}, 1};
            row.push_back(scaled.get_si());
        }
        if (!small(d)) return {false, {}, {}, 1};
        s.w.push_back(std::move(row));
        s.rhs.push_back(c.num().get_si() * d.get_si());
    }
    return s;
}

bool strictly_inside(const ScaledHalfspaces& s, const Exponents& v)
{
    for (std::size_t f = 0; f < s.w.size(); ++f) {
        __int128 lhs = 0;
        for (std::size_t i = 0; i < v.size(); ++i) lhs += static_cast<__int128>(s.w[f][i]) * (v[i] + 1);
        if (!(lhs * s.q > static_cast<__int128>(s.rhs[f]))) return false;
    }
    return true;
}

bool strictly_inside(const StrictHalfspaces& h, const Rat& c, const Exponents& v)
{
    for (const auto& w : h.normals) {
        Rat s;
        for (std::size_t i = 0; i < h.n; ++i) {
            if (w[i].sign() != 0) s += w[i] * Rat(static_cast<long>(v[i] + 1));
        }
        if (!(s > c)) return false;
    }
    return true;
}

}  // namespace

void set_thread_cap(int threads) { g_thread_cap.store(threads < 0 ? 0 : threads); }
int thread_cap() { return g_thread_cap.load(); }

int team_size()
{
#ifdef _OPENMP
    int cap = g_thread_cap.load();
    return cap > 0 ? cap : omp_get_max_threads();
#else
    return 1;
#endif
}

std::uint64_t colength_count(const MonomialIdeal& ideal)
{
    const std::size_t n = ideal.n();
    const auto& gens = ideal.generators();
    Exponents box(n);
    for (std::size_t j = 0; j < n; ++j) box[j] = *ideal.pure_power(j) - 1;
    const std::int64_t prefixes = box_volume(box, n - 1);

    std::uint64_t total = 0;
#pragma omp parallel num_threads(team_size())
    {
        Exponents prefix(n);
#pragma omp for reduction(+ : total) schedule(static)
        for (std::int64_t flat = 0; flat < prefixes; ++flat) {
            decode(flat, box, n - 1, prefix);
            std::int64_t height = box[n - 1] + 1;
            for (const auto& g : gens) {
                if (g[n - 1] < height && divides(std::span(g).first(n - 1), std::span(prefix).first(n - 1))) {
                    height = g[n - 1];
                }
            }
            total += static_cast<std::uint64_t>(height);
        }
    }
    return total;
}

std::uint64_t colength_count_reference(const MonomialIdeal& ideal)
{
    const std::size_t n = ideal.n();
    Exponents box(n);
    for (std::size_t j = 0; j < n; ++j) box[j] = *ideal.pure_power(j) - 1;
    const std::int64_t points = box_volume(box, n);
    std::uint64_t total = 0;
    Exponents v(n);
    for (std::int64_t flat = 0; flat < points; ++flat) {
        decode(flat, box, n, v);
        if (!contains_monomial(ideal, v)) ++total;
    }
    return total;
}

namespace {

// Least v_n for the prefix, or nullopt when a facet parallel to the last axis
// already fails.
std::optional<std::int64_t> lowest_last(const ScaledHalfspaces& s, const Exponents& prefix, std::size_t n)
{
    std::int64_t lowest = 0;
    for (std::size_t f = 0; f < s.w.size(); ++f) {
        __int128 partial = 0;
        for (std::size_t j = 0; j + 1 < n; ++j) partial += static_cast<__int128>(s.w[f][j]) * (prefix[j] + 1);
        // q (partial + W_n (v_n + 1)) > p D
        __int128 room = static_cast<__int128>(s.rhs[f]) - partial * s.q;
        __int128 step = static_cast<__int128>(s.w[f][n - 1]) * s.q;
        if (step == 0) {
            if (room >= 0) return std::nullopt;
            continue;
        }
        __int128 need = room / step;
        if (room % step != 0 && room < 0) --need;  // floor
        if (need > lowest) lowest = static_cast<std::int64_t>(need);
    }
    return lowest;
}

std::optional<std::int64_t> lowest_last(const StrictHalfspaces& h, const Rat& c, const Exponents& prefix)
{
    const std::size_t n = h.n;
    std::int64_t lowest = 0;
    for (const auto& w : h.normals) {
        Rat s;
        for (std::size_t j = 0; j + 1 < n; ++j) {
            if (w[j].sign() != 0) s += w[j] * Rat(static_cast<long>(prefix[j] + 1));
        }
        if (w[n - 1].sign() == 0) {
            if (!(s > c)) return std::nullopt;
            continue;
        }
        // w_n (v_n + 1) > c - s  <=>  v_n >= floor((c - s) / w_n)
        BigInt need = ((c - s) / w[n - 1]).floor();
        if (need > lowest) lowest = need.get_si();
    }
    return lowest;
}

}  // namespace

std::vector<Exponents> strict_region_corners(const StrictHalfspaces& h, const Rat& c, const Exponents& box)
{
    const std::size_t n = h.n;
    const std::int64_t prefixes = box_volume(box, n - 1);
    const auto scaled = scale(h, c);
    std::vector<std::optional<std::int64_t>> last(static_cast<std::size_t>(prefixes));

#pragma omp parallel num_threads(team_size())
    {
        Exponents prefix(n);
#pragma omp for schedule(static)
        for (std::int64_t flat = 0; flat < prefixes; ++flat) {
            decode(flat, box, n - 1, prefix);
            last[static_cast<std::size_t>(flat)] =
                scaled.usable ? lowest_last(scaled, prefix, n) : lowest_last(h, c, prefix);
        }
    }

    // A corner is dominated iff some lower neighbouring prefix reaches it:
    // column heights only drop as the prefix grows.
    std::vector<std::int64_t> stride(n, 1);
    for (std::size_t j = n - 1; j-- > 1;) stride[j - 1] = stride[j] * (box[j] + 1);
    std::vector<Exponents> corners;
    Exponents prefix(n);
    for (std::int64_t flat = 0; flat < prefixes; ++flat) {
        const auto& l = last[static_cast<std::size_t>(flat)];
        if (!l) continue;
        decode(flat, box, n - 1, prefix);
        bool minimal = true;
        for (std::size_t j = 0; j + 1 < n && minimal; ++j) {
            if (prefix[j] == 0) continue;
            const auto& below = last[static_cast<std::size_t>(flat - stride[j])];
            minimal = !below || *below > *l;
        }
        if (!minimal) continue;
        prefix[n - 1] = *l;
        corners.push_back(prefix);
    }
    return corners;
}

std::vector<Exponents> strict_region_points_reference(const StrictHalfspaces& h, const Rat& c, const Exponents& box)
{
    const std::int64_t points = box_volume(box, h.n);
    const auto scaled = scale(h, c);
    auto inside = [&](const Exponents& v) { return scaled.usable ? strictly_inside(scaled, v) : strictly_inside(h, c, v); };
    std::vector<Exponents> minimal;
    Exponents v(h.n);
    for (std::int64_t flat = 0; flat < points; ++flat) {
        decode(flat, box, h.n, v);
        if (!inside(v)) continue;
        bool is_minimal = true;
        for (std::size_t i = 0; i < h.n && is_minimal; ++i) {
            if (v[i] == 0) continue;
            --v[i];
            is_minimal = !inside(v);
            ++v[i];
        }
        if (is_minimal) minimal.push_back(v);
    }
    return minimal;
}

}  // namespace lctkit::kernels
