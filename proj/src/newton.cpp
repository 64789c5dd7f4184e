#include "lctkit/newton.hpp"

#include "lctkit/kernels.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>

namespace lctkit {

namespace {

using Bits = std::vector<std::uint64_t>;
using IntRow = std::vector<BigInt>;

void set_bit(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }
bool test_bit(const Bits& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1U; }

bool is_subset(const Bits& a, const Bits& b)
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] & ~b[i]) return false;
    }
    return true;
}

std::size_t popcount(const Bits& b)
{
    std::size_t c = 0;
    for (auto w : b) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

void normalize(IntRow& y)
{
    BigInt g = 0;
    for (const auto& v : y) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g > 1) {
        for (auto& v : y) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    }
}

struct Ray {
    IntRow y;
    Bits zero;  // processed constraint rows on which the ray is tight
};

// Extreme rays of {y : <row, y> >= 0 for every row}. Rows 0..n-1 are the axis
// directions (e_i, 0) and row n is a generator (g, 1); together they are
// linearly independent, so the starting cone is simplicial with rays
// (e_k, -g_k) and (0, 1).
std::vector<Ray> double_description(const std::vector<IntRow>& rows, std::size_t n)
{
    const std::size_t d = n + 1;
    const std::size_t words = (rows.size() + 63) / 64;
    std::vector<Ray> rays;
    for (std::size_t k = 0; k <= n; ++k) {
        Ray r{IntRow(d, 0), Bits(words, 0)};
        if (k < n) {
            r.y[k] = 1;
            r.y[n] = -rows[n][k];
        } else {
            r.y[n] = 1;
        }
        for (std::size_t j = 0; j <= n; ++j) {
            if (j != k) set_bit(r.zero, j);
        }
        rays.push_back(std::move(r));
    }

    for (std::size_t idx = d; idx < rows.size(); ++idx) {
        const auto& a = rows[idx];
        std::vector<BigInt> val(rays.size());
        std::vector<std::size_t> pos, neg;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            BigInt s = 0;
            for (std::size_t i = 0; i < d; ++i) s += a[i] * rays[r].y[i];
            val[r] = s;
            if (s > 0) pos.push_back(r);
            else if (s < 0) neg.push_back(r);
        }
        std::vector<Ray> next;
        next.reserve(rays.size());
        for (std::size_t r = 0; r < rays.size(); ++r) {
            if (val[r] >= 0) {
                next.push_back(rays[r]);
                if (val[r] == 0) set_bit(next.back().zero, idx);
            }
        }
        for (auto p : pos) {
            for (auto q : neg) {
                Bits common(words);
                for (std::size_t w = 0; w < words; ++w) common[w] = rays[p].zero[w] & rays[q].zero[w];
                if (popcount(common) + 2 < d) continue;
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
                    if (r != p && r != q && is_subset(common, rays[r].zero)) adjacent = false;
                }
                if (!adjacent) continue;
                Ray fresh{IntRow(d), common};
                for (std::size_t i = 0; i < d; ++i) fresh.y[i] = val[p] * rays[q].y[i] - val[q] * rays[p].y[i];
                normalize(fresh.y);
                set_bit(fresh.zero, idx);
                next.push_back(std::move(fresh));
            }
        }
        rays = std::move(next);
    }
    return rays;
}

std::size_t affine_dimension(const std::vector<Exponents>& pts, const std::vector<std::size_t>& ids)
{
    if (ids.size() <= 1) return 0;
    std::vector<IntRow> diffs;
    const auto& base = pts[ids[0]];
    for (std::size_t k = 1; k < ids.size(); ++k) {
        IntRow row(base.size());
        for (std::size_t i = 0; i < base.size(); ++i) row[i] = BigInt(static_cast<long>(pts[ids[k]][i] - base[i]));
        diffs.push_back(std::move(row));
    }
    return detail::rank(std::move(diffs));
}

using Simplex = std::vector<std::size_t>;

// Pulling triangulation: cone from the first vertex over the faces of one
// dimension lower that avoid it. Faces of `face` are its intersections with
// the facets of the polyhedron.
std::vector<Simplex> triangulate(const std::vector<Exponents>& pts, const std::vector<std::size_t>& face,
                                 std::size_t dim, const std::vector<std::vector<std::size_t>>& facet_sets)
{
    if (dim == 0) return {Simplex{face.front()}};
    const std::size_t apex = face.front();
    std::set<std::vector<std::size_t>> subfaces;
    for (const auto& fs : facet_sets) {
        std::vector<std::size_t> g;
        std::set_intersection(face.begin(), face.end(), fs.begin(), fs.end(), std::back_inserter(g));
        if (g.size() < dim || g.size() == face.size()) continue;
        if (std::binary_search(g.begin(), g.end(), apex)) continue;
        if (affine_dimension(pts, g) == dim - 1) subfaces.insert(std::move(g));
    }
    std::vector<Simplex> out;
    for (const auto& g : subfaces) {
        for (auto s : triangulate(pts, g, dim - 1, facet_sets)) {
            s.push_back(apex);
            out.push_back(std::move(s));
        }
    }
    return out;
}

}  // namespace

namespace detail {

std::size_t rank(std::vector<std::vector<BigInt>> rows)
{
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][c] == 0) continue;
            BigInt f = rows[i][c];
            for (std::size_t k = c; k < cols; ++k) rows[i][k] = rows[i][k] * rows[r][c] - rows[r][k] * f;
            normalize(rows[i]);
        }
        ++r;
    }
    return r;
}

BigInt determinant(std::vector<std::vector<BigInt>> m)
{
    const std::size_t n = m.size();
    if (n == 0) return 1;
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = t;
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

}  // namespace detail

bool Facet::bounded() const
{
    return std::all_of(normal.begin(), normal.end(), [](const Rat& w) { return w.sign() > 0; });
}

Rat Facet::weight() const
{
    Rat s;
    for (const auto& w : normal) s += w;
    return s;
}

NewtonPolyhedron build_polyhedron(const MonomialIdeal& ideal)
{
    if (ideal.is_unit()) throw std::invalid_argument("the unit ideal has an empty Newton polyhedron boundary");
    const std::size_t n = ideal.n();
    const auto& gens = ideal.generators();

    std::vector<IntRow> rows;
    for (std::size_t i = 0; i < n; ++i) {
        IntRow r(n + 1, 0);
        r[i] = 1;
        rows.push_back(std::move(r));
    }
    for (const auto& g : gens) {
        IntRow r(n + 1);
        for (std::size_t i = 0; i < n; ++i) r[i] = BigInt(static_cast<long>(g[i]));
        r[n] = 1;
        rows.push_back(std::move(r));
    }
    auto rays = double_description(rows, n);

    NewtonPolyhedron poly{n, {}, {}, {}, ideal};

    // Vertices: generators whose row is tight on rays spanning a hyperplane.
    std::vector<std::size_t> vertex_of(gens.size(), SIZE_MAX);
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        std::vector<IntRow> tight;
        for (const auto& r : rays) {
            if (test_bit(r.zero, n + gi)) tight.push_back(r.y);
        }
        if (detail::rank(std::move(tight)) == n) {
            vertex_of[gi] = poly.vertices.size();
            poly.vertices.push_back(gens[gi]);
        }
    }

    std::set<RatVector> seen;
    for (const auto& r : rays) {
        const BigInt& ys = r.y[n];
        if (ys < 0) {
            RatVector w(n);
            for (std::size_t i = 0; i < n; ++i) w[i] = Rat(r.y[i], -ys);
            if (!seen.insert(w).second) continue;
            Facet f{std::move(w), {}};
            for (std::size_t gi = 0; gi < gens.size(); ++gi) {
                if (vertex_of[gi] != SIZE_MAX && test_bit(r.zero, n + gi)) f.tight.push_back(vertex_of[gi]);
            }
            poly.facets.push_back(std::move(f));
        } else if (ys == 0) {
            for (std::size_t i = 0; i < n; ++i) {
                if (r.y[i] != 0) poly.coordinate_facets.push_back(i);
            }
        }
    }
    std::sort(poly.facets.begin(), poly.facets.end(),
              [](const Facet& a, const Facet& b) { return a.normal < b.normal; });
    std::sort(poly.coordinate_facets.begin(), poly.coordinate_facets.end());
    poly.coordinate_facets.erase(std::unique(poly.coordinate_facets.begin(), poly.coordinate_facets.end()),
                                 poly.coordinate_facets.end());
    return poly;
}

bool membership(const NewtonPolyhedron& poly, const RatVector& u, bool strict)
{
    if (u.size() != poly.n) throw std::invalid_argument("point length does not match n");
    for (const auto& f : poly.facets) {
        Rat s;
        for (std::size_t i = 0; i < poly.n; ++i) s += f.normal[i] * u[i];
        if (strict ? !(s > Rat(1)) : s < Rat(1)) return false;
    }
    if (strict) {
        for (auto axis : poly.coordinate_facets) {
            if (u[axis].sign() <= 0) return false;
        }
    } else {
        for (const auto& x : u) {
            if (x.sign() < 0) return false;
        }
    }
    return true;
}

BigInt normalized_covolume(const NewtonPolyhedron& poly)
{
    if (!poly.source.is_zero_dimensional()) throw UnboundedComplement();
    const std::size_t n = poly.n;

    std::vector<std::vector<std::size_t>> facet_sets;
    for (const auto& f : poly.facets) facet_sets.push_back(f.tight);
    for (auto axis : poly.coordinate_facets) {
        std::vector<std::size_t> s;
        for (std::size_t v = 0; v < poly.vertices.size(); ++v) {
            if (poly.vertices[v][axis] == 0) s.push_back(v);
        }
        facet_sets.push_back(std::move(s));
    }

    const auto count = static_cast<std::int64_t>(poly.facets.size());
    std::vector<BigInt> part(poly.facets.size(), 0);
#pragma omp parallel for schedule(dynamic, 1) num_threads(kernels::team_size())
    for (std::int64_t fi = 0; fi < count; ++fi) {
        const auto& f = poly.facets[static_cast<std::size_t>(fi)];
        if (!f.bounded()) continue;
        for (const auto& s : triangulate(poly.vertices, f.tight, n - 1, facet_sets)) {
            std::vector<IntRow> m;
            for (auto v : s) {
                IntRow row(n);
                for (std::size_t i = 0; i < n; ++i) row[i] = BigInt(static_cast<long>(poly.vertices[v][i]));
                m.push_back(std::move(row));
            }
            part[static_cast<std::size_t>(fi)] += abs(detail::determinant(std::move(m)));
        }
    }
    BigInt total = 0;
    for (const auto& p : part) total += p;
    return total;
}

Rat covolume(const NewtonPolyhedron& poly)
{
    return Rat(normalized_covolume(poly), factorial(static_cast<unsigned>(poly.n)));
}

BigInt samuel_multiplicity(const MonomialIdeal& ideal)
{
    if (!ideal.is_zero_dimensional()) throw UnboundedComplement();
    return normalized_covolume(build_polyhedron(ideal));
}

}  // namespace lctkit
