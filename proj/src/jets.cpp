#include "lctkit/jets.hpp"

#include "lctkit/kernels.hpp"
#include "lctkit/newton.hpp"
#include "lctkit/thresholds.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace lctkit {

namespace {

constexpr std::int64_t kInfeasible = std::numeric_limits<std::int64_t>::max();

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return a <= 0 ? 0 : (a + b - 1) / b; }

// Depth-first branch and bound over nu_0, nu_1, ... in increasing order. The
// last coordinate is set to its least feasible value directly.
class ContactSearch {
public:
    ContactSearch(const std::vector<Exponents>& gens, std::size_t n, std::int64_t order, std::int64_t lower,
                  std::int64_t upper)
        : gens_(gens), n_(n), lower_(lower), upper_(upper), residual_(gens.size(), order), nu_(n, 0),
          tail_max_(n + 1, std::vector<std::int64_t>(gens.size(), 0)),
          tail_sum_(n + 1, std::vector<std::int64_t>(gens.size(), 0))
    {
        for (std::size_t i = n; i-- > 0;) {
            for (std::size_t g = 0; g < gens.size(); ++g) {
                tail_max_[i][g] = std::max(tail_max_[i + 1][g], gens[g][i]);
                tail_sum_[i][g] = tail_sum_[i + 1][g] + gens[g][i];
            }
        }
    }

    std::optional<ContactSolution> run()
    {
        descend(0, 0);
        if (best_ == kInfeasible) return std::nullopt;
        return ContactSolution{best_, best_nu_};
    }

private:
    // Least extra weight the coordinates i.. must add.
    std::int64_t tail_bound(std::size_t i) const
    {
        const auto rest = static_cast<std::int64_t>(n_ - i);
        std::int64_t extra = 0;
        for (std::size_t g = 0; g < gens_.size(); ++g) {
            std::int64_t left = residual_[g] - lower_ * tail_sum_[i][g];
            if (left <= 0) continue;
            if (tail_max_[i][g] == 0) return kInfeasible;
            extra = std::max(extra, ceil_div(left, tail_max_[i][g]));
        }
        return lower_ * rest + extra;
    }

    void descend(std::size_t i, std::int64_t partial)
    {
        if (i + 1 == n_) {
            std::int64_t need = lower_;
            for (std::size_t g = 0; g < gens_.size(); ++g) {
                if (residual_[g] <= 0) continue;
                if (gens_[g][i] == 0) return;
                need = std::max(need, ceil_div(residual_[g], gens_[g][i]));
            }
            if (need > upper_ || partial + need >= best_) return;
            nu_[i] = need;
            best_ = partial + need;
            best_nu_ = nu_;
            return;
        }
        const auto rest = static_cast<std::int64_t>(n_ - i - 1);
        for (std::int64_t v = lower_; v <= upper_; ++v) {
            if (partial + v + lower_ * rest >= best_) break;
            bool satisfied = true;
            for (std::size_t g = 0; g < gens_.size(); ++g) {
                residual_[g] -= v * gens_[g][i];
                if (residual_[g] > 0) satisfied = false;
            }
            nu_[i] = v;
            std::int64_t bound = tail_bound(i + 1);
            if (bound != kInfeasible && partial + v + bound < best_) descend(i + 1, partial + v);
            for (std::size_t g = 0; g < gens_.size(); ++g) residual_[g] += v * gens_[g][i];
            if (satisfied) break;
        }
    }

    const std::vector<Exponents>& gens_;
    std::size_t n_;
    std::int64_t lower_;
    std::int64_t upper_;
    std::vector<std::int64_t> residual_;
    Exponents nu_;
    std::vector<std::vector<std::int64_t>> tail_max_;
    std::vector<std::vector<std::int64_t>> tail_sum_;
    std::int64_t best_ = kInfeasible;
    Exponents best_nu_;
};

}  // namespace

std::optional<ContactSolution> min_contact_weight(const MonomialIdeal& ideal, std::int64_t order,
                                                  std::int64_t lower, std::int64_t upper)
{
    if (lower > upper) return std::nullopt;
    return ContactSearch(ideal.generators(), ideal.n(), order, lower, upper).run();
}

ContactSolution contact_codim(const MonomialIdeal& ideal, unsigned m)
{
    if (m == 0) throw std::invalid_argument("contact order must be >= 1");
    if (ideal.is_unit()) throw std::invalid_argument("contact order of the unit ideal is unbounded");
    // Raising any nu_i above m never helps: every generator using x_i already
    // reaches order m.
    auto sol = min_contact_weight(ideal, m, 0, m);
    if (!sol) throw std::logic_error("contact program infeasible for a proper ideal");
    return *sol;
}

ContactProfile contact_profile(const MonomialIdeal& ideal, unsigned m_max)
{
    if (m_max == 0) throw std::invalid_argument("m_max must be >= 1");
    std::vector<ContactEntry> entries(m_max);
    const auto count = static_cast<std::int64_t>(m_max);
#pragma omp parallel for schedule(dynamic, 1) num_threads(kernels::team_size())
    for (std::int64_t k = 0; k < count; ++k) {
        auto m = static_cast<unsigned>(k + 1);
        auto sol = contact_codim(ideal, m);
        entries[static_cast<std::size_t>(k)] = ContactEntry{m, sol.weight, std::move(sol.witness)};
    }
    return ContactProfile{ideal, std::move(entries), m_max};
}

unsigned default_m_max(const MonomialIdeal& ideal)
{
    auto poly = build_polyhedron(ideal);
    Rat threshold = lct(poly);
    std::optional<BigInt> best;
    for (const auto& f : poly.facets) {
        if (f.weight() != threshold) continue;
        BigInt l = 1;
        for (const auto& w : f.normal) l = lcm(l, w.den());
        if (!best || l < *best) best = l;
    }
    return static_cast<unsigned>(best->get_ui());
}

Rat lct_via_jets(const ContactProfile& profile)
{
    std::optional<Rat> best;
    for (const auto& e : profile.entries) {
        Rat r(BigInt(static_cast<long>(e.weight)), BigInt(static_cast<unsigned long>(e.m)));
        if (!best || r < *best) best = r;
    }
    return *best;
}

Rat lct_via_jets(const MonomialIdeal& ideal, unsigned m_max) { return lct_via_jets(contact_profile(ideal, m_max)); }

bool minimum_at_last_order(const ContactProfile& profile)
{
    Rat best = lct_via_jets(profile);
    for (const auto& e : profile.entries) {
        if (e.m == profile.m_max) break;
        if (Rat(BigInt(static_cast<long>(e.weight)), BigInt(static_cast<unsigned long>(e.m))) == best) return false;
    }
    return true;
}

std::int64_t jet_dim(const MonomialIdeal& ideal, std::int64_t m, bool fiber_over_origin)
{
    if (m < -1) throw std::invalid_argument("jet order must be >= -1");
    if (m == -1) return 0;
    if (ideal.is_unit()) throw std::invalid_argument("jet schemes of the empty scheme");
    auto sol = min_contact_weight(ideal, m + 1, fiber_over_origin ? 1 : 0, m + 1);
    if (!sol) throw std::logic_error("jet program infeasible for a proper ideal");
    return (m + 1) * static_cast<std::int64_t>(ideal.n()) - sol->weight;
}

Rat jet_formula_value(const MonomialIdeal& ideal, std::int64_t m)
{
    if (m < 0) throw std::invalid_argument("jet order must be >= 0");
    return Rat(static_cast<long>(ideal.n())) - Rat(BigInt(static_cast<long>(jet_dim(ideal, m, false))),
                                                   BigInt(static_cast<long>(m + 1)));
}

RecursionReport cone_recursion_check(const MonomialIdeal& ideal, std::int64_t m_max)
{
    auto d = ideal.homogeneous_degree();
    if (!d || ideal.is_unit()) throw std::invalid_argument("cone recursion needs a homogeneous ideal of positive degree");
    if (m_max < *d - 1) throw std::invalid_argument("m_max must be at least d - 1");
    const auto n = static_cast<std::int64_t>(ideal.n());
    RecursionReport report{*d, {}, std::nullopt};
    for (std::int64_t m = *d - 1; m <= m_max; ++m) {
        RecursionRow row{m, jet_dim(ideal, m, true), jet_dim(ideal, m - *d, false) + n * (*d - 1)};
        if (row.fiber_dim != row.recursed_dim && !report.first_violation) report.first_violation = m;
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace lctkit
