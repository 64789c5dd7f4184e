#include "lctkit/cones.hpp"

#include "lctkit/thresholds.hpp"

#include <stdexcept>

namespace lctkit {

namespace {

std::vector<std::size_t> support_union(const MonomialIdeal& ideal)
{
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < ideal.n(); ++i) {
        for (const auto& g : ideal.generators()) {
            if (g[i] > 0) {
                s.push_back(i);
                break;
            }
        }
    }
    return s;
}

MonomialIdeal power_family_ideal(unsigned k, unsigned t) { return power(MonomialIdeal::maximal(k), t); }

MonomialIdeal ci_family_ideal(unsigned k, unsigned t)
{
    return MonomialIdeal::complete_intersection(Exponents(k, static_cast<std::int64_t>(t)));
}

}  // namespace

ConeReport cone_bound_report(const MonomialIdeal& ideal, std::int64_t d)
{
    auto degree = ideal.homogeneous_degree();
    if (!degree || *degree != d || d <= 0) {
        throw std::invalid_argument("cone bound needs generators of common degree " + std::to_string(d));
    }
    ConeReport report;
    report.d = d;
    report.c = lct(ideal);
    report.e = non_lt_locus_codim(ideal, report.c);
    if (!report.e) return report;

    Rat e_over_d(BigInt(static_cast<unsigned long>(*report.e)), BigInt(static_cast<long>(d)));
    report.bound_holds = report.c >= e_over_d;
    report.equality = report.c == e_over_d;
    if (!report.equality) return report;

    auto s = support_union(ideal);
    report.cone_variables = s;
    if (s.size() != *report.e) {
        report.restricted_ok = false;
        return report;
    }
    auto restricted = restrict_to(ideal, s);
    report.restricted_ok = lct(restricted) == e_over_d && non_lt_locus_codim(restricted, e_over_d) == s.size();
    return report;
}

bool audit_equality(const MonomialIdeal& ideal, const ConeReport& report)
{
    if (!report.equality) return true;
    if (!report.e || !report.cone_variables || !report.restricted_ok || !*report.restricted_ok) return false;
    const auto& s = *report.cone_variables;
    if (s.size() != *report.e) return false;
    for (const auto& g : ideal.generators()) {
        for (std::size_t i = 0; i < ideal.n(); ++i) {
            bool inside = false;
            for (auto j : s) inside = inside || j == i;
            if (!inside && g[i] != 0) return false;
        }
    }
    Rat e_over_d(BigInt(static_cast<unsigned long>(*report.e)), BigInt(static_cast<long>(report.d)));
    auto restricted = restrict_to(ideal, s);
    auto j = multiplier_ideal(restricted, e_over_d);
    // Locus is the origin: J is proper and contains a power of every variable.
    return lct(restricted) == e_over_d && !j.trivial && j.ideal.is_zero_dimensional();
}

std::string to_string(ProjectionFamily f) { return f == ProjectionFamily::power ? "power" : "ci"; }

ProjectionFamily projection_family_from_string(const std::string& s)
{
    if (s == "power") return ProjectionFamily::power;
    if (s == "ci") return ProjectionFamily::ci;
    throw std::invalid_argument("unknown family '" + s + "' (expected power or ci)");
}

std::vector<ProjectionExampleRow> projection_example(unsigned k, unsigned t_max, ProjectionFamily family)
{
    if (k == 0 || t_max == 0) throw std::invalid_argument("k and t_max must be >= 1");
    const Rat kk = pow(Rat(static_cast<long>(k)), k);
    std::vector<ProjectionExampleRow> rows;
    for (unsigned t = 1; t <= t_max; ++t) {
        ProjectionExampleRow row;
        row.k = k;
        row.t = t;
        row.c = Rat(BigInt(static_cast<unsigned long>(k)), BigInt(static_cast<unsigned long>(t)));
        if (family == ProjectionFamily::power) {
            row.length = binomial(k + t - 1, k);
            row.paper_bound = Rat(factorial(k)) * pow(row.c, k) / kk;
        } else {
            mpz_ui_pow_ui(row.length.get_mpz_t(), t, k);
            row.paper_bound = pow(row.c, k) / kk;
        }
        row.pushforward_lct = Rat(BigInt(1), row.length);
        row.ratio = row.paper_bound / row.pushforward_lct;
        row.inequality_holds = row.pushforward_lct <= row.paper_bound;
        row.strict = row.pushforward_lct < row.paper_bound;
        if (t <= 6) {
            auto ideal = family == ProjectionFamily::power ? power_family_ideal(k, t) : ci_family_ideal(k, t);
            row.cross_checked = lct(ideal) == row.c && colength(ideal) == row.length;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

SharpnessTable sharpness_limit_table(unsigned k, unsigned t_max)
{
    if (k == 0 || t_max == 0) throw std::invalid_argument("k and t_max must be >= 1");
    SharpnessTable table{k, t_max, {}, true, false};
    for (unsigned t = 1; t <= t_max; ++t) {
        BigInt tk;
        mpz_ui_pow_ui(tk.get_mpz_t(), t, k);
        Rat r(binomial(k + t - 1, k) * factorial(k), tk);
        if (!table.ratios.empty() && r > table.ratios.back()) table.monotone = false;
        table.ratios.push_back(std::move(r));
    }
    Rat upper = pow(Rat(1) + Rat(BigInt(static_cast<unsigned long>(k)), BigInt(static_cast<unsigned long>(t_max))), k);
    const Rat& last = table.ratios.back();
    table.final_in_range = last >= Rat(1) && last <= upper;
    return table;
}

}  // namespace lctkit
