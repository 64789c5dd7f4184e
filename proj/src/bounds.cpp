#include "lctkit/bounds.hpp"

#include "lctkit/cones.hpp"
#include "lctkit/jets.hpp"
#include "lctkit/kernels.hpp"
#include "lctkit/newton.hpp"
#include "lctkit/thresholds.hpp"

#include <algorithm>
#include <stdexcept>

namespace lctkit {

namespace {

std::int64_t draw(std::mt19937_64& rng, IntRange r)
{
    return std::uniform_int_distribution<std::int64_t>(r.lo, r.hi)(rng);
}

Rat rat_int(std::size_t v) { return Rat(BigInt(static_cast<unsigned long>(v))); }

// n^n mu^{n-1} (mu + b)
Rat theorem2_rhs(std::size_t n, const Rat& b, const Rat& mu)
{
    auto un = static_cast<unsigned>(n);
    return pow(rat_int(n), un) * pow(mu, un - 1) * (mu + b);
}

std::optional<RatVector> non_lt_facet(const NewtonPolyhedron& poly, const RatVector& b, const Rat& mu)
{
    for (const auto& f : poly.facets) {
        Rat s;
        for (std::size_t i = 0; i < poly.n; ++i) s += (mu - b[i]) * f.normal[i];
        if (s <= Rat(1)) return f.normal;
    }
    return std::nullopt;
}

RatVector boundary_coefficients(std::size_t n, const Rat& b)
{
    RatVector bv(n, Rat(0));
    bv[n - 1] = -b;
    return bv;
}

void finish_relation(BoundReport& r, bool strict)
{
    r.strictness_expected = strict;
    r.relation = strict ? Relation::greater : Relation::greater_equal;
    r.holds = strict ? r.lhs > r.rhs : r.lhs >= r.rhs;
}

// Shared gate and bookkeeping for the two theorem checks.
BoundReport theorem2_report(const std::string& check, const MonomialIdeal& ideal, const Rat& b, const Rat& mu)
{
    if (b.sign() < 0) throw std::invalid_argument("b must be >= 0");
    if (mu.sign() <= 0) throw std::invalid_argument("mu must be > 0");
    BoundReport r;
    r.check = check;
    r.instance = to_json(ideal);
    r.instance["check"] = check;
    r.instance["b"] = to_json(b);
    r.instance["mu"] = to_json(mu);
    auto bv = boundary_coefficients(ideal.n(), b);
    if (is_log_terminal_pair(PairSpec(ideal, bv, mu))) {
        r.skipped = true;
        return r;
    }
    r.witness = non_lt_facet(build_polyhedron(ideal), bv, mu);
    return r;
}

// Oracle agreement and violation counts (expected 0).
BoundReport equality_report(const std::string& check, Json instance, const Rat& lhs, const Rat& rhs)
{
    BoundReport r;
    r.check = check;
    r.instance = std::move(instance);
    r.lhs = lhs;
    r.rhs = rhs;
    r.relation = Relation::equal;
    r.holds = lhs == rhs;
    return r;
}

BoundReport oracle_lct_report(const MonomialIdeal& ideal, unsigned m_max)
{
    Json inst = to_json(ideal);
    inst["check"] = "oracle-lct";
    inst["m_max"] = m_max;
    return equality_report("oracle-lct", std::move(inst), lct(ideal), lct_via_jets(ideal, m_max));
}

BoundReport multiplier_report(const MonomialIdeal& ideal, std::vector<Rat> cs)
{
    std::sort(cs.begin(), cs.end());
    Json inst = to_json(ideal);
    inst["check"] = "multiplier";
    inst["c"] = to_json(cs);

    auto poly = build_polyhedron(ideal);
    Rat threshold = lct(poly);
    long violations = 0;
    std::optional<MultiplierIdealResult> previous;
    for (const auto& c : cs) {
        auto j = multiplier_ideal(poly, c);
        if (j.trivial != (c < threshold)) ++violations;
        if (!(j.ideal == multiplier_ideal_reference(poly, c).ideal)) ++violations;
        if (previous) {
            for (const auto& g : j.ideal.generators()) {
                if (!contains_monomial(previous->ideal, g)) {
                    ++violations;
                    break;
                }
            }
        }
        previous = std::move(j);
    }
    return equality_report("multiplier", std::move(inst), Rat(violations), Rat(0));
}

std::vector<BoundReport> cone_reports(const MonomialIdeal& ideal, std::int64_t d)
{
    Json inst = to_json(ideal);
    inst["check"] = "cone-bound";
    inst["d"] = d;
    auto report = cone_bound_report(ideal, d);

    BoundReport bound;
    bound.check = "cone-bound";
    bound.instance = inst;
    if (!report.e) {
        bound.skipped = true;
    } else {
        bound.lhs = report.c;
        bound.rhs = Rat(BigInt(static_cast<unsigned long>(*report.e)), BigInt(static_cast<long>(d)));
        finish_relation(bound, false);
    }
    inst["check"] = "cone-audit";
    long bad = audit_equality(ideal, report) ? 0 : 1;
    return {bound, equality_report("cone-audit", std::move(inst), Rat(bad), Rat(0))};
}

std::vector<Rat> sample_exponents(std::mt19937_64& rng, const Rat& threshold)
{
    static const std::vector<Rat> scales{Rat(0),        Rat(1) / Rat(4), Rat(1) / Rat(2), Rat(3) / Rat(4), Rat(1),
                                         Rat(5) / Rat(4), Rat(3) / Rat(2), Rat(2),         Rat(3)};
    std::vector<std::size_t> idx(scales.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    std::vector<Rat> cs;
    for (std::size_t i = 0; i < 5; ++i) cs.push_back(threshold * scales[idx[i]]);
    return cs;
}

}  // namespace

std::string to_string(Relation r)
{
    switch (r) {
    case Relation::greater_equal: return ">=";
    case Relation::greater: return ">";
    case Relation::equal: return "=";
    }
    return ">=";
}

BoundReport check_theorem2_length(const MonomialIdeal& ideal, const Rat& b, const Rat& mu)
{
    auto r = theorem2_report("theorem2-length", ideal, b, mu);
    if (r.skipped) return r;
    r.lhs = Rat(colength(ideal));
    r.rhs = theorem2_rhs(ideal.n(), b, mu) / Rat(factorial(static_cast<unsigned>(ideal.n())));
    finish_relation(r, ideal.n() >= 2);
    return r;
}

BoundReport check_theorem2_multiplicity(const MonomialIdeal& ideal, const Rat& b, const Rat& mu)
{
    auto r = theorem2_report("theorem2-multiplicity", ideal, b, mu);
    if (r.skipped) return r;
    r.lhs = Rat(samuel_multiplicity(ideal));
    r.rhs = theorem2_rhs(ideal.n(), b, mu);
    finish_relation(r, false);
    return r;
}

BoundReport check_lemma_monomial(const MonomialIdeal& ideal, const RatVector& b, const Rat& mu)
{
    PairSpec pair(ideal, b, mu);
    BoundReport r;
    r.check = "lemma-monomial";
    r.instance = to_json(pair);
    r.instance["check"] = "lemma-monomial";
    if (is_log_terminal_pair(pair)) {
        r.skipped = true;
        return r;
    }
    r.witness = non_lt_facet(build_polyhedron(ideal), b, mu);
    const auto n = ideal.n();
    Rat prod(1);
    for (const auto& bi : b) prod *= mu - bi;
    r.lhs = Rat(colength(ideal));
    r.rhs = pow(rat_int(n), static_cast<unsigned>(n)) / Rat(factorial(static_cast<unsigned>(n))) * prod;
    finish_relation(r, n >= 2);
    return r;
}

std::mt19937_64 InstanceSampler::trial_engine(std::uint64_t trial) const
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    return std::mt19937_64(seq);
}

MonomialIdeal InstanceSampler::sample_ideal(std::mt19937_64& rng) const
{
    const auto n = static_cast<std::size_t>(draw(rng, n_range));
    Exponents pure(n);
    for (auto& a : pure) a = draw(rng, exponent_range);
    std::vector<Exponents> gens;
    for (std::size_t i = 0; i < n; ++i) {
        Exponents g(n, 0);
        g[i] = pure[i];
        gens.push_back(std::move(g));
    }
    const auto extra = draw(rng, generator_count_range);
    for (std::int64_t k = 0; k < extra; ++k) {
        Exponents g(n);
        for (std::size_t i = 0; i < n; ++i) g[i] = draw(rng, {0, pure[i]});
        if (std::any_of(g.begin(), g.end(), [](auto e) { return e > 0; })) gens.push_back(std::move(g));
    }
    return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal InstanceSampler::sample_complete_intersection(std::mt19937_64& rng) const
{
    const auto n = static_cast<std::size_t>(draw(rng, n_range));
    Exponents a(n);
    for (auto& e : a) e = draw(rng, exponent_range);
    return MonomialIdeal::complete_intersection(a);
}

MonomialIdeal InstanceSampler::sample_homogeneous(std::mt19937_64& rng) const
{
    const auto n = static_cast<std::size_t>(draw(rng, n_range));
    const auto d = draw(rng, degree_range);
    const auto count = draw(rng, {std::max<std::int64_t>(1, generator_count_range.lo),
                                  std::max<std::int64_t>(1, generator_count_range.hi)});
    std::vector<Exponents> gens;
    for (std::int64_t k = 0; k < count; ++k) {
        // Random composition of d into n parts via sorted cut points.
        std::vector<std::int64_t> cuts{0, d};
        for (std::size_t i = 0; i + 1 < n; ++i) cuts.push_back(draw(rng, {0, d}));
        std::sort(cuts.begin(), cuts.end());
        Exponents g(n);
        for (std::size_t i = 0; i < n; ++i) g[i] = cuts[i + 1] - cuts[i];
        gens.push_back(std::move(g));
    }
    return MonomialIdeal(n, std::move(gens));
}

Rat InstanceSampler::sample_b(std::mt19937_64& rng) const
{
    return b_choices[std::uniform_int_distribution<std::size_t>(0, b_choices.size() - 1)(rng)];
}

std::string to_string(Suite s)
{
    switch (s) {
    case Suite::lemma_monomial: return "lemma-monomial";
    case Suite::theorem2: return "theorem2";
    case Suite::oracle_lct: return "oracle-lct";
    case Suite::multiplier: return "multiplier";
    case Suite::cone: return "cone";
    }
    return "lemma-monomial";
}

Suite suite_from_string(const std::string& name)
{
    for (auto s : {Suite::lemma_monomial, Suite::theorem2, Suite::oracle_lct, Suite::multiplier, Suite::cone}) {
        if (to_string(s) == name) return s;
    }
    throw std::invalid_argument("unknown suite '" + name + "'");
}

TrialOutcome run_trial(const InstanceSampler& sampler, Suite suite, std::uint64_t trial)
{
    auto rng = sampler.trial_engine(trial);
    TrialOutcome out{trial, {}};
    switch (suite) {
    case Suite::lemma_monomial: {
        auto ideal = sampler.sample_ideal(rng);
        auto poly = build_polyhedron(ideal);
        RatVector b(ideal.n());
        for (auto& bi : b) bi = sampler.sample_b(rng);
        // Put mu exactly at the pair threshold; drop the largest b_i until
        // mu >= max b (the threshold only decreases as b does).
        Rat mu = pair_threshold(poly, b);
        while (mu < *std::max_element(b.begin(), b.end())) {
            *std::max_element(b.begin(), b.end()) = Rat(0);
            mu = pair_threshold(poly, b);
        }
        out.reports.push_back(check_lemma_monomial(ideal, b, mu));
        break;
    }
    case Suite::theorem2: {
        auto ideal = sampler.sample_ideal(rng);
        auto poly = build_polyhedron(ideal);
        Rat b = sampler.sample_b(rng);
        Rat mu = pair_threshold(poly, boundary_coefficients(ideal.n(), b));
        if (mu.sign() <= 0) {
            b = Rat(0);
            mu = pair_threshold(poly, boundary_coefficients(ideal.n(), b));
        }
        out.reports.push_back(check_theorem2_length(ideal, b, mu));
        out.reports.push_back(check_theorem2_multiplicity(ideal, b, mu));
        break;
    }
    case Suite::oracle_lct: {
        auto ideal = sampler.sample_ideal(rng);
        out.reports.push_back(oracle_lct_report(ideal, default_m_max(ideal)));
        break;
    }
    case Suite::multiplier: {
        auto ideal = sampler.sample_ideal(rng);
        out.reports.push_back(multiplier_report(ideal, sample_exponents(rng, lct(ideal))));
        break;
    }
    case Suite::cone: {
        auto ideal = sampler.sample_homogeneous(rng);
        out.reports = cone_reports(ideal, *ideal.homogeneous_degree());
        break;
    }
    }
    for (auto& r : out.reports) {
        r.instance["suite"] = to_string(suite);
        r.instance["seed"] = sampler.seed;
        r.instance["trial"] = trial;
    }
    return out;
}

SuiteSummary run_suite(const InstanceSampler& sampler, Suite suite, std::uint64_t trials)
{
    if (trials == 0) throw std::invalid_argument("trials must be >= 1");
    std::vector<TrialOutcome> outcomes(trials);
    std::vector<std::string> errors(trials);
    const auto count = static_cast<std::int64_t>(trials);
#pragma omp parallel for schedule(dynamic, 1) num_threads(kernels::team_size())
    for (std::int64_t t = 0; t < count; ++t) {
        auto idx = static_cast<std::size_t>(t);
        try {
            outcomes[idx] = run_trial(sampler, suite, static_cast<std::uint64_t>(t));
        } catch (const std::exception& e) {
            errors[idx] = e.what();
        }
    }

    SuiteSummary summary{suite, sampler.seed, trials, 0, 0, 0, {}};
    for (std::size_t t = 0; t < trials; ++t) {
        if (!errors[t].empty()) {
            BoundReport r;
            r.check = "error: " + errors[t];
            r.instance = {{"suite", to_string(suite)}, {"seed", sampler.seed}, {"trial", t}};
            summary.failures.push_back(std::move(r));
            continue;
        }
        bool gated = false;
        for (const auto& r : outcomes[t].reports) {
            if (r.skipped) {
                ++summary.skipped;
                continue;
            }
            gated = true;
            ++summary.checked;
            if (!r.holds) summary.failures.push_back(r);
        }
        if (gated) ++summary.gate_passed;
    }
    return summary;
}

BoundReport replay_instance(const Json& instance)
{
    if (!instance.contains("check")) throw ParseError("instance JSON needs a \"check\" key");
    const auto check = instance["check"].get<std::string>();
    auto ideal = ideal_from_json(instance, true);
    BoundReport r;
    if (check == "theorem2-length") {
        r = check_theorem2_length(ideal, rat_from_json(instance.at("b")), rat_from_json(instance.at("mu")));
    } else if (check == "theorem2-multiplicity") {
        r = check_theorem2_multiplicity(ideal, rat_from_json(instance.at("b")), rat_from_json(instance.at("mu")));
    } else if (check == "lemma-monomial") {
        r = check_lemma_monomial(ideal, rat_vector_from_json(instance.at("b")), rat_from_json(instance.at("mu")));
    } else if (check == "oracle-lct") {
        r = oracle_lct_report(ideal, instance.at("m_max").get<unsigned>());
    } else if (check == "multiplier") {
        r = multiplier_report(ideal, rat_vector_from_json(instance.at("c")));
    } else if (check == "cone-bound" || check == "cone-audit") {
        auto reports = cone_reports(ideal, instance.at("d").get<std::int64_t>());
        r = check == "cone-bound" ? reports[0] : reports[1];
    } else {
        throw ParseError("unknown check '" + check + "'");
    }
    for (const char* key : {"suite", "seed", "trial"}) {
        if (instance.contains(key)) r.instance[key] = instance[key];
    }
    return r;
}

Json to_json(const BoundReport& report)
{
    Json j;
    j["check"] = report.check;
    j["instance"] = report.instance;
    j["skipped"] = report.skipped;
    if (!report.skipped) {
        j["lhs"] = to_json(report.lhs);
        j["rhs"] = to_json(report.rhs);
        j["relation"] = to_string(report.relation);
        j["holds"] = report.holds;
        j["strictness_expected"] = report.strictness_expected;
    }
    if (report.witness) j["witness"] = to_json(*report.witness);
    return j;
}

Json to_json(const SuiteSummary& summary)
{
    Json j;
    j["suite"] = to_string(summary.suite);
    j["seed"] = summary.seed;
    j["trials"] = summary.trials;
    j["checked"] = summary.checked;
    j["skipped"] = summary.skipped;
    j["gate_passed"] = summary.gate_passed;
    j["failures"] = Json::array();
    for (const auto& f : summary.failures) j["failures"].push_back(to_json(f));
    j["ok"] = summary.ok();
    return j;
}

}  // namespace lctkit
