#include "lctkit/cli.hpp"

#include "lctkit/bounds.hpp"
#include "lctkit/cones.hpp"
#include "lctkit/io.hpp"
#include "lctkit/jets.hpp"
#include "lctkit/kernels.hpp"
#include "lctkit/newton.hpp"
#include "lctkit/rigidity.hpp"
#include "lctkit/thresholds.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lctkit::cli {

namespace {

struct Options {
    bool json = false;
    bool strict = false;
    std::string input;
    std::string c = "";
    unsigned m_max = 0;
    std::int64_t degree = 0;
    std::string family = "power";
    unsigned k = 2;
    unsigned t_max = 20;
    std::string suite;
    std::uint64_t trials = 500;
    std::uint64_t seed = 42;
    std::int64_t n_max = 4;
    std::int64_t deg_max = 6;
    std::string replay;
    long n_min_rigid = 4;
    long n_max_rigid = 20;
};

std::string exponents_str(const Exponents& e)
{
    std::string s = "(";
    for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
    return s + ")";
}

std::string rats_str(const RatVector& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
    return s + ")";
}

std::string generators_str(const MonomialIdeal& ideal)
{
    std::string s;
    for (const auto& g : ideal.generators()) s += (s.empty() ? "" : " ") + exponents_str(g);
    return s;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

class Runner {
public:
    Runner(const Options& opt, std::ostream& out, std::ostream& err) : opt_(opt), out_(out), err_(err) {}

    MonomialIdeal load_ideal() const
    {
        bool minimalized = false;
        auto ideal = ideal_from_json(read_json_file(opt_.input), opt_.strict, &minimalized);
        if (minimalized) err_ << "warning: generators were not minimal; using the minimal generating set\n";
        return ideal;
    }

    int lct_cmd() const
    {
        auto ideal = load_ideal();
        Rat c = lct(ideal);
        if (opt_.json) {
            Json j = to_json(ideal);
            j["lct"] = to_json(c);
            emit(out_, j);
        } else {
            out_ << c << "\n";
        }
        return kOk;
    }

    int colength_cmd() const
    {
        auto ideal = load_ideal();
        auto l = colength(ideal);
        if (opt_.json) {
            Json j = to_json(ideal);
            j["colength"] = to_string(l);
            emit(out_, j);
        } else {
            out_ << l << "\n";
        }
        return kOk;
    }

    int samuel_cmd() const
    {
        auto ideal = load_ideal();
        auto e = samuel_multiplicity(ideal);
        if (opt_.json) {
            Json j = to_json(ideal);
            j["samuel_multiplicity"] = to_string(e);
            emit(out_, j);
        } else {
            out_ << e << "\n";
        }
        return kOk;
    }

    int newton_cmd() const
    {
        auto ideal = load_ideal();
        auto poly = build_polyhedron(ideal);
        std::optional<BigInt> normalized;
        if (ideal.is_zero_dimensional()) normalized = normalized_covolume(poly);
        if (opt_.json) {
            Json j = to_json(ideal);
            j["facets"] = Json::array();
            for (const auto& f : poly.facets) {
                j["facets"].push_back({{"normal", to_json(f.normal)}, {"tight_vertices", f.tight}});
            }
            j["coordinate_facets"] = poly.coordinate_facets;
            j["vertices"] = poly.vertices;
            if (normalized) {
                j["covolume"] = to_json(covolume(poly));
                j["samuel_multiplicity"] = to_string(*normalized);
            } else {
                j["covolume"] = nullptr;
                j["samuel_multiplicity"] = nullptr;
            }
            emit(out_, j);
            return kOk;
        }
        for (const auto& f : poly.facets) out_ << "facet    " << rats_str(f.normal) << " . u >= 1\n";
        for (auto axis : poly.coordinate_facets) out_ << "facet    u_" << axis + 1 << " >= 0\n";
        for (const auto& v : poly.vertices) out_ << "vertex   " << exponents_str(v) << "\n";
        if (normalized) {
            out_ << "covolume " << covolume(poly) << "\n";
            out_ << "samuel   " << *normalized << "\n";
        } else {
            out_ << "covolume infinite (ideal is not zero-dimensional)\n";
        }
        return kOk;
    }

    int pair_lt_cmd() const
    {
        bool minimalized = false;
        auto pair = pair_from_json(read_json_file(opt_.input), opt_.strict, &minimalized);
        if (minimalized) err_ << "warning: generators were not minimal; using the minimal generating set\n";
        bool lt = is_log_terminal_pair(pair);
        if (opt_.json) {
            Json j = to_json(pair);
            j["log_terminal"] = lt;
            emit(out_, j);
        } else {
            out_ << (lt ? "log terminal" : "not log terminal") << "\n";
        }
        return kOk;
    }

    int mult_ideal_cmd() const
    {
        auto ideal = load_ideal();
        auto c = Rat::parse(opt_.c);
        auto result = multiplier_ideal(ideal, c);
        if (opt_.json) {
            // The result is itself an ideal document.
            Json j = to_json(result.ideal);
            j["c"] = to_json(c);
            j["trivial"] = result.trivial;
            j["source"] = to_json(ideal);
            emit(out_, j);
        } else {
            out_ << "c        " << c << "\n";
            out_ << "trivial  " << (result.trivial ? "yes" : "no") << "\n";
            out_ << "ideal    " << generators_str(result.ideal) << "\n";
        }
        return kOk;
    }

    int jets_cmd() const
    {
        auto ideal = load_ideal();
        unsigned m_max = opt_.m_max ? opt_.m_max : default_m_max(ideal);
        auto profile = contact_profile(ideal, m_max);
        Rat inferred = lct_via_jets(profile);
        bool at_edge = minimum_at_last_order(profile) && m_max > 1;
        if (opt_.json) {
            Json j = to_json(ideal);
            j["m_max"] = m_max;
            j["profile"] = Json::array();
            for (const auto& e : profile.entries) {
                j["profile"].push_back({{"m", e.m},
                                        {"weight", e.weight},
                                        {"witness", e.witness},
                                        {"ratio", to_json(Rat(BigInt(static_cast<long>(e.weight)),
                                                              BigInt(static_cast<unsigned long>(e.m))))}});
            }
            j["lct"] = to_json(inferred);
            j["minimum_at_m_max"] = at_edge;
            emit(out_, j);
            return kOk;
        }
        out_ << std::left << std::setw(6) << "m" << std::setw(8) << "weight" << std::setw(10) << "ratio"
             << "witness\n";
        for (const auto& e : profile.entries) {
            Rat r(BigInt(static_cast<long>(e.weight)), BigInt(static_cast<unsigned long>(e.m)));
            out_ << std::setw(6) << e.m << std::setw(8) << e.weight << std::setw(10) << r.str()
                 << exponents_str(e.witness) << "\n";
        }
        out_ << "lct " << inferred << "\n";
        if (at_edge) out_ << "note: minimum attained only at m_max; a larger m_max may lower it\n";
        return kOk;
    }

    int cone_bound_cmd() const
    {
        auto ideal = load_ideal();
        std::int64_t d = opt_.degree;
        if (d == 0) {
            auto h = ideal.homogeneous_degree();
            if (!h) throw std::invalid_argument("ideal is not homogeneous");
            d = *h;
        }
        auto report = cone_bound_report(ideal, d);
        bool audit = audit_equality(ideal, report);
        if (opt_.json) {
            Json j = to_json(ideal);
            j["d"] = d;
            j["lct"] = to_json(report.c);
            j["e"] = report.e ? Json(*report.e) : Json(nullptr);
            j["bound_holds"] = report.bound_holds;
            j["equality"] = report.equality;
            j["cone_variables"] = report.cone_variables ? Json(*report.cone_variables) : Json(nullptr);
            j["restricted_ok"] = report.restricted_ok ? Json(*report.restricted_ok) : Json(nullptr);
            j["audit_ok"] = audit;
            j["convention"] = "non-LT locus = zero locus of J(I^c) with the strict interior test";
            emit(out_, j);
        } else {
            out_ << "d        " << d << "\n";
            out_ << "lct      " << report.c << "\n";
            out_ << "e        " << (report.e ? std::to_string(*report.e) : "inf (trivial multiplier ideal)") << "\n";
            if (report.e) {
                out_ << "bound    lct >= e/d = " << Rat(BigInt(static_cast<unsigned long>(*report.e)), BigInt(static_cast<long>(d)))
                     << " : " << (report.bound_holds ? "holds" : "FAILS") << "\n";
            }
            out_ << "equality " << (report.equality ? "yes" : "no") << "\n";
            if (report.cone_variables) {
                std::string s;
                for (auto v : *report.cone_variables) s += (s.empty() ? "x" : " x") + std::to_string(v + 1);
                out_ << "cone     {" << s << "}, restricted conditions "
                     << (report.restricted_ok.value_or(false) ? "hold" : "FAIL") << "\n";
            }
            out_ << "note     non-LT locus taken as the zero locus of J(I^c) (strict interior convention)\n";
        }
        return report.bound_holds && audit ? kOk : kCheckFailed;
    }

    int example_cmd() const
    {
        auto family = projection_family_from_string(opt_.family);
        auto rows = projection_example(opt_.k, opt_.t_max, family);
        bool ok = true;
        for (const auto& r : rows) {
            ok = ok && r.inequality_holds && r.cross_checked.value_or(true);
            if (family == ProjectionFamily::power && opt_.k >= 2) ok = ok && r.strict;
            if (family == ProjectionFamily::ci) ok = ok && r.ratio == Rat(1);
        }
        std::optional<SharpnessTable> sharp;
        if (family == ProjectionFamily::power) {
            sharp = sharpness_limit_table(opt_.k, opt_.t_max);
            ok = ok && sharp->monotone && sharp->final_in_range;
        }
        if (opt_.json) {
            Json j;
            j["family"] = to_string(family);
            j["k"] = opt_.k;
            j["t_max"] = opt_.t_max;
            j["rows"] = Json::array();
            for (const auto& r : rows) {
                Json row{{"t", r.t},
                         {"c", to_json(r.c)},
                         {"length", to_string(r.length)},
                         {"paper_bound", to_json(r.paper_bound)},
                         {"pushforward_lct", to_json(r.pushforward_lct)},
                         {"ratio", to_json(r.ratio)},
                         {"holds", r.inequality_holds},
                         {"strict", r.strict}};
                row["cross_checked"] = r.cross_checked ? Json(*r.cross_checked) : Json(nullptr);
                j["rows"].push_back(std::move(row));
            }
            if (sharp) {
                j["sharpness"] = {{"monotone", sharp->monotone}, {"final_in_range", sharp->final_in_range}};
            }
            j["ok"] = ok;
            emit(out_, j);
        } else {
            out_ << std::left << std::setw(5) << "t" << std::setw(8) << "c" << std::setw(12) << "length"
                 << std::setw(16) << "bound" << std::setw(16) << "pushforward" << std::setw(12) << "ratio"
                 << "check\n";
            for (const auto& r : rows) {
                std::string check = r.inequality_holds ? (r.strict ? "<" : "=") : "FAIL";
                if (r.cross_checked) check += *r.cross_checked ? " x" : " MISMATCH";
                out_ << std::setw(5) << r.t << std::setw(8) << r.c.str() << std::setw(12) << r.length.get_str()
                     << std::setw(16) << r.paper_bound.str() << std::setw(16) << r.pushforward_lct.str()
                     << std::setw(12) << r.ratio.str() << check << "\n";
            }
            if (sharp) {
                out_ << "sharpness ratio at t_max " << sharp->ratios.back() << " ("
                     << (sharp->monotone ? "monotone" : "NOT monotone") << ", "
                     << (sharp->final_in_range ? "within [1, (1+k/t_max)^k]" : "OUT OF RANGE") << ")\n";
            }
            out_ << (ok ? "ok" : "FAIL") << "\n";
        }
        return ok ? kOk : kCheckFailed;
    }

    int verify_cmd() const
    {
        if (!opt_.replay.empty()) {
            auto report = replay_instance(read_json_file(opt_.replay));
            if (opt_.json) {
                emit(out_, to_json(report));
            } else if (report.skipped) {
                out_ << report.check << ": skipped (pair is log terminal)\n";
            } else {
                out_ << report.check << ": " << report.lhs << " " << to_string(report.relation) << " " << report.rhs
                     << " : " << (report.holds ? "holds" : "FAILS") << "\n";
            }
            return report.skipped || report.holds ? kOk : kCheckFailed;
        }
        if (opt_.suite.empty()) throw CLI::RequiredError("--suite");
        auto suite = suite_from_string(opt_.suite);
        InstanceSampler sampler;
        sampler.seed = opt_.seed;
        sampler.n_range = {1, opt_.n_max};
        sampler.exponent_range = {1, opt_.deg_max};
        sampler.degree_range = {1, opt_.deg_max};
        auto summary = run_suite(sampler, suite, opt_.trials);
        for (const auto& f : summary.failures) err_ << to_json(f).dump() << "\n";
        if (opt_.json) {
            emit(out_, to_json(summary));
        } else {
            out_ << "suite        " << to_string(summary.suite) << "\n"
                 << "seed         " << summary.seed << "\n"
                 << "trials       " << summary.trials << "\n"
                 << "checked      " << summary.checked << "\n"
                 << "skipped      " << summary.skipped << "\n"
                 << "gate passed  " << summary.gate_passed << "\n"
                 << "failures     " << summary.failures.size() << "\n"
                 << "status       " << (summary.ok() ? "PASS" : "FAIL") << "\n";
        }
        return summary.ok() ? kOk : kCheckFailed;
    }

    int rigidity_cmd() const
    {
        auto table = rigidity_range(opt_.n_min_rigid, opt_.n_max_rigid);
        if (opt_.json) {
            Json j;
            j["rows"] = Json::array();
            for (const auto& r : table.rows) {
                j["rows"].push_back({{"N", r.N},
                                     {"regime", to_string(r.regime)},
                                     {"pushforward_degree_coeff", r.pushforward_degree_coeff},
                                     {"lct_lower_bound_coeff", to_json(r.lct_lower_bound_coeff)},
                                     {"margin", to_json(r.margin)},
                                     {"contradiction", r.contradiction}});
            }
            j["notes"] = rigidity_notes();
            j["matches_expected_range"] = table.matches_expected_range;
            emit(out_, j);
        } else {
            out_ << std::left << std::setw(5) << "N" << std::setw(7) << "case" << std::setw(10) << "deg/r^2"
                 << std::setw(10) << "coeff" << std::setw(10) << "margin"
                 << "certified\n";
            for (const auto& r : table.rows) {
                out_ << std::setw(5) << r.N << std::setw(7) << to_string(r.regime) << std::setw(10)
                     << r.pushforward_degree_coeff << std::setw(10) << r.lct_lower_bound_coeff.str() << std::setw(10)
                     << r.margin.str() << (r.contradiction ? "yes" : "no") << "\n";
            }
            for (const auto& note : rigidity_notes()) out_ << "# " << note << "\n";
        }
        return table.matches_expected_range ? kOk : kCheckFailed;
    }

private:
    const Options& opt_;
    std::ostream& out_;
    std::ostream& err_;
};

void apply_thread_cap()
{
    if (const char* env = std::getenv("LCT_KIT_THREADS")) {
        int threads = std::atoi(env);
        if (threads > 0) {
            kernels::set_thread_cap(threads);
#ifdef _OPENMP
            omp_set_num_threads(threads);
#endif
        }
    }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    Options opt;
    CLI::App app{"Exact log canonical thresholds and related invariants of monomial ideals", "lct-kit"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", opt.json, "Machine-readable JSON output");
    app.add_flag("--strict", opt.strict, "Reject non-minimal generator lists instead of minimalizing");

    std::map<CLI::App*, std::function<int(Runner&)>> verbs;
    auto ideal_verb = [&](const char* name, const char* help, int (Runner::*fn)() const) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("input", opt.input, "Ideal JSON file")->required();
        verbs[sub] = [fn](Runner& r) { return (r.*fn)(); };
        return sub;
    };
    ideal_verb("lct", "Log canonical threshold", &Runner::lct_cmd);
    ideal_verb("newton", "Newton polyhedron facets, vertices, covolume", &Runner::newton_cmd);
    ideal_verb("colength", "Number of standard monomials", &Runner::colength_cmd);
    ideal_verb("samuel", "Samuel multiplicity", &Runner::samuel_cmd);
    auto* pair = app.add_subcommand("pair-lt", "Log terminality of a boundary pair");
    pair->add_option("input", opt.input, "Pair JSON file")->required();
    verbs[pair] = [](Runner& r) { return r.pair_lt_cmd(); };
    ideal_verb("mult-ideal", "Multiplier ideal J(I^c)", &Runner::mult_ideal_cmd)
        ->add_option("--c", opt.c, "Exponent c as p/q")
        ->required();
    ideal_verb("jets", "Contact-weight profile and the lct it infers", &Runner::jets_cmd)
        ->add_option("--m-max", opt.m_max, "Highest contact order (default: lcm of the lct facet denominators)")
        ->check(CLI::PositiveNumber);
    ideal_verb("cone-bound", "lct >= e/d for a homogeneous ideal", &Runner::cone_bound_cmd)
        ->add_option("--degree", opt.degree, "Common generator degree (default: inferred)")
        ->check(CLI::PositiveNumber);

    auto* example = app.add_subcommand("example", "Projection example families");
    example->add_option("--family", opt.family, "power or ci")->check(CLI::IsMember({"power", "ci"}));
    example->add_option("--k", opt.k, "Number of variables k")->check(CLI::PositiveNumber);
    example->add_option("--t-max", opt.t_max, "Largest power t")->check(CLI::PositiveNumber);
    verbs[example] = [](Runner& r) { return r.example_cmd(); };

    auto* verify = app.add_subcommand("verify", "Seeded randomized verification suites");
    verify->add_option("--suite", opt.suite, "lemma-monomial | theorem2 | oracle-lct | multiplier | cone")
        ->check(CLI::IsMember({"lemma-monomial", "theorem2", "oracle-lct", "multiplier", "cone"}));
    verify->add_option("--trials", opt.trials, "Number of trials")->check(CLI::PositiveNumber);
    verify->add_option("--seed", opt.seed, "Master seed");
    verify->add_option("--n-max", opt.n_max, "Largest number of variables")->check(CLI::PositiveNumber);
    verify->add_option("--deg-max", opt.deg_max, "Largest exponent / degree")->check(CLI::PositiveNumber);
    verify->add_option("--replay", opt.replay, "Recompute one failure instance JSON");
    verbs[verify] = [](Runner& r) { return r.verify_cmd(); };

    auto* rigidity = app.add_subcommand("rigidity", "Superrigidity margin table");
    rigidity->add_option("--n-min", opt.n_min_rigid, "Smallest N");
    rigidity->add_option("--n-max", opt.n_max_rigid, "Largest N");
    verbs[rigidity] = [](Runner& r) { return r.rigidity_cmd(); };

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }

    apply_thread_cap();
    Runner runner(opt, out, err);
    try {
        for (auto& [sub, fn] : verbs) {
            if (sub->parsed()) return fn(runner);
        }
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const nlohmann::json::exception& e) {
        err << "error: malformed input: " << e.what() << "\n";
        return kUsageError;
    }
    return kUsageError;
}

}  // namespace lctkit::cli
