#pragma once

// Command-line front end. run() is the whole program; the executable in
// tools/ only forwards argv.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "base_locus.hpp"
#include "cremona.hpp"
#include "curves.hpp"
#include "divisor.hpp"
#include "interpolation.hpp"
#include "report.hpp"
#include "version.hpp"

namespace fatpoints::cli {

enum ExitCode : int { Success = 0, Failure = 1, SpecialityEvidence = 10 };

inline constexpr const char* prime_env_var = "FATPOINTS_PRIME";

struct RunConfig {
    std::string command;
    int n = 0;
    std::int64_t d = 0;
    std::string mults_text;
    std::vector<std::int64_t> mults;
    std::vector<Residue> primes;
    std::uint64_t seed = 1;
    std::optional<std::size_t> trials;
    std::vector<int> sections;
    std::string points_file;
    std::optional<std::int64_t> actual;
    bool json = false;
    bool dump = false;
    std::uint64_t budget = default_enumeration_budget;
    unsigned threads = 0;
    int max_n = 6;
};

// "2x7", "1,1,2x3", "" -> multiplicity list.
inline std::vector<std::int64_t> parse_mults(const std::string& text) {
    std::vector<std::int64_t> out;
    if (text.find_first_not_of(" \t") == std::string::npos) return out;
    std::stringstream ss(text);
    std::string item;
    auto to_int = [&](const std::string& s) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (s.empty() || used != s.size()) throw std::invalid_argument("malformed multiplicity list: '" + text + "'");
        return static_cast<std::int64_t>(v);
    };
    while (std::getline(ss, item, ',')) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        if (item.empty()) throw std::invalid_argument("malformed multiplicity list: '" + text + "'");
        auto x = item.find_first_of("xX");
        std::int64_t m = to_int(item.substr(0, x)), count = 1;
        if (x != std::string::npos) count = to_int(item.substr(x + 1));
        if (m < 0) throw std::invalid_argument("multiplicities must be non-negative");
        if (count < 0) throw std::invalid_argument("repetition count must be non-negative");
        out.insert(out.end(), static_cast<std::size_t>(count), m);
    }
    return out;
}

inline std::string class_string(const DivisorClass& D) {
    std::ostringstream os;
    os << "(n=" << D.n << ", d=" << D.d << "; ";
    if (D.mults.empty()) os << "-";
    for (std::size_t i = 0; i < D.mults.size(); ++i) os << (i ? "," : "") << D.mults[i];
    os << ")";
    return os.str();
}

class Runner {
public:
    Runner(RunConfig cfg, std::ostream& out) : cfg_(std::move(cfg)), out_(out) {}

    int run() {
        const auto& c = cfg_.command;
        if (c == "vdim") return vdim();
        if (c == "hdim") return hdim();
        if (c == "reduce") return reduce();
        if (c == "curves") return curves();
        if (c == "baselocus") return baselocus();
        if (c == "ah-check") return ah_check();
        throw std::invalid_argument("unknown command " + c);
    }

private:
    DivisorClass divisor() const { return DivisorClass(cfg_.n, cfg_.d, cfg_.mults); }
    Execution exec() const { return cfg_.threads ? Execution{cfg_.threads} : Execution::hardware(); }
    std::size_t trials(std::size_t fallback) const { return cfg_.trials.value_or(fallback); }

    json envelope(const json& result, std::size_t trial_count, const char* semantics) const {
        json config{{"command", cfg_.command}, {"n", cfg_.n}, {"d", cfg_.d}, {"mults", cfg_.mults},
                    {"primes", cfg_.primes},   {"seed", cfg_.seed}, {"trials", trial_count},
                    {"sections", cfg_.sections},
                    {"points_file", cfg_.points_file.empty() ? json() : json(cfg_.points_file)},
                    {"actual", cfg_.actual ? json(*cfg_.actual) : json()},
                    {"budget", cfg_.budget}};
        return json{{"schema", report_schema},
                    {"tool", "fatpoints"},
                    {"version", FATPOINTS_VERSION},
                    {"command", cfg_.command},
                    {"config", config},
                    {"prime", cfg_.primes.front()},
                    {"seed", cfg_.seed},
                    {"trials", trial_count},
                    {"semantics", semantics},
                    {"result", result}};
    }

    void emit(const json& doc) { out_ << doc.dump(2) << "\n"; }

    std::optional<PointSet> points_from_file(Residue prime) const {
        if (cfg_.points_file.empty()) return std::nullopt;
        std::ifstream in(cfg_.points_file);
        if (!in) throw std::invalid_argument("cannot read points file " + cfg_.points_file);
        return make_point_set(PrimeField(prime), cfg_.n, parse_points(in));
    }

    int vdim() {
        auto D = divisor();
        auto v = virtual_dimension(D);
        auto e = expected_dimension(D);
        if (cfg_.json) {
            json result{{"class", to_json(D)}, {"v", to_json(v)}, {"e", to_json(e)}};
            emit(envelope(result, 0, certification_semantics));
        } else {
            out_ << "class " << class_string(D) << "\n";
            out_ << "v = " << v << "\n";
            out_ << "e = " << e << "\n";
        }
        return Success;
    }

    int hdim() {
        auto D = divisor();
        require_effective(D);
        SystemReport rep;
        if (auto pts = points_from_file(cfg_.primes.front()))
            rep = h0(D, *pts, exec());
        else
            rep = check_speciality(D, make_trial_plan(trials(3), cfg_.seed, cfg_.primes), exec());

        std::optional<SecantDimension> secant;
        const bool double_points =
            !D.mults.empty() && std::all_of(D.mults.begin(), D.mults.end(), [](auto m) { return m == 2; });
        if (double_points) secant = secant_dimension(D.n, D.d, static_cast<std::int64_t>(D.mults.size()), rep.h0);

        if (cfg_.json) {
            json result = to_json(rep);
            if (secant)
                result["secant"] = {{"ambient", to_json(secant->ambient)},
                                    {"dimension", to_json(secant->actual)},
                                    {"expected", to_json(secant->expected)},
                                    {"defect", to_json(secant->defect)}};
            emit(envelope(result, rep.trials, certification_semantics));
        } else {
            out_ << "class           " << class_string(D) << "\n"
                 << "monomials       " << rep.monomial_count << "\n"
                 << "rank            " << rep.rank << "\n"
                 << "h0              " << rep.h0 << "\n"
                 << "v               " << rep.v << "\n"
                 << "e               " << rep.e << "\n"
                 << "dim             " << rep.dim << "\n"
                 << "speciality      " << rep.speciality << "\n"
                 << "status          " << to_string(rep.status) << "\n"
                 << "prime           " << rep.prime << "\n"
                 << "seed            " << (rep.seed ? std::to_string(*rep.seed) : std::string("-")) << "\n"
                 << "trials          " << rep.trials << "\n";
            if (secant)
                out_ << "secant dim      " << secant->actual << " (expected " << secant->expected << ", defect "
                     << secant->defect << ")\n";
            out_ << "\n" << certification_semantics << "\n";
        }
        switch (rep.status) {
            case Certification::CertifiedNonspecial: return Success;
            case Certification::SpecialEvidence: return SpecialityEvidence;
            default: return Failure;
        }
    }

    int reduce() {
        auto trace = cremona_reduce(divisor());
        if (cfg_.json) {
            emit(envelope(to_json(trace), 0, certification_semantics));
            return Success;
        }
        out_ << "input  " << class_string(trace.input) << "\n";
        for (std::size_t i = 0; i < trace.steps.size(); ++i) {
            const auto& s = trace.steps[i];
            out_ << "step " << i + 1 << " base {";
            for (std::size_t j = 0; j < s.base_indices.size(); ++j) out_ << (j ? "," : "") << s.base_indices[j] + 1;
            out_ << "} k=" << s.k << " -> " << class_string(s.after);
            if (!s.clamped.empty()) {
                out_ << " clamped {";
                for (std::size_t j = 0; j < s.clamped.size(); ++j) out_ << (j ? "," : "") << s.clamped[j] + 1;
                out_ << "}";
            }
            out_ << "\n";
        }
        out_ << "final  " << class_string(trace.final_class) << " (" << to_string(trace.outcome) << ", "
             << trace.steps.size() << " steps)\n";
        return Success;
    }

    int curves() {
        auto D = divisor();
        std::optional<Integer> actual_spec;
        if (cfg_.actual) actual_spec = speciality(Integer(*cfg_.actual), D);
        auto pred = predicted_speciality(D, actual_spec);
        if (cfg_.json) {
            emit(envelope(to_json(pred), 0, certification_semantics));
            return Success;
        }
        out_ << "class " << class_string(D) << "\n";
        for (const auto& c : pred.contributions) {
            out_ << "  " << to_string(c.curve.family) << " deg " << c.curve.delta << " through {";
            auto sup = c.curve.support();
            for (std::size_t j = 0; j < sup.size(); ++j) out_ << (j ? "," : "") << sup[j] + 1;
            out_ << "}  t=" << c.t << "  correction " << c.correction << "\n";
        }
        out_ << "predicted speciality " << pred.total << "\n";
        if (pred.residual) out_ << "actual speciality " << *pred.actual << ", residual " << *pred.residual << "\n";
        return Success;
    }

    int baselocus() {
        auto D = divisor();
        require_effective(D);
        std::vector<int> dims = cfg_.sections;
        if (dims.empty()) dims.push_back(D.n - 1);
        const PrimeField F(cfg_.primes.front());
        for (int k : dims) {
            if (k < 0 || k >= D.n)
                throw std::invalid_argument("section dimension " + std::to_string(k) + " must be in [0, n)");
            if (k > max_enumeration_dim || !projective_point_count(F.modulus(), k, cfg_.budget))
                throw std::invalid_argument("sections of dimension " + std::to_string(k) + " over F_" +
                                            std::to_string(F.modulus()) + " exceed the enumeration budget of " +
                                            std::to_string(cfg_.budget) + " points");
        }
        auto pts = points_from_file(F.modulus());
        if (!pts) pts = random_points(F, D.n, D.mults.size(), cfg_.seed);
        ProbeOptions opt;
        opt.seed = cfg_.seed;
        opt.dump = cfg_.dump;
        opt.budget = cfg_.budget;
        opt.exec = exec();
        auto system = kernel_polys(D, *pts, opt.exec);
        if (system.empty()) throw std::invalid_argument("the linear system is empty (h0 = 0) at these points");
        const std::size_t t = trials(5);
        std::vector<SectionProbeReport> reports;
        for (int k : dims) reports.push_back(probe_section_dim(system, D.n, F, k, t, pts->coords, opt));

        if (cfg_.json) {
            json probes = json::array();
            for (const auto& r : reports) probes.push_back(to_json(r));
            json result{{"class", to_json(D)}, {"h0", system.size()}, {"probes", probes}};
            emit(envelope(result, t, probe_semantics));
        } else {
            out_ << "class " << class_string(D) << "  h0 = " << system.size() << "  prime " << F.modulus()
                 << "  seed " << cfg_.seed << "\n";
            for (const auto& r : reports) {
                out_ << "k=" << r.section_dim << "  zeros per trial [";
                for (std::size_t i = 0; i < r.zero_counts.size(); ++i) out_ << (i ? " " : "") << r.zero_counts[i];
                out_ << "]  " << r.verdict_string() << "\n";
            }
            out_ << "\n" << probe_semantics << "\n";
        }
        return Success;
    }

    int ah_check() {
        struct Row {
            int n;
            std::int64_t d, r;
        };
        std::vector<Row> rows;
        for (int n = 2; n <= cfg_.max_n; ++n)
            for (int r = 2; r <= n; ++r) rows.push_back({n, 2, r});
        rows.push_back({4, 3, 7});
        rows.push_back({2, 4, 5});
        rows.push_back({3, 4, 9});
        rows.push_back({4, 4, 14});

        const auto plan = make_trial_plan(trials(3), cfg_.seed, cfg_.primes);
        bool all_confirmed = true;
        json table = json::array();
        if (!cfg_.json)
            out_ << std::left << std::setw(18) << "family" << std::setw(4) << "n" << std::setw(4) << "d"
                 << std::setw(4) << "r" << std::setw(6) << "v" << std::setw(4) << "e" << std::setw(5) << "dim"
                 << std::setw(6) << "spec" << std::setw(6) << "pred" << std::setw(34) << "curves"
                 << "confirmed\n";
        for (const auto& row : rows) {
            auto D = uniform_class(row.n, row.d, 2, static_cast<std::size_t>(row.r));
            auto rep = check_speciality(D, plan, exec());
            auto pred = predicted_speciality(D, rep.speciality);
            const bool confirmed = rep.dim > rep.e;
            all_confirmed &= confirmed;
            std::string curves = "-";
            if (!pred.contributions.empty()) {
                const auto& c = pred.contributions.front().curve;
                curves = std::to_string(pred.contributions.size()) + " x " + to_string(c.family) + " deg " +
                         std::to_string(c.delta);
            }
            const std::string family = to_string(classify_ah(row.n, row.d, row.r).family.value());
            if (cfg_.json) {
                table.push_back({{"family", family},
                                 {"n", row.n},
                                 {"d", row.d},
                                 {"r", row.r},
                                 {"v", to_json(rep.v)},
                                 {"e", to_json(rep.e)},
                                 {"dim", to_json(rep.dim)},
                                 {"speciality", to_json(rep.speciality)},
                                 {"predicted", to_json(pred.total)},
                                 {"curves", curves},
                                 {"h0", rep.h0},
                                 {"status", to_string(rep.status)},
                                 {"confirmed", confirmed}});
            } else {
                auto s = [](const Integer& x) { return x.str(); };
                out_ << std::left << std::setw(18) << family << std::setw(4) << row.n << std::setw(4) << row.d
                     << std::setw(4) << row.r << std::setw(6) << s(rep.v) << std::setw(4) << s(rep.e) << std::setw(5)
                     << s(rep.dim) << std::setw(6) << s(rep.speciality) << std::setw(6) << s(pred.total)
                     << std::setw(34) << curves << (confirmed ? "yes" : "NO") << "\n";
            }
        }
        if (cfg_.json)
            emit(envelope(json{{"rows", table}, {"all_confirmed", all_confirmed}}, plan.size(), certification_semantics));
        return all_confirmed ? Success : Failure;
    }

    RunConfig cfg_;
    std::ostream& out_;
};

inline Residue default_prime() {
    if (const char* env = std::getenv(prime_env_var)) {
        try {
            return static_cast<Residue>(std::stoul(env));
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string(prime_env_var) + " is not a number: " + env);
        }
    }
    return PrimeField::default_prime;
}

// args excludes the program name.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"dimensions of linear systems with assigned multiple points", "fatpoints"};
    app.set_version_flag("--version", FATPOINTS_VERSION);
    app.require_subcommand(1);

    RunConfig cfg;
    std::vector<std::uint64_t> primes;
    std::uint64_t trials = 0;

    auto common = [&](CLI::App* sub, bool needs_degree) {
        sub->add_option("--n", cfg.n, "ambient dimension of P^n")->required();
        auto d = sub->add_option("--d", cfg.d, "degree of the hypersurfaces");
        if (needs_degree) d->required();
        sub->add_option("--mults", cfg.mults_text, "multiplicities, e.g. 2x7 or 1,1,2x3");
        sub->add_flag("--json", cfg.json, "machine-readable JSON report on stdout");
    };
    auto randomized = [&](CLI::App* sub) {
        sub->add_option("--prime", primes, "prime modulus (repeatable; default $" + std::string(prime_env_var) +
                                               " or 101)");
        sub->add_option("--seed", cfg.seed, "RNG seed")->default_val(1);
        sub->add_option("--trials", trials, "number of independent trials");
        sub->add_option("--threads", cfg.threads, "worker threads, 0 = all cores")->default_val(0);
    };

    auto* vdim = app.add_subcommand("vdim", "virtual and expected dimension");
    common(vdim, true);
    auto* hdim = app.add_subcommand("hdim", "h0 by interpolation at random points; exit 10 on speciality evidence");
    common(hdim, true);
    randomized(hdim);
    hdim->add_option("--points", cfg.points_file, "points file (text rows or JSON) instead of random points");
    auto* reduce = app.add_subcommand("reduce", "Cremona reduction trace");
    common(reduce, true);
    auto* curves = app.add_subcommand("curves", "speciality predicted by lines, conics and rational normal curves");
    common(curves, true);
    curves->add_option("--actual", cfg.actual, "measured dim|D|, to report the residual");
    auto* base = app.add_subcommand("baselocus", "Monte Carlo probe of the base locus dimension");
    common(base, true);
    randomized(base);
    base->add_option("--sections", cfg.sections, "dimensions k of the random sections (default n-1)");
    base->add_option("--points", cfg.points_file, "points file instead of random points");
    base->add_option("--budget", cfg.budget, "maximum number of points enumerated per section");
    base->add_flag("--dump", cfg.dump, "include sections and zeros in the JSON report");
    auto* ah = app.add_subcommand("ah-check", "measure every special double-point system on the list");
    ah->add_flag("--json", cfg.json, "machine-readable JSON report on stdout");
    randomized(ah);
    ah->add_option("--max-n", cfg.max_n, "largest n for the quadric family")->default_val(6);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? Success : Failure;
    }

    try {
        cfg.command = app.get_subcommands().front()->get_name();
        if (cfg.command != "ah-check" && cfg.n < 1) throw std::invalid_argument("--n must be at least 1");
        cfg.mults = parse_mults(cfg.mults_text);
        if (primes.empty()) primes.push_back(default_prime());
        for (auto p : primes) cfg.primes.push_back(PrimeField(p).modulus());
        const auto* trials_opt = app.get_subcommands().front()->get_option_no_throw("--trials");
        if (trials_opt && trials_opt->count()) {
            if (trials < 1) throw std::invalid_argument("--trials must be at least 1");
            cfg.trials = trials;
        }
        return Runner(std::move(cfg), out).run();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return Failure;
    }
}

inline int run(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace fatpoints::cli
