// spinsqueeze: analyze single symmetric states, sweep Dicke-superposition
// families, verify the squeezing <-> pairwise-entanglement equivalence over
// parameter grids, and cross-check the Dicke-basis pipeline against the
// brute-force 2^N path.
//
// Exit codes: 0 success, 1 usage/input error, 2 numerical failure,
// 3 verification failure.

#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spinsq/spinsq.hpp"

namespace {

using namespace spinsq;

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_numerical = 2;
constexpr int exit_verification = 3;

double to_radians(double value, bool degrees) {
    return degrees ? value * std::numbers::pi / 180.0 : value;
}

std::string vec3_string(const Vec3& v) {
    return "(" + format_double(v[0]) + ", " + format_double(v[1]) + ", " + format_double(v[2]) + ")";
}

struct OutputTarget {
    std::string path;  // empty -> stdout

    void write(const std::string& content) const {
        if (path.empty()) {
            std::cout << content;
            return;
        }
        std::ofstream out(path, std::ios::binary);
        if (!out) throw invalid_input("cannot open output file " + path);
        out << content;
        if (!out) throw invalid_input("failed writing output file " + path);
    }
};

struct FamilyCliOptions {
    std::string family = "even-pair";
    int n_particles = 3;
    int n = 0;
    int n_prime = 3;
    double theta = 0.0;
    double phi = 0.0;
    bool degrees = false;

    FamilySpec spec() const {
        FamilySpec s;
        s.kind = family_kind_from_string(family);
        s.n_particles = n_particles;
        s.n = n;
        s.n_prime = n_prime;
        s.theta = to_radians(theta, degrees);
        s.phi = to_radians(phi, degrees);
        s.validate();
        return s;
    }
};

void add_family_options(CLI::App* cmd, FamilyCliOptions& opt, bool with_theta) {
    cmd->add_option("--family", opt.family,
                    "state family: even-pair | adjacent-pair | general-pair | single-dicke")
        ->check(CLI::IsMember({"even-pair", "adjacent-pair", "general-pair", "single-dicke"}));
    cmd->add_option("--N", opt.n_particles, "number of spin-1/2 particles (>= 2)");
    cmd->add_option("--n", opt.n, "excitation number of the lower component");
    cmd->add_option("--n-prime", opt.n_prime, "excitation gap for general-pair (>= 3)");
    if (with_theta) cmd->add_option("--theta", opt.theta, "superposition angle in [0, pi)");
    cmd->add_option("--phi", opt.phi, "relative phase in [0, 2 pi)");
    cmd->add_flag("--degrees", opt.degrees, "interpret --theta/--phi in degrees");
}

nlohmann::json analysis_to_json(const StateAnalysis& a) {
    nlohmann::json j{{"N", a.moments.n_particles},
                     {"xi_s2", a.squeezing.xi_s2},
                     {"varsigma2", a.squeezing.varsigma2},
                     {"xi_t2", a.squeezing.xi_t2},
                     {"lambda_min", a.squeezing.lambda_min},
                     {"denominator", a.squeezing.denominator},
                     {"branch", to_string(a.squeezing.branch)},
                     {"concurrence", a.concurrence},
                     {"entanglement_margin", a.margin},
                     {"czz", a.czz},
                     {"parity", to_string(a.parity)},
                     {"axial", a.squeezing.axial},
                     {"squeezed_T", to_string(classify_below(a.squeezing.xi_t2, 1.0))},
                     {"entangled", to_string(classify_positive(a.margin))},
                     {"degenerate_mean_spin", a.squeezing.degenerate_mean_spin}};
    if (!a.squeezing.degenerate_mean_spin)
        j["mean_spin"] = {a.squeezing.mean_spin[0], a.squeezing.mean_spin[1],
                          a.squeezing.mean_spin[2]};
    else
        j["mean_spin"] = nullptr;
    if (a.xstate) {
        j["xstate"] = {{"v_plus", a.xstate->v_plus},
                       {"v_minus", a.xstate->v_minus},
                       {"y", a.xstate->y},
                       {"u_re", a.xstate->u.real()},
                       {"u_im", a.xstate->u.imag()},
                       {"xi_s2_parity", a.xi_s2_parity}};
    }
    return j;
}

std::string analysis_to_text(const StateAnalysis& a, const std::string& heading) {
    std::ostringstream os;
    os << heading << '\n';
    os << "parity: " << to_string(a.parity)
       << "   axial conditions: " << (a.squeezing.axial ? "hold" : "violated") << '\n';
    if (a.squeezing.degenerate_mean_spin)
        os << "mean spin: degenerate (|<J>| < 1e-9)\n";
    else
        os << "mean spin direction: " << vec3_string(a.squeezing.mean_spin) << '\n';
    os << "xi_s2       = " << format_double(a.squeezing.xi_s2) << '\n';
    os << "varsigma2   = " << format_double(a.squeezing.varsigma2) << '\n';
    os << "xi_t2       = " << format_double(a.squeezing.xi_t2)
       << "   branch: " << to_string(a.squeezing.branch) << '\n';
    os << "lambda_min  = " << format_double(a.squeezing.lambda_min) << '\n';
    os << "denominator = " << format_double(a.squeezing.denominator) << '\n';
    os << "concurrence = " << format_double(a.concurrence) << '\n';
    os << "czz         = " << format_double(a.czz) << '\n';
    os << "squeezed_T: " << to_string(classify_below(a.squeezing.xi_t2, 1.0))
       << "   entangled: " << to_string(classify_positive(a.margin)) << '\n';
    return os.str();
}

int run_analyze(const FamilyCliOptions& opt, const std::string& state_file,
                const std::string& format, const OutputTarget& out) {
    SymmetricState state = [&] {
        if (!state_file.empty()) return load_state_file(state_file);
        return build(opt.spec());
    }();
    const StateAnalysis a = analyze_state(state);

    if (format == "json") {
        nlohmann::json j = analysis_to_json(a);
        if (state_file.empty()) {
            const FamilySpec spec = opt.spec();
            j["family"] = to_string(spec.kind);
            j["n"] = spec.n;
            j["n_prime"] = spec.gap();
            j["theta"] = spec.theta;
            j["phi"] = spec.phi;
        } else {
            j["state_file"] = state_file;
        }
        out.write(j.dump(2) + "\n");
        return exit_ok;
    }

    std::string heading;
    if (state_file.empty()) {
        const FamilySpec spec = opt.spec();
        std::ostringstream h;
        h << "family: " << to_string(spec.kind) << "  N=" << spec.n_particles << "  n=" << spec.n
          << "  gap=" << spec.gap() << "  theta=" << format_double(spec.theta)
          << "  phi=" << format_double(spec.phi);
        heading = h.str();
    } else {
        heading = "state file: " + state_file + "  N=" + std::to_string(state.n_particles());
    }
    out.write(analysis_to_text(a, heading));
    return exit_ok;
}

int run_sweep_cmd(const FamilyCliOptions& opt, int theta_steps, const std::string& format,
                  const OutputTarget& out) {
    FamilySpec spec = opt.spec();
    const std::vector<SweepRecord> records = run_sweep(spec, theta_steps);
    const std::vector<ThresholdEvent> events = locate_threshold_events(spec, records);
    if (format == "json") {
        out.write(sweep_to_json(records, events).dump(2) + "\n");
    } else {
        std::ostringstream os;
        write_csv(os, records, &events);
        out.write(os.str());
    }
    return exit_ok;
}

std::string verify_summary_text(const VerifySummary& sum) {
    std::ostringstream os;
    for (const auto& fam : sum.families) {
        os << "family " << to_string(fam.kind) << " (gap " << fam.gap << "): " << fam.points
           << " points, " << fam.axial_points << " axial, " << fam.boundary
           << " boundary-band, " << fam.violations << " violations";
        if (fam.axial_points < fam.points) os << "  [no-parity observation]";
        os << '\n';
        if (!fam.first_violation.empty()) os << "  first violation: " << fam.first_violation << '\n';
    }
    const RelationDeviations& d = sum.dev;
    os << "max |xi_t2 - (1-(N-1)C)| (|u|>y branch):      " << format_double(d.planar_xi_t) << '\n';
    os << "max |xi_s2 - (1-(N-1)C)| (|u|>y branch):      " << format_double(d.planar_xi_s) << '\n';
    os << "max |xi_t2 - (1-2(N-1)(y+r)C)| (y>r branch):  " << format_double(d.axial_xi_t) << '\n';
    os << "max (1 - xi_s2) on y>r branch:                " << format_double(d.xi_s_above_one) << '\n';
    os << "max |y^2 - v+v- + czz/4|:                     " << format_double(d.radical_identity) << '\n';
    os << "max min(|u|-y, y-r)  [both>0 impossible]:     " << format_double(d.mutual_exclusion) << '\n';
    os << "max |varsigma2 - (1+(N-1)czz)|:               " << format_double(d.varsigma_czz) << '\n';
    os << "max |xi_t2 - min(xi_s2, varsigma2)|:          " << format_double(d.min_reduction) << '\n';
    os << "total: " << sum.total_points << " points, " << sum.total_boundary << " boundary-band, "
       << sum.total_violations << " violations -> " << (sum.ok() ? "OK" : "FAIL") << '\n';
    return os.str();
}

nlohmann::json verify_summary_json(const VerifySummary& sum) {
    nlohmann::json fams = nlohmann::json::array();
    for (const auto& fam : sum.families) {
        nlohmann::json f{{"family", to_string(fam.kind)}, {"gap", fam.gap},
                         {"points", fam.points},       {"axial_points", fam.axial_points},
                         {"boundary", fam.boundary},   {"violations", fam.violations}};
        if (!fam.first_violation.empty()) f["first_violation"] = fam.first_violation;
        fams.push_back(f);
    }
    const RelationDeviations& d = sum.dev;
    return nlohmann::json{
        {"families", fams},
        {"total_points", sum.total_points},
        {"total_boundary", sum.total_boundary},
        {"total_violations", sum.total_violations},
        {"max_deviation",
         {{"planar_xi_t", d.planar_xi_t},
          {"planar_xi_s", d.planar_xi_s},
          {"axial_xi_t", d.axial_xi_t},
          {"xi_s_above_one", d.xi_s_above_one},
          {"radical_identity", d.radical_identity},
          {"mutual_exclusion", d.mutual_exclusion},
          {"varsigma_czz", d.varsigma_czz},
          {"min_reduction", d.min_reduction}}},
        {"ok", sum.ok()}};
}

std::string oracle_summary_text(const OracleCheckSummary& sum, double budget) {
    std::ostringstream os;
    os << "states checked: " << sum.states_checked << '\n';
    os << "worst deviation, moments:      " << format_double(sum.dev_moments) << '\n';
    os << "worst deviation, rho entries:  " << format_double(sum.dev_rho) << '\n';
    os << "worst deviation, xi_s2:        " << format_double(sum.dev_xi_s2) << '\n';
    os << "worst deviation, varsigma2:    " << format_double(sum.dev_varsigma2) << '\n';
    os << "worst deviation, xi_t2:        " << format_double(sum.dev_xi_t2) << '\n';
    os << "worst deviation, lambda_min:   " << format_double(sum.dev_lambda_min) << '\n';
    os << "worst deviation, concurrence:  " << format_double(sum.dev_concurrence) << '\n';
    if (!sum.worst_case.empty()) os << "worst case: " << sum.worst_case << '\n';
    os << "budget " << format_double(budget) << " -> " << (sum.ok(budget) ? "OK" : "FAIL") << '\n';
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spin squeezing and pairwise entanglement for symmetric qubit ensembles"};
    app.require_subcommand(1);

    // analyze
    auto* analyze = app.add_subcommand("analyze", "report all parameters for one state");
    FamilyCliOptions an_opt;
    std::string an_state_file;
    std::string an_format = "text";
    OutputTarget an_out;
    add_family_options(analyze, an_opt, true);
    analyze->add_option("--state-file", an_state_file, "JSON state file instead of a family");
    analyze->add_option("--format", an_format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));
    analyze->add_option("--out", an_out.path, "write output to a file instead of stdout");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "scan theta and emit one record per grid point");
    FamilyCliOptions sw_opt;
    int sw_theta_steps = 256;
    std::string sw_format = "csv";
    OutputTarget sw_out;
    add_family_options(sweep, sw_opt, false);
    sweep->add_option("--theta-steps", sw_theta_steps, "grid points over [0, pi)")
        ->check(CLI::Range(2, 1 << 20));
    sweep->add_option("--format", sw_format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    sweep->add_option("--out", sw_out.path, "output file (default stdout)");

    // verify
    auto* verify = app.add_subcommand(
        "verify", "check that xi_t2 < 1 and C > 0 coincide over family grids");
    int vf_n_min = 2, vf_n_max = 10, vf_theta_steps = 128, vf_phi_steps = 4;
    std::vector<std::string> vf_families{"even-pair", "general-pair"};
    std::vector<int> vf_n_primes{3, 4};
    std::string vf_format = "text";
    OutputTarget vf_out;
    verify->add_option("--N-min", vf_n_min, "smallest particle number")->check(CLI::Range(2, 64));
    verify->add_option("--N-max", vf_n_max, "largest particle number")->check(CLI::Range(2, 64));
    verify->add_option("--family", vf_families, "families to scan (repeatable)")
        ->check(CLI::IsMember({"even-pair", "adjacent-pair", "general-pair", "single-dicke"}));
    verify->add_option("--n-prime", vf_n_primes, "gaps for general-pair (repeatable)");
    verify->add_option("--theta-steps", vf_theta_steps, "theta grid points")
        ->check(CLI::Range(2, 1 << 20));
    verify->add_option("--phi-steps", vf_phi_steps, "phi grid points")->check(CLI::Range(1, 1 << 20));
    verify->add_option("--format", vf_format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--out", vf_out.path, "write the summary to a file");

    // oracle-check
    auto* oracle = app.add_subcommand(
        "oracle-check", "compare the Dicke-basis pipeline against the 2^N brute-force path");
    OracleCheckConfig oc_cfg;
    double oc_budget = 1e-9;
    OutputTarget oc_out;
    oracle->add_option("--N-min", oc_cfg.n_min, "smallest particle number")->check(CLI::Range(2, 20));
    oracle->add_option("--N-max", oc_cfg.n_max, "largest particle number")->check(CLI::Range(2, 20));
    oracle->add_option("--samples", oc_cfg.samples_per_n, "random states per N")
        ->check(CLI::Range(0, 1 << 20));
    oracle->add_option("--seed", oc_cfg.seed, "random seed");
    oracle->add_option("--oracle-max-n", oc_cfg.oracle_max_n, "brute-force ceiling")
        ->check(CLI::Range(2, 24));
    oracle->add_option("--theta-steps", oc_cfg.theta_steps, "family grid theta points")
        ->check(CLI::Range(2, 1 << 20));
    oracle->add_option("--phi-steps", oc_cfg.phi_steps, "family grid phi points")
        ->check(CLI::Range(1, 1 << 20));
    oracle->add_flag("!--no-families", oc_cfg.include_family_grids, "skip the family grids");
    oracle->add_option("--budget", oc_budget, "max allowed deviation");
    oracle->add_option("--out", oc_out.path, "write the summary to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*analyze) return run_analyze(an_opt, an_state_file, an_format, an_out);
        if (*sweep) return run_sweep_cmd(sw_opt, sw_theta_steps, sw_format, sw_out);
        if (*verify) {
            VerifyConfig cfg;
            cfg.n_min = vf_n_min;
            cfg.n_max = vf_n_max;
            cfg.families.clear();
            for (const auto& f : vf_families) cfg.families.push_back(family_kind_from_string(f));
            cfg.n_primes = vf_n_primes;
            cfg.theta_steps = vf_theta_steps;
            cfg.phi_steps = vf_phi_steps;
            const VerifySummary sum = verify_equivalence(cfg);
            if (vf_format == "json")
                vf_out.write(verify_summary_json(sum).dump(2) + "\n");
            else
                vf_out.write(verify_summary_text(sum));
            return sum.ok() ? exit_ok : exit_verification;
        }
        if (*oracle) {
            const OracleCheckSummary sum = oracle_check(oc_cfg);
            oc_out.write(oracle_summary_text(sum, oc_budget));
            return sum.ok(oc_budget) ? exit_ok : exit_verification;
        }
    } catch (const invalid_input& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const numerical_failure& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return exit_numerical;
    }
    return exit_usage;
}
