// Grid evaluation of family states, threshold-crossing location, CSV/JSON
// emission, and the two verification harnesses (squeezing-entanglement
// equivalence, Dicke-path vs brute-force agreement).
#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "spinsq/core.hpp"
#include "spinsq/dicke.hpp"
#include "spinsq/families.hpp"
#include "spinsq/oracle.hpp"
#include "spinsq/pairwise.hpp"
#include "spinsq/squeezing.hpp"

namespace spinsq {

/// Everything the reports and harnesses need about one state, computed once.
/// The canonical concurrence always goes through the general Wootters route:
/// its singular values are perturbation-stable, whereas evaluating the
/// X-state closed form costs sqrt(eps) accuracy wherever v+ v- vanishes
/// (which includes every pure Dicke endpoint of the families).  The X-state
/// parameters are still extracted on axial states for the closed-form
/// relation checks, where their round-off cancels algebraically.
struct StateAnalysis {
    CollectiveMoments moments;
    SqueezingReport squeezing;
    Parity parity = Parity::none;
    double concurrence = 0.0;
    double margin = 0.0;  // signed entanglement margin; concurrence = max(0, margin)
    double czz = 0.0;
    std::optional<XStateParams> xstate;  // present when squeezing.axial
    double xi_s2_parity = 0.0;           // meaningful when squeezing.axial
};

inline StateAnalysis analyze_state(const SymmetricState& state) {
    StateAnalysis a;
    a.moments = moments(state);
    a.squeezing = analyze_squeezing(a.moments);
    a.parity = state_parity(state);
    a.czz = czz(a.moments);
    if (a.squeezing.axial) {
        a.xstate = xstate_params(a.moments);
        a.xi_s2_parity = xi_s_parity(a.moments);
    }
    a.margin = entanglement_margin_general(reduced_density(a.moments));
    a.concurrence = std::max(0.0, a.margin);
    return a;
}

/// One row of a parameter scan; the CSV columns are exactly these fields in
/// this order.
struct SweepRecord {
    int n_particles = 0;
    int n = 0;
    int n_prime = 0;  // excitation gap of the family
    double theta = 0.0;
    double phi = 0.0;
    double xi_s2 = 0.0;
    double varsigma2 = 0.0;
    double xi_t2 = 0.0;
    double lambda_min = 0.0;
    double concurrence = 0.0;
    Branch branch = Branch::general;
    Flag squeezed_t = Flag::boundary;
    Flag entangled = Flag::boundary;
    Parity parity = Parity::none;
};

inline SweepRecord make_record(const FamilySpec& spec, const StateAnalysis& a) {
    SweepRecord r;
    r.n_particles = spec.n_particles;
    r.n = spec.n;
    r.n_prime = spec.gap();
    r.theta = spec.theta;
    r.phi = spec.phi;
    r.xi_s2 = a.squeezing.xi_s2;
    r.varsigma2 = a.squeezing.varsigma2;
    r.xi_t2 = a.squeezing.xi_t2;
    r.lambda_min = a.squeezing.lambda_min;
    r.concurrence = a.concurrence;
    r.branch = a.squeezing.branch;
    r.squeezed_t = classify_below(a.squeezing.xi_t2, 1.0);
    r.entangled = classify_positive(a.margin);
    r.parity = a.parity;
    return r;
}

inline SweepRecord evaluate_point(const FamilySpec& spec) {
    return make_record(spec, analyze_state(build(spec)));
}

/// theta grid over [0, pi), inclusive-left as the family is parameterized.
inline std::vector<double> theta_grid(int steps) {
    if (steps < 2) throw invalid_input("theta grid needs at least 2 points");
    std::vector<double> g(static_cast<size_t>(steps));
    for (int k = 0; k < steps; ++k) g[static_cast<size_t>(k)] = k * std::numbers::pi / steps;
    return g;
}

/// phi grid over [0, 2 pi), inclusive-left.
inline std::vector<double> phi_grid(int steps) {
    std::vector<double> g(static_cast<size_t>(std::max(1, steps)));
    for (size_t k = 0; k < g.size(); ++k) g[k] = 2.0 * std::numbers::pi * static_cast<double>(k) / g.size();
    return g;
}

inline std::vector<SweepRecord> run_sweep(FamilySpec spec, int theta_steps) {
    std::vector<SweepRecord> out;
    out.reserve(static_cast<size_t>(theta_steps));
    for (double th : theta_grid(theta_steps)) {
        spec.theta = th;
        out.push_back(evaluate_point(spec));
    }
    return out;
}

// ---- threshold events ------------------------------------------------------

/// A point where a scan quantity meets its threshold: either a transversal
/// sign change ("crossing") or a tangency from one side ("touch", e.g. the
/// concurrence pinching to zero between two entangled intervals).
struct ThresholdEvent {
    std::string quantity;  // xi_s2 | xi_t2 | concurrence
    double theta = 0.0;
    std::string kind;      // crossing | touch
};

namespace detail {
enum class ScanQuantity { xi_s2, xi_t2, margin };

inline double scan_value(FamilySpec spec, double theta, ScanQuantity q) {
    spec.theta = theta;
    const StateAnalysis a = analyze_state(build(spec));
    switch (q) {
        case ScanQuantity::xi_s2: return a.squeezing.xi_s2 - 1.0;
        case ScanQuantity::xi_t2: return a.squeezing.xi_t2 - 1.0;
        default: return a.margin;
    }
}

inline double bisect(const FamilySpec& spec, ScanQuantity q, double a, double fa, double b) {
    for (int it = 0; it < 80 && b - a > 1e-10; ++it) {
        const double mid = 0.5 * (a + b);
        const double fm = scan_value(spec, mid, q);
        if ((fm < 0.0) == (fa < 0.0)) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    return 0.5 * (a + b);
}

/// Golden-section extremum refinement on [a, b]; returns (theta*, f(theta*)).
inline std::pair<double, double> refine_extremum(const FamilySpec& spec, ScanQuantity q, double a,
                                                 double b, bool minimize) {
    constexpr double inv_phi = 0.6180339887498949;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = scan_value(spec, x1, q);
    double f2 = scan_value(spec, x2, q);
    while (b - a > 1e-11) {
        const bool keep_left = minimize ? (f1 <= f2) : (f1 >= f2);
        if (keep_left) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = scan_value(spec, x1, q);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = scan_value(spec, x2, q);
        }
    }
    const double xm = 0.5 * (a + b);
    return {xm, scan_value(spec, xm, q)};
}
}  // namespace detail

/// Locate every threshold event of xi_s2 = 1, xi_t2 = 1 and C = 0 along the
/// theta grid to |dtheta| <= 1e-10.  Sign changes between neighboring grid
/// points are bisected; tangencies are caught by refining grid-local extrema
/// that approach the threshold and accepting those that reach the boundary
/// band.  C = 0 events are scanned through the signed margin so genuine
/// entangled -> unentangled transitions appear as sign changes.
inline std::vector<ThresholdEvent> locate_threshold_events(const FamilySpec& base,
                                                           const std::vector<SweepRecord>& records) {
    std::vector<ThresholdEvent> events;
    const struct {
        detail::ScanQuantity q;
        const char* name;
    } scans[] = {{detail::ScanQuantity::xi_s2, "xi_s2"},
                 {detail::ScanQuantity::xi_t2, "xi_t2"},
                 {detail::ScanQuantity::margin, "concurrence"}};

    for (const auto& scan : scans) {
        std::vector<double> f(records.size());
        for (size_t k = 0; k < records.size(); ++k)
            f[k] = detail::scan_value(base, records[k].theta, scan.q);

        // grid values within 1e-12 of the threshold count as sitting on it;
        // bisecting their neighborhoods would chase endpoint round-off
        const auto on_threshold = [](double v) { return std::abs(v) <= 1e-12; };
        for (size_t k = 0; k + 1 < records.size(); ++k) {
            if (on_threshold(f[k])) {
                events.push_back({scan.name, records[k].theta, "touch"});
                continue;
            }
            if ((f[k] < 0.0) != (f[k + 1] < 0.0) && !on_threshold(f[k + 1])) {
                const double th =
                    detail::bisect(base, scan.q, records[k].theta, f[k], records[k + 1].theta);
                events.push_back({scan.name, th, "crossing"});
            }
        }
        if (!records.empty() && on_threshold(f.back()))
            events.push_back({scan.name, records.back().theta, "touch"});

        // tangency candidates: interior grid extrema close to the threshold
        for (size_t k = 1; k + 1 < records.size(); ++k) {
            if (std::abs(f[k]) > 0.05 || on_threshold(f[k])) continue;
            const bool positive = f[k] > 0.0;
            if (positive && (f[k - 1] <= 0.0 || f[k + 1] <= 0.0)) continue;  // handled as crossings
            if (!positive && (f[k - 1] >= 0.0 || f[k + 1] >= 0.0)) continue;
            const bool local_min = positive && f[k] <= f[k - 1] && f[k] <= f[k + 1];
            const bool local_max = !positive && f[k] >= f[k - 1] && f[k] >= f[k + 1];
            if (!local_min && !local_max) continue;
            const auto [th, fv] = detail::refine_extremum(base, scan.q, records[k - 1].theta,
                                                          records[k + 1].theta, local_min);
            if (std::abs(fv) <= tol::threshold_band) events.push_back({scan.name, th, "touch"});
        }
    }

    // merge events of the same quantity closer than 1e-8 in theta
    std::vector<ThresholdEvent> merged;
    for (const auto& e : events) {
        bool dup = false;
        for (const auto& m : merged)
            if (m.quantity == e.quantity && std::abs(m.theta - e.theta) < 1e-8) dup = true;
        if (!dup) merged.push_back(e);
    }
    return merged;
}

// ---- formatting ------------------------------------------------------------

/// Shortest decimal that round-trips to the same double.
inline std::string format_double(double v) {
    std::array<char, 40> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

inline constexpr const char* csv_header =
    "N,n,n_prime,theta,phi,xi_s2,varsigma2,xi_t2,lambda_min,concurrence,branch,squeezed_T,"
    "entangled,parity";

inline void write_csv_row(std::ostream& os, const SweepRecord& r) {
    os << r.n_particles << ',' << r.n << ',' << r.n_prime << ',' << format_double(r.theta) << ','
       << format_double(r.phi) << ',' << format_double(r.xi_s2) << ','
       << format_double(r.varsigma2) << ',' << format_double(r.xi_t2) << ','
       << format_double(r.lambda_min) << ',' << format_double(r.concurrence) << ','
       << to_string(r.branch) << ',' << to_string(r.squeezed_t) << ',' << to_string(r.entangled)
       << ',' << to_string(r.parity) << '\n';
}

/// Data rows plus a comment-prefixed crossings section, so the file stays
/// loadable by CSV readers that honor '#' comments.
inline void write_csv(std::ostream& os, const std::vector<SweepRecord>& records,
                      const std::vector<ThresholdEvent>* events = nullptr) {
    os << csv_header << '\n';
    for (const auto& r : records) write_csv_row(os, r);
    if (events) {
        os << "# crossings\n";
        os << "# quantity,theta,kind\n";
        for (const auto& e : *events)
            os << "# " << e.quantity << ',' << format_double(e.theta) << ',' << e.kind << '\n';
    }
}

inline nlohmann::json record_to_json(const SweepRecord& r) {
    return nlohmann::json{{"N", r.n_particles},
                          {"n", r.n},
                          {"n_prime", r.n_prime},
                          {"theta", r.theta},
                          {"phi", r.phi},
                          {"xi_s2", r.xi_s2},
                          {"varsigma2", r.varsigma2},
                          {"xi_t2", r.xi_t2},
                          {"lambda_min", r.lambda_min},
                          {"concurrence", r.concurrence},
                          {"branch", to_string(r.branch)},
                          {"squeezed_T", to_string(r.squeezed_t)},
                          {"entangled", to_string(r.entangled)},
                          {"parity", to_string(r.parity)}};
}

inline nlohmann::json sweep_to_json(const std::vector<SweepRecord>& records,
                                    const std::vector<ThresholdEvent>& events) {
    nlohmann::json recs = nlohmann::json::array();
    for (const auto& r : records) recs.push_back(record_to_json(r));
    nlohmann::json evs = nlohmann::json::array();
    for (const auto& e : events)
        evs.push_back({{"quantity", e.quantity}, {"theta", e.theta}, {"kind", e.kind}});
    return nlohmann::json{{"records", recs}, {"crossings", evs}};
}

// ---- equivalence verification ----------------------------------------------

struct VerifyConfig {
    int n_min = 2;
    int n_max = 10;
    std::vector<FamilyKind> families{FamilyKind::even_pair, FamilyKind::general_pair};
    std::vector<int> n_primes{3, 4};  // gaps scanned for general_pair
    int theta_steps = 128;
    int phi_steps = 4;
};

/// Max absolute deviations of the closed-form relations, taken over every
/// axial grid point.
struct RelationDeviations {
    double planar_xi_t = 0.0;        // |xi_t2 - (1 - (N-1) C)|          when |u| > y
    double planar_xi_s = 0.0;        // |xi_s2 - (1 - (N-1) C)|          when |u| > y
    double axial_xi_t = 0.0;         // |xi_t2 - (1 - 2(N-1)(y+sqrt(v+v-)) C)| when y > sqrt(v+v-)
    double xi_s_above_one = 0.0;     // max(1 - xi_s2, 0)                 when y > sqrt(v+v-)
    double radical_identity = 0.0;   // |y^2 - v+v- + czz/4|
    // max over the grid of min(|u|-y, y-sqrt(v+v-)): positive only if both
    // concurrence branch terms were positive at once, which positivity of
    // rho forbids.  (The literal product of the two factors is legitimately
    // positive at unentangled points, where both factors are negative.)
    double mutual_exclusion = -1.0;
    double varsigma_czz = 0.0;       // |varsigma2 - (1 + (N-1) czz)|
    double min_reduction = 0.0;      // |xi_t2 - min(xi_s_parity, varsigma2)|

    void merge(const RelationDeviations& o) {
        planar_xi_t = std::max(planar_xi_t, o.planar_xi_t);
        planar_xi_s = std::max(planar_xi_s, o.planar_xi_s);
        axial_xi_t = std::max(axial_xi_t, o.axial_xi_t);
        xi_s_above_one = std::max(xi_s_above_one, o.xi_s_above_one);
        radical_identity = std::max(radical_identity, o.radical_identity);
        mutual_exclusion = std::max(mutual_exclusion, o.mutual_exclusion);
        varsigma_czz = std::max(varsigma_czz, o.varsigma_czz);
        min_reduction = std::max(min_reduction, o.min_reduction);
    }

    /// Violation of the closed-form relations beyond their budgets.
    bool relations_ok() const {
        return planar_xi_t <= 1e-10 && planar_xi_s <= 1e-10 && axial_xi_t <= 1e-10 &&
               xi_s_above_one <= 1e-10 && min_reduction <= 1e-10 && radical_identity <= 1e-12 &&
               mutual_exclusion <= 1e-12 && varsigma_czz <= 1e-12;
    }
};

struct FamilyVerify {
    FamilyKind kind = FamilyKind::even_pair;
    int gap = 0;
    long points = 0;
    long axial_points = 0;   // points satisfying the axial conditions
    long boundary = 0;       // grid points inside the threshold band
    long violations = 0;     // off-boundary biconditional mismatches
    RelationDeviations dev;
    std::string first_violation;
};

struct VerifySummary {
    std::vector<FamilyVerify> families;
    long total_points = 0;
    long total_boundary = 0;
    long total_violations = 0;
    RelationDeviations dev;

    bool ok() const { return total_violations == 0 && dev.relations_ok(); }
};

namespace detail {
inline void verify_point(const FamilySpec& spec, FamilyVerify& fam) {
    const StateAnalysis a = analyze_state(build(spec));
    const Flag squeezed = classify_below(a.squeezing.xi_t2, 1.0);
    const Flag entangled = classify_positive(a.margin);
    ++fam.points;

    if (squeezed == Flag::boundary || entangled == Flag::boundary) {
        ++fam.boundary;
    } else if ((squeezed == Flag::yes) != (entangled == Flag::yes)) {
        ++fam.violations;
        if (fam.first_violation.empty()) {
            std::ostringstream os;
            os << to_string(spec.kind) << " N=" << spec.n_particles << " n=" << spec.n
               << " gap=" << spec.gap() << " theta=" << format_double(spec.theta)
               << " phi=" << format_double(spec.phi) << " xi_t2=" << format_double(a.squeezing.xi_t2)
               << " C=" << format_double(a.concurrence);
            fam.first_violation = os.str();
        }
    }

    if (!a.squeezing.axial) return;
    ++fam.axial_points;
    const XStateParams& x = *a.xstate;
    const double nn = spec.n_particles;
    const double root = x.sqrt_vpvm();
    const double au = std::abs(x.u);
    RelationDeviations d;
    if (au > x.y) {
        const double c = 2.0 * (au - x.y);
        d.planar_xi_t = std::abs(a.squeezing.xi_t2 - (1.0 - (nn - 1.0) * c));
        d.planar_xi_s = std::abs(a.xi_s2_parity - (1.0 - (nn - 1.0) * c));
    }
    if (x.y > root) {
        const double c = 2.0 * (x.y - root);
        d.axial_xi_t = std::abs(a.squeezing.xi_t2 - (1.0 - 2.0 * (nn - 1.0) * (x.y + root) * c));
        d.xi_s_above_one = std::max(0.0, 1.0 - a.xi_s2_parity);
    }
    d.radical_identity = std::abs(x.y * x.y - x.v_plus * x.v_minus + 0.25 * a.czz);
    d.mutual_exclusion = std::min(au - x.y, x.y - root);
    d.varsigma_czz = std::abs(a.squeezing.varsigma2 - (1.0 + (nn - 1.0) * a.czz));
    d.min_reduction =
        std::abs(a.squeezing.xi_t2 - std::min(a.xi_s2_parity, a.squeezing.varsigma2));
    fam.dev.merge(d);
}
}  // namespace detail

inline VerifySummary verify_equivalence(const VerifyConfig& cfg) {
    if (cfg.n_min < 2 || cfg.n_max < cfg.n_min) throw invalid_input("verify: bad N range");
    VerifySummary sum;
    const std::vector<double> thetas = theta_grid(cfg.theta_steps);
    const std::vector<double> phis = phi_grid(cfg.phi_steps);

    auto scan_family = [&](FamilyKind kind, int gap_for_general) {
        FamilyVerify fam;
        fam.kind = kind;
        FamilySpec spec;
        spec.kind = kind;
        spec.n_prime = gap_for_general;
        for (int n_particles = cfg.n_min; n_particles <= cfg.n_max; ++n_particles) {
            spec.n_particles = n_particles;
            fam.gap = spec.gap();
            if (n_particles < fam.gap) continue;
            for (int n = 0; n <= n_particles - fam.gap; ++n) {
                spec.n = n;
                if (kind == FamilyKind::single_dicke) {
                    spec.theta = 0.0;
                    spec.phi = 0.0;
                    detail::verify_point(spec, fam);
                    continue;
                }
                for (double phi : phis) {
                    spec.phi = phi;
                    for (double theta : thetas) {
                        spec.theta = theta;
                        detail::verify_point(spec, fam);
                    }
                }
            }
        }
        sum.families.push_back(fam);
    };

    for (FamilyKind kind : cfg.families) {
        if (kind == FamilyKind::general_pair)
            for (int gap : cfg.n_primes) scan_family(kind, gap);
        else
            scan_family(kind, 3);
    }
    for (const auto& fam : sum.families) {
        sum.total_points += fam.points;
        sum.total_boundary += fam.boundary;
        sum.total_violations += fam.violations;
        sum.dev.merge(fam.dev);
    }
    return sum;
}

// ---- oracle cross-check ------------------------------------------------------

struct OracleCheckConfig {
    int n_min = 2;
    int n_max = 10;
    int samples_per_n = 50;
    std::uint64_t seed = 12345;
    int oracle_max_n = oracle_default_max_n;
    bool include_family_grids = true;
    int theta_steps = 128;
    int phi_steps = 4;
};

struct OracleCheckSummary {
    long states_checked = 0;
    double dev_moments = 0.0;      // worst |entry| difference over j1, G, gamma
    double dev_rho = 0.0;          // worst reduced-density entry difference
    double dev_xi_s2 = 0.0;
    double dev_varsigma2 = 0.0;
    double dev_xi_t2 = 0.0;
    double dev_lambda_min = 0.0;
    double dev_concurrence = 0.0;
    std::string worst_case;

    double worst() const {
        return std::max({dev_moments, dev_rho, dev_xi_s2, dev_varsigma2, dev_xi_t2,
                         dev_lambda_min, dev_concurrence});
    }
    bool ok(double budget = 1e-9) const { return worst() <= budget; }
};

namespace detail {
inline void oracle_compare(const SymmetricState& state, const std::string& label, int oracle_max_n,
                           OracleCheckSummary& sum) {
    const StateAnalysis primary = analyze_state(state);
    const TwoQubitDensity rho_primary = reduced_density(primary.moments);
    const OracleReport oracle = oracle_report(state, oracle_max_n);
    ++sum.states_checked;

    double dev_m = 0.0;
    for (int a = 0; a < 3; ++a) {
        dev_m = std::max(dev_m, std::abs(primary.moments.j1[a] - oracle.moments.j1[a]));
        for (int b = 0; b < 3; ++b) {
            dev_m = std::max(dev_m, std::abs(primary.moments.g[a][b] - oracle.moments.g[a][b]));
            dev_m = std::max(dev_m,
                             std::abs(primary.moments.gamma[a][b] - oracle.moments.gamma[a][b]));
        }
    }
    const double dev_rho = max_abs_diff(rho_primary.matrix(), oracle.rho.matrix());
    const double dev_xi_s2 = std::abs(primary.squeezing.xi_s2 - oracle.squeezing.xi_s2);
    const double dev_var = std::abs(primary.squeezing.varsigma2 - oracle.squeezing.varsigma2);
    const double dev_xi_t2 = std::abs(primary.squeezing.xi_t2 - oracle.squeezing.xi_t2);
    const double dev_lam = std::abs(primary.squeezing.lambda_min - oracle.squeezing.lambda_min);
    const double dev_c = std::abs(primary.concurrence - oracle.concurrence);

    const double before = sum.worst();
    sum.dev_moments = std::max(sum.dev_moments, dev_m);
    sum.dev_rho = std::max(sum.dev_rho, dev_rho);
    sum.dev_xi_s2 = std::max(sum.dev_xi_s2, dev_xi_s2);
    sum.dev_varsigma2 = std::max(sum.dev_varsigma2, dev_var);
    sum.dev_xi_t2 = std::max(sum.dev_xi_t2, dev_xi_t2);
    sum.dev_lambda_min = std::max(sum.dev_lambda_min, dev_lam);
    sum.dev_concurrence = std::max(sum.dev_concurrence, dev_c);
    if (sum.worst() > before) sum.worst_case = label;
}
}  // namespace detail

/// Re-derives every quantity through the 2^N route for seeded random states
/// and the family grids, tracking the worst per-quantity deviation.
inline OracleCheckSummary oracle_check(const OracleCheckConfig& cfg) {
    if (cfg.n_min < 2 || cfg.n_max < cfg.n_min) throw invalid_input("oracle-check: bad N range");
    if (cfg.n_max > cfg.oracle_max_n)
        throw invalid_input("oracle-check: N range exceeds the brute-force ceiling " +
                            std::to_string(cfg.oracle_max_n));
    OracleCheckSummary sum;
    std::mt19937_64 rng(cfg.seed);
    for (int n_particles = cfg.n_min; n_particles <= cfg.n_max; ++n_particles) {
        for (int s = 0; s < cfg.samples_per_n; ++s) {
            const SymmetricState state = random_symmetric_state(n_particles, rng);
            detail::oracle_compare(state, "random N=" + std::to_string(n_particles) +
                                              " sample=" + std::to_string(s),
                                   cfg.oracle_max_n, sum);
        }
    }
    if (!cfg.include_family_grids) return sum;

    const std::vector<double> thetas = theta_grid(cfg.theta_steps);
    const std::vector<double> phis = phi_grid(cfg.phi_steps);
    const struct {
        FamilyKind kind;
        int gap;
    } fams[] = {{FamilyKind::even_pair, 2},
                {FamilyKind::adjacent_pair, 1},
                {FamilyKind::general_pair, 3},
                {FamilyKind::general_pair, 4}};
    for (const auto& f : fams) {
        FamilySpec spec;
        spec.kind = f.kind;
        spec.n_prime = f.gap;
        for (int n_particles = cfg.n_min; n_particles <= cfg.n_max; ++n_particles) {
            if (n_particles < f.gap) continue;
            spec.n_particles = n_particles;
            for (int n = 0; n <= n_particles - f.gap; ++n) {
                spec.n = n;
                for (double phi : phis) {
                    spec.phi = phi;
                    for (double theta : thetas) {
                        spec.theta = theta;
                        std::ostringstream label;
                        label << to_string(f.kind) << " N=" << n_particles << " n=" << n
                              << " gap=" << f.gap << " theta=" << format_double(theta)
                              << " phi=" << format_double(phi);
                        detail::oracle_compare(build(spec), label.str(), cfg.oracle_max_n, sum);
                    }
                }
            }
        }
    }
    return sum;
}

}  // namespace spinsq
