// discordlab: detect and bound quantum discord in 2xN bipartite states.
//
// Subcommands: analyze (per-state report), sweep (family CSV scans),
// oracle-compare (bound-vs-brute-force soundness runs), gen (state files).
// Exit codes: 0 success, 2 input or validation error, 3 internal numeric
// failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "discordlab/report.hpp"
#include "discordlab/states.hpp"
#include "discordlab/sweeps.hpp"

namespace {

using namespace discordlab;

struct FamilyArgs {
    std::string family;
    std::optional<double> a, b, u, c;
    int d = 2;
    int rank = 0;  // 0: full rank
    std::string kind = "phi+";
    uint64_t seed = 1;
};

double require_param(const std::optional<double>& v, const char* flag, const char* family) {
    if (!v)
        throw validation_error(std::string("family ") + family + " needs " + flag);
    return *v;
}

DensityMatrix build_family(const FamilyArgs& fa, std::string& descriptor) {
    std::ostringstream desc;
    if (fa.family == "werner") {
        const double a = require_param(fa.a, "--a", "werner");
        desc << "werner(a=" << a << ")";
        descriptor = desc.str();
        return werner(a);
    }
    if (fa.family == "bell") {
        desc << "bell(" << fa.kind << ")";
        descriptor = desc.str();
        return bell(bell_kind_from_string(fa.kind));
    }
    if (fa.family == "bell-mixture" || fa.family == "bell_mixture") {
        const double b = require_param(fa.b, "--b", "bell-mixture");
        desc << "bell_mixture(b=" << b << ")";
        descriptor = desc.str();
        return bell_mixture(b);
    }
    if (fa.family == "uc") {
        const double u = require_param(fa.u, "--u", "uc");
        const double c = require_param(fa.c, "--c", "uc");
        desc << "uc(u=" << u << ", c=" << c << ", f=" << uc_f(u, c) << ")";
        descriptor = desc.str();
        return uc_family(u, c);
    }
    if (fa.family == "max-entangled" || fa.family == "max_entangled") {
        desc << "max_entangled(d=" << fa.d << ")";
        descriptor = desc.str();
        return max_entangled(fa.d);
    }
    if (fa.family == "random") {
        const int rank = fa.rank == 0 ? fa.d : fa.rank;
        desc << "random(dim=" << fa.d << ", rank=" << rank << ", seed=" << fa.seed << ")";
        descriptor = desc.str();
        return random_density(fa.d, rank, fa.seed);
    }
    throw validation_error("unknown family '" + fa.family +
                           "' (want werner, bell, bell-mixture, uc, max-entangled or random)");
}

void add_family_flags(CLI::App* cmd, FamilyArgs& fa) {
    cmd->add_option("--family", fa.family, "state family");
    cmd->add_option("--a", fa.a, "werner mixing parameter");
    cmd->add_option("--b", fa.b, "bell-mixture parameter");
    cmd->add_option("--u", fa.u, "uc family parameter u");
    cmd->add_option("--c", fa.c, "uc family parameter c");
    cmd->add_option("--d", fa.d, "local dimension (max-entangled, random)");
    cmd->add_option("--rank", fa.rank, "rank for random states (default: full)");
    cmd->add_option("--kind", fa.kind, "bell kind: psi+, psi-, phi+, phi-");
    cmd->add_option("--seed", fa.seed, "seed for random states");
}

// Tolerance precedence: --tol flag, then DISCORDLAB_TOL, then the policy
// default.
double resolve_tol(const std::optional<double>& flag_tol) {
    if (flag_tol) {
        if (!(*flag_tol > 0.0)) throw validation_error("--tol must be positive");
        return *flag_tol;
    }
    if (const char* env = std::getenv("DISCORDLAB_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end == env || *end != '\0' || !(v > 0.0))
            throw validation_error("DISCORDLAB_TOL must be a positive number, got '" +
                                   std::string(env) + "'");
        return v;
    }
    return kPolicy.comparison_tol;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream os(path);
    if (!os) throw validation_error("cannot open '" + path + "' for writing");
    return os;
}

int run(int argc, char** argv) {
    CLI::App app{"discordlab: partial-transpose discord witnesses, geometric-discord and "
                 "work-deficit lower bounds, and brute-force oracles for 2xN states"};
    app.require_subcommand(1);

    // analyze
    auto* analyze_cmd = app.add_subcommand("analyze", "analyze one state (family or file)");
    FamilyArgs an_family;
    std::string an_input;
    std::optional<double> an_tol;
    bool an_oracle = false, an_json = false;
    int an_grid = kDefaultOracleGrid, an_refine = kDefaultOracleRefine;
    std::string an_output;
    analyze_cmd->add_option("input", an_input, "state file (JSON)");
    add_family_flags(analyze_cmd, an_family);
    analyze_cmd->add_option("--tol", an_tol, "minor-invariance tolerance");
    analyze_cmd->add_flag("--oracle", an_oracle, "also run the brute-force oracles");
    analyze_cmd->add_option("--grid", an_grid, "oracle grid resolution (>= 32)");
    analyze_cmd->add_option("--refine", an_refine, "oracle refinement passes");
    analyze_cmd->add_flag("--json", an_json, "emit the JSON report");
    analyze_cmd->add_option("-o,--output", an_output, "write the report to a file");

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "parameter sweep to CSV");
    std::string sw_family;
    double sw_start = 0.0, sw_end = 1.0, sw_step = 0.01;
    int sw_steps = 101;
    int sw_grid = kDefaultOracleGrid, sw_refine = kDefaultOracleRefine;
    std::string sw_output;
    sweep_cmd->add_option("--family", sw_family, "werner, bell-mixture or uc")->required();
    sweep_cmd->add_option("--start", sw_start, "range start (1-D sweeps)");
    sweep_cmd->add_option("--end", sw_end, "range end (1-D sweeps)");
    sweep_cmd->add_option("--steps", sw_steps, "number of points (1-D sweeps)");
    sweep_cmd->add_option("--step", sw_step, "grid step (uc sweep)");
    sweep_cmd->add_option("--grid", sw_grid, "oracle grid resolution");
    sweep_cmd->add_option("--refine", sw_refine, "oracle refinement passes");
    sweep_cmd->add_option("-o,--output", sw_output, "CSV output path")->required();

    // oracle-compare
    auto* cmp_cmd = app.add_subcommand("oracle-compare", "bound soundness vs brute force");
    std::string cmp_dims = "2x2", cmp_ensemble = "random", cmp_output;
    int cmp_count = 100;
    uint64_t cmp_seed = 1;
    bool cmp_reference = false;
    int cmp_grid = kDefaultOracleGrid, cmp_refine = kDefaultOracleRefine;
    cmp_cmd->add_option("--dims", cmp_dims, "2x2, 2x3 or 2x4");
    cmp_cmd->add_option("--count", cmp_count, "ensemble size (<= 10000)");
    cmp_cmd->add_option("--seed", cmp_seed, "base seed");
    cmp_cmd->add_option("--ensemble", cmp_ensemble, "random or zero-discord");
    cmp_cmd->add_flag("--include-reference", cmp_reference,
                      "prepend the d=2 maximally entangled state as row -1");
    cmp_cmd->add_option("--grid", cmp_grid, "oracle grid resolution");
    cmp_cmd->add_option("--refine", cmp_refine, "oracle refinement passes");
    cmp_cmd->add_option("-o,--output", cmp_output, "CSV output path")->required();

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "write a family state to a file");
    FamilyArgs gen_family;
    std::string gen_output;
    add_family_flags(gen_cmd, gen_family);
    gen_cmd->add_option("-o,--output", gen_output, "state file path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (*analyze_cmd) {
        std::string descriptor;
        std::optional<DensityMatrix> rho;
        if (!an_input.empty()) {
            rho = read_state_file(an_input);
            descriptor = "file " + an_input;
        } else if (!an_family.family.empty()) {
            rho = build_family(an_family, descriptor);
        } else {
            throw validation_error("analyze: give a state file or a --family");
        }
        AnalyzeOptions opts;
        opts.tol = resolve_tol(an_tol);
        opts.with_oracle = an_oracle;
        opts.grid = an_grid;
        opts.refine_iters = an_refine;
        const AnalysisReport report = analyze(*rho, opts);
        const std::string body =
            an_json ? render_json(report).dump(2) + "\n" : render_text(report, descriptor);
        if (an_output.empty()) {
            std::cout << body;
        } else {
            open_output(an_output) << body;
        }
        return 0;
    }

    if (*sweep_cmd) {
        std::ofstream os = open_output(sw_output);
        const OracleParams oracle{sw_grid, sw_refine};
        if (sw_family == "bell-mixture" || sw_family == "bell_mixture") {
            sweep_bell_mixture(os, {sw_start, sw_end, sw_steps}, oracle);
        } else if (sw_family == "werner") {
            sweep_werner(os, {sw_start, sw_end, sw_steps}, oracle);
        } else if (sw_family == "uc") {
            sweep_uc(os, sw_step);
        } else {
            throw validation_error("sweep: unknown family '" + sw_family +
                                   "' (want werner, bell-mixture or uc)");
        }
        if (!os.good()) throw validation_error("sweep: writing '" + sw_output + "' failed");
        std::cout << "wrote " << sw_output << "\n";
        return 0;
    }

    if (*cmp_cmd) {
        int dim_a = 0, dim_b = 0;
        if (cmp_dims.size() == 3 && cmp_dims[1] == 'x') {
            dim_a = cmp_dims[0] - '0';
            dim_b = cmp_dims[2] - '0';
        }
        EnsembleKind kind;
        if (cmp_ensemble == "random") {
            kind = EnsembleKind::random;
        } else if (cmp_ensemble == "zero-discord") {
            kind = EnsembleKind::zero_discord;
        } else {
            throw validation_error("oracle-compare: unknown ensemble '" + cmp_ensemble + "'");
        }
        std::ofstream os = open_output(cmp_output);
        const CompareSummary s = oracle_compare(os, dim_a, dim_b, cmp_count, cmp_seed, kind,
                                                cmp_reference, {cmp_grid, cmp_refine});
        if (!os.good())
            throw validation_error("oracle-compare: writing '" + cmp_output + "' failed");
        std::cout << "states: " << s.count << "\n"
                  << "gqd violations: " << s.gqd_violations << "\n"
                  << "wd violations: " << s.wd_violations << "\n"
                  << "max (bound - oracle): " << s.max_violation << "\n"
                  << "mean gqd gap (oracle - bound): " << s.mean_gqd_gap << "\n"
                  << "mean wd gap (oracle - bound): " << s.mean_wd_gap << "\n";
        return 0;
    }

    if (*gen_cmd) {
        if (gen_family.family.empty()) throw validation_error("gen: --family is required");
        std::string descriptor;
        const DensityMatrix rho = build_family(gen_family, descriptor);
        write_state_file(gen_output, rho);
        std::cout << "wrote " << gen_output << " (" << descriptor << ")\n";
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const numeric_error& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
