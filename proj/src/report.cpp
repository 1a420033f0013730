#include "discordlab/report.hpp"

#include <cmath>
#include <sstream>

namespace discordlab {

AnalysisReport analyze(const DensityMatrix& rho, const AnalyzeOptions& opts) {
    AnalysisReport r;
    r.dim_a = rho.dim_a();
    r.dim_b = rho.dim_b();
    r.tolerance = opts.tol;
    if (rho.dim_a() == 2) {
        r.minors = minor_report(rho, opts.tol);
        r.verdict = discord_witness(rho, opts.tol);
    }
    r.ppt_min_eig = ppt_min_eigenvalue(rho);
    r.gqd = gqd_lower_bound(rho);
    r.wd_bound = r.gqd.bound / (2.0 * std::log(2.0));
    if (opts.with_oracle) {
        if (rho.dim_a() != 2)
            throw validation_error("analyze: oracle computations require dimA = 2");
        OracleSection o{discord_A_exact(rho, opts.grid, opts.refine_iters),
                        gqd_brute(rho, opts.grid, opts.refine_iters),
                        work_deficit_exact(rho, opts.grid, opts.refine_iters)};
        r.oracle = o;
    }
    return r;
}

std::string render_text(const AnalysisReport& r, const std::string& descriptor) {
    std::ostringstream os;
    os.precision(12);
    os << "state: " << descriptor << " (" << r.dim_a << " x " << r.dim_b << ")\n";
    if (r.verdict) {
        os << "principal-minor criterion (tol " << r.tolerance << "):\n";
        os << "  verdict:   " << to_string(r.verdict->verdict) << "\n";
        os << "  max delta: " << r.verdict->max_delta;
        if (r.verdict->witness_pair)
            os << "  at pair (" << r.verdict->witness_pair->first << ", "
               << r.verdict->witness_pair->second << ")";
        os << "\n";
        os << "  pairs checked: " << r.minors->pairs.size() << "\n";
    } else {
        os << "principal-minor criterion: skipped (requires dimA = 2)\n";
    }
    os << "ppt min eigenvalue: " << r.ppt_min_eig << (r.ppt_min_eig < 0 ? "  (NPT: entangled)" : "")
       << "\n";
    os << "gqd lower bound: " << r.gqd.bound << "\n";
    os << "  lambda:      ";
    for (double v : r.gqd.lambda) os << v << " ";
    os << "\n  lambda':     ";
    for (double v : r.gqd.lambda_prime) os << v << " ";
    os << "\n  lambda_min:  ";
    for (double v : r.gqd.lambda_min) os << v << " ";
    os << "\n  L:           ";
    for (double v : r.gqd.L) os << v << " ";
    os << "\n";
    os << "work deficit lower bound: " << r.wd_bound << "\n";
    if (r.oracle) {
        const auto& o = *r.oracle;
        os << "oracle (grid " << o.discord.grid_resolution << "):\n";
        os << "  discord:      " << o.discord.value << "  bits  at (theta "
           << o.discord.argmin_angles.theta << ", phi " << o.discord.argmin_angles.phi << ")\n";
        os << "  gqd:          " << o.gqd.value << "        at (theta "
           << o.gqd.argmin_angles.theta << ", phi " << o.gqd.argmin_angles.phi << ")\n";
        os << "  work deficit: " << o.work_deficit.value << "  nats ("
           << o.work_deficit.value / std::log(2.0) << " bits) at (theta "
           << o.work_deficit.argmin_angles.theta << ", phi " << o.work_deficit.argmin_angles.phi
           << ")\n";
    }
    return os.str();
}

namespace {

nlohmann::ordered_json angles_json(const MeasurementAngles& a) {
    return {{"theta", a.theta}, {"phi", a.phi}};
}

}  // namespace

nlohmann::ordered_json render_json(const AnalysisReport& r) {
    nlohmann::ordered_json j;
    j["dimA"] = r.dim_a;
    j["dimB"] = r.dim_b;
    j["tolerance"] = r.tolerance;
    if (r.verdict) {
        nlohmann::ordered_json c;
        c["verdict"] = to_string(r.verdict->verdict);
        c["max_delta"] = r.verdict->max_delta;
        if (r.verdict->witness_pair)
            c["witness_pair"] = {r.verdict->witness_pair->first, r.verdict->witness_pair->second};
        else
            c["witness_pair"] = nullptr;
        c["pairs_checked"] = r.minors->pairs.size();
        j["criteria"] = c;
    } else {
        j["criteria"] = nullptr;
    }
    j["ppt_min_eigenvalue"] = r.ppt_min_eig;
    nlohmann::ordered_json g;
    g["bound"] = r.gqd.bound;
    g["lambda"] = r.gqd.lambda;
    g["lambda_prime"] = r.gqd.lambda_prime;
    g["lambda_min"] = r.gqd.lambda_min;
    g["L"] = r.gqd.L;
    j["gqd_lower_bound"] = g;
    j["work_deficit_lower_bound"] = r.wd_bound;
    if (r.oracle) {
        nlohmann::ordered_json o;
        o["discord_bits"] = r.oracle->discord.value;
        o["discord_angles"] = angles_json(r.oracle->discord.argmin_angles);
        o["gqd"] = r.oracle->gqd.value;
        o["gqd_angles"] = angles_json(r.oracle->gqd.argmin_angles);
        o["work_deficit_nats"] = r.oracle->work_deficit.value;
        o["work_deficit_bits"] = r.oracle->work_deficit.value / std::log(2.0);
        o["work_deficit_angles"] = angles_json(r.oracle->work_deficit.argmin_angles);
        o["grid"] = r.oracle->discord.grid_resolution;
        j["oracle"] = o;
    }
    return j;
}

}  // namespace discordlab
