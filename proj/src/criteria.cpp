#include "discordlab/criteria.hpp"

#include <cmath>

namespace discordlab {

std::string to_string(Verdict v) {
    return v == Verdict::NonzeroDiscord ? "NonzeroDiscord" : "Inconclusive";
}

MinorReport minor_report(const DensityMatrix& rho, double tol) {
    if (rho.dim_a() != 2)
        throw validation_error("minor_report: criterion requires dimA = 2 (got dimA = " +
                               std::to_string(rho.dim_a()) +
                               "); swap the subsystems explicitly to test the other side");
    if (!(tol > 0.0)) throw validation_error("minor_report: tolerance must be positive");

    const BipartiteMatrix pt = partial_transpose(rho);
    MinorReport report;
    report.tolerance = tol;
    const int dim = rho.dim();
    report.pairs.reserve(static_cast<size_t>(dim) * (dim - 1) / 2);
    for (int n = 1; n <= dim; ++n)
        for (int m = n + 1; m <= dim; ++m) {
            MinorPair pair;
            pair.n = n;
            pair.m = m;
            pair.pm_rho = principal_minor_2(rho.mat(), n, m);
            pair.pm_rho_tb = principal_minor_2(pt.mat, n, m);
            pair.delta = std::abs(pair.pm_rho - pair.pm_rho_tb);
            if (pair.delta > report.max_delta) {
                report.max_delta = pair.delta;
                report.witness_pair = {n, m};
            }
            report.pairs.push_back(pair);
        }
    return report;
}

CriterionVerdict discord_witness(const DensityMatrix& rho, double tol) {
    const MinorReport report = minor_report(rho, tol);
    CriterionVerdict verdict;
    verdict.max_delta = report.max_delta;
    if (report.max_delta > tol) {
        verdict.verdict = Verdict::NonzeroDiscord;
        verdict.witness_pair = report.witness_pair;
    }
    return verdict;
}

double ppt_min_eigenvalue(const DensityMatrix& rho) {
    return eigenvalues_descending(partial_transpose(rho).mat).back();
}

}  // namespace discordlab
