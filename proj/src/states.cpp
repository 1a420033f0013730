#include "discordlab/states.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "discordlab/rng.hpp"

namespace discordlab {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

// Feasibility slack for family parameters, so grid points like 50 * 0.01 that
// land one ulp outside a closed range still construct. State validation stays
// the hard gate.
constexpr double kParamSlack = 1e-12;

ComplexMatrix projector(const std::vector<cplx>& v) { return ComplexMatrix::outer(v, v); }

std::vector<cplx> bell_vector(BellKind kind) {
    switch (kind) {
        case BellKind::psi_plus:
            return {0.0, kInvSqrt2, kInvSqrt2, 0.0};
        case BellKind::psi_minus:
            return {0.0, kInvSqrt2, -kInvSqrt2, 0.0};
        case BellKind::phi_plus:
            return {kInvSqrt2, 0.0, 0.0, kInvSqrt2};
        case BellKind::phi_minus:
            return {kInvSqrt2, 0.0, 0.0, -kInvSqrt2};
    }
    throw validation_error("bell: unknown kind");
}

}  // namespace

BellKind bell_kind_from_string(const std::string& name) {
    if (name == "psi+") return BellKind::psi_plus;
    if (name == "psi-") return BellKind::psi_minus;
    if (name == "phi+") return BellKind::phi_plus;
    if (name == "phi-") return BellKind::phi_minus;
    throw validation_error("bell: unknown kind '" + name + "' (want psi+, psi-, phi+ or phi-)");
}

std::string to_string(BellKind kind) {
    switch (kind) {
        case BellKind::psi_plus: return "psi+";
        case BellKind::psi_minus: return "psi-";
        case BellKind::phi_plus: return "phi+";
        case BellKind::phi_minus: return "phi-";
    }
    return "?";
}

DensityMatrix werner(double a) {
    if (!(a >= -kParamSlack && a <= 1.0 + kParamSlack))
        throw validation_error("werner: parameter a must lie in [0, 1]");
    a = std::clamp(a, 0.0, 1.0);
    ComplexMatrix m = projector(bell_vector(BellKind::psi_minus));
    m *= a;
    const double background = (1.0 - a) / 4.0;
    for (int i = 0; i < 4; ++i) m(i, i) += background;
    return DensityMatrix(std::move(m), 2, 2);
}

DensityMatrix bell(BellKind kind) {
    return DensityMatrix(projector(bell_vector(kind)), 2, 2);
}

DensityMatrix bell_mixture(double b) {
    if (!(b >= -kParamSlack && b <= 1.0 + kParamSlack))
        throw validation_error("bell_mixture: parameter b must lie in [0, 1]");
    b = std::clamp(b, 0.0, 1.0);
    ComplexMatrix m = projector(bell_vector(BellKind::psi_minus));
    m *= b;
    ComplexMatrix phi = projector(bell_vector(BellKind::phi_plus));
    phi *= (1.0 - b);
    m += phi;
    return DensityMatrix(std::move(m), 2, 2);
}

DensityMatrix uc_family(double u, double c) {
    const double f = uc_f(u, c);
    if (!(u >= -kParamSlack && u <= 0.5 + kParamSlack) ||
        !(c >= -kParamSlack && c <= 1.0 + kParamSlack) ||
        !(f >= -kParamSlack && f <= 1.0 / 3.0 + kParamSlack))
        throw validation_error("uc_family: infeasible parameters u=" + std::to_string(u) +
                               " c=" + std::to_string(c) + " (f=" + std::to_string(f) +
                               " must lie in [0, 1/3])");
    // Basis order |00>,|01>,|02>,|10>,|11>,|12>. The Bell-like vectors live in
    // the span of B's first two levels.
    ComplexMatrix m(6);
    m(0, 0) = f;                  // |00><00| from phi+ + phi-
    m(4, 4) = f;                  // |11><11|
    m(2, 2) = u;                  // |02><02|
    m(5, 5) = u;                  // |12><12|
    m(1, 1) = (f + c) / 2.0;      // |01><01| from psi+ and psi-
    m(3, 3) = (f + c) / 2.0;      // |10><10|
    m(1, 3) = (f - c) / 2.0;      // |01><10| cross terms
    m(3, 1) = (f - c) / 2.0;
    return DensityMatrix(std::move(m), 2, 3);
}

DensityMatrix max_entangled(int d) {
    if (d < 2 || d > 8)
        throw validation_error("max_entangled: d must lie in [2, 8]");
    std::vector<cplx> v(static_cast<size_t>(d) * d, 0.0);
    const double amp = 1.0 / std::sqrt(static_cast<double>(d));
    for (int i = 0; i < d; ++i) v[static_cast<size_t>(i) * d + i] = amp;
    return DensityMatrix(projector(v), d, d);
}

DensityMatrix zero_discord(const std::vector<double>& p, MeasurementAngles basis,
                           const std::vector<DensityMatrix>& sigmas) {
    if (p.size() != 2 || sigmas.size() != 2)
        throw validation_error("zero_discord: need exactly two weights and two B-side states");
    if (!(p[0] >= 0.0 && p[1] >= 0.0) || std::abs(p[0] + p[1] - 1.0) > kPolicy.trace_tol)
        throw validation_error("zero_discord: weights must be nonnegative and sum to 1");
    const int nb = sigmas[0].dim();
    if (sigmas[1].dim() != nb)
        throw validation_error("zero_discord: B-side states must share a dimension");

    const auto pair = bloch_pair(basis);
    ComplexMatrix m(2 * nb);
    for (int k = 0; k < 2; ++k) {
        if (p[k] == 0.0) continue;
        ComplexMatrix proj_a(2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) proj_a(i, j) = pair[k][i] * std::conj(pair[k][j]);
        ComplexMatrix term = kron(proj_a, sigmas[k].mat());
        term *= p[k];
        m += term;
    }
    return DensityMatrix(std::move(m), 2, nb);
}

DensityMatrix random_density(int dim, int rank, uint64_t seed) {
    if (dim < 1 || rank < 1 || rank > dim)
        throw validation_error("random_density: need 1 <= rank <= dim");
    SplitMix64 rng(seed);
    std::vector<std::vector<cplx>> g(dim, std::vector<cplx>(rank));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < rank; ++j) {
            const double re = rng.gaussian();
            const double im = rng.gaussian();
            g[i][j] = cplx{re, im};
        }
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i)
        for (int k = 0; k < dim; ++k) {
            cplx s{};
            for (int j = 0; j < rank; ++j) s += g[i][j] * std::conj(g[k][j]);
            m(i, k) = s;
        }
    const double tr = m.trace().real();
    m *= cplx{1.0 / tr, 0.0};
    // Symmetrize away the last bits of rounding so validation sees an exactly
    // Hermitian matrix.
    for (int i = 0; i < dim; ++i) {
        m(i, i) = cplx{m(i, i).real(), 0.0};
        for (int k = i + 1; k < dim; ++k) {
            const cplx avg = 0.5 * (m(i, k) + std::conj(m(k, i)));
            m(i, k) = avg;
            m(k, i) = std::conj(avg);
        }
    }
    return DensityMatrix(std::move(m), dim, 1);
}

DensityMatrix random_bipartite(int dim_a, int dim_b, uint64_t seed) {
    DensityMatrix flat = random_density(dim_a * dim_b, dim_a * dim_b, seed);
    return DensityMatrix(flat.mat(), dim_a, dim_b);
}

DensityMatrix random_zero_discord(int dim_b, uint64_t seed) {
    SplitMix64 rng(seed);
    const double p0 = rng.uniform();
    MeasurementAngles basis{rng.uniform() * 3.14159265358979323846,
                            rng.uniform() * 6.28318530717958647692};
    const int rank0 = 1 + static_cast<int>(rng.next() % static_cast<uint64_t>(dim_b));
    const int rank1 = 1 + static_cast<int>(rng.next() % static_cast<uint64_t>(dim_b));
    std::vector<DensityMatrix> sigmas{random_density(dim_b, rank0, rng.next()),
                                      random_density(dim_b, rank1, rng.next())};
    return zero_discord({p0, 1.0 - p0}, basis, sigmas);
}

void write_state(std::ostream& os, const DensityMatrix& rho) {
    char buf[64];
    os << "{\n  \"dimA\": " << rho.dim_a() << ",\n  \"dimB\": " << rho.dim_b()
       << ",\n  \"entries\": [\n";
    const int n = rho.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const cplx& x = rho.mat()(i, j);
            std::snprintf(buf, sizeof buf, "    [%.17g, %.17g]", x.real(), x.imag());
            os << buf << ((i == n - 1 && j == n - 1) ? "\n" : ",\n");
        }
    os << "  ]\n}\n";
}

void write_state_file(const std::string& path, const DensityMatrix& rho) {
    std::ofstream os(path);
    if (!os) throw validation_error("write_state_file: cannot open '" + path + "' for writing");
    write_state(os, rho);
    if (!os.good()) throw validation_error("write_state_file: write to '" + path + "' failed");
}

DensityMatrix read_state(std::istream& is) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(is);
    } catch (const nlohmann::json::parse_error& e) {
        throw validation_error(std::string("state file: malformed JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("dimA") || !j.contains("dimB") || !j.contains("entries"))
        throw validation_error("state file: need object with dimA, dimB and entries fields");
    if (!j["dimA"].is_number_integer() || !j["dimB"].is_number_integer())
        throw validation_error("state file: dimA and dimB must be integers");
    const int dim_a = j["dimA"].get<int>();
    const int dim_b = j["dimB"].get<int>();
    if (dim_a < 1 || dim_b < 1)
        throw validation_error("state file: dimA and dimB must be positive");
    const auto& entries = j["entries"];
    const size_t n = static_cast<size_t>(dim_a) * dim_b;
    if (!entries.is_array() || entries.size() != n * n)
        throw validation_error("state file: entries must hold " + std::to_string(n * n) +
                               " [re, im] pairs, found " + std::to_string(entries.size()));
    ComplexMatrix m(static_cast<int>(n));
    for (size_t k = 0; k < entries.size(); ++k) {
        const auto& e = entries[k];
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
            throw validation_error("state file: entries[" + std::to_string(k) +
                                   "] is not an [re, im] pair");
        m(static_cast<int>(k / n), static_cast<int>(k % n)) =
            cplx{e[0].get<double>(), e[1].get<double>()};
    }
    return DensityMatrix(std::move(m), dim_a, dim_b);
}

DensityMatrix read_state_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw validation_error("read_state_file: cannot open '" + path + "'");
    return read_state(is);
}

}  // namespace discordlab
