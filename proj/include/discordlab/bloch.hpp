#pragma once

#include <array>
#include <complex>

namespace discordlab {

/// Direction of a rank-1 projective measurement on a qubit. theta in [0, pi],
/// phi in [0, 2*pi).
struct MeasurementAngles {
    double theta = 0.0;
    double phi = 0.0;
};

/// The orthonormal qubit pair for the given Bloch angles:
///   |v0> = (cos(theta/2), e^{i phi} sin(theta/2))
///   |v1> = (-sin(theta/2), e^{i phi} cos(theta/2))
inline std::array<std::array<std::complex<double>, 2>, 2> bloch_pair(MeasurementAngles a) {
    const double c = std::cos(a.theta / 2.0);
    const double s = std::sin(a.theta / 2.0);
    const std::complex<double> e{std::cos(a.phi), std::sin(a.phi)};
    return {{{std::complex<double>(c, 0.0), e * s}, {std::complex<double>(-s, 0.0), e * c}}};
}

}  // namespace discordlab
