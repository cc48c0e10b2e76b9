#include "qme/probe.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qme {

namespace {

QubitMatrix outer(const std::array<Complex, 2>& v) {
    return {{v[0] * std::conj(v[0]), v[0] * std::conj(v[1]),
             v[1] * std::conj(v[0]), v[1] * std::conj(v[1])}};
}

}  // namespace

MeasurementBasis::MeasurementBasis(double alpha, double phi) : alpha_(alpha) {
    if (!(alpha >= 0.0 && alpha <= std::numbers::pi))
        throw std::invalid_argument("MeasurementBasis: alpha must lie in [0, pi]");
    if (!std::isfinite(phi))
        throw std::invalid_argument("MeasurementBasis: phi must be finite");
    const double two_pi = 2.0 * std::numbers::pi;
    phi_ = std::fmod(phi, two_pi);
    if (phi_ < 0.0) phi_ += two_pi;
    if (phi_ >= two_pi) phi_ = 0.0;
}

BasisStates basis_states(const MeasurementBasis& basis) {
    const double c = std::cos(basis.alpha() / 2.0);
    const double s = std::sin(basis.alpha() / 2.0);
    const Complex em = std::exp(Complex{0, -basis.phi()});
    const Complex ep = std::exp(Complex{0, basis.phi()});
    return {{em * s, Complex{-c}}, {Complex{c}, ep * s}};
}

ProjectorPair projectors(const MeasurementBasis& basis) {
    const auto bs = basis_states(basis);
    return {outer(bs.chi1), outer(bs.chi2)};
}

QubitMatrix dephase(const QubitMatrix& rho, const MeasurementBasis& basis) {
    if (!is_density(rho))
        throw std::invalid_argument("dephase: input is not a density matrix");
    const auto [p1, p2] = projectors(basis);
    return p1 * rho * p1 + p2 * rho * p2;
}

std::pair<double, double> outcome_probs(const QubitMatrix& rho,
                                        const MeasurementBasis& basis) {
    if (!is_density(rho))
        throw std::invalid_argument("outcome_probs: input is not a density matrix");
    const auto [p1, p2] = projectors(basis);
    return {trace_product_real(p1, rho), trace_product_real(p2, rho)};
}

}  // namespace qme
