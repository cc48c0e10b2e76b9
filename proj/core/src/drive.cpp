#include "qme/drive.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qme {

namespace {

constexpr double kPi = std::numbers::pi;

double drive_angle(const DriveProtocol& p, double t) {
    const double tau = p.omega_tau;
    return p.branch == Stroke::I ? kPi * t / (2.0 * tau)
                                 : kPi * (2.0 * tau - t) / (2.0 * tau);
}

QubitMatrix exp_minus_i_h_dt(const QubitMatrix& h, double dt) {
    // h = a0 I + a.sigma; exp(-i h dt) = e^{-i a0 dt} exp(-i |a| dt n.sigma)
    const auto d = pauli_decompose(h);
    const double r = d.axis_norm();
    const Complex phase = std::exp(Complex{0, -d.a0 * dt});
    if (r < kDegeneracyTol) return phase * QubitMatrix::identity();
    return phase *
           unitary_axis_angle({d.a[0] / r, d.a[1] / r, d.a[2] / r}, r * dt);
}

}  // namespace

DriveProtocol::DriveProtocol(double omega_tau_, Stroke branch_)
    : omega_tau(omega_tau_), branch(branch_) {
    if (!(omega_tau > 0.0) || !std::isfinite(omega_tau))
        throw std::invalid_argument("DriveProtocol: omega_tau must be positive");
}

QubitMatrix hamiltonian_at(const DriveProtocol& protocol, double t) {
    if (t < protocol.start() || t > protocol.end())
        throw std::invalid_argument("hamiltonian_at: t outside the stroke window");
    const double theta = drive_angle(protocol, t);
    return 0.5 * (std::cos(theta) * QubitMatrix::sigma_z() +
                  std::sin(theta) * QubitMatrix::sigma_x());
}

StrokeUnitary propagator_exact(const DriveProtocol& protocol) {
    const double tau = protocol.omega_tau;
    const double wy = kPi / (4.0 * tau);  // |theta_dot|/2
    const double sy = protocol.branch == Stroke::I ? -wy : wy;
    // H_eff = (1/2) sigma_z + sy sigma_y
    const double r = std::sqrt(0.25 + sy * sy);
    const QubitMatrix rotor =
        unitary_axis_angle({0.0, sy / r, 0.5 / r}, r * tau);
    const QubitMatrix quarter_turn = unitary_axis_angle({0.0, 1.0, 0.0}, kPi / 4.0);
    QubitMatrix u;
    if (protocol.branch == Stroke::I) {
        u = quarter_turn * rotor;
    } else {
        u = rotor * quarter_turn.adjoint();
    }
    return {u, protocol, true, 0};
}

StrokeUnitary propagator_sliced(const DriveProtocol& protocol, std::size_t n_slices) {
    if (n_slices == 0)
        throw std::invalid_argument("propagator_sliced: slice count must be >= 1");
    const double dt = protocol.omega_tau / static_cast<double>(n_slices);
    QubitMatrix u = QubitMatrix::identity();
    for (std::size_t k = 0; k < n_slices; ++k) {
        const double t = protocol.start() + (static_cast<double>(k) + 0.5) * dt;
        u = exp_minus_i_h_dt(hamiltonian_at(protocol, t), dt) * u;
    }
    return {u, protocol, false, n_slices};
}

}  // namespace qme
