#pragma once

#include <cstddef>

#include "qme/qmat.hpp"

namespace qme {

// Units: hbar = 1, omega = 1. Energies in units of hbar*omega; the stroke
// duration in inverse-frequency units equals the dimensionless drive
// strength omega_tau.

/// omega_tau for hbar*omega = 0.5 peV, tau = 8.4 us.
inline constexpr double kDefaultOmegaTau = 6.381e-3;

enum class Stroke { I, II };

struct DriveProtocol {
    double omega_tau;
    Stroke branch;

    DriveProtocol(double omega_tau_, Stroke branch_);

    /// Stroke window: [0, tau] for stroke I, [tau, 2 tau] for stroke II.
    double start() const { return branch == Stroke::I ? 0.0 : omega_tau; }
    double end() const { return branch == Stroke::I ? omega_tau : 2.0 * omega_tau; }
};

struct StrokeUnitary {
    QubitMatrix matrix;
    DriveProtocol protocol;
    bool exact{true};
    std::size_t slices{0};  // 0 when exact
};

/// Instantaneous drive Hamiltonian (hbar*omega units):
/// (1/2)(cos(theta(t)) sigma_z + sin(theta(t)) sigma_x), with
/// theta_I(t) = pi t / (2 tau) and theta_II(t) = pi (2 tau - t) / (2 tau).
/// Throws std::invalid_argument for t outside the stroke window.
QubitMatrix hamiltonian_at(const DriveProtocol& protocol, double t);

/// Closed-form propagator from the frame co-rotating with the drive axis,
/// where the generator is constant:
///   U = exp(-i (pi/4) sigma_y) exp(-i tau H_eff),  H_eff = sigma_z/2 - (pi/4tau) sigma_y
///   V = exp(-i tau H_eff') exp(+i (pi/4) sigma_y), H_eff' = sigma_z/2 + (pi/4tau) sigma_y
StrokeUnitary propagator_exact(const DriveProtocol& protocol);

/// Midpoint time-sliced product: prod_{k=N-1..0} exp(-i H(t_k + dt/2) dt),
/// later factors applied on the left. Second-order accurate in 1/N; serves
/// as the independent oracle for propagator_exact.
StrokeUnitary propagator_sliced(const DriveProtocol& protocol, std::size_t n_slices);

/// Slice count at which the oracle error is far below physics tolerances.
inline constexpr std::size_t kDefaultSliceCount = std::size_t{1} << 16;

}  // namespace qme
