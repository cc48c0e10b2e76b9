#pragma once

#include <stdexcept>

#include "qme/qmat.hpp"

namespace qme {

struct ThermalContext {
    double beta_hw;  // dimensionless inverse temperature beta * hbar * omega

    explicit ThermalContext(double beta_hw_);
};

/// Reference Gibbs state with an eigenvalue below the full-rank guard.
struct SingularReferenceError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// sigma_eq = e^{-beta H} / Tr(e^{-beta H}).
QubitMatrix gibbs_state(const QubitMatrix& h, const ThermalContext& ctx);

struct PartitionResult {
    double z;     // Tr(e^{-beta H})
    double f_eq;  // -ln(Z)/beta, hbar*omega units
};

PartitionResult partition_and_free_energy(const QubitMatrix& h,
                                          const ThermalContext& ctx);

/// S = -Tr(rho ln rho) in nats; eigenvalues clamped to [0,1], 0 ln 0 = 0.
double von_neumann_entropy(const QubitMatrix& rho);

/// Tr(H rho).
double internal_energy(const QubitMatrix& rho, const QubitMatrix& h);

/// Kullback-Leibler-Umegaki divergence Tr[rho (ln rho - ln sigma)], via
/// spectral logarithms. Throws SingularReferenceError if sigma has an
/// eigenvalue < 1e-14 (the divergence may be infinite).
double divergence(const QubitMatrix& rho, const QubitMatrix& sigma);

/// D(rho || gibbs(H)) by Tr[rho (ln rho - ln sigma)] with the reference log
/// taken analytically, ln sigma_eq = -beta H - ln Z. Immune to the
/// cancellation that hits the spectral log of sigma at large beta.
double divergence_vs_gibbs(const QubitMatrix& rho, const QubitMatrix& h,
                           const ThermalContext& ctx);

/// Same quantity by the energy-entropy route beta (E - F_eq) - S.
double thermal_divergence(const QubitMatrix& rho, const QubitMatrix& h,
                          const ThermalContext& ctx);

/// F = E - S/beta.
double noneq_free_energy(const QubitMatrix& rho, const QubitMatrix& h,
                         const ThermalContext& ctx);

/// All per-state bookkeeping in one record.
struct StateFunctions {
    double energy;      // Tr(H rho), hbar*omega
    double entropy;     // nats
    double f_eq;        // hbar*omega
    double f_neq;       // hbar*omega
    double divergence;  // nats, divergence_vs_gibbs route
};

StateFunctions state_functions(const QubitMatrix& rho, const QubitMatrix& h,
                               const ThermalContext& ctx);

}  // namespace qme
