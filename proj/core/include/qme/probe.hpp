#pragma once

#include <array>
#include <utility>

#include "qme/qmat.hpp"

namespace qme {

/// Projective measurement direction on the Bloch sphere: colatitude alpha
/// from the z-axis, longitude phi from the x-axis. phi is normalized into
/// [0, 2 pi); alpha outside [0, pi] is rejected, not clamped.
class MeasurementBasis {
  public:
    MeasurementBasis(double alpha, double phi);

    double alpha() const { return alpha_; }
    double phi() const { return phi_; }

  private:
    double alpha_;
    double phi_;
};

struct BasisStates {
    std::array<Complex, 2> chi1;
    std::array<Complex, 2> chi2;
};

struct ProjectorPair {
    QubitMatrix p1;
    QubitMatrix p2;
};

/// chi1 = e^{-i phi} sin(a/2)|up> - cos(a/2)|down>,
/// chi2 = cos(a/2)|up> + e^{i phi} sin(a/2)|down>,
/// with |up> = (1,0), |down> = (0,1) the +-1 eigenvectors of sigma_z.
/// Global phases follow these formulas verbatim.
BasisStates basis_states(const MeasurementBasis& basis);

ProjectorPair projectors(const MeasurementBasis& basis);

/// Unread-outcome measurement channel: rho -> p1 rho p1 + p2 rho p2.
/// Throws std::invalid_argument if rho is not a density matrix.
QubitMatrix dephase(const QubitMatrix& rho, const MeasurementBasis& basis);

/// (Tr(p1 rho), Tr(p2 rho)).
std::pair<double, double> outcome_probs(const QubitMatrix& rho,
                                        const MeasurementBasis& basis);

}  // namespace qme
