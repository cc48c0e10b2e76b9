#pragma once

#include <array>
#include <optional>

#include "qme/drive.hpp"
#include "qme/probe.hpp"
#include "qme/thermo.hpp"

namespace qme {

struct PropagatorChoice {
    enum class Kind { Exact, Sliced };
    Kind kind{Kind::Exact};
    std::size_t slices{kDefaultSliceCount};
};

struct CycleParams {
    double omega_tau{kDefaultOmegaTau};
    double beta_hw{1.0};
    MeasurementBasis basis{0.0, 0.0};
    PropagatorChoice method{};
};

enum class Regime { Engine, NonEngine };

/// Sign conventions: w_* is work done ON the system, q_* is energy flowing
/// INTO the system; engine output is -w_net. Engine regime requires
/// w_net < 0 and q_measure > 0.
struct CycleRecord {
    CycleParams params;
    std::array<QubitMatrix, 4> rho;          // rho_1..rho_4
    std::array<QubitMatrix, 4> hamiltonian;  // H_1..H_4 (H_3 = H_2, H_4 = H_1)
    std::array<StateFunctions, 4> sf;
    double w_stroke_I;
    double q_measure;
    double w_stroke_III;
    double q_thermal;
    double w_net;
    double ds_measure;  // S_3 - S_2
    double ds_thermal;  // S_1 - S_4
    std::optional<double> efficiency;
    Regime regime;
};

/// Below this, q_measure counts as zero for the engine-regime check.
inline constexpr double kFuelGuard = 1e-12;

/// Runs the four strokes rho1 -> U rho1 U+ -> dephase -> V rho3 V+ and fills
/// every bookkeeping field from direct trace formulas.
CycleRecord run_cycle(const CycleParams& params);

// Independent divergence/free-energy routes for each quantity, evaluated
// from the record's state functions. These pair with the trace-route fields
// above as the two-route cross-check.
double work_stroke_I_from_divergence(const CycleRecord& rec);
double quantum_heat_from_divergence(const CycleRecord& rec);
double work_stroke_III_from_divergence(const CycleRecord& rec);
double thermal_heat_from_divergence(const CycleRecord& rec);
double net_work_from_divergence(const CycleRecord& rec);
double net_work_from_free_energy(const CycleRecord& rec);
std::optional<double> efficiency_from_divergence(const CycleRecord& rec);
std::optional<double> efficiency_from_free_energy(const CycleRecord& rec);

}  // namespace qme
