#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qme/cycle.hpp"

namespace qme {

inline constexpr const char* kToolVersion = "0.1.0";

/// Inclusive endpoints over alpha in [0, pi]; endpoint-exclusive over
/// phi in [0, 2 pi).
struct SweepGrid {
    int alpha_steps;
    int phi_steps;

    SweepGrid(int alpha_steps_, int phi_steps_);

    double alpha_at(int j) const;
    double phi_at(int k) const;
};

struct SweepRow {
    double alpha;
    double phi;
    double neg_w;
    double q_m;
    double q_t;
    std::optional<double> eta;
    double d2;
    double d3;
    double d4;
    double f3;
    double f4;
    double ds_m;
    Regime regime;
};

enum class Objective { WorkOutput, Efficiency };

struct Optimum {
    double alpha;
    double phi;
    double value;
    std::size_t row_index;
};

struct SymmetryDefects {
    double work_defect;
    double eta_defect;
};

/// One-dimensional cut through the (alpha, phi) landscape: vary one angle
/// with the other held fixed. Alpha slices use alpha_steps inclusive points
/// over [0, pi]; phi slices use phi_steps endpoint-exclusive points over
/// [0, 2 pi).
struct SliceSpec {
    enum class Axis { Alpha, Phi };
    Axis axis;
    int steps;
    double fixed_value;

    SliceSpec(Axis axis_, int steps_, double fixed_value_);
};

struct SweepResult {
    double omega_tau;
    double beta_hw;
    PropagatorChoice method;
    std::optional<SweepGrid> grid;    // set for full 2-D sweeps
    std::optional<SliceSpec> slice;   // set for 1-D slices
    std::vector<SweepRow> rows;       // row-major: alpha outer, phi inner
    std::optional<Optimum> best_work;
    std::optional<Optimum> best_eta;
    std::optional<SymmetryDefects> symmetry;
};

struct NoEngineRegimeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GridNotClosedError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Evaluates run_cycle at every grid point. Rows are written into
/// pre-indexed slots, so the output is canonical row-major order no matter
/// how many workers evaluate it. Populates optima, and the symmetry
/// defects when phi_steps is even.
SweepResult sweep(double omega_tau, double beta_hw, const PropagatorChoice& method,
                  const SweepGrid& grid, unsigned workers = 1);

/// 1-D slice of the landscape for the fixed-angle curve data.
SweepResult slice(double omega_tau, double beta_hw, const PropagatorChoice& method,
                  const SliceSpec& spec, unsigned workers = 1);

/// Grid argmax of -W (all rows) or eta (Engine rows only); ties broken by
/// smallest row index. Throws NoEngineRegimeError when no Engine row exists
/// for the efficiency objective.
Optimum find_optimum(const SweepResult& result, Objective objective);

/// Alternating golden-section ascent in alpha then phi from a seed,
/// terminating when both 1-D intervals are below 1e-6.
Optimum refine(double omega_tau, double beta_hw, const PropagatorChoice& method,
               Objective objective, double alpha_seed, double phi_seed);

/// Max over the grid of |(-W)(a,p) - (-W)(pi-a, p+pi)| and the analogous
/// eta defect over row pairs that are both Engine. Requires even phi_steps.
SymmetryDefects symmetry_check(const SweepResult& result);

/// The emitted-row view of a cycle record (used for single-cycle CSV output).
SweepRow row_from_record(const CycleRecord& record);

// Emission. Numbers are written in shortest round-trip form; eta is blank
// (CSV) / null (JSON) outside the engine regime.
void write_csv(const SweepResult& result, std::ostream& out);
std::string to_json(const SweepResult& result);
std::string to_json(const CycleRecord& record);

/// Shortest decimal form that round-trips to the same double.
std::string format_double(double x);

}  // namespace qme
