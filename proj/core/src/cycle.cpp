#include "qme/cycle.hpp"

namespace qme {

CycleRecord run_cycle(const CycleParams& params) {
    const ThermalContext ctx{params.beta_hw};
    const DriveProtocol proto_I{params.omega_tau, Stroke::I};
    const DriveProtocol proto_II{params.omega_tau, Stroke::II};

    const QubitMatrix h1 = 0.5 * QubitMatrix::sigma_z();
    const QubitMatrix h2 = 0.5 * QubitMatrix::sigma_x();

    const QubitMatrix u = params.method.kind == PropagatorChoice::Kind::Exact
                              ? propagator_exact(proto_I).matrix
                              : propagator_sliced(proto_I, params.method.slices).matrix;
    const QubitMatrix v = params.method.kind == PropagatorChoice::Kind::Exact
                              ? propagator_exact(proto_II).matrix
                              : propagator_sliced(proto_II, params.method.slices).matrix;

    CycleRecord rec{.params = params,
                    .rho = {},
                    .hamiltonian = {h1, h2, h2, h1},
                    .sf = {},
                    .w_stroke_I = 0,
                    .q_measure = 0,
                    .w_stroke_III = 0,
                    .q_thermal = 0,
                    .w_net = 0,
                    .ds_measure = 0,
                    .ds_thermal = 0,
                    .efficiency = std::nullopt,
                    .regime = Regime::NonEngine};

    rec.rho[0] = gibbs_state(h1, ctx);
    rec.rho[1] = u * rec.rho[0] * u.adjoint();
    rec.rho[2] = dephase(rec.rho[1], params.basis);
    rec.rho[3] = v * rec.rho[2] * v.adjoint();

    for (int i = 0; i < 4; ++i)
        rec.sf[i] = state_functions(rec.rho[i], rec.hamiltonian[i], ctx);

    rec.w_stroke_I = rec.sf[1].energy - rec.sf[0].energy;
    rec.q_measure = rec.sf[2].energy - rec.sf[1].energy;
    rec.w_stroke_III = rec.sf[3].energy - rec.sf[2].energy;
    rec.q_thermal = rec.sf[0].energy - rec.sf[3].energy;
    rec.w_net = rec.w_stroke_I + rec.w_stroke_III;
    rec.ds_measure = rec.sf[2].entropy - rec.sf[1].entropy;
    rec.ds_thermal = rec.sf[0].entropy - rec.sf[3].entropy;

    if (rec.w_net < 0.0 && rec.q_measure > kFuelGuard) {
        rec.regime = Regime::Engine;
        rec.efficiency = -rec.w_net / rec.q_measure;
    }
    return rec;
}

double work_stroke_I_from_divergence(const CycleRecord& rec) {
    const double beta = rec.params.beta_hw;
    return rec.sf[1].divergence / beta + rec.sf[1].f_eq - rec.sf[0].f_eq;
}

double quantum_heat_from_divergence(const CycleRecord& rec) {
    const double beta = rec.params.beta_hw;
    return (rec.sf[2].divergence - rec.sf[1].divergence + rec.ds_measure) / beta;
}

double work_stroke_III_from_divergence(const CycleRecord& rec) {
    const double beta = rec.params.beta_hw;
    return (rec.sf[3].divergence - rec.sf[2].divergence) / beta + rec.sf[3].f_eq -
           rec.sf[2].f_eq;
}

double thermal_heat_from_divergence(const CycleRecord& rec) {
    const double beta = rec.params.beta_hw;
    return (-rec.sf[3].divergence + rec.ds_thermal) / beta;
}

double net_work_from_divergence(const CycleRecord& rec) {
    const double beta = rec.params.beta_hw;
    return (rec.sf[3].divergence + rec.sf[1].divergence - rec.sf[2].divergence) / beta;
}

double net_work_from_free_energy(const CycleRecord& rec) {
    return rec.sf[1].f_neq - rec.sf[0].f_neq + rec.sf[3].f_neq - rec.sf[2].f_neq;
}

std::optional<double> efficiency_from_divergence(const CycleRecord& rec) {
    if (rec.regime != Regime::Engine) return std::nullopt;
    const double d2 = rec.sf[1].divergence;
    const double d3 = rec.sf[2].divergence;
    const double d4 = rec.sf[3].divergence;
    return (d3 - d4 - d2) / (d3 - d2 + rec.ds_measure);
}

std::optional<double> efficiency_from_free_energy(const CycleRecord& rec) {
    if (rec.regime != Regime::Engine) return std::nullopt;
    const double beta = rec.params.beta_hw;
    const double num = rec.sf[0].f_neq - rec.sf[3].f_neq - rec.ds_measure / beta;
    const double den = rec.sf[2].f_neq - rec.sf[1].f_neq + rec.ds_measure / beta;
    return 1.0 + num / den;
}

}  // namespace qme
