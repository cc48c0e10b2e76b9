#include "qme/thermo.hpp"

#include <algorithm>
#include <cmath>

namespace qme {

namespace {

double xlnx(double x) {
    return x > 0.0 ? x * std::log(x) : 0.0;
}

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

}  // namespace

ThermalContext::ThermalContext(double beta_hw_) : beta_hw(beta_hw_) {
    if (!(beta_hw > 0.0) || !std::isfinite(beta_hw))
        throw std::invalid_argument("ThermalContext: beta_hw must be positive and finite");
}

QubitMatrix gibbs_state(const QubitMatrix& h, const ThermalContext& ctx) {
    const double beta = ctx.beta_hw;
    // Shift by the smaller eigenvalue before exponentiating so large beta
    // never overflows; the shift cancels in the normalization.
    const auto es = hermitian_eig(h);
    const double shift = es.lambda_minus;
    const QubitMatrix w = apply_fn_hermitian(
        h, [beta, shift](double x) { return std::exp(-beta * (x - shift)); });
    return (1.0 / w.trace().real()) * w;
}

PartitionResult partition_and_free_energy(const QubitMatrix& h,
                                          const ThermalContext& ctx) {
    const auto es = hermitian_eig(h);
    const double beta = ctx.beta_hw;
    const double z = std::exp(-beta * es.lambda_plus) + std::exp(-beta * es.lambda_minus);
    return {z, -std::log(z) / beta};
}

double von_neumann_entropy(const QubitMatrix& rho) {
    if (!is_density(rho))
        throw std::invalid_argument("von_neumann_entropy: input is not a density matrix");
    const auto es = hermitian_eig(rho);
    if (es.degenerate) return -2.0 * xlnx(clamp01(es.lambda_plus));
    return -xlnx(clamp01(es.lambda_plus)) - xlnx(clamp01(es.lambda_minus));
}

double internal_energy(const QubitMatrix& rho, const QubitMatrix& h) {
    return trace_product_real(h, rho);
}

double divergence(const QubitMatrix& rho, const QubitMatrix& sigma) {
    if (!is_density(rho))
        throw std::invalid_argument("divergence: rho is not a density matrix");
    const auto es = hermitian_eig(sigma);
    if (es.lambda_plus < 1e-14 || es.lambda_minus < 1e-14)
        throw SingularReferenceError("divergence: reference state is singular");
    // Tr(rho ln rho) = -S(rho); Tr(rho ln sigma) via sigma's spectral log.
    const double tr_rho_ln_rho = -von_neumann_entropy(rho);
    double tr_rho_ln_sigma;
    if (es.degenerate) {
        tr_rho_ln_sigma = std::log(es.lambda_plus);
    } else {
        tr_rho_ln_sigma = std::log(es.lambda_plus) * trace_product_real(es.proj_plus, rho) +
                          std::log(es.lambda_minus) * trace_product_real(es.proj_minus, rho);
    }
    return tr_rho_ln_rho - tr_rho_ln_sigma;
}

double divergence_vs_gibbs(const QubitMatrix& rho, const QubitMatrix& h,
                           const ThermalContext& ctx) {
    // Tr(rho ln rho) - Tr(rho ln sigma) with ln sigma = -beta H - ln Z.
    const double tr_rho_ln_rho = -von_neumann_entropy(rho);
    const double ln_z = std::log(partition_and_free_energy(h, ctx).z);
    return tr_rho_ln_rho + ctx.beta_hw * internal_energy(rho, h) + ln_z;
}

double thermal_divergence(const QubitMatrix& rho, const QubitMatrix& h,
                          const ThermalContext& ctx) {
    const auto [z, f_eq] = partition_and_free_energy(h, ctx);
    return ctx.beta_hw * (internal_energy(rho, h) - f_eq) - von_neumann_entropy(rho);
}

double noneq_free_energy(const QubitMatrix& rho, const QubitMatrix& h,
                         const ThermalContext& ctx) {
    return internal_energy(rho, h) - von_neumann_entropy(rho) / ctx.beta_hw;
}

StateFunctions state_functions(const QubitMatrix& rho, const QubitMatrix& h,
                               const ThermalContext& ctx) {
    StateFunctions sf;
    sf.energy = internal_energy(rho, h);
    sf.entropy = von_neumann_entropy(rho);
    sf.f_eq = partition_and_free_energy(h, ctx).f_eq;
    sf.f_neq = sf.energy - sf.entropy / ctx.beta_hw;
    sf.divergence = divergence_vs_gibbs(rho, h, ctx);
    return sf;
}

}  // namespace qme
