#include "qme/qmat.hpp"

#include <algorithm>
#include <cmath>

namespace qme {

double max_abs_diff(const QubitMatrix& a, const QubitMatrix& b) {
    double m = 0.0;
    for (int i = 0; i < 4; ++i) m = std::max(m, std::abs(a.e[i] - b.e[i]));
    return m;
}

double max_abs(const QubitMatrix& m) {
    double r = 0.0;
    for (const auto& x : m.e) r = std::max(r, std::abs(x));
    return r;
}

double trace_product_real(const QubitMatrix& a, const QubitMatrix& b) {
    return (a.e[0] * b.e[0] + a.e[1] * b.e[2] + a.e[2] * b.e[1] + a.e[3] * b.e[3]).real();
}

bool is_hermitian(const QubitMatrix& m, double tol) {
    return max_abs_diff(m, m.adjoint()) <= tol;
}

bool is_unitary(const QubitMatrix& m, double tol) {
    return max_abs_diff(m * m.adjoint(), QubitMatrix::identity()) <= tol;
}

bool is_density(const QubitMatrix& m, double tol) {
    if (!is_hermitian(m)) return false;
    if (std::abs(m.trace() - Complex{1}) > tol) return false;
    const auto es = hermitian_eig(m);
    return es.lambda_minus >= -tol && es.lambda_plus >= -tol;
}

double PauliDecomposition::axis_norm() const {
    return std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]);
}

PauliDecomposition pauliDecomposeUnchecked(const QubitMatrix& m) {
    PauliDecomposition d;
    d.a0 = 0.5 * (m.e[0] + m.e[3]).real();
    d.a[0] = 0.5 * (m.e[1] + m.e[2]).real();
    d.a[1] = 0.5 * (m.e[2] - m.e[1]).imag();
    d.a[2] = 0.5 * (m.e[0] - m.e[3]).real();
    return d;
}

PauliDecomposition pauli_decompose(const QubitMatrix& m) {
    if (!is_hermitian(m))
        throw std::invalid_argument("pauli_decompose: matrix is not Hermitian");
    return pauliDecomposeUnchecked(m);
}

QubitMatrix pauli_reconstruct(const PauliDecomposition& d) {
    return Complex{d.a0} * QubitMatrix::identity() +
           Complex{d.a[0]} * QubitMatrix::sigma_x() +
           Complex{d.a[1]} * QubitMatrix::sigma_y() +
           Complex{d.a[2]} * QubitMatrix::sigma_z();
}

Eigensystem hermitian_eig(const QubitMatrix& m) {
    const auto d = pauli_decompose(m);
    const double r = d.axis_norm();
    Eigensystem es;
    if (r < kDegeneracyTol) {
        es.lambda_plus = es.lambda_minus = d.a0;
        es.proj_plus = QubitMatrix::identity();
        es.proj_minus = QubitMatrix::zero();
        es.degenerate = true;
        return es;
    }
    es.lambda_plus = d.a0 + r;
    es.lambda_minus = d.a0 - r;
    // P+- = (I +- n.sigma)/2 with n = a/|a|
    const QubitMatrix n_sigma = pauli_reconstruct({0.0, {d.a[0] / r, d.a[1] / r, d.a[2] / r}});
    es.proj_plus = 0.5 * (QubitMatrix::identity() + n_sigma);
    es.proj_minus = 0.5 * (QubitMatrix::identity() - n_sigma);
    return es;
}

QubitMatrix apply_fn_hermitian(const QubitMatrix& m,
                               const std::function<double(double)>& f) {
    const auto es = hermitian_eig(m);
    const double fp = f(es.lambda_plus);
    if (!std::isfinite(fp))
        throw std::domain_error("apply_fn_hermitian: f not finite at eigenvalue");
    if (es.degenerate) return fp * es.proj_plus;
    const double fm = f(es.lambda_minus);
    if (!std::isfinite(fm))
        throw std::domain_error("apply_fn_hermitian: f not finite at eigenvalue");
    return fp * es.proj_plus + fm * es.proj_minus;
}

QubitMatrix unitary_axis_angle(const std::array<double, 3>& axis, double theta) {
    const double norm =
        std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
    if (std::abs(norm - 1.0) > 1e-10)
        throw std::invalid_argument("unitary_axis_angle: axis is not unit length");
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const QubitMatrix n_sigma = pauli_reconstruct({0.0, axis});
    return Complex{c} * QubitMatrix::identity() + Complex{0, -s} * n_sigma;
}

}  // namespace qme
