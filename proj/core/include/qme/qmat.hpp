#pragma once

#include <array>
#include <complex>
#include <functional>
#include <stdexcept>

namespace qme {

using Complex = std::complex<double>;

/// 2x2 complex matrix, row-major. The only carrier used throughout:
/// density matrices, observables, propagators, projectors.
struct QubitMatrix {
    std::array<Complex, 4> e{};

    constexpr Complex& operator()(int r, int c) { return e[2 * r + c]; }
    constexpr const Complex& operator()(int r, int c) const { return e[2 * r + c]; }

    static constexpr QubitMatrix zero() { return {}; }
    static constexpr QubitMatrix identity() {
        return {{Complex{1}, Complex{0}, Complex{0}, Complex{1}}};
    }
    static constexpr QubitMatrix sigma_x() {
        return {{Complex{0}, Complex{1}, Complex{1}, Complex{0}}};
    }
    static constexpr QubitMatrix sigma_y() {
        return {{Complex{0}, Complex{0, -1}, Complex{0, 1}, Complex{0}}};
    }
    static constexpr QubitMatrix sigma_z() {
        return {{Complex{1}, Complex{0}, Complex{0}, Complex{-1}}};
    }

    constexpr Complex trace() const { return e[0] + e[3]; }

    QubitMatrix adjoint() const {
        return {{std::conj(e[0]), std::conj(e[2]), std::conj(e[1]), std::conj(e[3])}};
    }

    friend QubitMatrix operator+(const QubitMatrix& a, const QubitMatrix& b) {
        return {{a.e[0] + b.e[0], a.e[1] + b.e[1], a.e[2] + b.e[2], a.e[3] + b.e[3]}};
    }
    friend QubitMatrix operator-(const QubitMatrix& a, const QubitMatrix& b) {
        return {{a.e[0] - b.e[0], a.e[1] - b.e[1], a.e[2] - b.e[2], a.e[3] - b.e[3]}};
    }
    friend QubitMatrix operator*(const QubitMatrix& a, const QubitMatrix& b) {
        return {{a.e[0] * b.e[0] + a.e[1] * b.e[2], a.e[0] * b.e[1] + a.e[1] * b.e[3],
                 a.e[2] * b.e[0] + a.e[3] * b.e[2], a.e[2] * b.e[1] + a.e[3] * b.e[3]}};
    }
    friend QubitMatrix operator*(Complex s, const QubitMatrix& m) {
        return {{s * m.e[0], s * m.e[1], s * m.e[2], s * m.e[3]}};
    }
    friend QubitMatrix operator*(double s, const QubitMatrix& m) {
        return Complex{s} * m;
    }
};

/// Largest entrywise |a_ij - b_ij|.
double max_abs_diff(const QubitMatrix& a, const QubitMatrix& b);
double max_abs(const QubitMatrix& m);

/// Real part of Tr(A B).
double trace_product_real(const QubitMatrix& a, const QubitMatrix& b);

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kPositivityTol = 1e-10;
inline constexpr double kDegeneracyTol = 1e-13;

bool is_hermitian(const QubitMatrix& m, double tol = kHermitianTol);
bool is_unitary(const QubitMatrix& m, double tol = kHermitianTol);
bool is_density(const QubitMatrix& m, double tol = kPositivityTol);

/// Coordinates of a Hermitian M in the Pauli basis: M = a0*I + a.sigma.
struct PauliDecomposition {
    double a0{};
    std::array<double, 3> a{};

    double axis_norm() const;
};

/// Throws std::invalid_argument if M is not Hermitian within kHermitianTol.
PauliDecomposition pauli_decompose(const QubitMatrix& m);
QubitMatrix pauli_reconstruct(const PauliDecomposition& d);

/// Spectral decomposition of a Hermitian matrix. At degeneracy
/// (|a| < kDegeneracyTol) the convention is proj_plus = I, proj_minus = 0,
/// so scalar functions reduce to f(a0)*I.
struct Eigensystem {
    double lambda_plus{};
    double lambda_minus{};
    QubitMatrix proj_plus;
    QubitMatrix proj_minus;
    bool degenerate{};
};

Eigensystem hermitian_eig(const QubitMatrix& m);

/// f(M) = f(l+) P+ + f(l-) P-. Throws std::domain_error if f is not
/// finite at an eigenvalue.
QubitMatrix apply_fn_hermitian(const QubitMatrix& m,
                               const std::function<double(double)>& f);

/// exp(-i theta n.sigma) = cos(theta) I - i sin(theta) n.sigma.
/// Throws std::invalid_argument unless |n| = 1 within 1e-10.
QubitMatrix unitary_axis_angle(const std::array<double, 3>& axis, double theta);

}  // namespace qme
