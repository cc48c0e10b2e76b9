#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qme/drive.hpp"

using namespace qme;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("DriveProtocol validates omega_tau") {
    CHECK_THROWS_AS(DriveProtocol(0.0, Stroke::I), std::invalid_argument);
    CHECK_THROWS_AS(DriveProtocol(-1.0, Stroke::II), std::invalid_argument);
}

TEST_CASE("hamiltonian_at stroke endpoints") {
    const DriveProtocol p1{2.0, Stroke::I};
    CHECK(max_abs_diff(hamiltonian_at(p1, 0.0), 0.5 * QubitMatrix::sigma_z()) < 1e-15);
    CHECK(max_abs_diff(hamiltonian_at(p1, 2.0), 0.5 * QubitMatrix::sigma_x()) < 1e-15);

    const DriveProtocol p2{2.0, Stroke::II};
    CHECK(max_abs_diff(hamiltonian_at(p2, 2.0), 0.5 * QubitMatrix::sigma_x()) < 1e-15);
    // end of stroke II returns to the sigma_z form
    CHECK(max_abs_diff(hamiltonian_at(p2, 4.0), 0.5 * QubitMatrix::sigma_z()) < 1e-15);

    CHECK_THROWS_AS(hamiltonian_at(p1, 2.5), std::invalid_argument);
    CHECK_THROWS_AS(hamiltonian_at(p2, 0.5), std::invalid_argument);
}

TEST_CASE("drive rotates but never rescales the spectrum") {
    for (const Stroke branch : {Stroke::I, Stroke::II}) {
        const DriveProtocol p{1.7, branch};
        for (int i = 0; i <= 100; ++i) {
            const double t = p.start() + (p.end() - p.start()) * i / 100.0;
            const auto es = hermitian_eig(hamiltonian_at(p, t));
            CHECK(std::abs(es.lambda_plus - 0.5) < 1e-14);
            CHECK(std::abs(es.lambda_minus + 0.5) < 1e-14);
        }
    }
}

TEST_CASE("rotating-frame bookkeeping closes at the endpoint") {
    const QubitMatrix r = unitary_axis_angle({0, 1, 0}, kPi / 4);
    const QubitMatrix rotated = r * (0.5 * QubitMatrix::sigma_z()) * r.adjoint();
    CHECK(max_abs_diff(rotated, 0.5 * QubitMatrix::sigma_x()) < 1e-15);
}

TEST_CASE("propagators are unitary") {
    for (const double wt : {1e-3, 6.381e-3, 0.1, 1.0, 10.0}) {
        for (const Stroke branch : {Stroke::I, Stroke::II}) {
            const DriveProtocol p{wt, branch};
            CHECK(max_abs_diff(propagator_exact(p).matrix *
                                   propagator_exact(p).matrix.adjoint(),
                               QubitMatrix::identity()) < 1e-12);
            CHECK(max_abs_diff(propagator_sliced(p, 64).matrix *
                                   propagator_sliced(p, 64).matrix.adjoint(),
                               QubitMatrix::identity()) < 1e-12);
        }
    }
}

TEST_CASE("sudden limit: U approaches the identity as omega_tau -> 0") {
    const double wt = 6.381e-3;
    const QubitMatrix u = propagator_exact(DriveProtocol{wt, Stroke::I}).matrix;
    CHECK(max_abs_diff(u, QubitMatrix::identity()) < 2.0 * wt);
    const QubitMatrix u2 = propagator_exact(DriveProtocol{wt / 10, Stroke::I}).matrix;
    CHECK(max_abs_diff(u2, QubitMatrix::identity()) < 2.0 * wt / 10);
}

TEST_CASE("single slice is the midpoint exponential") {
    const DriveProtocol p{0.8, Stroke::I};
    const auto u = propagator_sliced(p, 1);
    CHECK(u.slices == 1);
    CHECK(max_abs_diff(u.matrix * u.matrix.adjoint(), QubitMatrix::identity()) < 1e-14);
    // generator is the midpoint Hamiltonian: conjugating it must be exact
    const QubitMatrix h_mid = hamiltonian_at(p, 0.4);
    CHECK(max_abs_diff(u.matrix * h_mid, h_mid * u.matrix) < 1e-14);
}

TEST_CASE("propagator_sliced rejects zero slices") {
    CHECK_THROWS_AS(propagator_sliced(DriveProtocol{1.0, Stroke::I}, 0),
                    std::invalid_argument);
}

TEST_CASE("midpoint product converges at second order to the closed form") {
    const DriveProtocol p{1.0, Stroke::I};
    const QubitMatrix exact = propagator_exact(p).matrix;
    double prev = max_abs_diff(exact, propagator_sliced(p, 16).matrix);
    for (std::size_t n = 32; n <= 4096; n *= 2) {
        const double err = max_abs_diff(exact, propagator_sliced(p, n).matrix);
        const double ratio = prev / err;
        CHECK(ratio > 3.5);
        CHECK(ratio < 4.5);
        prev = err;
    }
}

TEST_CASE("exact vs sliced oracle agreement") {
    CHECK(max_abs_diff(propagator_exact(DriveProtocol{1.0, Stroke::I}).matrix,
                       propagator_sliced(DriveProtocol{1.0, Stroke::I},
                                         std::size_t{1} << 16)
                           .matrix) < 1e-9);
    CHECK(max_abs_diff(propagator_exact(DriveProtocol{1.0, Stroke::II}).matrix,
                       propagator_sliced(DriveProtocol{1.0, Stroke::II},
                                         std::size_t{1} << 14)
                           .matrix) < 1e-8);
    CHECK(max_abs_diff(propagator_exact(DriveProtocol{6.381e-3, Stroke::I}).matrix,
                       propagator_sliced(DriveProtocol{6.381e-3, Stroke::I},
                                         std::size_t{1} << 16)
                           .matrix) < 1e-9);
}
