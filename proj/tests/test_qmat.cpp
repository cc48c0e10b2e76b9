#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qme/qmat.hpp"

using namespace qme;

namespace {

std::mt19937_64 rng(12345);

QubitMatrix random_hermitian() {
    std::uniform_real_distribution<double> s(-1.0, 1.0);
    return pauli_reconstruct({s(rng), {s(rng), s(rng), s(rng)}});
}

std::array<double, 3> random_unit_axis() {
    std::uniform_real_distribution<double> s(-1.0, 1.0);
    double x, y, z, n;
    do {
        x = s(rng), y = s(rng), z = s(rng);
        n = std::sqrt(x * x + y * y + z * z);
    } while (n < 1e-3 || n > 1.0);
    return {x / n, y / n, z / n};
}

}  // namespace

TEST_CASE("pauli_decompose on basis elements") {
    auto d = pauli_decompose(QubitMatrix::sigma_z());
    CHECK(d.a0 == doctest::Approx(0.0));
    CHECK(d.a[2] == doctest::Approx(1.0));
    CHECK(d.a[0] == doctest::Approx(0.0));

    d = pauli_decompose(QubitMatrix::identity());
    CHECK(d.a0 == doctest::Approx(1.0));
    CHECK(d.axis_norm() == doctest::Approx(0.0));

    d = pauli_decompose(0.5 * QubitMatrix::sigma_z() + 0.5 * QubitMatrix::sigma_x());
    CHECK(d.a[0] == doctest::Approx(0.5));
    CHECK(d.a[2] == doctest::Approx(0.5));
}

TEST_CASE("pauli_decompose rejects non-Hermitian input") {
    QubitMatrix m = QubitMatrix::sigma_x();
    m(0, 1) += Complex{0.0, 1e-3};
    CHECK_THROWS_AS(pauli_decompose(m), std::invalid_argument);
}

TEST_CASE("hermitian_eig spectra") {
    auto es = hermitian_eig(QubitMatrix::sigma_x());
    CHECK(es.lambda_plus == doctest::Approx(1.0));
    CHECK(es.lambda_minus == doctest::Approx(-1.0));
    CHECK(max_abs_diff(es.proj_plus,
                       0.5 * (QubitMatrix::identity() + QubitMatrix::sigma_x())) < 1e-14);

    // 0.3 I + 0.4 sigma_z + 0.3 sigma_x: |a| = 0.5
    es = hermitian_eig(pauli_reconstruct({0.3, {0.3, 0.0, 0.4}}));
    CHECK(es.lambda_plus == doctest::Approx(0.8));
    CHECK(es.lambda_minus == doctest::Approx(-0.2));
}

TEST_CASE("degenerate branch: maximally mixed") {
    auto es = hermitian_eig(0.5 * QubitMatrix::identity());
    CHECK(es.degenerate);
    CHECK(es.lambda_plus == doctest::Approx(0.5));
    CHECK(es.lambda_minus == doctest::Approx(0.5));
    CHECK(max_abs_diff(es.proj_plus, QubitMatrix::identity()) == 0.0);
    CHECK(max_abs(es.proj_minus) == 0.0);
}

TEST_CASE("apply_fn_hermitian basics") {
    const QubitMatrix m = random_hermitian();
    CHECK(max_abs_diff(apply_fn_hermitian(m, [](double x) { return x; }), m) < 1e-14);

    const QubitMatrix h = 0.5 * QubitMatrix::sigma_z();
    const QubitMatrix e = apply_fn_hermitian(h, [](double x) { return std::exp(x); });
    CHECK(e(0, 0).real() == doctest::Approx(std::exp(0.5)));
    CHECK(e(1, 1).real() == doctest::Approx(std::exp(-0.5)));

    // x ln x on a projector vanishes under 0 ln 0 = 0
    const QubitMatrix p = hermitian_eig(QubitMatrix::sigma_x()).proj_plus;
    const QubitMatrix xlnx = apply_fn_hermitian(
        p, [](double x) { return x > 0.0 ? x * std::log(x) : 0.0; });
    CHECK(max_abs(xlnx) < 1e-14);
}

TEST_CASE("apply_fn_hermitian rejects a non-finite function value") {
    CHECK_THROWS_AS(apply_fn_hermitian(QubitMatrix::sigma_z(),
                                       [](double x) { return std::log(x); }),
                    std::domain_error);
}

TEST_CASE("unitary_axis_angle closed form") {
    CHECK(max_abs_diff(unitary_axis_angle({0, 0, 1}, 0.0), QubitMatrix::identity()) <
          1e-15);
    CHECK(max_abs_diff(unitary_axis_angle({1, 0, 0}, std::numbers::pi / 2),
                       Complex{0, -1} * QubitMatrix::sigma_x()) < 1e-15);

    // (y, pi/4): real rotation matrix [[c,-s],[s,c]]
    const double c = std::sqrt(2.0) / 2.0;
    const QubitMatrix u = unitary_axis_angle({0, 1, 0}, std::numbers::pi / 4);
    CHECK(u(0, 0).real() == doctest::Approx(c));
    CHECK(u(0, 1).real() == doctest::Approx(-c));
    CHECK(u(1, 0).real() == doctest::Approx(c));
    CHECK(u(1, 1).real() == doctest::Approx(c));

    CHECK_THROWS_AS(unitary_axis_angle({0.5, 0, 0}, 1.0), std::invalid_argument);
}

TEST_CASE("spectral reconstruction and projector algebra on random input") {
    std::uniform_real_distribution<double> theta(-10.0, 10.0);
    for (int i = 0; i < 1000; ++i) {
        const QubitMatrix m = random_hermitian();
        const auto es = hermitian_eig(m);
        const QubitMatrix rebuilt =
            es.lambda_plus * es.proj_plus + es.lambda_minus * es.proj_minus;
        CHECK(max_abs_diff(rebuilt, m) < 1e-12);
        CHECK(max_abs_diff(es.proj_plus * es.proj_plus, es.proj_plus) < 1e-14);
        CHECK(max_abs(es.proj_plus * es.proj_minus) < 1e-14);
        CHECK(max_abs_diff(es.proj_plus + es.proj_minus, QubitMatrix::identity()) <
              1e-14);

        const QubitMatrix u = unitary_axis_angle(random_unit_axis(), theta(rng));
        CHECK(max_abs_diff(u * u.adjoint(), QubitMatrix::identity()) < 1e-14);

        CHECK(max_abs_diff(pauli_reconstruct(pauli_decompose(m)), m) < 1e-14);
    }
}

TEST_CASE("matrix exponential agrees with the cosh/sinh closed form") {
    for (int i = 0; i < 1000; ++i) {
        const QubitMatrix m = random_hermitian();
        const auto d = pauli_decompose(m);
        const double r = d.axis_norm();
        const QubitMatrix via_spectrum =
            apply_fn_hermitian(m, [](double x) { return std::exp(x); });
        QubitMatrix closed;
        if (r < 1e-13) {
            closed = std::exp(d.a0) * QubitMatrix::identity();
        } else {
            const QubitMatrix n_sigma =
                pauli_reconstruct({0.0, {d.a[0] / r, d.a[1] / r, d.a[2] / r}});
            closed = std::exp(d.a0) * (std::cosh(r) * QubitMatrix::identity() +
                                       std::sinh(r) * n_sigma);
        }
        CHECK(max_abs_diff(via_spectrum, closed) < 1e-12);
    }
}

TEST_CASE("predicates") {
    CHECK(is_hermitian(QubitMatrix::sigma_y()));
    CHECK(!is_hermitian(Complex{0, 1} * QubitMatrix::sigma_z()));
    CHECK(is_unitary(unitary_axis_angle({0, 0, 1}, 0.7)));
    CHECK(!is_unitary(2.0 * QubitMatrix::identity()));
    CHECK(is_density(0.5 * QubitMatrix::identity()));
    CHECK(!is_density(QubitMatrix::sigma_z()));  // trace 0
    CHECK(!is_density(pauli_reconstruct({0.5, {0.0, 0.0, 0.8}})));  // negative eigenvalue
}
