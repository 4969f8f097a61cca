#include <catch2/catch_amalgamated.hpp>

#include <multiway/continuum.hpp>

#include <cmath>
#include <numbers>

using multiway::Matrix2c;
using multiway::WaveFunction;
using Catch::Matchers::WithinAbs;

namespace {

constexpr std::complex<double> kMinusI{0.0, -1.0};

Matrix2c generator(double t) { return (kMinusI * std::complex<double>{t, 0.0}) * multiway::pauli_x(); }

}  // namespace

TEST_CASE("exact solution at reference times") {
    const auto at0 = multiway::exact_solution(0.0);
    REQUIRE(at0.c0 == std::complex<double>{1.0, 0.0});
    REQUIRE(at0.c1 == std::complex<double>{0.0, 0.0});

    const auto quarter = multiway::exact_solution(std::numbers::pi / 2.0);
    REQUIRE_THAT(quarter.c0.real(), WithinAbs(0.0, 1e-15));
    REQUIRE_THAT(quarter.c1.imag(), WithinAbs(-1.0, 1e-15));

    const auto eighth = multiway::exact_solution(std::numbers::pi / 4.0);
    REQUIRE_THAT(eighth.c0.real(), WithinAbs(std::sqrt(2.0) / 2.0, 1e-15));
    REQUIRE_THAT(eighth.c1.imag(), WithinAbs(-std::sqrt(2.0) / 2.0, 1e-15));

    REQUIRE_THROWS_AS(multiway::exact_solution(std::nan("")), std::invalid_argument);
}

TEST_CASE("exact solution keeps unit norm") {
    for (int n = 0; n <= 100; ++n) {
        const double t = 0.1 * n;
        REQUIRE_THAT(multiway::exact_solution(t).norm(), WithinAbs(1.0, 1e-12));
    }
}

TEST_CASE("schrodinger residual is small and O(h^2)") {
    REQUIRE(multiway::schrodinger_residual(0.7, 1e-4) < 1e-7);
    REQUIRE(multiway::schrodinger_residual(0.0, 1e-4) < 1e-7);
    REQUIRE(multiway::schrodinger_residual(std::numbers::pi, 1e-3) < 1e-5);

    for (double t : {0.0, 0.7, std::numbers::pi}) {
        const double coarse = multiway::schrodinger_residual(t, 1e-2);
        const double fine = multiway::schrodinger_residual(t, 2.5e-3);
        const double ratio = coarse / fine;
        REQUIRE(ratio > 8.0);
        REQUIRE(ratio < 32.0);
    }

    REQUIRE_THROWS_AS(multiway::schrodinger_residual(0.5, 0.0), std::invalid_argument);
    REQUIRE_THROWS_AS(multiway::schrodinger_residual(0.5, -1e-3), std::invalid_argument);
}

TEST_CASE("closed-form exponential on reference matrices") {
    SECTION("zero matrix") {
        REQUIRE(multiway::max_abs_diff(multiway::expm_2x2(Matrix2c{}),
                                       Matrix2c::identity()) == 0.0);
    }

    SECTION("generator of the qubit evolution") {
        const Matrix2c e = multiway::expm_2x2(generator(1.0));
        REQUIRE_THAT(e.a.real(), WithinAbs(std::cos(1.0), 1e-14));
        REQUIRE_THAT(e.a.imag(), WithinAbs(0.0, 1e-14));
        REQUIRE_THAT(e.b.imag(), WithinAbs(-std::sin(1.0), 1e-14));
        REQUIRE_THAT(e.c.imag(), WithinAbs(-std::sin(1.0), 1e-14));
        REQUIRE_THAT(e.d.real(), WithinAbs(std::cos(1.0), 1e-14));

        // e^(-iX)|0> is the analytic solution at t=1.
        const WaveFunction from_matrix = e.apply({{1.0, 0.0}, {0.0, 0.0}});
        REQUIRE(multiway::l2_error(from_matrix, multiway::exact_solution(1.0)) < 1e-14);
    }

    SECTION("diagonal matrix") {
        const Matrix2c e = multiway::expm_2x2(Matrix2c{1.0, 0.0, 0.0, 2.0});
        REQUIRE_THAT(e.a.real(), WithinAbs(std::exp(1.0), 1e-13));
        REQUIRE_THAT(e.d.real(), WithinAbs(std::exp(2.0), 2e-13));
        REQUIRE(std::abs(e.b) == 0.0);
        REQUIRE(std::abs(e.c) == 0.0);
    }

    SECTION("tiny traceless part takes the series branch") {
        const double eps = 1e-6;
        const Matrix2c e = multiway::expm_2x2(Matrix2c{eps, 0.0, 0.0, -eps});
        REQUIRE_THAT(e.a.real(), WithinAbs(std::exp(eps), 1e-15));
        REQUIRE_THAT(e.d.real(), WithinAbs(std::exp(-eps), 1e-15));
    }
}

TEST_CASE("evolution satisfies the group law") {
    for (double s : {0.0, 0.3, 1.1}) {
        for (double t : {0.2, 0.9, 2.5}) {
            const Matrix2c combined = multiway::expm_2x2(generator(s)) *
                                      multiway::expm_2x2(generator(t));
            const WaveFunction psi = combined.apply({{1.0, 0.0}, {0.0, 0.0}});
            REQUIRE(multiway::l2_error(psi, multiway::exact_solution(s + t)) < 1e-10);
        }
    }
}

TEST_CASE("limit operator basics") {
    const Matrix2c m{0.0, {0.4, 0.3}, {0.1, -0.2}, 0.5};
    REQUIRE(multiway::max_abs_diff(multiway::expm_limit(Matrix2c{}, 17),
                                   Matrix2c::identity()) == 0.0);
    REQUIRE(multiway::max_abs_diff(multiway::expm_limit(m, 1),
                                   Matrix2c::identity() + m) == 0.0);
    REQUIRE_THROWS_AS(multiway::expm_limit(m, 0), std::invalid_argument);

    REQUIRE(multiway::max_abs_diff(multiway::expm_limit(generator(1.0), 10000),
                                   multiway::expm_2x2(generator(1.0))) < 1e-3);
}

TEST_CASE("limit operator converges at first order") {
    const Matrix2c target = multiway::expm_2x2(generator(1.0));
    for (std::int64_t n : {100, 1000, 10000}) {
        const double err_n =
            multiway::max_abs_diff(multiway::expm_limit(generator(1.0), n), target);
        const double err_2n =
            multiway::max_abs_diff(multiway::expm_limit(generator(1.0), 2 * n), target);
        const double ratio = err_2n / err_n;
        REQUIRE(ratio > 0.4);
        REQUIRE(ratio < 0.6);
    }
}

TEST_CASE("l2 distance between wave functions") {
    const WaveFunction one{{1.0, 0.0}, {0.0, 0.0}};
    REQUIRE(multiway::l2_error(one, one) == 0.0);

    const WaveFunction other{{0.0, 0.0}, {0.0, -1.0}};
    REQUIRE_THAT(multiway::l2_error(one, other), WithinAbs(std::sqrt(2.0), 1e-15));

    // The K=2, level-2 normalized template against the analytic solution.
    const WaveFunction tmpl{{0.75, 0.0}, {0.0, -1.0}};
    const double err = multiway::l2_error(tmpl, multiway::exact_solution(1.0));
    REQUIRE(err > 0.0);
    REQUIRE_THAT(err,
                 WithinAbs(std::hypot(0.75 - std::cos(1.0), 1.0 - std::sin(1.0)),
                           1e-15));
}
