#include <doctest.h>

#include <cmath>
#include <numbers>

#include "test_support.hpp"
#include "ybcorr/yang_baxter.hpp"

using namespace ybcorr;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("TLA generator matrices") {
    SUBCASE("U1 at phi=0") {
        const Matrix u = build_U({TlaFamily::U1, 0.0});
        Matrix expected = Matrix::Zero(4, 4);
        expected(0, 0) = expected(3, 3) = expected(0, 3) = expected(3, 0) = 1.0;
        CHECK(max_abs(u - expected) == 0.0);
        CHECK(std::abs(u.trace() - Complex{2.0, 0.0}) == 0.0);  // Tr U1 = d
    }

    SUBCASE("U3 at phi=0, eps=+1") {
        const Matrix u = build_U({TlaFamily::U3, 0.0, +1});
        Matrix expected(4, 4);
        expected << 1, 0, 0, 1,
                    0, 1, kImag, 0,
                    0, -kImag, 1, 0,
                    1, 0, 0, 1;
        expected /= std::numbers::sqrt2;
        CHECK(max_abs(u - expected) < 1e-16);
    }

    SUBCASE("Hermitian for all families and angles") {
        for (TlaFamily f : {TlaFamily::U1, TlaFamily::U2, TlaFamily::U3})
            for (double phi : {0.0, 0.7, pi / 2, 2.9})
                for (int eps : {+1, -1}) {
                    const Matrix u = build_U({f, phi, eps});
                    CHECK(max_abs(u - u.adjoint()) == 0.0);
                }
    }

    SUBCASE("U^2 = d U") {
        for (TlaFamily f : {TlaFamily::U1, TlaFamily::U2, TlaFamily::U3}) {
            const Matrix u = build_U({f, 1.3, -1});
            CHECK(max_abs(u * u - loop_d(f) * u) < 1e-12);
        }
    }
}

TEST_CASE("check_tla") {
    SUBCASE("U1 family, 3 sites") {
        const TlaReport r = check_tla(TlaFamily::U1, pi / 4, +1, 3);
        CHECK(r.projector_residual < 1e-12);
        CHECK(r.idempotent_residual < 1e-12);
        CHECK(!r.far_commutator_residual.has_value());
    }

    SUBCASE("U3 family, d=sqrt2") {
        const TlaReport r = check_tla(TlaFamily::U3, 1.0, -1, 3);
        CHECK(r.max_residual() < 1e-12);
    }

    SUBCASE("far commutation on 4 sites is exact") {
        for (TlaFamily f : {TlaFamily::U1, TlaFamily::U2, TlaFamily::U3}) {
            const TlaReport r = check_tla(f, 0.9, +1, 4);
            REQUIRE(r.far_commutator_residual.has_value());
            CHECK(*r.far_commutator_residual == 0.0);
            CHECK(r.max_residual() < 1e-12);
        }
    }

    SUBCASE("rejects unsupported site counts") {
        CHECK_THROWS_AS(check_tla(TlaFamily::U1, 0.0, +1, 5), DomainError);
    }
}

TEST_CASE("R-matrix construction") {
    SUBCASE("theta = 0 limits") {
        CHECK(max_abs(build_R({RFamily::R1, 0.0, 1.2}) - Matrix::Identity(4, 4)) == 0.0);
        CHECK(max_abs(build_R({RFamily::R2, 0.0, 0.4}) - Matrix::Identity(4, 4)) == 0.0);
        CHECK(max_abs(build_R({RFamily::R3, 0.0, 0.4}) + Matrix::Identity(4, 4)) == 0.0);
    }

    SUBCASE("R1(pi/2, pi/4) outer block") {
        const Matrix r = build_R({RFamily::R1, pi / 2, pi / 4});
        const double c = std::cos(pi / 4), s = std::sin(pi / 4);
        const Complex eip = std::exp(kImag * (pi / 4));
        CHECK(std::abs(r(0, 0) - c) < 1e-15);
        CHECK(std::abs(r(3, 3) - c) < 1e-15);
        CHECK(std::abs(r(0, 3) + kImag * s * eip) < 1e-15);
        CHECK(std::abs(r(3, 0) + kImag * s * std::conj(eip)) < 1e-15);
        // inner block diagonal e^{i theta/2}
        CHECK(std::abs(r(1, 1) - (c + kImag * s)) < 1e-15);
        CHECK(std::abs(r(1, 2)) == 0.0);
    }

    SUBCASE("unitarity over a theta, phi grid") {
        for (RFamily f : {RFamily::R1, RFamily::R2, RFamily::R3})
            for (int i = 0; i < 16; ++i)
                for (int j = 0; j < 16; ++j)
                    for (int eps : {+1, -1}) {
                        const Matrix r =
                            build_R({f, 2 * pi * i / 16, 2 * pi * j / 16, eps});
                        CHECK(max_abs(r * r.adjoint() - Matrix::Identity(4, 4)) < 1e-12);
                    }
    }
}

TEST_CASE("constant YBE residual") {
    CHECK(check_constant_ybe(Matrix::Identity(4, 4)) == 0.0);

    Matrix swap = Matrix::Zero(4, 4);
    swap(0, 0) = swap(1, 2) = swap(2, 1) = swap(3, 3) = 1.0;
    CHECK(check_constant_ybe(swap) == 0.0);

    // braid relation fails at generic theta; residual at pi/2 is 1/(2 sqrt 2)
    const double generic = check_constant_ybe(build_R({RFamily::R1, pi / 2, 0.0}));
    CHECK(generic == doctest::Approx(1.0 / (2.0 * std::numbers::sqrt2)).epsilon(1e-12));

    // braid limits: R1/R2 at theta=pi (R ~ I - U, d=2), R3 at theta=pi/2
    CHECK(check_constant_ybe(build_R({RFamily::R1, pi, 0.3})) < 1e-12);
    CHECK(check_constant_ybe(build_R({RFamily::R2, pi, 1.1})) < 1e-12);
    CHECK(check_constant_ybe(build_R({RFamily::R3, pi / 2, 0.3})) < 1e-12);
    CHECK(check_constant_ybe(build_R({RFamily::R3, pi, 0.3}))
          == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("theta_of_mu") {
    CHECK(theta_of_mu(RFamily::R1, 0.0) == 0.0);
    CHECK(theta_of_mu(RFamily::R1, 1.0) == doctest::Approx(pi / 2).epsilon(1e-14));
    CHECK(theta_of_mu(RFamily::R3, 0.0) == 0.0);

    SUBCASE("monotone in mu >= 0 for both maps") {
        for (RFamily f : {RFamily::R1, RFamily::R3}) {
            double prev = -1.0;
            for (int i = 0; i <= 60; ++i) {
                const double theta = theta_of_mu(f, i * 0.1);
                CHECK(theta >= prev);
                CHECK(theta >= 0.0);
                CHECK(theta <= pi);
                prev = theta;
            }
        }
    }
}

TEST_CASE("spectral YBE") {
    const std::vector<double> grid = {0.3, 0.7, 1.1};

    SUBCASE("mu = nu = 0 is exact for every family") {
        for (RFamily f : {RFamily::R1, RFamily::R2, RFamily::R3})
            CHECK(check_spectral_ybe(f, {0.0, 0.0}, CompositionRule::Additive) < 1e-15);
    }

    SUBCASE("R3 satisfies the additive relation") {
        for (double mu : grid)
            for (double nu : grid) {
                CHECK(check_spectral_ybe(RFamily::R3, {mu, nu},
                                         CompositionRule::Additive) < 1e-10);
                CHECK(check_spectral_ybe(RFamily::R3, {mu, nu},
                                         CompositionRule::Additive, 0.4) < 1e-10);
            }
    }

    SUBCASE("R1/R2 additive relation also holds; rational scan does not") {
        for (RFamily f : {RFamily::R1, RFamily::R2}) {
            double additive = 0.0, rational_best = 1e300;
            for (double mu : grid)
                for (double nu : grid) {
                    additive = std::max(
                        additive,
                        check_spectral_ybe(f, {mu, nu}, CompositionRule::Additive));
                    for (double b2 : {-1.0, 1.0})
                        rational_best = std::min(
                            rational_best, check_spectral_ybe(f, {mu, nu, b2},
                                                              CompositionRule::Rational));
                }
            CHECK(additive < 1e-10);
            CHECK(rational_best > 1e-3);
        }
    }

    SUBCASE("rational composition pole") {
        CHECK_THROWS_AS(check_spectral_ybe(RFamily::R1, {1.0, 1.0, -1.0},
                                           CompositionRule::Rational),
                        SingularCompositionError);
    }
}

TEST_CASE("decompose_R") {
    const Matrix id = Matrix::Identity(4, 4);

    SUBCASE("identity fits with a=1, b=0") {
        const Decomposition d = decompose_R(id, build_U({TlaFamily::U1, 0.3}));
        CHECK(std::abs(d.a - Complex{1.0, 0.0}) < 1e-14);
        CHECK(std::abs(d.b) < 1e-14);
        CHECK(d.residual < 1e-14);
    }

    SUBCASE("R1 lies in span{I, U1}") {
        for (double theta : {0.3, pi / 2, 2.0}) {
            const Decomposition d = decompose_R(build_R({RFamily::R1, theta, 0.9}),
                                                build_U({TlaFamily::U1, 0.9}));
            CHECK(d.residual < 1e-12);
            // a = exp(i theta/2), b = -i sin(theta/2)
            CHECK(std::abs(d.a - std::exp(kImag * theta / 2.0)) < 1e-12);
            CHECK(std::abs(d.b + kImag * std::sin(theta / 2.0)) < 1e-12);
        }
    }

    SUBCASE("R2 and R3 fit their own generators") {
        CHECK(decompose_R(build_R({RFamily::R2, 1.1, 0.9}), build_U({TlaFamily::U2, 0.9}))
                  .residual < 1e-12);
        CHECK(decompose_R(build_R({RFamily::R3, 1.1, 0.9, +1}),
                          build_U({TlaFamily::U3, 0.9, +1}))
                  .residual < 1e-12);
    }

    SUBCASE("R2 does not fit U1") {
        const Decomposition d = decompose_R(build_R({RFamily::R2, 1.1, 0.9}),
                                            build_U({TlaFamily::U1, 0.9}));
        CHECK(d.residual > 0.1);
    }

    SUBCASE("degenerate basis is rejected") {
        CHECK_THROWS_AS(decompose_R(id, 2.0 * id), DegenerateBasisError);
    }
}
