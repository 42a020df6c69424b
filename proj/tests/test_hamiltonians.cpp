#include <doctest.h>

#include <cmath>
#include <numbers>

#include "test_support.hpp"
#include "ybcorr/hamiltonians.hpp"

using namespace ybcorr;

namespace {

constexpr double pi = std::numbers::pi;

Matrix diag4(double a, double b, double c, double d) {
    Eigen::Vector4cd v{a, b, c, d};
    return v.asDiagonal();
}

/// The theta = pi/2 closed forms, written out entry by entry.
Matrix h1_half_pi(double B, double J, double g, double phi) {
    Matrix h = diag4(g / 4, J - g / 4, -J - g / 4, g / 4);
    h(0, 3) = kImag * B * std::exp(kImag * phi);
    h(3, 0) = -kImag * B * std::exp(-kImag * phi);
    return h;
}

Matrix h2_half_pi(double B, double J, double g, double phi) {
    Matrix h = diag4(B + g / 4, -g / 4, -g / 4, -B + g / 4);
    h(1, 2) = kImag * J * std::exp(kImag * phi);
    h(2, 1) = -kImag * J * std::exp(-kImag * phi);
    return h;
}

Matrix h3_half_pi(double B, double J, double g, double phi) {
    Matrix h = diag4(g / 4, -g / 4, -g / 4, g / 4);
    h(0, 3) = -kImag * B * std::exp(kImag * phi);
    h(3, 0) = kImag * B * std::exp(-kImag * phi);
    h(1, 2) = h(2, 1) = J;
    return h;
}

}  // namespace

TEST_CASE("spin operators") {
    const SpinOperatorSet& s = spin_ops();

    CHECK(max_abs(s.sz1 - diag4(0.5, 0.5, -0.5, -0.5)) == 0.0);
    CHECK(max_abs(s.sz2 - diag4(0.5, -0.5, 0.5, -0.5)) == 0.0);

    // raising both spins maps |11> to |00>
    Vector v11 = Vector::Zero(4);
    v11(3) = 1.0;
    Vector v00 = Vector::Zero(4);
    v00(0) = 1.0;
    CHECK(((s.sp1 * s.sp2) * v11 - v00).norm() == 0.0);

    // disjoint sites commute
    CHECK(max_abs(s.sz1 * s.sz2 - s.sz2 * s.sz1) == 0.0);

    // single-site ladder relations: [S^z, S^+-] = +-S^+-, S^+- = S^x +- i S^y
    CHECK(max_abs(s.sz1 * s.sp1 - s.sp1 * s.sz1 - s.sp1) == 0.0);
    CHECK(max_abs(s.sz1 * s.sm1 - s.sm1 * s.sz1 + s.sm1) == 0.0);
    const Matrix sx1 = (s.sp1 + s.sm1) / 2.0;
    const Matrix sy1 = (s.sp1 - s.sm1) / (2.0 * kImag);
    CHECK(max_abs(sx1 + kImag * sy1 - s.sp1) < 1e-16);
}

TEST_CASE("build_h0") {
    CHECK(max_abs(build_h0(ModelParams{0.0, 0.0, 0.0})) == 0.0);

    // mu1 = 2, mu2 = 0 (B = J = 1), g = 0
    CHECK(max_abs(build_h0(ModelParams::from_fields(2.0, 0.0)) - diag4(1, 1, -1, -1))
          == 0.0);

    // B = 1, J = 0, g = 4
    CHECK(max_abs(build_h0(ModelParams{1.0, 0.0, 4.0}) - diag4(2, -1, -1, 0)) == 0.0);
}

TEST_CASE("ModelParams field relations hold exactly") {
    const ModelParams p = ModelParams::from_fields(0.7, -1.3, 0.2);
    CHECK(p.mu1() == p.B + p.J);
    CHECK(p.mu2() == p.B - p.J);
    CHECK(p.B == doctest::Approx((0.7 - 1.3) / 2).epsilon(1e-15));
    CHECK(p.J == doctest::Approx((0.7 + 1.3) / 2).epsilon(1e-15));
}

TEST_CASE("build_h closed forms at theta = pi/2") {
    const double B = 0.9, J = -0.4, g = 0.55;
    for (double phi : {0.0, pi / 4, 0.9, -pi / 2}) {
        const ModelParams p{B, J, g, pi / 2, phi, +1};
        CHECK(max_abs(build_h(Model::H1, p) - h1_half_pi(B, J, g, phi)) < 1e-12);
        CHECK(max_abs(build_h(Model::H2, p) - h2_half_pi(B, J, g, phi)) < 1e-12);
        CHECK(max_abs(build_h(Model::H3, p) - h3_half_pi(B, J, g, phi)) < 1e-12);
    }

    SUBCASE("spec'd special cases") {
        // H1 with B=0: purely diagonal
        CHECK(max_abs(build_h(Model::H1, ModelParams{0.0, 0.7, 0.6, pi / 2, 0.3})
                      - diag4(0.15, 0.55, -0.85, 0.15)) < 1e-12);
        // H2 with J=0: purely diagonal
        CHECK(max_abs(build_h(Model::H2, ModelParams{0.8, 0.0, 0.4, pi / 2, 0.3})
                      - diag4(0.9, -0.1, -0.1, -0.7)) < 1e-12);
        // H3 at phi=-pi/2: real symmetric (XYZ chain form)
        const Matrix h3 = build_h(Model::H3, ModelParams{0.8, 0.3, 0.4, pi / 2, -pi / 2});
        CHECK(max_abs(h3 - h3.transpose()) < 1e-12);
        for (Eigen::Index i = 0; i < 4; ++i)
            for (Eigen::Index j = 0; j < 4; ++j)
                CHECK(std::abs(std::imag(h3(i, j))) < 1e-12);
    }
}

TEST_CASE("Hamiltonians are Hermitian across the parameter grid") {
    for (double b : {-1.0, 0.0, 0.5, 1.0})
        for (double j : {-1.0, 0.5})
            for (double g : {0.0, 1.0})
                for (double theta : {0.0, 0.8, pi / 2, 2.7})
                    for (double phi : {0.0, 0.9, pi})
                        for (Model m : {Model::H1, Model::H2, Model::H3}) {
                            const Matrix h = build_h(m, {b, j, g, theta, phi, -1});
                            CHECK(max_abs(h - h.adjoint()) < 1e-12);
                        }
}

TEST_CASE("conjugate_h0 matches the closed forms") {
    SUBCASE("theta = 0 leaves H0 unchanged") {
        const ModelParams p{0.7, -0.2, 0.9, 0.0, 1.1};
        CHECK(max_abs(conjugate_h0(RFamily::R1, p) - build_h0(p)) < 1e-14);
        CHECK(max_abs(conjugate_h0(RFamily::R3, p) - build_h0(p)) < 1e-14);
    }

    SUBCASE("R_k H0 R_k^dag = H_k over the grid, all three families") {
        for (double b : {-1.0, 0.5, 1.0})
            for (double j : {-1.0, 0.0, 1.0})
                for (double g : {0.0, 0.5})
                    for (double theta : {0.3, pi / 2, 2.2})
                        for (double phi : {0.0, pi / 4, 0.9})
                            for (int eps : {+1, -1}) {
                                const ModelParams p{b, j, g, theta, phi, eps};
                                CHECK(max_abs(conjugate_h0(RFamily::R1, p)
                                              - build_h(Model::H1, p)) < 1e-12);
                                CHECK(max_abs(conjugate_h0(RFamily::R2, p)
                                              - build_h(Model::H2, p)) < 1e-12);
                                // the eps J sin(theta) term of H3 is reproduced too
                                CHECK(max_abs(conjugate_h0(RFamily::R3, p)
                                              - build_h(Model::H3, p)) < 1e-10);
                            }
    }
}

TEST_CASE("spectrum_of") {
    CHECK(max_abs(spectrum_of(Matrix::Zero(4, 4)).cast<Complex>().asDiagonal()) == 0.0);

    SUBCASE("H0 spectrum is its diagonal, sorted") {
        const ModelParams p{0.9, -0.4, 0.55};
        Eigen::Vector4d expected{p.B + p.g / 4, p.J - p.g / 4, -p.J - p.g / 4,
                                 -p.B + p.g / 4};
        std::sort(expected.begin(), expected.end(), std::greater<>());
        CHECK((spectrum_of(build_h0(p)) - expected).cwiseAbs().maxCoeff() < 1e-14);
    }

    SUBCASE("unitary conjugates are isospectral") {
        std::mt19937 gen(21);
        for (int trial = 0; trial < 50; ++trial) {
            std::uniform_real_distribution<double> u(-1.0, 1.0);
            const ModelParams p{u(gen), u(gen), u(gen), pi * (u(gen) + 1.0),
                                pi * (u(gen) + 1.0), +1};
            const Eigen::VectorXd base = spectrum_of(build_h0(p));
            for (Model m : {Model::H1, Model::H2, Model::H3})
                CHECK((spectrum_of(build_h(m, p)) - base).cwiseAbs().maxCoeff() < 1e-10);
        }
    }
}
