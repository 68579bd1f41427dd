#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sga/diffops.hpp"
#include "sga/random.hpp"

using namespace sga;

TEST_CASE("quaternion gradient of z and its conjugate") {
    SampleRng rng(21);
    const ChartField zf = [](double eta, double theta, double phi) {
        return make_zeta(eta, theta, phi).value();
    };
    const ChartField zc = [](double eta, double theta, double phi) {
        return make_zeta(eta, theta, phi).conj();
    };
    double worst3 = 0.0, worst1 = 0.0;
    for (int s = 0; s < 100; ++s) {
        const double eta = rng.uniform(0.3, 1.8);
        double theta;
        do {
            theta = rng.uniform(0.25, M_PI - 0.25);
        } while (std::abs(theta - M_PI / 2) < 0.15);
        const double phi = rng.uniform(0.3, 2 * M_PI - 0.3);
        const MvD g3 = quaternion_gradient(QuatGradKind::z, zf, eta, theta, phi);
        const MvD g1 = quaternion_gradient(QuatGradKind::z, zc, eta, theta, phi);
        worst3 = std::max(worst3, norm_coefficients(g3 - MvD::scalar(3, 3.0)));
        worst1 = std::max(worst1, norm_coefficients(g1 - MvD::scalar(3, -1.0)));
    }
    CHECK(worst3 <= 1e-6);
    CHECK(worst1 <= 1e-6);
}

TEST_CASE("chart laplacian annihilates coordinate functions and hits |x|^2") {
    SampleRng rng(25);
    for (SpheroidalCase kind : {SpheroidalCase::prolate, SpheroidalCase::oblate}) {
        double worst_harm = 0.0, worst_six = 0.0;
        for (int s = 0; s < 60; ++s) {
            const double mu = rng.uniform(0.7, 1.5);
            const double eta = rng.uniform(0.4, 1.6);
            double theta;
            do {
                theta = rng.uniform(0.3, M_PI - 0.3);
            } while (std::abs(theta - M_PI / 2) < 0.2);
            const double phi = rng.uniform(0.3, 2 * M_PI - 0.3);

            const ChartField axis = [kind, mu](double e, double t, double p) {
                const SpheroidalPoint q{kind, mu, e, t, p};
                return MvD::scalar(3, position(q).x0);
            };
            const ChartField norm2 = [kind, mu](double e, double t, double p) {
                const SpheroidalPoint q{kind, mu, e, t, p};
                return MvD::scalar(3, position(q).norm2());
            };
            const MvD lap_axis = spheroidal_laplacian(kind, mu, axis, eta, theta, phi);
            const MvD lap_norm2 = spheroidal_laplacian(kind, mu, norm2, eta, theta, phi);
            worst_harm = std::max(worst_harm, norm_coefficients(lap_axis));
            worst_six = std::max(worst_six, norm_coefficients(lap_norm2 - MvD::scalar(3, 6.0)));
        }
        CHECK(worst_harm <= 1e-6);
        CHECK(worst_six <= 1e-5);
    }
}

TEST_CASE("gradient identity suite passes") {
    const Report rep = gradient_identity_suite(42, 160);
    for (const auto& r : rep.results) {
        INFO(r.name, " err=", r.max_abs_error, " tol=", r.tolerance, " ", r.worst_point);
        if (r.asserted) CHECK(r.pass);
    }
    CHECK(rep.pass());
}

TEST_CASE("laplacian equivalence suite passes on random smooth fields") {
    const Report rep = laplacian_equivalence_suite(42, 200);
    for (const auto& r : rep.results) {
        INFO(r.name, " err=", r.max_abs_error, " tol=", r.tolerance, " ", r.worst_point);
        if (r.asserted) CHECK(r.pass);
    }
    CHECK(rep.pass());
}
