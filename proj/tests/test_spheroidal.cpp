#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sga/random.hpp"
#include "sga/spheroidal.hpp"

using namespace sga;

namespace {

SpheroidalPoint random_point(SampleRng& rng, SpheroidalCase kind) {
    SpheroidalPoint p;
    p.kind = kind;
    p.mu = rng.uniform(0.4, 2.2);
    p.eta = rng.uniform(0.05, 2.5);
    p.theta = rng.uniform(0.02, M_PI - 0.02);
    p.phi = rng.uniform(0.0, 2 * M_PI);
    return p;
}

double rel(double err, double scale) { return err / std::max(scale, 1e-12); }

}  // namespace

TEST_CASE("explicit components match the multivector product path") {
    SampleRng rng(2);
    for (SpheroidalCase kind : {SpheroidalCase::prolate, SpheroidalCase::oblate})
        for (int s = 0; s < 200; ++s) {
            const SpheroidalPoint p = random_point(rng, kind);
            const CartesianPoint a = position(p);
            const CartesianPoint b = position_via_product(p);
            CHECK(std::abs(a.x0 - b.x0) <= 1e-13 * p.mu * std::cosh(p.eta));
            CHECK(std::abs(a.x1 - b.x1) <= 1e-13 * p.mu * std::cosh(p.eta));
            CHECK(std::abs(a.x2 - b.x2) <= 1e-13 * p.mu * std::cosh(p.eta));
        }
}

TEST_CASE("frozen positions") {
    // Prolate: x0 = mu cosh cos, radial = mu sinh sin, at phi the radial
    // part splits with (cos phi, sin phi).
    const SpheroidalPoint p{SpheroidalCase::prolate, 1.3, 0.8, 0.6, 1.1};
    const CartesianPoint x = position(p);
    CHECK(x.x0 == doctest::Approx(1.3 * std::cosh(0.8) * std::cos(0.6)).epsilon(1e-14));
    CHECK(x.x1 ==
          doctest::Approx(1.3 * std::sinh(0.8) * std::sin(0.6) * std::cos(1.1)).epsilon(1e-14));
    CHECK(x.x2 ==
          doctest::Approx(1.3 * std::sinh(0.8) * std::sin(0.6) * std::sin(1.1)).epsilon(1e-14));

    // Oblate swaps the hyperbolic factors: y0 = mu sinh cos, radial = mu cosh sin.
    const SpheroidalPoint q{SpheroidalCase::oblate, 0.9, 1.2, 2.1, 4.0};
    const CartesianPoint y = position(q);
    CHECK(y.x0 == doctest::Approx(0.9 * std::sinh(1.2) * std::cos(2.1)).epsilon(1e-14));
    CHECK(y.radial() == doctest::Approx(0.9 * std::cosh(1.2) * std::sin(2.1)).epsilon(1e-14));
}

TEST_CASE("focal distance sums and the radical form") {
    SampleRng rng(4);
    for (SpheroidalCase kind : {SpheroidalCase::prolate, SpheroidalCase::oblate})
        for (int s = 0; s < 300; ++s) {
            const SpheroidalPoint p = random_point(rng, kind);
            const CartesianPoint x = position(p);
            const OmegaPair om = omega(x, p.mu, kind);
            CHECK(rel(std::abs(om.omega - 2 * p.mu * std::cosh(p.eta)), om.omega) <= 1e-12);
            const double expect_bar = kind == SpheroidalCase::prolate
                                          ? 2 * p.mu * std::cos(p.theta)
                                          : 2 * p.mu * std::sin(p.theta);
            CHECK(std::abs(std::abs(om.omega_bar) - std::abs(expect_bar)) <=
                  1e-11 * (1 + std::abs(expect_bar)));
            const OmegaPair rad = omega_radical(x, p.mu, kind);
            CHECK(rel(std::abs(om.omega - rad.omega), om.omega) <= 1e-11);
            CHECK(std::abs(std::abs(om.omega_bar) - std::abs(rad.omega_bar)) <=
                  1e-9 * (1 + om.omega));
        }
}

TEST_CASE("round trips at criterion scale") {
    SampleRng rng(42);
    for (SpheroidalCase kind : {SpheroidalCase::prolate, SpheroidalCase::oblate}) {
        double worst_chart = 0.0, worst_cart = 0.0;
        for (int s = 0; s < 1000; ++s) {
            const SpheroidalPoint p = random_point(rng, kind);
            const CartesianPoint x = position(p);

            const SpheroidalPoint q = invert(x, p.mu, kind);
            worst_chart = std::max(worst_chart, rel(std::abs(q.eta - p.eta), p.eta));
            worst_chart = std::max(worst_chart, rel(std::abs(q.theta - p.theta), p.theta));
            double dphi = std::abs(q.phi - p.phi);
            dphi = std::min(dphi, 2 * M_PI - dphi);  // seam at phi = 0
            worst_chart = std::max(worst_chart, rel(dphi, 1.0));

            const CartesianPoint y = position(q);
            const double scale = std::sqrt(x.norm2());
            worst_cart = std::max(worst_cart, rel(std::abs(y.x0 - x.x0), scale));
            worst_cart = std::max(worst_cart, rel(std::abs(y.x1 - x.x1), scale));
            worst_cart = std::max(worst_cart, rel(std::abs(y.x2 - x.x2), scale));
        }
        CHECK(worst_chart <= 1e-10);
        CHECK(worst_cart <= 1e-10);
    }
}

TEST_CASE("degenerate loci throw structured errors") {
    // Prolate focal segment: on-axis point between the foci.
    CHECK_THROWS_AS((void)invert(CartesianPoint{0.3, 0.0, 0.0}, 1.0, SpheroidalCase::prolate),
                    DegenerateCoordinatesError);
    // Oblate focal disk: equatorial point inside the focal ring.
    CHECK_THROWS_AS((void)invert(CartesianPoint{0.0, 0.4, 0.0}, 1.0, SpheroidalCase::oblate),
                    DegenerateCoordinatesError);
    try {
        (void)invert(CartesianPoint{0.3, 0.0, 0.0}, 1.0, SpheroidalCase::prolate);
        CHECK(false);
    } catch (const DegenerateCoordinatesError& e) {
        CHECK(e.limiting_value.eta == doctest::Approx(0.0).epsilon(1e-9));
    }
    // Invalid chart values are rejected up front.
    CHECK_THROWS_AS(validate(SpheroidalPoint{SpheroidalCase::prolate, -1.0, 0.5, 0.5, 0.5}),
                    std::invalid_argument);
}

TEST_CASE("frame reciprocity at criterion scale") {
    SampleRng rng(17);
    for (SpheroidalCase kind : {SpheroidalCase::prolate, SpheroidalCase::oblate}) {
        double worst_rec = 0.0, worst_fd = 0.0;
        for (int s = 0; s < 500; ++s) {
            SpheroidalPoint p = random_point(rng, kind);
            p.eta = rng.uniform(0.15, 2.0);
            p.theta = rng.uniform(0.1, M_PI - 0.1);
            const CoordinateFrames fr = coordinate_frames(p);

            const MvD tangents[3] = {fr.t_eta, fr.t_theta, fr.t_phi};
            const MvD recips[3] = {fr.r_eta, fr.r_theta, fr.r_phi};
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                    const double d = dot(recips[i], tangents[j]).scalar_part();
                    worst_rec = std::max(worst_rec, std::abs(d - (i == j ? 1.0 : 0.0)));
                }

            // Tangents against central differences of the position map.
            const double h = 1e-6;
            auto pos = [&](double de, double dt, double dp) {
                SpheroidalPoint q = p;
                q.eta += de;
                q.theta += dt;
                q.phi += dp;
                return position(q).mv();
            };
            const MvD fd_eta = (pos(h, 0, 0) - pos(-h, 0, 0)) * (0.5 / h);
            const MvD fd_theta = (pos(0, h, 0) - pos(0, -h, 0)) * (0.5 / h);
            const MvD fd_phi = (pos(0, 0, h) - pos(0, 0, -h)) * (0.5 / h);
            worst_fd = std::max(worst_fd, norm_coefficients(fd_eta - fr.t_eta));
            worst_fd = std::max(worst_fd, norm_coefficients(fd_theta - fr.t_theta));
            worst_fd = std::max(worst_fd, norm_coefficients(fd_phi - fr.t_phi));
        }
        CHECK(worst_rec <= 1e-12);
        CHECK(worst_fd <= 1e-8);
    }
}

TEST_CASE("bounding spheroids") {
    SampleRng rng(23);
    for (int case_id = 1; case_id <= 4; ++case_id) {
        const SpheroidalCase kind = bounding_kind(case_id);
        CHECK((kind == SpheroidalCase::prolate) == (case_id == 2 || case_id == 3));
        for (int s = 0; s < 100; ++s) {
            const double nu = rng.uniform(0.05, 1.2);
            const double theta = rng.uniform(0.1, M_PI - 0.1);
            const double phi = rng.uniform(0.0, 2 * M_PI);
            const double mu = bounding_mu(case_id, nu);
            CHECK(mu > 0);
            const CartesianPoint x = bounding_point(case_id, nu, theta, phi);
            // The point lies on the eta = const surface the case prescribes:
            // coth(eta) = e^nu (1,2) and tanh(eta) = e^-nu (3,4) are the same level.
            const SpheroidalPoint p = invert(x, mu, kind);
            const double target = std::atanh(std::exp(-nu));
            CHECK(std::abs(p.eta - target) <= 1e-9 * (1 + target));
        }
        // All four surfaces collapse to the unit sphere as nu -> 0.
        const CartesianPoint x = bounding_point(case_id, 1e-8, 1.0, 0.3);
        CHECK(std::sqrt(x.norm2()) == doctest::Approx(1.0).epsilon(1e-6));
        CHECK_THROWS_AS((void)bounding_mu(case_id, 0.0), std::domain_error);
    }
    CHECK_THROWS_AS((void)bounding_mu(5, 0.5), std::invalid_argument);
}
