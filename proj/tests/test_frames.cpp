#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sga/frames.hpp"
#include "sga/random.hpp"

using namespace sga;

namespace {

double dist(const MvD& a, const MvD& b) { return norm_coefficients(a - b); }

// Independent construction of the frame, straight from the definitions.
struct RawFrame {
    MvD e_p, e_p_dot, I_p, J_p, K_p;
};

RawFrame raw_frame(double phi) {
    const MvD e0 = MvD::basis_vector(3, 0);
    const MvD e1 = MvD::basis_vector(3, 1);
    const MvD e2 = MvD::basis_vector(3, 2);
    RawFrame f{MvD(3), MvD(3), MvD(3), MvD(3), MvD(3)};
    f.e_p = e1 * std::cos(phi) + e2 * std::sin(phi);
    f.e_p_dot = e1 * (-std::sin(phi)) + e2 * std::cos(phi);
    f.I_p = f.e_p * e0;
    f.J_p = f.e_p_dot * e0;
    f.K_p = f.e_p_dot * f.e_p;
    return f;
}

}  // namespace

TEST_CASE("phase state matches the raw definitions") {
    SampleRng rng(3);
    for (int s = 0; s < 50; ++s) {
        const double phi = rng.uniform(0.0, 2 * M_PI);
        const PhaseState p = phase_state(phi);
        const RawFrame r = raw_frame(phi);
        CHECK(dist(p.e_p, r.e_p) <= 1e-15);
        CHECK(dist(p.e_p_dot, r.e_p_dot) <= 1e-15);
        CHECK(dist(p.I_p, r.I_p) <= 1e-15);
        CHECK(dist(p.J_p, r.J_p) <= 1e-15);
        CHECK(dist(p.K_p, r.K_p) <= 1e-15);
    }
}

TEST_CASE("quaternion relations of the frame bivectors") {
    const MvD one = MvD::scalar(3, 1.0);
    SampleRng rng(5);
    for (int s = 0; s < 50; ++s) {
        const PhaseState p = phase_state(rng.uniform(0.0, 2 * M_PI));
        CHECK(dist(p.I_p * p.I_p, -one) <= 1e-14);
        CHECK(dist(p.J_p * p.J_p, -one) <= 1e-14);
        CHECK(dist(p.K_p * p.K_p, -one) <= 1e-14);
        CHECK(dist(p.I_p * p.J_p * p.K_p, -one) <= 1e-14);
        // Pairwise products cycle: I J = K, J K = I, K I = J.
        CHECK(dist(p.I_p * p.J_p, p.K_p) <= 1e-14);
        CHECK(dist(p.J_p * p.K_p, p.I_p) <= 1e-14);
        CHECK(dist(p.K_p * p.I_p, p.J_p) <= 1e-14);
        // And anticommute.
        CHECK(dist(p.I_p * p.J_p, -(p.J_p * p.I_p)) <= 1e-14);
    }
}

TEST_CASE("zeta value and conjugate") {
    SampleRng rng(9);
    for (int s = 0; s < 50; ++s) {
        const double eta = rng.uniform(0.1, 2.0);
        const double theta = rng.uniform(0.15, M_PI - 0.15);
        const double phi = rng.uniform(0.0, 2 * M_PI);
        const Zeta z = make_zeta(eta, theta, phi);

        // Components straight from the half-angle expansion.
        MvD expect = MvD::scalar(3, std::cosh(eta) * std::cos(theta)) +
                     z.phase.I_p * (std::sinh(eta) * std::sin(theta));
        CHECK(dist(z.value(), expect) <= 1e-14);

        // Conjugation is the e0 sandwich and flips only the I_p part.
        const MvD e0 = MvD::basis_vector(3, 0);
        CHECK(dist(z.conj(), e0 * z.value() * e0) <= 1e-15);
        MvD conj_expect = MvD::scalar(3, std::cosh(eta) * std::cos(theta)) -
                          z.phase.I_p * (std::sinh(eta) * std::sin(theta));
        CHECK(dist(z.conj(), conj_expect) <= 1e-14);

        // z z_conj is scalar: (cosh^2 cos^2 + sinh^2 sin^2) = (cosh 2eta + cos 2theta)/2.
        const MvD prod = z.value() * z.conj();
        CHECK(std::abs(prod.scalar_part() -
                       0.5 * (std::cosh(2 * eta) + std::cos(2 * theta))) <= 1e-13);
        CHECK(dist(prod, MvD::scalar(3, prod.scalar_part())) <= 1e-13);
    }
}

TEST_CASE("closed-form partials against finite differences") {
    SampleRng rng(17);
    const double h = 1e-6;
    auto value = [](double eta, double theta, double phi) {
        return make_zeta(eta, theta, phi).value();
    };
    for (int s = 0; s < 30; ++s) {
        const double eta = rng.uniform(0.2, 1.8);
        const double theta = rng.uniform(0.2, M_PI - 0.2);
        const double phi = rng.uniform(0.2, 2 * M_PI - 0.2);
        const Zeta z0 = make_zeta(eta, theta, phi);
        const ZetaPartials zp = zeta_partials(z0);

        const MvD d_eta = (value(eta + h, theta, phi) - value(eta - h, theta, phi)) * (0.5 / h);
        const MvD d_theta = (value(eta, theta + h, phi) - value(eta, theta - h, phi)) * (0.5 / h);
        const MvD d_phi = (value(eta, theta, phi + h) - value(eta, theta, phi - h)) * (0.5 / h);
        CHECK(dist(zp.z_eta, d_eta) <= 1e-9);
        CHECK(dist(zp.z_theta, d_theta) <= 1e-9);
        CHECK(dist(zp.z_phi, d_phi) <= 1e-9);

        const MvD dd_eta =
            (value(eta + h, theta, phi) - zp.z * 2.0 + value(eta - h, theta, phi)) * (1.0 / (h * h));
        CHECK(dist(zp.z_etaeta, dd_eta) <= 1e-3);  // plain second difference at h=1e-6
        CHECK(dist(zp.z_etaeta, zp.z) <= 1e-15);
        CHECK(dist(zp.z_thetatheta, -zp.z) <= 1e-15);
        CHECK(dist(zp.z_etatheta, z0.phase.I_p * zp.z) <= 1e-14);
    }
}

TEST_CASE("identity suite passes at criterion scale") {
    const Report rep = frames_identity_suite(42, 1000, 1e-8, 1e-5, 1e-5);
    for (const auto& r : rep.results) {
        INFO(r.name, " err=", r.max_abs_error, " tol=", r.tolerance, " ", r.worst_point);
        if (r.asserted) CHECK(r.pass);
    }
    CHECK(rep.pass());
    // The known-broken printed variants are present but not asserted.
    int info_entries = 0;
    for (const auto& r : rep.results)
        if (!r.asserted) ++info_entries;
    CHECK(info_entries >= 2);
}
