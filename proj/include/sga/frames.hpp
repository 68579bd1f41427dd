// Azimuth-dependent quaternion frame inside G_3.
//
// For azimuth phi, e_p = e1 cos(phi) + e2 sin(phi) is the radial unit vector
// in the (e1,e2) plane and e_p_dot its phi-derivative. The bivectors
//   I_p = e_p e0,  J_p = e_p_dot e0,  K_p = e_p_dot e_p
// square to -1 and multiply like quaternion units (I J K = -1), which turns
// the (eta, theta) half-plane into a complex-like plane per azimuth:
//   z = cosh(eta + I_p theta) = cosh(eta) cos(theta) + I_p sinh(eta) sin(theta).
// Conjugation is the e0 sandwich: e0 z e0 flips the sign of I_p.

#pragma once

#include "sga/multivector.hpp"
#include "sga/random.hpp"
#include "sga/report.hpp"

namespace sga {

struct PhaseState {
    double phi = 0.0;
    Multivector<double> e_p;      // radial unit vector at azimuth phi
    Multivector<double> e_p_dot;  // d(e_p)/d(phi)
    Multivector<double> I_p;      // e_p e0
    Multivector<double> J_p;      // e_p_dot e0
    Multivector<double> K_p;      // e_p_dot e_p
};

PhaseState phase_state(double phi);

struct Zeta {
    double eta = 0.0;
    double theta = 0.0;
    PhaseState phase;

    Multivector<double> value() const;  // cosh(eta) cos(theta) + I_p sinh(eta) sin(theta)
    Multivector<double> conj() const;   // e0 * value * e0
};

Zeta make_zeta(double eta, double theta, const PhaseState& phase);
Zeta make_zeta(double eta, double theta, double phi);

// e0-sandwich conjugation of an arbitrary element.
Multivector<double> e0_conj(const Multivector<double>& a);

// All first and the needed second partials of z with respect to the chart.
struct ZetaPartials {
    Multivector<double> z;
    Multivector<double> z_eta;          // sinh(eta + I_p theta)
    Multivector<double> z_theta;        // I_p z_eta
    Multivector<double> z_phi;          // J_p sinh(eta) sin(theta)
    Multivector<double> z_etaeta;       // z
    Multivector<double> z_thetatheta;   // -z
    Multivector<double> z_etatheta;     // I_p z
    Multivector<double> z_phiphi;       // -I_p sinh(eta) sin(theta)
    Multivector<double> z_phieta;       // J_p cosh(eta) sin(theta)
};

ZetaPartials zeta_partials(const Zeta& zeta);

// Property suite over random chart samples: quaternion table, the closed-form
// partials against finite differences, the bilinear products and the ratio
// identities. Known-broken printed variants are evaluated and reported without
// being asserted.
Report frames_identity_suite(std::uint64_t seed, int samples, double tol_closed,
                             double tol_fd, double fd_step);

}  // namespace sga
