// Finite-difference machinery plus the closed-coefficient spheroidal and
// quaternion first/second order operators built from the azimuthal frame.
// Cartesian fields take the position vector as a G_3 multivector; chart
// fields take (eta, theta, phi) directly.

#pragma once

#include <cstdint>
#include <functional>

#include "sga/frames.hpp"
#include "sga/rational.hpp"
#include "sga/report.hpp"
#include "sga/spheroidal.hpp"

namespace sga {

using VectorField = std::function<MvD(const MvD&)>;
using ChartField = std::function<MvD(double, double, double)>;

inline MvD scalar_field_value(double v) { return MvD::scalar(3, v); }

// Central differences on Cartesian fields.
MvD fd_partial(const VectorField& f, const MvD& x, int k, double h = 1e-5);
MvD fd_gradient(const VectorField& f, const MvD& x, double h = 1e-5);
MvD fd_laplacian(const VectorField& f, const MvD& x, double h = 1e-4);
// Fourth-order stencil, preferred when the field itself is expensive to trust.
MvD fd_laplacian4(const VectorField& f, const MvD& x, double h = 1e-3);

// Central differences on chart fields; `which` is 0:eta 1:theta 2:phi.
MvD chart_partial(const ChartField& f, double eta, double theta, double phi, int which,
                  double h = 1e-5);
MvD chart_second(const ChartField& f, double eta, double theta, double phi, int which,
                 double h = 1e-4);

// Laplacian through the chart with closed coefficients:
//   prolate: (d_ee + d_tt + (cot^2 t + coth^2 e) d_pp + coth e d_e + cot t d_t)
//            / (mu^2 z_eta z_eta_conj)
//   oblate:  (d_ee + d_tt + (cot^2 t + tanh^2 e) d_pp + tanh e d_e + cot t d_t)
//            / (mu^2 z z_conj)
MvD spheroidal_laplacian(SpheroidalCase kind, double mu, const ChartField& f, double eta,
                         double theta, double phi, double h = 1e-4);

// First-order operators with left quaternion coefficients:
//   z:          (1/z_eta) d_eta + (1/z_theta) d_theta + (1/z_phi) d_phi
//   z_eta:      (1/z) d_eta + (1/(I_p z)) d_theta + (1/z_phieta) d_phi
// and their e0-sandwich conjugates.
enum class QuatGradKind { z, z_conj, z_eta, z_eta_conj };

MvD quaternion_gradient(QuatGradKind kind, const ChartField& f, double eta, double theta,
                        double phi, double h = 1e-5);

MvD nested_quaternion_laplacian(QuatGradKind outer, QuatGradKind inner, const ChartField& f,
                                double eta, double theta, double phi, double h_out = 1e-3,
                                double h_in = 1e-5);

Report gradient_identity_suite(std::uint64_t seed, int samples);
Report laplacian_equivalence_suite(std::uint64_t seed, int samples);

}  // namespace sga
