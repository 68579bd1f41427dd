// Prolate and oblate spheroidal coordinates built on the quaternion frame.
//
// With z = cosh(eta + I_p theta) and focal scale mu > 0:
//   prolate position  x = mu z e0        (x0 = mu cosh cos, x_p = mu sinh sin)
//   oblate  position  y = mu z_eta e0    (y0 = mu sinh cos, y_p = mu cosh sin)
// The focal-distance sums give the inverse map: for a prolate point the foci
// sit at +-mu e0 on the symmetry axis, for an oblate point on the focal ring
// of radius mu in the (e1,e2) plane.

#pragma once

#include <string>

#include "sga/frames.hpp"
#include "sga/multivector.hpp"

namespace sga {

enum class SpheroidalCase { prolate, oblate };

const char* to_string(SpheroidalCase c);

struct CartesianPoint {
    double x0 = 0, x1 = 0, x2 = 0;

    Multivector<double> mv() const;
    static CartesianPoint from_mv(const Multivector<double>& v);

    double radial() const;    // distance from the symmetry axis
    double norm2() const;     // x0^2 + x1^2 + x2^2
};

struct SpheroidalPoint {
    SpheroidalCase kind = SpheroidalCase::prolate;
    double mu = 1;     // > 0
    double eta = 0;    // >= 0
    double theta = 0;  // [0, pi]
    double phi = 0;    // [0, 2 pi)
};

void validate(const SpheroidalPoint& p);

struct DegenerateCoordinatesError : std::domain_error {
    DegenerateCoordinatesError(const std::string& what, const SpheroidalPoint& limit)
        : std::domain_error(what), limiting_value(limit) {}
    SpheroidalPoint limiting_value;
};

struct DegenerateFrameError : std::domain_error {
    using std::domain_error::domain_error;
};

// Chart -> Cartesian via explicit components.
CartesianPoint position(const SpheroidalPoint& p);
// Same map evaluated as the multivector product mu z e0 (resp. mu z_eta e0);
// both paths agree to machine precision and tests pin that.
CartesianPoint position_via_product(const SpheroidalPoint& p);

// Sum and difference of the distances to the two foci: omega = 2 mu cosh(eta),
// omega_bar = 2 mu cos(theta) (prolate) or 2 mu sin(theta) (oblate).
struct OmegaPair {
    double omega = 0;
    double omega_bar = 0;
};

OmegaPair omega(const CartesianPoint& x, double mu, SpheroidalCase kind);
// Equivalent radical form sqrt(2) ((x^2+mu^2) +- sqrt((x^2+mu^2)^2 - 4 mu^2 q^2))^(1/2)
// with q = x0 (prolate) or q = distance from the axis (oblate).
OmegaPair omega_radical(const CartesianPoint& x, double mu, SpheroidalCase kind);

// Cartesian -> chart. Throws DegenerateCoordinatesError on the focal
// segment/disk (eta at the branch point), carrying the limiting values.
SpheroidalPoint invert(const CartesianPoint& x, double mu, SpheroidalCase kind);

// Tangent vectors x_eta, x_theta, x_phi and the reciprocal (gradient) frame
// x^eta, x^theta, x^phi with x^i . x_j = delta^i_j.
struct CoordinateFrames {
    Multivector<double> t_eta, t_theta, t_phi;
    Multivector<double> r_eta, r_theta, r_phi;
};

CoordinateFrames coordinate_frames(const SpheroidalPoint& p);

// Points of the four unit bounding spheroids, parametrized by nu > 0:
//   case 1: oblate,  (cos t + I_p coth(eta) sin t) e0,  coth(eta) = e^nu
//   case 2: prolate, (coth(eta) cos t + I_p sin t) e0,  coth(eta) = e^nu
//   case 3: prolate, (cos t + I_p tanh(eta) sin t) e0,  tanh(eta) = e^-nu
//   case 4: oblate,  (tanh(eta) cos t + I_p sin t) e0,  tanh(eta) = e^-nu
// All four degenerate to the unit sphere as nu -> 0.
CartesianPoint bounding_point(int case_id, double nu, double theta, double phi);

// mu for the given bounding case: e^(2 nu) - mu^2 = 1 (cases 1,2),
// e^(-2 nu) + mu^2 = 1 (cases 3,4). Throws on mu^2 <= 0.
double bounding_mu(int case_id, double nu);

SpheroidalCase bounding_kind(int case_id);

}  // namespace sga
