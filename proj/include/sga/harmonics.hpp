// Separated harmonic modes on the two spheroidal families.
//
// The polar-direction building blocks are Legendre functions of the first
// and second kind without the Condon-Shortley phase. First-kind values use
// the stable forward recurrences. Second-kind values are evaluated through
// the exact decomposition
//   Q_n(x) = P_n(x) Q_0(x) - W_{n-1}(x),
//   W_{n-1}(x) = sum_{k=1..n} P_{k-1}(x) P_{n-k}(x) / k,
// whose polynomial parts are computed once with rational coefficients; the
// m-th derivative chain then needs only closed-form derivatives of Q_0.
// The oblate radial factor has no elementary form here and is produced by
// integrating its second-order equation directly.

#pragma once

#include <cstdint>
#include <vector>

#include "sga/diffops.hpp"
#include "sga/rational.hpp"
#include "sga/report.hpp"
#include "sga/spheroidal.hpp"

namespace sga {

// Exact coefficients of the degree-n first-kind polynomial, ascending powers.
std::vector<Rational> legendre_polynomial(int n);

// First kind, unnormalized, valid on [-1,1] and on (1, inf).
double legendre_P(int n, int m, double x);

// Second kind on (1, inf), same (x^2-1)^(m/2) attachment convention.
double legendre_Q(int n, int m, double x);

// j-th derivative of the degree-n second-kind function on (1, inf).
double legendre_Q_derivative(int n, int j, double x);

// cos(m phi) as a polynomial in alpha = cos(phi).
double cos_poly(int m, double alpha);

struct HarmonicMode {
    SpheroidalCase kind = SpheroidalCase::prolate;
    int n = 0;
    int m = 0;
    bool exterior = false;
    bool sine = false;
};

// Radial factor of an oblate mode, normalized to O(1) scale; solution of
//   N'' + tanh(eta) N' + (n_hat - m^2 tanh^2(eta)) N = 0,
// regular (interior) or decaying like e^(-(n+1) eta) (exterior).
double oblate_radial(int n, int m, bool exterior, double eta);

double eval_mode(const HarmonicMode& mode, double eta, double theta, double phi);
double eval_mode_cartesian(const HarmonicMode& mode, double mu, const CartesianPoint& x);

// Empirical separation constant: solve the radial and polar equations for
// the constant point-by-point and average. Returns {radial_fit, angular_fit}.
struct SeparationFit {
    double radial = 0;
    double angular = 0;
    double spread = 0;  // max deviation of the pointwise solutions from the mean
};
SeparationFit separation_constant_fit(SpheroidalCase kind, int n, int m, bool exterior);

// |laplacian f| at x, fourth-order stencil, normalized by the field scale
// probed on the stencil and on a coarser ring around x.
double laplace_residual(const VectorField& f, const MvD& x, double h = 1e-3);

// Midpoint defect of the oblate radial integration measured through a
// two-point quintic interpolant on a coarse node grid.
double oblate_radial_ode_defect(int n, int m, bool exterior);

Report harmonics_suite(std::uint64_t seed, int samples);

}  // namespace sga
