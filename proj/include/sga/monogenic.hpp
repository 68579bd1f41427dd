// Clifford-analysis constructions inside G_{n+1}: the paravector bridge
// X = x e0, gradient-free power sums built from the commuting blocks
// x_k + x0 e_{k0}, an axially symmetric quasi-monogenic family with its
// exact cylindrical gradient, monogenic completions of that family found by
// exact linear algebra, and the Cauchy kernel with its fractional-power
// factorization.
//
// The cylindrical exact lane uses polynomials in two variables, radius-axis
// ordered as (x0, x_p), whose G_3 coefficients are blades of e0, e1, e2 read
// at azimuth zero: e1 stands for the radial direction and e2 for its
// azimuthal derivative. The azimuth derivative of a coefficient is then the
// blade derivation e1 -> e2, e2 -> -e1, e0 -> 0.

#pragma once

#include <cstdint>
#include <vector>

#include "sga/mv_polynomial.hpp"
#include "sga/report.hpp"

namespace sga {

// Blade derivation extended coefficientwise to a polynomial.
MvPolynomial azimuthal_blade_derivative(const MvPolynomial& f);

// e0 d_x0 + e1 d_xp + e2 (azimuth derivation)/x_p on cylindrical fields.
// Throws if the azimuthal part is not exactly divisible by the radius.
MvPolynomial cylindrical_gradient(const MvPolynomial& f);

// (x0 - x_p e_{10})^k e0, the axially symmetric power family.
MvPolynomial qm_power(int k);

// Variant with the extra axis vector inside the base, as displayed.
MvPolynomial qm_power_stray_axis(int k);

// Closed form of the cylindrical gradient of qm_power(k): a pure scalar.
MvPolynomial qm_gradient_closed_form(int k);

// Additive monogenic completions displayed for k = 1, 2, 3.
MvPolynomial qm_displayed_correction(int k);

struct QmCorrection {
    bool found = false;
    MvPolynomial correction;  // alpha e0 + beta e1 with the radius dividing beta
    int kernel_dim = 0;
    QmCorrection() : correction(2, 3) {}
};

// Exact search for a completion of degree <= max_degree.
QmCorrection qm_correction_search(int k, int max_degree);

// sum_i (x_i + x0 e_{i0})^{k_i} over G_{n+1}, n = exponents.size().
MvPolynomial ck_extension(const std::vector<unsigned>& exponents);

// (x - y) / |x - y|^dim for vectors of any supported dimension.
MvD cauchy_kernel(const MvD& x, const MvD& y);

// Principal fractional power of s + v with v^2 a negative scalar.
MvD fractional_power(const MvD& a, double p);

// e0 (1 - conj X)^{-(n-1)/2} (1 - X)^{-(n+1)/2} with X = x e0.
MvD hypergeom_kernel(const MvD& x);

Report monogenic_suite(std::uint64_t seed, int samples);

}  // namespace sga
