// Translation and rotation generators acting on multivector-valued
// polynomials over G_3, their Lie brackets, the square of the vector
// rotation operator, and preservation of harmonicity. Everything here runs
// in the exact rational lane; sampling only chooses which integer vectors
// and monomials get exercised.

#pragma once

#include <cstdint>

#include "sga/mv_polynomial.hpp"
#include "sga/report.hpp"

namespace sga {

inline constexpr int kSymDim = 3;

MvQ pseudoscalar3();
MvQ cross3(const MvQ& a, const MvQ& b);

MvPolynomial position_polynomial(int dim);
MvPolynomial poly_gradient(const MvPolynomial& f);
MvPolynomial poly_laplacian(const MvPolynomial& f);
MvPolynomial euler_operator(const MvPolynomial& f);

// a·grad f for a constant vector a.
MvPolynomial translation_generator(const MvQ& a, const MvPolynomial& f);

// Trivector-valued rotation generator: sum_k (b ^ x ^ e_k) d_k f.
MvPolynomial rotation_generator(const MvQ& b, const MvPolynomial& f);

// k-th component of the vector rotation operator: i (e_k ^ x ^ grad) f.
MvPolynomial vector_rotation_component(int k, const MvPolynomial& f);

// Vector rotation operator: sum_k e_k (i e_k ^ x ^ grad) f = -(x cross grad) f.
MvPolynomial vector_rotation(const MvPolynomial& f);

// Combined generator P_a + J_b.
MvPolynomial symmetry_operator(const MvQ& a, const MvQ& b, const MvPolynomial& f);

// Signs determined exactly on a monomial basis:
//   [J_a, P_b] = mixed * i * P_{a x b},   [J_a, J_b] = rotation * i * J_{a x b}.
struct BracketSigns {
    int mixed = 0;
    int rotation = 0;
    bool translations_commute = false;
};
BracketSigns determine_bracket_signs(unsigned max_degree = 3);

Report symmetry_bracket_suite(std::uint64_t seed, int samples);
Report jx_square_suite(std::uint64_t seed, int samples);
Report harmonicity_suite(std::uint64_t seed, int samples);

}  // namespace sga
