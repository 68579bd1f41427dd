#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sga/monogenic.hpp"
#include "sga/random.hpp"
#include "sga/symmetry.hpp"

using namespace sga;

namespace {

// Exact binomial for the frozen coefficient oracle.
Rational binom(int n, int r) {
    Rational v(1);
    for (int i = 1; i <= r; ++i) v = v * Rational(n - r + i) / Rational(i);
    return v;
}

MvD random_dir(SampleRng& rng, int dim) {
    MvD v(dim);
    double n2 = 0;
    for (int k = 0; k < dim; ++k) {
        const double c = rng.uniform(-1.0, 1.0);
        v += MvD::basis_vector(dim, k) * c;
        n2 += c * c;
    }
    return v * (1.0 / std::sqrt(std::max(n2, 1e-12)));
}

}  // namespace

TEST_CASE("axial power squared, expanded by hand") {
    // (x0 - x_p e1 e0)^2 e0 = (x0^2 - x_p^2) e0 - 2 x0 x_p e1.
    const MvPolynomial f = qm_power(2);
    MvPolynomial expect(2, 3);
    expect.add_term({2, 0}, MvQ::basis_vector(3, 0));
    expect.add_term({0, 2}, -MvQ::basis_vector(3, 0));
    expect.add_term({1, 1}, MvQ::basis_vector(3, 1) * Rational(-2));
    CHECK(f == expect);
}

TEST_CASE("cylindrical gradient matches the closed scalar form for k up to 15") {
    for (int k = 1; k <= 15; ++k) {
        const MvPolynomial g = cylindrical_gradient(qm_power(unsigned(k)));
        CHECK(g == qm_gradient_closed_form(unsigned(k)));
        // Curl-free means the gradient has no non-scalar part.
        CHECK((g - g.grade(0)).is_zero());
    }
}

TEST_CASE("degree-eleven gradient coefficient sequence") {
    // Alternating odd binomials of (x0 - i x_p)^11: 11, 165, 462, 330, 55, 1.
    const MvPolynomial g = cylindrical_gradient(qm_power(11));
    const long long magnitudes[6] = {11, 165, 462, 330, 55, 1};
    MvPolynomial expect(2, 3);
    for (int j = 0; j < 6; ++j) {
        const Rational c = Rational((j % 2 == 0) ? -1 : 1) * Rational(magnitudes[j]);
        CHECK(binom(11, 2 * j + 1) == Rational(magnitudes[j]));
        expect.add_term({unsigned(10 - 2 * j), unsigned(2 * j)}, MvQ::scalar(3, c));
    }
    CHECK(g == expect);
}

TEST_CASE("displayed completions for k = 1..3 are exact") {
    for (int k : {1, 2, 3}) {
        const MvPolynomial corr = qm_displayed_correction(unsigned(k));
        CHECK(cylindrical_gradient(qm_power(unsigned(k)) + corr).is_zero());
    }
}

TEST_CASE("completion search succeeds for k up to 8") {
    for (int k = 1; k <= 8; ++k) {
        const QmCorrection c = qm_correction_search(unsigned(k), unsigned(k));
        REQUIRE(c.found);
        CHECK(cylindrical_gradient(qm_power(unsigned(k)) + c.correction).is_zero());
    }
    // The search answers the open k = 4 case with an explicit completion.
    const QmCorrection c4 = qm_correction_search(4, 4);
    CHECK(c4.found);
    CHECK(cylindrical_gradient(qm_power(4) + c4.correction).is_zero());
}

TEST_CASE("power-sum extensions are gradient-free, including (4,4,4)") {
    SampleRng rng(3);
    CHECK(poly_gradient(ck_extension({4, 4, 4})).is_zero());
    CHECK(poly_gradient(ck_extension({1})).is_zero());
    for (int s = 0; s < 20; ++s) {
        std::vector<unsigned> ks(std::size_t(1 + rng.uniform_int(1, 4)));
        for (auto& v : ks) v = unsigned(rng.uniform_int(1, 4));
        CHECK(poly_gradient(ck_extension(ks)).is_zero());
    }
    CHECK_THROWS_AS((void)ck_extension({}), std::invalid_argument);
}

TEST_CASE("cauchy kernel is gradient-free away from the pole") {
    SampleRng rng(7);
    const double h = 3e-5;
    for (int dim : {3, 4}) {
        double worst = 0.0;
        for (int s = 0; s < 100; ++s) {
            MvD y(dim);
            for (int k = 0; k < dim; ++k)
                y += MvD::basis_vector(dim, k) * rng.uniform(-0.3, 0.3);
            const MvD x = y + random_dir(rng, dim) * rng.uniform(0.5, 1.5);
            MvD grad(dim);
            for (int k = 0; k < dim; ++k) {
                const MvD ek = MvD::basis_vector(dim, k);
                grad += ek * ((cauchy_kernel(x + ek * h, y) - cauchy_kernel(x - ek * h, y)) *
                              (1.0 / (2 * h)));
            }
            const MvD d = x - y;
            const double r = std::sqrt((d * d).scalar_part());
            worst = std::max(worst, norm_coefficients(grad) * r /
                                        norm_coefficients(cauchy_kernel(x, y)));
        }
        CHECK(worst <= 1e-6);
    }
    CHECK_THROWS_AS((void)cauchy_kernel(MvD::basis_vector(3, 1), MvD::basis_vector(3, 1)),
                    std::domain_error);
}

TEST_CASE("fractional powers in the plane spanned by the element") {
    SampleRng rng(13);
    for (int dim : {3, 4}) {
        for (int s = 0; s < 60; ++s) {
            MvD a = MvD::scalar(dim, rng.uniform(0.3, 1.5));
            const MvD e0 = MvD::basis_vector(dim, 0);
            for (int k = 1; k < dim; ++k)
                a += MvD::basis_vector(dim, k) * e0 * rng.uniform(-0.8, 0.8);
            const MvD root = fractional_power(a, 0.5);
            CHECK(norm_coefficients(root * root - a) <= 1e-12 * (1 + norm_coefficients(a)));
            const MvD inv = fractional_power(a, -1.0);
            CHECK(norm_coefficients(inv - inverse(a)) <= 1e-12 * (1 + norm_coefficients(inv)));
        }
    }
}

TEST_CASE("hypergeometric kernel equals the direct point evaluation") {
    SampleRng rng(17);
    for (int dim : {3, 4}) {
        double worst = 0.0;
        for (int s = 0; s < 200; ++s) {
            const MvD x = random_dir(rng, dim) * rng.uniform(0.05, 0.5);
            const MvD direct = cauchy_kernel(MvD::basis_vector(dim, 0), x);
            worst = std::max(worst,
                             norm_coefficients(hypergeom_kernel(x) - direct) /
                                 std::max(norm_coefficients(direct), 1e-12));
        }
        CHECK(worst <= 1e-9);
    }
    // Frozen spot value in G_3 at x = 0.3 e1: (e0 - 0.3 e1)/|e0 - 0.3 e1|^3.
    const MvD x = MvD::basis_vector(3, 1) * 0.3;
    const MvD k = hypergeom_kernel(x);
    const double scale = std::pow(1.09, -1.5);
    CHECK(k[0b001] == doctest::Approx(scale).epsilon(1e-9));
    CHECK(k[0b010] == doctest::Approx(-0.3 * scale).epsilon(1e-9));
}

TEST_CASE("monogenic suite passes") {
    const Report rep = monogenic_suite(5, 120);
    for (const auto& r : rep.results) {
        INFO(r.name, " err=", r.max_abs_error, " tol=", r.tolerance, " ", r.note);
        if (r.asserted) CHECK(r.pass);
    }
    CHECK(rep.pass());
}
