#include "sga/monogenic.hpp"

#include <cmath>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "sga/random.hpp"
#include "sga/symmetry.hpp"

namespace sga {
namespace {

// Derivation e1 -> e2, e2 -> -e1, e0 -> 0 applied to a single blade,
// replacing one factor at a time inside the ordered product.
MvQ blade_azimuth_derivative(int dim, unsigned mask) {
    MvQ acc(dim);
    for (int b = 0; b < dim; ++b) {
        if (!(mask & (1u << b))) continue;
        MvQ image(dim);
        if (b == 1)
            image = MvQ::basis_vector(dim, 2);
        else if (b == 2)
            image = -MvQ::basis_vector(dim, 1);
        else
            continue;
        MvQ prod = MvQ::scalar(dim, Rational(1));
        for (int i = 0; i < dim; ++i) {
            if (!(mask & (1u << i))) continue;
            prod = prod * (i == b ? image : MvQ::basis_vector(dim, i));
        }
        acc += prod;
    }
    return acc;
}

Rational binomial(int n, int r) {
    if (r < 0 || r > n) return Rational(0);
    Rational c(1);
    for (int i = 1; i <= r; ++i) {
        c *= Rational(n - r + i);
        c /= Rational(i);
    }
    return c;
}

MvPolynomial::Exponents exps2(unsigned a, unsigned b) { return {a, b}; }

struct LinearSolution {
    bool solvable = false;
    std::vector<Rational> particular;
    int kernel_dim = 0;
};

// Exact Gaussian elimination for M x = rhs; free variables are set to zero.
LinearSolution solve_linear(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        std::swap(rhs[p], rhs[r]);
        const Rational inv = Rational(1) / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        rhs[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            const Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
            rhs[i] -= f * rhs[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    LinearSolution out;
    for (std::size_t i = r; i < rows; ++i)
        if (!rhs[i].is_zero()) return out;
    out.solvable = true;
    out.particular.assign(cols, Rational(0));
    for (std::size_t i = 0; i < pivot_col.size(); ++i) out.particular[pivot_col[i]] = rhs[i];
    out.kernel_dim = int(cols) - int(pivot_col.size());
    return out;
}

using Field = std::function<MvD(const MvD&)>;

MvD fd_gradient_nd(const Field& f, const MvD& x, double h) {
    const int dim = x.dim();
    MvD acc(dim);
    for (int k = 0; k < dim; ++k) {
        const MvD e = MvD::basis_vector(dim, k);
        acc += e * ((f(x + e * h) - f(x - e * h)) * (0.5 / h));
    }
    return acc;
}

// d_0 +/- sum_k e_{k0} d_k by central differences.
MvD fd_paravector_derivative(const Field& f, const MvD& x, bool conjugated, double h) {
    const int dim = x.dim();
    const MvD e0 = MvD::basis_vector(dim, 0);
    MvD acc = (f(x + e0 * h) - f(x - e0 * h)) * (0.5 / h);
    for (int k = 1; k < dim; ++k) {
        const MvD ek = MvD::basis_vector(dim, k);
        const MvD d = (f(x + ek * h) - f(x - ek * h)) * (0.5 / h);
        const MvD term = (ek * e0) * d;
        acc += conjugated ? -term : term;
    }
    return acc;
}

MvD random_vector(SampleRng& rng, int dim, double lo, double hi) {
    std::vector<double> c(static_cast<std::size_t>(dim));
    for (double& v : c) v = rng.uniform(lo, hi);
    return MvD::vector(dim, c);
}

MvQ random_rational_vector(SampleRng& rng, int dim) {
    MvQ v(dim);
    bool nonzero = false;
    for (int k = 0; k < dim; ++k) {
        const long long n = rng.uniform_int(-4, 4);
        if (n != 0) nonzero = true;
        v += MvQ::basis_vector(dim, k) * Rational(n);
    }
    if (!nonzero) v += MvQ::basis_vector(dim, 0);
    return v;
}

double poly_coeff_norm(const MvPolynomial& p) {
    double m = 0;
    for (const auto& [ex, c] : p.terms()) m = std::max(m, norm_coefficients(c));
    return m;
}

}  // namespace

MvPolynomial azimuthal_blade_derivative(const MvPolynomial& f) {
    MvPolynomial r(f.nvars(), f.dim());
    for (const auto& [ex, c] : f.terms())
        for (unsigned mask = 0; mask < c.size(); ++mask) {
            if (c[mask].is_zero()) continue;
            const MvQ d = blade_azimuth_derivative(f.dim(), mask);
            if (!d.is_zero()) r.add_term(ex, d * c[mask]);
        }
    return r;
}

MvPolynomial cylindrical_gradient(const MvPolynomial& f) {
    if (f.nvars() != 2 || f.dim() != 3)
        throw std::invalid_argument("cylindrical_gradient expects two variables over G_3");
    const MvQ e0 = MvQ::basis_vector(3, 0);
    const MvQ e1 = MvQ::basis_vector(3, 1);
    const MvQ e2 = MvQ::basis_vector(3, 2);
    MvPolynomial r = e0 * f.derivative(0) + e1 * f.derivative(1);
    const MvPolynomial dphi = azimuthal_blade_derivative(f);
    if (!dphi.is_zero()) r += e2 * dphi.divide_by_variable(1);
    return r;
}

MvPolynomial qm_power(int k) {
    if (k < 0) throw std::invalid_argument("qm_power: negative exponent");
    const MvQ e0 = MvQ::basis_vector(3, 0);
    const MvQ e10 = MvQ::basis_vector(3, 1) * e0;
    MvPolynomial base(2, 3);
    base.add_term(exps2(1, 0), MvQ::scalar(3, Rational(1)));
    base.add_term(exps2(0, 1), -e10);
    return base.pow(unsigned(k)) * e0;
}

MvPolynomial qm_power_stray_axis(int k) {
    if (k < 0) throw std::invalid_argument("qm_power_stray_axis: negative exponent");
    const MvQ e0 = MvQ::basis_vector(3, 0);
    const MvQ e10 = MvQ::basis_vector(3, 1) * e0;
    MvPolynomial base(2, 3);
    base.add_term(exps2(1, 0), e0);
    base.add_term(exps2(0, 1), -e10);
    return base.pow(unsigned(k)) * e0;
}

MvPolynomial qm_gradient_closed_form(int k) {
    MvPolynomial r(2, 3);
    for (int j = 0; 2 * j + 1 <= k; ++j) {
        Rational c = binomial(k, 2 * j + 1);
        if (j % 2 == 0) c = -c;
        r.add_term(exps2(unsigned(k - 1 - 2 * j), unsigned(2 * j)), MvQ::scalar(3, c));
    }
    return r;
}

MvPolynomial qm_displayed_correction(int k) {
    const MvQ e0 = MvQ::basis_vector(3, 0);
    const MvQ e1 = MvQ::basis_vector(3, 1);
    MvPolynomial c(2, 3);
    switch (k) {
        case 1:
            c.add_term(exps2(1, 0), e0);
            break;
        case 2:
            c.add_term(exps2(2, 0), e0);
            break;
        case 3:
            c.add_term(exps2(3, 0), e0);
            c.add_term(exps2(0, 3), e1 * Rational(-1, 4));
            break;
        default:
            throw std::invalid_argument("qm_displayed_correction: only k = 1, 2, 3");
    }
    return c;
}

QmCorrection qm_correction_search(int k, int max_degree) {
    const MvQ e0 = MvQ::basis_vector(3, 0);
    const MvQ e1 = MvQ::basis_vector(3, 1);

    std::vector<MvPolynomial> basis;
    for (int a = 0; a <= max_degree; ++a)
        for (int b = 0; a + b <= max_degree; ++b) {
            basis.push_back(MvPolynomial::monomial(2, exps2(unsigned(a), unsigned(b)), e0));
            if (b >= 1)
                basis.push_back(MvPolynomial::monomial(2, exps2(unsigned(a), unsigned(b)), e1));
        }

    const MvPolynomial target = -cylindrical_gradient(qm_power(k));
    std::vector<MvPolynomial> columns;
    columns.reserve(basis.size());
    for (const MvPolynomial& m : basis) columns.push_back(cylindrical_gradient(m));

    // Index every (exponent, blade) slot reached by the target or a column.
    std::map<std::pair<MvPolynomial::Exponents, unsigned>, std::size_t> rows;
    auto index_rows = [&rows](const MvPolynomial& p) {
        for (const auto& [ex, c] : p.terms())
            for (unsigned mask = 0; mask < c.size(); ++mask)
                if (!c[mask].is_zero()) rows.emplace(std::make_pair(ex, mask), rows.size());
    };
    index_rows(target);
    for (const MvPolynomial& g : columns) index_rows(g);

    std::vector<std::vector<Rational>> m(rows.size(), std::vector<Rational>(columns.size(), Rational(0)));
    std::vector<Rational> rhs(rows.size(), Rational(0));
    auto fill = [&rows](const MvPolynomial& p, auto&& put) {
        for (const auto& [ex, c] : p.terms())
            for (unsigned mask = 0; mask < c.size(); ++mask)
                if (!c[mask].is_zero()) put(rows.at(std::make_pair(ex, mask)), c[mask]);
    };
    fill(target, [&rhs](std::size_t r, const Rational& v) { rhs[r] = v; });
    for (std::size_t j = 0; j < columns.size(); ++j)
        fill(columns[j], [&m, j](std::size_t r, const Rational& v) { m[r][j] = v; });

    const LinearSolution sol = solve_linear(std::move(m), std::move(rhs));
    QmCorrection out;
    if (!sol.solvable) return out;
    out.found = true;
    out.kernel_dim = sol.kernel_dim;
    for (std::size_t j = 0; j < basis.size(); ++j)
        if (!sol.particular[j].is_zero()) out.correction += sol.particular[j] * basis[j];
    return out;
}

MvPolynomial ck_extension(const std::vector<unsigned>& exponents) {
    const int n = int(exponents.size());
    const int dim = n + 1;
    if (n < 1 || dim > kMaxDim)
        throw std::invalid_argument("ck_extension: need between 1 and 5 exponents");
    const MvQ e0 = MvQ::basis_vector(dim, 0);
    MvPolynomial f(dim, dim);
    for (int i = 1; i <= n; ++i) {
        MvPolynomial block(dim, dim);
        MvPolynomial::Exponents exi(std::size_t(dim), 0u);
        exi[std::size_t(i)] = 1;
        block.add_term(exi, MvQ::scalar(dim, Rational(1)));
        MvPolynomial::Exponents ex0(std::size_t(dim), 0u);
        ex0[0] = 1;
        block.add_term(ex0, MvQ::basis_vector(dim, i) * e0);
        f += block.pow(exponents[std::size_t(i - 1)]);
    }
    return f;
}

MvD cauchy_kernel(const MvD& x, const MvD& y) {
    const MvD d = x - y;
    const double r2 = (d * d).scalar_part();
    if (!(r2 > 0)) throw std::domain_error("cauchy_kernel: coincident points");
    return d * std::pow(r2, -0.5 * double(d.dim()));
}

MvD fractional_power(const MvD& a, double p) {
    const int dim = a.dim();
    const double s = a.scalar_part();
    MvD v = a;
    v[0] = 0.0;
    MvD v2 = v * v;
    const double rho2 = -v2.scalar_part();
    v2[0] = 0.0;
    const double scale = std::abs(s) + std::abs(rho2) + 1.0;
    if (norm_coefficients(v2) > 1e-9 * scale || rho2 < -1e-9 * scale)
        throw std::domain_error("fractional_power: square of the non-scalar part is not a negative scalar");
    const double rho = std::sqrt(std::max(rho2, 0.0));
    if (rho < 1e-14 * scale) {
        if (s <= 0) throw std::domain_error("fractional_power: nonpositive scalar base");
        return MvD::scalar(dim, std::pow(s, p));
    }
    const double r = std::hypot(s, rho);
    const double ang = std::atan2(rho, s);
    const double mag = std::pow(r, p);
    return MvD::scalar(dim, mag * std::cos(p * ang)) + v * (mag * std::sin(p * ang) / rho);
}

MvD hypergeom_kernel(const MvD& x) {
    const int dim = x.dim();
    const MvD e0 = MvD::basis_vector(dim, 0);
    const MvD one = MvD::scalar(dim, 1.0);
    const MvD big_x = x * e0;
    const MvD big_x_bar = e0 * x;
    const double n = double(dim - 1);
    return e0 * (fractional_power(one - big_x_bar, -0.5 * (n - 1)) *
                 fractional_power(one - big_x, -0.5 * (n + 1)));
}

Report monogenic_suite(std::uint64_t seed, int samples) {
    Report rep;
    rep.suite = "monogenic";
    rep.seed = seed;
    rep.samples = samples;
    SampleRng rng(seed);

    constexpr double kTolKernelFd = 1e-6;
    constexpr double kTolOpsFd = 1e-8;
    constexpr double kTolNestedFd = 5e-5;
    constexpr double kTolHyp = 1e-9;
    constexpr double kTolPower = 1e-12;

    // Paravector bridge, exact: X = x e0 splits as x0 plus a part that
    // conjugation negates, and X conj(X) recovers the squared length.
    {
        double err = 0;
        for (int dim : {3, 4})
            for (int s = 0; s < std::max(4, samples / 4); ++s) {
                const MvQ x = random_rational_vector(rng, dim);
                const MvQ e0 = MvQ::basis_vector(dim, 0);
                const MvQ big_x = x * e0;
                const MvQ bar = e0 * x;
                err = std::max(err, norm_coefficients(big_x + bar - MvQ::scalar(dim, Rational(2) * big_x.scalar_part())));
                err = std::max(err, norm_coefficients(big_x * bar - x * x));
                err = std::max(err, norm_coefficients(bar - e0 * big_x * e0));
            }
        rep.add("paravector_split_and_modulus_exact", err, 0.0);
    }

    // Gradient-free power sums: exact vanishing over G_3 and G_4.
    {
        double err = 0;
        for (int n : {2, 3})
            for (int s = 0; s < std::max(4, samples / 4); ++s) {
                std::vector<unsigned> ks(static_cast<std::size_t>(n));
                for (unsigned& v : ks) v = unsigned(rng.uniform_int(1, 6));
                const MvPolynomial g = poly_gradient(ck_extension(ks));
                err = std::max(err, poly_coeff_norm(g));
            }
        rep.add("power_sum_extension_gradient_vanishes", err, 0.0);
        rep.add("power_sum_extension_degree_444_gradient_vanishes",
                poly_coeff_norm(poly_gradient(ck_extension({4, 4, 4}))), 0.0);
    }

    // The squared planar block alone, and the displayed flattening of it.
    {
        MvPolynomial block(3, 3);
        block.add_term({0, 1, 0}, MvQ::scalar(3, Rational(1)));
        block.add_term({1, 0, 0}, MvQ::basis_vector(3, 1) * MvQ::basis_vector(3, 0));
        const MvPolynomial f = -(block * block);
        rep.add("squared_block_extension_gradient_vanishes", poly_coeff_norm(poly_gradient(f)), 0.0);

        MvPolynomial displayed(3, 3);
        displayed.add_term({2, 0, 0}, MvQ::scalar(3, Rational(2)));
        displayed.add_term({0, 2, 0}, MvQ::scalar(3, Rational(-1)));
        displayed.add_term({1, 1, 0}, MvQ::basis_vector(3, 0) * Rational(-2));
        rep.add_info("displayed_square_example_gradient_residual",
                     poly_coeff_norm(poly_gradient(displayed)),
                     "the displayed flattening is not itself gradient-free; the block construction is");
    }

    // Axial power family: cylindrical gradient is the scalar closed form.
    {
        bool all = true;
        double err = 0;
        for (int k = 1; k <= 15; ++k) {
            const MvPolynomial g = cylindrical_gradient(qm_power(k));
            all = all && (g == qm_gradient_closed_form(k));
            err = std::max(err, poly_coeff_norm(g - qm_gradient_closed_form(k)));
            const MvPolynomial nonscalar = g - g.grade(0);
            err = std::max(err, poly_coeff_norm(nonscalar));
        }
        rep.add_flag("axial_power_gradient_matches_closed_form", all);
        rep.add("axial_power_gradient_scalar_residual", err, 0.0);
    }

    // Frozen degree-eleven gradient.
    {
        MvPolynomial expect(2, 3);
        const long long coeff[6] = {-11, 165, -462, 330, -55, 1};
        for (int j = 0; j < 6; ++j)
            expect.add_term(exps2(unsigned(10 - 2 * j), unsigned(2 * j)),
                            MvQ::scalar(3, Rational(coeff[j])));
        const MvPolynomial got = cylindrical_gradient(qm_power(11));
        rep.add("axial_power_11_gradient_frozen_coefficients", poly_coeff_norm(got - expect), 0.0);
        rep.add_info("axial_power_11_stray_axis_variant_residual",
                     poly_coeff_norm(cylindrical_gradient(qm_power_stray_axis(11)) - expect),
                     "keeping the axis vector inside the base does not reproduce the tabulated gradient");
    }

    // Displayed completions for k = 1, 2, 3 are exactly gradient-free.
    {
        double err = 0;
        for (int k = 1; k <= 3; ++k)
            err = std::max(err, poly_coeff_norm(cylindrical_gradient(qm_power(k) + qm_displayed_correction(k))));
        rep.add("axial_power_displayed_completions_gradient_free", err, 0.0);
    }

    // Exact completion search: every k up to eight admits one.
    {
        bool found_all = true;
        double err = 0;
        std::ostringstream kernel_note;
        for (int k = 1; k <= 8; ++k) {
            const QmCorrection c = qm_correction_search(k, k);
            if (!c.found) {
                found_all = false;
                continue;
            }
            err = std::max(err, poly_coeff_norm(cylindrical_gradient(qm_power(k) + c.correction)));
            kernel_note << (k > 1 ? " " : "") << "k" << k << ":dim" << c.kernel_dim;
        }
        rep.add_flag("axial_power_completion_search_succeeds", found_all);
        rep.add("axial_power_completion_gradient_residual", err, 0.0);
        rep.add_info("axial_power_completion_kernel_dims", 0.0, kernel_note.str());
    }

    // Cauchy kernel: relative first-order residual of the full gradient.
    for (int dim : {3, 4}) {
        double err = 0;
        for (int s = 0; s < std::max(8, samples / 2); ++s) {
            const MvD y = random_vector(rng, dim, -0.3, 0.3);
            MvD dir = random_vector(rng, dim, -1.0, 1.0);
            const double dn = norm_coefficients(dir);
            if (dn < 1e-3) continue;
            const MvD x = y + dir * (rng.uniform(0.5, 1.5) / dn);
            const Field g = [&y](const MvD& p) { return cauchy_kernel(p, y); };
            const double sep = norm_coefficients(x - y);
            const double res = norm_coefficients(fd_gradient_nd(g, x, 3e-5)) * sep / norm_coefficients(g(x));
            err = std::max(err, res);
        }
        rep.add("cauchy_kernel_gradient_vanishes_dim" + std::to_string(dim), err, kTolKernelFd);
    }

    // Operator translations d_X (e0 f) = grad f = e0 d_conjX f, finite differences.
    {
        const MvD m1 = MvD::scalar(3, 1.0) + MvD::basis_vector(3, 0) * 2.0 - MvD::basis_vector(3, 1) +
                       MvD::basis_vector(3, 0) * MvD::basis_vector(3, 1) * 0.5;
        const MvD m2 = MvD::basis_vector(3, 2) * 1.5 - MvD::basis_vector(3, 0) * MvD::basis_vector(3, 2) * 0.7 +
                       MvD::scalar(3, 0.3);
        const Field f = [&m1, &m2](const MvD& p) {
            const double x0 = p[1], x1 = p[2], x2 = p[4];
            const double s1 = std::exp(0.3 * x0) * std::cos(0.4 * x1) * std::sin(0.2 * x2 + 0.7);
            const double s2 = x0 * x0 * x1 - 0.5 * x1 * x2 + x2 * x2 * x2 * 0.25;
            return m1 * s1 + m2 * s2;
        };
        const MvD e0 = MvD::basis_vector(3, 0);
        const Field f_left = [&f, &e0](const MvD& p) { return e0 * f(p); };
        double err_x = 0, err_xbar = 0, err_lap = 0;
        for (int s = 0; s < std::max(6, samples / 3); ++s) {
            const MvD x = random_vector(rng, 3, -1.2, 1.2);
            const MvD grad = fd_gradient_nd(f, x, 1e-5);
            err_x = std::max(err_x, norm_coefficients(fd_paravector_derivative(f_left, x, false, 1e-5) - grad));
            err_xbar = std::max(err_xbar, norm_coefficients(e0 * fd_paravector_derivative(f, x, true, 1e-5) - grad));
            const Field inner = [&f](const MvD& p) { return fd_paravector_derivative(f, p, true, 1e-5); };
            MvD lap(3);
            for (int k = 0; k < 3; ++k) {
                const MvD e = MvD::basis_vector(3, k);
                const double h = 1e-4;
                lap += (f(x + e * h) - f(x) * 2.0 + f(x - e * h)) * (1.0 / (h * h));
            }
            err_lap = std::max(err_lap, norm_coefficients(fd_paravector_derivative(inner, x, false, 1e-3) - lap));
        }
        rep.add("paravector_derivative_left_factor_matches_gradient", err_x, kTolOpsFd);
        rep.add("paravector_conjugate_derivative_matches_gradient", err_xbar, kTolOpsFd);
        rep.add("paravector_derivative_pair_factors_laplacian", err_lap, kTolNestedFd);
    }

    // Fractional powers: square root squares back, power -1 inverts.
    {
        double err = 0;
        for (int dim : {3, 4})
            for (int s = 0; s < std::max(6, samples / 3); ++s) {
                MvD a = MvD::scalar(dim, rng.uniform(0.6, 1.6));
                for (int k = 1; k < dim; ++k)
                    a += MvD::basis_vector(dim, k) * MvD::basis_vector(dim, 0) * rng.uniform(-0.5, 0.5);
                const MvD root = fractional_power(a, 0.5);
                err = std::max(err, norm_coefficients(root * root - a));
                err = std::max(err, norm_coefficients(fractional_power(a, -1.0) - inverse(a)));
            }
        rep.add("fractional_power_consistency", err, kTolPower);
    }

    // Fractional-power factorization of the unit-displacement kernel.
    for (int dim : {3, 4}) {
        double err = 0;
        for (int s = 0; s < std::max(8, samples / 2); ++s) {
            MvD x = random_vector(rng, dim, -1.0, 1.0);
            const double nx = norm_coefficients(x);
            if (nx < 1e-3) continue;
            x = x * (rng.uniform(0.05, 0.5) / nx);
            const MvD direct = cauchy_kernel(MvD::basis_vector(dim, 0), x);
            err = std::max(err, norm_coefficients(hypergeom_kernel(x) - direct));
        }
        rep.add("hypergeometric_factorization_matches_kernel_dim" + std::to_string(dim), err, kTolHyp);
    }

    return rep;
}

}  // namespace sga
