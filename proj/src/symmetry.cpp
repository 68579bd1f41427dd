#include "sga/symmetry.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "sga/random.hpp"

namespace sga {

namespace {

// Max |coefficient| of the difference, after conversion to double. Exact
// equality is asserted separately; this turns a mismatch into a magnitude.
double poly_residual(const MvPolynomial& a, const MvPolynomial& b) {
    MvPolynomial d = a - b;
    double worst = 0.0;
    for (const auto& [ex, c] : d.terms()) {
        MvD cd = to_double_mv(c);
        for (double v : cd.coefficients()) worst = std::max(worst, std::abs(v));
    }
    return worst;
}

std::vector<MvPolynomial::Exponents> monomials_up_to(int nvars, unsigned max_degree) {
    std::vector<MvPolynomial::Exponents> out;
    MvPolynomial::Exponents ex(std::size_t(nvars), 0u);
    // Odometer over exponent tuples with total degree bound.
    while (true) {
        unsigned total = 0;
        for (unsigned e : ex) total += e;
        if (total <= max_degree) out.push_back(ex);
        int k = 0;
        while (k < nvars) {
            if (++ex[std::size_t(k)] <= max_degree) break;
            ex[std::size_t(k)] = 0;
            ++k;
        }
        if (k == nvars) break;
    }
    return out;
}

std::vector<MvPolynomial> scalar_test_monomials(unsigned max_degree) {
    std::vector<MvPolynomial> fs;
    for (const auto& ex : monomials_up_to(kSymDim, max_degree))
        fs.push_back(MvPolynomial::monomial(kSymDim, ex, MvQ::scalar(kSymDim, Rational(1))));
    return fs;
}

MvQ random_int_vector(SampleRng& rng) {
    std::vector<Rational> comp;
    bool all_zero = true;
    for (int k = 0; k < kSymDim; ++k) {
        long long v = rng.uniform_int(-3, 3);
        if (v != 0) all_zero = false;
        comp.push_back(Rational(v));
    }
    if (all_zero) comp[0] = Rational(1);
    return MvQ::vector(kSymDim, comp);
}

std::string vec_label(const MvQ& a, const MvQ& b) {
    std::ostringstream os;
    os << "a=" << a.to_string() << " b=" << b.to_string();
    return os.str();
}

using Op = MvPolynomial (*)(const MvQ&, const MvPolynomial&);

MvPolynomial bracket(Op A, const MvQ& a, Op B, const MvQ& b, const MvPolynomial& f) {
    return A(a, B(b, f)) - B(b, A(a, f));
}

}  // namespace

MvQ pseudoscalar3() { return MvQ::blade(kSymDim, 0b111u, Rational(1)); }

MvQ cross3(const MvQ& a, const MvQ& b) {
    if (!a.has_only_grade(1) || !b.has_only_grade(1))
        throw std::invalid_argument("cross3 expects vectors");
    return -(pseudoscalar3() * wedge_vectors(a, b));
}

MvPolynomial position_polynomial(int dim) {
    MvPolynomial x(dim, dim);
    for (int k = 0; k < dim; ++k) {
        MvPolynomial::Exponents ex(std::size_t(dim), 0u);
        ex[std::size_t(k)] = 1;
        x.add_term(ex, MvQ::basis_vector(dim, k));
    }
    return x;
}

MvPolynomial poly_gradient(const MvPolynomial& f) {
    MvPolynomial r(f.nvars(), f.dim());
    for (int k = 0; k < f.nvars(); ++k)
        r += MvQ::basis_vector(f.dim(), k) * f.derivative(k);
    return r;
}

MvPolynomial poly_laplacian(const MvPolynomial& f) {
    MvPolynomial r(f.nvars(), f.dim());
    for (int k = 0; k < f.nvars(); ++k) r += f.derivative(k).derivative(k);
    return r;
}

MvPolynomial euler_operator(const MvPolynomial& f) {
    MvPolynomial r(f.nvars(), f.dim());
    for (int k = 0; k < f.nvars(); ++k)
        r += MvPolynomial::variable(f.nvars(), f.dim(), k) * f.derivative(k);
    return r;
}

MvPolynomial translation_generator(const MvQ& a, const MvPolynomial& f) {
    MvPolynomial r(f.nvars(), f.dim());
    for (int k = 0; k < f.nvars(); ++k) {
        const Rational& ak = a[1u << k];
        if (ak.is_zero()) continue;
        r += f.derivative(k) * ak;
    }
    return r;
}

MvPolynomial rotation_generator(const MvQ& b, const MvPolynomial& f) {
    const int d = f.dim();
    MvPolynomial r(f.nvars(), d);
    for (int k = 0; k < f.nvars(); ++k) {
        MvPolynomial dkf = f.derivative(k);
        if (dkf.is_zero()) continue;
        for (int j = 0; j < d; ++j) {
            MvQ coeff = outer(outer(b, MvQ::basis_vector(d, j)), MvQ::basis_vector(d, k));
            if (coeff.is_zero()) continue;
            r += MvPolynomial::variable(f.nvars(), d, j) * (coeff * dkf);
        }
    }
    return r;
}

MvPolynomial vector_rotation_component(int k, const MvPolynomial& f) {
    return pseudoscalar3() * rotation_generator(MvQ::basis_vector(kSymDim, k), f);
}

MvPolynomial vector_rotation(const MvPolynomial& f) {
    MvPolynomial r(f.nvars(), f.dim());
    for (int k = 0; k < kSymDim; ++k)
        r += MvQ::basis_vector(kSymDim, k) * vector_rotation_component(k, f);
    return r;
}

MvPolynomial symmetry_operator(const MvQ& a, const MvQ& b, const MvPolynomial& f) {
    return translation_generator(a, f) + rotation_generator(b, f);
}

BracketSigns determine_bracket_signs(unsigned max_degree) {
    BracketSigns out;
    out.translations_commute = true;
    const MvQ i3 = pseudoscalar3();
    const auto fs = scalar_test_monomials(max_degree);
    const std::vector<std::pair<int, int>> axis_pairs = {{0, 1}, {1, 2}, {2, 0}, {1, 0}};

    bool mixed_minus = true, mixed_plus = true;
    bool rot_minus = true, rot_plus = true;
    for (auto [ia, ib] : axis_pairs) {
        const MvQ a = MvQ::basis_vector(kSymDim, ia);
        const MvQ b = MvQ::basis_vector(kSymDim, ib);
        const MvQ axb = cross3(a, b);
        for (const auto& f : fs) {
            if (!bracket(&translation_generator, a, &translation_generator, b, f).is_zero())
                out.translations_commute = false;
            MvPolynomial mixed = bracket(&rotation_generator, a, &translation_generator, b, f);
            MvPolynomial p_axb = translation_generator(axb, f);
            if (mixed != -(i3 * p_axb)) mixed_minus = false;
            if (mixed != i3 * p_axb) mixed_plus = false;
            MvPolynomial rot = bracket(&rotation_generator, a, &rotation_generator, b, f);
            MvPolynomial j_axb = rotation_generator(axb, f);
            if (rot != -(i3 * j_axb)) rot_minus = false;
            if (rot != i3 * j_axb) rot_plus = false;
        }
    }
    out.mixed = mixed_minus ? -1 : (mixed_plus ? +1 : 0);
    out.rotation = rot_minus ? -1 : (rot_plus ? +1 : 0);
    return out;
}

Report symmetry_bracket_suite(std::uint64_t seed, int samples) {
    Report rep;
    rep.suite = "brackets";
    rep.seed = seed;
    rep.samples = samples;
    SampleRng rng(seed);
    const MvQ i3 = pseudoscalar3();

    const BracketSigns signs = determine_bracket_signs();
    rep.add_flag("bracket_signs_determined_on_basis", signs.translations_commute &&
                                                          signs.mixed != 0 && signs.rotation != 0,
                 "axis-vector brackets match exactly one sign convention each");
    rep.add_info("mixed_bracket_empirical_sign", double(signs.mixed),
                 "sign s in [J_a,P_b] = s*i*P_{a x b}, determined exactly");
    rep.add_info("rotation_bracket_empirical_sign", double(signs.rotation),
                 "sign s in [J_a,J_b] = s*i*J_{a x b}, determined exactly");

    const auto fs = scalar_test_monomials(4);
    double worst_pp = 0.0, worst_mixed = 0.0, worst_rot = 0.0, worst_plus = 0.0;
    std::string worst_pt;
    bool all_exact = true;
    for (int s = 0; s < samples; ++s) {
        const MvQ a = random_int_vector(rng);
        const MvQ b = random_int_vector(rng);
        const MvQ axb = cross3(a, b);
        for (const auto& f : fs) {
            MvPolynomial pp = bracket(&translation_generator, a, &translation_generator, b, f);
            if (!pp.is_zero()) all_exact = false;
            worst_pp = std::max(worst_pp, poly_residual(pp, MvPolynomial::zero(kSymDim, kSymDim)));

            MvPolynomial mixed = bracket(&rotation_generator, a, &translation_generator, b, f);
            MvPolynomial mixed_expect = Rational(signs.mixed) * (i3 * translation_generator(axb, f));
            if (mixed != mixed_expect) all_exact = false;
            double e = poly_residual(mixed, mixed_expect);
            if (e > worst_mixed) {
                worst_mixed = e;
                worst_pt = vec_label(a, b);
            }

            MvPolynomial rot = bracket(&rotation_generator, a, &rotation_generator, b, f);
            MvPolynomial rot_expect = Rational(signs.rotation) * (i3 * rotation_generator(axb, f));
            if (rot != rot_expect) all_exact = false;
            worst_rot = std::max(worst_rot, poly_residual(rot, rot_expect));
            worst_plus = std::max(worst_plus, poly_residual(rot, -Rational(signs.rotation) *
                                                                     (i3 * rotation_generator(axb, f))));
        }
    }
    rep.add("translation_translation_bracket_vanishes", worst_pp, 0.0);
    rep.add("rotation_translation_bracket_minus_i_form", worst_mixed, 0.0, worst_pt);
    rep.add("rotation_rotation_bracket_minus_i_form", worst_rot, 0.0);
    rep.add_flag("bracket_identities_exact", all_exact, "all comparisons in the rational lane");
    rep.add_info("rotation_rotation_bracket_opposite_sign_residual", worst_plus,
                 "residual of the opposite sign convention for [J_a,J_b]; nonzero by construction");
    return rep;
}

Report jx_square_suite(std::uint64_t seed, int samples) {
    Report rep;
    rep.suite = "jx2";
    rep.seed = seed;
    rep.samples = samples;
    SampleRng rng(seed);
    const MvQ i3 = pseudoscalar3();
    const MvPolynomial x2 = [] {
        MvPolynomial s(kSymDim, kSymDim);
        for (int k = 0; k < kSymDim; ++k) {
            MvPolynomial xk = MvPolynomial::variable(kSymDim, kSymDim, k);
            s += xk * xk;
        }
        return s;
    }();

    auto fs = scalar_test_monomials(4);
    // A few multivector-valued inputs: monomials with random blade coefficients.
    for (int s = 0; s < std::max(1, samples / 4); ++s) {
        MvPolynomial::Exponents ex(kSymDim, 0u);
        for (auto& e : ex) e = unsigned(rng.uniform_int(0, 3));
        unsigned mask = unsigned(rng.uniform_int(0, 7));
        fs.push_back(MvPolynomial::monomial(
            kSymDim, ex, MvQ::blade(kSymDim, mask, Rational(rng.uniform_int(1, 5)))));
    }

    double worst_comp = 0.0, worst_geo = 0.0, worst_printed = 0.0;
    bool all_exact = true;
    for (const auto& f : fs) {
        MvPolynomial comp(kSymDim, kSymDim);
        for (int k = 0; k < kSymDim; ++k)
            comp += vector_rotation_component(k, vector_rotation_component(k, f));
        MvPolynomial euler = euler_operator(f);
        MvPolynomial expect = x2 * poly_laplacian(f) - euler - euler_operator(euler);
        if (comp != expect) all_exact = false;
        worst_comp = std::max(worst_comp, poly_residual(comp, expect));

        MvPolynomial geo = vector_rotation(vector_rotation(f));
        MvPolynomial geo_expect = expect + i3 * vector_rotation(f);
        if (geo != geo_expect) all_exact = false;
        worst_geo = std::max(worst_geo, poly_residual(geo, geo_expect));

        MvPolynomial printed = x2 * f - euler - euler_operator(euler);
        worst_printed = std::max(worst_printed, poly_residual(comp, printed));
    }
    rep.add("vector_rotation_square_componentwise_identity", worst_comp, 0.0);
    rep.add("vector_rotation_square_composition_extra_term", worst_geo, 0.0);
    rep.add_flag("vector_rotation_square_exact", all_exact, "rational-lane comparisons");
    rep.add_info("vector_rotation_square_without_laplacian_residual", worst_printed,
                 "residual when the x^2 term omits the Laplacian; nonzero away from degree<2");
    return rep;
}

Report harmonicity_suite(std::uint64_t seed, int samples) {
    Report rep;
    rep.suite = "harmonicity";
    rep.seed = seed;
    rep.samples = samples;
    SampleRng rng(seed);

    // Laplacian commutes with every generator on a full monomial basis.
    const auto fs = scalar_test_monomials(5);
    double worst_comm = 0.0;
    bool comm_exact = true;
    for (int s = 0; s < samples; ++s) {
        const MvQ a = random_int_vector(rng);
        const MvQ b = random_int_vector(rng);
        for (const auto& f : fs) {
            MvPolynomial lhs = poly_laplacian(symmetry_operator(a, b, f));
            MvPolynomial rhs = symmetry_operator(a, b, poly_laplacian(f));
            if (lhs != rhs) comm_exact = false;
            worst_comm = std::max(worst_comm, poly_residual(lhs, rhs));
        }
    }
    rep.add("laplacian_commutes_with_generators", worst_comm, 0.0);
    rep.add_flag("laplacian_commutation_exact", comm_exact, "rational-lane comparisons");

    // Explicit harmonic polynomials stay harmonic under P_a + J_b.
    std::vector<MvPolynomial> harmonics;
    auto var = [](int k) { return MvPolynomial::variable(kSymDim, kSymDim, k); };
    harmonics.push_back(MvPolynomial::scalar_constant(kSymDim, kSymDim, Rational(1)));
    for (int k = 0; k < 3; ++k) harmonics.push_back(var(k));
    harmonics.push_back(var(0) * var(1));
    harmonics.push_back(var(1) * var(2));
    harmonics.push_back(var(0) * var(0) - var(1) * var(1));
    harmonics.push_back(var(0) * var(0) * var(0) -
                        Rational(3, 2) * (var(0) * (var(1) * var(1) + var(2) * var(2))));
    harmonics.push_back(var(1) * var(1) * var(1) - Rational(3) * (var(1) * (var(2) * var(2))));
    // Degree-4 zonal harmonic: x0^4 - 3 x0^2 (x1^2+x2^2) + (3/8)(x1^2+x2^2)^2.
    {
        MvPolynomial rho2 = var(1) * var(1) + var(2) * var(2);
        harmonics.push_back(var(0).pow(4) - Rational(3) * (var(0) * var(0) * rho2) +
                            Rational(3, 8) * (rho2 * rho2));
    }

    double worst_seed_h = 0.0, worst_preserved = 0.0;
    bool preserved_exact = true;
    for (const auto& h : harmonics)
        worst_seed_h =
            std::max(worst_seed_h, poly_residual(poly_laplacian(h),
                                                 MvPolynomial::zero(kSymDim, kSymDim)));
    for (int s = 0; s < samples; ++s) {
        const MvQ a = random_int_vector(rng);
        const MvQ b = random_int_vector(rng);
        for (const auto& h : harmonics) {
            MvPolynomial g = symmetry_operator(a, b, h);
            MvPolynomial lap = poly_laplacian(g);
            if (!lap.is_zero()) preserved_exact = false;
            worst_preserved = std::max(
                worst_preserved, poly_residual(lap, MvPolynomial::zero(kSymDim, kSymDim)));
        }
    }
    rep.add("harmonic_seeds_are_harmonic", worst_seed_h, 0.0);
    rep.add("generators_preserve_harmonicity", worst_preserved, 0.0);
    rep.add_flag("harmonicity_preservation_exact", preserved_exact, "rational-lane comparisons");
    return rep;
}

}  // namespace sga
