#include "sga/spheroidal.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace sga {

namespace {

constexpr int kDim = 3;

Multivector<double> e(int k) { return Multivector<double>::basis_vector(kDim, k); }

}  // namespace

const char* to_string(SpheroidalCase c) {
    return c == SpheroidalCase::prolate ? "prolate" : "oblate";
}

Multivector<double> CartesianPoint::mv() const {
    return Multivector<double>::vector(kDim, {x0, x1, x2});
}

CartesianPoint CartesianPoint::from_mv(const Multivector<double>& v) {
    return CartesianPoint{v[1], v[2], v[4]};
}

double CartesianPoint::radial() const { return std::hypot(x1, x2); }

double CartesianPoint::norm2() const { return x0 * x0 + x1 * x1 + x2 * x2; }

void validate(const SpheroidalPoint& p) {
    if (!(p.mu > 0)) throw std::invalid_argument("spheroidal point: mu must be positive");
    if (!(p.eta >= 0)) throw std::invalid_argument("spheroidal point: eta must be >= 0");
    if (!(p.theta >= 0 && p.theta <= M_PI))
        throw std::invalid_argument("spheroidal point: theta must lie in [0, pi]");
}

CartesianPoint position(const SpheroidalPoint& p) {
    validate(p);
    const double ch = std::cosh(p.eta), sh = std::sinh(p.eta);
    const double ct = std::cos(p.theta), st = std::sin(p.theta);
    const double cp = std::cos(p.phi), sp = std::sin(p.phi);
    double axial, planar;
    if (p.kind == SpheroidalCase::prolate) {
        axial = p.mu * ch * ct;
        planar = p.mu * sh * st;
    } else {
        axial = p.mu * sh * ct;
        planar = p.mu * ch * st;
    }
    return CartesianPoint{axial, planar * cp, planar * sp};
}

CartesianPoint position_via_product(const SpheroidalPoint& p) {
    validate(p);
    const ZetaPartials d = zeta_partials(make_zeta(p.eta, p.theta, p.phi));
    const Multivector<double> zpart =
        (p.kind == SpheroidalCase::prolate) ? d.z : d.z_eta;
    return CartesianPoint::from_mv((zpart * e(0)) * p.mu);
}

OmegaPair omega(const CartesianPoint& x, double mu, SpheroidalCase kind) {
    if (!(mu > 0)) throw std::invalid_argument("omega: mu must be positive");
    double dplus, dminus;
    if (kind == SpheroidalCase::prolate) {
        // foci at +- mu e0
        dplus = std::sqrt((x.x0 + mu) * (x.x0 + mu) + x.x1 * x.x1 + x.x2 * x.x2);
        dminus = std::sqrt((x.x0 - mu) * (x.x0 - mu) + x.x1 * x.x1 + x.x2 * x.x2);
    } else {
        // foci on the ring of radius mu: |y +- mu e_p|^2 = y^2 + mu^2 +- 2 mu y_p
        const double yp = x.radial();
        dplus = std::sqrt(x.norm2() + mu * mu + 2 * mu * yp);
        dminus = std::sqrt(x.norm2() + mu * mu - 2 * mu * yp);
    }
    return OmegaPair{dplus + dminus, dplus - dminus};
}

OmegaPair omega_radical(const CartesianPoint& x, double mu, SpheroidalCase kind) {
    if (!(mu > 0)) throw std::invalid_argument("omega_radical: mu must be positive");
    const double q = (kind == SpheroidalCase::prolate) ? x.x0 : x.radial();
    const double a = x.norm2() + mu * mu;
    double disc = a * a - 4 * mu * mu * q * q;
    if (disc < 0) disc = 0;  // roundoff guard; analytically >= 0
    const double root = std::sqrt(disc);
    return OmegaPair{std::sqrt(2.0) * std::sqrt(a + root),
                     std::sqrt(2.0) * std::sqrt(std::max(a - root, 0.0))};
}

SpheroidalPoint invert(const CartesianPoint& x, double mu, SpheroidalCase kind) {
    if (!(mu > 0)) throw std::invalid_argument("invert: mu must be positive");
    const OmegaPair w = omega(x, mu, kind);
    const double u = w.omega / (2 * mu);  // cosh(eta) >= 1 up to roundoff

    SpheroidalPoint p;
    p.kind = kind;
    p.mu = mu;
    p.phi = std::atan2(x.x2, x.x1);
    if (p.phi < 0) p.phi += 2 * M_PI;

    if (u <= 1.0 + 1e-13) {
        // On (or numerically on) the focal segment / focal disk: eta hits the
        // branch point and the chart is not invertible. Report the limit.
        SpheroidalPoint limit = p;
        limit.eta = 0;
        const double v = std::clamp(w.omega_bar / (2 * mu), -1.0, 1.0);
        limit.theta = (kind == SpheroidalCase::prolate) ? std::acos(v) : std::asin(v);
        throw DegenerateCoordinatesError(
            "invert: point lies on the focal set (eta at branch point)", limit);
    }
    p.eta = std::acosh(u);

    const double v = std::clamp(w.omega_bar / (2 * mu), -1.0, 1.0);
    if (kind == SpheroidalCase::prolate) {
        p.theta = std::acos(v);
    } else {
        // omega_bar = 2 mu sin(theta) covers [0,pi] twice; the sign of the
        // axial coordinate picks the hemisphere.
        const double t = std::asin(v);
        p.theta = (x.x0 >= 0) ? t : M_PI - t;
    }
    return p;
}

CoordinateFrames coordinate_frames(const SpheroidalPoint& p) {
    validate(p);
    const PhaseState ps = phase_state(p.phi);
    const ZetaPartials d = zeta_partials(make_zeta(p.eta, p.theta, ps));
    const double sh = std::sinh(p.eta), ch = std::cosh(p.eta), st = std::sin(p.theta);
    const Multivector<double> e0 = e(0);

    CoordinateFrames f;
    if (p.kind == SpheroidalCase::prolate) {
        if (sh * st == 0)
            throw DegenerateFrameError(
                "coordinate_frames: x_phi vanishes on the symmetry axis (sinh eta sin theta = 0)");
        f.t_eta = (d.z_eta * e0) * p.mu;
        f.t_theta = (d.z_theta * e0) * p.mu;
        f.t_phi = ps.e_p_dot * (p.mu * sh * st);
        const double g = (d.z_eta * e0_conj(d.z_eta)).scalar_part();  // z_eta zbar_eta
        f.r_eta = (d.z_eta * e0) * (1.0 / (p.mu * g));
        f.r_theta = (d.z_theta * e0) * (1.0 / (p.mu * g));
        f.r_phi = ps.e_p_dot * (1.0 / (p.mu * sh * st));
    } else {
        if (ch * st == 0)
            throw DegenerateFrameError(
                "coordinate_frames: y_phi vanishes on the symmetry axis (sin theta = 0)");
        f.t_eta = (d.z * e0) * p.mu;
        f.t_theta = (ps.I_p * d.z * e0) * p.mu;
        f.t_phi = ps.e_p_dot * (p.mu * ch * st);
        const double g = (d.z * e0_conj(d.z)).scalar_part();  // z zbar
        f.r_eta = (d.z * e0) * (1.0 / (p.mu * g));
        f.r_theta = (ps.I_p * d.z * e0) * (1.0 / (p.mu * g));
        f.r_phi = ps.e_p_dot * (1.0 / (p.mu * ch * st));
    }
    return f;
}

SpheroidalCase bounding_kind(int case_id) {
    switch (case_id) {
        case 1:
        case 4:
            return SpheroidalCase::oblate;
        case 2:
        case 3:
            return SpheroidalCase::prolate;
        default:
            throw std::invalid_argument("bounding case must be 1..4");
    }
}

double bounding_mu(int case_id, double nu) {
    double mu2;
    switch (case_id) {
        case 1:
        case 2:
            mu2 = std::expm1(2 * nu);  // e^(2 nu) - 1
            break;
        case 3:
        case 4:
            mu2 = -std::expm1(-2 * nu);  // 1 - e^(-2 nu)
            break;
        default:
            throw std::invalid_argument("bounding case must be 1..4");
    }
    if (!(mu2 > 0)) {
        std::ostringstream os;
        os << "bounding_mu: case " << case_id << " with nu=" << nu
           << " gives mu^2 = " << mu2 << " <= 0";
        throw std::domain_error(os.str());
    }
    return std::sqrt(mu2);
}

CartesianPoint bounding_point(int case_id, double nu, double theta, double phi) {
    if (!(nu >= 0)) throw std::invalid_argument("bounding_point: nu must be >= 0");
    const double ct = std::cos(theta), st = std::sin(theta);
    double axial, planar;
    switch (case_id) {
        case 1:  // oblate, equatorial semi-axis e^nu
            axial = ct;
            planar = std::exp(nu) * st;
            break;
        case 2:  // prolate, polar semi-axis e^nu
            axial = std::exp(nu) * ct;
            planar = st;
            break;
        case 3:  // prolate, equatorial semi-axis e^-nu
            axial = ct;
            planar = std::exp(-nu) * st;
            break;
        case 4:  // oblate, polar semi-axis e^-nu
            axial = std::exp(-nu) * ct;
            planar = st;
            break;
        default:
            throw std::invalid_argument("bounding case must be 1..4");
    }
    return CartesianPoint{axial, planar * std::cos(phi), planar * std::sin(phi)};
}

}  // namespace sga
