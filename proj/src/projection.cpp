#include "sga/projection.hpp"

#include <cmath>
#include <sstream>

namespace sga {

namespace {

constexpr int kDim = 3;

double surface_scale(int case_id, double nu) {
    switch (case_id) {
        case 1:
            return std::exp(nu);   // oblate: equatorial semi-axis
        case 3:
            return std::exp(-nu);  // prolate: equatorial semi-axis
        default:
            throw std::invalid_argument("projection handles bounding cases 1 and 3 only");
    }
}

}  // namespace

PlanePoint project(const CartesianPoint& x, double nu, int case_id) {
    const double b = surface_scale(case_id, nu);
    const double xp = x.radial();
    const double membership = x.x0 * x.x0 + (xp / b) * (xp / b);
    if (std::fabs(membership - 1.0) > 1e-9) {
        std::ostringstream os;
        os << "project: point is not on the case-" << case_id
           << " surface (membership residual " << membership - 1.0 << ")";
        throw std::invalid_argument(os.str());
    }
    if (x.x0 + 1.0 <= 1e-12)
        throw std::invalid_argument("project: antipode x0 = -1 has no image");

    // Closed form in x0 and the ray form t e_p = (x - x0 e0)/(x0 + 1); they
    // agree on-surface and we return the ray form, which also fixes phi.
    PlanePoint out;
    out.t = xp / (x.x0 + 1.0);
    out.phi = std::atan2(x.x2, x.x1);
    if (out.phi < 0) out.phi += 2 * M_PI;
    return out;
}

CartesianPoint unproject(const PlanePoint& t, double nu, int case_id) {
    const double b = surface_scale(case_id, nu);
    const double b2 = b * b;  // e^(+-2 nu)
    const double denom = b2 + t.t * t.t;
    const double planar = 2 * b2 * t.t / denom;
    return CartesianPoint{(b2 - t.t * t.t) / denom, planar * std::cos(t.phi),
                          planar * std::sin(t.phi)};
}

PlanePoint stereographic(const CartesianPoint& x) {
    if (std::fabs(x.norm2() - 1.0) > 1e-9)
        throw std::invalid_argument("stereographic: point is not on the unit sphere");
    const Multivector<double> e0 = Multivector<double>::basis_vector(kDim, 0);
    const Multivector<double> img = inverse(x.mv() + e0) * 2.0 - e0;
    const CartesianPoint p = CartesianPoint::from_mv(img);
    PlanePoint out;
    out.t = p.radial();
    out.phi = std::atan2(p.x2, p.x1);
    if (out.phi < 0) out.phi += 2 * M_PI;
    return out;
}

CartesianPoint stereographic_inverse(const PlanePoint& t) {
    const double denom = 1 + t.t * t.t;
    const double planar = 2 * t.t / denom;
    return CartesianPoint{(1 - t.t * t.t) / denom, planar * std::cos(t.phi),
                          planar * std::sin(t.phi)};
}

}  // namespace sga
