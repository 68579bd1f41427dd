// Graphic projection of the unit bounding spheroids from the antipode -e0
// onto the equatorial plane, together with its stereographic (sphere) limit.
//
// A surface point projects to t e_p = (x - x0 e0)/(x0 + 1); on the case-3
// prolate surface this closes to t = e^-nu sqrt((1-x0)/(1+x0)) and on the
// case-1 oblate surface to t = e^+nu sqrt((1-x0)/(1+x0)). The projected point
// sweeps the disk of radius e^-nu (case 3) resp. e^+nu (case 1) as x moves
// over the upper half of the surface, and the map degenerates to classical
// stereographic projection as nu -> 0.

#pragma once

#include "sga/spheroidal.hpp"

namespace sga {

struct PlanePoint {
    double t = 0;    // radial distance in the projection plane, >= 0
    double phi = 0;  // azimuth of t e_p
};

// Projects a point of the case-1 or case-3 unit spheroid at parameter nu.
// Throws if x is not on the surface (1e-9 check) or is the antipode x0 = -1.
PlanePoint project(const CartesianPoint& x, double nu, int case_id);

// Inverse map; the result lies on the corresponding surface.
CartesianPoint unproject(const PlanePoint& t, double nu, int case_id);

// Classical stereographic projection of the unit sphere from -e0, evaluated
// through the multivector inversion t e_p + e0 = 2 (x + e0)^-1.
PlanePoint stereographic(const CartesianPoint& x);
CartesianPoint stereographic_inverse(const PlanePoint& t);

}  // namespace sga
