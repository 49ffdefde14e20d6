#pragma once

#include "mfa/geometry/point.hpp"
#include "mfa/geometry/point_set.hpp"

namespace mfa {

// Finite eps-nets of simple continua in the Euclidean plane (or line). Every
// point of the continuum lies within eps of the net, and every net point lies
// on the continuum.

// Closed disc. Built from a square grid of spacing 1.2*eps whose points are
// projected radially onto the disc, plus a boundary ring of arc spacing 0.3*eps
// so that nearest points of outside queries are resolved finely.
PointSet disc_net(const Point& center, double radius, double eps);

// Closed segment [p, q], uniform samples including both endpoints.
PointSet segment_net(const Point& p, const Point& q, double eps);

// Circle of the given radius, uniform in angle.
PointSet circle_net(const Point& center, double radius, double eps);

}  // namespace mfa
