#pragma once

#include "pcd/geom2.hpp"

namespace pcd {

/// Sign of the orientation determinant of (a, b, c): +1 counterclockwise,
/// -1 clockwise, 0 collinear. Exact for all finite double inputs.
int orient2d(Point2 a, Point2 b, Point2 c);

/// Sign of the in-circle determinant: +1 when d lies strictly inside the
/// circumcircle of the counterclockwise triangle (a, b, c), 0 when cocircular.
/// Exact for all finite double inputs.
int incircle(Point2 a, Point2 b, Point2 c, Point2 d);

}  // namespace pcd
