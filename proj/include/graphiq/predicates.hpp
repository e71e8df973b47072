#pragma once

// Robust orientation and in-circle predicates on doubles: a floating-point
// fast path guarded by a forward error bound, with an exact expansion-
// arithmetic fallback when the bound cannot certify the sign. The perturbed
// in-circle variant never returns zero for four distinct points; cocircular
// ties are broken by an infinitesimal lowering of the lifted coordinate of
// the lexicographically smallest point involved, so triangulations are
// reproducible across runs and platforms.

#include "graphiq/types.hpp"

namespace graphiq::geom {

// Sign of the doubled signed area of (a, b, c): +1 counterclockwise,
// -1 clockwise, 0 collinear. Exact.
int orient2d_sign(const Point& a, const Point& b, const Point& c);

// Requires (a, b, c) counterclockwise. +1 if d lies strictly inside the
// circumcircle of (a, b, c), -1 strictly outside, 0 on the circle. Exact.
int incircle_sign(const Point& a, const Point& b, const Point& c, const Point& d);

// As incircle_sign but with the symbolic tie-break applied: never returns 0
// when the four points are pairwise distinct.
int incircle_sign_perturbed(const Point& a, const Point& b, const Point& c, const Point& d);

}  // namespace graphiq::geom
