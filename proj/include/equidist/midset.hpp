#ifndef EQUIDIST_MIDSET_HPP
#define EQUIDIST_MIDSET_HPP

#include <vector>

#include "equidist/geom.hpp"

namespace equidist {

// Signed gap field f(X) = d(X,k) - d(X,l); the midset is the zero level set.
struct GapField {
  CompactSet k;
  CompactSet l;

  double operator()(Point2 x) const;
};

double gap(Point2 x, const GapField& field);

// Contour of {f = 0} extracted on a uniform grid. Every vertex is refined
// along its grid edge until |f| < min(1e-9, h*1e-3). `degenerate` flags
// fields that vanish on a region (overlapping focal sets); the polylines
// are then unreliable.
struct MidsetNumeric {
  std::vector<std::vector<Point2>> polylines;
  double resolution = 0.0;  // grid pitch h
  bool degenerate = false;

  CompactSet as_compact_set() const;
};

// Marching squares over bbox with pitch h. Grid evaluation honors the
// EQUIDIST_THREADS cap (0 or unset = auto); results do not depend on the
// thread count.
MidsetNumeric extract_midset(const GapField& field, const Box2& bbox, double h);

// Symmetric Hausdorff distance between the contour (resampled at h/2) and a
// dense sampling of the reference set.
double hausdorff_to_reference(const MidsetNumeric& m, const CompactSet& reference);

}  // namespace equidist

#endif
