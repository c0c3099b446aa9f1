#include "equidist/format.hpp"

#include <cstdio>

namespace equidist {

std::string fmt_g12(double v) {
  if (v == 0.0) v = 0.0;  // fold -0
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string fmt_point(Point2 p) { return "[" + fmt_g12(p.x) + ", " + fmt_g12(p.y) + "]"; }

}  // namespace equidist
