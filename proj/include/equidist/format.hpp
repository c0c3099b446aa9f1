#ifndef EQUIDIST_FORMAT_HPP
#define EQUIDIST_FORMAT_HPP

#include <string>

#include "equidist/geom.hpp"

namespace equidist {

// All emitted numbers use 12 significant digits; parsing the text back and
// re-printing reproduces the same bytes.
std::string fmt_g12(double v);

std::string fmt_point(Point2 p);  // "[x, y]"

}  // namespace equidist

#endif
