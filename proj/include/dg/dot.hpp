#ifndef DG_DOT_HPP
#define DG_DOT_HPP

#include <string>

#include "dg/planar.hpp"

namespace dg {

// Graphviz rendering of realize(d): vertices left to right, top path solid
// blue, bottom path solid red, interior vertices grouped per cell. For
// human inspection only; not an isotopy test.
std::string to_dot(const Presentation& p, const Diagram& d);

}  // namespace dg

#endif  // DG_DOT_HPP
