#pragma once

#include <string>

#include "skein/sliced.hpp"

namespace skein {

// TikZ picture of a sliced diagram, over-strands drawn through the crossing
// gap. Display only.
std::string tikzDiagram(const SlicedDiagram& d);

std::string tikzMatching(const Matching& m);

}  // namespace skein
