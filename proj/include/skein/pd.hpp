#pragma once

#include <array>
#include <string>
#include <vector>

#include "skein/sliced.hpp"

namespace skein {

// Closed oriented link diagram in PD form. Each crossing lists its four arc
// ids counterclockwise from the incoming under-arc; the under-strand runs
// slot 0 -> 2, the over-strand 3 -> 1 at positive crossings and 1 -> 3 at
// negative ones.
struct PDCrossing {
    std::array<int, 4> arcs;
    int sign;  // +1 or -1

    int overIn() const { return sign > 0 ? 3 : 1; }
    int overOut() const { return sign > 0 ? 1 : 3; }
    bool operator==(const PDCrossing&) const = default;
};

struct PDDiagram {
    std::vector<PDCrossing> crossings;
    int loops = 0;  // crossingless circles

    bool operator==(const PDDiagram&) const = default;

    // Checks every arc id occurs exactly once as head and once as tail.
    void validate() const;

    std::string str() const;
    static PDDiagram parse(const std::string& text);
};

// Right-nested trace closure of an endomorphism diagram: top point i joins
// bottom point i around the right side. Requires d.bottom == d.top.
PDDiagram closure(const SlicedDiagram& d);

}  // namespace skein
