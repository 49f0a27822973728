#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "skein/matching.hpp"
#include "skein/word.hpp"

namespace skein {

// One-generator layer of a generic tangle diagram. Orientations are the two
// strand letters read left to right on the generator's wider boundary: the
// bottom pair for Cross and Cap, the created top pair for Cup.
struct Generator {
    enum class Kind { Cap, Cup, Cross };
    Kind kind;
    Ori o1, o2;
    int sign = 0;  // +1 / -1 for Cross, 0 otherwise

    static Generator cap(Ori a, Ori b) { return {Kind::Cap, a, b, 0}; }
    static Generator cup(Ori a, Ori b) { return {Kind::Cup, a, b, 0}; }
    static Generator cross(int sign, Ori a, Ori b) { return {Kind::Cross, a, b, sign}; }

    bool operator==(const Generator&) const = default;
};

struct Layer {
    int offset = 0;  // 0-based column of the generator's left strand
    Generator gen;
    bool operator==(const Layer&) const = default;
};

// A tangle diagram as a bottom-to-top stack of one-generator layers.
struct SlicedDiagram {
    ObjectWord bottom, top;
    std::vector<Layer> layers;

    bool operator==(const SlicedDiagram&) const = default;

    static SlicedDiagram identity(const ObjectWord& w);

    void validate() const;  // replays layers, throws on inconsistency

    int crossingCount() const;

    std::string str() const;
    static SlicedDiagram parse(const std::string& text);
};

// Vertical stacking: lower first, then upper. Requires
// lower.top == upper.bottom.
SlicedDiagram compose(const SlicedDiagram& upper, const SlicedDiagram& lower);

// Horizontal concatenation; left's layers first, then right's shifted.
SlicedDiagram tensorD(const SlicedDiagram& left, const SlicedDiagram& right);

// Negates every crossing sign; an involution.
SlicedDiagram flipCrossings(const SlicedDiagram& d);

// Boundary connectivity of a diagram together with its closed loop count.
struct TraceResult {
    Matching matching;
    int loops = 0;
};
TraceResult traceDiagram(const SlicedDiagram& d);

// The unique reduced all-positive lift of a matching: every pair of strands
// crosses at most once, no strand crosses itself, every crossing positive,
// and the number of Cross layers equals m.crossingNumber().
SlicedDiagram positiveLift(const Matching& m);

}  // namespace skein
