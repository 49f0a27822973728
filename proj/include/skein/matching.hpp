#pragma once

#include <utility>
#include <vector>

#include "skein/word.hpp"

namespace skein {

// Boundary points are addressed by signed 1-based coordinates: -i is source
// position i, +j is target position j.
//
// A matching pairs each in-flow point (source Up or target Down) with an
// out-flow point (target Up or source Down). Every strand of a lift runs from
// an in-flow point to an out-flow point.
struct Matching {
    ObjectWord source, target;
    std::vector<std::pair<int, int>> pairs;  // (in, out), sorted by in-key

    bool operator==(const Matching&) const = default;
    bool operator<(const Matching& o) const;

    // The out-point matched with an in-point, or vice versa.
    int mate(int coord) const;

    // Interleaving chord pairs under the boundary cyclic order (source left
    // to right, then target right to left); equals the crossing count of any
    // reduced lift.
    int crossingNumber() const;

    // Flattened encoding used for deterministic tie-breaks and JSON.
    std::vector<int> encoding() const;

    void validate() const;  // throws on malformed pairs
};

// Fixed total order on signed boundary coordinates: source positions left to
// right, then target positions left to right.
int coordKey(int coord);

void sortPairs(std::vector<std::pair<int, int>>& pairs);

// All matchings of Hom(a, b), sorted by (crossing number, encoding).
// Empty when the words are not balanced. N! entries with
// N = #Up(a) + #Down(b) otherwise.
std::vector<Matching> enumerateMatchings(const ObjectWord& a, const ObjectWord& b);

Matching identityMatching(const ObjectWord& a);

// Composite matching of (lower then upper) together with the number of
// closed loops formed. Requires lower.target == upper.source.
std::pair<Matching, int> composeMatchings(const Matching& upper, const Matching& lower);

}  // namespace skein
