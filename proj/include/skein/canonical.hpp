#pragma once

#include <string>
#include <vector>

#include "skein/homspace.hpp"

namespace skein {

// The unique bar-fixed basis unitriangular over the standard basis with
// off-diagonal coefficients in q^-1 Z[q^-1].
struct CanonicalBasis {
    ObjectWord source, target;
    std::vector<Matching> order;  // standard basis in (length, tie-break) order
    std::vector<int> lengths;
    // column t = expansion of C_t over the standard basis; columns[t][s] is
    // the spec's transition[T_s][T_t]
    std::vector<std::vector<QLaurent>> columns;
    std::vector<Morphism> elements;
};

CanonicalBasis canonicalBasis(const ObjectWord& a, const ObjectWord& b);

struct CanonicalReport {
    bool unitDiagonal = true;
    bool lengthTriangular = true;
    bool offDiagNegative = true;  // off-diagonal entries in q^-1 Z[q^-1]
    bool tFree = true;
    bool psiFixed = true;
    bool elementsMatchTransition = true;
    bool positive = true;  // observation, never asserted by this check
    std::vector<std::string> failures;

    bool pass() const {
        return unitDiagonal && lengthTriangular && offDiagNegative && tFree && psiFixed &&
               elementsMatchTransition;
    }
};

// Re-checks every Theorem-level property of a (possibly tampered) basis.
// Positivity is reported as the observation "all transition coefficients lie
// in Z>=0[q^-1]".
CanonicalReport verifyCanonical(CanonicalBasis cb);

struct EmbedReport {
    bool pass = true;
    std::vector<std::string> failures;
};

// Tensors each canonical element of Hom(a, b) with the rightward cap,
// expands in Hom(a.ud, b) and compares against the canonical element of the
// extended matching.
EmbedReport embedAndCheck(const ObjectWord& a, const ObjectWord& b);

}  // namespace skein
