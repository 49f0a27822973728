#pragma once

#include <map>
#include <string>

#include "skein/pd.hpp"
#include "skein/scalar.hpp"

namespace skein {

// Over/under flipped at crossing index ci (0-based); sign negated, arcs kept.
PDDiagram switchCrossing(const PDDiagram& d, int ci);

// Oriented resolution of crossing index ci; crossing count drops by one and
// any circle formed moves to the loop count.
PDDiagram smoothCrossing(const PDDiagram& d, int ci);

// Exact evaluation of a closed diagram in Hom(empty, empty): descending
// diagrams are read off directly, otherwise the first descending violation
// is resolved through the skein relation.
class EvalSession {
  public:
    Scalar eval(const PDDiagram& d);

    size_t memoSize() const { return memo_.size(); }

  private:
    Scalar evalRec(PDDiagram d, int depth, const int budgetCrossings);
    std::map<std::string, Scalar> memo_;
};

// One-shot evaluation with a fresh session.
Scalar evalLink(const PDDiagram& d);

}  // namespace skein
