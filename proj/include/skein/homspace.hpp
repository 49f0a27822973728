#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "skein/linkeval.hpp"
#include "skein/matching.hpp"
#include "skein/scalar.hpp"
#include "skein/sliced.hpp"

namespace skein {

// Gram pairing unexpectedly singular; signals a bug, never handled silently.
struct DegeneratePairingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An expansion coordinate left Z[q^{+-1}, t^{+-1}, z^{-1}].
struct NonIntegralExpansionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A structural property guaranteed by the theory failed to hold.
struct InvariantViolationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Finitely supported Scalar-linear combination of the standard basis
// matchings of one Hom space.
struct Morphism {
    ObjectWord source, target;
    std::map<Matching, Scalar> coeffs;  // no zero values stored

    static Morphism zero(const ObjectWord& a, const ObjectWord& b) { return {a, b, {}}; }
    static Morphism basisElement(const Matching& m, Scalar c = Scalar::one());

    bool isZero() const { return coeffs.empty(); }
    Scalar coeff(const Matching& m) const;
    void addTerm(const Matching& m, const Scalar& c);

    friend Morphism operator+(const Morphism& x, const Morphism& y);
    friend Morphism operator-(const Morphism& x, const Morphism& y);
    friend Morphism operator*(const Scalar& c, const Morphism& x);
    bool operator==(const Morphism& o) const;

    std::string str() const;
};

// Cached data of one Hom space: standard basis, positive lifts, the closure
// Gram pairing with its fraction-free solver, the bar matrix, and lazy
// structure constants.
class HomContext {
  public:
    // shared per-(a,b) instance; computation caches accumulate on it
    static HomContext& get(const ObjectWord& a, const ObjectWord& b);

    const ObjectWord& sourceWord() const { return a_; }
    const ObjectWord& targetWord() const { return b_; }
    const std::vector<Matching>& basis() const { return basis_; }
    const std::vector<Matching>& dualBasis() const { return dual_; }
    const SlicedDiagram& lift(size_t i) const { return lifts_[i]; }
    size_t dim() const { return basis_.size(); }
    int indexOf(const Matching& m) const;

    const std::vector<std::vector<Scalar>>& gram();

    // Pairing vector p_j = eval(closure(dualLift_j o d)).
    std::vector<Scalar> pairingColumn(const SlicedDiagram& d);

    // Solves gram * x = rhs for several right-hand columns at once via
    // fraction-free elimination over IntLaurent.
    std::vector<std::vector<Scalar>> solve(const std::vector<std::vector<Scalar>>& rhsCols);

    // Coordinates of a diagram in the standard basis.
    Morphism expand(const SlicedDiagram& d);

    // Column T holds the expansion of psi(T); entries proven t-free and
    // z-power-free, unitriangular for the length filtration.
    const std::vector<std::vector<QLaurent>>& barMatrix();

    // Structure constants: expansion of lift(i) o lift(j), cached lazily.
    const Morphism& product(size_t i, size_t j);

    int length(size_t i) const { return lengths_[i]; }

    EvalSession& session() { return session_; }

  private:
    HomContext(ObjectWord a, ObjectWord b);
    void ensureSolver();

    ObjectWord a_, b_;
    std::vector<Matching> basis_, dual_;
    std::vector<SlicedDiagram> lifts_, dualLifts_;
    std::vector<int> lengths_;
    std::map<Matching, int> index_;
    EvalSession session_;

    std::optional<std::vector<std::vector<Scalar>>> gram_;
    // fraction-free solver state (row-cleared gram, elimination history)
    struct Solver;
    std::shared_ptr<Solver> solver_;
    std::optional<std::vector<std::vector<QLaurent>>> barMatrix_;
    std::map<std::pair<size_t, size_t>, Morphism> products_;
};

// psi on morphisms: semilinear, flips all crossings of the lifts.
Morphism barMorphism(const Morphism& x);

// Product in an endomorphism space (source == target everywhere).
Morphism multiplyMorphisms(const Morphism& x, const Morphism& y);

Morphism expandDiagram(const SlicedDiagram& d);

}  // namespace skein
