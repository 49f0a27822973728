#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skein/canonical.hpp"

namespace skein {
namespace qwb {

// Generator letters of the algebra on End(u^m d^n): H(i) and its inverse for
// i in {-(m-1)..-1, 1..n-1}, and the wall contraction E.
struct Letter {
    enum class Kind { H, Hinv, E };
    Kind kind;
    int index = 0;  // unused for E

    static Letter h(int i) { return {Kind::H, i}; }
    static Letter hinv(int i) { return {Kind::Hinv, i}; }
    static Letter e() { return {Kind::E, 0}; }
    bool operator==(const Letter&) const = default;
};

struct AlgebraWord {
    int m = 1, n = 1;
    std::vector<Letter> letters;  // product left to right, first factor acts last

    static AlgebraWord unit(int m, int n) { return {m, n, {}}; }
    AlgebraWord append(Letter l) const;
    AlgebraWord concat(const AlgebraWord& o) const;
    std::string str() const;
};

// Generator index set {-(m-1)..-1} U {1..n-1}; throws on out-of-range letters.
void validateWord(const AlgebraWord& w);

ObjectWord endWord(int m, int n);  // u^m d^n

// Diagram of a word under the algebra isomorphism onto End(u^m d^n): H(i)
// crosses the adjacent strands labelled i, i+1 of the paper's right-to-left
// index convention, E caps and cups the wall pair. Factors stack with the
// first letter on top.
SlicedDiagram xi(const AlgebraWord& w);

Morphism expandWord(const AlgebraWord& w);

// expand(xi(w1 . w2))
Morphism algMulExpand(const AlgebraWord& w1, const AlgebraWord& w2);

// Algebraic bar: q -> q^-1, t -> t^-1, H -> H^-1, e -> e on the letters,
// then expanded. Agrees with barMorphism through the isomorphism.
Morphism algBarWord(const AlgebraWord& w);

// e_0 = 1, e_1 = e, e_{k+1} = e Hinv(-1)..Hinv(-k) H(1)..H(k) e_k.
AlgebraWord buildEk(int m, int n, int k);

struct RelationCheck {
    std::string name;
    bool applicable = true;
    bool pass = true;
};

struct RelationReport {
    std::vector<RelationCheck> checks;
    bool pass() const {
        for (const auto& c : checks)
            if (c.applicable && !c.pass) return false;
        return true;
    }
};

// Expands both sides of every applicable defining relation and e_k identity.
RelationReport relationSuite(int m, int n);

struct LabeledCanonicalBasis {
    CanonicalBasis basis;
    std::vector<std::string> labels;                  // display labels per basis element
    std::vector<std::optional<AlgebraWord>> words;    // witness words where found
};

LabeledCanonicalBasis qwbCanonical(int m, int n);

}  // namespace qwb
}  // namespace skein
