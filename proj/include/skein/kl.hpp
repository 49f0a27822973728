#pragma once

#include <map>
#include <vector>

#include "skein/laurent.hpp"

namespace skein {
namespace kl {

// One-line permutation, perm[i] = image of i (0-based).
using Perm = std::vector<int>;

Perm identity(int n);
Perm multiply(const Perm& w1, const Perm& w2);  // (w1 o w2)(i) = w1[w2[i]]
int lengthOf(const Perm& w);                    // inversion count
std::vector<Perm> symmetricGroup(int n);        // sorted by (length, one-line)

// Hecke algebra element over Z[q^{+-1}] in the H_w basis, with the quadratic
// relation H_s^2 = 1 + (q - q^-1) H_s.
using HeckeElt = std::map<Perm, QLaurent>;

HeckeElt multiplyLeftBySimple(int s, const HeckeElt& x, int n);

// Kazhdan-Lusztig basis elements b_w = H_w + sum_{u<w} p_{u,w} H_u with
// p in q^-1 Z[q^-1], computed by the direct recursion
// b_w = b_s b_{sw} - sum mu(u, sw) b_u. Independent of the diagram engine.
std::map<Perm, HeckeElt> klBasis(int n);

}  // namespace kl
}  // namespace skein
