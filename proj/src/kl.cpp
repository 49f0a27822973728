#include "skein/kl.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace skein {
namespace kl {

Perm identity(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm multiply(const Perm& w1, const Perm& w2) {
    Perm r(w1.size());
    for (size_t i = 0; i < w1.size(); ++i) r[i] = w1[w2[i]];
    return r;
}

int lengthOf(const Perm& w) {
    int inv = 0;
    for (size_t i = 0; i < w.size(); ++i)
        for (size_t j = i + 1; j < w.size(); ++j) inv += w[i] > w[j];
    return inv;
}

std::vector<Perm> symmetricGroup(int n) {
    Perm p = identity(n);
    std::vector<Perm> all;
    do {
        all.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::stable_sort(all.begin(), all.end(),
                     [](const Perm& x, const Perm& y) { return lengthOf(x) < lengthOf(y); });
    return all;
}

static Perm simple(int s, int n) {
    Perm p = identity(n);
    std::swap(p[s], p[s + 1]);
    return p;
}

HeckeElt multiplyLeftBySimple(int s, const HeckeElt& x, int n) {
    const Perm si = simple(s, n);
    const QLaurent z = QLaurent::monomial(1, 1) - QLaurent::monomial(1, -1);
    HeckeElt out;
    for (const auto& [w, c] : x) {
        Perm sw = multiply(si, w);
        if (lengthOf(sw) > lengthOf(w)) {
            out[sw] += c;
        } else {
            out[sw] += c;
            out[w] += z * c;
        }
        if (out[sw].isZero()) out.erase(sw);
        if (auto it = out.find(w); it != out.end() && it->second.isZero()) out.erase(it);
    }
    return out;
}

std::map<Perm, HeckeElt> klBasis(int n) {
    std::map<Perm, HeckeElt> b;
    auto perms = symmetricGroup(n);
    for (const Perm& w : perms) {
        const int lw = lengthOf(w);
        if (lw == 0) {
            b[w] = {{w, QLaurent::one()}};
            continue;
        }
        // pick a left descent s
        int s = -1;
        for (int i = 0; i + 1 < n; ++i) {
            if (lengthOf(multiply(simple(i, n), w)) < lw) {
                s = i;
                break;
            }
        }
        if (s < 0) throw std::logic_error("klBasis: no descent for a non-identity element");
        Perm v = multiply(simple(s, n), w);  // sw, shorter
        HeckeElt prod = multiplyLeftBySimple(s, b.at(v), n);
        // b_s b_v = H_s b_v + q^-1 b_v
        const QLaurent qinv = QLaurent::monomial(1, -1);
        for (const auto& [u, c] : b.at(v)) {
            prod[u] += qinv * c;
            if (prod[u].isZero()) prod.erase(u);
        }
        // subtract mu(u, v) b_u over u < v with su < u
        // (iterate by decreasing length so corrections cascade correctly)
        std::vector<Perm> shorter;
        for (const auto& [u, e] : b)
            if (lengthOf(u) < lw - 1 || (lengthOf(u) == lw - 1 && !(u == v))) shorter.push_back(u);
        std::sort(shorter.begin(), shorter.end(), [](const Perm& x, const Perm& y) {
            return lengthOf(x) > lengthOf(y);
        });
        for (const Perm& u : shorter) {
            if (lengthOf(multiply(simple(s, n), u)) >= lengthOf(u)) continue;
            auto it = prod.find(u);
            if (it == prod.end()) continue;
            // mu = coefficient of q^-1 in p_{u,v}
            Int mu = b.at(v).count(u) ? b.at(v).at(u).coeff(-1) : Int(0);
            if (mu == 0) continue;
            QLaurent muc = QLaurent::monomial(mu, 0);
            for (const auto& [y, c] : b.at(u)) {
                prod[y] -= muc * c;
                if (prod[y].isZero()) prod.erase(y);
            }
        }
        b[w] = std::move(prod);
    }
    return b;
}

}  // namespace kl
}  // namespace skein
