#include "skein/matching.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace skein {

int coordKey(int coord) { return coord < 0 ? -coord : (1 << 20) + coord; }

void sortPairs(std::vector<std::pair<int, int>>& pairs) {
    std::sort(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) {
        return coordKey(x.first) < coordKey(y.first);
    });
}

bool Matching::operator<(const Matching& o) const {
    if (source != o.source) return source < o.source;
    if (target != o.target) return target < o.target;
    return pairs < o.pairs;
}

int Matching::mate(int coord) const {
    for (const auto& [in, out] : pairs) {
        if (in == coord) return out;
        if (out == coord) return in;
    }
    throw std::invalid_argument("Matching::mate: coordinate not present");
}

static std::pair<int, int> cyclicChord(const Matching& m, const std::pair<int, int>& pr) {
    const int ma = static_cast<int>(m.source.size());
    const int nb = static_cast<int>(m.target.size());
    auto cyc = [&](int c) { return c < 0 ? -c - 1 : ma + nb - c; };
    int x = cyc(pr.first), y = cyc(pr.second);
    return {std::min(x, y), std::max(x, y)};
}

int Matching::crossingNumber() const {
    int count = 0;
    for (size_t i = 0; i < pairs.size(); ++i) {
        auto [a1, b1] = cyclicChord(*this, pairs[i]);
        for (size_t j = i + 1; j < pairs.size(); ++j) {
            auto [a2, b2] = cyclicChord(*this, pairs[j]);
            bool in2 = a1 < a2 && a2 < b1;
            bool in2b = a1 < b2 && b2 < b1;
            if (in2 != in2b) ++count;
        }
    }
    return count;
}

std::vector<int> Matching::encoding() const {
    std::vector<int> enc;
    enc.reserve(pairs.size() * 2);
    for (const auto& [in, out] : pairs) {
        enc.push_back(coordKey(in));
        enc.push_back(coordKey(out));
    }
    return enc;
}

static std::vector<int> inPoints(const ObjectWord& a, const ObjectWord& b) {
    std::vector<int> v;
    for (size_t i = 0; i < a.size(); ++i)
        if (a.at(i) == Ori::Up) v.push_back(-static_cast<int>(i + 1));
    for (size_t j = 0; j < b.size(); ++j)
        if (b.at(j) == Ori::Down) v.push_back(static_cast<int>(j + 1));
    return v;
}

static std::vector<int> outPoints(const ObjectWord& a, const ObjectWord& b) {
    std::vector<int> v;
    for (size_t i = 0; i < a.size(); ++i)
        if (a.at(i) == Ori::Down) v.push_back(-static_cast<int>(i + 1));
    for (size_t j = 0; j < b.size(); ++j)
        if (b.at(j) == Ori::Up) v.push_back(static_cast<int>(j + 1));
    return v;
}

void Matching::validate() const {
    auto ins = inPoints(source, target);
    auto outs = outPoints(source, target);
    if (pairs.size() != ins.size() || ins.size() != outs.size())
        throw std::invalid_argument("Matching: wrong number of pairs");
    std::set<int> seenIn, seenOut;
    std::set<int> inSet(ins.begin(), ins.end()), outSet(outs.begin(), outs.end());
    for (const auto& [in, out] : pairs) {
        if (!inSet.count(in) || !seenIn.insert(in).second)
            throw std::invalid_argument("Matching: bad in-point");
        if (!outSet.count(out) || !seenOut.insert(out).second)
            throw std::invalid_argument("Matching: bad out-point");
    }
}

std::vector<Matching> enumerateMatchings(const ObjectWord& a, const ObjectWord& b) {
    if (!a.balancedWith(b)) return {};
    auto ins = inPoints(a, b);
    auto outs = outPoints(a, b);
    std::sort(ins.begin(), ins.end(), [](int x, int y) { return coordKey(x) < coordKey(y); });
    std::sort(outs.begin(), outs.end(), [](int x, int y) { return coordKey(x) < coordKey(y); });
    const size_t n = ins.size();
    std::vector<size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Matching> all;
    do {
        Matching m;
        m.source = a;
        m.target = b;
        m.pairs.reserve(n);
        for (size_t k = 0; k < n; ++k) m.pairs.push_back({ins[k], outs[perm[k]]});
        all.push_back(std::move(m));
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::vector<std::pair<int, std::vector<int>>> keys(all.size());
    std::vector<size_t> order(all.size());
    std::iota(order.begin(), order.end(), 0);
    for (size_t i = 0; i < all.size(); ++i)
        keys[i] = {all[i].crossingNumber(), all[i].encoding()};
    std::sort(order.begin(), order.end(),
              [&](size_t x, size_t y) { return keys[x] < keys[y]; });
    std::vector<Matching> sorted;
    sorted.reserve(all.size());
    for (size_t i : order) sorted.push_back(std::move(all[i]));
    return sorted;
}

Matching identityMatching(const ObjectWord& a) {
    Matching m;
    m.source = m.target = a;
    for (size_t i = 0; i < a.size(); ++i) {
        int p = static_cast<int>(i + 1);
        if (a.at(i) == Ori::Up)
            m.pairs.push_back({-p, p});
        else
            m.pairs.push_back({p, -p});
    }
    sortPairs(m.pairs);
    return m;
}

std::pair<Matching, int> composeMatchings(const Matching& upper, const Matching& lower) {
    if (lower.target != upper.source)
        throw std::invalid_argument("composeMatchings: interface words differ: " +
                                    lower.target.str() + " vs " + upper.source.str());
    const ObjectWord& b = lower.target;
    std::vector<bool> used(b.size() + 1, false);

    // Walks from a composite in-point to the matched out-point, alternating
    // between the two factors through the interface.
    auto walkFromLowerIn = [&](int start) {
        int cur = lower.mate(start);
        for (;;) {
            if (cur < 0) return cur;  // source Down of lower: composite out
            used[cur] = true;         // interface, b[cur] = Up
            int up = upper.mate(-cur);
            if (up > 0) return up;  // target Up of upper: composite out
            used[-up] = true;       // interface, b[-up] = Down
            cur = lower.mate(-up);
        }
    };
    auto walkFromUpperIn = [&](int start) {
        int cur = upper.mate(start);
        for (;;) {
            if (cur > 0) return cur;  // target Up of upper
            used[-cur] = true;        // interface, b[-cur] = Down
            int lo = lower.mate(-cur);
            if (lo < 0) return lo;  // source Down of lower
            used[lo] = true;        // interface, b[lo] = Up
            cur = upper.mate(-lo);
        }
    };

    Matching m;
    m.source = lower.source;
    m.target = upper.target;
    for (size_t i = 0; i < m.source.size(); ++i)
        if (m.source.at(i) == Ori::Up) {
            int in = -static_cast<int>(i + 1);
            m.pairs.push_back({in, walkFromLowerIn(in)});
        }
    for (size_t j = 0; j < m.target.size(); ++j)
        if (m.target.at(j) == Ori::Down) {
            int in = static_cast<int>(j + 1);
            m.pairs.push_back({in, walkFromUpperIn(in)});
        }
    sortPairs(m.pairs);

    int loops = 0;
    for (size_t j = 1; j <= b.size(); ++j) {
        if (used[j]) continue;
        ++loops;
        // walk the closed cycle through the interface
        int cur = static_cast<int>(j);
        do {
            used[cur] = true;
            int nxt;
            if (b.at(cur - 1) == Ori::Up) {
                nxt = -upper.mate(-cur);  // lands on an upper source Down
            } else {
                nxt = lower.mate(cur);  // lands on a lower target Up
            }
            if (nxt <= 0)
                throw std::logic_error("composeMatchings: interface loop escapes boundary");
            cur = nxt;
        } while (!used[cur]);
    }
    return {std::move(m), loops};
}

}  // namespace skein
