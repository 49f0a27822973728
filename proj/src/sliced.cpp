#include "skein/sliced.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace skein {

SlicedDiagram SlicedDiagram::identity(const ObjectWord& w) {
    SlicedDiagram d;
    d.bottom = d.top = w;
    return d;
}

namespace {

// Replays one layer on the running word; throws on mismatch.
void applyLayer(std::vector<Ori>& w, const Layer& l) {
    const auto& g = l.gen;
    const int k = l.offset;
    auto need = [&](bool ok, const char* what) {
        if (!ok) throw std::invalid_argument(std::string("sliced diagram: ") + what);
    };
    switch (g.kind) {
        case Generator::Kind::Cross:
            need(k >= 0 && k + 1 < static_cast<int>(w.size()), "crossing offset out of range");
            need(w[k] == g.o1 && w[k + 1] == g.o2, "crossing orientation mismatch");
            std::swap(w[k], w[k + 1]);
            break;
        case Generator::Kind::Cap:
            need(k >= 0 && k + 1 < static_cast<int>(w.size()), "cap offset out of range");
            need(g.o1 != g.o2, "cap needs opposite orientations");
            need(w[k] == g.o1 && w[k + 1] == g.o2, "cap orientation mismatch");
            w.erase(w.begin() + k, w.begin() + k + 2);
            break;
        case Generator::Kind::Cup:
            need(k >= 0 && k <= static_cast<int>(w.size()), "cup offset out of range");
            need(g.o1 != g.o2, "cup needs opposite orientations");
            w.insert(w.begin() + k, {g.o1, g.o2});
            break;
    }
}

}  // namespace

void SlicedDiagram::validate() const {
    std::vector<Ori> w = bottom.letters;
    for (const auto& l : layers) applyLayer(w, l);
    if (w != top.letters)
        throw std::invalid_argument("sliced diagram: layers end at " + ObjectWord(w).str() +
                                    ", expected top " + top.str());
}

int SlicedDiagram::crossingCount() const {
    int n = 0;
    for (const auto& l : layers) n += l.gen.kind == Generator::Kind::Cross;
    return n;
}

std::string SlicedDiagram::str() const {
    std::ostringstream os;
    os << "bottom: " << bottom.str() << "\n";
    os << "top: " << top.str() << "\n";
    auto oo = [](Ori a, Ori b) {
        std::string s;
        s += a == Ori::Up ? 'u' : 'd';
        s += b == Ori::Up ? 'u' : 'd';
        return s;
    };
    for (const auto& l : layers) {
        os << l.offset << " ";
        switch (l.gen.kind) {
            case Generator::Kind::Cap: os << "cap:"; break;
            case Generator::Kind::Cup: os << "cup:"; break;
            case Generator::Kind::Cross: os << (l.gen.sign > 0 ? "x+:" : "x-:"); break;
        }
        os << oo(l.gen.o1, l.gen.o2) << "\n";
    }
    return os.str();
}

SlicedDiagram SlicedDiagram::parse(const std::string& text) {
    SlicedDiagram d;
    std::istringstream is(text);
    std::string line;
    bool haveBottom = false, haveTop = false;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        std::string tok;
        ls >> tok;
        auto fail = [&](const std::string& why) {
            throw std::invalid_argument("sliced diagram line " + std::to_string(lineno) + ": " +
                                        why);
        };
        if (tok == "bottom:") {
            std::string w;
            ls >> w;
            d.bottom = ObjectWord::parse(w);
            haveBottom = true;
        } else if (tok == "top:") {
            std::string w;
            ls >> w;
            d.top = ObjectWord::parse(w);
            haveTop = true;
        } else {
            int offset = 0;
            try {
                offset = std::stoi(tok);
            } catch (...) {
                fail("expected offset, got '" + tok + "'");
            }
            std::string gen;
            ls >> gen;
            auto colon = gen.find(':');
            if (colon == std::string::npos || gen.size() != colon + 3)
                fail("expected <kind>:<oo>, got '" + gen + "'");
            std::string kind = gen.substr(0, colon);
            ObjectWord ow = ObjectWord::parse(gen.substr(colon + 1));
            Generator g{};
            if (kind == "cap")
                g = Generator::cap(ow.at(0), ow.at(1));
            else if (kind == "cup")
                g = Generator::cup(ow.at(0), ow.at(1));
            else if (kind == "x+")
                g = Generator::cross(+1, ow.at(0), ow.at(1));
            else if (kind == "x-")
                g = Generator::cross(-1, ow.at(0), ow.at(1));
            else
                fail("unknown generator '" + kind + "'");
            d.layers.push_back({offset, g});
        }
    }
    if (!haveBottom || !haveTop)
        throw std::invalid_argument("sliced diagram: missing bottom/top header");
    d.validate();
    return d;
}

SlicedDiagram compose(const SlicedDiagram& upper, const SlicedDiagram& lower) {
    if (lower.top != upper.bottom)
        throw std::invalid_argument("compose: word mismatch, lower top " + lower.top.str() +
                                    " vs upper bottom " + upper.bottom.str());
    SlicedDiagram d;
    d.bottom = lower.bottom;
    d.top = upper.top;
    d.layers = lower.layers;
    d.layers.insert(d.layers.end(), upper.layers.begin(), upper.layers.end());
    return d;
}

SlicedDiagram tensorD(const SlicedDiagram& left, const SlicedDiagram& right) {
    SlicedDiagram d;
    d.bottom = left.bottom.concat(right.bottom);
    d.top = left.top.concat(right.top);
    d.layers = left.layers;
    const int shift = static_cast<int>(left.top.size());
    for (const auto& l : right.layers) d.layers.push_back({l.offset + shift, l.gen});
    return d;
}

SlicedDiagram flipCrossings(const SlicedDiagram& d) {
    SlicedDiagram r = d;
    for (auto& l : r.layers)
        if (l.gen.kind == Generator::Kind::Cross) l.gen.sign = -l.gen.sign;
    return r;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    int add() {
        parent.push_back(static_cast<int>(parent.size()));
        return parent.back();
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    // returns true if already joined (a closed loop)
    bool join(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return true;
        parent[a] = b;
        return false;
    }
};

}  // namespace

TraceResult traceDiagram(const SlicedDiagram& d) {
    d.validate();
    UnionFind uf;
    std::vector<int> cut;
    const int ma = static_cast<int>(d.bottom.size());
    for (int i = 0; i < ma; ++i) cut.push_back(uf.add());
    int loops = 0;
    for (const auto& l : d.layers) {
        const int k = l.offset;
        switch (l.gen.kind) {
            case Generator::Kind::Cross:
                std::swap(cut[k], cut[k + 1]);
                break;
            case Generator::Kind::Cap:
                if (uf.join(cut[k], cut[k + 1])) ++loops;
                cut.erase(cut.begin() + k, cut.begin() + k + 2);
                break;
            case Generator::Kind::Cup: {
                int x = uf.add();
                cut.insert(cut.begin() + k, {x, x});
                break;
            }
        }
    }
    // group boundary points by strand
    std::map<int, std::vector<int>> strands;  // root -> signed boundary coords
    for (int i = 0; i < ma; ++i) strands[uf.find(i)].push_back(-(i + 1));
    for (size_t j = 0; j < cut.size(); ++j)
        strands[uf.find(cut[j])].push_back(static_cast<int>(j + 1));
    TraceResult res;
    res.loops = loops;
    res.matching.source = d.bottom;
    res.matching.target = d.top;
    for (auto& [root, pts] : strands) {
        if (pts.size() != 2)
            throw std::logic_error("traceDiagram: strand with " + std::to_string(pts.size()) +
                                   " boundary points");
        auto isIn = [&](int c) {
            return c < 0 ? d.bottom.at(-c - 1) == Ori::Up : d.top.at(c - 1) == Ori::Down;
        };
        int in = pts[0], out = pts[1];
        if (!isIn(in)) std::swap(in, out);
        if (!isIn(in) || isIn(out))
            throw std::logic_error("traceDiagram: inconsistent strand orientation");
        res.matching.pairs.push_back({in, out});
    }
    sortPairs(res.matching.pairs);
    return res;
}

namespace {

struct Leg {
    int chord;   // index into the matching's pair list
    int tag;     // 0 = left/first leg, 1 = right/second
    Ori letter;  // strand orientation letter carried by this leg
};

// Caps phase on one boundary side: repeatedly takes the unfinished turnback
// chord with the smallest right endpoint and slides its left leg rightward
// until adjacent, so every strand passed over is one the chord interleaves.
// Emits Cross then Cap layers.
std::vector<Layer> capSchedule(std::vector<Leg>& cut, const std::vector<std::pair<int, int>>& caps,
                               std::vector<int> capOrder) {
    std::vector<Layer> out;
    std::sort(capOrder.begin(), capOrder.end(),
              [&](int x, int y) { return caps[x].second < caps[y].second; });
    for (int c : capOrder) {
        int il = -1, ir = -1;
        for (size_t i = 0; i < cut.size(); ++i) {
            if (cut[i].chord != c) continue;
            (cut[i].tag == 0 ? il : ir) = static_cast<int>(i);
        }
        if (il < 0 || ir < 0 || il >= ir) throw std::logic_error("capSchedule: legs misplaced");
        while (il + 1 < ir) {
            out.push_back({il, Generator::cross(+1, cut[il].letter, cut[il + 1].letter)});
            std::swap(cut[il], cut[il + 1]);
            ++il;
        }
        out.push_back({il, Generator::cap(cut[il].letter, cut[ir].letter)});
        cut.erase(cut.begin() + il, cut.begin() + ir + 1);
    }
    return out;
}

}  // namespace

SlicedDiagram positiveLift(const Matching& m) {
    const ObjectWord& a = m.source;
    const ObjectWord& b = m.target;

    // classify chords
    std::vector<std::pair<int, int>> caps, cups;  // positions, min first
    struct Through {
        int chord, src, tgt;
        Ori letter;
    };
    std::vector<Through> throughs;
    for (size_t ci = 0; ci < m.pairs.size(); ++ci) {
        auto [in, out] = m.pairs[ci];
        if (in < 0 && out < 0) {
            caps.push_back({std::min(-in, -out), std::max(-in, -out)});
        } else if (in > 0 && out > 0) {
            cups.push_back({std::min(in, out), std::max(in, out)});
        } else {
            int src = in < 0 ? -in : -out;
            int tgt = in < 0 ? out : in;
            throughs.push_back(
                {static_cast<int>(ci), src, tgt, a.at(static_cast<size_t>(src) - 1)});
        }
    }
    SlicedDiagram d;
    d.bottom = a;
    d.top = b;

    // Phase 1: source-side turnbacks.
    std::vector<Leg> cut;
    for (size_t i = 0; i < a.size(); ++i) {
        int pos = static_cast<int>(i + 1);
        bool placed = false;
        for (size_t k = 0; k < caps.size() && !placed; ++k) {
            if (caps[k].first == pos || caps[k].second == pos) {
                cut.push_back({static_cast<int>(k), caps[k].first == pos ? 0 : 1, a.at(i)});
                placed = true;
            }
        }
        for (size_t k = 0; k < throughs.size() && !placed; ++k) {
            if (throughs[k].src == pos) {
                // through legs carry chord ids offset past the caps
                cut.push_back({static_cast<int>(caps.size() + k), 0, a.at(i)});
                placed = true;
            }
        }
        if (!placed) throw std::logic_error("positiveLift: unmatched source position");
    }
    std::vector<int> order(caps.size());
    std::iota(order.begin(), order.end(), 0);
    auto phase1 = capSchedule(cut, caps, order);
    d.layers = phase1;

    // Phase 2: sort through strands from source order into target order.
    std::vector<int> tgt(cut.size());
    for (size_t i = 0; i < cut.size(); ++i)
        tgt[i] = throughs[static_cast<size_t>(cut[i].chord) - caps.size()].tgt;
    for (;;) {
        bool swapped = false;
        for (size_t i = 0; i + 1 < cut.size(); ++i) {
            if (tgt[i] > tgt[i + 1]) {
                d.layers.push_back(
                    {static_cast<int>(i), Generator::cross(+1, cut[i].letter, cut[i + 1].letter)});
                std::swap(cut[i], cut[i + 1]);
                std::swap(tgt[i], tgt[i + 1]);
                swapped = true;
            }
        }
        if (!swapped) break;
    }

    // Phase 3: target-side turnbacks, built upside down and reversed.
    std::vector<Leg> mcut;
    for (size_t j = 0; j < b.size(); ++j) {
        int pos = static_cast<int>(j + 1);
        bool placed = false;
        for (size_t k = 0; k < cups.size() && !placed; ++k) {
            if (cups[k].first == pos || cups[k].second == pos) {
                mcut.push_back({static_cast<int>(k), cups[k].first == pos ? 0 : 1, b.at(j)});
                placed = true;
            }
        }
        for (size_t k = 0; k < throughs.size() && !placed; ++k) {
            if (throughs[k].tgt == pos) {
                mcut.push_back({static_cast<int>(cups.size() + k), 0, b.at(j)});
                placed = true;
            }
        }
        if (!placed) throw std::logic_error("positiveLift: unmatched target position");
    }
    std::vector<int> corder(cups.size());
    std::iota(corder.begin(), corder.end(), 0);
    auto mirror = capSchedule(mcut, cups, corder);
    for (auto it = mirror.rbegin(); it != mirror.rend(); ++it) {
        Layer l = *it;
        if (l.gen.kind == Generator::Kind::Cap) {
            l.gen.kind = Generator::Kind::Cup;
        } else {
            std::swap(l.gen.o1, l.gen.o2);  // time reversal swaps the pair
        }
        d.layers.push_back(l);
    }

    // construction-time checks: the lift realizes m, reduced and loop-free
    auto tr = traceDiagram(d);
    if (tr.loops != 0 || !(tr.matching == m))
        throw std::logic_error("positiveLift: traced matching differs from input");
    if (d.crossingCount() != m.crossingNumber())
        throw std::logic_error("positiveLift: crossing count " +
                               std::to_string(d.crossingCount()) + " != interleaving number " +
                               std::to_string(m.crossingNumber()));
    return d;
}

}  // namespace skein
