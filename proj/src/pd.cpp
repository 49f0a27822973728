#include "skein/pd.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace skein {

void PDDiagram::validate() const {
    if (loops < 0) throw std::invalid_argument("PD: negative loop count");
    std::map<int, int> heads, tails;
    for (const auto& c : crossings) {
        if (c.sign != 1 && c.sign != -1) throw std::invalid_argument("PD: bad crossing sign");
        heads[c.arcs[0]]++;
        heads[c.arcs[c.overIn()]]++;
        tails[c.arcs[2]]++;
        tails[c.arcs[c.overOut()]]++;
    }
    for (const auto& [a, n] : heads) {
        if (n != 1 || tails[a] != 1)
            throw std::invalid_argument("PD: arc " + std::to_string(a) +
                                        " is dangling or orientation-inconsistent");
    }
    for (const auto& [a, n] : tails) {
        if (heads.find(a) == heads.end())
            throw std::invalid_argument("PD: arc " + std::to_string(a) + " has no head");
    }
}

std::string PDDiagram::str() const {
    std::ostringstream os;
    for (const auto& c : crossings) {
        os << "X" << (c.sign > 0 ? '+' : '-') << "[" << c.arcs[0] << "," << c.arcs[1] << ","
           << c.arcs[2] << "," << c.arcs[3] << "]\n";
    }
    os << "loops: " << loops << "\n";
    return os.str();
}

PDDiagram PDDiagram::parse(const std::string& text) {
    PDDiagram d;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    bool sawLoops = false;
    while (std::getline(is, line)) {
        ++lineno;
        auto fail = [&](const std::string& why) {
            throw std::invalid_argument("PD line " + std::to_string(lineno) + ": " + why);
        };
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::string s = line.substr(first);
        while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) s.pop_back();
        if (s.rfind("loops:", 0) == 0) {
            try {
                d.loops = std::stoi(s.substr(6));
            } catch (...) {
                fail("bad loop count");
            }
            sawLoops = true;
            continue;
        }
        if (s.size() < 2 || s[0] != 'X' || (s[1] != '+' && s[1] != '-'))
            fail("expected X+[a,b,c,d] or X-[a,b,c,d]");
        PDCrossing c{};
        c.sign = s[1] == '+' ? 1 : -1;
        size_t lb = s.find('[');
        size_t rb = s.find(']');
        if (lb == std::string::npos || rb == std::string::npos || rb < lb)
            fail("missing arc list brackets");
        std::istringstream as(s.substr(lb + 1, rb - lb - 1));
        for (int i = 0; i < 4; ++i) {
            std::string tok;
            if (!std::getline(as, tok, ',')) fail("expected four arc ids");
            try {
                c.arcs[i] = std::stoi(tok);
            } catch (...) {
                fail("bad arc id '" + tok + "'");
            }
        }
        d.crossings.push_back(c);
    }
    if (!sawLoops && d.crossings.empty())
        throw std::invalid_argument("PD: empty input (expected crossings or loops line)");
    d.validate();
    return d;
}

namespace {

// geometric corners of a crossing layer
enum Corner { BL = 0, BR = 1, TL = 2, TR = 3 };

struct WireGraph {
    // handle -> its unique external connection; -1 while dangling
    std::vector<int> ext;
    // handle -> pass-through twin (cap/cup/boundary connectors); -1 at corners
    std::vector<int> twin;

    int addCorner() {
        ext.push_back(-1);
        twin.push_back(-1);
        return static_cast<int>(ext.size()) - 1;
    }
    std::pair<int, int> addConnector() {
        int a = addCorner(), b = addCorner();
        twin[a] = b;
        twin[b] = a;
        return {a, b};
    }
    void connect(int a, int b) {
        if (ext[a] != -1 || ext[b] != -1) throw std::logic_error("closure: handle reused");
        ext[a] = b;
        ext[b] = a;
    }
};

}  // namespace

PDDiagram closure(const SlicedDiagram& d) {
    if (d.bottom != d.top)
        throw std::invalid_argument("closure: diagram is not an endomorphism (" +
                                    d.bottom.str() + " vs " + d.top.str() + ")");
    d.validate();

    WireGraph g;
    struct CrossInfo {
        int corner[4];  // handles, indexed by Corner
        Ori o1, o2;
        int sign;
    };
    std::vector<CrossInfo> xs;

    std::vector<int> cut;
    std::vector<int> closureEnds;  // bottom-side closure handles, by column
    for (size_t i = 0; i < d.bottom.size(); ++i) {
        auto [up, cl] = g.addConnector();
        cut.push_back(up);
        closureEnds.push_back(cl);
    }
    for (const auto& l : d.layers) {
        const int k = l.offset;
        switch (l.gen.kind) {
            case Generator::Kind::Cross: {
                CrossInfo ci{};
                for (int c = 0; c < 4; ++c) ci.corner[c] = g.addCorner();
                ci.o1 = l.gen.o1;
                ci.o2 = l.gen.o2;
                ci.sign = l.gen.sign;
                g.connect(cut[k], ci.corner[BL]);
                g.connect(cut[k + 1], ci.corner[BR]);
                cut[k] = ci.corner[TL];
                cut[k + 1] = ci.corner[TR];
                xs.push_back(ci);
                break;
            }
            case Generator::Kind::Cap: {
                auto [a, b] = g.addConnector();
                g.connect(cut[k], a);
                g.connect(cut[k + 1], b);
                cut.erase(cut.begin() + k, cut.begin() + k + 2);
                break;
            }
            case Generator::Kind::Cup: {
                auto [a, b] = g.addConnector();
                cut.insert(cut.begin() + k, {a, b});
                break;
            }
        }
    }
    for (size_t j = 0; j < cut.size(); ++j) {
        auto [down, cl] = g.addConnector();
        g.connect(cut[j], down);
        g.connect(cl, closureEnds[j]);
    }

    // walk wires: arcs between crossing corners, cycles become loops
    const int n = static_cast<int>(g.ext.size());
    std::vector<int> arcAt(n, 0);  // corner handle -> arc id
    std::vector<bool> seen(n, false);
    std::map<int, int> cornerOf;  // handle -> crossing*4 + corner
    for (size_t c = 0; c < xs.size(); ++c)
        for (int k = 0; k < 4; ++k) cornerOf[xs[c].corner[k]] = static_cast<int>(c) * 4 + k;
    int nextArc = 1;
    for (const auto& [h0, tag] : cornerOf) {
        (void)tag;
        if (seen[h0]) continue;
        int arc = nextArc++;
        seen[h0] = true;
        arcAt[h0] = arc;
        int h = g.ext[h0];
        while (g.twin[h] != -1) {
            seen[h] = true;
            h = g.twin[h];
            seen[h] = true;
            h = g.ext[h];
        }
        seen[h] = true;
        arcAt[h] = arc;  // the far corner
    }
    PDDiagram pd;
    pd.loops = 0;
    for (int h = 0; h < n; ++h) {
        if (seen[h]) continue;
        ++pd.loops;
        int cur = h;
        while (!seen[cur]) {
            seen[cur] = true;
            seen[g.twin[cur]] = true;
            cur = g.ext[g.twin[cur]];
        }
    }

    for (const auto& ci : xs) {
        // incoming sides: BL iff o1 up, BR iff o2 up, TL iff o2 down, TR iff o1 down
        bool in[4];
        in[BL] = ci.o1 == Ori::Up;
        in[BR] = ci.o2 == Ori::Up;
        in[TL] = ci.o2 == Ori::Down;
        in[TR] = ci.o1 == Ori::Down;
        bool parallel = ci.o1 == ci.o2;
        // slash strand is {BL, TR}; it is the over strand at positive
        // parallel and negative antiparallel crossings
        bool slashOver = parallel == (ci.sign > 0);
        int underA = slashOver ? TL : BL;
        int underB = slashOver ? BR : TR;
        int underIn = in[underA] ? underA : underB;
        static const int ccw[4] = {BL, BR, TR, TL};
        int start = 0;
        while (ccw[start] != underIn) ++start;
        PDCrossing pc{};
        pc.sign = ci.sign;
        for (int s = 0; s < 4; ++s) pc.arcs[s] = arcAt[ci.corner[ccw[(start + s) % 4]]];
        pd.crossings.push_back(pc);
    }
    pd.validate();
    return pd;
}

}  // namespace skein
