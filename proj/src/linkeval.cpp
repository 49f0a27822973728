#include "skein/linkeval.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace skein {

PDDiagram switchCrossing(const PDDiagram& d, int ci) {
    if (ci < 0 || ci >= static_cast<int>(d.crossings.size()))
        throw std::invalid_argument("switchCrossing: no crossing " + std::to_string(ci));
    PDDiagram r = d;
    PDCrossing& c = r.crossings[ci];
    const auto a = c.arcs;
    if (c.sign > 0) {
        // incoming over at slot 3 becomes the new incoming under
        c.arcs = {a[3], a[0], a[1], a[2]};
    } else {
        c.arcs = {a[1], a[2], a[3], a[0]};
    }
    c.sign = -c.sign;
    return r;
}

PDDiagram smoothCrossing(const PDDiagram& d, int ci) {
    if (ci < 0 || ci >= static_cast<int>(d.crossings.size()))
        throw std::invalid_argument("smoothCrossing: no crossing " + std::to_string(ci));
    PDDiagram r;
    r.loops = d.loops;
    for (int i = 0; i < static_cast<int>(d.crossings.size()); ++i)
        if (i != ci) r.crossings.push_back(d.crossings[i]);
    const auto& c = d.crossings[ci];
    // orientation-preserving reconnection: adjacent slots pair up
    std::pair<int, int> j1, j2;
    if (c.sign > 0) {
        j1 = {c.arcs[0], c.arcs[1]};
        j2 = {c.arcs[2], c.arcs[3]};
    } else {
        j1 = {c.arcs[0], c.arcs[3]};
        j2 = {c.arcs[1], c.arcs[2]};
    }
    auto rename = [&](int from, int to) {
        for (auto& x : r.crossings)
            for (auto& arc : x.arcs)
                if (arc == from) arc = to;
    };
    auto join = [&](int a, int b) {
        if (a == b) {
            ++r.loops;
        } else {
            rename(b, a);
            if (j2.first == b) j2.first = a;
            if (j2.second == b) j2.second = a;
        }
    };
    join(j1.first, j1.second);
    join(j2.first, j2.second);
    return r;
}

namespace {

std::string serialize(const PDDiagram& pd) {
    std::vector<std::array<int, 5>> rows;
    rows.reserve(pd.crossings.size());
    for (const auto& c : pd.crossings)
        rows.push_back({c.sign, c.arcs[0], c.arcs[1], c.arcs[2], c.arcs[3]});
    std::sort(rows.begin(), rows.end());
    std::ostringstream os;
    for (const auto& r : rows)
        os << r[0] << ":" << r[1] << "," << r[2] << "," << r[3] << "," << r[4] << ";";
    return os.str();
}

struct WalkInfo {
    int violation = -1;          // crossing index of first descending violation
    std::vector<int> compSelfW;  // per-component self-writhe (valid if no violation)
};

WalkInfo walkComponents(const PDDiagram& pd) {
    const int n = static_cast<int>(pd.crossings.size());
    struct Port {
        int c = -1, slot = -1;
    };
    std::map<int, Port> headOf;
    for (int c = 0; c < n; ++c) {
        headOf[pd.crossings[c].arcs[0]] = {c, 0};
        headOf[pd.crossings[c].arcs[pd.crossings[c].overIn()]] = {c, pd.crossings[c].overIn()};
    }
    struct Event {
        int crossing;
        bool under;
        int comp;
    };
    std::vector<Event> events;
    std::set<int> visitedArcs;
    int comp = 0;
    for (const auto& [arc0, port0] : headOf) {
        (void)port0;
        if (visitedArcs.count(arc0)) continue;
        int cur = arc0;
        do {
            visitedArcs.insert(cur);
            Port p = headOf.at(cur);
            bool under = p.slot == 0;
            events.push_back({p.c, under, comp});
            int exit = under ? 2 : pd.crossings[p.c].overOut();
            cur = pd.crossings[p.c].arcs[exit];
        } while (cur != arc0);
        ++comp;
    }
    WalkInfo info;
    info.compSelfW.assign(comp, 0);
    std::vector<int> firstComp(n, -1);
    std::vector<bool> met(n, false);
    for (const auto& ev : events) {
        if (!met[ev.crossing]) {
            met[ev.crossing] = true;
            firstComp[ev.crossing] = ev.comp;
            if (ev.under && info.violation < 0) {
                info.violation = ev.crossing;
                return info;
            }
        } else if (firstComp[ev.crossing] == ev.comp) {
            info.compSelfW[ev.comp] += pd.crossings[ev.crossing].sign;
        }
    }
    return info;
}

}  // namespace

Scalar EvalSession::eval(const PDDiagram& d) {
    d.validate();
    return evalRec(d, 0, static_cast<int>(d.crossings.size()));
}

Scalar EvalSession::evalRec(PDDiagram pd, int depth, const int budgetCrossings) {
    // lexicographic measure (crossings, remaining violations) bounds the depth
    const long maxDepth =
        std::max<long>(64, (budgetCrossings + 2L) * (budgetCrossings + 3L));
    if (depth > maxDepth) throw std::logic_error("evalLink: recursion depth bound exceeded");

    Scalar loopFactor = Scalar::delta().pow(pd.loops);
    pd.loops = 0;
    if (pd.crossings.empty()) return loopFactor;

    const std::string key = serialize(pd);
    if (auto it = memo_.find(key); it != memo_.end()) return loopFactor * it->second;

    WalkInfo info = walkComponents(pd);
    Scalar core;
    if (info.violation < 0) {
        // totally descending: unlinked framed unknots
        core = Scalar::one();
        for (int w : info.compSelfW) core *= Scalar::t(w) * Scalar::delta();
    } else {
        const int x = info.violation;
        const int sgn = pd.crossings[x].sign;
        Scalar sw = evalRec(switchCrossing(pd, x), depth + 1, budgetCrossings);
        Scalar sm = evalRec(smoothCrossing(pd, x), depth + 1, budgetCrossings);
        core = sgn > 0 ? sw + Scalar::z() * sm : sw - Scalar::z() * sm;
    }
    memo_.emplace(key, core);
    return loopFactor * core;
}

Scalar evalLink(const PDDiagram& d) {
    EvalSession s;
    return s.eval(d);
}

}  // namespace skein
