#include "skein/qwb.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace skein {
namespace qwb {

AlgebraWord AlgebraWord::append(Letter l) const {
    AlgebraWord w = *this;
    w.letters.push_back(l);
    return w;
}

AlgebraWord AlgebraWord::concat(const AlgebraWord& o) const {
    AlgebraWord w = *this;
    w.letters.insert(w.letters.end(), o.letters.begin(), o.letters.end());
    return w;
}

std::string AlgebraWord::str() const {
    if (letters.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& l : letters) {
        if (!first) os << " ";
        first = false;
        switch (l.kind) {
            case Letter::Kind::E: os << "e"; break;
            case Letter::Kind::H: os << "H" << l.index; break;
            case Letter::Kind::Hinv: os << "H" << l.index << "^-1"; break;
        }
    }
    return os.str();
}

void validateWord(const AlgebraWord& w) {
    if (w.m < 1 || w.n < 1) throw std::invalid_argument("AlgebraWord: need m, n >= 1");
    for (const auto& l : w.letters) {
        if (l.kind == Letter::Kind::E) continue;
        bool ok = (l.index <= -1 && l.index >= -(w.m - 1)) ||
                  (l.index >= 1 && l.index <= w.n - 1);
        if (!ok)
            throw std::invalid_argument("AlgebraWord: generator index " +
                                        std::to_string(l.index) + " out of range for (m, n) = (" +
                                        std::to_string(w.m) + ", " + std::to_string(w.n) + ")");
    }
}

ObjectWord endWord(int m, int n) { return ObjectWord::ups(m, n); }

namespace {

SlicedDiagram letterDiagram(int m, int n, const Letter& l) {
    const ObjectWord w = endWord(m, n);
    SlicedDiagram d = SlicedDiagram::identity(w);
    switch (l.kind) {
        case Letter::Kind::E:
            d.layers = {{m - 1, Generator::cap(Ori::Up, Ori::Down)},
                        {m - 1, Generator::cup(Ori::Up, Ori::Down)}};
            break;
        case Letter::Kind::H:
        case Letter::Kind::Hinv: {
            // strands labelled i, i+1 sit at columns m+i, m+i+1 (1-based)
            int offset = m + l.index - 1;
            Ori o = l.index < 0 ? Ori::Up : Ori::Down;
            int sign = l.kind == Letter::Kind::H ? +1 : -1;
            d.layers = {{offset, Generator::cross(sign, o, o)}};
            break;
        }
    }
    d.validate();
    return d;
}

}  // namespace

SlicedDiagram xi(const AlgebraWord& w) {
    validateWord(w);
    SlicedDiagram d = SlicedDiagram::identity(endWord(w.m, w.n));
    // product order: the first letter acts last, so it stacks on top
    for (const auto& l : w.letters) d = compose(d, letterDiagram(w.m, w.n, l));
    return d;
}

Morphism expandWord(const AlgebraWord& w) {
    const ObjectWord ew = endWord(w.m, w.n);
    return HomContext::get(ew, ew).expand(xi(w));
}

Morphism algMulExpand(const AlgebraWord& w1, const AlgebraWord& w2) {
    if (w1.m != w2.m || w1.n != w2.n)
        throw std::invalid_argument("algMulExpand: mixed (m, n)");
    return expandWord(w1.concat(w2));
}

Morphism algBarWord(const AlgebraWord& w) {
    AlgebraWord b = w;
    for (auto& l : b.letters) {
        if (l.kind == Letter::Kind::H)
            l.kind = Letter::Kind::Hinv;
        else if (l.kind == Letter::Kind::Hinv)
            l.kind = Letter::Kind::H;
    }
    return expandWord(b);
}

AlgebraWord buildEk(int m, int n, int k) {
    if (k < 0 || k > std::min(m, n))
        throw std::invalid_argument("buildEk: k out of range 0..min(m, n)");
    AlgebraWord w = AlgebraWord::unit(m, n);
    if (k == 0) return w;
    // e_{j+1} = e Hinv(-1)..Hinv(-j) H(1)..H(j) e_j, built top down
    for (int j = k - 1; j >= 1; --j) {
        AlgebraWord level = AlgebraWord::unit(m, n);
        level.letters.push_back(Letter::e());
        for (int i = 1; i <= j; ++i) level.letters.push_back(Letter::hinv(-i));
        for (int i = 1; i <= j; ++i) level.letters.push_back(Letter::h(i));
        w = w.concat(level);
    }
    w.letters.push_back(Letter::e());
    validateWord(w);
    return w;
}

namespace {

using Expr = std::vector<std::pair<Scalar, AlgebraWord>>;

Morphism expandExpr(const Expr& e, int m, int n) {
    Morphism acc = Morphism::zero(endWord(m, n), endWord(m, n));
    for (const auto& [c, w] : e) acc = acc + c * expandWord(w);
    return acc;
}

AlgebraWord wordOf(int m, int n, std::initializer_list<Letter> ls) {
    AlgebraWord w = AlgebraWord::unit(m, n);
    w.letters = ls;
    return w;
}

}  // namespace

RelationReport relationSuite(int m, int n) {
    RelationReport rep;
    const int kmax = std::min(m, n);
    std::vector<int> gens;
    for (int i = -(m - 1); i <= -1; ++i) gens.push_back(i);
    for (int i = 1; i <= n - 1; ++i) gens.push_back(i);

    auto check = [&](const std::string& name, const Expr& lhs, const Expr& rhs) {
        RelationCheck c;
        c.name = name;
        c.pass = expandExpr(lhs, m, n) == expandExpr(rhs, m, n);
        rep.checks.push_back(c);
    };
    auto skip = [&](const std::string& name) {
        rep.checks.push_back({name, false, true});
    };

    const Scalar one = Scalar::one();
    const Scalar z = Scalar::z();
    const Scalar t = Scalar::t();
    const Scalar delta = Scalar::delta();
    const AlgebraWord unit = AlgebraWord::unit(m, n);

    // quadratic relation, as (H - q)(H + q^-1) = 0
    for (int i : gens) {
        auto Hi = Letter::h(i);
        check("def(1) i=" + std::to_string(i),
              {{one, wordOf(m, n, {Hi, Hi})}},
              {{z, wordOf(m, n, {Hi})}, {one, unit}});
    }
    if (gens.empty()) skip("def(1)");

    bool any2 = false;
    for (size_t x = 0; x < gens.size(); ++x)
        for (size_t y = x + 1; y < gens.size(); ++y) {
            int i = gens[x], j = gens[y];
            if (std::abs(i - j) <= 1) continue;
            any2 = true;
            check("def(2) i=" + std::to_string(i) + ",j=" + std::to_string(j),
                  {{one, wordOf(m, n, {Letter::h(i), Letter::h(j)})}},
                  {{one, wordOf(m, n, {Letter::h(j), Letter::h(i)})}});
        }
    if (!any2) skip("def(2)");

    bool any3 = false;
    for (int i : gens) {
        if (std::find(gens.begin(), gens.end(), i + 1) == gens.end()) continue;
        if (i == -1) continue;  // -1 and 1 are not adjacent strands
        any3 = true;
        auto a = Letter::h(i), b = Letter::h(i + 1);
        check("def(3) i=" + std::to_string(i),
              {{one, wordOf(m, n, {a, b, a})}},
              {{one, wordOf(m, n, {b, a, b})}});
    }
    if (!any3) skip("def(3)");

    bool any4 = false;
    for (int i : gens) {
        if (std::abs(i) < 2) continue;
        any4 = true;
        check("def(4) i=" + std::to_string(i),
              {{one, wordOf(m, n, {Letter::h(i), Letter::e()})}},
              {{one, wordOf(m, n, {Letter::e(), Letter::h(i)})}});
    }
    if (!any4) skip("def(4)");

    for (int i : {-1, 1}) {
        if (std::find(gens.begin(), gens.end(), i) == gens.end()) {
            skip("def(5) i=" + std::to_string(i));
            continue;
        }
        check("def(5) i=" + std::to_string(i),
              {{one, wordOf(m, n, {Letter::e(), Letter::h(i), Letter::e()})}},
              {{t, wordOf(m, n, {Letter::e()})}});
    }

    check("def(6)", {{one, wordOf(m, n, {Letter::e(), Letter::e()})}},
          {{delta, wordOf(m, n, {Letter::e()})}});

    if (m >= 2 && n >= 2) {
        auto e = Letter::e();
        auto hm = Letter::h(-1), hp = Letter::h(1), hmI = Letter::hinv(-1);
        check("def(7)", {{one, wordOf(m, n, {e, hmI, hp, e, hm})}},
              {{one, wordOf(m, n, {e, hmI, hp, e, hp})}});
        check("def(8)", {{one, wordOf(m, n, {hm, e, hmI, hp, e})}},
              {{one, wordOf(m, n, {hp, e, hmI, hp, e})}});
    } else {
        skip("def(7)");
        skip("def(8)");
    }

    // e_k identities
    for (int k = 1; k + 1 <= kmax; ++k) {
        // e_{k+1} = e_k H(k)..H(1) Hinv(-k)..Hinv(-1) e
        AlgebraWord rhs = buildEk(m, n, k);
        for (int i = k; i >= 1; --i) rhs.letters.push_back(Letter::h(i));
        for (int i = k; i >= 1; --i) rhs.letters.push_back(Letter::hinv(-i));
        rhs.letters.push_back(Letter::e());
        check("ek(1) k=" + std::to_string(k + 1),
              {{one, buildEk(m, n, k + 1)}}, {{one, rhs}});
    }
    if (kmax < 2) skip("ek(1)");

    bool any22 = false;
    for (int k = 2; k <= kmax; ++k)
        for (int i = 1; i < k; ++i) {
            any22 = true;
            AlgebraWord r1 = buildEk(m, n, k);
            r1.letters.push_back(Letter::h(i));
            r1.letters.push_back(Letter::hinv(-i));
            check("ek(2)R k=" + std::to_string(k) + ",i=" + std::to_string(i),
                  {{one, buildEk(m, n, k)}}, {{one, r1}});
            AlgebraWord r2 = AlgebraWord::unit(m, n);
            r2.letters = {Letter::hinv(-i), Letter::h(i)};
            r2 = r2.concat(buildEk(m, n, k));
            check("ek(2)L k=" + std::to_string(k) + ",i=" + std::to_string(i),
                  {{one, buildEk(m, n, k)}}, {{one, r2}});
        }
    if (!any22) skip("ek(2)");

    bool any23 = false;
    for (int k = 1; k <= kmax; ++k)
        for (int i = 1; i <= k; ++i) {
            any23 = true;
            check("ek(3) k=" + std::to_string(k) + ",i=" + std::to_string(i),
                  {{one, buildEk(m, n, k).concat(buildEk(m, n, i))}},
                  {{delta.pow(i), buildEk(m, n, k)}});
            check("ek(3)' k=" + std::to_string(k) + ",i=" + std::to_string(i),
                  {{one, buildEk(m, n, i).concat(buildEk(m, n, k))}},
                  {{delta.pow(i), buildEk(m, n, k)}});
        }
    if (!any23) skip("ek(3)");

    bool any24 = false;
    for (int k = 1; k <= kmax; ++k)
        for (int i : gens) {
            if (std::abs(i) < k + 1) continue;
            any24 = true;
            AlgebraWord l = wordOf(m, n, {Letter::h(i)}).concat(buildEk(m, n, k));
            AlgebraWord r = buildEk(m, n, k).concat(wordOf(m, n, {Letter::h(i)}));
            check("ek(4) k=" + std::to_string(k) + ",i=" + std::to_string(i),
                  {{one, l}}, {{one, r}});
        }
    if (!any24) skip("ek(4)");

    bool any25 = false;
    for (int k = 1; k <= kmax; ++k)
        for (int i = 1; i <= k; ++i)
            for (int j : gens) {
                if (std::abs(j) > i) continue;
                any25 = true;
                AlgebraWord a =
                    buildEk(m, n, i).concat(wordOf(m, n, {Letter::h(j)})).concat(buildEk(m, n, k));
                AlgebraWord b =
                    buildEk(m, n, k).concat(wordOf(m, n, {Letter::h(j)})).concat(buildEk(m, n, i));
                Expr rhs = {{t * delta.pow(i - 1), buildEk(m, n, k)}};
                check("ek(5)a k=" + std::to_string(k) + ",i=" + std::to_string(i) +
                          ",j=" + std::to_string(j),
                      {{one, a}}, rhs);
                check("ek(5)b k=" + std::to_string(k) + ",i=" + std::to_string(i) +
                          ",j=" + std::to_string(j),
                      {{one, b}}, rhs);
            }
    if (!any25) skip("ek(5)");

    return rep;
}

namespace {

std::vector<Letter> bfsLetters(int m, int n) {
    // ordered by index with the wall contraction at index zero
    std::vector<Letter> ls;
    for (int i = -(m - 1); i <= -1; ++i) ls.push_back(Letter::h(i));
    ls.push_back(Letter::e());
    for (int i = 1; i <= n - 1; ++i) ls.push_back(Letter::h(i));
    return ls;
}

std::string labelString(const AlgebraWord& w, int m, int n) {
    if (w.letters.empty()) return "1";
    const int kmax = std::min(m, n);
    std::vector<std::pair<int, std::vector<Letter>>> eks;  // k, letters, longest first
    for (int k = kmax; k >= 2; --k) eks.push_back({k, buildEk(m, n, k).letters});
    std::ostringstream os;
    bool first = true;
    size_t i = 0;
    while (i < w.letters.size()) {
        if (!first) os << " ";
        first = false;
        bool matched = false;
        for (const auto& [k, pat] : eks) {
            if (i + pat.size() <= w.letters.size() &&
                std::equal(pat.begin(), pat.end(), w.letters.begin() + i)) {
                os << "e_" << k;
                i += pat.size();
                matched = true;
                break;
            }
        }
        if (matched) continue;
        const Letter& l = w.letters[i++];
        switch (l.kind) {
            case Letter::Kind::E: os << "e"; break;
            case Letter::Kind::H: os << "s" << l.index; break;
            case Letter::Kind::Hinv: os << "s" << l.index << "^-1"; break;
        }
    }
    return os.str();
}

std::string rawMatchingLabel(const Matching& mm) {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (auto [in, out] : mm.pairs) {
        if (!first) os << " ";
        first = false;
        os << in << ">" << out;
    }
    os << "]";
    return os.str();
}

}  // namespace

LabeledCanonicalBasis qwbCanonical(int m, int n) {
    const ObjectWord w = endWord(m, n);
    LabeledCanonicalBasis out;
    out.basis = canonicalBasis(w, w);
    HomContext& ctx = HomContext::get(w, w);
    const size_t dim = ctx.dim();
    out.labels.assign(dim, "");
    out.words.assign(dim, std::nullopt);

    const auto letters = bfsLetters(m, n);
    std::vector<std::pair<Matching, int>> letterData;  // matching + crossings
    for (const auto& l : letters) {
        auto tr = traceDiagram(letterDiagram(m, n, l));
        letterData.push_back({tr.matching, l.kind == Letter::Kind::E ? 0 : 1});
    }

    // breadth-first search over reduced positive words; every prefix of such
    // a word is itself one, so right-appends reach them all
    struct State {
        Matching matching;
        AlgebraWord word;
        int crossings;
    };
    std::deque<State> queue;
    Matching idm = identityMatching(w);
    int idIdx = ctx.indexOf(idm);
    out.labels[idIdx] = "1";
    out.words[idIdx] = AlgebraWord::unit(m, n);
    queue.push_back({idm, AlgebraWord::unit(m, n), 0});
    while (!queue.empty()) {
        State st = std::move(queue.front());
        queue.pop_front();
        for (size_t li = 0; li < letters.size(); ++li) {
            auto [composite, loops] = composeMatchings(st.matching, letterData[li].first);
            if (loops != 0) continue;
            int cnt = st.crossings + letterData[li].second;
            if (composite.crossingNumber() != cnt) continue;
            int idx = ctx.indexOf(composite);
            if (idx < 0 || out.words[idx]) continue;
            AlgebraWord nw = st.word.append(letters[li]);
            out.words[idx] = nw;
            out.labels[idx] = labelString(nw, m, n);
            queue.push_back({std::move(composite), std::move(nw), cnt});
        }
    }

    // matchings with nested turnbacks need e_k cores, which are not positive
    // words; sandwich them between the positive words found above
    std::vector<size_t> positives;
    for (size_t i = 0; i < dim; ++i)
        if (out.words[i]) positives.push_back(i);
    std::sort(positives.begin(), positives.end(), [&](size_t x, size_t y) {
        auto lx = out.words[x]->letters.size(), ly = out.words[y]->letters.size();
        return lx != ly ? lx < ly : x < y;
    });
    for (int k = 2; k <= std::min(m, n); ++k) {
        AlgebraWord ek = buildEk(m, n, k);
        Morphism mek = expandWord(ek);
        if (mek.coeffs.size() != 1 || !mek.coeffs.begin()->second.isOne())
            throw InvariantViolationError("qwbCanonical: e_" + std::to_string(k) +
                                          " did not expand to a basis element");
        for (size_t xi_ : positives) {
            for (size_t yi : positives) {
                Morphism prod = multiplyMorphisms(
                    Morphism::basisElement(ctx.basis()[xi_]),
                    multiplyMorphisms(mek, Morphism::basisElement(ctx.basis()[yi])));
                if (prod.coeffs.size() != 1 || !prod.coeffs.begin()->second.isOne()) continue;
                int idx = ctx.indexOf(prod.coeffs.begin()->first);
                if (idx < 0) continue;
                AlgebraWord cand = out.words[xi_]->concat(ek).concat(*out.words[yi]);
                if (out.words[idx] && out.words[idx]->letters.size() <= cand.letters.size())
                    continue;
                out.words[idx] = cand;
                out.labels[idx] = labelString(cand, m, n);
            }
        }
    }

    for (size_t i = 0; i < dim; ++i)
        if (!out.words[i]) out.labels[i] = rawMatchingLabel(ctx.basis()[i]);
    return out;
}

}  // namespace qwb
}  // namespace skein
