#include "skein/verify.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include <json.hpp>

#include "skein/canonical.hpp"
#include "skein/kl.hpp"
#include "skein/qwb.hpp"

namespace skein {
namespace verify {

namespace {

using nlohmann::json;

// ------------------------------------------------------------------ helpers

SlicedDiagram genDiagram(const std::string& kind) {
    SlicedDiagram d;
    if (kind == "A") {
        d.bottom = ObjectWord::parse("ud");
        d.layers = {{0, Generator::cap(Ori::Up, Ori::Down)}};
    } else if (kind == "Abar") {
        d.bottom = ObjectWord::parse("du");
        d.layers = {{0, Generator::cap(Ori::Down, Ori::Up)}};
    } else if (kind == "U") {
        d.top = ObjectWord::parse("du");
        d.layers = {{0, Generator::cup(Ori::Down, Ori::Up)}};
    } else if (kind == "Ubar") {
        d.top = ObjectWord::parse("ud");
        d.layers = {{0, Generator::cup(Ori::Up, Ori::Down)}};
    } else {
        throw std::invalid_argument("genDiagram: " + kind);
    }
    d.validate();
    return d;
}

SlicedDiagram crossing(int sign, char a, char b) {
    SlicedDiagram d;
    Ori o1 = a == 'u' ? Ori::Up : Ori::Down;
    Ori o2 = b == 'u' ? Ori::Up : Ori::Down;
    d.bottom = ObjectWord{{o1, o2}};
    d.top = ObjectWord{{o2, o1}};
    d.layers = {{0, Generator::cross(sign, o1, o2)}};
    return d;
}

SlicedDiagram pad(const std::string& left, const SlicedDiagram& g, const std::string& right) {
    SlicedDiagram d = tensorD(SlicedDiagram::identity(ObjectWord::parse(left)), g);
    return tensorD(d, SlicedDiagram::identity(ObjectWord::parse(right)));
}

SlicedDiagram stack(std::vector<SlicedDiagram> bottomToTop) {
    if (bottomToTop.empty()) throw std::invalid_argument("stack: empty");
    SlicedDiagram d = bottomToTop.front();
    for (size_t i = 1; i < bottomToTop.size(); ++i) d = compose(bottomToTop[i], d);
    return d;
}

// ------------------------------------------------------- golden file driver

qwb::AlgebraWord parseGoldenWord(const json& tokens, int m, int n) {
    qwb::AlgebraWord w = qwb::AlgebraWord::unit(m, n);
    for (const auto& tj : tokens) {
        std::string t = tj.get<std::string>();
        if (t == "e") {
            w.letters.push_back(qwb::Letter::e());
        } else if (t.size() > 1 && t[0] == 'e') {
            int k = std::stoi(t.substr(1));
            w = w.concat(qwb::buildEk(m, n, k));
        } else if (t.size() > 1 && t[0] == 's') {
            w.letters.push_back(qwb::Letter::h(std::stoi(t.substr(1))));
        } else {
            throw std::invalid_argument("golden word token '" + t + "'");
        }
    }
    qwb::validateWord(w);
    return w;
}

struct GoldenOutcome {
    bool pass = true;
    std::string detail;
};

QLaurent qLaurentFromJson_(const json& arr) {
    std::vector<std::pair<int32_t, Int>> ts;
    for (const auto& row : arr) {
        Int c = row.at(1).is_string() ? Int(row.at(1).get<std::string>())
                                      : Int(row.at(1).get<int64_t>());
        ts.push_back({row.at(0).get<int32_t>(), c});
    }
    return QLaurent::fromTerms(std::move(ts));
}

GoldenOutcome checkGolden(const std::filesystem::path& file,
                          const qwb::LabeledCanonicalBasis& lcb) {
    GoldenOutcome out;
    std::ifstream in(file);
    if (!in) {
        out.pass = false;
        out.detail = "cannot open " + file.string();
        return out;
    }
    json j;
    in >> j;
    const int m = j.at("m").get<int>();
    const int n = j.at("n").get<int>();
    const auto& elements = j.at("elements");
    const size_t dim = lcb.basis.order.size();
    std::ostringstream log;
    if (elements.size() != dim) {
        out.pass = false;
        log << "golden lists " << elements.size() << " elements, engine computed " << dim << "; ";
    }
    std::map<std::string, Morphism> byLabel;
    std::vector<bool> used(dim, false);
    for (const auto& ej : elements) {
        const std::string label = ej.at("label").get<std::string>();
        std::vector<Morphism> expectations;
        if (ej.contains("terms")) {
            Morphism acc = Morphism::zero(qwb::endWord(m, n), qwb::endWord(m, n));
            for (const auto& term : ej.at("terms")) {
                Scalar c = Scalar::fromQ(qLaurentFromJson_(term.at("coeff")));
                acc = acc + c * qwb::expandWord(parseGoldenWord(term.at("word"), m, n));
            }
            expectations.push_back(std::move(acc));
        }
        if (ej.contains("products")) {
            for (const auto& prodj : ej.at("products")) {
                Morphism acc = Morphism::basisElement(identityMatching(qwb::endWord(m, n)));
                for (const auto& ref : prodj) {
                    auto it = byLabel.find(ref.get<std::string>());
                    if (it == byLabel.end())
                        throw std::invalid_argument("golden product references unknown label '" +
                                                    ref.get<std::string>() + "'");
                    acc = multiplyMorphisms(acc, it->second);
                }
                expectations.push_back(std::move(acc));
            }
        }
        if (expectations.empty())
            throw std::invalid_argument("golden element '" + label + "' has no expectation");
        for (size_t k = 1; k < expectations.size(); ++k) {
            if (!(expectations[k] == expectations[0])) {
                out.pass = false;
                log << "product forms for '" << label << "' disagree; ";
            }
        }
        const Morphism& expect = expectations[0];
        int found = -1;
        for (size_t t = 0; t < dim; ++t) {
            if (lcb.basis.elements[t] == expect) {
                found = static_cast<int>(t);
                break;
            }
        }
        if (found < 0) {
            out.pass = false;
            log << "no canonical element equals golden '" << label << "'; ";
        } else if (used[found]) {
            out.pass = false;
            log << "golden '" << label << "' duplicates a matched element; ";
        } else {
            used[found] = true;
        }
        byLabel[label] = expect;
    }
    for (size_t t = 0; t < dim; ++t) {
        if (!used[t] && elements.size() == dim) {
            out.pass = false;
            log << "canonical element " << t << " (" << lcb.labels[t] << ") unmatched; ";
        }
    }
    out.detail = log.str();
    if (out.pass) out.detail = "all " + std::to_string(dim) + " elements match";
    return out;
}

// ------------------------------------------------- word-pair enumerations

std::vector<std::pair<ObjectWord, ObjectWord>> balancedPairsUpTo(int totalLen) {
    std::vector<std::pair<ObjectWord, ObjectWord>> out;
    for (int la = 0; la <= totalLen; ++la) {
        for (int lb = 0; lb + la <= totalLen; ++lb) {
            for (int ma = 0; ma < (1 << la); ++ma) {
                for (int mb = 0; mb < (1 << lb); ++mb) {
                    ObjectWord a, b;
                    for (int i = 0; i < la; ++i)
                        a.letters.push_back((ma >> i) & 1 ? Ori::Down : Ori::Up);
                    for (int i = 0; i < lb; ++i)
                        b.letters.push_back((mb >> i) & 1 ? Ori::Down : Ori::Up);
                    if (a.balancedWith(b)) out.push_back({std::move(a), std::move(b)});
                }
            }
        }
    }
    return out;
}

}  // namespace

std::vector<CheckResult> runAcceptance(const Options& opts) {
    std::vector<CheckResult> results;
    std::map<std::pair<int, int>, qwb::LabeledCanonicalBasis> bases;

    auto run = [&](const std::string& id, double limitSeconds,
                   const std::function<std::pair<bool, std::string>()>& body) {
        if (!opts.only.empty() && id.rfind(opts.only, 0) != 0) return;
        CheckResult r;
        r.id = id;
        auto t0 = std::chrono::steady_clock::now();
        try {
            auto [ok, detail] = body();
            r.pass = ok;
            r.detail = detail;
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (limitSeconds > 0 && r.seconds > limitSeconds) {
            r.pass = false;
            r.detail += " [exceeded " + std::to_string(limitSeconds) + "s limit]";
        }
        results.push_back(std::move(r));
    };

    auto goldenCheck = [&](int m, int n, const std::string& file) {
        auto& lcb = bases[{m, n}];
        if (lcb.basis.order.empty()) lcb = qwb::qwbCanonical(m, n);
        auto rep = verifyCanonical(lcb.basis);
        if (!rep.pass()) {
            std::string msg = "canonical verification failed:";
            for (const auto& f : rep.failures) msg += " " + f;
            return std::make_pair(false, msg);
        }
        auto g = checkGolden(std::filesystem::path(opts.dataDir) / "golden" / file, lcb);
        return std::make_pair(g.pass, g.detail);
    };

    run("qwb21", 10, [&] { return goldenCheck(2, 1, "qwb_2_1.json"); });
    run("qwb31", 300, [&] { return goldenCheck(3, 1, "qwb_3_1.json"); });
    run("qwb22", 600, [&] { return goldenCheck(2, 2, "qwb_2_2.json"); });

    run("dims", 0, [&]() -> std::pair<bool, std::string> {
        std::ostringstream log;
        bool ok = true;
        auto expect = [&](const ObjectWord& a, const ObjectWord& b, size_t want) {
            size_t got = enumerateMatchings(a, b).size();
            if (got != want) {
                ok = false;
                log << "Hom(" << a.str() << "," << b.str() << ") has " << got << " matchings, want "
                    << want << "; ";
            }
        };
        expect(qwb::endWord(2, 1), qwb::endWord(2, 1), 6);
        expect(qwb::endWord(3, 1), qwb::endWord(3, 1), 24);
        expect(qwb::endWord(2, 2), qwb::endWord(2, 2), 24);
        std::mt19937 rng(20240817);
        auto fact = [](int n) {
            size_t f = 1;
            for (int i = 2; i <= n; ++i) f *= i;
            return f;
        };
        int tested = 0;
        while (tested < 24) {
            int la = static_cast<int>(rng() % 5), lb = static_cast<int>(rng() % 5);
            ObjectWord a, b;
            for (int i = 0; i < la; ++i)
                a.letters.push_back(rng() % 2 ? Ori::Down : Ori::Up);
            for (int i = 0; i < lb; ++i)
                b.letters.push_back(rng() % 2 ? Ori::Down : Ori::Up);
            int N = a.countUp() + b.countDown();
            if (!a.balancedWith(b)) {
                expect(a, b, 0);
                ++tested;
                continue;
            }
            if (N > 4) continue;
            expect(a, b, fact(N));
            ++tested;
        }
        return {ok, ok ? "counts 6/24/24 and randomized N! all exact" : log.str()};
    });

    run("barmatrix", 0, [&]() -> std::pair<bool, std::string> {
        int spaces = 0;
        for (const auto& [a, b] : balancedPairsUpTo(5)) {
            if (enumerateMatchings(a, b).empty()) continue;
            HomContext& ctx = HomContext::get(a, b);
            const auto& bm = ctx.barMatrix();  // asserts triangularity and t-freeness
            for (size_t t = 0; t < ctx.dim(); ++t) {
                for (size_t s = 0; s < ctx.dim(); ++s) {
                    const QLaurent& e = bm[t][s];
                    if (s == t) {
                        if (!e.isOne()) return {false, "diagonal break at " + a.str()};
                    } else if (!e.isZero() && ctx.length(s) >= ctx.length(t)) {
                        return {false, "triangularity break at Hom(" + a.str() + "," + b.str() + ")"};
                    }
                }
            }
            ++spaces;
        }
        return {true, std::to_string(spaces) + " spaces unitriangular and t-free"};
    });

    run("relations-qwb", 0, [&]() -> std::pair<bool, std::string> {
        std::ostringstream log;
        bool ok = true;
        for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {2, 2}, {3, 1}}) {
            auto rep = qwb::relationSuite(m, n);
            int applicable = 0;
            for (const auto& c : rep.checks) {
                if (!c.applicable) continue;
                ++applicable;
                if (!c.pass) {
                    ok = false;
                    log << "(" << m << "," << n << ") " << c.name << " failed; ";
                }
            }
            log << "(" << m << "," << n << "): " << applicable << " checks; ";
        }
        return {ok, log.str()};
    });

    run("relations-category", 0, [&]() -> std::pair<bool, std::string> {
        std::ostringstream log;
        bool ok = true;
        auto eq = [&](const std::string& name, const Morphism& lhs, const Morphism& rhs) {
            if (!(lhs == rhs)) {
                ok = false;
                log << name << " failed; ";
            }
        };
        auto X = [&](int s) { return crossing(s, 'd', 'd'); };
        auto idm = [&](const std::string& w) {
            return expandDiagram(SlicedDiagram::identity(ObjectWord::parse(w)));
        };
        const auto A = genDiagram("A"), Abar = genDiagram("Abar"), U = genDiagram("U"),
                   Ubar = genDiagram("Ubar");
        // zigzags
        eq("2.1a", expandDiagram(stack({pad("", U, "d"), pad("d", A, "")})), idm("d"));
        eq("2.1b", expandDiagram(stack({pad("d", Ubar, ""), pad("", Abar, "d")})), idm("d"));
        eq("2.2a", expandDiagram(stack({pad("", Ubar, "u"), pad("u", Abar, "")})), idm("u"));
        eq("2.2b", expandDiagram(stack({pad("u", U, ""), pad("", A, "u")})), idm("u"));
        // crossing slides past cups and caps
        for (int s : {+1, -1}) {
            Morphism lhs = expandDiagram(stack({pad("uu", U, ""), pad("uud", U, "u"),
                                                pad("uu", X(s), "uu"), pad("u", A, "duu"),
                                                pad("", A, "uu")}));
            Morphism rhs = expandDiagram(stack({pad("", Ubar, "uu"), pad("u", Ubar, "duu"),
                                                pad("uu", X(s), "uu"), pad("uud", Abar, "u"),
                                                pad("uu", Abar, "")}));
            eq("2.3 sign " + std::to_string(s), lhs, rhs);
        }
        // braid
        eq("2.4",
           expandDiagram(stack({pad("", X(1), "d"), pad("d", X(1), ""), pad("", X(1), "d")})),
           expandDiagram(stack({pad("d", X(1), ""), pad("", X(1), "d"), pad("d", X(1), "")})));
        // inverse crossings
        eq("2.5a", expandDiagram(stack({X(1), X(-1)})), idm("dd"));
        eq("2.5b", expandDiagram(stack({X(-1), X(1)})), idm("dd"));
        // skein
        eq("2.6", expandDiagram(X(1)),
           expandDiagram(X(-1)) + Scalar::z() * idm("dd"));
        // twists
        for (int s : {+1, -1}) {
            Morphism lhs = expandDiagram(
                stack({pad("d", U, ""), pad("", X(s), "u"), pad("d", Abar, "")}));
            eq("2.7 sign " + std::to_string(s), lhs, Scalar::t(s) * idm("d"));
        }
        // Reidemeister II with turnbacks
        for (int s : {+1, -1}) {
            Morphism lhs = expandDiagram(stack({pad("", Ubar, "du"), pad("u", X(s), "u"),
                                                pad("ud", Abar, ""), pad("ud", U, ""),
                                                pad("u", X(-s), "u"), pad("", A, "du")}));
            eq("2.8 sign " + std::to_string(s), lhs, idm("du"));
            Morphism lhs9 = expandDiagram(stack({pad("ud", U, ""), pad("u", X(-s), "u"),
                                                 pad("", A, "du"), pad("", Ubar, "du"),
                                                 pad("u", X(s), "u"), pad("ud", Abar, "")}));
            eq("2.9 sign " + std::to_string(s), lhs9, idm("ud"));
        }
        // bubble
        Morphism unit = expandDiagram(SlicedDiagram::identity(ObjectWord{}));
        eq("2.10a", expandDiagram(stack({Ubar, A})), Scalar::delta() * unit);
        eq("2.10b", expandDiagram(stack({U, Abar})), Scalar::delta() * unit);
        return {ok, ok ? "relations (2.1)-(2.10) hold as morphism identities" : log.str()};
    });

    run("linkeval", 1, [&]() -> std::pair<bool, std::string> {
        std::ostringstream log;
        bool ok = true;
        const Scalar delta = Scalar::delta();
        PDDiagram unknot;
        unknot.loops = 1;
        if (!(evalLink(unknot) == delta)) {
            ok = false;
            log << "unknot; ";
        }
        PDDiagram plusKink;
        plusKink.crossings = {{{2, 2, 1, 1}, +1}};
        if (!(evalLink(plusKink) == Scalar::t(1) * delta)) {
            ok = false;
            log << "+kink; ";
        }
        PDDiagram minusKink;
        minusKink.crossings = {{{2, 1, 1, 2}, -1}};
        if (!(evalLink(minusKink) == Scalar::t(-1) * delta)) {
            ok = false;
            log << "-kink; ";
        }
        for (int c = 1; c <= 4; ++c) {
            PDDiagram unlink;
            unlink.loops = c;
            if (!(evalLink(unlink) == delta.pow(c))) {
                ok = false;
                log << "unlink " << c << "; ";
            }
        }
        Scalar lhs = Scalar::t(1) * delta - Scalar::t(-1) * delta;
        if (!(lhs == Scalar::z() * delta * delta)) {
            ok = false;
            log << "skein consistency; ";
        }
        return {ok, ok ? "unknot, kinks, unlinks and skein consistency exact" : log.str()};
    });

    run("kl-hecke", 0, [&]() -> std::pair<bool, std::string> {
        for (int n : {2, 3}) {
            ObjectWord w = ObjectWord::ups(n);
            CanonicalBasis cb = canonicalBasis(w, w);
            HomContext& ctx = HomContext::get(w, w);
            auto oracle = kl::klBasis(n);
            auto permOf = [&](const Matching& mm) {
                kl::Perm p(n);
                for (auto [in, out] : mm.pairs) p[-in - 1] = out - 1;
                return p;
            };
            for (size_t t = 0; t < ctx.dim(); ++t) {
                kl::Perm pw = permOf(cb.order[t]);
                const auto& bw = oracle.at(pw);
                for (size_t s = 0; s < ctx.dim(); ++s) {
                    kl::Perm pu = permOf(cb.order[s]);
                    QLaurent expected;
                    if (auto it = bw.find(pu); it != bw.end()) expected = it->second;
                    if (!(cb.columns[t][s] == expected))
                        return {false, "S_" + std::to_string(n) + " mismatch"};
                }
            }
        }
        return {true, "canonical bases of End(u^2), End(u^3) equal the KL oracle"};
    });

    run("involution-embedding", 0, [&]() -> std::pair<bool, std::string> {
        std::ostringstream log;
        bool ok = true;
        int count = 0;
        for (const auto& [a, b] : balancedPairsUpTo(4)) {
            if (enumerateMatchings(a, b).empty()) continue;
            HomContext& ctx = HomContext::get(a, b);
            for (size_t i = 0; i < ctx.dim(); ++i) {
                Morphism el = Morphism::basisElement(ctx.basis()[i]);
                if (!(barMorphism(barMorphism(el)) == el)) {
                    ok = false;
                    log << "psi^2 break on Hom(" << a.str() << "," << b.str() << "); ";
                }
                ++count;
            }
        }
        for (auto [aw, bw] : std::vector<std::pair<std::string, std::string>>{{"u", "u"},
                                                                              {"uu", "uu"}}) {
            auto rep = embedAndCheck(ObjectWord::parse(aw), ObjectWord::parse(bw));
            if (!rep.pass) {
                ok = false;
                for (const auto& f : rep.failures) log << "embed " << aw << ": " << f << "; ";
            }
        }
        return {ok, ok ? "psi^2 = id on " + std::to_string(count) +
                             " basis elements; embeddings canonical"
                       : log.str()};
    });

    run("positivity", 0, [&]() -> std::pair<bool, std::string> {
        std::ostringstream log;
        bool ok = true;
        for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}}) {
            auto& lcb = bases[{m, n}];
            if (lcb.basis.order.empty()) lcb = qwb::qwbCanonical(m, n);
            auto rep = verifyCanonical(lcb.basis);
            log << "(" << m << "," << n << ") "
                << (rep.positive ? "positive" : "NOT positive") << "; ";
            if (!rep.positive) ok = false;
        }
        log << "[positivity read as: every transition coefficient lies in Z>=0[q^-1]]";
        return {ok, log.str()};
    });

    return results;
}

bool allPass(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

}  // namespace verify
}  // namespace skein
