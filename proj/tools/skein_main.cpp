#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "skein/canonical.hpp"
#include "skein/json_io.hpp"
#include "skein/qwb.hpp"
#include "skein/render.hpp"
#include "skein/verify.hpp"

using namespace skein;
using nlohmann::json;

namespace {

std::string readFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void writeOut(const std::string& outPath, const std::string& content) {
    if (outPath.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(outPath);
    if (!out) throw std::runtime_error("cannot write " + outPath);
    out << content;
}

std::string matchingDisplay(const Matching& m) {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (auto [in, out] : m.pairs) {
        if (!first) os << " ";
        first = false;
        os << in << ">" << out;
    }
    os << "]";
    return os.str();
}

json canonicalJson(const CanonicalBasis& cb, const std::vector<std::string>* labels) {
    json basis = json::array();
    for (size_t i = 0; i < cb.order.size(); ++i) {
        json row{{"matching", matchingPairsToJson(cb.order[i])}, {"length", cb.lengths[i]}};
        if (labels) row["label"] = (*labels)[i];
        basis.push_back(std::move(row));
    }
    const size_t n = cb.order.size();
    json transition = json::array();  // transition[row T'][column T]
    for (size_t s = 0; s < n; ++s) {
        json row = json::array();
        for (size_t t = 0; t < n; ++t) row.push_back(qLaurentToJson(cb.columns[t][s]));
        transition.push_back(std::move(row));
    }
    json elements = json::array();
    for (const auto& el : cb.elements) elements.push_back(morphismToJson(el));
    auto rep = verifyCanonical(cb);
    return json{{"source", cb.source.str()},
                {"target", cb.target.str()},
                {"basis", std::move(basis)},
                {"transition", std::move(transition)},
                {"elements", std::move(elements)},
                {"positivity",
                 json{{"observed", rep.positive},
                      {"meaning", "every transition coefficient lies in Z>=0[q^-1]"}}}};
}

std::string canonicalText(const CanonicalBasis& cb, const std::vector<std::string>* labels) {
    std::ostringstream os;
    os << "Hom(" << cb.source.str() << ", " << cb.target.str() << "): " << cb.order.size()
       << " canonical elements\n";
    auto name = [&](size_t i) {
        return labels ? (*labels)[i] : matchingDisplay(cb.order[i]);
    };
    for (size_t t = 0; t < cb.order.size(); ++t) {
        os << "C[" << name(t) << "] =";
        bool first = true;
        for (size_t s = 0; s < cb.order.size(); ++s) {
            const QLaurent& y = cb.columns[t][s];
            if (y.isZero()) continue;
            os << (first ? " " : " + ");
            first = false;
            os << "(" << y.str() << ")*[" << name(s) << "]";
        }
        os << "\n";
    }
    auto rep = verifyCanonical(cb);
    os << "positivity (all transition coefficients in Z>=0[q^-1]): "
       << (rep.positive ? "observed" : "NOT observed") << "\n";
    return os.str();
}

std::string canonicalTikz(const CanonicalBasis& cb) {
    std::ostringstream os;
    for (size_t i = 0; i < cb.order.size(); ++i) {
        os << "% basis element " << i << ", length " << cb.lengths[i] << "\n";
        os << tikzMatching(cb.order[i]);
    }
    return os.str();
}

int checkedCanonicalOutput(const CanonicalBasis& cb, const std::vector<std::string>* labels,
                           const std::string& format, const std::string& outPath) {
    if (format == "json") {
        writeOut(outPath, canonicalJson(cb, labels).dump(2) + "\n");
    } else if (format == "tikz") {
        writeOut(outPath, canonicalTikz(cb));
    } else {
        writeOut(outPath, canonicalText(cb, labels));
    }
    auto rep = verifyCanonical(cb);
    if (!rep.pass()) {
        for (const auto& f : rep.failures) std::cerr << "canonical check failed: " << f << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact engine for oriented skein category morphism spaces"};
    app.require_subcommand(1);

    std::string aWord, bWord, format = "text", outPath, file, dataDir = "data", only;
    int m = 2, n = 1, index = -1;

    auto* cBasis = app.add_subcommand("basis", "list the standard basis matchings of Hom(a, b)");
    cBasis->add_option("-a", aWord, "source word over {u, d}")->required();
    cBasis->add_option("-b", bWord, "target word over {u, d}")->required();
    cBasis->add_option("--format", format, "text|json");

    auto* cCanonical = app.add_subcommand("canonical", "canonical basis of Hom(a, b)");
    cCanonical->add_option("-a", aWord, "source word")->required();
    cCanonical->add_option("-b", bWord, "target word")->required();
    cCanonical->add_option("--format", format, "json|text|tikz");
    cCanonical->add_option("-o,--output", outPath, "write to file instead of stdout");

    auto* cExpand = app.add_subcommand("expand", "expand a sliced diagram in the standard basis");
    cExpand->add_option("-f,--file", file, "sliced diagram text file")->required();
    cExpand->add_option("--format", format, "text|json");

    auto* cHomfly = app.add_subcommand("homfly", "evaluate a closed PD diagram");
    cHomfly->add_option("file", file, "PD text file")->required();

    auto* cQwb = app.add_subcommand("qwb", "quantized walled Brauer algebra");
    cQwb->require_subcommand(1);
    auto* cQwbCanonical = cQwb->add_subcommand("canonical", "labeled canonical basis");
    cQwbCanonical->add_option("-m", m, "number of up strands")->required();
    cQwbCanonical->add_option("-n", n, "number of down strands")->required();
    cQwbCanonical->add_option("--format", format, "json|text|tikz");
    cQwbCanonical->add_option("-o,--output", outPath, "write to file instead of stdout");
    auto* cQwbVerify = cQwb->add_subcommand("verify", "run the defining relation suite");
    cQwbVerify->add_option("-m", m, "number of up strands")->required();
    cQwbVerify->add_option("-n", n, "number of down strands")->required();

    auto* cVerify = app.add_subcommand("verify-paper", "run the full acceptance suite");
    cVerify->add_option("--only", only, "run only checks whose id starts with this");
    cVerify->add_option("--data-dir", dataDir, "directory holding golden/ files");
    cVerify->add_option("--format", format, "text|json");

    auto* cRender = app.add_subcommand("render", "TikZ pictures of basis matchings");
    cRender->add_option("-a", aWord, "source word")->required();
    cRender->add_option("-b", bWord, "target word")->required();
    cRender->add_option("--index", index, "render only this basis element");
    cRender->add_option("-o,--output", outPath, "write to file instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cBasis->parsed()) {
            auto a = ObjectWord::parse(aWord), b = ObjectWord::parse(bWord);
            auto ms = enumerateMatchings(a, b);
            if (format == "json") {
                json arr = json::array();
                for (const auto& mm : ms)
                    arr.push_back({{"matching", matchingPairsToJson(mm)},
                                   {"length", mm.crossingNumber()}});
                std::cout << json{{"source", a.str()}, {"target", b.str()}, {"basis", arr}}.dump(2)
                          << "\n";
            } else {
                std::cout << "Hom(" << a.str() << ", " << b.str() << "): " << ms.size()
                          << " matchings\n";
                for (size_t i = 0; i < ms.size(); ++i)
                    std::cout << i << "  l=" << ms[i].crossingNumber() << "  "
                              << matchingDisplay(ms[i]) << "\n";
            }
            return 0;
        }
        if (cCanonical->parsed()) {
            auto a = ObjectWord::parse(aWord), b = ObjectWord::parse(bWord);
            if (enumerateMatchings(a, b).empty())
                throw std::invalid_argument("zero Hom space: Hom(" + a.str() + ", " + b.str() +
                                            ")");
            CanonicalBasis cb = canonicalBasis(a, b);
            return checkedCanonicalOutput(cb, nullptr, format, outPath);
        }
        if (cExpand->parsed()) {
            SlicedDiagram d = SlicedDiagram::parse(readFile(file));
            Morphism x = expandDiagram(d);
            if (format == "json")
                std::cout << morphismToJson(x).dump(2) << "\n";
            else
                std::cout << x.str() << "\n";
            return 0;
        }
        if (cHomfly->parsed()) {
            PDDiagram d = PDDiagram::parse(readFile(file));
            std::cout << evalLink(d).str() << "\n";
            return 0;
        }
        if (cQwbCanonical->parsed()) {
            auto lcb = qwb::qwbCanonical(m, n);
            return checkedCanonicalOutput(lcb.basis, &lcb.labels, format, outPath);
        }
        if (cQwbVerify->parsed()) {
            auto rep = qwb::relationSuite(m, n);
            std::cout << "relation suite for qWB(" << m << ", " << n
                      << ") [quadratic taken as (H - q)(H + q^-1) = 0]\n";
            for (const auto& c : rep.checks) {
                std::cout << (c.applicable ? (c.pass ? "[PASS] " : "[FAIL] ") : "[SKIP] ")
                          << c.name << "\n";
            }
            return rep.pass() ? 0 : 1;
        }
        if (cVerify->parsed()) {
            verify::Options opts;
            opts.dataDir = dataDir;
            opts.only = only;
            auto results = verify::runAcceptance(opts);
            if (format == "json") {
                json arr = json::array();
                for (const auto& r : results)
                    arr.push_back({{"id", r.id},
                                   {"pass", r.pass},
                                   {"seconds", r.seconds},
                                   {"detail", r.detail}});
                std::cout << json{{"results", arr}, {"pass", verify::allPass(results)}}.dump(2)
                          << "\n";
            } else {
                for (const auto& r : results) {
                    std::ostringstream t;
                    t.precision(2);
                    t << std::fixed << r.seconds;
                    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << " (" << t.str()
                              << "s) " << r.detail << "\n";
                }
            }
            return verify::allPass(results) ? 0 : 1;
        }
        if (cRender->parsed()) {
            auto a = ObjectWord::parse(aWord), b = ObjectWord::parse(bWord);
            auto ms = enumerateMatchings(a, b);
            std::ostringstream os;
            for (size_t i = 0; i < ms.size(); ++i) {
                if (index >= 0 && static_cast<size_t>(index) != i) continue;
                os << "% matching " << i << "\n" << tikzMatching(ms[i]);
            }
            writeOut(outPath, os.str());
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
