#include "skein/json_io.hpp"

#include <fstream>

#include "skein/homspace.hpp"

namespace skein {

using nlohmann::json;

static json intToJson(const Int& c) {
    if (c >= std::numeric_limits<int64_t>::min() && c <= std::numeric_limits<int64_t>::max())
        return static_cast<int64_t>(c);
    return c.str();
}

static Int intFromJson(const json& j) {
    if (j.is_string()) return Int(j.get<std::string>());
    return Int(j.get<int64_t>());
}

json intLaurentToJson(const IntLaurent& p) {
    json arr = json::array();
    for (const auto& [e, c] : p.terms()) arr.push_back({e.q, e.t, intToJson(c)});
    return arr;
}

IntLaurent intLaurentFromJson(const json& j) {
    std::vector<std::pair<Exp, Int>> ts;
    for (const auto& row : j)
        ts.push_back({Exp{row.at(0).get<int32_t>(), row.at(1).get<int32_t>()},
                      intFromJson(row.at(2))});
    return IntLaurent::fromTerms(std::move(ts));
}

json qLaurentToJson(const QLaurent& p) {
    json arr = json::array();
    for (const auto& [e, c] : p.terms()) arr.push_back({e, intToJson(c)});
    return arr;
}

QLaurent qLaurentFromJson(const json& j) {
    std::vector<std::pair<int32_t, Int>> ts;
    for (const auto& row : j) ts.push_back({row.at(0).get<int32_t>(), intFromJson(row.at(1))});
    return QLaurent::fromTerms(std::move(ts));
}

json scalarToJson(const Scalar& s) {
    return json{{"num", intLaurentToJson(s.num())}, {"zpow", s.zpow()}};
}

Scalar scalarFromJson(const json& j) {
    return Scalar::reduce(intLaurentFromJson(j.at("num")), j.at("zpow").get<int>());
}

json matchingPairsToJson(const Matching& m) {
    json arr = json::array();
    for (auto [in, out] : m.pairs) arr.push_back({in, out});
    return arr;
}

Matching matchingFromJson(const json& pairs, const ObjectWord& a, const ObjectWord& b) {
    Matching m;
    m.source = a;
    m.target = b;
    for (const auto& row : pairs) m.pairs.push_back({row.at(0).get<int>(), row.at(1).get<int>()});
    sortPairs(m.pairs);
    m.validate();
    return m;
}

json morphismToJson(const Morphism& x) {
    json terms = json::array();
    for (const auto& [m, c] : x.coeffs)
        terms.push_back({{"matching", matchingPairsToJson(m)}, {"coeff", scalarToJson(c)}});
    return json{{"source", x.source.str()}, {"target", x.target.str()}, {"terms", terms}};
}

Morphism morphismFromJson(const json& j) {
    Morphism x;
    x.source = ObjectWord::parse(j.at("source").get<std::string>());
    x.target = ObjectWord::parse(j.at("target").get<std::string>());
    for (const auto& term : j.at("terms")) {
        Matching m = matchingFromJson(term.at("matching"), x.source, x.target);
        Scalar c = scalarFromJson(term.at("coeff"));
        if (!c.isZero()) x.coeffs[m] = c;
    }
    return x;
}

static constexpr const char* kGramVersion = "skein-gram-v1";

std::optional<std::vector<std::vector<Scalar>>> loadGramCache(const std::filesystem::path& path,
                                                              const ObjectWord& a,
                                                              const ObjectWord& b, size_t rows) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    json j;
    try {
        in >> j;
        if (j.at("version") != kGramVersion) return std::nullopt;
        if (j.at("a") != a.str() || j.at("b") != b.str()) return std::nullopt;
        const auto& gj = j.at("gram");
        if (gj.size() != rows) return std::nullopt;
        std::vector<std::vector<Scalar>> g;
        g.reserve(rows);
        for (const auto& rowj : gj) {
            std::vector<Scalar> row;
            row.reserve(rowj.size());
            for (const auto& e : rowj) row.push_back(scalarFromJson(e));
            g.push_back(std::move(row));
        }
        return g;
    } catch (...) {
        return std::nullopt;  // a stale or foreign cache file is simply ignored
    }
}

void saveGramCache(const std::filesystem::path& path, const ObjectWord& a, const ObjectWord& b,
                   const std::vector<std::vector<Scalar>>& gram) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    json gj = json::array();
    for (const auto& row : gram) {
        json rowj = json::array();
        for (const auto& e : row) rowj.push_back(scalarToJson(e));
        gj.push_back(std::move(rowj));
    }
    json j{{"version", kGramVersion}, {"a", a.str()}, {"b", b.str()}, {"gram", std::move(gj)}};
    std::ofstream out(path);
    if (out) out << j.dump();
}

}  // namespace skein
