#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include <json.hpp>

#include "skein/laurent.hpp"
#include "skein/matching.hpp"
#include "skein/scalar.hpp"

namespace skein {

struct Morphism;

nlohmann::json intLaurentToJson(const IntLaurent& p);
IntLaurent intLaurentFromJson(const nlohmann::json& j);

nlohmann::json qLaurentToJson(const QLaurent& p);
QLaurent qLaurentFromJson(const nlohmann::json& j);

nlohmann::json scalarToJson(const Scalar& s);
Scalar scalarFromJson(const nlohmann::json& j);

nlohmann::json matchingPairsToJson(const Matching& m);
Matching matchingFromJson(const nlohmann::json& pairs, const ObjectWord& a, const ObjectWord& b);

nlohmann::json morphismToJson(const Morphism& x);
Morphism morphismFromJson(const nlohmann::json& j);

// Gram matrices persisted under SKEIN_CACHE_DIR, keyed by the word pair and
// a format-version tag.
std::optional<std::vector<std::vector<Scalar>>> loadGramCache(
    const std::filesystem::path& path, const ObjectWord& a, const ObjectWord& b, size_t rows);
void saveGramCache(const std::filesystem::path& path, const ObjectWord& a, const ObjectWord& b,
                   const std::vector<std::vector<Scalar>>& gram);

}  // namespace skein
