#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace skein {

enum class Ori : uint8_t { Up, Down };

inline Ori flip(Ori o) { return o == Ori::Up ? Ori::Down : Ori::Up; }

// A word in the two-letter alphabet {u, d}, stored left to right.
struct ObjectWord {
    std::vector<Ori> letters;

    ObjectWord() = default;
    explicit ObjectWord(std::vector<Ori> ls) : letters(std::move(ls)) {}

    static ObjectWord parse(const std::string& s);  // throws on bad letters
    static ObjectWord ups(int m, int downs = 0);    // u^m d^downs

    size_t size() const { return letters.size(); }
    Ori at(size_t i) const { return letters[i]; }  // 0-based
    int countUp() const;
    int countDown() const;

    // Hom(a, b) can be nonzero only for balanced pairs.
    bool balancedWith(const ObjectWord& b) const;

    ObjectWord concat(const ObjectWord& o) const;

    std::string str() const;
    auto operator<=>(const ObjectWord&) const = default;
};

}  // namespace skein
