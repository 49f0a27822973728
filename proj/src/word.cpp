#include "skein/word.hpp"

#include <stdexcept>

namespace skein {

ObjectWord ObjectWord::parse(const std::string& s) {
    ObjectWord w;
    w.letters.reserve(s.size());
    for (char c : s) {
        if (c == 'u' || c == 'U')
            w.letters.push_back(Ori::Up);
        else if (c == 'd' || c == 'D')
            w.letters.push_back(Ori::Down);
        else
            throw std::invalid_argument(std::string("bad word letter '") + c +
                                        "' (expected u or d)");
    }
    return w;
}

ObjectWord ObjectWord::ups(int m, int downs) {
    ObjectWord w;
    w.letters.assign(m, Ori::Up);
    w.letters.insert(w.letters.end(), downs, Ori::Down);
    return w;
}

int ObjectWord::countUp() const {
    int n = 0;
    for (Ori o : letters) n += o == Ori::Up;
    return n;
}

int ObjectWord::countDown() const { return static_cast<int>(letters.size()) - countUp(); }

bool ObjectWord::balancedWith(const ObjectWord& b) const {
    return countUp() - countDown() == b.countUp() - b.countDown();
}

ObjectWord ObjectWord::concat(const ObjectWord& o) const {
    ObjectWord w = *this;
    w.letters.insert(w.letters.end(), o.letters.begin(), o.letters.end());
    return w;
}

std::string ObjectWord::str() const {
    std::string s;
    s.reserve(letters.size());
    for (Ori o : letters) s.push_back(o == Ori::Up ? 'u' : 'd');
    return s;
}

}  // namespace skein
