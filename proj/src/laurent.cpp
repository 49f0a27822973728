#include "skein/laurent.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace skein {

IntLaurent IntLaurent::monomial(Int c, int32_t qexp, int32_t texp) {
    IntLaurent p;
    if (c != 0) p.terms_.push_back({Exp{qexp, texp}, std::move(c)});
    return p;
}

IntLaurent IntLaurent::z() {
    IntLaurent p;
    p.terms_ = {{Exp{-1, 0}, Int(-1)}, {Exp{1, 0}, Int(1)}};
    return p;
}

IntLaurent IntLaurent::tMinusTinv() {
    IntLaurent p;
    p.terms_ = {{Exp{0, -1}, Int(-1)}, {Exp{0, 1}, Int(1)}};
    return p;
}

bool IntLaurent::isOne() const {
    return terms_.size() == 1 && terms_[0].first == Exp{0, 0} && terms_[0].second == 1;
}

Int IntLaurent::coeff(int32_t qexp, int32_t texp) const {
    Exp e{qexp, texp};
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const auto& a, const Exp& b) { return a.first < b; });
    if (it != terms_.end() && it->first == e) return it->second;
    return 0;
}

IntLaurent IntLaurent::operator-() const {
    IntLaurent r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

IntLaurent operator+(const IntLaurent& a, const IntLaurent& b) {
    IntLaurent r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
        if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
            r.terms_.push_back(*ia++);
        } else if (ia == a.terms_.end() || ib->first < ia->first) {
            r.terms_.push_back(*ib++);
        } else {
            Int c = ia->second + ib->second;
            if (c != 0) r.terms_.push_back({ia->first, std::move(c)});
            ++ia;
            ++ib;
        }
    }
    return r;
}

IntLaurent operator-(const IntLaurent& a, const IntLaurent& b) { return a + (-b); }

IntLaurent operator*(const IntLaurent& a, const IntLaurent& b) {
    if (a.terms_.empty() || b.terms_.empty()) return {};
    auto scaleShift = [](const IntLaurent& p, const Exp& e, const Int& c) {
        IntLaurent r;
        r.terms_.reserve(p.terms_.size());
        for (const auto& [pe, pc] : p.terms_)
            r.terms_.push_back({Exp{pe.q + e.q, pe.t + e.t}, pc * c});
        return r;
    };
    if (a.terms_.size() == 1) return scaleShift(b, a.terms_[0].first, a.terms_[0].second);
    if (b.terms_.size() == 1) return scaleShift(a, b.terms_[0].first, b.terms_[0].second);
    std::map<Exp, Int> acc;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exp e{ea.q + eb.q, ea.t + eb.t};
            acc[e] += ca * cb;
        }
    IntLaurent r;
    r.terms_.reserve(acc.size());
    for (auto& [e, c] : acc)
        if (c != 0) r.terms_.push_back({e, std::move(c)});
    return r;
}

IntLaurent IntLaurent::shifted(int32_t dq, int32_t dt) const {
    IntLaurent r = *this;
    for (auto& [e, c] : r.terms_) {
        e.q += dq;
        e.t += dt;
    }
    return r;
}

IntLaurent IntLaurent::bar() const {
    IntLaurent r;
    r.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
        r.terms_.push_back({Exp{-it->first.q, -it->first.t}, it->second});
    // negating both exponents reverses lex order except when q ties break on t
    std::sort(r.terms_.begin(), r.terms_.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return r;
}

IntLaurent IntLaurent::atQOne() const {
    std::map<Exp, Int> acc;
    for (const auto& [e, c] : terms_) acc[Exp{0, e.t}] += c;
    std::vector<std::pair<Exp, Int>> ts(acc.begin(), acc.end());
    return fromTerms(std::move(ts));
}

bool IntLaurent::isTFree() const {
    for (const auto& [e, c] : terms_)
        if (e.t != 0) return false;
    return true;
}

IntLaurent IntLaurent::fromTerms(std::vector<std::pair<Exp, Int>> ts) {
    std::map<Exp, Int> acc;
    for (auto& [e, c] : ts) acc[e] += c;
    IntLaurent r;
    for (auto& [e, c] : acc)
        if (c != 0) r.terms_.push_back({e, std::move(c)});
    return r;
}

static void appendMonomial(std::ostringstream& os, const Int& c, int32_t qe, int32_t te,
                           bool first) {
    Int a = c < 0 ? Int(-c) : c;
    if (first) {
        if (c < 0) os << "-";
    } else {
        os << (c < 0 ? " - " : " + ");
    }
    bool hasVar = qe != 0 || te != 0;
    if (a != 1 || !hasVar) {
        os << a.str();
        if (hasVar) os << "*";
    }
    if (qe != 0) {
        os << "q";
        if (qe != 1) os << "^" << qe;
    }
    if (qe != 0 && te != 0) os << "*";
    if (te != 0) {
        os << "t";
        if (te != 1) os << "^" << te;
    }
}

std::string IntLaurent::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        appendMonomial(os, it->second, it->first.q, it->first.t, first);
        first = false;
    }
    return os.str();
}

// Exact division of genuine polynomials (all exponents >= 0), leading-term
// elimination in lex order. Returns nullopt as soon as a leading term fails
// to divide.
static std::optional<IntLaurent> polyExactDiv(const IntLaurent& a, const IntLaurent& b) {
    IntLaurent r = a;
    std::vector<std::pair<Exp, Int>> quot;
    const auto& bt = b.terms();
    const Exp lb = bt.back().first;
    const Int& cb = bt.back().second;
    while (!r.isZero()) {
        const auto& lr = r.terms().back();
        if (lr.first.q < lb.q || lr.first.t < lb.t) return std::nullopt;
        if (lr.second % cb != 0) return std::nullopt;
        Exp e{lr.first.q - lb.q, lr.first.t - lb.t};
        Int c = lr.second / cb;
        quot.push_back({e, c});
        r -= b.shifted(e.q, e.t) * IntLaurent::monomial(c);
    }
    return IntLaurent::fromTerms(std::move(quot));
}

std::optional<IntLaurent> exactDiv(const IntLaurent& a, const IntLaurent& b) {
    if (b.isZero()) throw std::invalid_argument("exactDiv: division by zero");
    if (a.isZero()) return IntLaurent::zero();
    auto mins = [](const IntLaurent& p) {
        int32_t mq = p.terms().front().first.q, mt = p.terms().front().first.t;
        for (const auto& [e, c] : p.terms()) {
            mq = std::min(mq, e.q);
            mt = std::min(mt, e.t);
        }
        return Exp{mq, mt};
    };
    Exp ma = mins(a), mb = mins(b);
    auto q = polyExactDiv(a.shifted(-ma.q, -ma.t), b.shifted(-mb.q, -mb.t));
    if (!q) return std::nullopt;
    return q->shifted(ma.q - mb.q, ma.t - mb.t);
}

std::pair<int, IntLaurent> stripZ(const IntLaurent& a) {
    if (a.isZero()) return {0, a};
    int k = 0;
    IntLaurent cur = a;
    const IntLaurent zz = IntLaurent::z();
    for (;;) {
        // quick reject: z | p forces p(q=1) = 0
        if (!cur.atQOne().isZero()) return {k, cur};
        auto d = exactDiv(cur, zz);
        if (!d) return {k, cur};
        cur = std::move(*d);
        ++k;
    }
}

QLaurent QLaurent::monomial(Int c, int32_t e) {
    QLaurent p;
    if (c != 0) p.terms_.push_back({e, std::move(c)});
    return p;
}

bool QLaurent::isOne() const {
    return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

Int QLaurent::coeff(int32_t e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const auto& a, int32_t b) { return a.first < b; });
    if (it != terms_.end() && it->first == e) return it->second;
    return 0;
}

int32_t QLaurent::minExp() const { return terms_.front().first; }
int32_t QLaurent::maxExp() const { return terms_.back().first; }

QLaurent QLaurent::operator-() const {
    QLaurent r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

QLaurent operator+(const QLaurent& a, const QLaurent& b) {
    QLaurent r;
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
        if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
            r.terms_.push_back(*ia++);
        } else if (ia == a.terms_.end() || ib->first < ia->first) {
            r.terms_.push_back(*ib++);
        } else {
            Int c = ia->second + ib->second;
            if (c != 0) r.terms_.push_back({ia->first, std::move(c)});
            ++ia;
            ++ib;
        }
    }
    return r;
}

QLaurent operator-(const QLaurent& a, const QLaurent& b) { return a + (-b); }

QLaurent operator*(const QLaurent& a, const QLaurent& b) {
    std::map<int32_t, Int> acc;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) acc[ea + eb] += ca * cb;
    std::vector<std::pair<int32_t, Int>> ts(acc.begin(), acc.end());
    return QLaurent::fromTerms(std::move(ts));
}

QLaurent QLaurent::bar() const {
    QLaurent r;
    r.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
        r.terms_.push_back({-it->first, it->second});
    return r;
}

bool QLaurent::allCoeffsNonnegative() const {
    for (const auto& [e, c] : terms_)
        if (c < 0) return false;
    return true;
}

IntLaurent QLaurent::toIntLaurent() const {
    std::vector<std::pair<Exp, Int>> ts;
    ts.reserve(terms_.size());
    for (const auto& [e, c] : terms_) ts.push_back({Exp{e, 0}, c});
    return IntLaurent::fromTerms(std::move(ts));
}

std::optional<QLaurent> QLaurent::fromIntLaurent(const IntLaurent& p) {
    if (!p.isTFree()) return std::nullopt;
    QLaurent r;
    for (const auto& [e, c] : p.terms()) r.terms_.push_back({e.q, c});
    return r;
}

QLaurent QLaurent::fromTerms(std::vector<std::pair<int32_t, Int>> ts) {
    std::map<int32_t, Int> acc;
    for (auto& [e, c] : ts) acc[e] += c;
    QLaurent r;
    for (auto& [e, c] : acc)
        if (c != 0) r.terms_.push_back({e, std::move(c)});
    return r;
}

std::string QLaurent::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        appendMonomial(os, it->second, it->first, 0, first);
        first = false;
    }
    return os.str();
}

QLaurent negativePartSolve(const QLaurent& g) {
    if (!(g.bar() == -g))
        throw std::invalid_argument("negativePartSolve: input not antisymmetric: " + g.str());
    std::vector<std::pair<int32_t, Int>> neg;
    for (const auto& [e, c] : g.terms())
        if (e < 0) neg.push_back({e, c});
    return QLaurent::fromTerms(std::move(neg));
}

}  // namespace skein
