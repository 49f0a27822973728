#include "skein/homspace.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>

#include "skein/json_io.hpp"

namespace skein {

Morphism Morphism::basisElement(const Matching& m, Scalar c) {
    Morphism x;
    x.source = m.source;
    x.target = m.target;
    if (!c.isZero()) x.coeffs[m] = std::move(c);
    return x;
}

Scalar Morphism::coeff(const Matching& m) const {
    auto it = coeffs.find(m);
    return it == coeffs.end() ? Scalar::zero() : it->second;
}

void Morphism::addTerm(const Matching& m, const Scalar& c) {
    if (c.isZero()) return;
    auto it = coeffs.find(m);
    if (it == coeffs.end()) {
        coeffs.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.isZero()) coeffs.erase(it);
    }
}

Morphism operator+(const Morphism& x, const Morphism& y) {
    if (x.source != y.source || x.target != y.target)
        throw std::invalid_argument("Morphism +: mismatched Hom spaces");
    Morphism r = x;
    for (const auto& [m, c] : y.coeffs) r.addTerm(m, c);
    return r;
}

Morphism operator-(const Morphism& x, const Morphism& y) { return x + (-Scalar::one()) * y; }

Morphism operator*(const Scalar& c, const Morphism& x) {
    Morphism r;
    r.source = x.source;
    r.target = x.target;
    if (c.isZero()) return r;
    for (const auto& [m, v] : x.coeffs) {
        Scalar p = c * v;
        if (!p.isZero()) r.coeffs[m] = std::move(p);
    }
    return r;
}

bool Morphism::operator==(const Morphism& o) const {
    return source == o.source && target == o.target && coeffs == o.coeffs;
}

std::string Morphism::str() const {
    if (coeffs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : coeffs) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*[";
        bool fp = true;
        for (auto [in, out] : m.pairs) {
            if (!fp) os << " ";
            fp = false;
            os << in << ">" << out;
        }
        os << "]";
    }
    return os.str();
}

// ---------------------------------------------------------------------------

struct HomContext::Solver {
    size_t n = 0;
    std::vector<int> rowScale;                    // z-power used to clear each row
    std::vector<std::vector<IntLaurent>> upper;   // eliminated matrix (upper triangle)
    // elimination history for replaying row ops on right-hand columns
    std::vector<int> pivotRow;                    // step k swapped with this row
    std::vector<std::vector<IntLaurent>> colFac;  // colFac[k][i-k-1] = M[i][k] at step k
    std::vector<IntLaurent> pivots;               // M[k][k] at step k, after swap
};

HomContext::HomContext(ObjectWord a, ObjectWord b) : a_(std::move(a)), b_(std::move(b)) {
    basis_ = enumerateMatchings(a_, b_);
    dual_ = enumerateMatchings(b_, a_);
    lifts_.reserve(basis_.size());
    lengths_.reserve(basis_.size());
    for (size_t i = 0; i < basis_.size(); ++i) {
        lifts_.push_back(positiveLift(basis_[i]));
        lengths_.push_back(basis_[i].crossingNumber());
        index_[basis_[i]] = static_cast<int>(i);
    }
    dualLifts_.reserve(dual_.size());
    for (const auto& m : dual_) dualLifts_.push_back(positiveLift(m));
}

HomContext& HomContext::get(const ObjectWord& a, const ObjectWord& b) {
    static std::mutex mu;
    static std::map<std::pair<ObjectWord, ObjectWord>, std::unique_ptr<HomContext>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(a, b);
    auto it = registry.find(key);
    if (it == registry.end())
        it = registry.emplace(key, std::unique_ptr<HomContext>(new HomContext(a, b))).first;
    return *it->second;
}

int HomContext::indexOf(const Matching& m) const {
    auto it = index_.find(m);
    return it == index_.end() ? -1 : it->second;
}

const std::vector<std::vector<Scalar>>& HomContext::gram() {
    if (gram_) return *gram_;
    const char* cacheDir = std::getenv("SKEIN_CACHE_DIR");
    std::filesystem::path cachePath;
    if (cacheDir && *cacheDir) {
        cachePath = std::filesystem::path(cacheDir) /
                    ("gram_" + (a_.size() ? a_.str() : std::string("0")) + "_" +
                     (b_.size() ? b_.str() : std::string("0")) + ".json");
        if (auto loaded = loadGramCache(cachePath, a_, b_, dual_.size())) {
            gram_ = std::move(*loaded);
            return *gram_;
        }
    }
    std::vector<std::vector<Scalar>> g(dual_.size(), std::vector<Scalar>(basis_.size()));
    for (size_t j = 0; j < dual_.size(); ++j)
        for (size_t i = 0; i < basis_.size(); ++i)
            g[j][i] = session_.eval(closure(compose(dualLifts_[j], lifts_[i])));
    gram_ = std::move(g);
    if (!cachePath.empty()) saveGramCache(cachePath, a_, b_, *gram_);
    return *gram_;
}

std::vector<Scalar> HomContext::pairingColumn(const SlicedDiagram& d) {
    std::vector<Scalar> p(dual_.size());
    for (size_t j = 0; j < dual_.size(); ++j)
        p[j] = session_.eval(closure(compose(dualLifts_[j], d)));
    return p;
}

namespace {

IntLaurent bareissDiv(const IntLaurent& num, const IntLaurent& den) {
    auto q = exactDiv(num, den);
    if (!q) throw std::logic_error("fraction-free elimination: inexact division");
    return std::move(*q);
}

Scalar divScalarByLaurent(const Scalar& num, const IntLaurent& den, const char* what) {
    auto q = num.dividedBy(Scalar::fromLaurent(den));
    if (!q)
        throw NonIntegralExpansionError(std::string("non-integral expansion during ") + what);
    return std::move(*q);
}

}  // namespace

void HomContext::ensureSolver() {
    if (solver_) return;
    const auto& g = gram();
    const size_t n = basis_.size();
    if (n == 0) throw std::invalid_argument("expand: zero Hom space");
    auto sv = std::make_shared<Solver>();
    sv->n = n;
    sv->rowScale.resize(n);
    std::vector<std::vector<IntLaurent>> m(n, std::vector<IntLaurent>(n));
    const IntLaurent zz = IntLaurent::z();
    for (size_t j = 0; j < n; ++j) {
        int K = 0;
        for (size_t i = 0; i < n; ++i) K = std::max(K, g[j][i].zpow());
        sv->rowScale[j] = K;
        for (size_t i = 0; i < n; ++i) {
            IntLaurent v = g[j][i].num();
            for (int s = g[j][i].zpow(); s < K; ++s) v *= zz;
            m[j][i] = std::move(v);
        }
    }
    sv->pivotRow.resize(n);
    sv->colFac.resize(n);
    sv->pivots.resize(n);
    IntLaurent prev = IntLaurent::one();
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        while (piv < n && m[piv][k].isZero()) ++piv;
        if (piv == n)
            throw DegeneratePairingError("degenerate pairing on Hom(" + a_.str() + ", " +
                                         b_.str() + ")");
        if (piv != k) std::swap(m[piv], m[k]);
        sv->pivotRow[k] = static_cast<int>(piv);
        sv->pivots[k] = m[k][k];
        sv->colFac[k].reserve(n - k - 1);
        for (size_t i = k + 1; i < n; ++i) {
            sv->colFac[k].push_back(m[i][k]);
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = bareissDiv(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
            m[i][k] = IntLaurent::zero();
        }
        prev = m[k][k];
    }
    sv->upper = std::move(m);
    solver_ = std::move(sv);
}

std::vector<std::vector<Scalar>> HomContext::solve(
    const std::vector<std::vector<Scalar>>& rhsCols) {
    ensureSolver();
    const Solver& sv = *solver_;
    const size_t n = sv.n;
    const IntLaurent zz = IntLaurent::z();
    std::vector<std::vector<Scalar>> out;
    out.reserve(rhsCols.size());
    for (const auto& col : rhsCols) {
        if (col.size() != n) throw std::invalid_argument("solve: bad RHS length");
        // uniform extra z power so each row clears to a Laurent polynomial
        int extra = 0;
        for (size_t j = 0; j < n; ++j)
            extra = std::max(extra, col[j].zpow() - sv.rowScale[j]);
        std::vector<IntLaurent> r(n);
        for (size_t j = 0; j < n; ++j) {
            IntLaurent v = col[j].num();
            for (int s = col[j].zpow(); s < sv.rowScale[j] + extra; ++s) v *= zz;
            r[j] = std::move(v);
        }
        // replay forward elimination
        IntLaurent prev = IntLaurent::one();
        for (size_t k = 0; k < n; ++k) {
            if (sv.pivotRow[k] != static_cast<int>(k))
                std::swap(r[k], r[sv.pivotRow[k]]);
            for (size_t i = k + 1; i < n; ++i)
                r[i] = bareissDiv(sv.pivots[k] * r[i] - sv.colFac[k][i - k - 1] * r[k], prev);
            prev = sv.pivots[k];
        }
        // back substitution over Scalars
        std::vector<Scalar> x(n);
        for (size_t jj = n; jj-- > 0;) {
            Scalar acc = Scalar::fromLaurent(r[jj]);
            for (size_t kk = jj + 1; kk < n; ++kk)
                acc -= Scalar::fromLaurent(sv.upper[jj][kk]) * x[kk];
            x[jj] = divScalarByLaurent(acc, sv.upper[jj][jj], "back substitution");
        }
        if (extra > 0) {
            for (auto& v : x) {
                auto q = v.dividedBy(Scalar::fromLaurent(zz).pow(extra));
                if (!q) throw NonIntegralExpansionError("non-integral expansion: z rescale");
                v = std::move(*q);
            }
        }
        out.push_back(std::move(x));
    }
    return out;
}

Morphism HomContext::expand(const SlicedDiagram& d) {
    d.validate();
    if (d.bottom != a_ || d.top != b_)
        throw std::invalid_argument("expand: diagram boundary (" + d.bottom.str() + ", " +
                                    d.top.str() + ") does not match Hom(" + a_.str() + ", " +
                                    b_.str() + ")");
    if (basis_.empty()) throw std::invalid_argument("expand: zero Hom space");
    auto sol = solve({pairingColumn(d)});
    Morphism x;
    x.source = a_;
    x.target = b_;
    for (size_t i = 0; i < basis_.size(); ++i)
        if (!sol[0][i].isZero()) x.coeffs[basis_[i]] = sol[0][i];
    return x;
}

const std::vector<std::vector<QLaurent>>& HomContext::barMatrix() {
    if (barMatrix_) return *barMatrix_;
    const size_t n = basis_.size();
    if (n == 0) throw std::invalid_argument("barMatrix: zero Hom space");
    std::vector<std::vector<Scalar>> rhs;
    rhs.reserve(n);
    for (size_t t = 0; t < n; ++t) rhs.push_back(pairingColumn(flipCrossings(lifts_[t])));
    auto sols = solve(rhs);
    std::vector<std::vector<QLaurent>> bm(n, std::vector<QLaurent>(n));
    for (size_t t = 0; t < n; ++t) {
        for (size_t s = 0; s < n; ++s) {
            const Scalar& v = sols[t][s];
            auto qv = v.toQLaurent();
            if (!qv)
                throw InvariantViolationError(
                    "bar matrix entry not in Z[q^{+-1}] at (" + std::to_string(s) + ", " +
                    std::to_string(t) + "): " + v.str());
            // strict unitriangularity for the length filtration
            if (s == t) {
                if (!qv->isOne())
                    throw InvariantViolationError("bar matrix diagonal not 1 at " +
                                                  std::to_string(t));
            } else if (!qv->isZero() && lengths_[s] >= lengths_[t]) {
                throw InvariantViolationError("bar matrix not length-triangular at (" +
                                              std::to_string(s) + ", " + std::to_string(t) +
                                              ")");
            }
            bm[t][s] = std::move(*qv);
        }
    }
    // stored column-major: barMatrix()[T][T'] = coefficient of T' in psi(T)
    barMatrix_ = std::move(bm);
    return *barMatrix_;
}

const Morphism& HomContext::product(size_t i, size_t j) {
    auto key = std::make_pair(i, j);
    auto it = products_.find(key);
    if (it != products_.end()) return it->second;
    Morphism p = expand(compose(lifts_[i], lifts_[j]));
    return products_.emplace(key, std::move(p)).first->second;
}

// ---------------------------------------------------------------------------

Morphism barMorphism(const Morphism& x) {
    HomContext& ctx = HomContext::get(x.source, x.target);
    const auto& bm = ctx.barMatrix();
    Morphism r = Morphism::zero(x.source, x.target);
    for (const auto& [m, c] : x.coeffs) {
        int t = ctx.indexOf(m);
        if (t < 0) throw std::invalid_argument("barMorphism: foreign matching");
        Scalar bc = c.bar();
        for (size_t s = 0; s < ctx.dim(); ++s) {
            const QLaurent& e = bm[t][s];
            if (!e.isZero()) r.addTerm(ctx.basis()[s], bc * Scalar::fromQ(e));
        }
    }
    return r;
}

Morphism multiplyMorphisms(const Morphism& x, const Morphism& y) {
    if (!(x.source == x.target && y.source == y.target && x.source == y.source))
        throw std::invalid_argument("multiplyMorphisms: need one endomorphism space");
    HomContext& ctx = HomContext::get(x.source, x.target);
    Morphism r = Morphism::zero(x.source, x.target);
    for (const auto& [mS, cS] : x.coeffs) {
        int i = ctx.indexOf(mS);
        for (const auto& [mT, cT] : y.coeffs) {
            int j = ctx.indexOf(mT);
            const Morphism& p = ctx.product(static_cast<size_t>(i), static_cast<size_t>(j));
            Scalar c = cS * cT;
            for (const auto& [m, v] : p.coeffs) r.addTerm(m, c * v);
        }
    }
    return r;
}

Morphism expandDiagram(const SlicedDiagram& d) {
    return HomContext::get(d.bottom, d.top).expand(d);
}

}  // namespace skein
