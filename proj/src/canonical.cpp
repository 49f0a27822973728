#include "skein/canonical.hpp"

#include <sstream>

namespace skein {

namespace {

// psi on a coefficient column: psi(sum c_u T_u) = sum bar(c_u) psi(T_u).
std::vector<QLaurent> applyBar(const std::vector<std::vector<QLaurent>>& bm,
                               const std::vector<QLaurent>& c) {
    const size_t n = c.size();
    std::vector<QLaurent> out(n);
    for (size_t u = 0; u < n; ++u) {
        if (c[u].isZero()) continue;
        QLaurent b = c[u].bar();
        for (size_t s = 0; s < n; ++s) {
            if (bm[u][s].isZero()) continue;
            out[s] += b * bm[u][s];
        }
    }
    return out;
}

}  // namespace

CanonicalBasis canonicalBasis(const ObjectWord& a, const ObjectWord& b) {
    HomContext& ctx = HomContext::get(a, b);
    if (ctx.dim() == 0) throw std::invalid_argument("canonicalBasis: zero Hom space");
    const auto& bm = ctx.barMatrix();
    const size_t n = ctx.dim();

    CanonicalBasis cb;
    cb.source = a;
    cb.target = b;
    cb.order = ctx.basis();
    cb.lengths.reserve(n);
    for (size_t i = 0; i < n; ++i) cb.lengths.push_back(ctx.length(i));

    cb.columns.assign(n, {});
    for (size_t t = 0; t < n; ++t) {
        std::vector<QLaurent> c(n);
        c[t] = QLaurent::one();
        for (;;) {
            std::vector<QLaurent> d = applyBar(bm, c);
            for (size_t s = 0; s < n; ++s) d[s] -= c[s];
            // basis order ascends in length, so the last nonzero entry is
            // length-maximal
            size_t s = n;
            for (size_t k = n; k-- > 0;) {
                if (!d[k].isZero()) {
                    s = k;
                    break;
                }
            }
            if (s == n) break;
            if (s >= t)
                throw InvariantViolationError(
                    "canonicalBasis: correction at or above the diagonal (basis " +
                    std::to_string(s) + " for " + std::to_string(t) + ")");
            QLaurent r;
            try {
                r = negativePartSolve(d[s]);
            } catch (const std::invalid_argument& e) {
                throw InvariantViolationError(std::string("canonicalBasis: ") + e.what());
            }
            c[s] += r;
        }
        cb.columns[t] = std::move(c);
    }

    cb.elements.reserve(n);
    for (size_t t = 0; t < n; ++t) {
        Morphism el = Morphism::zero(a, b);
        for (size_t s = 0; s < n; ++s)
            if (!cb.columns[t][s].isZero())
                el.addTerm(cb.order[s], Scalar::fromQ(cb.columns[t][s]));
        cb.elements.push_back(std::move(el));
    }
    return cb;
}

CanonicalReport verifyCanonical(CanonicalBasis cb) {
    CanonicalReport rep;
    const size_t n = cb.order.size();
    auto fail = [&](bool& flag, const std::string& msg) {
        flag = false;
        rep.failures.push_back(msg);
    };
    for (size_t t = 0; t < n; ++t) {
        for (size_t s = 0; s < n; ++s) {
            const QLaurent& y = cb.columns[t][s];
            if (s == t) {
                if (!y.isOne())
                    fail(rep.unitDiagonal, "diagonal entry at basis " + std::to_string(t) +
                                               " is " + y.str());
                continue;
            }
            if (y.isZero()) continue;
            if (cb.lengths[s] >= cb.lengths[t])
                fail(rep.lengthTriangular,
                     "entry (" + std::to_string(s) + ", " + std::to_string(t) +
                         ") breaks strict length triangularity");
            if (y.maxExp() > -1)
                fail(rep.offDiagNegative, "entry (" + std::to_string(s) + ", " +
                                              std::to_string(t) + ") = " + y.str() +
                                              " is not in q^-1 Z[q^-1]");
            if (!y.allCoeffsNonnegative()) rep.positive = false;
        }
    }
    for (size_t t = 0; t < n && t < cb.elements.size(); ++t) {
        const Morphism& el = cb.elements[t];
        for (const auto& [m, c] : el.coeffs) {
            if (!c.toQLaurent())
                fail(rep.tFree, "element " + std::to_string(t) +
                                    " has a coefficient with t or z content: " + c.str());
        }
        Morphism expected = Morphism::zero(cb.source, cb.target);
        for (size_t s = 0; s < n; ++s)
            if (!cb.columns[t][s].isZero())
                expected.addTerm(cb.order[s], Scalar::fromQ(cb.columns[t][s]));
        if (!(expected == el))
            fail(rep.elementsMatchTransition,
                 "element " + std::to_string(t) + " differs from its transition column");
        if (!(barMorphism(el) == el))
            fail(rep.psiFixed, "element " + std::to_string(t) + " is not bar-invariant");
    }
    return rep;
}

EmbedReport embedAndCheck(const ObjectWord& a, const ObjectWord& b) {
    EmbedReport rep;
    CanonicalBasis cb1 = canonicalBasis(a, b);
    ObjectWord ext = a.concat(ObjectWord::parse("ud"));
    CanonicalBasis cb2 = canonicalBasis(ext, b);
    HomContext& ctx1 = HomContext::get(a, b);
    HomContext& ctx2 = HomContext::get(ext, b);

    SlicedDiagram capDiag;
    capDiag.bottom = ObjectWord::parse("ud");
    capDiag.top = ObjectWord{};
    capDiag.layers = {{0, Generator::cap(Ori::Up, Ori::Down)}};

    const size_t n = cb1.order.size();
    for (size_t t = 0; t < n; ++t) {
        Morphism image = Morphism::zero(ext, b);
        for (size_t s = 0; s < n; ++s) {
            if (cb1.columns[t][s].isZero()) continue;
            Morphism part = ctx2.expand(tensorD(ctx1.lift(s), capDiag));
            image = image + Scalar::fromQ(cb1.columns[t][s]) * part;
        }
        auto tr = traceDiagram(tensorD(ctx1.lift(t), capDiag));
        if (tr.loops != 0) {
            rep.pass = false;
            rep.failures.push_back("embedding of basis " + std::to_string(t) + " formed a loop");
            continue;
        }
        int idx = -1;
        for (size_t k = 0; k < cb2.order.size(); ++k)
            if (cb2.order[k] == tr.matching) {
                idx = static_cast<int>(k);
                break;
            }
        if (idx < 0) {
            rep.pass = false;
            rep.failures.push_back("extended matching of basis " + std::to_string(t) +
                                   " not found");
            continue;
        }
        if (cb2.lengths[idx] != cb1.lengths[t]) {
            rep.pass = false;
            rep.failures.push_back("embedding changed the length of basis " + std::to_string(t));
        }
        if (!(image == cb2.elements[idx])) {
            rep.pass = false;
            rep.failures.push_back("embedded canonical element " + std::to_string(t) +
                                   " is not the canonical element of its extended matching");
        }
    }
    return rep;
}

}  // namespace skein
