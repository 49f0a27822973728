#include "skein/scalar.hpp"

#include <sstream>
#include <stdexcept>

namespace skein {

Scalar Scalar::reduce(IntLaurent num, int k) {
    if (k < 0) throw std::invalid_argument("Scalar::reduce: negative z power");
    Scalar s;
    if (num.isZero()) return s;
    const IntLaurent zz = IntLaurent::z();
    while (k > 0) {
        if (!num.atQOne().isZero()) break;  // z | num would force vanishing at q = 1
        auto d = exactDiv(num, zz);
        if (!d) break;
        num = std::move(*d);
        --k;
    }
    s.num_ = std::move(num);
    s.zpow_ = k;
    return s;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.isZero()) return b;
    if (b.isZero()) return a;
    int k = std::max(a.zpow_, b.zpow_);
    IntLaurent za = a.num_, zb = b.num_;
    const IntLaurent zz = IntLaurent::z();
    for (int i = a.zpow_; i < k; ++i) za *= zz;
    for (int i = b.zpow_; i < k; ++i) zb *= zz;
    return Scalar::reduce(za + zb, k);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    return Scalar::reduce(a.num_ * b.num_, a.zpow_ + b.zpow_);
}

Scalar Scalar::pow(int k) const {
    if (k < 0) throw std::invalid_argument("Scalar::pow: negative exponent");
    Scalar r = one();
    for (int i = 0; i < k; ++i) r *= *this;
    return r;
}

Scalar Scalar::bar() const {
    // (q^-1 - q)^k = (-1)^k z^k
    IntLaurent n = num_.bar();
    if (zpow_ % 2 == 1) n = -n;
    Scalar r;
    r.num_ = std::move(n);
    r.zpow_ = zpow_;  // bar preserves z-divisibility, stays canonical
    return r;
}

std::optional<Scalar> Scalar::dividedBy(const Scalar& b) const {
    if (b.isZero()) throw std::invalid_argument("Scalar: division by zero");
    if (isZero()) return Scalar::zero();
    auto [va, na] = stripZ(num_);
    auto [vb, nb] = stripZ(b.num_);
    auto u = exactDiv(na, nb);
    if (!u) return std::nullopt;
    int e = (b.zpow_ + va) - (zpow_ + vb);  // result = u * z^e
    if (e >= 0) {
        IntLaurent n = std::move(*u);
        const IntLaurent zz = IntLaurent::z();
        for (int i = 0; i < e; ++i) n *= zz;
        return Scalar::reduce(std::move(n), 0);
    }
    Scalar r;
    r.num_ = std::move(*u);
    r.zpow_ = -e;  // z does not divide u since na, nb are z-stripped
    return r;
}

std::optional<QLaurent> Scalar::toQLaurent() const {
    if (zpow_ != 0) return std::nullopt;
    return QLaurent::fromIntLaurent(num_);
}

std::string Scalar::str() const {
    if (zpow_ == 0) return num_.str();
    std::ostringstream os;
    os << "(" << num_.str() << ")/z^" << zpow_;
    return os.str();
}

}  // namespace skein
