#pragma once

#include <optional>
#include <string>

#include "skein/laurent.hpp"

namespace skein {

// Element of Z[q^{+-1}, t^{+-1}, (q-q^-1)^{-1}] in the canonical form
// num / z^zpow with z = q - q^-1 and either zpow = 0 or z not dividing num.
class Scalar {
  public:
    Scalar() = default;  // zero
    Scalar(int v) : num_(IntLaurent::monomial(v)) {}

    // Canonical reduction of num / z^k.
    static Scalar reduce(IntLaurent num, int k);
    static Scalar fromLaurent(IntLaurent num) { return reduce(std::move(num), 0); }
    static Scalar fromQ(const QLaurent& p) { return fromLaurent(p.toIntLaurent()); }

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(1); }
    static Scalar q(int32_t e = 1) { return fromLaurent(IntLaurent::monomial(1, e, 0)); }
    static Scalar t(int32_t e = 1) { return fromLaurent(IntLaurent::monomial(1, 0, e)); }
    static Scalar z() { return fromLaurent(IntLaurent::z()); }
    // delta = (t - t^-1)/z, the value of a crossingless circle
    static Scalar delta() { return reduce(IntLaurent::tMinusTinv(), 1); }

    const IntLaurent& num() const { return num_; }
    int zpow() const { return zpow_; }
    bool isZero() const { return num_.isZero(); }
    bool isOne() const { return zpow_ == 0 && num_.isOne(); }

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    bool operator==(const Scalar& o) const { return zpow_ == o.zpow_ && num_ == o.num_; }

    Scalar pow(int k) const;

    // q -> q^-1, t -> t^-1 (so z -> -z); an involutive ring map.
    Scalar bar() const;

    // Exact quotient in the ring; nullopt if *this/b leaves it.
    std::optional<Scalar> dividedBy(const Scalar& b) const;

    // t-free and z-free elements coerce to Z[q^{+-1}].
    std::optional<QLaurent> toQLaurent() const;

    std::string str() const;

  private:
    IntLaurent num_;
    int zpow_ = 0;
};

}  // namespace skein
