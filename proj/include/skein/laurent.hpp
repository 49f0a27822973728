#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace skein {

using Int = boost::multiprecision::cpp_int;

// Exponent pair of a monomial q^q t^t.
struct Exp {
    int32_t q = 0;
    int32_t t = 0;
    friend auto operator<=>(const Exp&, const Exp&) = default;
};

// Element of Z[q^{+-1}, t^{+-1}], stored as sorted (exponent, coefficient)
// terms with no zero coefficients.
class IntLaurent {
  public:
    IntLaurent() = default;
    static IntLaurent monomial(Int c, int32_t qexp = 0, int32_t texp = 0);
    static IntLaurent zero() { return {}; }
    static IntLaurent one() { return monomial(1); }
    // z = q - q^-1
    static IntLaurent z();
    // t - t^-1
    static IntLaurent tMinusTinv();

    bool isZero() const { return terms_.empty(); }
    bool isOne() const;
    const std::vector<std::pair<Exp, Int>>& terms() const { return terms_; }

    // Coefficient of q^qexp t^texp (zero if absent).
    Int coeff(int32_t qexp, int32_t texp) const;

    IntLaurent operator-() const;
    friend IntLaurent operator+(const IntLaurent& a, const IntLaurent& b);
    friend IntLaurent operator-(const IntLaurent& a, const IntLaurent& b);
    friend IntLaurent operator*(const IntLaurent& a, const IntLaurent& b);
    IntLaurent& operator+=(const IntLaurent& o) { return *this = *this + o; }
    IntLaurent& operator-=(const IntLaurent& o) { return *this = *this - o; }
    IntLaurent& operator*=(const IntLaurent& o) { return *this = *this * o; }
    bool operator==(const IntLaurent& o) const { return terms_ == o.terms_; }

    IntLaurent shifted(int32_t dq, int32_t dt) const;
    // q -> q^-1, t -> t^-1
    IntLaurent bar() const;
    // Substitute q = 1; result is a Laurent polynomial in t alone.
    IntLaurent atQOne() const;

    bool isTFree() const;
    size_t termCount() const { return terms_.size(); }

    std::string str() const;  // display form, highest exponents first

    // Builds from possibly unsorted/duplicated term list.
    static IntLaurent fromTerms(std::vector<std::pair<Exp, Int>> ts);

  private:
    std::vector<std::pair<Exp, Int>> terms_;  // ascending lex (q, t)
};

// Exact quotient a / b in Z[q^{+-1}, t^{+-1}]; nullopt if b does not divide a.
std::optional<IntLaurent> exactDiv(const IntLaurent& a, const IntLaurent& b);

// Largest k with z^k | a together with a / z^k. For a = 0 returns (0, 0).
std::pair<int, IntLaurent> stripZ(const IntLaurent& a);

// Element of Z[q^{+-1}], used for bar-matrix entries and transition
// coefficients.
class QLaurent {
  public:
    QLaurent() = default;
    static QLaurent monomial(Int c, int32_t e = 0);
    static QLaurent one() { return monomial(1); }

    bool isZero() const { return terms_.empty(); }
    bool isOne() const;
    const std::vector<std::pair<int32_t, Int>>& terms() const { return terms_; }
    Int coeff(int32_t e) const;
    int32_t minExp() const;  // requires nonzero
    int32_t maxExp() const;  // requires nonzero

    QLaurent operator-() const;
    friend QLaurent operator+(const QLaurent& a, const QLaurent& b);
    friend QLaurent operator-(const QLaurent& a, const QLaurent& b);
    friend QLaurent operator*(const QLaurent& a, const QLaurent& b);
    QLaurent& operator+=(const QLaurent& o) { return *this = *this + o; }
    QLaurent& operator-=(const QLaurent& o) { return *this = *this - o; }
    bool operator==(const QLaurent& o) const { return terms_ == o.terms_; }

    QLaurent bar() const;  // q -> q^-1
    bool allCoeffsNonnegative() const;

    IntLaurent toIntLaurent() const;
    // Succeeds only for t-free input.
    static std::optional<QLaurent> fromIntLaurent(const IntLaurent& p);

    std::string str() const;

    static QLaurent fromTerms(std::vector<std::pair<int32_t, Int>> ts);

  private:
    std::vector<std::pair<int32_t, Int>> terms_;  // ascending exponent
};

// The unique r in q^-1 Z[q^-1] with r - bar(r) = g, for antisymmetric g
// (bar(g) = -g). Throws std::invalid_argument otherwise.
QLaurent negativePartSolve(const QLaurent& g);

}  // namespace skein
