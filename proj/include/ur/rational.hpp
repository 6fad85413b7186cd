#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <string>
#include <vector>

#include "ur/error.hpp"

namespace ur {

// All scalar arithmetic in the library is exact. Rational is GMP-backed and
// kept canonical (lowest terms, denominator > 0) by construction; no floating
// point appears anywhere in the construction or verification paths.
using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Parse "p", "p/q" or "-p/q" (decimal, sign on the numerator).
/// Throws InvalidInput on malformed text or zero denominator.
Rational parse_rational(const std::string& text);

/// Canonical decimal rendering: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

inline Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

inline bool is_integer(const Rational& value) { return denominator(value) == 1; }

/// Complex number with exact rational real and imaginary parts.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational real, Rational imag = Rational(0))
        : re(std::move(real)), im(std::move(imag)) {}
    GaussianRational(int real) : re(real), im(0) {}

    bool is_real() const { return im == 0; }
    GaussianRational conj() const { return {re, Rational(-im)}; }
    /// Squared modulus re^2 + im^2, always a Rational.
    Rational norm2() const { return re * re + im * im; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {Rational(a.re + b.re), Rational(a.im + b.im)};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {Rational(a.re - b.re), Rational(a.im - b.im)};
    }
    GaussianRational operator-() const { return {Rational(-re), Rational(-im)}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {Rational(a.re * b.re - a.im * b.im), Rational(a.re * b.im + a.im * b.re)};
    }
    friend GaussianRational operator*(const GaussianRational& a, const Rational& s) {
        return {Rational(a.re * s), Rational(a.im * s)};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        Rational n2 = b.norm2();
        require(n2 != 0, "DivisionByZero", "division by zero Gaussian rational");
        GaussianRational num = a * b.conj();
        return {Rational(num.re / n2), Rational(num.im / n2)};
    }

    bool operator==(const GaussianRational& other) const = default;

    /// Canonical order: by real part, then imaginary part.
    friend std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b) {
        if (a.re < b.re) return std::strong_ordering::less;
        if (a.re > b.re) return std::strong_ordering::greater;
        if (a.im < b.im) return std::strong_ordering::less;
        if (a.im > b.im) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
};

GaussianRational pow(const GaussianRational& base, int exponent);

std::string to_string(const GaussianRational& value);

/// A multiset of eigenvalues, repeats included, order not significant.
using Roots = std::vector<GaussianRational>;

/// Sort into the canonical (re, im) order, in place.
void canonicalize(Roots& roots);

/// True iff every non-real element has its conjugate with equal multiplicity.
bool conjugate_closed(const Roots& roots);

/// Sum of the elements (first power sum). Asserts a real result.
Rational sum_of(const Roots& roots);

}  // namespace ur
