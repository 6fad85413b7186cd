#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ur/rational.hpp"

namespace ur {

/// Univariate polynomial with exact rational coefficients, constant term
/// first. The zero polynomial has an empty coefficient vector (degree -1);
/// nonzero polynomials carry no spurious zero leading coefficients.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);
    static Polynomial zero() { return Polynomial(); }
    static Polynomial constant(Rational c);
    /// x - root
    static Polynomial linear(const Rational& root);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    /// Coefficient of x^i (zero beyond the degree).
    const Rational& coeff(int i) const;
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    Rational eval(const Rational& x) const;
    GaussianRational eval(const GaussianRational& x) const;

    Polynomial derivative() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator*(const Rational& s) const;
    bool operator==(const Polynomial& other) const = default;

    std::string str(const std::string& variable = "x") const;

  private:
    std::vector<Rational> coeffs_;
    void prune();
    static const Rational kZero;
};

/// Monic polynomial with the given multiset of roots. The multiset must be
/// closed under conjugation so the coefficients come out rational.
/// Throws NotConjugateClosed otherwise.
Polynomial poly_from_roots(const Roots& roots);

/// Divide p by (x - c): returns (quotient, remainder) with
/// p(x) = (x - c) * quotient(x) + remainder and remainder = p(c).
std::pair<Polynomial, Rational> synthetic_divide(const Polynomial& p, const Rational& c);

}  // namespace ur
