#include "ur/polynomial.hpp"

#include <algorithm>

namespace ur {

const Rational Polynomial::kZero(0);

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
    prune();
}

Polynomial Polynomial::constant(Rational c) {
    return Polynomial(std::vector<Rational>{std::move(c)});
}

Polynomial Polynomial::linear(const Rational& root) {
    return Polynomial({Rational(-root), Rational(1)});
}

void Polynomial::prune() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& Polynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<std::size_t>(i)];
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

GaussianRational Polynomial::eval(const GaussianRational& x) const {
    GaussianRational acc(Rational(0));
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + GaussianRational(*it);
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial();
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rational(static_cast<int>(i));
    return Polynomial(std::move(d));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> sum(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) sum[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) sum[i] += b.coeffs_[i];
    return Polynomial(std::move(sum));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> diff(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) diff[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) diff[i] -= b.coeffs_[i];
    return Polynomial(std::move(diff));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> prod(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(prod));
}

Polynomial Polynomial::operator*(const Rational& s) const {
    std::vector<Rational> scaled(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) scaled[i] = coeffs_[i] * s;
    return Polynomial(std::move(scaled));
}

std::string Polynomial::str(const std::string& variable) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeff(i);
        if (c == 0) continue;
        if (out.empty()) {
            out += c < 0 ? "-" : "";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        Rational a = abs(c);
        if (i == 0 || a != 1) out += to_string(a);
        if (i > 0) {
            if (a != 1) out += "*";
            out += variable;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

Polynomial poly_from_roots(const Roots& roots) {
    require(conjugate_closed(roots), "NotConjugateClosed",
            "root multiset is not closed under conjugation");
    // Multiply out over the Gaussian rationals; conjugate closure makes every
    // imaginary part cancel exactly.
    std::vector<GaussianRational> coeffs{GaussianRational(Rational(1))};
    for (const auto& root : roots) {
        std::vector<GaussianRational> next(coeffs.size() + 1, GaussianRational(Rational(0)));
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            next[i + 1] = next[i + 1] + coeffs[i];
            next[i] = next[i] - coeffs[i] * root;
        }
        coeffs = std::move(next);
    }
    std::vector<Rational> real_coeffs(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        require(coeffs[i].im == 0, "Internal", "imaginary coefficient survived cancellation");
        real_coeffs[i] = coeffs[i].re;
    }
    return Polynomial(std::move(real_coeffs));
}

std::pair<Polynomial, Rational> synthetic_divide(const Polynomial& p, const Rational& c) {
    require(p.degree() >= 1, "InvalidInput", "synthetic division needs a nonconstant dividend");
    int n = p.degree();
    std::vector<Rational> q(static_cast<std::size_t>(n), Rational(0));
    Rational carry = p.coeff(n);
    for (int i = n - 1; i >= 0; --i) {
        q[static_cast<std::size_t>(i)] = carry;
        carry = p.coeff(i) + carry * c;
    }
    return {Polynomial(std::move(q)), carry};
}

}  // namespace ur
