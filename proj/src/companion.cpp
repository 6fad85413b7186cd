#include "ur/companion.hpp"

#include <algorithm>
#include <map>

namespace ur {

CompanionMatrix::CompanionMatrix(std::vector<Rational> last_column)
    : last_column_(std::move(last_column)) {
    require(!last_column_.empty(), "InvalidInput", "companion matrix needs size >= 1");
}

bool CompanionMatrix::nonnegative() const {
    return std::all_of(last_column_.begin(), last_column_.end(),
                       [](const Rational& c) { return c >= 0; });
}

ExactMatrix CompanionMatrix::dense() const {
    int m = size();
    ExactMatrix out(m, m);
    for (int i = 0; i + 1 < m; ++i) out.at(i + 1, i) = 1;
    for (int i = 0; i < m; ++i) out.at(i, m - 1) = last_column_[static_cast<std::size_t>(i)];
    return out;
}

Polynomial CompanionMatrix::char_poly() const {
    int m = size();
    std::vector<Rational> coeffs(static_cast<std::size_t>(m) + 1);
    for (int i = 0; i < m; ++i) coeffs[static_cast<std::size_t>(i)] = -last_column_[static_cast<std::size_t>(i)];
    coeffs[static_cast<std::size_t>(m)] = 1;
    return Polynomial(std::move(coeffs));
}

CompanionMatrix companion_from_spectrum(const Roots& roots) {
    Polynomial p = poly_from_roots(roots);
    int m = p.degree();
    std::vector<Rational> column(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) column[static_cast<std::size_t>(i)] = -p.coeff(i);
    return CompanionMatrix(std::move(column));
}

NonnegCheck is_nonneg_companion(const Roots& roots) {
    Polynomial p = poly_from_roots(roots);
    int m = p.degree();
    for (int j = 1; j <= m; ++j) {
        if (p.coeff(m - j) > 0) return {false, j};
    }
    return {true, std::nullopt};
}

JordanForm jordan_of_companion(const Roots& roots) {
    require(conjugate_closed(roots), "NotConjugateClosed",
            "root multiset is not closed under conjugation");
    std::map<std::pair<Rational, Rational>, int> counts;
    for (const auto& r : roots) counts[{r.re, r.im}]++;
    std::vector<JordanForm::Entry> blocks;
    for (const auto& [key, mult] : counts)
        blocks.push_back({GaussianRational(key.first, key.second), {mult}});
    return JordanForm(std::move(blocks));
}

EigenPair perron_eigenpair(const CompanionMatrix& m, const Rational& c) {
    Polynomial p = m.char_poly();
    auto [quotient, remainder] = synthetic_divide(p, c);
    require(remainder == 0, "NotAnEigenvalue",
            to_string(c) + " is not a root of the characteristic polynomial");
    Rational derivative_at_c = p.derivative().eval(c);
    require(derivative_at_c != 0, "NotSimple", to_string(c) + " is a multiple root");

    int size = m.size();
    EigenPair pair;
    pair.eigenvalue = c;
    pair.normalizer = derivative_at_c;  // t^T s = q(c) = p'(c)
    pair.left.resize(static_cast<std::size_t>(size));
    Rational power(1);
    for (int i = 0; i < size; ++i) {
        pair.left[static_cast<std::size_t>(i)] = power;
        power *= c;
    }
    pair.right.resize(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i)
        pair.right[static_cast<std::size_t>(i)] = quotient.coeff(i) / derivative_at_c;

    for (const auto& t : pair.left)
        require(t >= 0, "NotNonnegative", "left eigenvector has a negative entry");
    for (const auto& s : pair.right)
        require(s >= 0, "NotNonnegative", "right eigenvector has a negative entry");
    return pair;
}

}  // namespace ur
