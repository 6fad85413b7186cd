#include "ur/rational.hpp"

#include <algorithm>
#include <cctype>

namespace ur {

namespace {

bool valid_integer_text(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + static_cast<long>(i), s.end(),
                       [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
            s.end());
    require(!s.empty(), "InvalidInput", "empty rational literal");
    std::string num = s, den = "1";
    if (auto slash = s.find('/'); slash != std::string::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    }
    require(valid_integer_text(num) && valid_integer_text(den), "InvalidInput",
            "malformed rational literal '" + text + "'");
    Int n(num), d(den);
    require(d != 0, "InvalidInput", "zero denominator in '" + text + "'");
    return Rational(n, d);  // two-integer construction canonicalizes
}

std::string to_string(const Rational& value) {
    return value.str();
}

GaussianRational pow(const GaussianRational& base, int exponent) {
    require(exponent >= 0, "InvalidInput", "negative exponent");
    GaussianRational acc(Rational(1));
    for (int i = 0; i < exponent; ++i) acc = acc * base;
    return acc;
}

std::string to_string(const GaussianRational& value) {
    if (value.is_real()) return to_string(value.re);
    std::string s = to_string(value.re);
    s += value.im < 0 ? " - " : " + ";
    s += to_string(abs(value.im)) + "i";
    return s;
}

void canonicalize(Roots& roots) {
    std::sort(roots.begin(), roots.end(),
              [](const GaussianRational& a, const GaussianRational& b) { return (a <=> b) < 0; });
}

bool conjugate_closed(const Roots& roots) {
    Roots sorted = roots;
    canonicalize(sorted);
    Roots conjugates;
    conjugates.reserve(roots.size());
    for (const auto& r : roots) conjugates.push_back(r.conj());
    canonicalize(conjugates);
    return sorted == conjugates;
}

Rational sum_of(const Roots& roots) {
    GaussianRational total(Rational(0));
    for (const auto& r : roots) total = total + r;
    require(total.im == 0, "Internal", "non-real sum of a conjugate-closed multiset");
    return total.re;
}

}  // namespace ur
