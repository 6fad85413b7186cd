#pragma once

#include <utility>

#include "ur/companion.hpp"
#include "ur/realize.hpp"
#include "ur/spectrum.hpp"

namespace ur {

/// The (n-1, n) entry of a companion link in a chain over the uniform list
/// {lambda, -c, (-a+bi, -a-bi)^((n-2)/2)}:
///
///     p*(2*a*lambda - 2*a^2*n + (4k - 2p + 1)*a^2 - b^2) + c*(lambda - (n-2)*a)
///
/// where p is the number of conjugate pairs in the link's list and
/// k = 1 + p + (number of pairs in all later lists of the chain). The c term
/// belongs to the list containing -c, which must be the last one; pass c = 0
/// for every other link. The value equals the negated second elementary
/// symmetric function of the link's list and is nondecreasing in k.
Rational fb2(const Rational& lambda, const Rational& a, const Rational& b, int n,
             const Rational& c, int k, int p);

enum class IntervalStatus { Ok, Empty, C1Violated };

struct NegcInterval {
    IntervalStatus status = IntervalStatus::Empty;
    Rational lo;
    Rational hi;
    bool lo_strict = false;  // set when the lower end is clamped at zero

    bool contains(const Rational& c) const {
        if (status != IntervalStatus::Ok) return false;
        return (lo_strict ? c > lo : c >= lo) && c <= hi;
    }
};

/// The admissible range for the appended negative real -c:
///
///     (2a(na - lambda) + b^2 - 7a^2) / (lambda - (n-2)a) <= c <= lambda - (n-2)a
///
/// guarded by (2n-11)a^2 + b^2 <= 2a*lambda. Returns C1Violated when the
/// guard fails and Empty when the bounds cross; the lower end is clamped at
/// zero from above since c must be positive. Throws DenominatorNonpositive
/// when lambda <= (n-2)a and UnsupportedShape unless n is even and >= 6.
NegcInterval negc_interval(const Rational& lambda, const Rational& a, const Rational& b, int n);

/// The spectrum {lambda, -c, (-a+bi, -a-bi)^((n-2)/2)}.
Spectrum negc_spectrum(const Rational& lambda, const Rational& a, const Rational& b, int n,
                       const Rational& c);

/// The two companion links that close the diagonalizable chain for the
/// uniform list: a 3-by-3 one with spectrum {lambda-(n-6)a, -a+-bi} and a
/// 4-by-4 one with spectrum {lambda-(n-4)a, -c, -a+-bi}, with last columns
/// given in closed form. Both are checked entrywise nonnegative; the one
/// unconstrained entry raises ProofGapViolated if it ever came out negative.
std::pair<CompanionMatrix, CompanionMatrix> negc_proof_matrices(const Rational& lambda,
                                                                const Rational& a,
                                                                const Rational& b, int n,
                                                                const Rational& c);

/// Realize {lambda, -c, pairs} with the requested Jordan form: for the
/// diagonal form, the explicit chain whose Perron entries step down by 2a per
/// link with -c in the last list; otherwise the generic decomposition search.
RealizationCertificate negc_realize(const Rational& lambda, const Rational& a, const Rational& b,
                                    int n, const Rational& c, const JordanForm& jcf);

/// Member of the one-parameter family with Perron root
/// ((2n-7)a^2 + b^2)/(2a), which satisfies the interval conditions for every
/// 0 < c <= (b^2 - 3a^2)/(2a); requires b^2 > 3a^2.
Spectrum corr_family(const Rational& a, const Rational& b, int n, const Rational& c);

/// Shape detection for the fb2-based search pruning: a Perron root, an
/// optional simple negative real, and one repeated conjugate pair with
/// a > 0.
struct UniformPairShape {
    bool matches = false;
    Rational lambda;
    Rational a;
    Rational b;
    Rational c;  // 0 when there is no negative real entry
    bool has_neg_real = false;
    int total_pairs = 0;
    int n = 0;
};

UniformPairShape detect_uniform_pair_shape(const Spectrum& spectrum);

}  // namespace ur
