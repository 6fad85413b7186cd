#pragma once

#include <optional>
#include <vector>

#include "ur/matrix.hpp"
#include "ur/polynomial.hpp"
#include "ur/spectrum.hpp"

namespace ur {

/// Companion matrix in the orientation used throughout: ones on the
/// subdiagonal, the coefficient column last. For char poly
/// x^m - c1 x^{m-1} - c2 x^{m-2} - ... - cm the last column reads
/// (cm, ..., c2, c1) top-down, so the bottom entry is the trace.
class CompanionMatrix {
  public:
    /// last_column in top-down display order.
    explicit CompanionMatrix(std::vector<Rational> last_column);

    int size() const { return static_cast<int>(last_column_.size()); }
    const std::vector<Rational>& last_column() const { return last_column_; }
    bool nonnegative() const;

    ExactMatrix dense() const;
    Polynomial char_poly() const;

  private:
    std::vector<Rational> last_column_;
};

/// Left/right eigenvector pair at a simple eigenvalue c, normalized so that
/// t^T s = 1 (s carries the 1/normalizer scale, t stays integral for
/// companion inputs).
struct EigenPair {
    Rational eigenvalue;
    std::vector<Rational> left;   // t
    std::vector<Rational> right;  // s, already scaled
    Rational normalizer;          // t^T s before scaling
};

/// Companion matrix whose characteristic polynomial is
/// poly_from_roots(roots). May have negative entries; callers check.
CompanionMatrix companion_from_spectrum(const Roots& roots);

struct NonnegCheck {
    bool nonnegative;
    /// When not nonnegative: j such that the coefficient of x^{m-j} is
    /// positive (j = 1 is the trace coefficient).
    std::optional<int> witness;
};

/// True iff every non-leading coefficient of poly_from_roots(roots) is <= 0,
/// i.e. the companion matrix is entrywise nonnegative. Always scans the full
/// coefficient vector; the b2 shortcut is a cross-check, not the decision
/// path.
NonnegCheck is_nonneg_companion(const Roots& roots);

/// Jordan structure of the companion matrix: one block per distinct root, of
/// size equal to its multiplicity (companion matrices are nonderogatory).
JordanForm jordan_of_companion(const Roots& roots);

/// Exact eigenvector pair of a companion matrix at a simple root c:
/// t = (1, c, ..., c^{m-1}), s = coefficients of char_poly/(x - c), and
/// t^T s = p'(c). Errors: NotAnEigenvalue, NotSimple, NotNonnegative (some
/// entry negative, i.e. c is not the Perron root of a nonnegative companion).
EigenPair perron_eigenpair(const CompanionMatrix& m, const Rational& c);

}  // namespace ur
