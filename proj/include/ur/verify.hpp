#pragma once

#include <optional>
#include <vector>

#include "ur/matrix.hpp"
#include "ur/spectrum.hpp"

namespace ur {

/// Rank profile of (M - lambda I)^k for k = 0, 1, ... while strictly
/// decreasing; the differences give the number of Jordan blocks of each size.
struct WeyrProfile {
    GaussianRational eigenvalue;
    std::vector<int> ranks;      // r_0 = n, then while strictly decreasing
    std::vector<int> partition;  // block sizes for this eigenvalue, descending
};

/// True iff char_poly(M) equals poly_from_roots of the spectrum, exactly.
bool verify_spectrum(const ExactMatrix& m, const Spectrum& spectrum);

/// Weyr profile at an exactly given (possibly complex) eigenvalue. The
/// partition is empty iff lambda is not an eigenvalue. Powers of (M - lambda I)
/// are built incrementally and stop at rank stabilization.
WeyrProfile weyr_profile(const ExactMatrix& m, const GaussianRational& lambda);

/// True iff the Weyr-derived partition matches the Jordan form at every one
/// of its eigenvalues and the block sizes cover the whole matrix.
bool verify_jcf(const ExactMatrix& m, const JordanForm& jcf);

struct StructureReport {
    bool nonnegative = false;
    std::vector<int> positive_columns;  // 0-based indices of strictly positive columns
    bool irreducible = false;
    std::optional<Rational> cs_value;  // set when all row sums agree
};

/// Entrywise nonnegativity, strictly positive columns, irreducibility via
/// strong connectivity of the nonzero-pattern digraph, and the common row sum
/// when one exists.
StructureReport verify_structure(const ExactMatrix& m);

}  // namespace ur
