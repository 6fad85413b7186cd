#pragma once

#include <vector>

#include "ur/companion.hpp"
#include "ur/matrix.hpp"

namespace ur {

/// Input for one glue step: an n-by-n top matrix whose (n,n) corner entry is
/// c, an m-by-m bottom matrix with c as a simple eigenvalue, and the
/// eigenvector pair of the bottom at c with t^T s = 1.
struct GlueInput {
    ExactMatrix top;
    ExactMatrix bottom;
    EigenPair eigenpair;
};

/// Corner glue of two matrices along the shared value c. Writing the top as
/// [[A1, a], [b^T, c]], the result is [[A1, a t^T], [s b^T, B]] of size
/// (n + m - 1): its characteristic polynomial times (x - c) equals the
/// product of the input characteristic polynomials, and its Jordan form is
/// J(top) plus J(bottom) minus one 1-by-1 block at c.
ExactMatrix smigoc_glue(const GlueInput& input);

/// A chain of companion links folded top-down: the running corner after
/// absorbing link k equals that link's trace, which is the next glue value.
struct GlueChain {
    std::vector<CompanionMatrix> links;
    std::vector<Rational> glue_values;  // one per link after the first
};

ExactMatrix glue_chain(const GlueChain& chain);

/// Eigenvector pair of a general square matrix at a simple eigenvalue c, by
/// exact nullspace solves for (B - cI) and (B^T - cI). Both vectors must come
/// out nonnegative (EigenpairNotNonnegative otherwise); s is scaled so that
/// t^T s = 1.
EigenPair eigenpair_general(const ExactMatrix& b, const Rational& c);

}  // namespace ur
