#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ur/glue.hpp"
#include "ur/matrix.hpp"
#include "ur/spectrum.hpp"
#include "ur/verify.hpp"

namespace ur {

/// A decomposition of a spectrum into sublists with their auxiliary chain:
/// aux_lists[0] = sublists[0], and each later aux list prepends the running
/// trace of the previous one, which is also the glue value into that link.
struct Decomposition {
    std::vector<Roots> sublists;        // Lambda_k, Lambda_1 holds the Perron root
    std::vector<Roots> aux_lists;       // Gamma_k
    std::vector<Rational> glue_values;  // c_k = s_1(Gamma_{k-1}) for k >= 2
};

/// Build and fully validate the auxiliary chain for the given sublists.
/// Fails fast with NonnegativityViolated / GlueValueNonpositive /
/// GlueValueNotSimple / GlueValueNotDominant, each carrying the 1-based chain
/// index.
Decomposition build_aux_chain(const std::vector<Roots>& sublists);

struct SearchOptions {
    /// Require every companion in the chain to have a strictly positive last
    /// column.
    bool require_positive_column = false;
};

struct SearchOutcome {
    std::optional<Decomposition> decomposition;
    unsigned long long assignments_examined = 0;
};

/// Exhaustive backtracking search for a decomposition whose induced Jordan
/// form equals `jcf`: Jordan blocks are assigned to ordered sublists, at most
/// one block per distinct eigenvalue per sublist, conjugate blocks
/// co-assigned, the Perron block anchoring the first sublist. Candidates are
/// tried largest-block-first in canonical eigenvalue order, each partial
/// chain validated as it grows; the first complete valid chain wins.
SearchOutcome find_decomposition(const Spectrum& spectrum, const JordanForm& jcf,
                                 const SearchOptions& options = {});

struct Verdicts {
    bool spectrum_match = false;
    bool jcf_match = false;
    bool nonnegative = false;
    std::optional<int> positive_column;  // 0-based
    bool irreducible = false;
    std::optional<Rational> cs_value;
};

/// Constructed realization plus everything needed to re-verify it from the
/// matrix alone.
struct RealizationCertificate {
    Spectrum spectrum;
    JordanForm jcf;
    std::optional<Decomposition> decomposition;
    ExactMatrix matrix;
    Verdicts verdicts;
};

/// Realize the spectrum with the requested Jordan form: search for a
/// decomposition, glue the companion chain, and verify the result before
/// returning. Throws NotFound when the search exhausts, Inapplicable /
/// NotRealizable when the spectrum fails the left half-plane test.
RealizationCertificate realize(const Spectrum& spectrum, const JordanForm& jcf);

struct UniversalOutcome {
    std::optional<RealizationCertificate> certificate;
    std::string failure;  // error code + message when empty certificate
};

struct UniversalResult {
    /// One outcome per enumerated Jordan form, in jcf_enumerate order.
    std::vector<std::pair<JordanForm, UniversalOutcome>> outcomes;
    int realized = 0;
};

/// Attempt realize() for every Jordan form the spectrum allows. `jobs`
/// bounds the worker threads; results are keyed by form and independent of
/// the schedule.
UniversalResult universal(const Spectrum& spectrum, int jobs = 1);

/// Diagonal similarity by the Perron eigenvector: maps an irreducible
/// nonnegative matrix with rational Perron root to one with every row sum
/// equal to that root. Positive columns stay positive and the characteristic
/// polynomial is unchanged.
ExactMatrix scale_to_cs(const ExactMatrix& m, const Rational& perron);

}  // namespace ur
