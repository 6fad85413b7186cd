#include "ur/realize.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "ur/families.hpp"

namespace ur {

Decomposition build_aux_chain(const std::vector<Roots>& sublists) {
    require(!sublists.empty(), "InvalidInput", "decomposition needs at least one sublist");
    Decomposition d;
    d.sublists = sublists;
    for (auto& sub : d.sublists) canonicalize(sub);
    Rational running_trace(0);
    for (std::size_t k = 0; k < d.sublists.size(); ++k) {
        const std::string where = "chain index " + std::to_string(k + 1);
        const Roots& sub = d.sublists[k];
        require(!sub.empty(), "InvalidInput", where + ": empty sublist");
        Roots gamma = sub;
        if (k > 0) {
            const Rational glue = running_trace;
            require(glue > 0, "GlueValueNonpositive", where + ": glue value " + to_string(glue));
            const GaussianRational glue_entry(glue);
            const Rational glue_norm2 = glue * glue;
            for (const auto& v : sub) {
                require(!(v == glue_entry), "GlueValueNotSimple",
                        where + ": glue value " + to_string(glue) + " repeats in the sublist");
                require(v.norm2() < glue_norm2, "GlueValueNotDominant",
                        where + ": |" + to_string(v) + "| reaches the glue value " +
                            to_string(glue));
            }
            gamma.insert(gamma.begin(), glue_entry);
            d.glue_values.push_back(glue);
        }
        NonnegCheck check = is_nonneg_companion(gamma);
        if (!check.nonnegative)
            fail("NonnegativityViolated",
                 where + ": coefficient index " + std::to_string(*check.witness));
        d.aux_lists.push_back(std::move(gamma));
        running_trace += sum_of(sub);
    }
    return d;
}

namespace {

// One search class per distinct real eigenvalue or conjugate pair of the
// target Jordan form; `sizes` holds the unassigned block sizes, descending.
struct BlockClass {
    GaussianRational rep;  // im >= 0
    bool is_pair = false;
    bool is_perron = false;
    std::vector<int> sizes;
};

struct Searcher {
    const Spectrum& spectrum;
    SearchOptions options;
    UniformPairShape shape;
    std::vector<BlockClass> classes;

    std::vector<Roots> sublists;
    Rational running_trace{0};
    bool neg_real_used = false;
    unsigned long long examined = 0;
    std::optional<Decomposition> found;

    explicit Searcher(const Spectrum& s, const JordanForm& jcf, const SearchOptions& opts)
        : spectrum(s), options(opts), shape(detect_uniform_pair_shape(s)) {
        for (const auto& [value, partition] : jcf.blocks()) {
            if (value.im < 0) continue;  // the conjugate mirror shares the class
            BlockClass cls;
            cls.rep = value;
            cls.is_pair = !value.is_real();
            cls.is_perron = value == GaussianRational(s.perron());
            cls.sizes = partition;  // already descending
            classes.push_back(std::move(cls));
        }
        std::sort(classes.begin(), classes.end(),
                  [](const BlockClass& a, const BlockClass& b) { return (a.rep <=> b.rep) < 0; });
    }

    int blocks_left() const {
        int total = 0;
        for (const auto& cls : classes) total += static_cast<int>(cls.sizes.size());
        return total;
    }

    int pairs_left() const {
        int total = 0;
        for (const auto& cls : classes)
            if (cls.is_pair)
                for (int s : cls.sizes) total += s;
        return total;
    }

    bool search_level() {
        if (blocks_left() == 0) {
            // Authoritative revalidation of the complete chain.
            try {
                found = build_aux_chain(sublists);
            } catch (const Error&) {
                return false;
            }
            return true;
        }
        if (!sublists.empty() && running_trace <= 0) return false;  // next glue value dead
        std::vector<std::pair<std::size_t, int>> picks;
        return choose(0, picks);
    }

    // Per-class choice for the current sublist: one block of each distinct
    // available size, largest first, then none. The first complete candidate
    // is the greedy largest-block assignment.
    bool choose(std::size_t class_index, std::vector<std::pair<std::size_t, int>>& picks) {
        if (class_index == classes.size()) {
            if (picks.empty()) return false;
            return try_candidate(picks);
        }
        BlockClass& cls = classes[class_index];
        int previous = -1;
        for (std::size_t i = 0; i < cls.sizes.size(); ++i) {
            int size = cls.sizes[i];
            if (size == previous) continue;  // identical block, same branch
            previous = size;
            cls.sizes.erase(cls.sizes.begin() + static_cast<long>(i));
            picks.push_back({class_index, size});
            bool hit = choose(class_index + 1, picks);
            picks.pop_back();
            cls.sizes.insert(cls.sizes.begin() + static_cast<long>(i), size);
            if (hit) return true;
        }
        bool may_skip = !(sublists.empty() && cls.is_perron);  // the anchor is mandatory
        if (may_skip) return choose(class_index + 1, picks);
        return false;
    }

    bool try_candidate(const std::vector<std::pair<std::size_t, int>>& picks) {
        ++examined;
        Roots sub;
        int pair_count = 0;
        bool takes_neg_real = false;
        for (const auto& [ci, size] : picks) {
            const BlockClass& cls = classes[ci];
            for (int rep = 0; rep < size; ++rep) {
                sub.push_back(cls.rep);
                if (cls.is_pair) sub.push_back(cls.rep.conj());
            }
            if (cls.is_pair)
                pair_count += size;
            else if (!cls.is_perron)
                takes_neg_real = true;  // meaningful only for the uniform shape
        }

        const bool first = sublists.empty();
        const Rational glue = running_trace;
        if (!first) {
            const GaussianRational glue_entry(glue);
            const Rational glue_norm2 = glue * glue;
            for (const auto& v : sub) {
                if (v == glue_entry) return false;           // glue value must stay simple
                if (!(v.norm2() < glue_norm2)) return false;  // and strictly dominant
            }
        }

        // Closed-form lower bound on the companion's (m-1, m) entry for
        // uniform pair lists; valid while no earlier sublist consumed the
        // negative real, and for the negative real itself only in the final
        // position.
        if (shape.matches && !neg_real_used && pair_count > 0) {
            int pairs_after = pairs_left() - 0;  // class sizes already exclude the picks
            bool premise = !takes_neg_real || pairs_after == 0;
            if (premise) {
                Rational entry = fb2(shape.lambda, shape.a, shape.b, shape.n,
                                     takes_neg_real ? shape.c : Rational(0),
                                     1 + pair_count + pairs_after, pair_count);
                if (entry < 0) return false;
            }
        }

        Roots gamma = sub;
        if (!first) gamma.insert(gamma.begin(), GaussianRational(glue));
        Polynomial p = poly_from_roots(gamma);
        for (int j = 0; j < p.degree(); ++j) {
            if (p.coeff(j) > 0) return false;
            if (options.require_positive_column && p.coeff(j) == 0) return false;
        }

        canonicalize(sub);
        sublists.push_back(std::move(sub));
        running_trace += sum_of(sublists.back());
        bool neg_before = neg_real_used;
        neg_real_used = neg_real_used || takes_neg_real;
        bool hit = search_level();
        neg_real_used = neg_before;
        running_trace -= sum_of(sublists.back());
        sublists.pop_back();
        return hit;
    }
};

}  // namespace

SearchOutcome find_decomposition(const Spectrum& spectrum, const JordanForm& jcf,
                                 const SearchOptions& options) {
    require(jcf.consistent_with(spectrum), "InvalidInput",
            "Jordan form does not fit the spectrum");
    require(spectrum.left_half_plane(), "Inapplicable",
            "decomposition search needs a left half-plane spectrum");
    Searcher searcher(spectrum, jcf, options);
    searcher.search_level();
    return {std::move(searcher.found), searcher.examined};
}

namespace {

RealizationCertificate certify(const Spectrum& spectrum, const JordanForm& jcf,
                               Decomposition decomposition, bool want_positive_column) {
    GlueChain chain;
    chain.links.reserve(decomposition.aux_lists.size());
    for (const auto& gamma : decomposition.aux_lists)
        chain.links.push_back(companion_from_spectrum(gamma));
    chain.glue_values = decomposition.glue_values;
    ExactMatrix matrix = glue_chain(chain);

    Verdicts verdicts;
    verdicts.spectrum_match = verify_spectrum(matrix, spectrum);
    verdicts.jcf_match = verify_jcf(matrix, jcf);
    StructureReport structure = verify_structure(matrix);
    verdicts.nonnegative = structure.nonnegative;
    verdicts.irreducible = structure.irreducible;
    verdicts.cs_value = structure.cs_value;
    if (want_positive_column && !structure.positive_columns.empty())
        verdicts.positive_column = structure.positive_columns.back();
    require(verdicts.spectrum_match && verdicts.jcf_match && verdicts.nonnegative,
            "VerificationFailed", "constructed matrix failed re-verification");
    return {spectrum, jcf, std::move(decomposition), std::move(matrix), std::move(verdicts)};
}

}  // namespace

RealizationCertificate realize(const Spectrum& spectrum, const JordanForm& jcf) {
    require(jcf.consistent_with(spectrum), "InvalidInput",
            "Jordan form does not fit the spectrum");
    RealizabilityResult test = ls_realizable(spectrum);
    if (test.verdict == Verdict::Inapplicable) fail("Inapplicable", test.reason);
    if (test.verdict == Verdict::NotRealizable) fail("NotRealizable", test.reason);

    bool has_zero = spectrum.multiplicity(GaussianRational(Rational(0))) > 0;
    bool positive_column_mode = !has_zero && power_sum(spectrum, 1) > 0;

    SearchOutcome outcome;
    if (positive_column_mode)
        outcome = find_decomposition(spectrum, jcf, {.require_positive_column = true});
    if (!outcome.decomposition) {
        SearchOutcome plain = find_decomposition(spectrum, jcf, {});
        plain.assignments_examined += outcome.assignments_examined;
        outcome = std::move(plain);
    }
    if (!outcome.decomposition)
        fail("NotFound", "no decomposition of this shape exists; examined " +
                             std::to_string(outcome.assignments_examined) + " assignments");
    return certify(spectrum, jcf, std::move(*outcome.decomposition), positive_column_mode);
}

UniversalResult universal(const Spectrum& spectrum, int jobs) {
    std::vector<JordanForm> forms = jcf_enumerate(spectrum);
    UniversalResult result;
    result.outcomes.reserve(forms.size());
    for (auto& form : forms) result.outcomes.push_back({std::move(form), UniversalOutcome{}});

    auto attempt = [&](std::size_t index) {
        auto& [form, outcome] = result.outcomes[index];
        try {
            outcome.certificate = realize(spectrum, form);
        } catch (const Error& e) {
            outcome.failure = e.what();
        } catch (const std::exception& e) {
            outcome.failure = std::string("Internal: ") + e.what();
        }
    };

    int workers = std::max(1, std::min<int>(jobs, static_cast<int>(result.outcomes.size())));
    if (workers == 1) {
        for (std::size_t i = 0; i < result.outcomes.size(); ++i) attempt(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < result.outcomes.size();
                     i = next.fetch_add(1))
                    attempt(i);
            });
        for (auto& t : pool) t.join();
    }
    for (const auto& [form, outcome] : result.outcomes)
        if (outcome.certificate) ++result.realized;
    return result;
}

ExactMatrix scale_to_cs(const ExactMatrix& m, const Rational& perron) {
    require(m.square(), "NotSquare", "row-sum scaling of a non-square matrix");
    int n = m.rows();
    StructureReport structure = verify_structure(m);
    require(structure.nonnegative, "InvalidInput", "matrix must be nonnegative");
    require(structure.irreducible, "NotIrreducible", "matrix is not irreducible");
    require(char_poly(m).eval(perron) == 0, "PerronNotRational",
            to_string(perron) + " is not an eigenvalue");

    ExactMatrix shifted = m;
    for (int i = 0; i < n; ++i) shifted.at(i, i) -= perron;
    require(rank(shifted) == n - 1, "NotIrreducible",
            "Perron eigenspace is not one-dimensional");
    std::vector<Rational> x = nullspace_basis(shifted).front();
    for (const auto& entry : x)
        require(entry > 0, "NotIrreducible", "Perron eigenvector has a nonpositive entry");

    ExactMatrix out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out.at(i, j) = m.at(i, j) * x[static_cast<std::size_t>(j)] /
                           x[static_cast<std::size_t>(i)];
    for (int i = 0; i < n; ++i) {
        Rational sum(0);
        for (int j = 0; j < n; ++j) sum += out.at(i, j);
        require(sum == perron, "Internal", "row sums failed to equalize");
    }
    return out;
}

}  // namespace ur
