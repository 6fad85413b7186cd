#include "ur/verify.hpp"

#include <algorithm>

namespace ur {

bool verify_spectrum(const ExactMatrix& m, const Spectrum& spectrum) {
    if (!m.square() || m.rows() != spectrum.size()) return false;
    return char_poly(m) == poly_from_roots(spectrum.roots());
}

WeyrProfile weyr_profile(const ExactMatrix& m, const GaussianRational& lambda) {
    require(m.square(), "NotSquare", "Weyr profile of a non-square matrix");
    int n = m.rows();
    ComplexMatrix shifted = complexify(m);
    for (int i = 0; i < n; ++i) shifted.at(i, i) = shifted.at(i, i) - lambda;

    WeyrProfile profile{lambda, {n}, {}};
    ComplexMatrix power = shifted;
    int prev_rank = n;
    while (true) {
        int r = rank(power);
        if (r == prev_rank) break;
        profile.ranks.push_back(r);
        prev_rank = r;
        if (r == 0) break;
        power = power * shifted;
    }
    // w_k = r_{k-1} - r_k counts blocks of size >= k; the difference
    // w_k - w_{k+1} counts blocks of size exactly k.
    int depth = static_cast<int>(profile.ranks.size()) - 1;
    for (int k = 1; k <= depth; ++k) {
        int wk = profile.ranks[static_cast<std::size_t>(k - 1)] -
                 profile.ranks[static_cast<std::size_t>(k)];
        int wk1 = k < depth ? profile.ranks[static_cast<std::size_t>(k)] -
                                  profile.ranks[static_cast<std::size_t>(k + 1)]
                            : 0;
        for (int i = 0; i < wk - wk1; ++i) profile.partition.push_back(k);
    }
    std::sort(profile.partition.begin(), profile.partition.end(), std::greater<int>());
    return profile;
}

bool verify_jcf(const ExactMatrix& m, const JordanForm& jcf) {
    if (!m.square() || jcf.total_size() != m.rows()) return false;
    for (const auto& [value, partition] : jcf.blocks()) {
        WeyrProfile profile = weyr_profile(m, value);
        if (profile.partition != partition) return false;
    }
    return true;
}

namespace {

// Reachability of every node from `start` along the directed nonzero pattern,
// following rows (forward) or columns (backward).
bool spans_from(const ExactMatrix& m, int start, bool forward) {
    int n = m.rows();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<int> stack{start};
    seen[static_cast<std::size_t>(start)] = true;
    int count = 1;
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (int j = 0; j < n; ++j) {
            if (seen[static_cast<std::size_t>(j)]) continue;
            const Rational& edge = forward ? m.at(i, j) : m.at(j, i);
            if (edge == 0) continue;
            seen[static_cast<std::size_t>(j)] = true;
            ++count;
            stack.push_back(j);
        }
    }
    return count == n;
}

}  // namespace

StructureReport verify_structure(const ExactMatrix& m) {
    require(m.square(), "NotSquare", "structure report of a non-square matrix");
    int n = m.rows();
    StructureReport report;
    report.nonnegative = true;
    for (int i = 0; i < n && report.nonnegative; ++i)
        for (int j = 0; j < n; ++j)
            if (m.at(i, j) < 0) {
                report.nonnegative = false;
                break;
            }
    for (int j = 0; j < n; ++j) {
        bool positive = true;
        for (int i = 0; i < n; ++i)
            if (m.at(i, j) <= 0) {
                positive = false;
                break;
            }
        if (positive) report.positive_columns.push_back(j);
    }
    report.irreducible = spans_from(m, 0, true) && spans_from(m, 0, false);
    Rational first_sum(0);
    bool constant = true;
    for (int i = 0; i < n; ++i) {
        Rational sum(0);
        for (int j = 0; j < n; ++j) sum += m.at(i, j);
        if (i == 0)
            first_sum = sum;
        else if (sum != first_sum)
            constant = false;
    }
    if (constant) report.cs_value = first_sum;
    return report;
}

}  // namespace ur
