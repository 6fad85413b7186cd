#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "ur/rational.hpp"

namespace ur {

/// Conjugate-closed multiset of eigenvalues with a distinguished Perron
/// entry: a real positive element of maximal modulus. A tie in modulus with
/// a distinct entry is rejected (PerronAmbiguous) because every construction
/// here needs a simple dominant root.
class Spectrum {
  public:
    /// (value, multiplicity) pairs, canonically sorted by (re, im).
    using Entry = std::pair<GaussianRational, int>;

    Spectrum(const Roots& roots, const Rational& perron);
    /// Auto-detects the Perron entry: the positive real element of maximal
    /// modulus.
    static Spectrum with_auto_perron(const Roots& roots);

    const std::vector<Entry>& entries() const { return entries_; }
    const Rational& perron() const { return perron_; }
    int size() const { return size_; }
    Roots roots() const;
    int multiplicity(const GaussianRational& value) const;

    /// True iff every entry other than one copy of the Perron root has
    /// nonpositive real part.
    bool left_half_plane() const;
    /// True iff the Perron root is simple and strictly exceeds the modulus
    /// of every other entry. (Equal-modulus ties are already excluded at
    /// construction, so this only checks simplicity.)
    bool strictly_dominant() const { return multiplicity(GaussianRational(perron_)) == 1; }

    bool operator==(const Spectrum& other) const {
        return perron_ == other.perron_ && entries_ == other.entries_;
    }

    std::string str() const;

  private:
    Spectrum() = default;
    std::vector<Entry> entries_;
    Rational perron_;
    int size_ = 0;
};

struct SpectrumClass {
    bool left_half_plane = false;
    bool suleimanova = false;
    bool smigoc_type = false;
    bool trace_nonneg = false;
};

/// Jordan canonical form as a map from distinct eigenvalue to the multiset of
/// its block sizes (partition, descending). Conjugate eigenvalues carry
/// identical partitions.
class JordanForm {
  public:
    using Entry = std::pair<GaussianRational, std::vector<int>>;

    JordanForm() = default;
    explicit JordanForm(std::vector<Entry> blocks);

    static JordanForm diagonal_of(const Spectrum& spectrum);

    const std::vector<Entry>& blocks() const { return blocks_; }
    const std::vector<int>* partition_of(const GaussianRational& value) const;
    int total_size() const;
    bool is_diagonal() const;

    /// Partition parts sum to each eigenvalue's multiplicity, conjugate
    /// eigenvalues carry equal partitions, total size matches.
    bool consistent_with(const Spectrum& spectrum) const;

    bool operator==(const JordanForm& other) const { return blocks_ == other.blocks_; }
    bool operator<(const JordanForm& other) const;

    std::string str() const;

  private:
    std::vector<Entry> blocks_;  // sorted by eigenvalue, partitions descending
};

/// Exact k-th power sum of the spectrum (imaginary parts cancel).
Rational power_sum(const Spectrum& spectrum, int k);
Rational power_sum(const Roots& roots, int k);

/// Membership flags, all decided by exact squared comparisons; the sqrt(3)
/// condition is evaluated as 3*(re)^2 >= (im)^2 together with the sign
/// constraints.
SpectrumClass classify(const Spectrum& spectrum);

enum class Verdict { Realizable, NotRealizable, Inapplicable };

struct RealizabilityResult {
    Verdict verdict;
    Rational s1;
    Rational s2;
    std::string reason;  // set when not Realizable
};

/// Realizability test for left half-plane lists: s1 >= 0, s2 >= 0 and
/// s1^2 <= n*s2 decide; anything outside the left half-plane setting is
/// Inapplicable.
RealizabilityResult ls_realizable(const Spectrum& spectrum);

/// Integer partitions of n in descending lexicographic order ([n] first,
/// all-ones last).
std::vector<std::vector<int>> partitions_of(int n);

/// Every Jordan form the spectrum admits: the Cartesian product of the
/// partition choices per distinct eigenvalue, with conjugate pairs sharing
/// one choice. Deterministic order: eigenvalue classes ascending by (re, im)
/// of their representative, partitions descending lexicographic, last class
/// varying fastest. The all-single-block form comes first, the diagonal form
/// last.
std::vector<JordanForm> jcf_enumerate(const Spectrum& spectrum);

}  // namespace ur
