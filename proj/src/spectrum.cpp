#include "ur/spectrum.hpp"

#include <algorithm>
#include <map>

namespace ur {

namespace {

std::vector<Spectrum::Entry> collect_entries(const Roots& roots) {
    std::map<std::pair<Rational, Rational>, int> counts;
    for (const auto& r : roots) counts[{r.re, r.im}]++;
    std::vector<Spectrum::Entry> entries;
    entries.reserve(counts.size());
    for (const auto& [key, mult] : counts)
        entries.push_back({GaussianRational(key.first, key.second), mult});
    return entries;
}

}  // namespace

Spectrum::Spectrum(const Roots& roots, const Rational& perron) {
    require(!roots.empty(), "InvalidInput", "empty spectrum");
    require(conjugate_closed(roots), "NotConjugateClosed",
            "spectrum is not closed under conjugation");
    require(perron > 0, "InvalidInput", "Perron entry must be positive");
    entries_ = collect_entries(roots);
    perron_ = perron;
    size_ = static_cast<int>(roots.size());
    bool present = false;
    const Rational perron_norm2 = perron * perron;
    for (const auto& [value, mult] : entries_) {
        (void)mult;
        if (value == GaussianRational(perron)) present = true;
        Rational n2 = value.norm2();
        require(n2 <= perron_norm2, "InvalidInput",
                "entry " + to_string(value) + " exceeds the Perron modulus");
        require(n2 < perron_norm2 || value == GaussianRational(perron), "PerronAmbiguous",
                "entry " + to_string(value) + " ties the Perron modulus");
    }
    require(present, "InvalidInput", "Perron entry is not an element of the spectrum");
}

Spectrum Spectrum::with_auto_perron(const Roots& roots) {
    require(!roots.empty(), "InvalidInput", "empty spectrum");
    const GaussianRational* best = nullptr;
    for (const auto& r : roots)
        if (r.is_real() && r.re > 0 && (!best || r.re > best->re)) best = &r;
    require(best != nullptr, "InvalidInput", "no positive real entry to take as Perron root");
    return Spectrum(roots, best->re);
}

Roots Spectrum::roots() const {
    Roots out;
    out.reserve(static_cast<std::size_t>(size_));
    for (const auto& [value, mult] : entries_)
        for (int i = 0; i < mult; ++i) out.push_back(value);
    return out;
}

int Spectrum::multiplicity(const GaussianRational& value) const {
    for (const auto& [v, mult] : entries_)
        if (v == value) return mult;
    return 0;
}

bool Spectrum::left_half_plane() const {
    for (const auto& [value, mult] : entries_) {
        if (value == GaussianRational(perron_)) {
            if (mult > 1) return false;  // extra copies sit in the right half-plane
            continue;
        }
        if (value.re > 0) return false;
    }
    return true;
}

std::string Spectrum::str() const {
    std::string out = "{";
    bool first = true;
    for (const auto& [value, mult] : entries_) {
        for (int i = 0; i < mult; ++i) {
            if (!first) out += ", ";
            out += to_string(value);
            first = false;
        }
    }
    return out + "}";
}

JordanForm::JordanForm(std::vector<Entry> blocks) : blocks_(std::move(blocks)) {
    for (auto& [value, partition] : blocks_) {
        (void)value;
        std::sort(partition.begin(), partition.end(), std::greater<int>());
        for (int part : partition)
            require(part > 0, "InvalidInput", "Jordan block sizes must be positive");
    }
    std::sort(blocks_.begin(), blocks_.end(),
              [](const Entry& a, const Entry& b) { return (a.first <=> b.first) < 0; });
    for (std::size_t i = 1; i < blocks_.size(); ++i)
        require(!(blocks_[i].first == blocks_[i - 1].first), "InvalidInput",
                "duplicate eigenvalue in Jordan form");
}

JordanForm JordanForm::diagonal_of(const Spectrum& spectrum) {
    std::vector<Entry> blocks;
    for (const auto& [value, mult] : spectrum.entries())
        blocks.push_back({value, std::vector<int>(static_cast<std::size_t>(mult), 1)});
    return JordanForm(std::move(blocks));
}

const std::vector<int>* JordanForm::partition_of(const GaussianRational& value) const {
    for (const auto& [v, partition] : blocks_)
        if (v == value) return &partition;
    return nullptr;
}

int JordanForm::total_size() const {
    int total = 0;
    for (const auto& [value, partition] : blocks_) {
        (void)value;
        for (int part : partition) total += part;
    }
    return total;
}

bool JordanForm::is_diagonal() const {
    for (const auto& [value, partition] : blocks_) {
        (void)value;
        for (int part : partition)
            if (part != 1) return false;
    }
    return true;
}

bool JordanForm::consistent_with(const Spectrum& spectrum) const {
    if (total_size() != spectrum.size()) return false;
    if (blocks_.size() != spectrum.entries().size()) return false;
    for (const auto& [value, partition] : blocks_) {
        int sum = 0;
        for (int part : partition) sum += part;
        if (sum != spectrum.multiplicity(value)) return false;
        if (!value.is_real()) {
            const std::vector<int>* mirror = partition_of(value.conj());
            if (mirror == nullptr || *mirror != partition) return false;
        }
    }
    return true;
}

bool JordanForm::operator<(const JordanForm& other) const {
    auto cmp = [](const Entry& a, const Entry& b) {
        if (auto c = a.first <=> b.first; c != 0) return c < 0;
        return a.second < b.second;
    };
    return std::lexicographical_compare(blocks_.begin(), blocks_.end(), other.blocks_.begin(),
                                        other.blocks_.end(), cmp);
}

std::string JordanForm::str() const {
    std::string out;
    for (const auto& [value, partition] : blocks_) {
        for (int part : partition) {
            if (!out.empty()) out += " + ";
            out += "J" + std::to_string(part) + "(" + to_string(value) + ")";
        }
    }
    return out;
}

Rational power_sum(const Roots& roots, int k) {
    require(k >= 1, "InvalidInput", "power sums need k >= 1");
    GaussianRational total(Rational(0));
    for (const auto& r : roots) total = total + pow(r, k);
    require(total.im == 0, "Internal", "imaginary power sum of a conjugate-closed list");
    return total.re;
}

Rational power_sum(const Spectrum& spectrum, int k) {
    require(k >= 1, "InvalidInput", "power sums need k >= 1");
    GaussianRational total(Rational(0));
    for (const auto& [value, mult] : spectrum.entries())
        total = total + pow(value, k) * Rational(mult);
    require(total.im == 0, "Internal", "imaginary power sum of a conjugate-closed spectrum");
    return total.re;
}

SpectrumClass classify(const Spectrum& spectrum) {
    SpectrumClass result;
    result.left_half_plane = spectrum.left_half_plane();
    result.trace_nonneg = power_sum(spectrum, 1) >= 0;
    bool suleimanova = result.left_half_plane;
    bool smigoc = result.left_half_plane;
    bool perron_seen = false;
    for (const auto& [value, mult] : spectrum.entries()) {
        int copies = mult;
        if (!perron_seen && value == GaussianRational(spectrum.perron())) {
            perron_seen = true;
            copies -= 1;  // the Perron copy is exempt from the cone conditions
        }
        if (copies == 0) continue;
        Rational re2 = value.re * value.re;
        Rational im2 = value.im * value.im;
        if (re2 < im2) suleimanova = false;
        if (3 * re2 < im2) smigoc = false;
    }
    result.suleimanova = suleimanova;
    result.smigoc_type = smigoc;
    return result;
}

RealizabilityResult ls_realizable(const Spectrum& spectrum) {
    RealizabilityResult result{Verdict::Inapplicable, power_sum(spectrum, 1),
                               power_sum(spectrum, 2), ""};
    if (!spectrum.left_half_plane()) {
        result.reason = "Inapplicable: spectrum is not a left half-plane list";
        return result;
    }
    const Rational& s1 = result.s1;
    const Rational& s2 = result.s2;
    Rational n(spectrum.size());
    if (s1 < 0) {
        result.verdict = Verdict::NotRealizable;
        result.reason = "NotRealizable: s1=" + to_string(s1) + " < 0";
    } else if (s2 < 0) {
        result.verdict = Verdict::NotRealizable;
        result.reason = "NotRealizable: s2=" + to_string(s2) + " < 0";
    } else if (s1 * s1 > n * s2) {
        result.verdict = Verdict::NotRealizable;
        result.reason = "NotRealizable: s1^2=" + to_string(Rational(s1 * s1)) +
                        " > n*s2=" + to_string(Rational(n * s2));
    } else {
        result.verdict = Verdict::Realizable;
    }
    return result;
}

std::vector<std::vector<int>> partitions_of(int n) {
    require(n >= 0, "InvalidInput", "partitions of a negative integer");
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    // Descending lexicographic order: largest first part first.
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            current.push_back(part);
            self(self, remaining - part, part);
            current.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

std::vector<JordanForm> jcf_enumerate(const Spectrum& spectrum) {
    // One class per real eigenvalue, one per conjugate pair (representative
    // with positive imaginary part), ascending by the representative.
    struct Class {
        GaussianRational representative;
        int multiplicity;
        bool is_pair;
    };
    std::vector<Class> classes;
    for (const auto& [value, mult] : spectrum.entries()) {
        if (value.im < 0) continue;  // the pair is handled at its representative
        classes.push_back({value, mult, !value.is_real()});
    }
    std::vector<std::vector<std::vector<int>>> choices;
    choices.reserve(classes.size());
    for (const auto& cls : classes) choices.push_back(partitions_of(cls.multiplicity));

    std::vector<JordanForm> forms;
    std::vector<std::size_t> odometer(classes.size(), 0);
    while (true) {
        std::vector<JordanForm::Entry> blocks;
        for (std::size_t i = 0; i < classes.size(); ++i) {
            const auto& partition = choices[i][odometer[i]];
            blocks.push_back({classes[i].representative, partition});
            if (classes[i].is_pair) blocks.push_back({classes[i].representative.conj(), partition});
        }
        forms.push_back(JordanForm(std::move(blocks)));
        // Advance, last class fastest.
        std::size_t pos = classes.size();
        while (pos > 0) {
            --pos;
            if (++odometer[pos] < choices[pos].size()) break;
            odometer[pos] = 0;
            if (pos == 0) return forms;
        }
        if (classes.empty()) return forms;
    }
}

}  // namespace ur
