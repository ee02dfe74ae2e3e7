#ifndef LINCO_CORPUS_HPP
#define LINCO_CORPUS_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace linco {

// One judged case: the triplet of group label, fact description and term of
// penalty (months), plus a stable identifier. Identifiers are unique within
// a group; synthetic corpora reuse the same id across groups for the shared
// fact.
struct Case {
    int group = 0;
    std::string fact;
    double term_months = 0.0;
    std::string id;
};

// K case groups sharing one group-index space (0-based).
struct GroupedCorpus {
    int k = 0;
    std::vector<std::vector<Case>> groups;
    std::string provenance;

    std::size_t total_cases() const {
        std::size_t n = 0;
        for (const auto& g : groups) n += g.size();
        return n;
    }
    std::vector<int> group_sizes() const {
        std::vector<int> s;
        s.reserve(groups.size());
        for (const auto& g : groups) s.push_back(static_cast<int>(g.size()));
        return s;
    }
};

// Throws if invariants are violated (k >= 2, group labels match positions,
// term_months >= 0, facts non-empty).
void validate_corpus(const GroupedCorpus& corpus);

// Reads a JSON Lines corpus: one object per line with fields
// `id`, `group`, `fact`, `term_months`. Line numbers in errors are 1-based.
GroupedCorpus load_corpus(const std::filesystem::path& path, int k);

// Writes the corpus in the same JSON Lines format, groups in order, case
// order preserved. Byte-deterministic for a given corpus.
void save_corpus(const GroupedCorpus& corpus, const std::filesystem::path& path);

// Downsamples every group (uniform, without replacement, seeded) to the
// minimum group size. Groups already at the minimum are kept untouched;
// sampled groups retain their original relative case order.
GroupedCorpus balance_groups(const GroupedCorpus& corpus, std::uint64_t seed);

struct SplitResult {
    GroupedCorpus train;
    GroupedCorpus test;
};

// Per-group seeded shuffle then split. Test size is round-half-up of
// test_fraction * group size, clamped so both halves are non-empty. Each
// group uses a substream derived from (seed, group index), so groups with
// identical content still receive independent partitions.
SplitResult split(const GroupedCorpus& corpus, double test_fraction, std::uint64_t seed);

} // namespace linco

#endif
