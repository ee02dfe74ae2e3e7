#include "linco/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "json.hpp"

#include "linco/errors.hpp"
#include "linco/rng.hpp"

namespace linco {

void validate_corpus(const GroupedCorpus& corpus) {
    if (corpus.k < 2) {
        throw InvalidGroupCount("corpus must have k >= 2 groups, got " + std::to_string(corpus.k));
    }
    if (static_cast<int>(corpus.groups.size()) != corpus.k) {
        throw InvalidGroupCount("corpus has " + std::to_string(corpus.groups.size()) +
                                " group lists but k = " + std::to_string(corpus.k));
    }
    for (int g = 0; g < corpus.k; ++g) {
        for (const Case& c : corpus.groups[g]) {
            if (c.group != g) {
                throw GroupOutOfRange("case '" + c.id + "' labeled group " +
                                      std::to_string(c.group) + " stored in group " + std::to_string(g));
            }
            if (c.term_months < 0.0 || !std::isfinite(c.term_months)) {
                throw MalformedRecord("case '" + c.id + "' has invalid term_months");
            }
            if (c.fact.empty()) {
                throw MalformedRecord("case '" + c.id + "' has empty fact");
            }
        }
    }
}

GroupedCorpus load_corpus(const std::filesystem::path& path, int k) {
    if (k < 2) {
        throw InvalidGroupCount("k must be >= 2, got " + std::to_string(k));
    }
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open corpus file: " + path.string());
    }

    GroupedCorpus corpus;
    corpus.k = k;
    corpus.groups.resize(static_cast<std::size_t>(k));
    corpus.provenance = path.string();

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;

        nlohmann::json rec = nlohmann::json::parse(line, nullptr, false);
        if (rec.is_discarded() || !rec.is_object()) {
            throw MalformedRecord("line " + std::to_string(line_no) + ": not a JSON object");
        }
        for (const char* field : {"id", "group", "fact", "term_months"}) {
            if (!rec.contains(field)) {
                throw MalformedRecord("line " + std::to_string(line_no) +
                                      ": missing field '" + field + "'");
            }
        }
        if (!rec["group"].is_number_integer() || !rec["term_months"].is_number() ||
            !rec["fact"].is_string() || !rec["id"].is_string()) {
            throw MalformedRecord("line " + std::to_string(line_no) + ": field with wrong type");
        }

        Case c;
        c.id = rec["id"].get<std::string>();
        c.group = rec["group"].get<int>();
        c.fact = rec["fact"].get<std::string>();
        c.term_months = rec["term_months"].get<double>();

        if (c.group < 0 || c.group >= k) {
            throw GroupOutOfRange("line " + std::to_string(line_no) + ": group " +
                                  std::to_string(c.group) + " outside [0, " + std::to_string(k) + ")");
        }
        if (c.term_months < 0.0 || !std::isfinite(c.term_months)) {
            throw MalformedRecord("line " + std::to_string(line_no) + ": term_months must be >= 0");
        }
        if (c.fact.empty()) {
            throw MalformedRecord("line " + std::to_string(line_no) + ": fact must be non-empty");
        }
        corpus.groups[static_cast<std::size_t>(c.group)].push_back(std::move(c));
    }

    for (int g = 0; g < k; ++g) {
        if (corpus.groups[static_cast<std::size_t>(g)].empty()) {
            throw EmptyGroup("group " + std::to_string(g) + " has no cases in " + path.string());
        }
    }
    return corpus;
}

void save_corpus(const GroupedCorpus& corpus, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot open for writing: " + path.string());
    }
    for (const auto& group : corpus.groups) {
        for (const Case& c : group) {
            nlohmann::json rec{
                {"id", c.id}, {"group", c.group}, {"fact", c.fact}, {"term_months", c.term_months}};
            out << rec.dump() << '\n';
        }
    }
    if (!out) {
        throw IoError("write failed: " + path.string());
    }
}

GroupedCorpus balance_groups(const GroupedCorpus& corpus, std::uint64_t seed) {
    std::size_t min_size = SIZE_MAX;
    for (int g = 0; g < corpus.k; ++g) {
        const auto& group = corpus.groups[static_cast<std::size_t>(g)];
        if (group.empty()) {
            throw EmptyGroup("group " + std::to_string(g) + " is empty");
        }
        min_size = std::min(min_size, group.size());
    }

    GroupedCorpus out;
    out.k = corpus.k;
    out.provenance = corpus.provenance;
    out.groups.resize(corpus.groups.size());
    for (int g = 0; g < corpus.k; ++g) {
        const auto& group = corpus.groups[static_cast<std::size_t>(g)];
        if (group.size() == min_size) {
            out.groups[static_cast<std::size_t>(g)] = group;
            continue;
        }
        Rng rng = derive_stream(seed, {0x62616Cu /* "bal" */, static_cast<std::uint64_t>(g)});
        std::vector<std::size_t> order = shuffled_indices(group.size(), rng);
        order.resize(min_size);
        std::sort(order.begin(), order.end());
        auto& dst = out.groups[static_cast<std::size_t>(g)];
        dst.reserve(min_size);
        for (const std::size_t i : order) dst.push_back(group[i]);
    }
    return out;
}

SplitResult split(const GroupedCorpus& corpus, double test_fraction, std::uint64_t seed) {
    if (!(test_fraction > 0.0 && test_fraction < 1.0)) {
        throw DomainError("test_fraction must be in (0, 1)");
    }
    SplitResult result;
    result.train.k = result.test.k = corpus.k;
    result.train.provenance = result.test.provenance = corpus.provenance;
    result.train.groups.resize(corpus.groups.size());
    result.test.groups.resize(corpus.groups.size());

    for (int g = 0; g < corpus.k; ++g) {
        const auto& group = corpus.groups[static_cast<std::size_t>(g)];
        const std::size_t n = group.size();
        if (n < 2) {
            throw GroupTooSmall("group " + std::to_string(g) + " has " + std::to_string(n) +
                                " cases; need >= 2 to split");
        }
        // Round half up, then clamp so both halves are non-empty.
        std::size_t n_test = static_cast<std::size_t>(
            std::floor(test_fraction * static_cast<double>(n) + 0.5));
        n_test = std::clamp<std::size_t>(n_test, 1, n - 1);

        Rng rng = derive_stream(seed, {0x73706C69u /* "spli" */, static_cast<std::uint64_t>(g)});
        const std::vector<std::size_t> order = shuffled_indices(n, rng);

        auto& test_dst = result.test.groups[static_cast<std::size_t>(g)];
        auto& train_dst = result.train.groups[static_cast<std::size_t>(g)];
        test_dst.reserve(n_test);
        train_dst.reserve(n - n_test);
        for (std::size_t i = 0; i < n; ++i) {
            (i < n_test ? test_dst : train_dst).push_back(group[order[i]]);
        }
    }
    return result;
}

} // namespace linco
