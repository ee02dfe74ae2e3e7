#include "linco/synth.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "json.hpp"

#include "linco/errors.hpp"
#include "linco/rng.hpp"

namespace linco {

ScalingParams group_scaling_params(double beta, int k, int g) {
    if (k < 2) {
        throw InvalidGroupCount("group scaling needs k >= 2, got " + std::to_string(k));
    }
    if (g < 0 || g >= k) {
        throw GroupOutOfRange("group " + std::to_string(g) + " outside [0, " + std::to_string(k) + ")");
    }
    if (beta < 0.0) {
        throw DomainError("beta must be >= 0");
    }
    ScalingParams p;
    p.mu = 1.0 - beta + 2.0 * static_cast<double>(g) * beta / static_cast<double>(k - 1);
    p.sigma = std::abs(1.0 - p.mu) / 3.0;
    return p;
}

double perturb_term(double y_o, double gamma) {
    return std::max(0.0, gamma * y_o);
}

SyntheticCorpus generate_synthetic(const std::vector<BaseCase>& base, const SyntheticSpec& spec) {
    if (spec.k < 2) {
        throw InvalidGroupCount("synthetic spec needs k >= 2, got " + std::to_string(spec.k));
    }
    if (base.empty()) {
        throw DomainError("base case list is empty");
    }
    if (spec.beta < 0.0) {
        throw DomainError("beta must be >= 0");
    }

    SyntheticCorpus out;
    out.corpus.k = spec.k;
    out.corpus.groups.resize(static_cast<std::size_t>(spec.k));
    {
        char buf[96];
        std::snprintf(buf, sizeof(buf), "synthetic beta=%g k=%d n=%zu seed=%llu", spec.beta,
                      spec.k, base.size(), static_cast<unsigned long long>(spec.seed));
        out.corpus.provenance = buf;
    }
    out.judges.resize(static_cast<std::size_t>(spec.k));

    for (int g = 0; g < spec.k; ++g) {
        const ScalingParams sp = group_scaling_params(spec.beta, spec.k, g);
        auto& group = out.corpus.groups[static_cast<std::size_t>(g)];
        auto& judge = out.judges[static_cast<std::size_t>(g)];
        group.reserve(base.size());
        judge.group = g;
        judge.labels.reserve(base.size());

        for (std::size_t i = 0; i < base.size(); ++i) {
            // z depends only on (seed, g, i); mu and sigma scale it outside
            // the stream so a beta sweep at fixed seed shares its noise.
            Rng stream = derive_stream(spec.seed, {0x67616Du /* "gam" */,
                                                   static_cast<std::uint64_t>(g), i});
            const double z = stream.next_normal();
            const double gamma = sp.mu + sp.sigma * z;
            const double term = perturb_term(base[i].term_months, gamma);

            Case c;
            c.group = g;
            c.fact = base[i].fact;
            c.term_months = term;
            c.id = base[i].id;
            group.push_back(std::move(c));
            judge.labels.emplace(base[i].id, term);
        }
    }
    return out;
}

namespace {

constexpr std::array<const char*, 6> kVenues{
    "at a bus station", "in a snack bar",         "in a shopping mall",
    "at a building site", "in a residential block", "at a night market"};

constexpr std::array<int, 10> kAmounts{500,  1200,  2500,  4000,  6500,
                                       9000, 13000, 20000, 32000, 50000};

constexpr std::array<const char*, 4> kPriors{"no prior record", "one prior conviction",
                                             "two prior convictions", "three prior convictions"};

// Cumulative probabilities for the prior-record levels {0.5, 0.25, 0.15, 0.1}.
constexpr std::array<double, 4> kPriorCum{0.5, 0.75, 0.9, 1.0};

int pick_prior(double u) {
    for (int i = 0; i < 3; ++i) {
        if (u < kPriorCum[static_cast<std::size_t>(i)]) return i;
    }
    return 3;
}

} // namespace

std::vector<BaseCase> generate_base_cases(int n, std::uint64_t seed) {
    if (n < 1) {
        throw DomainError("n must be >= 1");
    }
    std::vector<BaseCase> out;
    out.reserve(static_cast<std::size_t>(n));

    for (int i = 0; i < n; ++i) {
        Rng rng = derive_stream(seed, {0x62617365u /* "base" */, static_cast<std::uint64_t>(i)});
        const int value_bucket = static_cast<int>(rng.next_below(kAmounts.size()));
        const int prior = pick_prior(rng.next_unit());
        const bool violent = rng.next_unit() <= 0.3;
        const int venue = static_cast<int>(rng.next_below(kVenues.size()));
        const bool restitution = rng.next_unit() <= 0.35;
        const double noise = std::clamp(rng.next_normal(0.0, 0.12), -0.36, 0.36);

        const double log_term = 1.63 + 0.13 * value_bucket + 0.17 * prior +
                                0.38 * (violent ? 1.0 : 0.0) +
                                0.04 * (venue - 2.5) -
                                0.22 * (restitution ? 1.0 : 0.0) + noise;

        BaseCase bc;
        {
            char buf[16];
            std::snprintf(buf, sizeof(buf), "b%06d", i);
            bc.id = buf;
        }
        bc.term_months = std::expm1(log_term);

        std::string fact = "Docket " + std::to_string(100000 + i) + ". The defendant " +
                           kVenues[static_cast<std::size_t>(venue)] + " stole goods worth " +
                           std::to_string(kAmounts[static_cast<std::size_t>(value_bucket)]) +
                           " yuan. Prior record: " + kPriors[static_cast<std::size_t>(prior)] + ".";
        if (violent) fact += " Violence was used against the victim.";
        if (restitution) fact += " The goods were returned and the victim compensated.";
        bc.fact = std::move(fact);
        out.push_back(std::move(bc));
    }
    return out;
}

double golden_predict(const GoldenJudge& judge, const std::string& case_id) {
    const auto it = judge.labels.find(case_id);
    if (it == judge.labels.end()) {
        throw UnknownCase("golden judge for group " + std::to_string(judge.group) +
                          " has no label for case '" + case_id + "'");
    }
    return it->second;
}

void save_golden_sidecar(const std::vector<GoldenJudge>& judges,
                         const std::filesystem::path& path) {
    nlohmann::json root;
    root["k"] = judges.size();
    nlohmann::json groups = nlohmann::json::array();
    for (const GoldenJudge& j : judges) {
        nlohmann::json labels = nlohmann::json::object();
        // Sort ids so the file is byte-deterministic.
        std::vector<const std::string*> ids;
        ids.reserve(j.labels.size());
        for (const auto& [id, term] : j.labels) ids.push_back(&id);
        std::sort(ids.begin(), ids.end(), [](const auto* a, const auto* b) { return *a < *b; });
        for (const auto* id : ids) labels[*id] = j.labels.at(*id);
        groups.push_back({{"group", j.group}, {"labels", std::move(labels)}});
    }
    root["groups"] = std::move(groups);

    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot open for writing: " + path.string());
    }
    out << root.dump(2) << '\n';
    if (!out) {
        throw IoError("write failed: " + path.string());
    }
}

std::vector<GoldenJudge> load_golden_sidecar(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open golden sidecar: " + path.string());
    }
    nlohmann::json root = nlohmann::json::parse(in, nullptr, false);
    if (root.is_discarded() || !root.contains("groups")) {
        throw MalformedRecord("golden sidecar is not valid JSON: " + path.string());
    }
    std::vector<GoldenJudge> judges;
    for (const auto& rec : root["groups"]) {
        GoldenJudge j;
        j.group = rec.at("group").get<int>();
        for (const auto& [id, term] : rec.at("labels").items()) {
            j.labels.emplace(id, term.get<double>());
        }
        judges.push_back(std::move(j));
    }
    return judges;
}

} // namespace linco
