#ifndef LINCO_SYNTH_HPP
#define LINCO_SYNTH_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "linco/corpus.hpp"

namespace linco {

// Parameters of a controlled synthetic corpus. beta is the inconsistency
// factor: group g's terms are scaled by gamma ~ N(mu_g, sigma_g^2) with
// mu_g = 1 - beta + 2*g*beta/(k-1) and sigma_g = |1 - mu_g| / 3, so the
// group scalings span [1-beta, 1+beta].
struct SyntheticSpec {
    double beta = 0.0;
    int k = 2;
    int n = 1000;
    std::uint64_t seed = 0;
};

// An unperturbed source case: shared fact plus the base term y_o > 0.
struct BaseCase {
    std::string fact;
    double term_months = 0.0;
    std::string id;
};

// Oracle judge for one synthetic group: maps base-case id to the perturbed
// term that group received. Used to compute golden metric values free of
// model misspecification.
struct GoldenJudge {
    int group = -1;
    std::unordered_map<std::string, double> labels;
};

struct ScalingParams {
    double mu = 1.0;
    double sigma = 0.0;
};

// mu = 1 - beta + 2*g*beta/(k-1), sigma = |1 - mu| / 3.
ScalingParams group_scaling_params(double beta, int k, int g);

// max{0, gamma * y_o}.
double perturb_term(double y_o, double gamma);

struct SyntheticCorpus {
    GroupedCorpus corpus;
    std::vector<GoldenJudge> judges;
};

// Builds the K-group corpus: every group holds all base facts; group g's
// term for base case i is perturb_term(y_o_i, gamma) with gamma drawn from
// a substream derived from (spec.seed, g, i). The standard-normal draw in
// gamma depends only on (seed, g, i), not on beta, so sweeping beta with a
// fixed seed reuses the same underlying noise.
SyntheticCorpus generate_synthetic(const std::vector<BaseCase>& base, const SyntheticSpec& spec);

// Template-generated toy cases: the fact text renders discrete latent
// severity features (stolen-value bucket, prior record, violence,
// restitution, venue) and the term is a fixed log-space function of those
// features plus bounded noise, so a linear model on character n-grams can
// learn the mapping. Terms are right-skewed with median near 10 months.
std::vector<BaseCase> generate_base_cases(int n, std::uint64_t seed);

// Looks up the stored perturbed term; throws UnknownCase for absent ids.
double golden_predict(const GoldenJudge& judge, const std::string& case_id);

// Sidecar golden-label file: JSON mapping (group, case id) -> golden term.
void save_golden_sidecar(const std::vector<GoldenJudge>& judges,
                         const std::filesystem::path& path);
std::vector<GoldenJudge> load_golden_sidecar(const std::filesystem::path& path);

} // namespace linco

#endif
