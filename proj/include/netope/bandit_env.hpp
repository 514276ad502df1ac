#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "netope/graph.hpp"
#include "netope/matrix.hpp"
#include "netope/rng.hpp"

namespace netope {

// Frozen synthetic-environment parameters: reward coefficients, the
// reward-side action embedding table, and noise scale. Drawn once per
// experiment seed.
struct EnvParams {
    int p_dim = 10;
    int d_actions = 2;
    std::vector<double> beta1, beta2, beta3, beta4;  // length p_dim each
    Matrix action_embeddings;                        // d_actions × p_dim
    double b = 1.0;
    double c = 1.0;
    double noise_sd = 1.0;

    static EnvParams sample(int p_dim, int d_actions, double b, double c, double noise_sd, Rng& rng);
};

struct PolicyParams {
    double beta_temp = 0.0;  // behavior-policy selection-bias strength
    double gamma = 0.8;      // evaluation-policy mass on the r_direct argmax
};

struct LoggedDataset {
    NetworkGraph graph;
    Matrix contexts;           // n × p_dim
    std::vector<int> actions;  // 0-based action index per unit
    std::vector<double> rewards;

    int n() const { return graph.n(); }
};

Matrix sample_contexts(int n, int p_dim, Rng& rng);

// Own-action component of the reward; drives both policies.
double r_direct(const EnvParams& env, const double* x, int a);
Matrix r_direct_all(const EnvParams& env, const Matrix& contexts);  // n × D

double signed_cuberoot(double z);

// Full interference reward for one unit. neighbor_embed_mean is the mean of
// the neighbors' action embeddings (zero vector when deg == 0).
double reward_value(const EnvParams& env, const double* x, int a,
                    const double* neighbor_embed_mean, int deg, double eps);

// Noise-free rewards of all units under a joint action assignment.
std::vector<double> rewards_for_assignment(const EnvParams& env, const NetworkGraph& graph,
                                           const Matrix& contexts, const std::vector<int>& actions);

std::vector<double> behavior_propensity_row(const EnvParams& env, const PolicyParams& policy,
                                            const double* x);
Matrix behavior_propensities(const EnvParams& env, const PolicyParams& policy, const Matrix& contexts);

std::vector<double> evaluation_propensity_row(const EnvParams& env, const PolicyParams& policy,
                                              const double* x);
Matrix evaluation_propensities(const EnvParams& env, const PolicyParams& policy, const Matrix& contexts);

// One action per unit, drawn independently from the given propensity rows.
std::vector<int> sample_actions(const Matrix& propensities, Rng& rng);

// Historical log: behavior actions plus noisy interference rewards.
LoggedDataset generate_log(const EnvParams& env, const PolicyParams& policy,
                           const NetworkGraph& graph, const Matrix& contexts, Rng& rng);

inline constexpr int kExhaustiveRollouts = -1;

// Monte-Carlo (noise-free) estimate of V(pi); rollouts == kExhaustiveRollouts
// enumerates all D^n joint assignments (requires D^n <= 2^20).
double true_policy_value(const EnvParams& env, const PolicyParams& policy, const NetworkGraph& graph,
                         const Matrix& contexts, int rollouts, Rng& rng);

void save_env_snapshot(const std::string& path, const EnvParams& env, uint64_t seed);
EnvParams load_env_snapshot(const std::string& path, uint64_t* seed_out = nullptr);

}  // namespace netope
