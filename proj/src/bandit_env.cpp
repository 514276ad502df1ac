#include "netope/bandit_env.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "netope/kernels.hpp"

namespace netope {

EnvParams EnvParams::sample(int p_dim, int d_actions, double b, double c, double noise_sd, Rng& rng) {
    if (p_dim < 1) throw parameter_error("env: p_dim must be >= 1");
    if (d_actions < 2) throw parameter_error("env: d_actions must be >= 2");
    if (noise_sd < 0.0) throw parameter_error("env: noise_sd must be >= 0");
    EnvParams env;
    env.p_dim = p_dim;
    env.d_actions = d_actions;
    env.b = b;
    env.c = c;
    env.noise_sd = noise_sd;
    auto draw_vec = [&](std::vector<double>& v) {
        v.resize(p_dim);
        for (double& x : v) x = rng.normal();
    };
    draw_vec(env.beta1);
    draw_vec(env.beta2);
    draw_vec(env.beta3);
    draw_vec(env.beta4);
    env.action_embeddings = Matrix(d_actions, p_dim);
    for (int a = 0; a < d_actions; ++a)
        for (int j = 0; j < p_dim; ++j) env.action_embeddings(a, j) = rng.normal();
    return env;
}

Matrix sample_contexts(int n, int p_dim, Rng& rng) {
    if (n < 1 || p_dim < 1) throw parameter_error("sample_contexts: n and p_dim must be >= 1");
    Matrix x(n, p_dim);
    for (size_t i = 0; i < x.size(); ++i) x.data()[i] = rng.normal();
    return x;
}

double signed_cuberoot(double z) { return std::cbrt(z); }

double r_direct(const EnvParams& env, const double* x, int a) {
    if (a < 0 || a >= env.d_actions) throw parameter_error("r_direct: action out of range");
    const size_t p = env.p_dim;
    const double t1 = kernels::dot(env.beta1.data(), x, p) *
                      std::pow(1.5, kernels::dot(env.beta2.data(), x, p));
    const double s = kernels::dot(env.beta3.data(), x, p) +
                     kernels::dot(env.action_embeddings.row(a), x, p);
    return t1 + s * s;
}

Matrix r_direct_all(const EnvParams& env, const Matrix& contexts) {
    Matrix out(contexts.rows(), env.d_actions);
    const size_t p = env.p_dim;
    for (size_t i = 0; i < contexts.rows(); ++i) {
        const double* x = contexts.row(i);
        const double t1 = kernels::dot(env.beta1.data(), x, p) *
                          std::pow(1.5, kernels::dot(env.beta2.data(), x, p));
        const double b3x = kernels::dot(env.beta3.data(), x, p);
        for (int a = 0; a < env.d_actions; ++a) {
            const double s = b3x + kernels::dot(env.action_embeddings.row(a), x, p);
            out(i, a) = t1 + s * s;
        }
    }
    return out;
}

double reward_value(const EnvParams& env, const double* x, int a,
                    const double* neighbor_embed_mean, int deg, double eps) {
    if (a < 0 || a >= env.d_actions) throw parameter_error("reward: action out of range");
    const size_t p = env.p_dim;
    const double t1 = kernels::dot(env.beta1.data(), x, p) *
                      std::pow(1.5, kernels::dot(env.beta2.data(), x, p));
    const double own = kernels::dot(env.beta3.data(), x, p) +
                       kernels::dot(env.action_embeddings.row(a), x, p);
    double inner = t1 + env.b * own * own;
    if (deg > 0) {
        const double nbr = kernels::dot(env.beta4.data(), x, p) +
                           kernels::dot(neighbor_embed_mean, x, p);
        inner += env.c * nbr * nbr * std::sqrt(static_cast<double>(deg));
    }
    return signed_cuberoot(inner) + eps;
}

std::vector<double> rewards_for_assignment(const EnvParams& env, const NetworkGraph& graph,
                                           const Matrix& contexts, const std::vector<int>& actions) {
    const int n = graph.n();
    if (static_cast<int>(contexts.rows()) != n || static_cast<int>(actions.size()) != n)
        throw shape_error("rewards_for_assignment: sizes disagree");
    Matrix embed_rows(n, env.p_dim);
    for (int i = 0; i < n; ++i) {
        const double* e = env.action_embeddings.row(actions[i]);
        std::copy(e, e + env.p_dim, embed_rows.row(i));
    }
    Matrix nbr = neighbor_mean(graph, embed_rows);
    std::vector<double> r(n);
    for (int i = 0; i < n; ++i)
        r[i] = reward_value(env, contexts.row(i), actions[i], nbr.row(i), graph.degree(i), 0.0);
    return r;
}

std::vector<double> behavior_propensity_row(const EnvParams& env, const PolicyParams& policy,
                                            const double* x) {
    std::vector<double> scores(env.d_actions);
    for (int a = 0; a < env.d_actions; ++a) {
        scores[a] = r_direct(env, x, a) * policy.beta_temp;
        if (!std::isfinite(scores[a]))
            throw numeric_error("behavior policy: non-finite r_direct score");
    }
    const double m = *std::max_element(scores.begin(), scores.end());
    double z = 0.0;
    for (double& s : scores) {
        s = std::exp(s - m);
        z += s;
    }
    for (double& s : scores) s /= z;
    return scores;
}

Matrix behavior_propensities(const EnvParams& env, const PolicyParams& policy, const Matrix& contexts) {
    Matrix out(contexts.rows(), env.d_actions);
    for (size_t i = 0; i < contexts.rows(); ++i) {
        const auto row = behavior_propensity_row(env, policy, contexts.row(i));
        std::copy(row.begin(), row.end(), out.row(i));
    }
    return out;
}

std::vector<double> evaluation_propensity_row(const EnvParams& env, const PolicyParams& policy,
                                              const double* x) {
    const int d = env.d_actions;
    if (!(policy.gamma >= 0.0 && policy.gamma <= 1.0))
        throw parameter_error("evaluation policy: gamma must be in [0,1]");
    if (d == 1 && policy.gamma < 1.0)
        throw parameter_error("evaluation policy: D = 1 requires gamma = 1");
    int best = 0;
    double best_score = r_direct(env, x, 0);
    for (int a = 1; a < d; ++a) {
        const double s = r_direct(env, x, a);
        if (s > best_score) {  // ties keep the lowest action index
            best_score = s;
            best = a;
        }
    }
    std::vector<double> probs(d, d > 1 ? (1.0 - policy.gamma) / (d - 1) : 0.0);
    probs[best] = policy.gamma;
    return probs;
}

Matrix evaluation_propensities(const EnvParams& env, const PolicyParams& policy, const Matrix& contexts) {
    Matrix out(contexts.rows(), env.d_actions);
    for (size_t i = 0; i < contexts.rows(); ++i) {
        const auto row = evaluation_propensity_row(env, policy, contexts.row(i));
        std::copy(row.begin(), row.end(), out.row(i));
    }
    return out;
}

std::vector<int> sample_actions(const Matrix& propensities, Rng& rng) {
    std::vector<int> actions(propensities.rows());
    for (size_t i = 0; i < propensities.rows(); ++i)
        actions[i] = rng.categorical({propensities.row(i), propensities.cols()});
    return actions;
}

LoggedDataset generate_log(const EnvParams& env, const PolicyParams& policy,
                           const NetworkGraph& graph, const Matrix& contexts, Rng& rng) {
    if (static_cast<int>(contexts.rows()) != graph.n())
        throw shape_error("generate_log: contexts rows must equal graph.n");
    LoggedDataset data;
    data.graph = graph;
    data.contexts = contexts;
    const Matrix prop = behavior_propensities(env, policy, contexts);
    data.actions = sample_actions(prop, rng);
    data.rewards = rewards_for_assignment(env, graph, contexts, data.actions);
    for (double& r : data.rewards) r += env.noise_sd * rng.normal();
    return data;
}

namespace {

double exhaustive_policy_value(const EnvParams& env, const PolicyParams& policy,
                               const NetworkGraph& graph, const Matrix& contexts) {
    const int n = graph.n();
    const int d = env.d_actions;
    const double joint = n * std::log2(static_cast<double>(d));
    if (joint > 20.0 + 1e-9)
        throw parameter_error("true_policy_value: exhaustive enumeration needs D^n <= 2^20");
    const Matrix prop = evaluation_propensities(env, policy, contexts);

    std::vector<int> assignment(n, 0);
    double value = 0.0;
    while (true) {
        double prob = 1.0;
        for (int i = 0; i < n; ++i) prob *= prop(i, assignment[i]);
        if (prob > 0.0) {
            const auto rewards = rewards_for_assignment(env, graph, contexts, assignment);
            double mean = 0.0;
            for (double r : rewards) mean += r;
            value += prob * mean / n;
        }
        int pos = 0;
        while (pos < n && ++assignment[pos] == d) assignment[pos++] = 0;
        if (pos == n) break;
    }
    return value;
}

}  // namespace

double true_policy_value(const EnvParams& env, const PolicyParams& policy, const NetworkGraph& graph,
                         const Matrix& contexts, int rollouts, Rng& rng) {
    if (rollouts == kExhaustiveRollouts) return exhaustive_policy_value(env, policy, graph, contexts);
    if (rollouts < 1) throw parameter_error("true_policy_value: rollouts must be >= 1");
    const Matrix prop = evaluation_propensities(env, policy, contexts);
    // A deterministic policy makes every rollout identical.
    const int effective = policy.gamma == 1.0 ? 1 : rollouts;
    double total = 0.0;
    for (int t = 0; t < effective; ++t) {
        const auto actions = sample_actions(prop, rng);
        const auto rewards = rewards_for_assignment(env, graph, contexts, actions);
        double mean = 0.0;
        for (double r : rewards) mean += r;
        total += mean / graph.n();
    }
    return total / effective;
}

void save_env_snapshot(const std::string& path, const EnvParams& env, uint64_t seed) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot open for writing: " + path);
    out << std::setprecision(17);
    out << "p_dim " << env.p_dim << "\n";
    out << "d_actions " << env.d_actions << "\n";
    out << "b " << env.b << "\n";
    out << "c " << env.c << "\n";
    out << "noise_sd " << env.noise_sd << "\n";
    out << "seed " << seed << "\n";
    auto dump_vec = [&](const char* name, const std::vector<double>& v) {
        out << name;
        for (double x : v) out << " " << x;
        out << "\n";
    };
    dump_vec("beta1", env.beta1);
    dump_vec("beta2", env.beta2);
    dump_vec("beta3", env.beta3);
    dump_vec("beta4", env.beta4);
    for (int a = 0; a < env.d_actions; ++a) {
        out << "embedding " << a;
        for (int j = 0; j < env.p_dim; ++j) out << " " << env.action_embeddings(a, j);
        out << "\n";
    }
    if (!out) throw io_error("write failed: " + path);
}

EnvParams load_env_snapshot(const std::string& path, uint64_t* seed_out) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open: " + path);
    EnvParams env;
    env.beta1.clear();
    std::string line;
    int lineno = 0;
    auto parse_vec = [&](std::istringstream& ss, std::vector<double>& v) {
        v.assign(env.p_dim, 0.0);
        for (int j = 0; j < env.p_dim; ++j)
            if (!(ss >> v[j]))
                throw format_error("env snapshot " + path + ": short vector on line " + std::to_string(lineno));
    };
    bool have_dims = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        std::string key;
        ss >> key;
        if (key == "p_dim") ss >> env.p_dim;
        else if (key == "d_actions") ss >> env.d_actions;
        else if (key == "b") ss >> env.b;
        else if (key == "c") ss >> env.c;
        else if (key == "noise_sd") ss >> env.noise_sd;
        else if (key == "seed") {
            uint64_t s;
            ss >> s;
            if (seed_out) *seed_out = s;
        } else if (key == "beta1") parse_vec(ss, env.beta1);
        else if (key == "beta2") parse_vec(ss, env.beta2);
        else if (key == "beta3") parse_vec(ss, env.beta3);
        else if (key == "beta4") parse_vec(ss, env.beta4);
        else if (key == "embedding") {
            if (!have_dims) {
                env.action_embeddings = Matrix(env.d_actions, env.p_dim);
                have_dims = true;
            }
            int a;
            ss >> a;
            if (a < 0 || a >= env.d_actions)
                throw format_error("env snapshot " + path + ": bad action index on line " + std::to_string(lineno));
            for (int j = 0; j < env.p_dim; ++j)
                if (!(ss >> env.action_embeddings(a, j)))
                    throw format_error("env snapshot " + path + ": short embedding on line " + std::to_string(lineno));
        } else {
            throw format_error("env snapshot " + path + ": unknown key '" + key + "' on line " +
                               std::to_string(lineno));
        }
        if (ss.fail())
            throw format_error("env snapshot " + path + ": parse error on line " + std::to_string(lineno));
    }
    return env;
}

}  // namespace netope
