#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "netope/graph.hpp"
#include "netope/matrix.hpp"
#include "netope/rng.hpp"

namespace netope::nn {

enum class Activation { relu, sigmoid, identity };
enum class OptMode { adam, sgd };

// Named parameters with paired gradient accumulators and Adam moment state.
// Iteration order is the lexicographic name order, which keeps updates
// deterministic.
class ParamStore {
  public:
    void register_param(const std::string& name, size_t rows, size_t cols);
    bool has(const std::string& name) const { return entries_.count(name) > 0; }

    Matrix& value(const std::string& name);
    const Matrix& value(const std::string& name) const;
    Matrix& grad(const std::string& name);

    void zero_grad();
    void accumulate_grad(const std::string& name, const Matrix& g);

    // Adam uses beta1=0.9, beta2=0.999, eps=1e-8 with bias correction; sgd is
    // the literal w -= lr * g update.
    void step(double learning_rate, OptMode mode);

    std::vector<std::string> names() const;
    int64_t step_count() const { return step_; }

    void save(const std::string& path) const;
    void load(const std::string& path);

  private:
    struct Entry {
        Matrix value, grad, m, v;
    };
    Entry& entry(const std::string& name);
    std::map<std::string, Entry> entries_;
    int64_t step_ = 0;
};

struct Var {
    Matrix value;
    Matrix grad;  // same shape, zero until backward
    explicit Var(Matrix v) : value(std::move(v)), grad(value.rows(), value.cols()) {}
};
using VarPtr = std::shared_ptr<Var>;

// Reverse-mode tape over whole matrices. Operations record closures; backward
// runs them in reverse. A tape is built fresh per training step.
class Tape {
  public:
    VarPtr constant(Matrix value);

    // Parameter leaf; the same tape returns one shared node per name, and its
    // gradient flows back into the store on backward().
    VarPtr param(ParamStore& store, const std::string& name);

    VarPtr matmul(VarPtr a, VarPtr b);
    VarPtr add_bias(VarPtr x, VarPtr bias);       // bias is 1×cols
    VarPtr activate(VarPtr x, Activation act);
    VarPtr propagate(const AugmentedGraph& g, GcnNorm norm, VarPtr x);

    // Row i of the result is [left.row(i) ‖ table.row(rows_idx[i])]; gradients
    // scatter-add into the table only.
    VarPtr concat_embed(const Matrix& left, VarPtr table, const std::vector<int>& rows_idx);

    // L = -(1/n) * sum_i [ log f0_i + log(1 - f1_i) ], entries clamped to
    // [1e-7, 1-1e-7] before the logs; seeds input gradients on backward.
    double bce_loss(VarPtr f0, VarPtr f1);

    void backward();

  private:
    std::vector<std::function<void()>> ops_;
    std::map<std::string, VarPtr> param_nodes_;
};

inline constexpr double kBceClip = 1e-7;

// Registers "name.W" (in×out) and "name.b" (1×out) lookups; throws
// config_error when the caller never registered them.
VarPtr forward_layer(Tape& tape, ParamStore& store, const std::string& name, VarPtr input,
                     Activation act);

// Central-difference gradient check over a random subsample of parameter
// coordinates. `run(true)` must zero grads, run forward+backward and return
// the loss; `run(false)` is forward only. Returns the max relative error.
double grad_check(ParamStore& store, const std::vector<std::string>& names,
                  const std::function<double(bool)>& run, double h, int samples, Rng& rng);

}  // namespace netope::nn
