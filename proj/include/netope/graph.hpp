#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "netope/matrix.hpp"
#include "netope/rng.hpp"

namespace netope {

// Undirected simple graph over n units. Edges are stored canonically
// (i < j, sorted, unique) next to a CSR neighbor index; the dense adjacency
// view is materialized on demand and only for small n.
class NetworkGraph {
  public:
    NetworkGraph() = default;

    // Canonicalizes (orders endpoints, sorts, removes duplicates) and
    // validates endpoints. Self-loops are rejected.
    static NetworkGraph from_edges(int n, std::vector<std::pair<int, int>> edges);

    int n() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    size_t edge_count() const { return edges_.size(); }

    int degree(int i) const { return offsets_[i + 1] - offsets_[i]; }
    std::span<const int> neighbors_of(int i) const {
        return {neighbors_.data() + offsets_[i], static_cast<size_t>(degree(i))};
    }

    bool has_edge(int i, int j) const;
    double mean_degree() const;

    // Dense 0/1 adjacency; refuses n > 20,000 to keep O(n^2) memory out of
    // large runs.
    Matrix adjacency_dense() const;

  private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> offsets_;    // size n+1
    std::vector<int> neighbors_;  // size 2|E|
};

NetworkGraph generate_erdos_renyi(int n, double p, Rng& rng);

// Ring lattice over `ordering` (k/2 nearest on each side), then each lattice
// edge is rewired with probability rewire_p to a uniform non-duplicate,
// non-self target; a rewire that cannot find a valid target within n draws
// keeps the original edge.
NetworkGraph generate_watts_strogatz(int n, int k, double rewire_p,
                                     const std::vector<int>& ordering, Rng& rng);
NetworkGraph generate_watts_strogatz(int n, int k, double rewire_p, Rng& rng);  // identity ordering

enum class GcnNorm { row, symmetric };

// Self-loop augmented graph: A~ = A + I with row-normalized (D~^-1 A~) and
// symmetric (D~^-1/2 A~ D~^-1/2) propagation operators applied sparsely.
class AugmentedGraph {
  public:
    AugmentedGraph() = default;
    explicit AugmentedGraph(NetworkGraph g) : base_(std::move(g)) {}

    const NetworkGraph& base() const { return base_; }
    int n() const { return base_.n(); }

    // out = P * h where P is the selected normalization of A~.
    void propagate(const Matrix& h, Matrix& out, GcnNorm norm) const;
    Matrix propagate(const Matrix& h, GcnNorm norm) const;

    // out += P^T * g; the backward pass of propagate.
    void propagate_transpose_accum(const Matrix& g, Matrix& out, GcnNorm norm) const;

    Matrix a_tilde_dense() const;
    Matrix a_norm_dense() const;  // row normalization

  private:
    NetworkGraph base_;
};

AugmentedGraph augment(const NetworkGraph& g);

// Row i = mean of `values` rows over N(i); zero row for isolated units.
Matrix neighbor_mean(const NetworkGraph& g, const Matrix& values);
std::vector<double> neighbor_mean(const NetworkGraph& g, const std::vector<double>& values);

// Edge-list text format: one "i j" pair per line, 0-based, whitespace
// separated; lines starting with '#' are comments.
void write_edge_list(const std::string& path, const NetworkGraph& g);
std::vector<std::pair<int, int>> read_edge_list(const std::string& path);

}  // namespace netope
