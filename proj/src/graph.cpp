#include "netope/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_set>

namespace netope {

namespace {

inline uint64_t edge_key(int i, int j) {
    return (static_cast<uint64_t>(i) << 32) | static_cast<uint32_t>(j);
}

}  // namespace

NetworkGraph NetworkGraph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 1) throw parameter_error("graph: n must be >= 1");
    for (auto& [a, b] : edges) {
        if (a == b) throw parameter_error("graph: self-loop rejected");
        if (a < 0 || b < 0 || a >= n || b >= n) throw parameter_error("graph: edge endpoint out of range");
        if (a > b) std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    NetworkGraph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    g.offsets_.assign(n + 1, 0);
    for (const auto& [a, b] : g.edges_) {
        ++g.offsets_[a + 1];
        ++g.offsets_[b + 1];
    }
    for (int i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
    g.neighbors_.resize(2 * g.edges_.size());
    std::vector<int> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [a, b] : g.edges_) {
        g.neighbors_[cursor[a]++] = b;
        g.neighbors_[cursor[b]++] = a;
    }
    // CSR rows come out sorted because the edge list is sorted per endpoint
    // only for the first slot; sort rows so neighbor scans are deterministic.
    for (int i = 0; i < n; ++i)
        std::sort(g.neighbors_.begin() + g.offsets_[i], g.neighbors_.begin() + g.offsets_[i + 1]);
    return g;
}

bool NetworkGraph::has_edge(int i, int j) const {
    if (i == j) return false;
    auto nb = neighbors_of(i);
    return std::binary_search(nb.begin(), nb.end(), j);
}

double NetworkGraph::mean_degree() const {
    if (n_ == 0) return 0.0;
    return 2.0 * static_cast<double>(edges_.size()) / n_;
}

Matrix NetworkGraph::adjacency_dense() const {
    if (n_ > 20000) throw parameter_error("adjacency_dense: refusing n > 20000");
    Matrix a(n_, n_);
    for (const auto& [i, j] : edges_) {
        a(i, j) = 1.0;
        a(j, i) = 1.0;
    }
    return a;
}

NetworkGraph generate_erdos_renyi(int n, double p, Rng& rng) {
    if (n < 1) throw parameter_error("erdos_renyi: n must be >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw parameter_error("erdos_renyi: p must be in [0,1]");

    std::vector<std::pair<int, int>> edges;
    if (p == 1.0) {
        edges.reserve(static_cast<size_t>(n) * (n - 1) / 2);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
        return NetworkGraph::from_edges(n, std::move(edges));
    }
    if (p > 0.0) {
        // Geometric skipping over the lexicographic pair order; each pair is
        // included independently with probability p.
        const double log1mp = std::log1p(-p);
        int64_t total = static_cast<int64_t>(n) * (n - 1) / 2;
        int64_t idx = -1;
        while (true) {
            const double u = 1.0 - rng.uniform01();  // (0,1]
            const double skip = std::floor(std::log(u) / log1mp);
            if (skip > static_cast<double>(total)) break;
            idx += 1 + static_cast<int64_t>(skip);
            if (idx >= total) break;
            // Recover (i,j) from the linear index over pairs with i < j.
            int64_t rem = idx;
            int i = 0;
            int64_t row = n - 1;
            while (rem >= row) {
                rem -= row;
                --row;
                ++i;
            }
            const int j = i + 1 + static_cast<int>(rem);
            edges.emplace_back(i, j);
        }
    }
    return NetworkGraph::from_edges(n, std::move(edges));
}

NetworkGraph generate_watts_strogatz(int n, int k, double rewire_p,
                                     const std::vector<int>& ordering, Rng& rng) {
    if (n < 1) throw parameter_error("watts_strogatz: n must be >= 1");
    if (k <= 0 || k % 2 != 0) throw parameter_error("watts_strogatz: k must be positive and even");
    if (k >= n) throw parameter_error("watts_strogatz: k must be < n");
    if (!(rewire_p >= 0.0 && rewire_p <= 1.0))
        throw parameter_error("watts_strogatz: rewire_p must be in [0,1]");
    if (static_cast<int>(ordering.size()) != n)
        throw parameter_error("watts_strogatz: ordering size must equal n");
    {
        std::vector<char> seen(n, 0);
        for (int u : ordering) {
            if (u < 0 || u >= n || seen[u]) throw parameter_error("watts_strogatz: ordering is not a permutation");
            seen[u] = 1;
        }
    }

    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(n) * k / 2);
    std::unordered_set<uint64_t> present;
    present.reserve(static_cast<size_t>(n) * k);
    auto key = [](int a, int b) { return edge_key(std::min(a, b), std::max(a, b)); };

    for (int pos = 0; pos < n; ++pos)
        for (int off = 1; off <= k / 2; ++off) {
            const int u = ordering[pos];
            const int v = ordering[(pos + off) % n];
            edges.emplace_back(u, v);
            present.insert(key(u, v));
        }

    if (rewire_p > 0.0) {
        for (auto& [u, v] : edges) {
            if (!rng.bernoulli(rewire_p)) continue;
            for (int attempt = 0; attempt < n; ++attempt) {
                const int w = static_cast<int>(rng.uniform_below(static_cast<uint64_t>(n)));
                if (w == u || w == v || present.count(key(u, w))) continue;
                present.erase(key(u, v));
                present.insert(key(u, w));
                v = w;
                break;
            }
        }
    }
    return NetworkGraph::from_edges(n, std::move(edges));
}

NetworkGraph generate_watts_strogatz(int n, int k, double rewire_p, Rng& rng) {
    std::vector<int> identity(n);
    for (int i = 0; i < n; ++i) identity[i] = i;
    return generate_watts_strogatz(n, k, rewire_p, identity, rng);
}

AugmentedGraph augment(const NetworkGraph& g) { return AugmentedGraph(g); }

void AugmentedGraph::propagate(const Matrix& h, Matrix& out, GcnNorm norm) const {
    const int n = base_.n();
    if (static_cast<int>(h.rows()) != n) throw shape_error("propagate: row count must equal n");
    const size_t cols = h.cols();
    if (static_cast<int>(out.rows()) != n || out.cols() != cols) out = Matrix(n, cols);
    else out.fill(0.0);

    if (norm == GcnNorm::row) {
        for (int i = 0; i < n; ++i) {
            double* dst = out.row(i);
            kernels::axpy(1.0, h.row(i), dst, cols);
            for (int j : base_.neighbors_of(i)) kernels::axpy(1.0, h.row(j), dst, cols);
            kernels::scale(dst, 1.0 / (1.0 + base_.degree(i)), cols);
        }
    } else {
        for (int i = 0; i < n; ++i) {
            double* dst = out.row(i);
            const double di = 1.0 + base_.degree(i);
            kernels::axpy(1.0 / di, h.row(i), dst, cols);
            for (int j : base_.neighbors_of(i)) {
                const double dj = 1.0 + base_.degree(j);
                kernels::axpy(1.0 / std::sqrt(di * dj), h.row(j), dst, cols);
            }
        }
    }
}

Matrix AugmentedGraph::propagate(const Matrix& h, GcnNorm norm) const {
    Matrix out(base_.n(), h.cols());
    propagate(h, out, norm);
    return out;
}

void AugmentedGraph::propagate_transpose_accum(const Matrix& g, Matrix& out, GcnNorm norm) const {
    const int n = base_.n();
    if (static_cast<int>(g.rows()) != n) throw shape_error("propagate_transpose: row count must equal n");
    if (!g.same_shape(out)) throw shape_error("propagate_transpose: output shape mismatch");
    const size_t cols = g.cols();

    if (norm == GcnNorm::row) {
        // (P^T g)[j] = sum_i in N~(j) g[i] / d~_i
        for (int i = 0; i < n; ++i) {
            const double coef = 1.0 / (1.0 + base_.degree(i));
            kernels::axpy(coef, g.row(i), out.row(i), cols);
            for (int j : base_.neighbors_of(i)) kernels::axpy(coef, g.row(i), out.row(j), cols);
        }
    } else {
        // symmetric operator is its own transpose
        Matrix tmp = propagate(g, norm);
        for (int i = 0; i < n; ++i) kernels::axpy(1.0, tmp.row(i), out.row(i), cols);
    }
}

Matrix AugmentedGraph::a_tilde_dense() const {
    Matrix a = base_.adjacency_dense();
    for (int i = 0; i < base_.n(); ++i) a(i, i) = 1.0;
    return a;
}

Matrix AugmentedGraph::a_norm_dense() const {
    Matrix a = a_tilde_dense();
    for (int i = 0; i < base_.n(); ++i) {
        double s = 0.0;
        for (int j = 0; j < base_.n(); ++j) s += a(i, j);
        for (int j = 0; j < base_.n(); ++j) a(i, j) /= s;
    }
    return a;
}

Matrix neighbor_mean(const NetworkGraph& g, const Matrix& values) {
    if (static_cast<int>(values.rows()) != g.n())
        throw shape_error("neighbor_mean: values must have one row per unit");
    Matrix out(g.n(), values.cols());
    for (int i = 0; i < g.n(); ++i) {
        const int deg = g.degree(i);
        if (deg == 0) continue;
        double* dst = out.row(i);
        for (int j : g.neighbors_of(i)) kernels::axpy(1.0, values.row(j), dst, values.cols());
        kernels::scale(dst, 1.0 / deg, values.cols());
    }
    return out;
}

std::vector<double> neighbor_mean(const NetworkGraph& g, const std::vector<double>& values) {
    Matrix v(values.size(), 1);
    for (size_t i = 0; i < values.size(); ++i) v(i, 0) = values[i];
    Matrix out = neighbor_mean(g, v);
    std::vector<double> res(values.size());
    for (size_t i = 0; i < values.size(); ++i) res[i] = out(i, 0);
    return res;
}

void write_edge_list(const std::string& path, const NetworkGraph& g) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot open for writing: " + path);
    out << "# undirected edge list, n=" << g.n() << "\n";
    for (const auto& [i, j] : g.edges()) out << i << " " << j << "\n";
    if (!out) throw io_error("write failed: " + path);
}

std::vector<std::pair<int, int>> read_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open: " + path);
    std::vector<std::pair<int, int>> edges;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream ss(line);
        long long a, b;
        if (!(ss >> a >> b))
            throw format_error("edge list " + path + ": malformed line " + std::to_string(lineno));
        std::string tail;
        if (ss >> tail)
            throw format_error("edge list " + path + ": trailing tokens on line " + std::to_string(lineno));
        if (a < 0 || b < 0)
            throw format_error("edge list " + path + ": negative index on line " + std::to_string(lineno));
        edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
    return edges;
}

}  // namespace netope
