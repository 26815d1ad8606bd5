#include "statmc/percolation.hpp"

#include <cmath>
#include <stdexcept>

#include "statmc/parallel.hpp"
#include "statmc/union_find.hpp"

namespace statmc {

Grid generate_grid(std::size_t side, double p, Rng& rng) {
    if (side == 0) throw std::invalid_argument("generate_grid: side must be >= 1");
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("generate_grid: p must be in [0, 1]");
    Grid grid;
    grid.side = side;
    grid.occupied.resize(side * side);
    for (auto& cell : grid.occupied) cell = rng.bernoulli(p) ? 1 : 0;
    return grid;
}

ClusterLabeling label_clusters(const Grid& grid) {
    const std::size_t m = grid.side;
    const std::size_t n = m * m;
    UnionFind uf(n);
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < m; ++c) {
            const std::size_t i = r * m + c;
            if (!grid.occupied[i]) continue;
            if (c > 0 && grid.occupied[i - 1]) uf.unite(i, i - 1);
            if (r > 0 && grid.occupied[i - m]) uf.unite(i, i - m);
        }
    }

    ClusterLabeling out;
    out.side = m;
    out.labels.assign(n, 0);
    std::vector<std::uint32_t> root_label(n, 0);
    std::uint32_t next = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!grid.occupied[i]) continue;
        const std::size_t root = uf.find(i);
        if (root_label[root] == 0) root_label[root] = ++next;
        out.labels[i] = root_label[root];
    }
    out.cluster_count = next;
    return out;
}

bool has_spanning_cluster(const ClusterLabeling& labeling) {
    const std::size_t m = labeling.side;
    if (m == 0 || labeling.cluster_count == 0) return false;
    std::vector<std::uint8_t> in_top(labeling.cluster_count + 1, 0);
    for (std::size_t c = 0; c < m; ++c) in_top[labeling.at(0, c)] = 1;
    for (std::size_t c = 0; c < m; ++c) {
        const std::uint32_t label = labeling.at(m - 1, c);
        if (label != 0 && in_top[label]) return true;
    }
    return false;
}

PercolationPoint estimate_spanning_probability(std::size_t side, double p,
                                               std::uint64_t trials, std::uint64_t seed,
                                               std::uint64_t stream_offset,
                                               unsigned threads) {
    if (trials == 0)
        throw std::invalid_argument("estimate_spanning_probability: trials must be >= 1");

    std::vector<std::uint8_t> spans(trials, 0);
    parallel_for(trials, threads, [&](std::size_t trial) {
        Rng rng = Rng::from_stream(seed, stream_offset + trial);
        const Grid grid = generate_grid(side, p, rng);
        spans[trial] = has_spanning_cluster(label_clusters(grid)) ? 1 : 0;
    });

    std::uint64_t hits = 0;
    for (auto s : spans) hits += s;

    PercolationPoint point;
    point.p = p;
    point.trials = trials;
    point.spanning_probability = static_cast<double>(hits) / static_cast<double>(trials);
    point.std_err = std::sqrt(point.spanning_probability *
                              (1.0 - point.spanning_probability) /
                              static_cast<double>(trials));
    return point;
}

std::vector<PercolationPoint> sweep_spanning_probability(
    std::size_t side, const std::vector<double>& p_list, std::uint64_t trials,
    std::uint64_t seed, unsigned threads) {
    if (p_list.empty())
        throw std::invalid_argument("sweep_spanning_probability: empty p list");
    std::vector<PercolationPoint> curve;
    curve.reserve(p_list.size());
    for (std::size_t i = 0; i < p_list.size(); ++i) {
        curve.push_back(estimate_spanning_probability(
            side, p_list[i], trials, seed, static_cast<std::uint64_t>(i) * trials,
            threads));
    }
    return curve;
}

}  // namespace statmc
