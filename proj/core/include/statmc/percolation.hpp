#pragma once

#include <cstdint>
#include <vector>

#include "statmc/rng.hpp"

namespace statmc {

/// M x M site grid, row-major occupancy.
struct Grid {
    std::size_t side = 0;
    std::vector<std::uint8_t> occupied;  // side*side entries, 0/1

    bool at(std::size_t row, std::size_t col) const {
        return occupied[row * side + col] != 0;
    }
};

/// Per-cell cluster ids: 0 for empty cells, otherwise 1..cluster_count in
/// first-encounter (row-major) order, so labelings are byte-comparable.
struct ClusterLabeling {
    std::size_t side = 0;
    std::vector<std::uint32_t> labels;
    std::uint32_t cluster_count = 0;

    std::uint32_t at(std::size_t row, std::size_t col) const {
        return labels[row * side + col];
    }
};

struct PercolationPoint {
    double p = 0.0;
    double spanning_probability = 0.0;
    double std_err = 0.0;
    std::uint64_t trials = 0;
};

/// Each cell is occupied independently with probability p, sampled in
/// row-major order (a (seed, M, p) triple defines the grid uniquely).
/// Throws std::invalid_argument for p outside [0, 1] or side = 0.
Grid generate_grid(std::size_t side, double p, Rng& rng);

/// Connected components under 4-neighborhood adjacency (union-find).
ClusterLabeling label_clusters(const Grid& grid);

/// True iff some cluster touches both the top and the bottom row
/// (the two electrodes).
bool has_spanning_cluster(const ClusterLabeling& labeling);

/// Fraction of trials whose grid spans; stderr = sqrt(P(1-P)/trials).
PercolationPoint estimate_spanning_probability(std::size_t side, double p,
                                               std::uint64_t trials, std::uint64_t seed,
                                               std::uint64_t stream_offset = 0,
                                               unsigned threads = 1);

/// estimate per p with disjoint substream blocks, ordered as input.
/// Throws std::invalid_argument for an empty p list.
std::vector<PercolationPoint> sweep_spanning_probability(
    std::size_t side, const std::vector<double>& p_list, std::uint64_t trials,
    std::uint64_t seed, unsigned threads = 1);

}  // namespace statmc
