#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mint/dataset.hpp"
#include "mint/mdl.hpp"

namespace mint {

struct MinerConfig {
    std::size_t k_neighbors = 1;
    std::size_t prune_top_n = 0;  // 0 = unlimited
    double epsilon = 0.5;
    bool enable_pruning = true;
    bool prune_at_end = false;   // run pruning once after the merge loop
                                 // instead of every outer iteration
    bool knn_propagate = false;  // restrict candidates to inherited
                                 // (contracted) neighbor edges
};

struct TraceEntry {
    enum class Kind { Merge, Prune };
    Kind kind;
    std::uint32_t id_a = 0, id_b = 0;  // merged pattern ids (Merge only)
    double delta = 0.0;
    std::size_t n_patterns = 0;
    std::size_t n_candidates = 0;
    double total_after = 0.0;
};

struct MiningResult {
    PatternSet patterns;
    LengthBreakdown breakdown;
    LengthBreakdown elementary_breakdown;
    std::vector<TraceEntry> trace;
    std::size_t initial_candidates = 0;
    double elapsed_seconds = 0.0;
};

struct CandidatePair {
    std::uint32_t a, b;
};

/// k nearest cells per cell (Euclidean distance on integer coords, ties
/// to the lexicographically smallest coords), deduplicated as unordered
/// pairs. Indices refer to positions in `cells`.
std::vector<CandidatePair> initial_candidates(const std::vector<ElementaryCell>& cells,
                                              std::size_t k);

MiningResult mine(const DiscretizedDataset& d, const MinerConfig& cfg);

/// Algorithm-2 style multi-merge pruning; returns the reduced set.
PatternSet prune(PatternSet patterns, std::size_t top_n, const EncodingContext& ctx);

}  // namespace mint
