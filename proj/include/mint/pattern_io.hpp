#pragma once

#include <string>

#include "mint/dataset.hpp"
#include "mint/miner.hpp"

namespace mint {

/// Pattern-set JSON document: per pattern the interval-index bounds, the
/// real endpoints, sizes and usage (covers optional); plus grid cuts, the
/// length breakdown, the elementary baseline and the merge trace.
std::string mining_result_to_json(const MiningResult& result,
                                  const DiscretizationGrid& grid,
                                  bool emit_covers = false);

struct LoadedPatterns {
    PatternSet patterns;
    DiscretizationGrid grid;
    LengthBreakdown breakdown;
    LengthBreakdown elementary_breakdown;
    double elapsed_seconds = 0.0;
    bool has_covers = false;
};

LoadedPatterns load_patterns_json(const std::string& path);

}  // namespace mint
