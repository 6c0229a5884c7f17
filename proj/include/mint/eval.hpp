#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mint/dataset.hpp"
#include "mint/mdl.hpp"
#include "mint/miner.hpp"
#include "mint/synth.hpp"

namespace mint {

struct EvalReport {
    double compression_ratio = 1.0;
    std::size_t n_patterns = 0;
    std::optional<double> pairwise_cover_jaccard;
    std::optional<double> accuracy;
    std::optional<double> jcd_h_t;  // precision of mined boundaries
    std::optional<double> jcd_t_h;  // recall of ground-truth boundaries
    double runtime_seconds = 0.0;

    std::string to_json() const;
    static std::string csv_header();
    std::string to_csv_row() const;
};

double compression_ratio(const LengthBreakdown& result, const LengthBreakdown& baseline);

/// area(intersection) / area(join); degenerate sides are clamped to eta.
double rect_jaccard(const RealRect& a, const RealRect& b, double eta = 0.0);

/// Mean over `a` of the best Jaccard match in `b` (asymmetric).
double jcd(const std::vector<RealRect>& a, const std::vector<RealRect>& b,
           double eta = 0.0);

/// Maps a mined rectangle back to real coordinates via the grid.
RealRect to_real_rect(const HyperRectangle& h, const DiscretizationGrid& grid);

/// Mean occurrence-set Jaccard over each pattern's top-`top` most similar
/// partners, repetitive pairs removed. Absent for fewer than 2 patterns.
std::optional<double> pairwise_cover_jaccard(const PatternSet& patterns,
                                             const DiscretizedDataset& d,
                                             std::size_t top = 10);

/// Mean per-pattern majority-class fraction (optionally usage-weighted).
double pattern_accuracy(const PatternSet& patterns,
                        const std::vector<std::string>& labels,
                        bool weighted = false);

}  // namespace mint
