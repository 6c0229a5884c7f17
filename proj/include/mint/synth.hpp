#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mint/dataset.hpp"

namespace mint {

/// Real-coordinate axis-aligned rectangle.
struct RealRect {
    double x_lo, y_lo, x_hi, y_hi;
};

enum class Layout {
    Simple,           // separated, pairwise-disjoint rectangles
    Variations,       // adjacent (edge-sharing) rectangles
    Inverted,         // dense region with a sparse rectangular hole
    SimpleOverlaps,   // partially overlapping rectangles
    SimpleInclusion,  // one rectangle nested inside another
    ComplexInclusion, // multi-level nesting
};

Layout layout_from_string(const std::string& name);
std::string layout_to_string(Layout layout);

struct GroundTruth {
    std::vector<RealRect> rectangles;
    std::size_t support_per_pattern = 0;
    Layout layout = Layout::Simple;
    std::uint64_t seed = 0;
};

struct SynthResult {
    Dataset dataset;
    GroundTruth truth;
};

/// Uniform sampling of `support` points inside each ground-truth
/// rectangle ("inverted": dense points outside the hole plus support/10
/// sparse points inside it). Deterministic per seed. Labels carry the
/// originating rectangle index.
SynthResult generate(Layout layout, std::size_t support, std::uint64_t seed);

/// Writes <dir>/data.csv and <dir>/truth.txt.
void export_synth(const SynthResult& result, const std::string& dir);

GroundTruth load_ground_truth(const std::string& path);

}  // namespace mint
