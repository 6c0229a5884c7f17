#pragma once

#include <cstdint>
#include <vector>

#include "mint/dataset.hpp"

namespace mint {

/// Axis-aligned box in interval-index space, with the set of objects it
/// encodes. After pruning the cover may be a strict subset of the objects
/// geometrically inside the box.
struct HyperRectangle {
    std::vector<std::uint32_t> lower;  // inclusive
    std::vector<std::uint32_t> upper;  // inclusive
    std::vector<std::uint32_t> cover;  // sorted object ids

    std::size_t usage() const { return cover.size(); }
    std::size_t size(std::size_t i) const { return upper[i] - lower[i] + 1; }
    std::size_t dims() const { return lower.size(); }

    bool contains_box(const HyperRectangle& other) const;
    bool contains_point(const std::uint32_t* coords) const;

    static HyperRectangle from_cell(const ElementaryCell& cell);
};

using PatternSet = std::vector<HyperRectangle>;

/// Fixed quantities the encoding depends on: the grid, |G| and the
/// plug-in pseudo-count.
class EncodingContext {
public:
    EncodingContext(const DiscretizationGrid& grid, std::size_t n_objects,
                    double epsilon = 0.5);

    std::size_t n_objects() const { return n_objects_; }
    double epsilon() const { return epsilon_; }
    std::size_t dims() const { return n_bins_.size(); }
    std::size_t bins(std::size_t i) const { return n_bins_[i]; }

    /// Bits to place one pattern's boundaries in the grid:
    /// sum_i log2(|B_i|(|B_i|+1)/2).
    double per_pattern_boundary_bits() const { return boundary_bits_; }
    /// L_N(|M|) + sum_i L_N(|B_i|): the grid header.
    double grid_bits() const { return grid_bits_; }

private:
    std::vector<std::size_t> n_bins_;
    std::size_t n_objects_;
    double epsilon_;
    double boundary_bits_;
    double grid_bits_;
};

struct LengthBreakdown {
    double model_bits = 0.0;     // L(H)
    double header_bits = 0.0;    // L_N(|G|)
    double data_bits = 0.0;      // L(D(H))
    double residual_bits = 0.0;  // L(D (-) D(H))
    double total_bits = 0.0;
};

/// Rissanen's universal code for integers, base-2, c0 = 2.865064.
double universal_int_bits(std::uint64_t n);

/// Prequential plug-in code length of a usage multiset (Eq. of the
/// log-gamma closed form). Order of the realizing sequence is irrelevant.
double plugin_data_bits(const std::vector<std::size_t>& usages, double epsilon);

double model_bits(std::size_t n_patterns, const EncodingContext& ctx);
double residual_bits(const PatternSet& patterns);

/// Full breakdown. Throws if the covers do not partition {0..n-1}.
LengthBreakdown total_bits(const PatternSet& patterns, const EncodingContext& ctx);

/// As total_bits but without the partition check (callers that maintain
/// the invariant themselves).
LengthBreakdown total_bits_unchecked(const PatternSet& patterns, const EncodingContext& ctx);

/// Gain of replacing h_j and h_k by their join in a set of n_patterns
/// patterns. Equals total-bits(before) - total-bits(after) exactly.
double merge_gain(const HyperRectangle& h_j, const HyperRectangle& h_k,
                  std::size_t n_patterns, const EncodingContext& ctx);

/// Gain of replacing the given group of patterns by a single box `joined`
/// covering the union of their covers. Generalizes merge_gain to the
/// multi-merge used by pruning.
double multi_merge_gain(const std::vector<const HyperRectangle*>& group,
                        const HyperRectangle& joined,
                        std::size_t n_patterns, const EncodingContext& ctx);

/// Smallest box containing both; cover is the union of the covers.
HyperRectangle join(const HyperRectangle& a, const HyperRectangle& b);

}  // namespace mint
