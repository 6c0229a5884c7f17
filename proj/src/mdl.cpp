#include "mint/mdl.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace mint {

namespace {

constexpr double kUniversalC0 = 2.865064;
const double kLog2UniversalC0 = std::log2(kUniversalC0);
const double kInvLn2 = 1.0 / std::log(2.0);

double lgamma2(double x) { return std::lgamma(x) * kInvLn2; }

}  // namespace

double universal_int_bits(std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("universal_int_bits requires n >= 1");
    double bits = kLog2UniversalC0;
    double x = static_cast<double>(n);
    while (true) {
        x = std::log2(x);
        if (x <= 0.0) break;
        bits += x;
    }
    return bits;
}

double plugin_data_bits(const std::vector<std::size_t>& usages, double epsilon) {
    if (usages.empty()) throw std::invalid_argument("plugin_data_bits requires a non-empty multiset");
    if (epsilon <= 0.0) throw std::invalid_argument("epsilon must be positive");
    const double h = static_cast<double>(usages.size());
    std::size_t total = 0;
    double per_pattern = 0.0;
    for (std::size_t u : usages) {
        total += u;
        per_pattern += lgamma2(static_cast<double>(u) + epsilon) - lgamma2(epsilon);
    }
    return lgamma2(static_cast<double>(total) + epsilon * h) - lgamma2(epsilon * h) - per_pattern;
}

EncodingContext::EncodingContext(const DiscretizationGrid& grid, std::size_t n_objects,
                                 double epsilon)
    : n_objects_(n_objects), epsilon_(epsilon) {
    if (epsilon <= 0.0) throw std::invalid_argument("epsilon must be positive");
    n_bins_.reserve(grid.dims());
    boundary_bits_ = 0.0;
    grid_bits_ = universal_int_bits(grid.dims());
    for (std::size_t i = 0; i < grid.dims(); ++i) {
        const std::size_t b = grid.bins(i);
        n_bins_.push_back(b);
        boundary_bits_ += std::log2(static_cast<double>(b) * (static_cast<double>(b) + 1.0) / 2.0);
        grid_bits_ += universal_int_bits(b);
    }
}

double model_bits(std::size_t n_patterns, const EncodingContext& ctx) {
    if (n_patterns == 0) throw std::invalid_argument("model_bits requires a non-empty pattern set");
    return ctx.grid_bits() + universal_int_bits(n_patterns) +
           static_cast<double>(n_patterns) * ctx.per_pattern_boundary_bits();
}

namespace {

double log_volume_bits(const HyperRectangle& h) {
    double bits = 0.0;
    for (std::size_t i = 0; i < h.dims(); ++i) {
        bits += std::log2(static_cast<double>(h.size(i)));
    }
    return bits;
}

}  // namespace

double residual_bits(const PatternSet& patterns) {
    double bits = 0.0;
    for (const auto& h : patterns) {
        bits += static_cast<double>(h.usage()) * log_volume_bits(h);
    }
    return bits;
}

LengthBreakdown total_bits_unchecked(const PatternSet& patterns, const EncodingContext& ctx) {
    LengthBreakdown b;
    b.model_bits = model_bits(patterns.size(), ctx);
    b.header_bits = universal_int_bits(ctx.n_objects());
    std::vector<std::size_t> usages;
    usages.reserve(patterns.size());
    for (const auto& h : patterns) usages.push_back(h.usage());
    b.data_bits = plugin_data_bits(usages, ctx.epsilon());
    b.residual_bits = residual_bits(patterns);
    b.total_bits = b.model_bits + b.header_bits + b.data_bits + b.residual_bits;
    return b;
}

LengthBreakdown total_bits(const PatternSet& patterns, const EncodingContext& ctx) {
    std::vector<bool> seen(ctx.n_objects(), false);
    std::size_t count = 0;
    for (const auto& h : patterns) {
        for (std::uint32_t g : h.cover) {
            if (g >= ctx.n_objects() || seen[g]) {
                throw std::invalid_argument("pattern covers do not partition the object set");
            }
            seen[g] = true;
            ++count;
        }
    }
    if (count != ctx.n_objects()) {
        throw std::invalid_argument("pattern covers do not partition the object set");
    }
    return total_bits_unchecked(patterns, ctx);
}

double merge_gain(const HyperRectangle& h_j, const HyperRectangle& h_k,
                  std::size_t n_patterns, const EncodingContext& ctx) {
    const HyperRectangle* group[2] = {&h_j, &h_k};
    HyperRectangle joined = join(h_j, h_k);
    return multi_merge_gain({group[0], group[1]}, joined, n_patterns, ctx);
}

double multi_merge_gain(const std::vector<const HyperRectangle*>& group,
                        const HyperRectangle& joined,
                        std::size_t n_patterns, const EncodingContext& ctx) {
    const std::size_t m = group.size();
    if (m < 2 || n_patterns <= m - 1) {
        throw std::invalid_argument("multi_merge_gain needs >= 2 patterns inside a larger set");
    }
    const double eps = ctx.epsilon();
    const double n = static_cast<double>(ctx.n_objects());
    const double h_before = static_cast<double>(n_patterns);
    const double h_after = static_cast<double>(n_patterns - m + 1);

    // Model part: one fewer L_N(|H|) plus (m-1) saved boundary encodings.
    double delta = universal_int_bits(n_patterns) - universal_int_bits(n_patterns - m + 1) +
                   static_cast<double>(m - 1) * ctx.per_pattern_boundary_bits();

    // Plug-in part (usg(H) stays |G| throughout: covers partition G).
    delta += lgamma2(n + eps * h_before) - lgamma2(n + eps * h_after);
    delta += lgamma2(eps * h_after) - lgamma2(eps * h_before);
    double removed = 0.0;
    double residual_before = 0.0;
    for (const HyperRectangle* h : group) {
        removed += lgamma2(static_cast<double>(h->usage()) + eps) - lgamma2(eps);
        residual_before += static_cast<double>(h->usage()) * log_volume_bits(*h);
    }
    delta -= removed - (lgamma2(static_cast<double>(joined.usage()) + eps) - lgamma2(eps));

    // Reconstruction part, in log-sizes.
    delta += residual_before - static_cast<double>(joined.usage()) * log_volume_bits(joined);
    return delta;
}

bool HyperRectangle::contains_box(const HyperRectangle& other) const {
    for (std::size_t i = 0; i < dims(); ++i) {
        if (other.lower[i] < lower[i] || other.upper[i] > upper[i]) return false;
    }
    return true;
}

bool HyperRectangle::contains_point(const std::uint32_t* coords) const {
    for (std::size_t i = 0; i < dims(); ++i) {
        if (coords[i] < lower[i] || coords[i] > upper[i]) return false;
    }
    return true;
}

HyperRectangle HyperRectangle::from_cell(const ElementaryCell& cell) {
    return HyperRectangle{cell.coords, cell.coords, cell.cover};
}

HyperRectangle join(const HyperRectangle& a, const HyperRectangle& b) {
    if (a.dims() != b.dims()) throw std::invalid_argument("join: dimension mismatch");
    HyperRectangle out;
    out.lower.resize(a.dims());
    out.upper.resize(a.dims());
    for (std::size_t i = 0; i < a.dims(); ++i) {
        out.lower[i] = std::min(a.lower[i], b.lower[i]);
        out.upper[i] = std::max(a.upper[i], b.upper[i]);
    }
    out.cover.resize(a.cover.size() + b.cover.size());
    auto end = std::set_union(a.cover.begin(), a.cover.end(), b.cover.begin(), b.cover.end(),
                              out.cover.begin());
    out.cover.erase(end, out.cover.end());
    return out;
}

}  // namespace mint
