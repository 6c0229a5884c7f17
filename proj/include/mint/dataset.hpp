#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mint {

/// Numerical dataset: n objects (rows) over k attributes (columns).
/// Labels, when present, are kept aside and never participate in mining.
class Dataset {
public:
    Dataset(std::vector<std::string> attributes,
            std::vector<double> values,
            std::vector<std::string> labels = {});

    std::size_t n() const { return n_; }
    std::size_t k() const { return attributes_.size(); }

    double value(std::size_t row, std::size_t col) const {
        return values_[row * k() + col];
    }
    const std::vector<double>& values() const { return values_; }
    const std::vector<std::string>& attributes() const { return attributes_; }

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }

    double attr_min(std::size_t col) const { return mins_[col]; }
    double attr_max(std::size_t col) const { return maxs_[col]; }

private:
    std::vector<std::string> attributes_;
    std::vector<double> values_;  // row-major n*k
    std::vector<std::string> labels_;
    std::vector<double> mins_, maxs_;
    std::size_t n_ = 0;
};

/// Per-attribute strictly increasing cut points. bins(i) intervals per
/// attribute; a constant attribute collapses to a single degenerate
/// interval with equal endpoints.
class DiscretizationGrid {
public:
    explicit DiscretizationGrid(std::vector<std::vector<double>> cuts);

    std::size_t dims() const { return cuts_.size(); }
    std::size_t bins(std::size_t i) const { return cuts_[i].size() - 1; }
    const std::vector<double>& cuts(std::size_t i) const { return cuts_[i]; }

    double lower_edge(std::size_t i, std::size_t index) const { return cuts_[i][index]; }
    double upper_edge(std::size_t i, std::size_t index) const { return cuts_[i][index + 1]; }

private:
    std::vector<std::vector<double>> cuts_;
};

class DiscretizedDataset {
public:
    DiscretizedDataset(Dataset data, DiscretizationGrid grid,
                       std::vector<std::uint32_t> cells);

    const Dataset& data() const { return data_; }
    const DiscretizationGrid& grid() const { return grid_; }
    std::size_t n() const { return data_.n(); }
    std::size_t k() const { return data_.k(); }

    std::uint32_t cell(std::size_t row, std::size_t col) const {
        return cells_[row * k() + col];
    }
    const std::vector<std::uint32_t>& cells() const { return cells_; }

private:
    Dataset data_;
    DiscretizationGrid grid_;
    std::vector<std::uint32_t> cells_;
};

/// A grid cell holding at least one object.
struct ElementaryCell {
    std::vector<std::uint32_t> coords;
    std::vector<std::uint32_t> cover;  // sorted object ids
    std::size_t usage() const { return cover.size(); }
};

struct BinsSpec {
    // Either a single count for all attributes, per-attribute counts, or
    // "sqrt" resolving to round(sqrt(n)).
    static BinsSpec sqrt() { return BinsSpec{true, {}}; }
    static BinsSpec uniform(std::size_t b) { return BinsSpec{false, {b}}; }
    static BinsSpec per_attribute(std::vector<std::size_t> b) { return BinsSpec{false, std::move(b)}; }

    bool use_sqrt = false;
    std::vector<std::size_t> counts;

    std::size_t resolve(std::size_t attr, std::size_t n_objects) const;
};

Dataset load_csv(const std::string& path,
                 const std::optional<std::string>& label_column = std::nullopt);

DiscretizationGrid equal_width_grid(const Dataset& data, const BinsSpec& bins,
                                    bool pad_to_integers = false);

/// Reads one comma-separated cut line per attribute; endpoints are widened
/// to the observed data range when they do not cover it.
DiscretizationGrid import_grid(const std::string& path, const Dataset& data);

DiscretizedDataset discretize(const Dataset& data, const DiscretizationGrid& grid);

/// One cell per distinct coordinate vector, ordered lexicographically by
/// coords. Covers partition the object set.
std::vector<ElementaryCell> elementary_cells(const DiscretizedDataset& d);

}  // namespace mint
