#include "mint/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string_view>

namespace mint {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

std::string strip(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_finite_double(const std::string& raw, std::size_t row, const std::string& col) {
    const std::string s = strip(raw);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) {
        throw std::runtime_error("non-numeric value '" + raw + "' in column '" + col +
                                 "', data row " + std::to_string(row + 1));
    }
    return v;
}

}  // namespace

Dataset::Dataset(std::vector<std::string> attributes, std::vector<double> values,
                 std::vector<std::string> labels)
    : attributes_(std::move(attributes)),
      values_(std::move(values)),
      labels_(std::move(labels)) {
    if (attributes_.empty()) throw std::invalid_argument("dataset needs at least one attribute");
    if (values_.empty() || values_.size() % attributes_.size() != 0) {
        throw std::invalid_argument("value matrix is not n x k");
    }
    n_ = values_.size() / attributes_.size();
    if (!labels_.empty() && labels_.size() != n_) {
        throw std::invalid_argument("label count does not match object count");
    }
    for (double v : values_) {
        if (!std::isfinite(v)) throw std::invalid_argument("dataset contains non-finite values");
    }
    const std::size_t k = attributes_.size();
    mins_.assign(k, std::numeric_limits<double>::infinity());
    maxs_.assign(k, -std::numeric_limits<double>::infinity());
    for (std::size_t g = 0; g < n_; ++g) {
        for (std::size_t i = 0; i < k; ++i) {
            const double v = values_[g * k + i];
            mins_[i] = std::min(mins_[i], v);
            maxs_[i] = std::max(maxs_[i], v);
        }
    }
}

Dataset load_csv(const std::string& path, const std::optional<std::string>& label_column) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);

    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty file: " + path);
    auto header = split_csv_line(line);
    for (auto& h : header) h = strip(h);

    std::size_t label_idx = header.size();
    if (label_column) {
        auto it = std::find(header.begin(), header.end(), *label_column);
        if (it == header.end()) {
            throw std::runtime_error("label column '" + *label_column + "' not found");
        }
        label_idx = static_cast<std::size_t>(it - header.begin());
    }

    std::vector<std::string> attributes;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i != label_idx) attributes.push_back(header[i]);
    }
    if (attributes.empty()) throw std::runtime_error("no numeric columns in " + path);

    std::vector<double> values;
    std::vector<std::string> labels;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        if (strip(line).empty()) continue;
        auto fields = split_csv_line(line);
        if (fields.size() != header.size()) {
            throw std::runtime_error("row " + std::to_string(row + 1) + " has " +
                                     std::to_string(fields.size()) + " fields, expected " +
                                     std::to_string(header.size()));
        }
        for (std::size_t i = 0, a = 0; i < fields.size(); ++i) {
            if (i == label_idx) {
                labels.push_back(strip(fields[i]));
            } else {
                values.push_back(parse_finite_double(fields[i], row, header[i]));
                ++a;
            }
        }
        ++row;
    }
    if (row == 0) throw std::runtime_error("no data rows in " + path);
    return Dataset(std::move(attributes), std::move(values), std::move(labels));
}

DiscretizationGrid::DiscretizationGrid(std::vector<std::vector<double>> cuts)
    : cuts_(std::move(cuts)) {
    if (cuts_.empty()) throw std::invalid_argument("grid needs at least one attribute");
    for (const auto& c : cuts_) {
        if (c.size() < 2) throw std::invalid_argument("grid attribute needs at least two endpoints");
        // A single degenerate [v, v] interval is allowed for constant attributes.
        if (c.size() == 2 && c[0] == c[1]) continue;
        for (std::size_t j = 1; j < c.size(); ++j) {
            if (!(c[j - 1] < c[j])) throw std::invalid_argument("grid cuts must be strictly increasing");
        }
    }
}

std::size_t BinsSpec::resolve(std::size_t attr, std::size_t n_objects) const {
    if (use_sqrt) {
        return std::max<std::size_t>(1, static_cast<std::size_t>(
            std::llround(std::sqrt(static_cast<double>(n_objects)))));
    }
    if (counts.empty()) throw std::invalid_argument("empty bins specification");
    const std::size_t b = counts.size() == 1 ? counts[0] : counts.at(attr);
    if (b == 0) throw std::invalid_argument("bin count must be positive");
    return b;
}

DiscretizationGrid equal_width_grid(const Dataset& data, const BinsSpec& bins,
                                    bool pad_to_integers) {
    std::vector<std::vector<double>> cuts(data.k());
    for (std::size_t i = 0; i < data.k(); ++i) {
        double lo = data.attr_min(i);
        double hi = data.attr_max(i);
        if (pad_to_integers) {
            lo = std::floor(lo);
            hi = std::ceil(hi);
            if (lo == hi) hi = lo + 1.0;
        }
        std::size_t b = bins.resolve(i, data.n());
        if (lo == hi) b = 1;  // constant attribute
        cuts[i].resize(b + 1);
        for (std::size_t j = 0; j <= b; ++j) {
            cuts[i][j] = lo + static_cast<double>(j) * (hi - lo) / static_cast<double>(b);
        }
        cuts[i][0] = lo;
        cuts[i][b] = hi;
    }
    return DiscretizationGrid(std::move(cuts));
}

DiscretizationGrid import_grid(const std::string& path, const Dataset& data) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open grid file: " + path);
    std::vector<std::vector<double>> cuts;
    std::string line;
    while (std::getline(in, line)) {
        if (strip(line).empty()) continue;
        std::vector<double> c;
        for (const auto& f : split_csv_line(line)) {
            c.push_back(parse_finite_double(f, cuts.size(), "grid"));
        }
        for (std::size_t j = 1; j < c.size(); ++j) {
            if (!(c[j - 1] < c[j])) throw std::runtime_error("grid cuts must be strictly increasing");
        }
        cuts.push_back(std::move(c));
    }
    if (cuts.size() != data.k()) {
        throw std::runtime_error("grid has " + std::to_string(cuts.size()) +
                                 " attribute lines, dataset has " + std::to_string(data.k()));
    }
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        if (cuts[i].front() > data.attr_min(i)) cuts[i].front() = data.attr_min(i);
        if (cuts[i].back() < data.attr_max(i)) cuts[i].back() = data.attr_max(i);
    }
    return DiscretizationGrid(std::move(cuts));
}

DiscretizedDataset::DiscretizedDataset(Dataset data, DiscretizationGrid grid,
                                       std::vector<std::uint32_t> cells)
    : data_(std::move(data)), grid_(std::move(grid)), cells_(std::move(cells)) {
    if (cells_.size() != data_.n() * data_.k()) {
        throw std::invalid_argument("cell matrix shape mismatch");
    }
}

DiscretizedDataset discretize(const Dataset& data, const DiscretizationGrid& grid) {
    if (grid.dims() != data.k()) throw std::invalid_argument("grid dimension mismatch");
    std::vector<std::uint32_t> cells(data.n() * data.k());
    for (std::size_t g = 0; g < data.n(); ++g) {
        for (std::size_t i = 0; i < data.k(); ++i) {
            const double v = data.value(g, i);
            const auto& c = grid.cuts(i);
            if (v < c.front() || v > c.back()) {
                throw std::runtime_error("value " + std::to_string(v) +
                                         " outside grid range of attribute " +
                                         data.attributes()[i]);
            }
            // Intervals [c_j, c_{j+1}) are lower-closed; the last one is
            // also right-closed so the attribute maximum is representable.
            std::size_t idx;
            if (v == c.back()) {
                idx = grid.bins(i) - 1;
            } else {
                idx = static_cast<std::size_t>(
                    std::upper_bound(c.begin(), c.end(), v) - c.begin() - 1);
            }
            cells[g * data.k() + i] = static_cast<std::uint32_t>(idx);
        }
    }
    return DiscretizedDataset(data, grid, std::move(cells));
}

std::vector<ElementaryCell> elementary_cells(const DiscretizedDataset& d) {
    std::map<std::vector<std::uint32_t>, std::vector<std::uint32_t>> groups;
    const std::size_t k = d.k();
    for (std::size_t g = 0; g < d.n(); ++g) {
        std::vector<std::uint32_t> coords(d.cells().begin() + g * k,
                                          d.cells().begin() + (g + 1) * k);
        groups[std::move(coords)].push_back(static_cast<std::uint32_t>(g));
    }
    std::vector<ElementaryCell> out;
    out.reserve(groups.size());
    for (auto& [coords, cover] : groups) {
        out.push_back(ElementaryCell{coords, std::move(cover)});
    }
    return out;
}

}  // namespace mint
