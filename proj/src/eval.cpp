#include "mint/eval.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace mint {

double compression_ratio(const LengthBreakdown& result, const LengthBreakdown& baseline) {
    if (baseline.total_bits <= 0.0) throw std::invalid_argument("baseline length must be positive");
    return result.total_bits / baseline.total_bits;
}

double rect_jaccard(const RealRect& a, const RealRect& b, double eta) {
    const auto side = [eta](double lo, double hi) { return std::max(hi - lo, eta); };
    const double ix = std::min(a.x_hi, b.x_hi) - std::max(a.x_lo, b.x_lo);
    const double iy = std::min(a.y_hi, b.y_hi) - std::max(a.y_lo, b.y_lo);
    const double inter = (ix >= 0.0 && iy >= 0.0) ? std::max(ix, eta) * std::max(iy, eta) : 0.0;
    // denominator is the joint bounding box, not the union
    const double jx = side(std::min(a.x_lo, b.x_lo), std::max(a.x_hi, b.x_hi));
    const double jy = side(std::min(a.y_lo, b.y_lo), std::max(a.y_hi, b.y_hi));
    const double joint = jx * jy;
    if (joint <= 0.0) return inter > 0.0 ? 1.0 : 0.0;
    return inter / joint;
}

double jcd(const std::vector<RealRect>& a, const std::vector<RealRect>& b, double eta) {
    if (a.empty()) return 0.0;
    double sum = 0.0;
    for (const auto& ra : a) {
        double best = 0.0;
        for (const auto& rb : b) best = std::max(best, rect_jaccard(ra, rb, eta));
        sum += best;
    }
    return sum / static_cast<double>(a.size());
}

RealRect to_real_rect(const HyperRectangle& h, const DiscretizationGrid& grid) {
    if (h.dims() != 2 || grid.dims() != 2) {
        throw std::invalid_argument("real-rectangle mapping is defined for 2-d patterns");
    }
    return RealRect{grid.lower_edge(0, h.lower[0]), grid.lower_edge(1, h.lower[1]),
                    grid.upper_edge(0, h.upper[0]), grid.upper_edge(1, h.upper[1])};
}

std::optional<double> pairwise_cover_jaccard(const PatternSet& patterns,
                                             const DiscretizedDataset& d, std::size_t top) {
    const std::size_t m = patterns.size();
    if (m < 2) return std::nullopt;

    // Occurrence set of a pattern: every object whose cell lies inside the
    // box, regardless of which pattern encodes it.
    std::vector<std::vector<std::uint32_t>> occ(m);
    const std::size_t k = d.k();
    for (std::size_t g = 0; g < d.n(); ++g) {
        const std::uint32_t* coords = d.cells().data() + g * k;
        for (std::size_t p = 0; p < m; ++p) {
            if (patterns[p].contains_point(coords)) occ[p].push_back(static_cast<std::uint32_t>(g));
        }
    }

    const auto jac = [&](std::size_t i, std::size_t j) {
        std::vector<std::uint32_t> inter;
        std::set_intersection(occ[i].begin(), occ[i].end(), occ[j].begin(), occ[j].end(),
                              std::back_inserter(inter));
        const std::size_t uni = occ[i].size() + occ[j].size() - inter.size();
        return uni == 0 ? 0.0 : static_cast<double>(inter.size()) / static_cast<double>(uni);
    };

    std::set<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<std::pair<double, std::size_t>> sims;
        sims.reserve(m - 1);
        for (std::size_t j = 0; j < m; ++j) {
            if (j != i) sims.emplace_back(jac(i, j), j);
        }
        const std::size_t take = std::min(top, sims.size());
        std::partial_sort(sims.begin(), sims.begin() + take, sims.end(),
                          [](const auto& x, const auto& y) {
                              if (x.first != y.first) return x.first > y.first;
                              return x.second < y.second;
                          });
        for (std::size_t t = 0; t < take; ++t) {
            pairs.emplace(std::min(i, sims[t].second), std::max(i, sims[t].second));
        }
    }
    if (pairs.empty()) return std::nullopt;
    double sum = 0.0;
    for (const auto& [i, j] : pairs) sum += jac(i, j);
    return sum / static_cast<double>(pairs.size());
}

double pattern_accuracy(const PatternSet& patterns, const std::vector<std::string>& labels,
                        bool weighted) {
    if (patterns.empty()) throw std::invalid_argument("no patterns to score");
    if (labels.empty()) throw std::invalid_argument("dataset has no labels");
    double sum = 0.0, weight_sum = 0.0;
    for (const auto& h : patterns) {
        if (h.cover.empty()) continue;
        std::map<std::string, std::size_t> counts;
        for (std::uint32_t g : h.cover) {
            if (g >= labels.size()) throw std::out_of_range("cover references unknown object");
            ++counts[labels[g]];
        }
        std::size_t majority = 0;
        for (const auto& [lbl, c] : counts) majority = std::max(majority, c);
        const double frac = static_cast<double>(majority) / static_cast<double>(h.usage());
        const double w = weighted ? static_cast<double>(h.usage()) : 1.0;
        sum += w * frac;
        weight_sum += w;
    }
    if (weight_sum == 0.0) throw std::invalid_argument("all patterns have empty covers");
    return sum / weight_sum;
}

std::string EvalReport::to_json() const {
    nlohmann::json j;
    j["compression_ratio"] = compression_ratio;
    j["n_patterns"] = n_patterns;
    j["runtime_seconds"] = runtime_seconds;
    if (pairwise_cover_jaccard) j["pairwise_cover_jaccard"] = *pairwise_cover_jaccard;
    if (accuracy) j["accuracy"] = *accuracy;
    if (jcd_h_t) j["jcd_patterns_to_truth"] = *jcd_h_t;
    if (jcd_t_h) j["jcd_truth_to_patterns"] = *jcd_t_h;
    return j.dump(2);
}

std::string EvalReport::csv_header() {
    return "compression_ratio,n_patterns,pairwise_cover_jaccard,accuracy,"
           "jcd_patterns_to_truth,jcd_truth_to_patterns,runtime_seconds";
}

std::string EvalReport::to_csv_row() const {
    std::ostringstream out;
    out.precision(10);
    const auto opt = [&](const std::optional<double>& v) {
        if (v) out << *v;
    };
    out << compression_ratio << ',' << n_patterns << ',';
    opt(pairwise_cover_jaccard);
    out << ',';
    opt(accuracy);
    out << ',';
    opt(jcd_h_t);
    out << ',';
    opt(jcd_t_h);
    out << ',' << runtime_seconds;
    return out.str();
}

}  // namespace mint
