#include "mint/pattern_io.hpp"

#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace mint {

namespace {

nlohmann::json breakdown_to_json(const LengthBreakdown& b) {
    return {{"model_bits", b.model_bits},
            {"header_bits", b.header_bits},
            {"data_bits", b.data_bits},
            {"residual_bits", b.residual_bits},
            {"total_bits", b.total_bits}};
}

LengthBreakdown breakdown_from_json(const nlohmann::json& j) {
    LengthBreakdown b;
    b.model_bits = j.at("model_bits").get<double>();
    b.header_bits = j.at("header_bits").get<double>();
    b.data_bits = j.at("data_bits").get<double>();
    b.residual_bits = j.at("residual_bits").get<double>();
    b.total_bits = j.at("total_bits").get<double>();
    return b;
}

}  // namespace

std::string mining_result_to_json(const MiningResult& result, const DiscretizationGrid& grid,
                                  bool emit_covers) {
    nlohmann::json j;

    nlohmann::json cuts = nlohmann::json::array();
    for (std::size_t i = 0; i < grid.dims(); ++i) cuts.push_back(grid.cuts(i));
    j["grid"] = {{"cuts", cuts}};

    nlohmann::json pats = nlohmann::json::array();
    for (const auto& h : result.patterns) {
        nlohmann::json p;
        p["lower"] = h.lower;
        p["upper"] = h.upper;
        nlohmann::json lo_real = nlohmann::json::array(), hi_real = nlohmann::json::array();
        nlohmann::json sizes = nlohmann::json::array();
        for (std::size_t i = 0; i < h.dims(); ++i) {
            lo_real.push_back(grid.lower_edge(i, h.lower[i]));
            hi_real.push_back(grid.upper_edge(i, h.upper[i]));
            sizes.push_back(h.size(i));
        }
        p["lower_real"] = lo_real;
        p["upper_real"] = hi_real;
        p["sizes"] = sizes;
        p["usage"] = h.usage();
        if (emit_covers) p["cover"] = h.cover;
        pats.push_back(std::move(p));
    }
    j["patterns"] = std::move(pats);
    j["covers_included"] = emit_covers;

    j["breakdown"] = breakdown_to_json(result.breakdown);
    j["elementary_breakdown"] = breakdown_to_json(result.elementary_breakdown);
    j["compression_ratio"] = result.breakdown.total_bits / result.elementary_breakdown.total_bits;
    j["initial_candidates"] = result.initial_candidates;
    j["elapsed_seconds"] = result.elapsed_seconds;

    nlohmann::json trace = nlohmann::json::array();
    for (const auto& t : result.trace) {
        nlohmann::json e;
        e["kind"] = t.kind == TraceEntry::Kind::Merge ? "merge" : "prune";
        if (t.kind == TraceEntry::Kind::Merge) {
            e["id_a"] = t.id_a;
            e["id_b"] = t.id_b;
        }
        e["delta_bits"] = t.delta;
        e["n_patterns"] = t.n_patterns;
        e["n_candidates"] = t.n_candidates;
        e["total_bits"] = t.total_after;
        trace.push_back(std::move(e));
    }
    j["trace"] = std::move(trace);

    return j.dump(2);
}

LoadedPatterns load_patterns_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open pattern file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("malformed pattern file " + path + ": " + e.what());
    }

    std::vector<std::vector<double>> cuts;
    for (const auto& c : j.at("grid").at("cuts")) cuts.push_back(c.get<std::vector<double>>());

    PatternSet patterns;
    for (const auto& p : j.at("patterns")) {
        HyperRectangle h;
        h.lower = p.at("lower").get<std::vector<std::uint32_t>>();
        h.upper = p.at("upper").get<std::vector<std::uint32_t>>();
        if (p.contains("cover")) {
            h.cover = p.at("cover").get<std::vector<std::uint32_t>>();
        }
        patterns.push_back(std::move(h));
    }

    LoadedPatterns out{std::move(patterns), DiscretizationGrid(std::move(cuts)),
                       breakdown_from_json(j.at("breakdown")),
                       breakdown_from_json(j.at("elementary_breakdown")),
                       j.value("elapsed_seconds", 0.0), j.value("covers_included", false)};
    return out;
}

}  // namespace mint
