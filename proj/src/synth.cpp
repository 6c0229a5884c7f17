#include "mint/synth.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace mint {

namespace {

// Fixed layout geometry in [0,100]^2. Every pattern gets the same number
// of sample points, so adjacent or nested rectangles must differ in area
// to be distinguishable by density; sides are kept large enough to span
// several discretization intervals at sqrt-of-n grids.
std::vector<RealRect> layout_rects(Layout layout) {
    switch (layout) {
        case Layout::Simple:
            return {{5, 5, 40, 40}, {60, 5, 95, 40}, {5, 60, 40, 95}, {60, 60, 95, 95}};
        case Layout::Variations:
            // Adjacent rectangles sharing a short edge segment, so the
            // contact zone stays a few grid cells wide.
            return {{5, 5, 48, 46}, {48, 44, 92, 88}};
        case Layout::Inverted:
            // Dense outer region; the second rectangle is the sparse hole.
            return {{10, 10, 90, 90}, {40, 40, 60, 60}};
        case Layout::SimpleOverlaps:
            return {{5, 5, 55, 55}, {43, 43, 95, 95}};
        case Layout::SimpleInclusion:
            return {{5, 5, 95, 95}, {37.142857142857146, 37.142857142857146, 56.42857142857143, 56.42857142857143}};
        case Layout::ComplexInclusion:
            return {{5, 5, 95, 95}, {20, 20, 60, 60}, {28, 28, 45, 45}, {65, 65, 90, 90}};
    }
    throw std::invalid_argument("unknown layout");
}

bool inside(const RealRect& r, double x, double y) {
    return x >= r.x_lo && x <= r.x_hi && y >= r.y_lo && y <= r.y_hi;
}

}  // namespace

Layout layout_from_string(const std::string& name) {
    if (name == "simple") return Layout::Simple;
    if (name == "variations") return Layout::Variations;
    if (name == "inverted") return Layout::Inverted;
    if (name == "simple_overlaps") return Layout::SimpleOverlaps;
    if (name == "simple_inclusion") return Layout::SimpleInclusion;
    if (name == "complex_inclusion") return Layout::ComplexInclusion;
    throw std::invalid_argument("unknown layout: " + name);
}

std::string layout_to_string(Layout layout) {
    switch (layout) {
        case Layout::Simple: return "simple";
        case Layout::Variations: return "variations";
        case Layout::Inverted: return "inverted";
        case Layout::SimpleOverlaps: return "simple_overlaps";
        case Layout::SimpleInclusion: return "simple_inclusion";
        case Layout::ComplexInclusion: return "complex_inclusion";
    }
    throw std::invalid_argument("unknown layout");
}

SynthResult generate(Layout layout, std::size_t support, std::uint64_t seed) {
    if (support < 1) throw std::invalid_argument("support must be >= 1");
    const auto rects = layout_rects(layout);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    std::vector<double> values;
    std::vector<std::string> labels;
    const auto emit = [&](double x, double y, std::size_t rect_idx) {
        values.push_back(x);
        values.push_back(y);
        labels.push_back("r" + std::to_string(rect_idx));
    };

    if (layout == Layout::Inverted) {
        const RealRect& outer = rects[0];
        const RealRect& hole = rects[1];
        std::size_t placed = 0;
        while (placed < support) {  // dense shell: outer minus hole
            const double x = outer.x_lo + unit(rng) * (outer.x_hi - outer.x_lo);
            const double y = outer.y_lo + unit(rng) * (outer.y_hi - outer.y_lo);
            if (inside(hole, x, y)) continue;
            emit(x, y, 0);
            ++placed;
        }
        const std::size_t sparse = std::max<std::size_t>(1, support / 10);
        for (std::size_t s = 0; s < sparse; ++s) {
            const double x = hole.x_lo + unit(rng) * (hole.x_hi - hole.x_lo);
            const double y = hole.y_lo + unit(rng) * (hole.y_hi - hole.y_lo);
            emit(x, y, 1);
        }
    } else {
        for (std::size_t r = 0; r < rects.size(); ++r) {
            for (std::size_t s = 0; s < support; ++s) {
                const double x = rects[r].x_lo + unit(rng) * (rects[r].x_hi - rects[r].x_lo);
                const double y = rects[r].y_lo + unit(rng) * (rects[r].y_hi - rects[r].y_lo);
                emit(x, y, r);
            }
        }
    }

    Dataset data({"x", "y"}, std::move(values), std::move(labels));
    return SynthResult{std::move(data), GroundTruth{rects, support, layout, seed}};
}

void export_synth(const SynthResult& result, const std::string& dir) {
    if (!std::filesystem::is_directory(dir)) {
        throw std::runtime_error("not a directory: " + dir);
    }
    {
        std::ofstream out(dir + "/data.csv");
        if (!out) throw std::runtime_error("cannot write " + dir + "/data.csv");
        out << "x,y,label\n";
        char buf[80];
        const Dataset& d = result.dataset;
        for (std::size_t g = 0; g < d.n(); ++g) {
            std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%s\n", d.value(g, 0), d.value(g, 1),
                          d.labels()[g].c_str());
            out << buf;
        }
    }
    {
        std::ofstream out(dir + "/truth.txt");
        if (!out) throw std::runtime_error("cannot write " + dir + "/truth.txt");
        out << "layout=" << layout_to_string(result.truth.layout)
            << " seed=" << result.truth.seed
            << " support=" << result.truth.support_per_pattern << "\n";
        char buf[160];
        for (const auto& r : result.truth.rectangles) {
            std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g\n", r.x_lo, r.y_lo, r.x_hi,
                          r.y_hi);
            out << buf;
        }
    }
}

GroundTruth load_ground_truth(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open ground-truth file: " + path);
    GroundTruth truth;
    std::string header;
    if (!std::getline(in, header)) throw std::runtime_error("empty ground-truth file");
    std::stringstream hs(header);
    std::string token;
    while (hs >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = token.substr(0, eq);
        const std::string value = token.substr(eq + 1);
        if (key == "layout") truth.layout = layout_from_string(value);
        else if (key == "seed") truth.seed = std::stoull(value);
        else if (key == "support") truth.support_per_pattern = std::stoull(value);
    }
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        RealRect r{};
        if (std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &r.x_lo, &r.y_lo, &r.x_hi, &r.y_hi) != 4) {
            throw std::runtime_error("malformed ground-truth line: " + line);
        }
        truth.rectangles.push_back(r);
    }
    if (truth.rectangles.empty()) throw std::runtime_error("ground-truth file has no rectangles");
    return truth;
}

}  // namespace mint
