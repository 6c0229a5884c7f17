#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "mint/synth.hpp"

using namespace mint;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

bool inside(const Dataset& d, std::size_t row, const RealRect& r) {
    const double x = d.value(row, 0), y = d.value(row, 1);
    return x >= r.x_lo && x <= r.x_hi && y >= r.y_lo && y <= r.y_hi;
}

}  // namespace

TEST_CASE("layout names round-trip") {
    for (const char* name : {"simple", "variations", "inverted", "simple_overlaps",
                             "simple_inclusion", "complex_inclusion"}) {
        CHECK(layout_to_string(layout_from_string(name)) == name);
    }
    CHECK_THROWS(layout_from_string("nope"));
}

TEST_CASE("generation respects support, bounds and labels") {
    for (Layout layout : {Layout::Simple, Layout::Variations, Layout::SimpleOverlaps,
                          Layout::SimpleInclusion, Layout::ComplexInclusion}) {
        const auto r = generate(layout, 50, 3);
        CHECK(r.truth.support_per_pattern == 50);
        CHECK(r.truth.layout == layout);
        CHECK(r.dataset.n() == 50 * r.truth.rectangles.size());
        CHECK(r.dataset.k() == 2);
        REQUIRE(r.dataset.has_labels());

        // Each object lies inside the rectangle its label names.
        std::vector<std::size_t> counts(r.truth.rectangles.size(), 0);
        for (std::size_t g = 0; g < r.dataset.n(); ++g) {
            const std::string& lbl = r.dataset.labels()[g];
            REQUIRE(lbl.rfind('r', 0) == 0);
            const auto idx = static_cast<std::size_t>(std::stoul(lbl.substr(1)));
            REQUIRE(idx < r.truth.rectangles.size());
            CHECK(inside(r.dataset, g, r.truth.rectangles[idx]));
            ++counts[idx];
        }
        for (std::size_t c : counts) CHECK(c == 50);  // exact support per rectangle
    }
}

TEST_CASE("inverted layout puts a sparse hole inside the dense region") {
    const auto r = generate(Layout::Inverted, 100, 1);
    REQUIRE(r.truth.rectangles.size() == 2);
    const auto& outer = r.truth.rectangles[0];
    const auto& hole = r.truth.rectangles[1];
    CHECK(hole.x_lo > outer.x_lo);
    CHECK(hole.x_hi < outer.x_hi);

    std::size_t in_hole = 0;
    for (std::size_t g = 0; g < r.dataset.n(); ++g) {
        CHECK(inside(r.dataset, g, outer));
        if (inside(r.dataset, g, hole)) ++in_hole;
    }
    CHECK(r.dataset.n() == 100 + 100 / 10);
    CHECK(in_hole == 100 / 10);  // dense points avoid the hole entirely
}

TEST_CASE("nested layouts really nest") {
    const auto r = generate(Layout::SimpleInclusion, 20, 9);
    REQUIRE(r.truth.rectangles.size() == 2);
    const auto& outer = r.truth.rectangles[0];
    const auto& inner = r.truth.rectangles[1];
    CHECK(inner.x_lo > outer.x_lo);
    CHECK(inner.y_lo > outer.y_lo);
    CHECK(inner.x_hi < outer.x_hi);
    CHECK(inner.y_hi < outer.y_hi);
}

TEST_CASE("generation is deterministic per seed") {
    const auto a = generate(Layout::Simple, 40, 11);
    const auto b = generate(Layout::Simple, 40, 11);
    CHECK(a.dataset.values() == b.dataset.values());
    const auto c = generate(Layout::Simple, 40, 12);
    CHECK(a.dataset.values() != c.dataset.values());
}

TEST_CASE("export writes byte-identical files and the truth round-trips") {
    namespace fs = std::filesystem;
    const fs::path dir1 = "/tmp/mint_test_synth1";
    const fs::path dir2 = "/tmp/mint_test_synth2";
    fs::create_directories(dir1);
    fs::create_directories(dir2);

    const auto r = generate(Layout::Variations, 30, 5);
    export_synth(r, dir1.string());
    export_synth(generate(Layout::Variations, 30, 5), dir2.string());

    CHECK(slurp((dir1 / "data.csv").string()) == slurp((dir2 / "data.csv").string()));
    CHECK(slurp((dir1 / "truth.txt").string()) == slurp((dir2 / "truth.txt").string()));

    const auto truth = load_ground_truth((dir1 / "truth.txt").string());
    CHECK(truth.layout == Layout::Variations);
    CHECK(truth.seed == 5);
    CHECK(truth.support_per_pattern == 30);
    REQUIRE(truth.rectangles.size() == r.truth.rectangles.size());
    for (std::size_t i = 0; i < truth.rectangles.size(); ++i) {
        CHECK(truth.rectangles[i].x_lo == doctest::Approx(r.truth.rectangles[i].x_lo));
        CHECK(truth.rectangles[i].y_hi == doctest::Approx(r.truth.rectangles[i].y_hi));
    }

    fs::remove_all(dir1);
    fs::remove_all(dir2);
}
