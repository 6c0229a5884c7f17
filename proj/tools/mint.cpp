#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "mint/dataset.hpp"
#include "mint/eval.hpp"
#include "mint/mdl.hpp"
#include "mint/miner.hpp"
#include "mint/pattern_io.hpp"
#include "mint/synth.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

std::size_t round_sqrt(double x) {
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(std::sqrt(x))));
}

// "--bins sqrt" / "--k sqrt" resolve to round(sqrt(n_objects)).
std::size_t resolve_count(const std::string& spec, std::size_t n_objects, const char* what) {
    if (spec == "sqrt") return round_sqrt(static_cast<double>(n_objects));
    try {
        const long v = std::stol(spec);
        if (v < 1) throw std::invalid_argument("");
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw CLI::ValidationError(std::string(what) + " must be a positive integer or 'sqrt'");
    }
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write output file: " + path);
    out << text << '\n';
}

struct MineOptions {
    std::string input, output, label_column, bins = "sqrt", k = "sqrt", grid_file;
    std::size_t prune_top_n = 0;
    double epsilon = 0.5;
    bool no_prune = false, prune_at_end = false, knn_propagate = false, grid_pad = false;
    bool emit_covers = false;
};

void add_mine_options(CLI::App* cmd, MineOptions& o, bool with_miner_flags) {
    cmd->add_option("--input", o.input, "input CSV file")->required();
    cmd->add_option("--output", o.output, "output file (stdout when omitted)");
    cmd->add_option("--label-column", o.label_column, "column excluded from mining");
    cmd->add_option("--bins", o.bins, "intervals per attribute: <int|sqrt>");
    cmd->add_option("--grid-file", o.grid_file, "imported cut points, one line per attribute");
    cmd->add_flag("--grid-pad", o.grid_pad, "snap cut endpoints outward to integers");
    if (with_miner_flags) {
        cmd->add_option("--k", o.k, "nearest neighbors per cell: <int|sqrt>");
        cmd->add_option("--prune-top-n", o.prune_top_n,
                        "keep only the N best pruning candidates (0 = all)");
        cmd->add_option("--epsilon", o.epsilon, "plug-in pseudo-count");
        cmd->add_flag("--no-prune", o.no_prune, "disable pruning");
        cmd->add_flag("--prune-at-end", o.prune_at_end, "prune once after the merge loop");
        cmd->add_flag("--knn-propagate", o.knn_propagate,
                      "merged patterns inherit neighbor edges instead of pairing with all");
    }
}

mint::DiscretizedDataset load_and_discretize(const MineOptions& o) {
    const auto label = o.label_column.empty() ? std::nullopt
                                              : std::make_optional(o.label_column);
    mint::Dataset data = mint::load_csv(o.input, label);
    if (data.n() == 0) throw std::runtime_error("input has no data rows: " + o.input);
    if (!o.grid_file.empty()) {
        return mint::discretize(data, mint::import_grid(o.grid_file, data));
    }
    const std::size_t bins = resolve_count(o.bins, data.n(), "--bins");
    auto grid = mint::equal_width_grid(data, mint::BinsSpec::uniform(bins), o.grid_pad);
    return mint::discretize(data, grid);
}

int cmd_mine(const MineOptions& o) {
    auto d = load_and_discretize(o);
    mint::MinerConfig cfg;
    cfg.k_neighbors = resolve_count(o.k, d.n(), "--k");
    cfg.prune_top_n = o.prune_top_n;
    cfg.epsilon = o.epsilon;
    cfg.enable_pruning = !o.no_prune;
    cfg.prune_at_end = o.prune_at_end;
    cfg.knn_propagate = o.knn_propagate;
    const auto result = mint::mine(d, cfg);
    write_text(o.output, mint::mining_result_to_json(result, d.grid(), o.emit_covers));
    return kExitOk;
}

int cmd_discretize(const MineOptions& o) {
    auto d = load_and_discretize(o);
    std::ostringstream out;
    for (std::size_t i = 0; i < d.k(); ++i) {
        out << (i ? "," : "") << d.data().attributes()[i];
    }
    out << '\n';
    for (std::size_t g = 0; g < d.n(); ++g) {
        for (std::size_t i = 0; i < d.k(); ++i) out << (i ? "," : "") << d.cell(g, i);
        out << '\n';
    }
    std::string text = out.str();
    text.pop_back();  // write_text appends the final newline
    write_text(o.output, text);
    return kExitOk;
}

int cmd_synth(const std::string& layout, std::size_t support, std::uint64_t seed,
              const std::string& output_dir) {
    const auto result = mint::generate(mint::layout_from_string(layout), support, seed);
    std::filesystem::create_directories(output_dir);
    mint::export_synth(result, output_dir);
    return kExitOk;
}

int cmd_eval(const std::string& patterns_path, const MineOptions& o,
             const std::string& truth_path, bool weighted) {
    const auto loaded = mint::load_patterns_json(patterns_path);
    mint::EvalReport report;
    report.compression_ratio =
        mint::compression_ratio(loaded.breakdown, loaded.elementary_breakdown);
    report.n_patterns = loaded.patterns.size();
    report.runtime_seconds = loaded.elapsed_seconds;

    if (!o.input.empty()) {
        const auto label = o.label_column.empty() ? std::nullopt
                                                  : std::make_optional(o.label_column);
        mint::Dataset data = mint::load_csv(o.input, label);
        mint::DiscretizedDataset d = mint::discretize(data, loaded.grid);
        report.pairwise_cover_jaccard = mint::pairwise_cover_jaccard(loaded.patterns, d);
        if (data.has_labels() && loaded.has_covers) {
            report.accuracy = mint::pattern_accuracy(loaded.patterns, data.labels(), weighted);
        }
    }
    if (!truth_path.empty()) {
        const auto truth = mint::load_ground_truth(truth_path);
        std::vector<mint::RealRect> mined;
        for (const auto& h : loaded.patterns) mined.push_back(mint::to_real_rect(h, loaded.grid));
        report.jcd_h_t = mint::jcd(mined, truth.rectangles);
        report.jcd_t_h = mint::jcd(truth.rectangles, mined);
    }
    write_text(o.output, report.to_json());
    return kExitOk;
}

int cmd_sweep(const MineOptions& o) {
    const auto label = o.label_column.empty() ? std::nullopt
                                              : std::make_optional(o.label_column);
    mint::Dataset data = mint::load_csv(o.input, label);
    if (data.n() == 0) throw std::runtime_error("input has no data rows: " + o.input);
    const double g = static_cast<double>(data.n());
    const double gm = g * static_cast<double>(data.k());
    const std::size_t bin_grid[4] = {5, round_sqrt(0.25 * g), round_sqrt(g),
                                     round_sqrt(4.0 * g)};
    const std::size_t k_grid[7] = {5,
                                   round_sqrt(0.25 * g),
                                   round_sqrt(g),
                                   round_sqrt(4.0 * g),
                                   round_sqrt(0.25 * gm),
                                   round_sqrt(gm),
                                   round_sqrt(4.0 * gm)};

    std::ostringstream out;
    out << "bins,k," << mint::EvalReport::csv_header() << '\n';
    for (std::size_t bins : bin_grid) {
        auto grid = mint::equal_width_grid(data, mint::BinsSpec::uniform(bins), o.grid_pad);
        auto d = mint::discretize(data, grid);
        for (std::size_t k : k_grid) {
            mint::MinerConfig cfg;
            cfg.k_neighbors = k;
            cfg.prune_top_n = o.prune_top_n;
            cfg.epsilon = o.epsilon;
            cfg.enable_pruning = !o.no_prune;
            cfg.prune_at_end = o.prune_at_end;
            cfg.knn_propagate = o.knn_propagate;
            const auto result = mint::mine(d, cfg);
            mint::EvalReport report;
            report.compression_ratio =
                mint::compression_ratio(result.breakdown, result.elementary_breakdown);
            report.n_patterns = result.patterns.size();
            report.runtime_seconds = result.elapsed_seconds;
            out << bins << ',' << k << ',' << report.to_csv_row() << '\n';
        }
    }
    std::string text = out.str();
    text.pop_back();
    write_text(o.output, text);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"MDL hyper-rectangle pattern mining"};
    app.require_subcommand(1);

    MineOptions mine_opt;
    auto* mine = app.add_subcommand("mine", "mine a pattern set from a CSV");
    add_mine_options(mine, mine_opt, true);
    mine->add_flag("--emit-covers", mine_opt.emit_covers, "include per-pattern object ids");

    MineOptions disc_opt;
    auto* disc = app.add_subcommand("discretize", "emit interval indices for a CSV");
    add_mine_options(disc, disc_opt, false);

    std::string synth_layout = "simple", synth_output;
    std::size_t synth_support = 100;
    std::uint64_t synth_seed = 0;
    auto* synth = app.add_subcommand("synth", "generate a synthetic benchmark");
    synth->add_option("--layout", synth_layout,
                      "simple|variations|inverted|simple_overlaps|simple_inclusion|"
                      "complex_inclusion");
    synth->add_option("--support", synth_support, "points per ground-truth rectangle");
    synth->add_option("--seed", synth_seed, "RNG seed");
    synth->add_option("--output", synth_output, "output directory")->required();

    MineOptions eval_opt;
    std::string eval_patterns, eval_truth;
    bool eval_weighted = false;
    auto* eval = app.add_subcommand("eval", "score a mined pattern set");
    eval->add_option("--patterns", eval_patterns, "pattern-set JSON from 'mine'")->required();
    eval->add_option("--input", eval_opt.input, "original CSV (for overlap/accuracy metrics)");
    eval->add_option("--label-column", eval_opt.label_column, "label column in --input");
    eval->add_option("--truth", eval_truth, "ground-truth rectangles from 'synth'");
    eval->add_flag("--weighted", eval_weighted, "usage-weighted accuracy");
    eval->add_option("--output", eval_opt.output, "report file (stdout when omitted)");

    MineOptions sweep_opt;
    auto* sweep = app.add_subcommand("sweep", "run the (bins x neighbors) parameter grid");
    sweep->add_option("--input", sweep_opt.input, "input CSV file")->required();
    sweep->add_option("--output", sweep_opt.output, "CSV report (stdout when omitted)");
    sweep->add_option("--label-column", sweep_opt.label_column, "column excluded from mining");
    sweep->add_option("--prune-top-n", sweep_opt.prune_top_n,
                      "keep only the N best pruning candidates (0 = all)");
    sweep->add_option("--epsilon", sweep_opt.epsilon, "plug-in pseudo-count");
    sweep->add_flag("--no-prune", sweep_opt.no_prune, "disable pruning");
    sweep->add_flag("--prune-at-end", sweep_opt.prune_at_end, "prune once after the merge loop");
    sweep->add_flag("--knn-propagate", sweep_opt.knn_propagate,
                    "merged patterns inherit neighbor edges");
    sweep->add_flag("--grid-pad", sweep_opt.grid_pad, "snap cut endpoints outward to integers");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*mine) return cmd_mine(mine_opt);
        if (*disc) return cmd_discretize(disc_opt);
        if (*synth) return cmd_synth(synth_layout, synth_support, synth_seed, synth_output);
        if (*eval) return cmd_eval(eval_patterns, eval_opt, eval_truth, eval_weighted);
        if (*sweep) return cmd_sweep(sweep_opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    }
    return kExitUsage;
}
