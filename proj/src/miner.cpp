#include "mint/miner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <queue>
#include <set>
#include <stdexcept>

namespace mint {

namespace {

struct HeapEntry {
    double gain;
    std::uint64_t seq;  // insertion order; newer wins ties (matches the
                        // merge order of the worked reference example)
    std::uint32_t a, b;
};

struct HeapCompare {
    bool operator()(const HeapEntry& x, const HeapEntry& y) const {
        if (x.gain != y.gain) return x.gain < y.gain;
        return x.seq < y.seq;
    }
};

using CandidateHeap = std::priority_queue<HeapEntry, std::vector<HeapEntry>, HeapCompare>;

// Pruning candidate generation is cubic in |H|; intermediate in-loop
// passes are deferred above this size (the final pass always runs).
constexpr std::size_t kPruneSizeCap = 1200;

// All-pairs refresh is quadratic in |H|; skip it above this size.
constexpr std::size_t kRefreshSizeCap = 2000;

struct PruneOutcome {
    std::size_t commits = 0;
    double total_delta = 0.0;
};

// One full run of the multi-merge pruning procedure over the live set.
// on_commit(joined_id_group, delta) fires after each committed replacement.
template <typename OnCommit>
PruneOutcome prune_live(std::vector<HyperRectangle>& pats, std::vector<char>& alive,
                        std::size_t& n_alive, std::size_t top_n,
                        const EncodingContext& ctx, OnCommit on_commit) {
    PruneOutcome outcome;
    bool decreased = true;
    while (decreased && n_alive >= 3) {
        decreased = false;
        std::vector<std::uint32_t> live;
        live.reserve(n_alive);
        for (std::uint32_t id = 0; id < pats.size(); ++id) {
            if (alive[id]) live.push_back(id);
        }

        // Pairs whose join geometrically contains at least one third pattern.
        struct Cand {
            double gain;
            std::uint32_t i, j;
        };
        std::vector<Cand> cands;
        for (std::size_t x = 0; x < live.size(); ++x) {
            for (std::size_t y = x + 1; y < live.size(); ++y) {
                const HyperRectangle& hi = pats[live[x]];
                const HyperRectangle& hj = pats[live[y]];
                HyperRectangle box;
                box.lower.resize(hi.dims());
                box.upper.resize(hi.dims());
                for (std::size_t d = 0; d < hi.dims(); ++d) {
                    box.lower[d] = std::min(hi.lower[d], hj.lower[d]);
                    box.upper[d] = std::max(hi.upper[d], hj.upper[d]);
                }
                bool contains_third = false;
                for (std::uint32_t t : live) {
                    if (t == live[x] || t == live[y]) continue;
                    if (box.contains_box(pats[t])) {
                        contains_third = true;
                        break;
                    }
                }
                if (contains_third) {
                    cands.push_back({merge_gain(hi, hj, n_alive, ctx), live[x], live[y]});
                }
            }
        }
        std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
            if (a.gain != b.gain) return a.gain > b.gain;
            if (a.i != b.i) return a.i < b.i;
            return a.j < b.j;
        });
        if (top_n > 0 && cands.size() > top_n) cands.resize(top_n);

        for (const Cand& c : cands) {
            if (!alive[c.i] || !alive[c.j]) continue;
            std::vector<std::uint32_t> group = {c.i, c.j};
            HyperRectangle joined = join(pats[c.i], pats[c.j]);
            std::vector<const HyperRectangle*> members = {&pats[c.i], &pats[c.j]};
            double delta = multi_merge_gain(members, joined, n_alive, ctx);
            for (std::uint32_t t : live) {
                if (!alive[t] || t == c.i || t == c.j) continue;
                if (!joined.contains_box(pats[t])) continue;
                HyperRectangle extended = joined;
                extended.cover = join(joined, pats[t]).cover;
                members.push_back(&pats[t]);
                const double delta_t = multi_merge_gain(members, extended, n_alive, ctx);
                if (delta_t > delta) {
                    delta = delta_t;
                    joined = std::move(extended);
                    group.push_back(t);
                } else {
                    members.pop_back();
                }
            }
            if (delta > 0.0) {
                for (std::uint32_t id : group) alive[id] = 0;
                const auto new_id = static_cast<std::uint32_t>(pats.size());
                pats.push_back(std::move(joined));
                alive.push_back(1);
                n_alive -= group.size() - 1;
                ++outcome.commits;
                outcome.total_delta += delta;
                on_commit(group, new_id, delta);
                decreased = true;
                if (n_alive < 3) break;
            }
        }
    }
    return outcome;
}

}  // namespace

std::vector<CandidatePair> initial_candidates(const std::vector<ElementaryCell>& cells,
                                              std::size_t k) {
    if (cells.empty()) throw std::invalid_argument("initial_candidates: no cells");
    const std::size_t m = cells.size();
    const std::size_t dims = cells.front().coords.size();
    std::set<std::pair<std::uint32_t, std::uint32_t>> pairs;
    std::vector<std::pair<std::uint64_t, std::uint32_t>> dist;  // (d^2, index)
    for (std::uint32_t i = 0; i < m; ++i) {
        dist.clear();
        for (std::uint32_t j = 0; j < m; ++j) {
            if (j == i) continue;
            std::uint64_t d2 = 0;
            for (std::size_t a = 0; a < dims; ++a) {
                const std::int64_t diff = static_cast<std::int64_t>(cells[i].coords[a]) -
                                          static_cast<std::int64_t>(cells[j].coords[a]);
                d2 += static_cast<std::uint64_t>(diff * diff);
            }
            dist.emplace_back(d2, j);
        }
        // Cells are in lexicographic coord order, so index order breaks
        // distance ties by the smallest coordinates.
        const std::size_t take = std::min(k, dist.size());
        std::partial_sort(dist.begin(), dist.begin() + static_cast<std::ptrdiff_t>(take),
                          dist.end());
        for (std::size_t t = 0; t < take; ++t) {
            const std::uint32_t j = dist[t].second;
            pairs.emplace(std::min(i, j), std::max(i, j));
        }
    }
    std::vector<CandidatePair> out;
    out.reserve(pairs.size());
    for (const auto& [a, b] : pairs) out.push_back({a, b});
    return out;
}

MiningResult mine(const DiscretizedDataset& d, const MinerConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    if (cfg.k_neighbors == 0) throw std::invalid_argument("k_neighbors must be >= 1");

    const EncodingContext ctx(d.grid(), d.n(), cfg.epsilon);
    const auto cells = elementary_cells(d);

    std::vector<HyperRectangle> pats;
    pats.reserve(cells.size() * 2);
    for (const auto& c : cells) pats.push_back(HyperRectangle::from_cell(c));
    std::vector<char> alive(pats.size(), 1);
    std::size_t n_alive = pats.size();

    MiningResult result;
    {
        PatternSet elem(pats.begin(), pats.end());
        result.elementary_breakdown = total_bits_unchecked(elem, ctx);
    }
    double total = result.elementary_breakdown.total_bits;

    // Contracted neighbor graph, maintained only under knn_propagate.
    std::vector<std::set<std::uint32_t>> adjacency;

    CandidateHeap heap;
    std::uint64_t seq = 0;
    if (pats.size() >= 2) {
        const auto pairs = initial_candidates(cells, cfg.k_neighbors);
        result.initial_candidates = pairs.size();
        if (cfg.knn_propagate) adjacency.resize(pats.size());
        for (const auto& p : pairs) {
            heap.push({merge_gain(pats[p.a], pats[p.b], n_alive, ctx), seq++, p.a, p.b});
            if (cfg.knn_propagate) {
                adjacency[p.a].insert(p.b);
                adjacency[p.b].insert(p.a);
            }
        }
    }

    const auto contract_edges = [&](const std::vector<std::uint32_t>& group,
                                    std::uint32_t new_id) {
        adjacency.emplace_back();
        auto& merged = adjacency.back();
        for (std::uint32_t id : group) {
            for (std::uint32_t nb : adjacency[id]) merged.insert(nb);
            adjacency[id].clear();
        }
        for (std::uint32_t id : group) merged.erase(id);
        for (std::uint32_t nb : merged) {
            for (std::uint32_t id : group) adjacency[nb].erase(id);
            adjacency[nb].insert(new_id);
        }
    };

    const auto record_prune = [&](const std::vector<std::uint32_t>& group,
                                  std::uint32_t new_id, double delta) {
        total -= delta;
        if (cfg.knn_propagate) contract_edges(group, new_id);
        result.trace.push_back({TraceEntry::Kind::Prune, group[0], group[1], delta, n_alive,
                                heap.size(), total});
    };

    std::vector<std::pair<std::uint32_t, std::uint32_t>> buffered;  // all-pairs mode
    std::vector<std::uint32_t> new_ids;                             // knn-propagate mode

    while (!heap.empty()) {
        buffered.clear();
        new_ids.clear();

        // Inner loop: consume candidates by decreasing cached gain.
        while (!heap.empty()) {
            const HeapEntry top = heap.top();
            heap.pop();
            if (!alive[top.a] || !alive[top.b]) continue;
            if (top.gain <= 0.0) break;
            // Cached gains go stale as |H| shrinks; re-evaluate before
            // committing so the recorded total stays exact.
            const double fresh = merge_gain(pats[top.a], pats[top.b], n_alive, ctx);
            if (fresh <= 0.0) continue;

            HyperRectangle joined = join(pats[top.a], pats[top.b]);
            alive[top.a] = 0;
            alive[top.b] = 0;
            const auto new_id = static_cast<std::uint32_t>(pats.size());
            pats.push_back(std::move(joined));
            alive.push_back(1);
            --n_alive;
            total -= fresh;
            result.trace.push_back({TraceEntry::Kind::Merge, top.a, top.b, fresh, n_alive,
                                    heap.size(), total});

            if (cfg.knn_propagate) {
                contract_edges({top.a, top.b}, new_id);
                new_ids.push_back(new_id);
            } else {
                for (std::uint32_t h = 0; h < new_id; ++h) {
                    if (alive[h]) buffered.emplace_back(new_id, h);
                }
            }
        }

        // Deferred gain computation for the next wave of candidates.
        CandidateHeap next;
        if (cfg.knn_propagate) {
            std::set<std::pair<std::uint32_t, std::uint32_t>> emitted;
            for (std::uint32_t c : new_ids) {
                if (!alive[c]) continue;
                for (std::uint32_t nb : adjacency[c]) {
                    if (!alive[nb]) continue;
                    auto key = std::minmax(c, nb);
                    if (emitted.insert({key.first, key.second}).second) {
                        next.push({merge_gain(pats[c], pats[nb], n_alive, ctx), seq++, c, nb});
                    }
                }
            }
        } else {
            for (const auto& [a, b] : buffered) {
                if (alive[a] && alive[b]) {
                    next.push({merge_gain(pats[a], pats[b], n_alive, ctx), seq++, a, b});
                }
            }
        }
        heap = std::move(next);

        if (cfg.enable_pruning && !cfg.prune_at_end && n_alive <= kPruneSizeCap) {
            prune_live(pats, alive, n_alive, cfg.prune_top_n, ctx, record_prune);
        }

        // Candidates rejected earlier can turn profitable once |H| has
        // shrunk (the model term grows with |H|). Before giving up,
        // re-score the surviving edges and keep going if any is positive.
        if (heap.empty() && n_alive >= 2) {
            if (cfg.knn_propagate) {
                for (std::uint32_t a = 0; a < adjacency.size(); ++a) {
                    if (!alive[a]) continue;
                    for (std::uint32_t b : adjacency[a]) {
                        if (b <= a || !alive[b]) continue;
                        const double g = merge_gain(pats[a], pats[b], n_alive, ctx);
                        if (g > 0.0) heap.push({g, seq++, a, b});
                    }
                }
            } else if (n_alive <= kRefreshSizeCap) {
                for (std::uint32_t a = 0; a < pats.size(); ++a) {
                    if (!alive[a]) continue;
                    for (std::uint32_t b = a + 1; b < pats.size(); ++b) {
                        if (!alive[b]) continue;
                        const double g = merge_gain(pats[a], pats[b], n_alive, ctx);
                        if (g > 0.0) heap.push({g, seq++, a, b});
                    }
                }
            }
        }
    }

    if (cfg.enable_pruning && (cfg.prune_at_end || n_alive > kPruneSizeCap)) {
        prune_live(pats, alive, n_alive, cfg.prune_top_n, ctx, record_prune);
    }

    for (std::uint32_t id = 0; id < pats.size(); ++id) {
        if (alive[id]) result.patterns.push_back(std::move(pats[id]));
    }
    result.breakdown = total_bits(result.patterns, ctx);
    result.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

PatternSet prune(PatternSet patterns, std::size_t top_n, const EncodingContext& ctx) {
    std::vector<HyperRectangle> pats(patterns.begin(), patterns.end());
    std::vector<char> alive(pats.size(), 1);
    std::size_t n_alive = pats.size();
    prune_live(pats, alive, n_alive, top_n, ctx,
               [](const std::vector<std::uint32_t>&, std::uint32_t, double) {});
    PatternSet out;
    for (std::size_t id = 0; id < pats.size(); ++id) {
        if (alive[id]) out.push_back(std::move(pats[id]));
    }
    return out;
}

}  // namespace mint
