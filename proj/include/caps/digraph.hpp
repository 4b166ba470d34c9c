#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "rule.hpp"
#include "tile.hpp"
#include "word.hpp"

namespace caps {

// Practical cap on materialized word-index ranges (successor and color
// arrays). The 63-bit encoding guard lives in word_space_size.
inline constexpr std::uint64_t kDefaultIndexCap = 1ULL << 31;

enum class CycleKind { configuration, label };

struct CycleRecord {
    CycleKind kind = CycleKind::configuration;
    int period = 0;           // cycle length in its digraph
    std::vector<Word> words;  // the cycle's words, in cycle order
    Tile tile;                // induced canonical tile
    int spatial_period = 0;   // sigma of the tile
    int temporal_period = 0;  // tau of the tile
};

// The unique down-extension B of A: b[j] = f(a[j-1 mod sigma], a[j]). Raw
// words have out-degree exactly one, so the configuration digraph is a
// functional graph.
inline Word config_successor(const Rule& rule, const Word& w) {
    check_word(w, rule.n, "config_successor");
    return step(rule, w);
}

namespace detail {

inline std::uint64_t guarded_count(int n, int length, std::uint64_t max_indices) {
    const std::uint64_t count = word_space_size(n, length);
    if (count > max_indices || count > 0xFFFFFFFFULL)
        throw std::length_error("digraph: n^length exceeds the index cap");
    return count;
}

// Successor index of every length-sigma word, filled by running an odometer
// over the words in index order.
inline std::vector<std::uint32_t> build_config_successors(const Rule& rule, int sigma,
                                                          std::uint64_t count) {
    const int n = rule.n;
    std::vector<std::uint32_t> succ(count);
    Word w(sigma, 0);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::uint64_t next = 0;
        state_t left = w[sigma - 1];
        for (int j = 0; j < sigma; ++j) {
            next = next * n + rule.lookup(left, w[j]);
            left = w[j];
        }
        succ[idx] = static_cast<std::uint32_t>(next);
        for (int j = sigma - 1; j >= 0; --j) { // odometer
            if (++w[j] < n)
                break;
            w[j] = 0;
        }
    }
    return succ;
}

} // namespace detail

// Visits every directed cycle of the raw-word configuration digraph exactly
// once, using a three-state visit marking (unvisited / on current path /
// finished). `visit` receives the cycle's word indices in successor order and
// returns false to stop early.
template <typename Visit>
void for_each_config_cycle(const Rule& rule, int sigma, Visit&& visit,
                           std::uint64_t max_indices = kDefaultIndexCap) {
    const std::uint64_t count = detail::guarded_count(rule.n, sigma, max_indices);
    const std::vector<std::uint32_t> succ = detail::build_config_successors(rule, sigma, count);

    std::vector<std::uint8_t> color(count, 0);
    std::vector<std::uint32_t> path;
    for (std::uint64_t start = 0; start < count; ++start) {
        if (color[start])
            continue;
        path.clear();
        std::uint32_t v = static_cast<std::uint32_t>(start);
        while (!color[v]) {
            color[v] = 1;
            path.push_back(v);
            v = succ[v];
        }
        bool keep_going = true;
        if (color[v] == 1) { // met the current path: its tail is a new cycle
            std::size_t pos = path.size() - 1;
            while (path[pos] != v)
                --pos;
            keep_going = visit(std::vector<std::uint32_t>(path.begin() + pos, path.end()));
        }
        for (std::uint32_t u : path)
            color[u] = 2;
        if (!keep_going)
            return;
    }
}

// All cycles of the raw-word functional graph on Z_n^sigma, each reported
// once with its induced tile (rows reduced to their common word period, so
// the tile is valid even when the cycle's spatial period is not sigma).
inline std::vector<CycleRecord> find_config_cycles(const Rule& rule, int sigma,
                                                   std::uint64_t max_indices = kDefaultIndexCap) {
    std::vector<CycleRecord> out;
    for_each_config_cycle(
        rule, sigma,
        [&](const std::vector<std::uint32_t>& cycle) {
            CycleRecord rec;
            rec.kind = CycleKind::configuration;
            rec.period = static_cast<int>(cycle.size());
            for (std::uint32_t idx : cycle)
                rec.words.push_back(decode_word(idx, rule.n, sigma));
            const auto reduced = static_cast<int>(word_period(rec.words.front()));
            std::vector<Word> rows;
            rows.reserve(rec.words.size());
            for (const Word& w : rec.words)
                rows.emplace_back(w.begin(), w.begin() + reduced);
            rec.tile = canonical_tile(Tile::from_rows(rows));
            rec.spatial_period = reduced;
            rec.temporal_period = rec.period;
            out.push_back(std::move(rec));
            return true;
        },
        max_indices);
    return out;
}

// All PS of spatial period exactly sigma, as canonical tiles. Cycles whose
// words have a smaller period belong to that smaller sigma and are skipped.
inline std::set<Tile> ps_with_spatial_period(const Rule& rule, int sigma,
                                             std::uint64_t max_indices = kDefaultIndexCap) {
    std::set<Tile> out;
    for_each_config_cycle(
        rule, sigma,
        [&](const std::vector<std::uint32_t>& cycle) {
            std::vector<Word> rows;
            rows.reserve(cycle.size());
            for (std::uint32_t idx : cycle)
                rows.push_back(decode_word(idx, rule.n, sigma));
            if (static_cast<int>(word_period(rows.front())) == sigma)
                out.insert(canonical_tile(Tile::from_rows(rows)));
            return true;
        },
        max_indices);
    return out;
}

// Y_{sigma,n}(f): the smallest temporal period among PS of spatial period
// sigma. Words on one cycle share their period, so checking the first word
// suffices; no tile needs to be built.
inline std::optional<long long> min_temporal_period(const Rule& rule, int sigma,
                                                    std::uint64_t max_indices = kDefaultIndexCap) {
    std::optional<long long> best;
    for_each_config_cycle(
        rule, sigma,
        [&](const std::vector<std::uint32_t>& cycle) {
            const Word w = decode_word(cycle.front(), rule.n, sigma);
            if (static_cast<int>(word_period(w)) == sigma) {
                const auto len = static_cast<long long>(cycle.size());
                if (!best || len < *best)
                    best = len;
            }
            return !(best && *best == 1);
        },
        max_indices);
    return best;
}

// Whether the rule has a PS with periods exactly (tau, sigma).
inline bool existence(const Rule& rule, int tau, int sigma,
                      std::uint64_t max_indices = kDefaultIndexCap) {
    if (tau < 1)
        throw std::invalid_argument("existence: need tau >= 1");
    bool found = false;
    for_each_config_cycle(
        rule, sigma,
        [&](const std::vector<std::uint32_t>& cycle) {
            if (static_cast<int>(cycle.size()) == tau) {
                const Word w = decode_word(cycle.front(), rule.n, sigma);
                found = static_cast<int>(word_period(w)) == sigma;
            }
            return !found;
        },
        max_indices);
    return found;
}

// Canonical tiles of the simple PS with periods exactly (tau, sigma); its
// size is the paper-style simple-PS count W for one rule.
inline std::set<Tile> simple_ps_tiles(const Rule& rule, int tau, int sigma,
                                      std::uint64_t max_indices = kDefaultIndexCap) {
    std::set<Tile> out;
    for_each_config_cycle(
        rule, sigma,
        [&](const std::vector<std::uint32_t>& cycle) {
            if (static_cast<int>(cycle.size()) != tau)
                return true;
            std::vector<Word> rows;
            rows.reserve(cycle.size());
            for (std::uint32_t idx : cycle)
                rows.push_back(decode_word(idx, rule.n, sigma));
            if (static_cast<int>(word_period(rows.front())) != sigma)
                return true;
            const Tile t = Tile::from_rows(rows);
            if (tile_metrics(t).lag == 0)
                out.insert(canonical_tile(t));
            return true;
        },
        max_indices);
    return out;
}

// Right-extensions of the length-tau label A: each candidate b0 chains
// through b[i+1] = f(a[i], b[i]) and survives iff the wraparound closes.
// Out-degree ranges over 0..n.
inline std::vector<Word> label_successors(const Rule& rule, const Word& a) {
    check_word(a, rule.n, "label_successors");
    const std::size_t tau = a.size();
    std::vector<Word> out;
    for (int b0 = 0; b0 < rule.n; ++b0) {
        Word b(tau);
        b[0] = static_cast<state_t>(b0);
        for (std::size_t i = 0; i + 1 < tau; ++i)
            b[i + 1] = rule.lookup(a[i], b[i]);
        if (rule.lookup(a[tau - 1], b[tau - 1]) == b0)
            out.push_back(std::move(b));
    }
    return out;
}

namespace detail {

inline std::vector<std::vector<std::uint32_t>> build_label_successors(const Rule& rule, int tau,
                                                                      std::uint64_t count) {
    std::vector<std::vector<std::uint32_t>> succs(count);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        const Word a = decode_word(idx, rule.n, tau);
        for (const Word& b : label_successors(rule, a))
            succs[idx].push_back(static_cast<std::uint32_t>(encode_word(b, rule.n)));
    }
    return succs;
}

// Enumerates closed walks of length `length` in the label digraph and offers
// each induced tile (walk labels on successive columns) to `emit`. Walks may
// revisit labels: a PS can place equal columns at different offsets, so
// restricting to simple cycles would miss some tiles. Each walk is visited
// from every phase at which its minimum label occurs; callers dedup by
// canonical tile. `emit` returns false to stop.
template <typename Emit>
bool for_each_label_walk_tile(const Rule& rule, int tau, int length,
                              const std::vector<std::vector<std::uint32_t>>& succs, Emit&& emit) {
    const auto count = static_cast<std::uint64_t>(succs.size());
    std::vector<std::uint32_t> walk;
    bool keep_going = true;

    auto dfs = [&](auto&& self, std::uint32_t start) -> void {
        if (!keep_going)
            return;
        if (static_cast<int>(walk.size()) == length) {
            for (std::uint32_t v : succs[walk.back()]) {
                if (v == start) {
                    std::vector<Word> cols;
                    cols.reserve(walk.size());
                    for (std::uint32_t idx : walk)
                        cols.push_back(decode_word(idx, rule.n, tau));
                    keep_going = emit(Tile::from_columns(cols));
                    break;
                }
            }
            return;
        }
        for (std::uint32_t v : succs[walk.back()]) {
            if (v < start)
                continue; // walks are enumerated from their minimum label
            walk.push_back(v);
            self(self, start);
            walk.pop_back();
            if (!keep_going)
                return;
        }
    };

    for (std::uint64_t start = 0; start < count && keep_going; ++start) {
        walk.assign(1, static_cast<std::uint32_t>(start));
        dfs(dfs, static_cast<std::uint32_t>(start));
    }
    return keep_going;
}

} // namespace detail

// All PS with temporal period exactly tau and spatial period exactly sigma,
// from length-sigma closed walks in the label digraph. A walk's tile keeps
// both periods minimal iff it survives the final check here.
inline std::set<Tile> ps_with_temporal_period(const Rule& rule, int tau, int sigma,
                                              std::uint64_t max_indices = kDefaultIndexCap) {
    if (sigma < 1)
        throw std::invalid_argument("ps_with_temporal_period: need sigma >= 1");
    const std::uint64_t count = detail::guarded_count(rule.n, tau, max_indices);
    const auto succs = detail::build_label_successors(rule, tau, count);
    std::set<Tile> out;
    detail::for_each_label_walk_tile(rule, tau, sigma, succs, [&](const Tile& t) {
        if (matrix_temporal_period(t) == tau && matrix_spatial_period(t) == sigma)
            out.insert(canonical_tile(t));
        return true;
    });
    return out;
}

// Y'_{tau,n}(f) with a witness: the least sigma <= sigma_max whose label
// digraph carries a closed walk of that length inducing a tile with both
// periods minimal. Searches lengths in increasing order; absent means "not
// found within the bound", not "nonexistent".
inline std::optional<CycleRecord> find_min_spatial(const Rule& rule, int tau, int sigma_max,
                                                   std::uint64_t max_indices = kDefaultIndexCap) {
    if (sigma_max < 1)
        throw std::invalid_argument("find_min_spatial: need sigma_max >= 1");
    const std::uint64_t count = detail::guarded_count(rule.n, tau, max_indices);
    const auto succs = detail::build_label_successors(rule, tau, count);
    for (int length = 1; length <= sigma_max; ++length) {
        std::optional<Tile> hit;
        detail::for_each_label_walk_tile(rule, tau, length, succs, [&](const Tile& t) {
            if (matrix_temporal_period(t) == tau && matrix_spatial_period(t) == length) {
                hit = t;
                return false;
            }
            return true;
        });
        if (hit) {
            CycleRecord rec;
            rec.kind = CycleKind::label;
            rec.period = length;
            for (int j = 0; j < hit->sigma; ++j)
                rec.words.push_back(hit->column(j));
            rec.tile = canonical_tile(*hit);
            rec.spatial_period = length;
            rec.temporal_period = tau;
            return rec;
        }
    }
    return std::nullopt;
}

inline std::optional<int> min_spatial_period(const Rule& rule, int tau, int sigma_max,
                                             std::uint64_t max_indices = kDefaultIndexCap) {
    const auto rec = find_min_spatial(rule, tau, sigma_max, max_indices);
    if (!rec)
        return std::nullopt;
    return rec->spatial_period;
}

} // namespace caps
