#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "word.hpp"

namespace caps {

// A tau x sigma matrix over Z_n on the discrete torus; the fundamental
// rectangle of a jointly periodic space-time configuration. Stored with an
// arbitrary anchor; every predicate below is anchor-invariant.
struct Tile {
    int tau = 0;
    int sigma = 0;
    std::vector<state_t> cells; // row-major, tau*sigma entries

    Tile() = default;
    Tile(int tau_, int sigma_, std::vector<state_t> cells_)
        : tau(tau_), sigma(sigma_), cells(std::move(cells_)) {
        if (tau < 1 || sigma < 1)
            throw std::invalid_argument("tile: need tau >= 1 and sigma >= 1");
        if (cells.size() != static_cast<std::size_t>(tau) * sigma)
            throw std::invalid_argument("tile: cell count must be tau*sigma");
    }

    static Tile from_rows(const std::vector<Word>& rows) {
        if (rows.empty() || rows.front().empty())
            throw std::invalid_argument("tile: no rows");
        std::vector<state_t> cells;
        cells.reserve(rows.size() * rows.front().size());
        for (const Word& r : rows) {
            if (r.size() != rows.front().size())
                throw std::invalid_argument("tile: ragged rows");
            cells.insert(cells.end(), r.begin(), r.end());
        }
        return Tile(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()),
                    std::move(cells));
    }

    // Columns given as length-tau labels, left to right.
    static Tile from_columns(const std::vector<Word>& cols) {
        if (cols.empty() || cols.front().empty())
            throw std::invalid_argument("tile: no columns");
        const int tau = static_cast<int>(cols.front().size());
        const int sigma = static_cast<int>(cols.size());
        std::vector<state_t> cells(static_cast<std::size_t>(tau) * sigma);
        for (int j = 0; j < sigma; ++j) {
            if (static_cast<int>(cols[j].size()) != tau)
                throw std::invalid_argument("tile: ragged columns");
            for (int i = 0; i < tau; ++i)
                cells[static_cast<std::size_t>(i) * sigma + j] = cols[j][i];
        }
        return Tile(tau, sigma, std::move(cells));
    }

    // Subscripts interpreted modulo tau and sigma, as on the torus.
    state_t at(int i, int j) const {
        i %= tau;
        if (i < 0)
            i += tau;
        j %= sigma;
        if (j < 0)
            j += sigma;
        return cells[static_cast<std::size_t>(i) * sigma + j];
    }

    Word row(int i) const {
        Word out(sigma);
        for (int j = 0; j < sigma; ++j)
            out[j] = at(i, j);
        return out;
    }

    Word column(int j) const {
        Word out(tau);
        for (int i = 0; i < tau; ++i)
            out[i] = at(i, j);
        return out;
    }

    std::vector<Word> rows() const {
        std::vector<Word> out;
        out.reserve(tau);
        for (int i = 0; i < tau; ++i)
            out.push_back(row(i));
        return out;
    }

    auto operator<=>(const Tile&) const = default;
};

struct TileMetrics {
    int states = 0;      // s(T)
    int assignments = 0; // p(T)
    int lag = 0;         // p(T) - s(T)
};

// s = distinct states, p = distinct horizontal wraparound pairs (the rule
// values the tile pins down), lag = p - s.
inline TileMetrics tile_metrics(const Tile& t) {
    std::set<state_t> states;
    std::set<std::pair<state_t, state_t>> pairs;
    for (int i = 0; i < t.tau; ++i) {
        for (int j = 0; j < t.sigma; ++j) {
            states.insert(t.at(i, j));
            pairs.insert({t.at(i, j), t.at(i, j + 1)});
        }
    }
    TileMetrics m;
    m.states = static_cast<int>(states.size());
    m.assignments = static_cast<int>(pairs.size());
    m.lag = m.assignments - m.states;
    return m;
}

// Uniqueness of assignment: equal horizontal pairs force equal states below
// their right ends, everywhere on the torus.
inline bool is_consistent(const Tile& t) {
    std::map<std::pair<state_t, state_t>, state_t> pinned;
    for (int i = 0; i < t.tau; ++i) {
        for (int j = 0; j < t.sigma; ++j) {
            const std::pair<state_t, state_t> key{t.at(i, j), t.at(i, j + 1)};
            const state_t below = t.at(i + 1, j + 1);
            const auto [it, inserted] = pinned.insert({key, below});
            if (!inserted && it->second != below)
                return false;
        }
    }
    return true;
}

// Minimal temporal period of the matrix: smallest divisor d of tau with
// row i equal to row i+d for all i.
inline int matrix_temporal_period(const Tile& t) {
    for (int d = 1; d <= t.tau; ++d) {
        if (t.tau % d != 0)
            continue;
        bool ok = true;
        for (int i = 0; i + d < t.tau && ok; ++i)
            for (int j = 0; j < t.sigma && ok; ++j)
                ok = t.at(i, j) == t.at(i + d, j);
        if (ok)
            return d;
    }
    return t.tau;
}

inline int matrix_spatial_period(const Tile& t) {
    for (int d = 1; d <= t.sigma; ++d) {
        if (t.sigma % d != 0)
            continue;
        bool ok = true;
        for (int i = 0; i < t.tau && ok; ++i)
            for (int j = 0; j + d < t.sigma && ok; ++j)
                ok = t.at(i, j) == t.at(i, j + d);
        if (ok)
            return d;
    }
    return t.sigma;
}

// True iff the matrix is the tile of a PS with periods exactly (tau, sigma):
// assignments are consistent, every row is aperiodic, and the cyclic sequence
// of rows has no proper divisor period.
inline bool is_valid_tile(const Tile& t) {
    for (int i = 0; i < t.tau; ++i)
        if (!is_aperiodic(t.row(i)))
            return false;
    if (matrix_temporal_period(t) != t.tau)
        return false;
    return is_consistent(t);
}

namespace detail {

inline std::vector<state_t> rotated_cells(const Tile& t, int row_shift, int col_shift) {
    std::vector<state_t> out(t.cells.size());
    for (int i = 0; i < t.tau; ++i)
        for (int j = 0; j < t.sigma; ++j)
            out[static_cast<std::size_t>(i) * t.sigma + j] = t.at(i + row_shift, j + col_shift);
    return out;
}

} // namespace detail

// Lexicographically least matrix among all tau*sigma torus rotations. Two
// tiles describe the same PS iff their canonical forms are equal.
inline Tile canonical_tile(const Tile& t) {
    std::vector<state_t> best = t.cells;
    for (int r = 0; r < t.tau; ++r) {
        for (int c = 0; c < t.sigma; ++c) {
            if (r == 0 && c == 0)
                continue;
            // Element-wise compare with early exit; most candidates diverge
            // within a few cells.
            bool better = false, worse = false;
            for (int i = 0; i < t.tau && !better && !worse; ++i) {
                for (int j = 0; j < t.sigma; ++j) {
                    const state_t v = t.at(i + r, j + c);
                    const state_t b = best[static_cast<std::size_t>(i) * t.sigma + j];
                    if (v < b) {
                        better = true;
                        break;
                    }
                    if (v > b) {
                        worse = true;
                        break;
                    }
                }
            }
            if (better)
                best = detail::rotated_cells(t, r, c);
        }
    }
    return Tile(t.tau, t.sigma, std::move(best));
}

inline bool is_simple(const Tile& t) {
    return tile_metrics(t).lag == 0;
}

namespace detail {

inline std::set<state_t> state_set(const Tile& t) {
    return std::set<state_t>(t.cells.begin(), t.cells.end());
}

inline std::set<std::pair<state_t, state_t>> pair_set(const Tile& t) {
    std::set<std::pair<state_t, state_t>> pairs;
    for (int i = 0; i < t.tau; ++i)
        for (int j = 0; j < t.sigma; ++j)
            pairs.insert({t.at(i, j), t.at(i, j + 1)});
    return pairs;
}

} // namespace detail

// No shared horizontal wraparound pair: the two tiles pin disjoint sets of
// rule values, so their occurrences are independent events.
inline bool orthogonal(const Tile& t1, const Tile& t2) {
    const auto p1 = detail::pair_set(t1);
    for (const auto& p : detail::pair_set(t2))
        if (p1.count(p))
            return false;
    return true;
}

inline bool disjoint(const Tile& t1, const Tile& t2) {
    const auto s1 = detail::state_set(t1);
    for (state_t v : detail::state_set(t2))
        if (s1.count(v))
            return false;
    return true;
}

// Order of the circular shift carrying row 0 to the first later row that is a
// rotation of it; 1 when no other row is. Only well-behaved on simple tiles,
// where it divides gcd(tau, sigma) and matches the column analogue.
inline int row_shift_order(const Tile& t) {
    if (!is_simple(t))
        throw std::invalid_argument("row_shift_order: tile is not simple");
    const Word row0 = t.row(0);
    for (int k = 1; k < t.tau; ++k) {
        const Word rk = t.row(k);
        for (std::size_t m = 0; m < row0.size(); ++m) {
            if (rk == rotate(row0, m))
                return static_cast<int>(shift_order(m, row0.size()));
        }
    }
    return 1;
}

inline int column_shift_order(const Tile& t) {
    if (!is_simple(t))
        throw std::invalid_argument("column_shift_order: tile is not simple");
    const Word col0 = t.column(0);
    for (int k = 1; k < t.sigma; ++k) {
        const Word ck = t.column(k);
        for (std::size_t m = 0; m < col0.size(); ++m) {
            if (ck == rotate(col0, m))
                return static_cast<int>(shift_order(m, col0.size()));
        }
    }
    return 1;
}

} // namespace caps
