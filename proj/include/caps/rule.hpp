#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rng.hpp"
#include "word.hpp"

namespace caps {

// Largest supported state count. Keeps the dense n*n table at or below a few
// MB; every experiment in this project uses n <= a few hundred.
inline constexpr int kMaxStates = 4096;

// An n-state two-neighbor update table. Entry a*n + b holds f(a, b), the new
// state of a cell whose left neighbor is a and whose current state is b.
struct Rule {
    int n = 1;
    std::vector<state_t> table; // n*n entries, each < n

    Rule() : table(1, 0) {}
    Rule(int n_, std::vector<state_t> table_) : n(n_), table(std::move(table_)) {
        if (n < 1 || n > kMaxStates)
            throw std::invalid_argument("rule: state count out of range");
        if (table.size() != static_cast<std::size_t>(n) * n)
            throw std::invalid_argument("rule: table must have n*n entries");
        for (state_t v : table)
            if (v >= n)
                throw std::invalid_argument("rule: table entry out of range");
    }

    // Unchecked lookup for inner loops; states validated at the boundary.
    state_t lookup(state_t a, state_t b) const {
        assert(a < n && b < n);
        return table[static_cast<std::size_t>(a) * n + b];
    }

    state_t apply(state_t a, state_t b) const {
        if (a >= n || b >= n)
            throw std::out_of_range("rule: state out of range");
        return lookup(a, b);
    }

    bool operator==(const Rule&) const = default;
};

enum class RuleClass { uniform, left_permutative, additive };

namespace detail {

// Values listed for all pairs in reverse alphabetical order, from
// (n-1, n-1) down to (0, 0): listing position (n-1-a)*n + (n-1-b) holds f(a, b).
inline std::vector<state_t> listing_to_table(const std::vector<state_t>& listing, int n) {
    std::vector<state_t> table(listing.size());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            table[static_cast<std::size_t>(a) * n + b] =
                listing[static_cast<std::size_t>(n - 1 - a) * n + (n - 1 - b)];
    return table;
}

} // namespace detail

inline Rule parse_rule(std::string_view text, int n) {
    if (n < 1 || n > kMaxStates)
        throw std::invalid_argument("rule: state count out of range");
    const std::size_t want = static_cast<std::size_t>(n) * n;
    Word listing = parse_word(text, n);
    if (listing.size() != want)
        throw std::invalid_argument("rule: expected " + std::to_string(want) + " entries, got " +
                                    std::to_string(listing.size()));
    return Rule(n, detail::listing_to_table(listing, n));
}

inline std::string format_rule(const Rule& rule) {
    Word listing(static_cast<std::size_t>(rule.n) * rule.n);
    for (int a = 0; a < rule.n; ++a)
        for (int b = 0; b < rule.n; ++b)
            listing[static_cast<std::size_t>(rule.n - 1 - a) * rule.n + (rule.n - 1 - b)] =
                rule.lookup(static_cast<state_t>(a), static_cast<state_t>(b));
    return word_to_string(listing, rule.n);
}

inline Rule make_additive(int n, state_t alpha, state_t beta) {
    if (n < 1 || n > kMaxStates)
        throw std::invalid_argument("rule: state count out of range");
    if (alpha >= n || beta >= n)
        throw std::invalid_argument("rule: additive coefficients must be below n");
    std::vector<state_t> table(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            table[static_cast<std::size_t>(a) * n + b] =
                static_cast<state_t>((static_cast<long long>(alpha) * a + static_cast<long long>(beta) * b) % n);
    return Rule(n, std::move(table));
}

// Uniform: all n^2 entries independent uniform draws. Left-permutative: each
// column map a -> f(a, b) is an independent uniform permutation. Additive:
// alpha then beta drawn uniformly and the table materialized from them.
inline Rule sample_rule(int n, RuleClass cls, Stream& stream) {
    if (n < 1 || n > kMaxStates)
        throw std::invalid_argument("rule: state count out of range");
    Rule rule;
    rule.n = n;
    rule.table.assign(static_cast<std::size_t>(n) * n, 0);
    switch (cls) {
    case RuleClass::uniform:
        for (state_t& v : rule.table)
            v = static_cast<state_t>(bounded_uniform(stream, n));
        break;
    case RuleClass::left_permutative: {
        std::vector<state_t> column(n);
        for (int b = 0; b < n; ++b) {
            for (int a = 0; a < n; ++a)
                column[a] = static_cast<state_t>(a);
            shuffle_stream(column, stream);
            for (int a = 0; a < n; ++a)
                rule.table[static_cast<std::size_t>(a) * n + b] = column[a];
        }
        break;
    }
    case RuleClass::additive: {
        const auto alpha = static_cast<state_t>(bounded_uniform(stream, n));
        const auto beta = static_cast<state_t>(bounded_uniform(stream, n));
        rule = make_additive(n, alpha, beta);
        break;
    }
    }
    return rule;
}

inline bool is_left_permutative(const Rule& rule) {
    std::vector<char> seen(rule.n);
    for (int b = 0; b < rule.n; ++b) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int a = 0; a < rule.n; ++a)
            seen[rule.lookup(static_cast<state_t>(a), static_cast<state_t>(b))] = 1;
        if (!std::all_of(seen.begin(), seen.end(), [](char s) { return s != 0; }))
            return false;
    }
    return true;
}

// One synchronous update on a circle of w.size() sites:
// next[j] = f(w[j-1 mod sigma], w[j]).
inline Word step(const Rule& rule, const Word& w) {
    const std::size_t sigma = w.size();
    Word next(sigma);
    state_t left = w[sigma - 1];
    for (std::size_t j = 0; j < sigma; ++j) {
        next[j] = rule.lookup(left, w[j]);
        left = w[j];
    }
    return next;
}

// Trajectory xi_0 .. xi_steps of the periodic configuration `initial`.
inline std::vector<Word> evolve(const Rule& rule, const Word& initial, int steps) {
    check_word(initial, rule.n, "evolve");
    if (steps < 0)
        throw std::invalid_argument("evolve: negative step count");
    std::vector<Word> out;
    out.reserve(static_cast<std::size_t>(steps) + 1);
    out.push_back(initial);
    for (int t = 0; t < steps; ++t)
        out.push_back(step(rule, out.back()));
    return out;
}

} // namespace caps
