#pragma once

#include <cassert>
#include <charconv>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace caps {

using state_t = std::uint16_t;

// A finite cyclic sequence over Z_n: a spatial configuration of period
// sigma, or a temporal label of length tau.
using Word = std::vector<state_t>;

inline void check_word(const Word& w, int n, const char* what) {
    if (w.empty())
        throw std::invalid_argument(std::string(what) + ": empty word");
    for (state_t v : w)
        if (v >= n)
            throw std::out_of_range(std::string(what) + ": state out of range");
}

// pi_i(w)[j] = w[(j + i) mod k].
inline Word rotate(const Word& w, std::size_t i) {
    const std::size_t k = w.size();
    assert(k > 0);
    i %= k;
    Word out(k);
    for (std::size_t j = 0; j < k; ++j)
        out[j] = w[(j + i) % k];
    return out;
}

// Smallest divisor d of k such that w repeats with period d. Divisor
// checking is plenty at the word lengths used here.
inline std::size_t word_period(const Word& w) {
    const std::size_t k = w.size();
    assert(k > 0);
    for (std::size_t d = 1; d <= k; ++d) {
        if (k % d != 0)
            continue;
        bool ok = true;
        for (std::size_t j = 0; j + d < k && ok; ++j)
            ok = w[j] == w[j + d];
        if (ok)
            return d;
    }
    return k;
}

inline bool is_aperiodic(const Word& w) {
    return word_period(w) == w.size();
}

// Lexicographically least rotation; the representative of the circular-shift
// equivalence class.
inline Word canonical_rotation(const Word& w) {
    const std::size_t k = w.size();
    Word best = w;
    for (std::size_t i = 1; i < k; ++i) {
        Word cand = rotate(w, i);
        if (cand < best)
            best = cand;
    }
    return best;
}

// Order of the circular shift by i on length-k words: k / gcd(i, k).
inline std::size_t shift_order(std::size_t i, std::size_t k) {
    if (k == 0 || i >= k)
        throw std::invalid_argument("shift_order: need 0 <= i < k");
    return k / std::gcd(i, k);
}

// Dense base-n packing of words; leftmost symbol most significant.
inline std::uint64_t encode_word(const Word& w, int n) {
    std::uint64_t idx = 0;
    for (state_t v : w) {
        assert(v < n);
        idx = idx * static_cast<std::uint64_t>(n) + v;
    }
    return idx;
}

inline Word decode_word(std::uint64_t idx, int n, int length) {
    Word w(length);
    for (int j = length - 1; j >= 0; --j) {
        w[j] = static_cast<state_t>(idx % n);
        idx /= n;
    }
    return w;
}

// n^length, guarded against exceeding the 63-bit index range.
inline std::uint64_t word_space_size(int n, int length) {
    if (n < 1 || length < 1)
        throw std::invalid_argument("word_space_size: need n >= 1 and length >= 1");
    std::uint64_t size = 1;
    const std::uint64_t limit = (1ULL << 63) - 1;
    for (int i = 0; i < length; ++i) {
        if (size > limit / static_cast<std::uint64_t>(n))
            throw std::overflow_error("word_space_size: n^length exceeds the 63-bit index range");
        size *= static_cast<std::uint64_t>(n);
    }
    return size;
}

inline std::string word_to_string(const Word& w, int n) {
    std::string out;
    for (std::size_t j = 0; j < w.size(); ++j) {
        if (n <= 10) {
            out.push_back(static_cast<char>('0' + w[j]));
        } else {
            if (j > 0)
                out.push_back(',');
            out += std::to_string(w[j]);
        }
    }
    return out;
}

namespace detail {

inline state_t parse_state(std::string_view field, int n) {
    const std::size_t lo = field.find_first_not_of(" \t");
    if (lo == std::string_view::npos)
        throw std::invalid_argument("parse: empty entry in list");
    const std::size_t hi = field.find_last_not_of(" \t");
    field = field.substr(lo, hi - lo + 1);
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw std::invalid_argument("parse: malformed entry '" + std::string(field) + "'");
    if (value >= static_cast<unsigned>(n))
        throw std::invalid_argument("parse: state " + std::to_string(value) + " not below n");
    return static_cast<state_t>(value);
}

} // namespace detail

// Same text encodings as rules: base-n digits for n <= 10, otherwise a
// comma-separated decimal list.
inline Word parse_word(std::string_view text, int n) {
    Word w;
    if (n <= 10) {
        for (char c : text) {
            if (c < '0' || c > '9' || c - '0' >= n)
                throw std::invalid_argument(std::string("parse: bad digit '") + c + "'");
            w.push_back(static_cast<state_t>(c - '0'));
        }
    } else {
        std::size_t pos = 0;
        while (true) {
            const std::size_t comma = text.find(',', pos);
            w.push_back(detail::parse_state(text.substr(pos, comma - pos), n));
            if (comma == std::string_view::npos)
                break;
            pos = comma + 1;
        }
    }
    if (w.empty())
        throw std::invalid_argument("parse: empty word");
    return w;
}

} // namespace caps
