#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tile.hpp"
#include "word.hpp"

namespace caps {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Finite sets of candidate temporal and spatial periods.
struct PeriodSet {
    std::set<int> taus;
    std::set<int> sigmas;
};

inline std::string rational_to_string(const Rational& q) {
    const BigInt num = numerator(q);
    const BigInt den = denominator(q);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

inline double rational_to_double(const Rational& q) {
    return q.convert_to<double>();
}

inline long long euler_phi(long long d) {
    if (d < 1)
        throw std::invalid_argument("euler_phi: need d >= 1");
    long long result = d;
    long long m = d;
    for (long long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0)
                m /= p;
        }
    }
    if (m > 1)
        result -= result / m;
    return result;
}

inline BigInt factorial(long long k) {
    BigInt out = 1;
    for (long long i = 2; i <= k; ++i)
        out *= i;
    return out;
}

// Multiplicative form; exact at every intermediate step.
inline BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    BigInt out = 1;
    for (long long i = 1; i <= k; ++i) {
        out *= n - k + i;
        out /= i;
    }
    return out;
}

// The limiting Poisson mean of the simple-PS count:
// (1 / tau*sigma) * sum over d | gcd(tau, sigma) of phi(d)*d.
inline Rational lambda(int tau, int sigma) {
    if (tau < 1 || sigma < 1)
        throw std::invalid_argument("lambda: need tau >= 1 and sigma >= 1");
    const long long g = std::gcd(static_cast<long long>(tau), static_cast<long long>(sigma));
    long long sum = 0;
    for (long long d = 1; d <= g; ++d)
        if (g % d == 0)
            sum += euler_phi(d) * d;
    return Rational(sum, static_cast<long long>(tau) * sigma);
}

inline Rational lambda_set(const PeriodSet& ps) {
    if (ps.taus.empty() || ps.sigmas.empty())
        throw std::invalid_argument("lambda_set: period sets must be nonempty");
    Rational total = 0;
    for (int tau : ps.taus)
        for (int sigma : ps.sigmas)
            total += lambda(tau, sigma);
    return total;
}

inline double limit_existence_prob(int tau, int sigma) {
    return 1.0 - std::exp(-rational_to_double(lambda(tau, sigma)));
}

inline double limit_existence_prob_set(const PeriodSet& ps) {
    return 1.0 - std::exp(-rational_to_double(lambda_set(ps)));
}

// Limiting P(Y_sigma <= y) = 1 - exp(-sum_{tau=1..y} lambda_{tau,sigma}).
inline double limit_cdf_Y(int sigma, int y) {
    if (sigma < 1 || y < 1)
        throw std::invalid_argument("limit_cdf_Y: need sigma >= 1 and y >= 1");
    Rational sum = 0;
    for (int tau = 1; tau <= y; ++tau)
        sum += lambda(tau, sigma);
    return 1.0 - std::exp(-rational_to_double(sum));
}

// Limiting P(Y'_tau <= y); lambda is symmetric in its arguments, so this is
// the mirror image of limit_cdf_Y.
inline double limit_cdf_Y_prime(int tau, int y) {
    return limit_cdf_Y(tau, y);
}

// The closed piecewise table for sigma = 1..4. Must agree with lambda() on
// every input; the acceptance suite checks exact rational equality.
inline Rational lambda_piecewise(int sigma, int tau) {
    if (tau < 1)
        throw std::invalid_argument("lambda_piecewise: need tau >= 1");
    switch (sigma) {
    case 1:
        return Rational(1, tau);
    case 2:
        return tau % 2 == 0 ? Rational(3, 2LL * tau) : Rational(1, 2LL * tau);
    case 3:
        return tau % 3 == 0 ? Rational(7, 3LL * tau) : Rational(1, 3LL * tau);
    case 4:
        switch (tau % 4) {
        case 0:
            return Rational(11, 4LL * tau);
        case 2:
            return Rational(3, 4LL * tau);
        default:
            return Rational(1, 4LL * tau);
        }
    default:
        throw std::domain_error("lambda_piecewise: sigma must be in 1..4");
    }
}

// Realizable state counts of simple tiles: {tau*sigma/d : d | gcd(tau,sigma)}
// capped at the alphabet size.
inline std::set<long long> simple_sizes(int tau, int sigma, int n) {
    if (tau < 1 || sigma < 1 || n < 1)
        throw std::invalid_argument("simple_sizes: need positive arguments");
    const long long g = std::gcd(static_cast<long long>(tau), static_cast<long long>(sigma));
    const long long area = static_cast<long long>(tau) * sigma;
    std::set<long long> out;
    for (long long d = 1; d <= g; ++d)
        if (g % d == 0 && area / d <= n)
            out.insert(area / d);
    return out;
}

// Number of simple PS tiles with s states: phi(d) * C(n, s) * (s-1)!, with
// d = tau*sigma/s.
inline BigInt simple_tile_count(int n, int tau, int sigma, long long s) {
    if (!simple_sizes(tau, sigma, n).count(s))
        throw std::invalid_argument("simple_tile_count: s is not a realizable simple size");
    const long long d = static_cast<long long>(tau) * sigma / s;
    return BigInt(euler_phi(d)) * binomial(n, s) * factorial(s - 1);
}

// Finite-n Poisson mean of the simple-PS count:
// sum over realizable s of phi(d) * C(n, s) * (s-1)! / n^s. Converges to
// lambda(tau, sigma) as n grows.
inline Rational finite_n_mean(int n, int tau, int sigma) {
    Rational total = 0;
    for (long long s : simple_sizes(tau, sigma, n)) {
        BigInt den = 1;
        for (long long i = 0; i < s; ++i)
            den *= n;
        total += Rational(simple_tile_count(n, tau, sigma, s), den);
    }
    return total;
}

// Every distinct valid tile (canonical form) for the given dimensions, by
// exhaustive matrix scan. Deliberately independent of both the counting
// formulas and the digraph machinery it cross-checks.
inline std::vector<Tile> enumerate_valid_tiles(int n, int tau, int sigma) {
    if (n < 1 || tau < 1 || sigma < 1)
        throw std::invalid_argument("enumerate_valid_tiles: need positive arguments");
    const long long area = static_cast<long long>(tau) * sigma;
    double scan = 1;
    for (long long i = 0; i < area; ++i)
        scan *= n;
    if (scan > 1e8)
        throw std::length_error("enumerate_valid_tiles: n^(tau*sigma) above the oracle guard");

    std::set<std::vector<state_t>> seen;
    std::vector<Tile> out;
    std::vector<state_t> cells(area, 0);
    while (true) {
        const Tile t(tau, sigma, cells);
        if (is_valid_tile(t)) {
            Tile canon = canonical_tile(t);
            if (seen.insert(canon.cells).second)
                out.push_back(std::move(canon));
        }
        long long j = area - 1;
        for (; j >= 0; --j) {
            if (++cells[j] < n)
                break;
            cells[j] = 0;
        }
        if (j < 0)
            break;
    }
    return out;
}

// Census bucket key: (state count, lag).
using TileCensus = std::map<std::pair<int, int>, long long>;

inline TileCensus brute_force_tile_census(int n, int tau, int sigma) {
    TileCensus census;
    for (const Tile& t : enumerate_valid_tiles(n, tau, sigma)) {
        const TileMetrics m = tile_metrics(t);
        ++census[{m.states, m.lag}];
    }
    return census;
}

} // namespace caps
