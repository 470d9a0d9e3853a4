#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "burstkit/errors.hpp"

namespace burstkit {

/// Scores are extended reals: +infinity marks an impossible outcome.
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class Family { Exponential, Geometric };

enum class DelayKind { Real, Integer };

std::string_view to_string(Family family);
Family parse_family(std::string_view name);

/// Summary statistics of a delay sequence.
///
/// The geometric mean (and with it psi = n log g) is only defined when every
/// delay is strictly positive.
struct SequenceStats {
    double mean = 0.0;
    std::optional<double> geo_mean;
    double max = 0.0;
    double min = 0.0;
    std::optional<double> psi;
};

SequenceStats sequence_stats(std::span<const double> values);

/// Ordered nonnegative inter-event delays s_1..s_n with cached statistics.
class DelaySequence {
public:
    explicit DelaySequence(std::vector<double> values, DelayKind kind = DelayKind::Real);

    /// Delays t_i - t_{i-1} of n+1 non-decreasing event times.
    static DelaySequence from_timestamps(std::span<const double> times,
                                         DelayKind kind = DelayKind::Real);

    std::span<const double> values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    DelayKind kind() const { return kind_; }
    const SequenceStats& stats() const { return stats_; }

    bool all_positive() const { return stats_.min > 0.0; }
    bool all_integral() const;

private:
    std::vector<double> values_;
    DelayKind kind_;
    SequenceStats stats_;
};

inline SequenceStats sequence_stats(const DelaySequence& delays) { return delays.stats(); }

/// Burst levels l_1..l_n in [0, k]. The level before the first delay is 0.
struct LevelSequence {
    std::vector<int> levels;
    int k = 0;

    std::size_t size() const { return levels.size(); }
    int operator[](std::size_t i) const { return levels[i]; }
    bool operator==(const LevelSequence&) const = default;
};

/// Model family plus the change rate alpha, base rate beta, penalty weight
/// gamma and level cap k.
///
/// Exponential: alpha >= 1 (alpha == 1 is the degenerate flat model), beta > 0.
/// Geometric: 0 <= alpha < 1, 0 <= beta < 1, so every level rate is below one.
class BurstParams {
public:
    BurstParams(Family family, double alpha, double beta, double gamma, int k);

    static BurstParams exponential(double alpha, double beta, double gamma, int k) {
        return BurstParams(Family::Exponential, alpha, beta, gamma, k);
    }
    static BurstParams geometric(double alpha, double beta, double gamma, int k) {
        return BurstParams(Family::Geometric, alpha, beta, gamma, k);
    }

    Family family() const { return family_; }
    double alpha() const { return alpha_; }
    double beta() const { return beta_; }
    double gamma() const { return gamma_; }
    int k() const { return k_; }

    /// beta * alpha^level, with alpha^0 == 1 even for alpha == 0.
    double rate(int level) const;

private:
    Family family_;
    double alpha_;
    double beta_;
    double gamma_;
    int k_;
};

struct Diagnostics {
    std::size_t beta_candidates = 0;   // size of the beta schedule(s) scanned
    std::size_t alpha_candidates = 0;  // outer alpha candidates (joint solvers)
    std::size_t skipped = 0;           // beta candidates pruned without a test
    std::size_t tied_cells = 0;        // exact solver: optimal (j, a, b) cells
};

struct Solution {
    LevelSequence levels;
    double alpha = 0.0;
    double beta = 0.0;
    double score = kInfinity;
    std::size_t viterbi_calls = 0;
    Diagnostics diagnostics;
};

double level_rate(double beta, double alpha, int level);

/// -log of the exponential density: s * lambda - log(lambda).
double neg_loglik_exp(double s, double lambda);

/// -log of the geometric mass (1 - lambda) lambda^s, with 0 log 0 = 0.
double neg_loglik_geo(double s, double lambda);

/// Cost of moving from level `from` to level `to`: max(to - from, 0) gamma log n.
double penalty(int from, int to, double gamma, std::size_t n);

/// Likelihood terms plus transition penalties, accumulated left to right.
double score_total(const LevelSequence& levels, const DelaySequence& delays,
                   const BurstParams& params);

namespace detail {

// Per-term kernels shared by score_total and the dynamic programs so that
// identical (s, level) pairs produce bit-identical terms everywhere.
inline double exp_term(double s, double rate, double log_rate) { return s * rate - log_rate; }

inline double geo_term(double s, double log1m_rate, double log_rate) {
    return s == 0.0 ? -log1m_rate : -log1m_rate - s * log_rate;
}

inline double penalty_unit(double gamma, std::size_t n) {
    return gamma * std::log(static_cast<double>(n));
}

/// Cached logs of every level rate of one parameter set.
class LevelTerms {
public:
    explicit LevelTerms(const BurstParams& params);

    double operator()(double s, int level) const {
        const auto j = static_cast<std::size_t>(level);
        return family_ == Family::Exponential ? exp_term(s, rate_[j], log_rate_[j])
                                              : geo_term(s, log1m_rate_[j], log_rate_[j]);
    }

private:
    Family family_;
    std::vector<double> rate_;
    std::vector<double> log_rate_;
    std::vector<double> log1m_rate_;
};

/// True when `a` beats `b` by more than round-off; exact ties and near ties
/// (relative 1e-12) compare as not-less so callers can break them by order.
bool definitely_less(double a, double b);

}  // namespace detail

void validate_levels(const LevelSequence& levels, std::size_t n, int k);

}  // namespace burstkit
